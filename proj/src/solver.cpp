/*
   Copyright 2026 The thueff authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "thueff/solver.hpp"

#include <algorithm>

namespace thueff {

ThueInstance::ThueInstance(Poly lambda_in, GaussRat xi_in)
    : lambda(std::move(lambda_in)), xi(std::move(xi_in)) {
    if (lambda.degree() < 1) {
        throw DomainError("NonconstantLambda", "lambda must be a nonconstant polynomial");
    }
    if (xi.is_zero()) {
        throw DomainError("ZeroInput", "xi must be a nonzero constant");
    }
}

std::string_view shape_name(SolutionShape s) {
    switch (s) {
        case SolutionShape::kZetaZero: return "(zeta, 0)";
        case SolutionShape::kZeroZeta: return "(0, zeta)";
        case SolutionShape::kZetaZeta: return "(zeta, zeta)";
        case SolutionShape::kNegZetaZeta: return "(-zeta, zeta)";
        case SolutionShape::kZetaLambdaZeta: return "(zeta*lambda, zeta)";
        case SolutionShape::kNegZetaZetaLambda: return "(-zeta, zeta*lambda)";
    }
    throw InternalError("InternalInconsistency", "unknown solution shape");
}

std::pair<Poly, Poly> instantiate_shape(SolutionShape s, const GaussRat& zeta,
                                        const Poly& lambda) {
    const Poly z(zeta);
    switch (s) {
        case SolutionShape::kZetaZero: return {z, Poly()};
        case SolutionShape::kZeroZeta: return {Poly(), z};
        case SolutionShape::kZetaZeta: return {z, z};
        case SolutionShape::kNegZetaZeta: return {-z, z};
        case SolutionShape::kZetaLambdaZeta: return {lambda * zeta, z};
        case SolutionShape::kNegZetaZetaLambda: return {-z, lambda * zeta};
    }
    throw InternalError("InternalInconsistency", "unknown solution shape");
}

Poly form_eval(const ThueInstance& inst, const Poly& x, const Poly& y) {
    const Poly& l = inst.lambda;
    Poly x2 = x * x;
    Poly y2 = y * y;
    Poly xy = x * y;
    Poly expanded = x2 * x2 - l * (x2 * xy) - x2 * y2 + l * (xy * y2) + y2 * y2;
    Poly factored = x * (x - y) * (x + y) * (x - l * y) + y2 * y2;
    if (!(expanded == factored)) {
        throw InternalError("InternalInconsistency",
                            "expanded and factored forms of F disagree");
    }
    return expanded;
}

bool form_decomposition_check(const ThueInstance& inst, const Poly& x, const Poly& y) {
    QuadExtRing ring(inst.lambda);
    QuadExtElem theta{x * x - y * y, -(x * y)};
    QuadExtElem product = ring.mul(theta, ring.conj(theta));
    return product.b.is_zero() && product.a == form_eval(inst, x, y);
}

SolutionSet solution_set(const ThueInstance& inst) {
    SolutionSet out;
    std::vector<GaussRat> roots = fourth_roots(inst.xi);
    out.zeta_in_field = !roots.empty();
    const Poly target(inst.xi);
    for (const GaussRat& zeta : roots) {
        for (SolutionShape s : kAllShapes) {
            auto [x, y] = instantiate_shape(s, zeta, inst.lambda);
            if (!(form_eval(inst, x, y) == target)) {
                throw InternalError("VerificationFailure",
                                    "constructed solution failed re-evaluation");
            }
            out.entries.push_back({{s, zeta}, std::move(x), std::move(y)});
        }
    }
    return out;
}

namespace {

bool is_const(const Poly& p) { return p.is_constant(); }

std::optional<SolutionFamily> match_family(const ThueInstance& inst, const Poly& x,
                                           const Poly& y) {
    const Poly& l = inst.lambda;
    auto is_root = [&inst](const GaussRat& z) {
        return !z.is_zero() && z.pow(4) == inst.xi;
    };
    const GaussRat cx = x.coeff(0);
    const GaussRat cy = y.coeff(0);
    if (y.is_zero() && is_const(x) && is_root(cx)) {
        return SolutionFamily{SolutionShape::kZetaZero, cx};
    }
    if (x.is_zero() && is_const(y) && is_root(cy)) {
        return SolutionFamily{SolutionShape::kZeroZeta, cy};
    }
    if (is_const(x) && x == y && is_root(cx)) {
        return SolutionFamily{SolutionShape::kZetaZeta, cx};
    }
    if (is_const(y) && x == -y && is_root(cy)) {
        return SolutionFamily{SolutionShape::kNegZetaZeta, cy};
    }
    if (is_const(y) && is_root(cy) && x == l * cy) {
        return SolutionFamily{SolutionShape::kZetaLambdaZeta, cy};
    }
    if (is_const(x) && is_root(-cx) && y == l * (-cx)) {
        return SolutionFamily{SolutionShape::kNegZetaZetaLambda, -cx};
    }
    return std::nullopt;
}

} // namespace

Classification classify_solution(const ThueInstance& inst, const Poly& x, const Poly& y) {
    Poly value = form_eval(inst, x, y);
    const Poly target(inst.xi);
    if (!(value == target)) {
        Classification out;
        out.kind = Classification::Kind::kNotASolution;
        out.residual = value - target;
        return out;
    }
    std::optional<SolutionFamily> family = match_family(inst, x, y);
    if (!family) {
        // A true solution outside every family contradicts completeness.
        Classification out;
        out.kind = Classification::Kind::kTheoremViolation;
        return out;
    }
    QuadExtRing ring(inst.lambda);
    QuadExtElem theta{x * x - y * y, -(x * y)};
    UnitDecomposition dec = ring.unit_decompose(theta);
    Classification out;
    out.kind = Classification::Kind::kSolution;
    out.family = *family;
    out.certificate = SolutionCertificate{std::move(theta), dec.c, dec.n};
    return out;
}

std::vector<std::pair<Poly, Poly>> brute_search(const ThueInstance& inst, int max_deg,
                                                std::vector<GaussRat> coeff_set,
                                                long long budget) {
    if (max_deg < 0) throw DomainError("InvalidArgument", "max_deg must be nonnegative");
    if (budget <= 0) throw DomainError("InvalidArgument", "budget must be positive");
    std::sort(coeff_set.begin(), coeff_set.end());
    coeff_set.erase(std::unique(coeff_set.begin(), coeff_set.end()), coeff_set.end());
    if (coeff_set.empty()) return {};

    const std::size_t width = static_cast<std::size_t>(max_deg) + 1;
    mpz_class pairs;
    mpz_ui_pow_ui(pairs.get_mpz_t(), static_cast<unsigned long>(coeff_set.size()),
                  2 * static_cast<unsigned long>(width));
    mpz_class budget_z(std::to_string(budget));
    if (cmp(pairs, budget_z) > 0) {
        throw DomainError("SearchSpaceTooLarge",
                          "candidate pairs " + pairs.get_str() + " exceed budget " +
                              std::to_string(budget));
    }

    // Enumerate every candidate polynomial once, lexicographically in its
    // coefficient sequence (constant term most significant).
    std::vector<Poly> candidates;
    {
        std::vector<std::size_t> idx(width, 0);
        bool more = true;
        while (more) {
            std::vector<GaussRat> coeffs;
            coeffs.reserve(width);
            for (std::size_t k = 0; k < width; ++k) coeffs.push_back(coeff_set[idx[k]]);
            candidates.push_back(Poly(std::move(coeffs)));
            more = false;
            for (std::size_t pos = width; pos-- > 0;) {
                if (++idx[pos] < coeff_set.size()) {
                    more = true;
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    // Exact prefilter: F(x, y) - xi has degree <= 4*max_deg + deg(lambda), so
    // it vanishes identically iff it vanishes at that many + 1 sample points.
    const int n_samples = 4 * max_deg + inst.lambda.degree() + 1;
    std::vector<GaussRat> samples;
    samples.reserve(static_cast<std::size_t>(n_samples));
    for (int j = 0; j < n_samples; ++j) samples.push_back(GaussRat(j));

    std::vector<GaussRat> lambda_at(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j) lambda_at[j] = inst.lambda.eval(samples[j]);

    struct Evals {
        std::vector<GaussRat> value;   // candidate(t_j)
        std::vector<GaussRat> fourth;  // candidate(t_j)^4
        std::vector<GaussRat> scaled;  // lambda(t_j) * candidate(t_j)
    };
    std::vector<Evals> evals(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        Evals& e = evals[c];
        e.value.resize(samples.size());
        e.fourth.resize(samples.size());
        e.scaled.resize(samples.size());
        for (std::size_t j = 0; j < samples.size(); ++j) {
            GaussRat v = candidates[c].eval(samples[j]);
            GaussRat v2 = v * v;
            e.value[j] = v;
            e.fourth[j] = v2 * v2;
            e.scaled[j] = lambda_at[j] * v;
        }
    }

    std::vector<std::pair<Poly, Poly>> found;
    const Poly target(inst.xi);
    for (std::size_t ix = 0; ix < candidates.size(); ++ix) {
        for (std::size_t iy = 0; iy < candidates.size(); ++iy) {
            bool ok = true;
            for (std::size_t j = 0; j < samples.size(); ++j) {
                const GaussRat& xv = evals[ix].value[j];
                const GaussRat& yv = evals[iy].value[j];
                GaussRat v = xv * (xv - yv) * (xv + yv) * (xv - evals[iy].scaled[j]) +
                             evals[iy].fourth[j];
                if (!(v == inst.xi)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            // Survivors get the full symbolic verification.
            if (form_eval(inst, candidates[ix], candidates[iy]) == target) {
                found.emplace_back(candidates[ix], candidates[iy]);
            } else {
                throw InternalError("InternalInconsistency",
                                    "sample prefilter accepted a non-solution");
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const std::pair<Poly, Poly>& p, const std::pair<Poly, Poly>& q) {
                  if (p.first != q.first) return poly_less(p.first, q.first);
                  return poly_less(p.second, q.second);
              });
    return found;
}

} // namespace thueff
