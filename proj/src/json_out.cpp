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

#include "thueff/json_out.hpp"

namespace thueff {

namespace {

constexpr const char* kVar = "T";

OrderedJson certificate_json(const SolutionCertificate& cert) {
    OrderedJson j;
    j["theta_a"] = cert.theta.a.str(kVar);
    j["theta_b"] = cert.theta.b.str(kVar);
    j["c"] = cert.c.str();
    j["m"] = cert.m;
    return j;
}

} // namespace

OrderedJson solve_result_json(const ThueInstance& inst, const SolutionSet& set) {
    OrderedJson j;
    j["lambda"] = inst.lambda.str(kVar);
    j["xi"] = inst.xi.str();
    j["complete_over_field"] = set.zeta_in_field;
    OrderedJson solutions = OrderedJson::array();
    for (const SolvedPair& entry : set.entries) {
        // Re-derive the certificate through the classifier so every emitted
        // solution has passed the full verification path.
        Classification c = classify_solution(inst, entry.x, entry.y);
        if (c.kind != Classification::Kind::kSolution || !c.family || !c.certificate ||
            c.family->shape != entry.family.shape || !(c.family->zeta == entry.family.zeta)) {
            throw InternalError("VerificationFailure",
                                "solution classification does not match its construction");
        }
        OrderedJson s;
        s["x"] = entry.x.str(kVar);
        s["y"] = entry.y.str(kVar);
        s["shape"] = std::string(shape_name(entry.family.shape));
        s["zeta"] = entry.family.zeta.str();
        s["certificate"] = certificate_json(*c.certificate);
        solutions.push_back(std::move(s));
    }
    j["solutions"] = std::move(solutions);
    if (!set.zeta_in_field) {
        j["note"] = "xi has no fourth root in Q(i); the equation has solutions over an "
                    "extension field but none with coordinates over Q(i)";
    }
    return j;
}

OrderedJson check_result_json(const ThueInstance& inst, const Classification& c) {
    OrderedJson j;
    j["lambda"] = inst.lambda.str(kVar);
    j["xi"] = inst.xi.str();
    switch (c.kind) {
        case Classification::Kind::kSolution:
            j["classification"] = "solution";
            j["shape"] = std::string(shape_name(c.family->shape));
            j["zeta"] = c.family->zeta.str();
            j["certificate"] = certificate_json(*c.certificate);
            break;
        case Classification::Kind::kNotASolution:
            j["classification"] = "not_a_solution";
            j["residual"] = c.residual->str(kVar);
            break;
        case Classification::Kind::kTheoremViolation:
            throw InternalError("TheoremViolation",
                                "verified solution lies outside every known family");
    }
    return j;
}

OrderedJson classify_result_json(const std::set<int>& exponents) {
    OrderedJson j;
    j["square_exponents"] = exponents;  // std::set serializes as a sorted array
    return j;
}

OrderedJson units_result_json(const UnitDecomposition& dec) {
    OrderedJson j;
    j["c"] = dec.c.str();
    j["n"] = dec.n;
    return j;
}

OrderedJson search_result_json(const ThueInstance& inst, int max_deg,
                               const std::vector<GaussRat>& coeff_set, long long budget,
                               const std::vector<std::pair<Poly, Poly>>& found) {
    OrderedJson j;
    j["lambda"] = inst.lambda.str(kVar);
    j["xi"] = inst.xi.str();
    OrderedJson space;
    space["max_deg"] = max_deg;
    OrderedJson coeffs = OrderedJson::array();
    for (const GaussRat& c : coeff_set) coeffs.push_back(c.str());
    space["coeff_set"] = std::move(coeffs);
    mpz_class pairs;
    mpz_ui_pow_ui(pairs.get_mpz_t(), static_cast<unsigned long>(coeff_set.size()),
                  2UL * (static_cast<unsigned long>(max_deg) + 1UL));
    space["candidate_pairs"] = pairs.get_str();
    space["budget"] = budget;
    j["search_space"] = std::move(space);
    OrderedJson solutions = OrderedJson::array();
    for (const auto& [x, y] : found) {
        OrderedJson s;
        s["x"] = x.str(kVar);
        s["y"] = y.str(kVar);
        solutions.push_back(std::move(s));
    }
    j["solutions"] = std::move(solutions);
    return j;
}

OrderedJson table_result_json(long n_min, long n_max) {
    if (n_min > n_max) throw DomainError("InvalidArgument", "empty index range");
    OrderedJson rows = OrderedJson::array();
    for (long n = n_min; n <= n_max; ++n) {
        auto [u, v] = sequence_uv(n);
        OrderedJson row;
        row["n"] = n;
        row["U"] = u.str("X");
        row["V"] = v.str("X");
        row["H"] = sequence_h(n).str("X");
        rows.push_back(std::move(row));
    }
    OrderedJson j;
    j["rows"] = std::move(rows);
    return j;
}

OrderedJson error_json(const std::string& kind, const std::string& message) {
    OrderedJson j;
    OrderedJson e;
    e["kind"] = kind;
    e["message"] = message;
    j["error"] = std::move(e);
    return j;
}

std::string render_json(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

} // namespace thueff
