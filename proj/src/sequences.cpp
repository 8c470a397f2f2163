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

#include "thueff/sequences.hpp"

namespace thueff {

namespace {

const Poly& var_x() {
    static const Poly x = Poly::variable();
    return x;
}

} // namespace

void SequenceCache::ensure_uv(long n) {
    if (uv_.empty()) {
        uv_.emplace(0, std::make_pair(Poly(GaussRat(1)), Poly()));
    }
    const Poly& x = var_x();
    // Extend the contiguous cached index range towards n, one step at a time.
    while (uv_.rbegin()->first < n) {
        long k = uv_.rbegin()->first;
        const auto& [u, v] = uv_.at(k);
        Poly nu = -v;
        Poly nv = u + x * v;
        // Independent route: both components also satisfy s_{k+1} = X s_k - s_{k-1}.
        if (uv_.count(k - 1) != 0) {
            const auto& [pu, pv] = uv_.at(k - 1);
            if (!(nu == x * u - pu) || !(nv == x * v - pv)) {
                throw InternalError("InternalInconsistency",
                                    "first- and second-order recurrences disagree");
            }
        }
        uv_.emplace(k + 1, std::make_pair(std::move(nu), std::move(nv)));
    }
    while (uv_.begin()->first > n) {
        long k = uv_.begin()->first;
        const auto& [u, v] = uv_.at(k);
        // Inverse step: u^(k-1) = u^k * u^-1 with u^-1 = X - u.
        Poly pu = v + x * u;
        Poly pv = -u;
        if (uv_.count(k + 1) != 0) {
            const auto& [nu, nv] = uv_.at(k + 1);
            if (!(x * u - nu == pu) || !(x * v - nv == pv)) {
                throw InternalError("InternalInconsistency",
                                    "first- and second-order recurrences disagree");
            }
        }
        uv_.emplace(k - 1, std::make_pair(std::move(pu), std::move(pv)));
    }
}

void SequenceCache::ensure_h(long n) {
    if (h_.empty()) {
        h_.emplace(0, Poly(GaussRat(1)));
        h_.emplace(1, Poly(GaussRat(2)));
    }
    const Poly& x = var_x();
    auto check_h = [this](long k, const Poly& value) {
        // Independent identity: H_k = (-i)^k G_k(iX) with G_k = U_k + 2i V_k.
        ensure_uv(k);
        const auto& [u, v] = uv_.at(k);
        Poly g = u + v * (GaussRat(2) * GaussRat::i());
        Poly expect = g.subst_scaled(GaussRat::i()) * i_power(3 * (k % 4));
        if (!(value == expect)) {
            throw InternalError("InternalInconsistency",
                                "H recurrence disagrees with the substitution identity");
        }
    };
    while (h_.rbegin()->first < n) {
        long k = h_.rbegin()->first;  // next index is k + 1 from H_{k+1} = X H_k + H_{k-1}
        Poly nh = x * h_.at(k) + h_.at(k - 1);
        check_h(k + 1, nh);
        h_.emplace(k + 1, std::move(nh));
    }
    while (h_.begin()->first > n) {
        long k = h_.begin()->first;
        Poly ph = h_.at(k + 1) - x * h_.at(k);  // H_{k-1} = H_{k+1} - X H_k
        check_h(k - 1, ph);
        h_.emplace(k - 1, std::move(ph));
    }
}

std::pair<Poly, Poly> SequenceCache::uv(long n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_uv(n);
    return uv_.at(n);
}

Poly SequenceCache::h(long n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_h(n);
    return h_.at(n);
}

namespace {

SequenceCache& global_cache() {
    static SequenceCache cache;
    return cache;
}

} // namespace

std::pair<Poly, Poly> sequence_uv(long n) { return global_cache().uv(n); }

std::pair<Poly, Poly> sequence_g(long n) {
    auto [u, v] = sequence_uv(n);
    Poly two_i_v = v * (GaussRat(2) * GaussRat::i());
    return {u + two_i_v, u - two_i_v};
}

Poly sequence_h(long n) { return global_cache().h(n); }

mpz_class fibonacci(long l) {
    if (l < 0) throw DomainError("InvalidArgument", "Fibonacci index must be nonnegative");
    mpz_class a = 0;
    mpz_class b = 1;
    for (long k = 0; k < l; ++k) {
        mpz_class next(a + b);
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

std::set<int> classify_square_exponents(int n_max) {
    if (n_max < 0) throw DomainError("InvalidArgument", "range bound must be nonnegative");
    std::set<int> out;
    for (int m = -n_max; m <= n_max; ++m) {
        if (as_square_up_to_constant(sequence_h(m))) out.insert(m);
    }
    return out;
}

} // namespace thueff
