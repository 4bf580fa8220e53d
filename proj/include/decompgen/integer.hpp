/*
   Copyright 2026 The decompgen Authors

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

#ifndef DECOMPGEN_INTEGER_HPP
#define DECOMPGEN_INTEGER_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace decompgen {

inline bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline bool is_prime_u64(std::uint64_t n) { return is_probable_prime(mpz_class(std::to_string(n))); }

inline std::uint64_t to_u64(const mpz_class& n) {
    require(n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64, ErrorCode::InternalError,
            "integer does not fit in 64 bits: " + n.get_str());
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, n.get_mpz_t());
    return r;
}

inline mpz_class from_u64(std::uint64_t v) {
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

/// Result of integer factorization: |n| = prod p^e, n = unit * |n|.
struct IntegerFactorization {
    int unit = 1;
    std::vector<std::pair<mpz_class, unsigned>> factors;
};

namespace detail {

/// Brent's variant of Pollard rho; returns a nontrivial factor of composite n or 0.
inline mpz_class pollard_brent(const mpz_class& n, unsigned long c, std::size_t budget) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    auto f = [&](const mpz_class& v) {
        mpz_class r = v * v + c;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        return r;
    };
    std::size_t r = 1, steps = 0;
    const std::size_t m = 64;
    while (g == 1) {
        x = y;
        for (std::size_t i = 0; i < r; ++i) y = f(y);
        std::size_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = q * abs(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
        steps += r;
        if (steps > budget) return 0;
    }
    if (g == n) {
        do {
            ys = f(ys);
            mpz_class d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? mpz_class(0) : g;
}

inline void split_composite(const mpz_class& n, std::vector<mpz_class>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    for (unsigned long c = 1; c < 20; ++c) {
        mpz_class d = pollard_brent(n, c, 4'000'000);
        if (d != 0) {
            split_composite(d, primes);
            split_composite(n / d, primes);
            return;
        }
    }
    fail(ErrorCode::FactorBudgetExceeded, "could not factor " + n.get_str());
}

}  // namespace detail

/// Trial division by small primes, then Pollard rho on the cofactor.
inline IntegerFactorization factor_integer(const mpz_class& n) {
    require(n != 0, ErrorCode::InternalError, "factor_integer(0)");
    mpz_class m = abs(n);
    IntegerFactorization out;
    out.unit = n < 0 ? -1 : 1;
    std::map<mpz_class, unsigned> found;
    auto take = [&](const mpz_class& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e > 0) found[p] += e;
    };
    take(2);
    take(3);
    for (mpz_class d = 5; d < 10000 && d * d <= m; d += 6) {
        take(d);
        take(d + 2);
    }
    if (m > 1) {
        std::vector<mpz_class> rest;
        detail::split_composite(m, rest);
        for (const auto& p : rest) take(p);
    }
    for (auto& [p, e] : found) out.factors.emplace_back(p, e);
    return out;
}

inline std::vector<mpz_class> prime_divisors(const mpz_class& n) {
    std::vector<mpz_class> r;
    for (auto& [p, e] : factor_integer(n).factors) r.push_back(p);
    return r;
}

}  // namespace decompgen

#endif  // DECOMPGEN_INTEGER_HPP
