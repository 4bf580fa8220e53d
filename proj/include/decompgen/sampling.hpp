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

#ifndef DECOMPGEN_SAMPLING_HPP
#define DECOMPGEN_SAMPLING_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "prime.hpp"

namespace decompgen {

/// Random primes of R with supported residue fields, none containing `avoid` (pass one() for no
/// restriction). Deterministic in the seed; may return fewer than `count` for small rings.
template <ExactField K>
std::vector<PrimeSpec<K>> sample_primes(const Ring<K>& R, std::size_t count, std::uint64_t seed,
                                        const MPoly<K>& avoid) {
    std::vector<PrimeSpec<K>> out;
    if (R.desc.is_field()) return out;
    std::mt19937_64 rng(seed);
    std::set<std::string> seen;
    const K& k = R.field;
    auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto small_prime = [&](long hi) {
        while (true) {
            long p = uniform(2, hi);
            if (is_prime_u64(static_cast<std::uint64_t>(p))) return p;
        }
    };
    auto c = [&](long v) { return MPoly<K>::from_int(k, v); };
    auto x = [&](std::size_t i) { return R.variable(i); };
    auto random_monic = [&](int deg, long range) {
        MPoly<K> f = R.one();
        for (int i = 0; i < deg; ++i) f = f * x(0);
        for (int i = 0; i < deg; ++i) {
            MPoly<K> t = c(uniform(-range, range));
            for (int j = 0; j < i; ++j) t = t * x(0);
            f += t;
        }
        return f;
    };
    for (std::size_t attempt = 0; out.size() < count && attempt < 200 * count + 200; ++attempt) {
        std::vector<MPoly<K>> gens;
        const std::size_t nv = R.nvars();
        if (R.desc.integral()) {
            if (nv == 0) {
                gens = {c(small_prime(400))};
            } else {
                switch (uniform(0, 2)) {
                    case 0: gens = {c(small_prime(200))}; break;
                    case 1: gens = {x(0) - c(uniform(-40, 40))}; break;
                    default: gens = {c(small_prime(13)), random_monic(static_cast<int>(uniform(1, 2)), 12)}; break;
                }
            }
        } else if (nv == 1) {
            if (k.characteristic() == 0) gens = {x(0) - c(uniform(-60, 60))};
            else gens = {random_monic(static_cast<int>(uniform(1, 4)), static_cast<long>(k.characteristic()))};
        } else {
            const long range = k.characteristic() == 0 ? 30 : static_cast<long>(k.characteristic());
            if (uniform(0, 1) == 0) gens = {x(0) - c(uniform(-range, range)), x(1) - c(uniform(-range, range))};
            else gens = {x(1) - c(uniform(-range, range)) * x(0) - c(uniform(-range, range))};
        }
        try {
            auto p = PrimeSpec<K>::make(R, gens);
            if (p.is_generic() || p.contains(avoid) || !seen.insert(p.str()).second) continue;
            out.push_back(p);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Internal) throw;
        }
    }
    return out;
}

}  // namespace decompgen

#endif  // DECOMPGEN_SAMPLING_HPP
