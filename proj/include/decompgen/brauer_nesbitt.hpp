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

#ifndef DECOMPGEN_BRAUER_NESBITT_HPP
#define DECOMPGEN_BRAUER_NESBITT_HPP

#include <string>
#include <vector>

#include "modules.hpp"
#include "prime.hpp"

namespace decompgen {

/// Fingerprint of a direct sum: entrywise product.
template <ExactField F>
Fingerprint<F> direct_sum(const Fingerprint<F>& a, const Fingerprint<F>& b) {
    require(a.chi.size() == b.chi.size(), ErrorCode::DimensionMismatch, "fingerprints of different algebras");
    Fingerprint<F> out;
    for (std::size_t i = 0; i < a.chi.size(); ++i) out.chi.push_back(a.chi[i] * b.chi[i]);
    return out;
}

/// Coefficientwise reduction of a fingerprint over Frac(R) into k(p).
template <ExactField K, ExactField FG, ExactField FR>
Fingerprint<FR> reduce_fingerprint(const Ring<K>& R, const ResidueMap<FR>& rm, const Fingerprint<FG>& fp) {
    Fingerprint<FR> out;
    for (const auto& chi : fp.chi) {
        std::vector<typename FR::value_type> c;
        for (const auto& x : chi.coeffs()) c.push_back(reduce_scalar(R, rm, x));
        out.chi.emplace_back(rm.field, std::move(c));
    }
    return out;
}

/// The set C of all coefficients of the fingerprints of the generic simples, checked to lie in R.
template <ExactField K, ExactField FG>
std::vector<typename FG::value_type> attractor_generators(const Ring<K>& R, const FG& field,
                                                          const std::vector<CompositionFactor<FG>>& simples) {
    std::vector<typename FG::value_type> out;
    for (const auto& s : simples)
        for (const auto& chi : s.fp.chi)
            for (const auto& c : chi.coeffs()) {
                if (std::find(out.begin(), out.end(), c) != out.end()) continue;
                require(denominator_ideal(R, c) == R.one(), ErrorCode::AttractorEscapesBase,
                        "fingerprint coefficient " + field.format(c) + " is not in " + R.desc.name());
                out.push_back(c);
            }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return field.compare(a, b) < 0; });
    return out;
}

/// Human-readable id of a simple: eigenvalue tuple for characters, else dimension and fingerprint.
template <ExactField F>
std::string simple_label(const F& f, const CompositionFactor<F>& s) {
    std::string out;
    if (s.module.dim == 1) {
        out = "(";
        for (std::size_t i = 0; i < s.fp.chi.size(); ++i) out += (i ? ", " : "") + f.format(-s.fp.chi[i].coeff(0));
        return out + ")";
    }
    out = "dim " + std::to_string(s.module.dim) + " [";
    for (std::size_t i = 0; i < s.fp.chi.size(); ++i) out += (i ? ", " : "") + s.fp.chi[i].format("X");
    return out + "]";
}

template <ExactField F>
std::vector<std::string> format_fingerprint(const Fingerprint<F>& fp) {
    std::vector<std::string> out;
    for (const auto& chi : fp.chi) out.push_back(chi.format("X"));
    return out;
}

}  // namespace decompgen

#endif  // DECOMPGEN_BRAUER_NESBITT_HPP
