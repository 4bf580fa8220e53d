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

#ifndef DECOMPGEN_GCD_FREE_HPP
#define DECOMPGEN_GCD_FREE_HPP

#include <vector>

#include "factor.hpp"
#include "upoly.hpp"

namespace decompgen {

/// Pairwise coprime monic polynomials through which every input factors:
/// input_i = unit_i * prod_j basis_j^mult[i][j].
template <ExactField F>
struct GcdFreeBasis {
    std::vector<UPoly<F>> basis;
    std::vector<std::vector<unsigned>> mult;
    std::vector<typename F::value_type> unit;
};

/// Multiplicity of g in f (largest m with g^m | f).
template <ExactField F>
unsigned divisor_multiplicity(UPoly<F> f, const UPoly<F>& g) {
    if (g.degree() <= 0 || f.is_zero()) return 0;
    unsigned m = 0;
    while (true) {
        auto [q, r] = f.divmod(g);
        if (!r.is_zero()) return m;
        f = q;
        ++m;
    }
}

/// Coarsest gcd-free refinement of the square-free parts of the inputs.
template <ExactField F>
GcdFreeBasis<F> gcd_free_basis(const std::vector<UPoly<F>>& polys) {
    GcdFreeBasis<F> out;
    if (polys.empty()) return out;
    const F& fld = polys[0].field();
    std::vector<UPoly<F>> work;
    auto add = [&](const UPoly<F>& g) {
        if (g.degree() <= 0) return;
        UPoly<F> m = g.monic();
        for (const auto& w : work)
            if (w == m) return;
        work.push_back(m);
    };
    for (const auto& f : polys) {
        require(!f.is_zero(), ErrorCode::InternalError, "gcd_free_basis: zero polynomial");
        for (const auto& [s, e] : squarefree_decomposition(f)) add(s);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                UPoly<F> g = gcd(work[i], work[j]);
                if (g.degree() <= 0) continue;
                UPoly<F> a = work[i] / g, b = work[j] / g;
                work.erase(work.begin() + static_cast<long>(j));
                work.erase(work.begin() + static_cast<long>(i));
                add(g);
                add(a);
                add(b);
                changed = true;
            }
    }
    std::sort(work.begin(), work.end(), [&](const UPoly<F>& a, const UPoly<F>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = fld.compare(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c < 0;
        }
        return false;
    });
    out.basis = work;
    for (const auto& f : polys) {
        std::vector<unsigned> m;
        UPoly<F> rest = f;
        for (const auto& b : work) {
            unsigned e = divisor_multiplicity(rest, b);
            m.push_back(e);
            rest = rest / pow(b, e);
        }
        require(rest.degree() == 0, ErrorCode::InternalError, "gcd_free_basis: reconstruction failed");
        out.mult.push_back(m);
        out.unit.push_back(rest.coeff(0));
    }
    return out;
}

}  // namespace decompgen

#endif  // DECOMPGEN_GCD_FREE_HPP
