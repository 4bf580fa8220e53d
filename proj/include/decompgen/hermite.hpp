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

#ifndef DECOMPGEN_HERMITE_HPP
#define DECOMPGEN_HERMITE_HPP

#include <utility>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"

namespace decompgen {

/// Euclidean structure on Z (integer constants over Q) or on k[x].
template <ExactField K>
struct Euclid {
    Ring<K> ring;

    explicit Euclid(Ring<K> r) : ring(std::move(r)) {
        bool ok = ring.nvars() == 0 ? ring.desc.integral() : (ring.nvars() == 1 && !ring.desc.integral());
        require(ok, ErrorCode::UnsupportedRing, "Hermite normal form needs ZZ or k[x], not " + ring.desc.name());
    }

    bool integers() const { return ring.nvars() == 0; }

    /// Euclidean size: |a| over Z, 1 + degree over k[x]; zero has size 0.
    mpz_class size(const MPoly<K>& a) const {
        if (a.is_zero()) return 0;
        if constexpr (std::is_same_v<K, Rationals>) {
            if (integers()) return abs(a.constant_value().num());
        }
        return a.total_deg() + 1;
    }

    /// Quotient and canonical remainder (0 <= r < |b| over Z, deg r < deg b over k[x]).
    std::pair<MPoly<K>, MPoly<K>> divmod(const MPoly<K>& a, const MPoly<K>& b) const {
        if constexpr (std::is_same_v<K, Rationals>) {
            if (integers()) {
                mpz_class x = a.is_zero() ? mpz_class(0) : a.constant_value().num();
                mpz_class y = b.constant_value().num();
                mpz_class q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                if (r < 0) {
                    r += abs(y);
                    q += (y > 0 ? -1 : 1);
                }
                return {MPoly<K>::constant(ring.field, Rational(q)), MPoly<K>::constant(ring.field, Rational(r))};
            }
        }
        auto [q, r] = a.to_upoly(0).divmod(b.to_upoly(0));
        return {MPoly<K>::from_upoly(q, 0), MPoly<K>::from_upoly(r, 0)};
    }

    /// Unit u with u*a canonical (positive, or monic).
    typename K::value_type normalizing_unit(const MPoly<K>& a) const {
        if (a.is_zero()) return ring.field.one();
        if constexpr (std::is_same_v<K, Rationals>) {
            if (integers()) return Rational(a.constant_value().sign() < 0 ? -1 : 1);
        }
        return ring.field.one() / a.lc();
    }
};

/// Row-style Hermite normal form with the unimodular transform: U * M = H.
template <ExactField K>
struct HermiteResult {
    std::vector<std::vector<MPoly<K>>> H;      // same shape as the input
    std::vector<std::vector<MPoly<K>>> U;      // rows x rows, unimodular
    std::vector<std::vector<MPoly<K>>> U_inv;  // inverse of U
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

template <ExactField K>
HermiteResult<K> hermite_with_transform(const Euclid<K>& E, std::vector<std::vector<MPoly<K>>> M) {
    const K& k = E.ring.field;
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    auto zero = MPoly<K>(k);
    auto one = MPoly<K>::from_int(k, 1);
    std::vector<std::vector<MPoly<K>>> U(m, std::vector<MPoly<K>>(m, zero)), V(m, std::vector<MPoly<K>>(m, zero));
    for (std::size_t i = 0; i < m; ++i) U[i][i] = V[i][i] = one;

    // row_i -= q * row_j  (U likewise; U_inv: col_j += q * col_i)
    auto addmul = [&](std::size_t i, std::size_t j, const MPoly<K>& q) {
        if (q.is_zero()) return;
        for (std::size_t c = 0; c < n; ++c)
            if (!M[j][c].is_zero()) M[i][c] -= q * M[j][c];
        for (std::size_t c = 0; c < m; ++c)
            if (!U[j][c].is_zero()) U[i][c] -= q * U[j][c];
        for (std::size_t r = 0; r < m; ++r)
            if (!V[r][i].is_zero()) V[r][j] += q * V[r][i];
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(M[i], M[j]);
        std::swap(U[i], U[j]);
        for (std::size_t r = 0; r < m; ++r) std::swap(V[r][i], V[r][j]);
    };
    auto scale_row = [&](std::size_t i, const typename K::value_type& u) {
        for (auto& x : M[i]) x = x.scaled(u);
        for (auto& x : U[i]) x = x.scaled(u);
        auto ui = k.one() / u;
        for (std::size_t r = 0; r < m; ++r) V[r][i] = V[r][i].scaled(ui);
    };

    HermiteResult<K> res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        while (true) {
            // pick the smallest nonzero entry in column c at or below row r
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (!M[i][c].is_zero() && (best == m || E.size(M[i][c]) < E.size(M[best][c]))) best = i;
            if (best == m) break;
            swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (M[i][c].is_zero()) continue;
                auto [q, rem] = E.divmod(M[i][c], M[r][c]);
                addmul(i, r, q);
                if (!rem.is_zero()) done = false;
            }
            if (done) break;
        }
        if (r < m && !M[r][c].is_zero()) {
            scale_row(r, E.normalizing_unit(M[r][c]));
            for (std::size_t i = 0; i < r; ++i) {
                auto [q, rem] = E.divmod(M[i][c], M[r][c]);
                addmul(i, r, q);
            }
            res.pivots.push_back(c);
            ++r;
        }
    }
    res.rank = r;
    res.H = std::move(M);
    res.U = std::move(U);
    res.U_inv = std::move(V);
    return res;
}

/// Canonical Hermite basis of the row lattice (zero rows dropped).
template <ExactField K>
std::vector<std::vector<MPoly<K>>> hermite_normal_form(const Ring<K>& R, const std::vector<std::vector<MPoly<K>>>& rows) {
    Euclid<K> E(R);
    auto h = hermite_with_transform(E, rows);
    h.H.resize(h.rank);
    return h.H;
}

/// Basis of (L tensor K) intersected with R^n, in Hermite form.
template <ExactField K>
std::vector<std::vector<MPoly<K>>> saturate(const Ring<K>& R, const std::vector<std::vector<MPoly<K>>>& rows, std::size_t n) {
    Euclid<K> E(R);
    if (rows.empty()) return {};
    std::vector<std::vector<MPoly<K>>> MT(n, std::vector<MPoly<K>>(rows.size(), MPoly<K>(R.field)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) MT[j][i] = rows[i][j];
    // U * M^T = H; the rows of U beyond rank(M) span {w : w M^T = 0} = {w : M w = 0} over R
    auto h1 = hermite_with_transform(E, MT);
    std::vector<std::vector<MPoly<K>>> perp(h1.U.begin() + static_cast<long>(h1.rank), h1.U.end());
    if (perp.empty()) {
        std::vector<std::vector<MPoly<K>>> id(n, std::vector<MPoly<K>>(n, MPoly<K>(R.field)));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = R.one();
        return id;
    }
    // {v : v . w = 0 for all w in perp}: same trick on the transpose of perp
    std::vector<std::vector<MPoly<K>>> PT(n, std::vector<MPoly<K>>(perp.size(), MPoly<K>(R.field)));
    for (std::size_t i = 0; i < perp.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) PT[j][i] = perp[i][j];
    auto h2 = hermite_with_transform(E, PT);
    std::vector<std::vector<MPoly<K>>> sat(h2.U.begin() + static_cast<long>(h2.rank), h2.U.end());
    return hermite_normal_form(R, sat);
}

/// Rows C completing a saturated basis J to a basis of R^n, together with the inverse of the
/// square matrix [J; C] (so coordinates in the new basis are v * inverse).
template <ExactField K>
struct Completion {
    std::vector<std::vector<MPoly<K>>> complement;
    std::vector<std::vector<MPoly<K>>> basis;    // [J; C]
    std::vector<std::vector<MPoly<K>>> inverse;  // basis^{-1}
};

template <ExactField K>
Completion<K> unimodular_completion(const Ring<K>& R, const std::vector<std::vector<MPoly<K>>>& J, std::size_t n) {
    Euclid<K> E(R);
    const std::size_t r = J.size();
    Completion<K> out;
    auto zero = MPoly<K>(R.field);
    if (r == 0) {
        std::vector<std::vector<MPoly<K>>> id(n, std::vector<MPoly<K>>(n, zero));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = R.one();
        out.complement = id;
        out.basis = id;
        out.inverse = id;
        return out;
    }
    std::vector<std::vector<MPoly<K>>> JT(n, std::vector<MPoly<K>>(r, zero));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) JT[j][i] = J[i][j];
    auto h = hermite_with_transform(E, JT);
    require(h.rank == r, ErrorCode::InternalError, "completion: rows are dependent");
    for (std::size_t i = 0; i < r; ++i)
        require(E.size(h.H[i][i]) == 1 || (!E.integers() && h.H[i][i].is_constant()), ErrorCode::InternalError,
                "completion: lattice is not saturated");
    // W = U^{-T}: J = T^T W[0..r), and rows W[r..n) complete the basis.
    for (std::size_t i = r; i < n; ++i) {
        std::vector<MPoly<K>> row(n, zero);
        for (std::size_t j = 0; j < n; ++j) row[j] = h.U_inv[j][i];
        out.complement.push_back(row);
    }
    out.basis = J;
    out.basis.insert(out.basis.end(), out.complement.begin(), out.complement.end());
    // A unimodular matrix has the identity as Hermite form, so the transform is its inverse.
    auto hb = hermite_with_transform(E, out.basis);
    for (std::size_t i = 0; i < n; ++i)
        require(hb.H[i][i] == R.one(), ErrorCode::InternalError, "completion: basis is not unimodular");
    out.inverse = hb.U;
    return out;
}

}  // namespace decompgen

#endif  // DECOMPGEN_HERMITE_HPP
