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

#ifndef DECOMPGEN_CORPUS_HPP
#define DECOMPGEN_CORPUS_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace decompgen {

// ---------------------------------------------------------------------------------------------
// Group algebras

/// Group algebra from a multiplication table (table[i][j] = index of g_i g_j) with trace [g = 1].
template <ExactField K>
FiniteFreeAlgebra<K> group_algebra(const std::string& name, const Ring<K>& R,
                                   const std::vector<std::vector<std::size_t>>& table,
                                   std::vector<std::string> names = {}) {
    const std::size_t n = table.size();
    require(n > 0, ErrorCode::NotAGroup, "empty table");
    for (const auto& row : table) {
        require(row.size() == n, ErrorCode::NotAGroup, "table is not square");
        for (auto x : row) require(x < n, ErrorCode::NotAGroup, "table entry out of range");
    }
    std::size_t e = n;
    for (std::size_t i = 0; i < n && e == n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
        if (ok) e = i;
    }
    require(e < n, ErrorCode::NotAGroup, "no identity element");
    for (std::size_t i = 0; i < n; ++i) {
        bool inv = false;
        for (std::size_t j = 0; j < n; ++j) inv = inv || (table[i][j] == e && table[j][i] == e);
        require(inv, ErrorCode::NotAGroup, "element " + std::to_string(i) + " has no inverse");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                require(table[table[i][j]][k] == table[i][table[j][k]], ErrorCode::NotAGroup, "table is not associative");
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    require(names.size() == n, ErrorCode::DimensionMismatch, "wrong number of element names");
    FiniteFreeAlgebra<K> A;
    A.name = name;
    A.ring = R;
    A.basis = names;
    A.c.assign(n * n * n, R.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A.at(i, j, table[i][j]) = R.one();
    A.unit.assign(n, R.zero());
    A.unit[e] = R.one();
    A.trace = A.unit;
    validate(A);
    return A;
}

inline std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

inline std::vector<std::string> cyclic_group_names(std::size_t n) {
    std::vector<std::string> s{"e"};
    for (std::size_t i = 1; i < n; ++i) s.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    return s;
}

/// S_3 on permutations of {1,2,3}; (pq)(x) = p(q(x)).
inline std::vector<std::vector<std::size_t>> s3_table() {
    const std::vector<std::array<int, 3>> P{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = P[i][static_cast<std::size_t>(P[j][static_cast<std::size_t>(k)])];
            t[i][j] = static_cast<std::size_t>(std::find(P.begin(), P.end(), c) - P.begin());
        }
    return t;
}

inline std::vector<std::string> s3_names() { return {"e", "(12)", "(23)", "(13)", "(123)", "(132)"}; }

// ---------------------------------------------------------------------------------------------
// Diagram algebras

/// A perfect matching on 2n points: 0..n-1 on top, n..2n-1 on the bottom.
using Diagram = std::vector<std::size_t>;

inline std::vector<Diagram> all_matchings(std::size_t n) {
    std::vector<Diagram> out;
    Diagram d(2 * n, 2 * n);
    std::function<void()> rec = [&]() {
        auto it = std::find(d.begin(), d.end(), 2 * n);
        if (it == d.end()) {
            out.push_back(d);
            return;
        }
        std::size_t a = static_cast<std::size_t>(it - d.begin());
        for (std::size_t b = a + 1; b < 2 * n; ++b)
            if (d[b] == 2 * n) {
                d[a] = b;
                d[b] = a;
                rec();
                d[a] = d[b] = 2 * n;
            }
    };
    rec();
    return out;
}

/// Non-crossing test with the points in boundary order t_0..t_{n-1}, b_{n-1}..b_0.
inline bool is_planar(const Diagram& d) {
    const std::size_t n = d.size() / 2;
    auto pos = [&](std::size_t x) { return x < n ? x : 2 * n - 1 - (x - n); };
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = 0; b < d.size(); ++b) {
            if (a >= d[a] || b >= d[b] || a == b) continue;
            std::size_t p = std::min(pos(a), pos(d[a])), q = std::max(pos(a), pos(d[a]));
            std::size_t r = std::min(pos(b), pos(d[b])), s = std::max(pos(b), pos(d[b]));
            if ((p < r && r < q && q < s) || (r < p && p < s && s < q)) return false;
        }
    return true;
}

/// Stacks x on top of y: the bottom of x meets the top of y. Returns the diagram and the loop count.
inline std::pair<Diagram, std::size_t> compose(const Diagram& x, const Diagram& y) {
    const std::size_t n = x.size() / 2;
    // points 0..2n-1 belong to x, 2n..4n-1 to y; x's bottom n+i is glued to y's top 2n+i
    auto partner = [&](std::size_t p) { return p < 2 * n ? x[p] : 2 * n + y[p - 2 * n]; };
    auto glue = [&](std::size_t p) -> std::size_t {
        if (p >= n && p < 2 * n) return 2 * n + (p - n);
        if (p >= 2 * n && p < 3 * n) return n + (p - 2 * n);
        return 4 * n;
    };
    auto outer = [&](std::size_t p) { return p < n ? p : p - 2 * n; };  // x top -> i, y bottom -> n+i
    Diagram out(2 * n, 0);
    std::vector<bool> seen(4 * n, false);
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < n; ++i) starts.push_back(i);
    for (std::size_t i = 3 * n; i < 4 * n; ++i) starts.push_back(i);
    for (std::size_t s : starts) {
        if (seen[s]) continue;
        std::size_t p = s;
        seen[p] = true;
        while (true) {
            std::size_t q = partner(p);
            seen[q] = true;
            std::size_t g = glue(q);
            if (g == 4 * n) {
                out[outer(s)] = outer(q);
                out[outer(q)] = outer(s);
                break;
            }
            seen[g] = true;
            p = g;
        }
    }
    std::size_t loops = 0;
    for (std::size_t s = n; s < 3 * n; ++s) {
        if (seen[s]) continue;
        ++loops;
        std::size_t p = s;
        while (!seen[p]) {
            seen[p] = true;
            std::size_t q = partner(p);
            seen[q] = true;
            p = glue(q);
        }
    }
    return {out, loops};
}

namespace detail {

inline std::size_t horizontal_arcs(const Diagram& d) {
    const std::size_t n = d.size() / 2;
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) h += d[i] < n ? 1 : 0;
    return h / 2;
}

template <ExactField K>
FiniteFreeAlgebra<K> diagram_algebra(const std::string& name, const Ring<K>& R, std::vector<Diagram> basis,
                                     std::vector<std::string> names) {
    std::sort(basis.begin(), basis.end(), [](const Diagram& a, const Diagram& b) {
        auto ha = horizontal_arcs(a), hb = horizontal_arcs(b);
        return ha != hb ? ha < hb : a < b;
    });
    const std::size_t m = basis.size();
    const MPoly<K> delta = R.variable(0);
    FiniteFreeAlgebra<K> A;
    A.name = name;
    A.ring = R;
    if (names.empty()) {
        names.push_back("1");
        for (std::size_t i = 1; i < m; ++i) names.push_back("d" + std::to_string(i));
    }
    A.basis = names;
    A.c.assign(m * m * m, R.zero());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto [d, loops] = compose(basis[i], basis[j]);
            auto it = std::find(basis.begin(), basis.end(), d);
            require(it != basis.end(), ErrorCode::InternalError, "diagram product leaves the basis");
            MPoly<K> c = R.one();
            for (std::size_t l = 0; l < loops; ++l) c = c * delta;
            A.at(i, j, static_cast<std::size_t>(it - basis.begin())) = c;
        }
    A.unit.assign(m, R.zero());
    A.unit[0] = R.one();
    validate(A);
    return A;
}

}  // namespace detail

/// Brauer algebra B_n (n = 2, 3) over a ring whose first variable is the loop parameter.
template <ExactField K>
FiniteFreeAlgebra<K> brauer_algebra(std::size_t n, const Ring<K>& R, const std::string& name = "") {
    require(n == 2 || n == 3, ErrorCode::UnsupportedRing, "Brauer algebras are built for n = 2, 3");
    require(R.nvars() >= 1, ErrorCode::UnsupportedRing, "Brauer algebra needs a parameter variable");
    std::vector<std::string> names;
    if (n == 2) names = {"1", "s", "u"};
    return detail::diagram_algebra(name.empty() ? "B" + std::to_string(n) : name, R, all_matchings(n), names);
}

/// Temperley-Lieb algebra TL_n (n <= 4): the planar diagrams.
template <ExactField K>
FiniteFreeAlgebra<K> temperley_lieb(std::size_t n, const Ring<K>& R, const std::string& name = "") {
    require(n >= 1 && n <= 4, ErrorCode::UnsupportedRing, "Temperley-Lieb algebras are built for n <= 4");
    require(R.nvars() >= 1, ErrorCode::UnsupportedRing, "Temperley-Lieb algebra needs a parameter variable");
    std::vector<Diagram> planar;
    for (auto& d : all_matchings(n))
        if (is_planar(d)) planar.push_back(d);
    return detail::diagram_algebra(name.empty() ? "TL" + std::to_string(n) : name, R, planar, {});
}

// ---------------------------------------------------------------------------------------------
// Synthetic families

/// Mat_k(R) on the matrix units e_ij with the matrix trace.
template <ExactField K>
FiniteFreeAlgebra<K> matrix_algebra(std::size_t k, const Ring<K>& R, const std::string& name = "") {
    FiniteFreeAlgebra<K> A;
    A.name = name.empty() ? "Mat" + std::to_string(k) : name;
    A.ring = R;
    const std::size_t n = k * k;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) A.basis.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    A.c.assign(n * n * n, R.zero());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) A.at(i * k + j, j * k + l, i * k + l) = R.one();
    A.unit.assign(n, R.zero());
    for (std::size_t i = 0; i < k; ++i) A.unit[i * k + i] = R.one();
    A.trace = A.unit;
    validate(A);
    return A;
}

/// Upper triangular k x k matrices.
template <ExactField K>
FiniteFreeAlgebra<K> upper_triangular(std::size_t k, const Ring<K>& R, const std::string& name = "") {
    FiniteFreeAlgebra<K> A;
    A.name = name.empty() ? "UT" + std::to_string(k) : name;
    A.ring = R;
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            idx.emplace_back(i, j);
            A.basis.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    const std::size_t n = idx.size();
    A.c.assign(n * n * n, R.zero());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (idx[a].second == idx[b].first) {
                auto c = std::find(idx.begin(), idx.end(), std::make_pair(idx[a].first, idx[b].second));
                A.at(a, b, static_cast<std::size_t>(c - idx.begin())) = R.one();
            }
    A.unit.assign(n, R.zero());
    for (std::size_t a = 0; a < n; ++a)
        if (idx[a].first == idx[a].second) A.unit[a] = R.one();
    validate(A);
    return A;
}

/// R[eps]/(eps^2).
template <ExactField K>
FiniteFreeAlgebra<K> dual_numbers(const Ring<K>& R, const std::string& name = "Dual") {
    FiniteFreeAlgebra<K> A;
    A.name = name;
    A.ring = R;
    A.basis = {"1", "eps"};
    A.c.assign(8, R.zero());
    A.at(0, 0, 0) = R.one();
    A.at(0, 1, 1) = R.one();
    A.at(1, 0, 1) = R.one();
    A.unit = {R.one(), R.zero()};
    validate(A);
    return A;
}

/// A x B with block-diagonal constants; traces are concatenated when both are present.
template <ExactField K>
FiniteFreeAlgebra<K> direct_sum(const FiniteFreeAlgebra<K>& A, const FiniteFreeAlgebra<K>& B, const std::string& name = "") {
    require(A.ring == B.ring, ErrorCode::DimensionMismatch, "direct sum of algebras over different rings");
    FiniteFreeAlgebra<K> S;
    S.name = name.empty() ? A.name + "+" + B.name : name;
    S.ring = A.ring;
    const std::size_t a = A.dim(), b = B.dim(), n = a + b;
    for (const auto& x : A.basis) S.basis.push_back(A.name + "." + x);
    for (const auto& x : B.basis) S.basis.push_back(B.name + "." + x);
    S.c.assign(n * n * n, S.ring.zero());
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            for (std::size_t k = 0; k < a; ++k) S.at(i, j, k) = A.at(i, j, k);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t k = 0; k < b; ++k) S.at(a + i, a + j, a + k) = B.at(i, j, k);
    S.unit = A.unit;
    S.unit.insert(S.unit.end(), B.unit.begin(), B.unit.end());
    if (A.trace && B.trace) {
        auto t = *A.trace;
        t.insert(t.end(), B.trace->begin(), B.trace->end());
        S.trace = t;
    }
    validate(S);
    return S;
}

// ---------------------------------------------------------------------------------------------
// The corpus

struct ExpectedFact {
    std::string kind;   // excluded, excluded-contains, decmat, schur, radical, dim, split
    std::string where;  // prime specification or empty
    std::string value;
    std::string provenance;  // PAPER, TRIVIAL, DERIVED
    std::string oracle;
};

struct CorpusEntry {
    std::string id;
    std::string builder;
    AnyAlgebra algebra;
    bool generic_split = true;
    bool stretch = false;  // excluded from the timed suites
    std::vector<ExpectedFact> facts;
};

inline Ring<Rationals> ring_zz() { return make_ring<Rationals>(RingDescriptor::parse("ZZ")); }
inline Ring<Rationals> ring_qq_delta() { return make_ring<Rationals>(RingDescriptor::parse("QQ[delta]")); }
inline Ring<Rationals> ring_zz_delta() { return make_ring<Rationals>(RingDescriptor::parse("ZZ[delta]")); }

inline std::vector<CorpusEntry> corpus() {
    const auto Z = ring_zz(), Qd = ring_qq_delta(), Zd = ring_zz_delta();
    const auto F3d = make_ring<PrimeField>(RingDescriptor::parse("GF(3)[delta]"));
    std::vector<CorpusEntry> c;
    c.push_back({"C2", "group_algebra(cyclic 2, ZZ)", group_algebra("C2", Z, cyclic_group_table(2), cyclic_group_names(2)), true, false,
                 {{"dim", "", "2", "TRIVIAL", ""},
                  {"excluded", "", "(2)", "DERIVED", "pointwise radical dimensions"},
                  {"decmat", "p=2", "[[1],[1]]", "DERIVED", "both characters reduce to the unique simple"},
                  {"schur", "", "2,2", "DERIVED", "c = |G|/chi(1) by orthogonality"}}});
    c.push_back({"C3", "group_algebra(cyclic 3, ZZ)", group_algebra("C3", Z, cyclic_group_table(3), cyclic_group_names(3)), false, false,
                 {{"dim", "", "3", "TRIVIAL", ""},
                  {"split", "generic", "false", "DERIVED", "x^2+x+1 irreducible over Q"}}});
    c.push_back({"S3", "group_algebra(symmetric 3, ZZ)", group_algebra("S3", Z, s3_table(), s3_names()), true, false,
                 {{"dim", "", "6", "TRIVIAL", ""},
                  {"excluded", "", "(2),(3)", "PAPER", ""},
                  {"decmat", "p=3", "[[1,0],[0,1],[1,1]]", "DERIVED", "fingerprint multiplicity system by hand"},
                  {"decmat", "p=2", "[[1,0],[1,0],[0,1]]", "DERIVED", "sign and trivial agree mod 2"},
                  {"schur", "", "6,6,3", "DERIVED", "c = |G|/chi(1) by orthogonality"}}});
    c.push_back({"B2", "brauer_algebra(2, QQ[delta])", brauer_algebra(2, Qd), true, false,
                 {{"dim", "", "3", "TRIVIAL", ""},
                  {"excluded", "", "(delta)", "DERIVED", "character enumeration of the commutative fiber"},
                  {"decmat", "gen=[delta]", "[[1,0],[1,0],[0,1]]", "DERIVED", "character reduction"}}});
    c.push_back({"B2Z", "brauer_algebra(2, ZZ[delta])", brauer_algebra(2, Zd, "B2Z"), true, false,
                 {{"excluded-contains", "", "(2),(delta)", "DERIVED", "character enumeration of the commutative fiber"}}});
    c.push_back({"B2F3", "brauer_algebra(2, GF(3)[delta])", brauer_algebra(2, F3d, "B2F3"), true, false,
                 {{"excluded", "", "(delta)", "DERIVED", "character enumeration of the commutative fiber"}}});
    c.push_back({"B3", "brauer_algebra(3, QQ[delta])", brauer_algebra(3, Qd), true, true,
                 {{"dim", "", "15", "DERIVED", "(2*3-1)!! diagrams"}}});
    c.push_back({"TL2", "temperley_lieb(2, QQ[delta])", temperley_lieb(2, Qd), true, false,
                 {{"dim", "", "2", "TRIVIAL", ""}, {"excluded", "", "(delta)", "DERIVED", "e^2 = delta e"}}});
    c.push_back({"TL3", "temperley_lieb(3, QQ[delta])", temperley_lieb(3, Qd), true, false,
                 {{"dim", "", "5", "TRIVIAL", ""}}});
    c.push_back({"TL4", "temperley_lieb(4, QQ[delta])", temperley_lieb(4, Qd), true, true,
                 {{"dim", "", "14", "TRIVIAL", ""}}});
    c.push_back({"Mat2", "matrix_algebra(2, ZZ)", matrix_algebra(2, Z), true, false,
                 {{"excluded", "", "", "DERIVED", "Mat_2(F_2) is semisimple"}, {"schur", "", "1", "DERIVED", "dual basis e_ji"}}});
    c.push_back({"UT2", "upper_triangular(2, ZZ)", upper_triangular(2, Z), true, false,
                 {{"excluded", "", "", "DERIVED", "strict upper ideal in every characteristic"},
                  {"radical", "generic", "1", "TRIVIAL", ""}}});
    c.push_back({"Dual", "dual_numbers(ZZ)", dual_numbers(Z), true, false,
                 {{"excluded", "", "", "TRIVIAL", ""}, {"radical", "generic", "1", "TRIVIAL", ""}}});
    c.push_back({"C2+Mat2", "direct_sum(C2, Mat2)", direct_sum(group_algebra("C2", Z, cyclic_group_table(2), cyclic_group_names(2)), matrix_algebra(2, Z), "C2+Mat2"), true, false,
                 {{"excluded", "", "(2)", "DERIVED", "union of the summands' loci"}}});
    return c;
}

}  // namespace decompgen

#endif  // DECOMPGEN_CORPUS_HPP
