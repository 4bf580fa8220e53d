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

// Independent oracles shared by the unit suites and the acceptance binary. Nothing here calls
// the engine's radical, chop, or decomposition code.

#ifndef DECOMPGEN_TESTS_ORACLES_HPP
#define DECOMPGEN_TESTS_ORACLES_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <random>
#include <string>
#include <vector>

#include "decompgen/algebra.hpp"

namespace oracle {

using namespace decompgen;
using FpVec = Vec<PrimeField>;

/// Fiber algebra from a structure-constant callback c(i, j) -> coordinates of b_i b_j.
template <class Mul>
FiberAlgebra<PrimeField> make_fiber(const PrimeField& f, std::size_t n, std::size_t unit_index, Mul mul,
                                    const std::string& name) {
    FiberAlgebra<PrimeField> A;
    A.name = name;
    A.field = f;
    for (std::size_t i = 0; i < n; ++i) A.basis.push_back("b" + std::to_string(i));
    A.c.assign(n * n * n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FpVec v = mul(i, j);
            for (std::size_t k = 0; k < n; ++k) A.c[(i * n + j) * n + k] = v[k];
        }
    A.unit.assign(n, f.zero());
    A.unit[unit_index] = f.one();
    A.provenance = name;
    return A;
}

/// Group algebra F_p[G] from a multiplication table with identity at index 0.
inline FiberAlgebra<PrimeField> group_fiber(const PrimeField& f, const std::vector<std::vector<std::size_t>>& t,
                                            const std::string& name) {
    const std::size_t n = t.size();
    return make_fiber(f, n, 0, [&](std::size_t i, std::size_t j) {
        FpVec v(n, f.zero());
        v[t[i][j]] = f.one();
        return v;
    }, name);
}

inline std::vector<std::vector<std::size_t>> cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

inline std::vector<std::vector<std::size_t>> klein_four() {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return t;
}

/// Subalgebra of Mat_k(F_p) spanned by all products of the given matrices and the identity.
/// Returns nothing when the span exceeds max_dim.
inline std::optional<FiberAlgebra<PrimeField>> matrix_subalgebra(const PrimeField& f, std::size_t k,
                                                                 const std::vector<Matrix<PrimeField>>& gens,
                                                                 std::size_t max_dim, const std::string& name) {
    auto flat = [&](const Matrix<PrimeField>& m) {
        FpVec v;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) v.push_back(m(r, c));
        return v;
    };
    auto unflat = [&](const FpVec& v) {
        Matrix<PrimeField> m(f, k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) m(r, c) = v[r * k + c];
        return m;
    };
    Subspace<PrimeField> S(f, k * k);
    S.insert(flat(Matrix<PrimeField>::identity(f, k)));
    for (const auto& g : gens) S.insert(flat(g));
    for (bool grew = true; grew;) {
        grew = false;
        if (S.dim() > max_dim) return std::nullopt;
        const auto rows = S.basis();
        for (const auto& a : rows)
            for (const auto& b : rows)
                if (S.insert(flat(unflat(a) * unflat(b)))) grew = true;
    }
    if (S.dim() > max_dim) return std::nullopt;
    const auto rows = S.basis();
    const std::size_t n = rows.size();
    auto A = make_fiber(f, n, 0, [&](std::size_t i, std::size_t j) { return S.coordinates(flat(unflat(rows[i]) * unflat(rows[j]))); },
                        name);
    A.unit = S.coordinates(flat(Matrix<PrimeField>::identity(f, k)));
    return A;
}

inline FiberAlgebra<PrimeField> direct_sum(const FiberAlgebra<PrimeField>& A, const FiberAlgebra<PrimeField>& B) {
    const std::size_t a = A.dim(), n = a + B.dim();
    auto S = make_fiber(A.field, n, 0, [&](std::size_t i, std::size_t j) {
        FpVec v(n, A.field.zero());
        if (i < a && j < a)
            for (std::size_t k = 0; k < a; ++k) v[k] = A.at(i, j, k);
        if (i >= a && j >= a)
            for (std::size_t k = 0; k < B.dim(); ++k) v[a + k] = B.at(i - a, j - a, k);
        return v;
    }, A.name + "+" + B.name);
    S.unit = A.unit;
    S.unit.insert(S.unit.end(), B.unit.begin(), B.unit.end());
    return S;
}

/// Deterministic family of algebras of dimension <= 4 over F_2 and F_3.
inline std::vector<FiberAlgebra<PrimeField>> small_algebra_family(std::uint64_t seed) {
    std::vector<FiberAlgebra<PrimeField>> out;
    std::mt19937_64 rng(seed);
    for (std::uint64_t p : {2u, 3u}) {
        PrimeField f(p);
        const std::string tag = "F" + std::to_string(p);
        for (std::size_t n : {1u, 2u, 3u, 4u}) out.push_back(group_fiber(f, cyclic(n), tag + "[C" + std::to_string(n) + "]"));
        out.push_back(group_fiber(f, klein_four(), tag + "[C2xC2]"));
        out.push_back(direct_sum(group_fiber(f, cyclic(2), "C2"), group_fiber(f, cyclic(2), "C2")));
        out.push_back(direct_sum(group_fiber(f, cyclic(1), "k"), group_fiber(f, cyclic(3), "C3")));
        auto random_matrix = [&](std::size_t k) {
            Matrix<PrimeField> m(f, k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) m(r, c) = f.from_int(static_cast<long>(rng() % p));
            return m;
        };
        std::size_t made = 0;
        for (int attempt = 0; made < 24 && attempt < 2000; ++attempt) {
            const std::size_t k = 2 + attempt % 3;  // Mat_2, Mat_3, Mat_4
            std::vector<Matrix<PrimeField>> gens{random_matrix(k)};
            if (attempt % 4 == 3) {
                // sparse second generator keeps the span small
                Matrix<PrimeField> e(f, k, k);
                e(rng() % k, rng() % k) = f.one();
                gens.push_back(e);
            }
            auto A = matrix_subalgebra(f, k, gens, 4, tag + "-sub" + std::to_string(made));
            if (!A || A->dim() < 2) continue;
            out.push_back(*A);
            ++made;
        }
    }
    return out;
}

/// All subspaces of F_p^n, each as a reduced echelon basis.
inline std::vector<std::vector<FpVec>> all_subspaces(const PrimeField& f, std::size_t n) {
    std::vector<std::vector<FpVec>> out;
    const std::uint64_t p = f.characteristic();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < n; ++c)
            if (mask & (1u << c)) piv.push_back(c);
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!(mask & (1u << c))) free.emplace_back(r, c);
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free.size(); ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FpVec> rows(piv.size(), FpVec(n, f.zero()));
            for (std::size_t r = 0; r < piv.size(); ++r) rows[r][piv[r]] = f.one();
            std::uint64_t t = idx;
            for (const auto& [r, c] : free) {
                rows[r][c] = f.from_int(static_cast<long>(t % p));
                t /= p;
            }
            out.push_back(rows);
        }
    }
    return out;
}

inline bool in_span(const PrimeField& f, std::size_t n, const std::vector<FpVec>& rows, const FpVec& v) {
    Subspace<PrimeField> S(f, n);
    for (const auto& r : rows) S.insert(r);
    return S.contains(v);
}

inline bool is_two_sided_ideal(const FiberAlgebra<PrimeField>& A, const std::vector<FpVec>& I) {
    Subspace<PrimeField> S(A.field, A.dim());
    for (const auto& r : I) S.insert(r);
    for (const auto& x : I)
        for (std::size_t i = 0; i < A.dim(); ++i) {
            auto b = A.basis_vector(i);
            if (!S.contains(A.mul(b, x)) || !S.contains(A.mul(x, b))) return false;
        }
    return true;
}

/// I^m = 0 for some m, by computing the descending chain of products.
inline bool is_nilpotent_ideal(const FiberAlgebra<PrimeField>& A, const std::vector<FpVec>& I) {
    std::vector<FpVec> power = I;
    for (std::size_t step = 0; step <= A.dim() + 1; ++step) {
        if (power.empty()) return true;
        Subspace<PrimeField> next(A.field, A.dim());
        for (const auto& x : power)
            for (const auto& y : I) next.insert(A.mul(x, y));
        if (next.dim() == power.size()) return false;  // chain stalled at a nonzero ideal
        power = next.basis();
    }
    return power.empty();
}

struct RadicalOracle {
    std::vector<FpVec> radical;     // largest nilpotent two-sided ideal
    bool contains_all = false;      // every nilpotent ideal lies inside it
    std::size_t subspaces = 0;
};

inline RadicalOracle brute_radical(const FiberAlgebra<PrimeField>& A) {
    RadicalOracle o;
    std::vector<std::vector<FpVec>> nilpotent;
    for (const auto& S : all_subspaces(A.field, A.dim())) {
        ++o.subspaces;
        if (is_two_sided_ideal(A, S) && is_nilpotent_ideal(A, S)) nilpotent.push_back(S);
    }
    for (const auto& S : nilpotent)
        if (S.size() > o.radical.size() || (o.radical.empty() && S.empty())) o.radical = S;
    o.contains_all = true;
    for (const auto& S : nilpotent)
        for (const auto& v : S) o.contains_all = o.contains_all && in_span(A.field, A.dim(), o.radical, v);
    return o;
}

inline bool same_span(const PrimeField& f, std::size_t n, const std::vector<FpVec>& a, const Matrix<PrimeField>& b) {
    if (a.size() != b.rows()) return false;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (!in_span(f, n, a, b.row(i))) return false;
    return true;
}

// ---------------------------------------------------------------------------------------------
// Character tables

/// Class function given on conjugacy classes, with a map from group elements to classes.
struct CharacterTable {
    std::vector<std::vector<std::size_t>> table;  // multiplication, identity at 0
    std::vector<std::size_t> klass;               // element -> class
    std::vector<std::vector<long>> chars;          // irreducible characters on classes
};

/// S3 with elements e, (12), (23), (13), (123), (132).
inline CharacterTable s3_characters() {
    using P = std::array<int, 3>;
    const std::vector<P> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    CharacterTable ct;
    ct.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            P c{};
            for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
            for (std::size_t l = 0; l < 6; ++l)
                if (perms[l] == c) ct.table[i][j] = l;
        }
    ct.klass = {0, 1, 1, 1, 2, 2};
    ct.chars = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
    return ct;
}

inline CharacterTable c2_characters() {
    return CharacterTable{cyclic(2), {0, 1}, {{1, 1}, {1, -1}}};
}

/// Schur elements for tau(g) = [g = 1], from tau = sum_chi chi / c_chi solved on class
/// representatives. Also checks first orthogonality.
inline std::vector<Rational> schur_from_characters(const CharacterTable& ct) {
    const std::size_t n = ct.table.size(), r = ct.chars.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (ct.table[g][h] == 0) inv[g] = h;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            long s = 0;
            for (std::size_t g = 0; g < n; ++g) s += ct.chars[a][ct.klass[g]] * ct.chars[b][ct.klass[inv[g]]];
            if (s != (a == b ? static_cast<long>(n) : 0)) throw std::logic_error("character table is not orthogonal");
        }
    Rationals Q;
    Matrix<Rationals> M(Q, r, r);
    Vec<Rationals> rhs(r, Rational(0));
    rhs[0] = Rational(1);  // class 0 holds the identity
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t c = 0; c < r; ++c) M(k, c) = Rational(ct.chars[c][k]);
    auto x = solve(M, rhs);
    std::vector<Rational> out;
    for (const auto& v : x) out.push_back(Rational(1) / v);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Brauer algebra B_2: one-dimensional representations s -> sigma, u -> upsilon with
// sigma^2 = 1, upsilon^2 = delta upsilon, sigma upsilon = upsilon sigma = upsilon.

struct B2Character {
    long sigma;
    bool upsilon_is_delta;  // upsilon = delta rather than 0
};

/// Characters of B_2 over a field in which delta takes the value d (d == 0 or not).
inline std::vector<B2Character> b2_characters(bool delta_is_zero) {
    std::vector<B2Character> out;
    for (long sigma : {1L, -1L})
        for (bool up : {false, true}) {
            if (up && delta_is_zero) continue;      // upsilon = delta = 0 duplicates upsilon = 0
            if (up && sigma != 1) continue;         // sigma upsilon = upsilon with upsilon != 0 forces sigma = 1
            out.push_back({sigma, up});
        }
    return out;
}

/// Decomposition matrix of B_2 at delta = 0 by reducing the generic characters: rows generic
/// characters, columns special ones, in the order returned by b2_characters.
inline std::vector<std::vector<long>> b2_decomposition_at_zero() {
    auto gen = b2_characters(false), spec = b2_characters(true);
    std::vector<std::vector<long>> d;
    for (const auto& g : gen) {
        std::vector<long> row;
        for (const auto& s : spec) row.push_back(g.sigma == s.sigma && !s.upsilon_is_delta ? 1 : 0);
        d.push_back(row);
    }
    return d;
}

}  // namespace oracle

#endif  // DECOMPGEN_TESTS_ORACLES_HPP
