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

#ifndef DECOMPGEN_MODULES_HPP
#define DECOMPGEN_MODULES_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "algebra.hpp"
#include "factor.hpp"
#include "gcd_free.hpp"
#include "matrix.hpp"

namespace decompgen {

/// A left module over a fiber algebra: act[i] is the matrix of b_i on column vectors.
template <ExactField F>
struct AlgebraModule {
    F field;
    std::size_t dim = 0;
    std::vector<Matrix<F>> act;

    Matrix<F> action(const Vec<F>& a) const {
        Matrix<F> m(field, dim, dim);
        for (std::size_t i = 0; i < act.size(); ++i)
            if (!scalar_is_zero(a[i])) m = m + act[i].scaled(a[i]);
        return m;
    }
};

template <ExactField F>
AlgebraModule<F> regular_module(const FiberAlgebra<F>& A) {
    AlgebraModule<F> M{A.field, A.dim(), {}};
    for (std::size_t i = 0; i < A.dim(); ++i) M.act.push_back(left_regular_matrix(A, A.basis_vector(i)));
    return M;
}

/// act(b_i) act(b_j) = sum_k c_ijk act(b_k) and act(1) = identity.
template <ExactField F>
void validate_module(const FiberAlgebra<F>& A, const AlgebraModule<F>& M) {
    const std::size_t n = A.dim();
    require(M.act.size() == n, ErrorCode::DimensionMismatch, "module needs one matrix per basis element");
    require(M.action(A.unit) == Matrix<F>::identity(M.field, M.dim), ErrorCode::NoUnit, "unit does not act as identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<F> c(n, A.field.zero());
            for (std::size_t k = 0; k < n; ++k) c[k] = A.at(i, j, k);
            require(M.act[i] * M.act[j] == M.action(c), ErrorCode::NotAssociative,
                    "action does not respect the structure constants");
        }
}

/// Smallest invariant subspace containing the seeds.
template <ExactField F>
Subspace<F> spin(const std::vector<Matrix<F>>& act, std::size_t dim, const F& field, const std::vector<Vec<F>>& seeds) {
    Subspace<F> S(field, dim);
    std::vector<Vec<F>> queue;
    for (const auto& v : seeds)
        if (S.insert(v)) queue.push_back(v);
    while (!queue.empty()) {
        Vec<F> v = std::move(queue.back());
        queue.pop_back();
        for (const auto& a : act) {
            Vec<F> w = a * v;
            if (S.insert(w)) queue.push_back(std::move(w));
        }
    }
    return S;
}

template <ExactField F>
AlgebraModule<F> submodule(const AlgebraModule<F>& M, const Subspace<F>& W) {
    AlgebraModule<F> S{M.field, W.dim(), {}};
    for (const auto& a : M.act) {
        Matrix<F> m(M.field, W.dim(), W.dim());
        for (std::size_t j = 0; j < W.dim(); ++j) {
            Vec<F> c = W.coordinates(a * W.basis()[j]);
            for (std::size_t i = 0; i < W.dim(); ++i) m(i, j) = c[i];
        }
        S.act.push_back(std::move(m));
    }
    return S;
}

template <ExactField F>
AlgebraModule<F> quotient_module(const AlgebraModule<F>& M, const Subspace<F>& W) {
    std::vector<bool> is_piv(M.dim, false);
    for (auto p : W.pivots()) is_piv[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < M.dim; ++j)
        if (!is_piv[j]) keep.push_back(j);
    AlgebraModule<F> Q{M.field, keep.size(), {}};
    for (const auto& a : M.act) {
        Matrix<F> m(M.field, keep.size(), keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) {
            Vec<F> e(M.dim, M.field.zero());
            e[keep[j]] = M.field.one();
            Vec<F> r = W.reduce(a * e);
            for (std::size_t i = 0; i < keep.size(); ++i) m(i, j) = r[keep[i]];
        }
        Q.act.push_back(std::move(m));
    }
    return Q;
}

// ---------------------------------------------------------------------------------------------
// Fingerprints

/// Characteristic polynomials of the basis elements acting on a module.
template <ExactField F>
struct Fingerprint {
    std::vector<UPoly<F>> chi;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.chi == b.chi; }
};

template <ExactField F>
Fingerprint<F> fingerprint(const AlgebraModule<F>& M) {
    Fingerprint<F> fp;
    for (const auto& a : M.act) fp.chi.push_back(char_poly(a));
    return fp;
}

/// Total order on polynomials: degree, then coefficients from the top.
template <ExactField F>
int compare_polys(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = f.compare(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
        if (c != 0) return c;
    }
    return 0;
}

template <ExactField F>
int compare_fingerprints(const F& f, const Fingerprint<F>& a, const Fingerprint<F>& b) {
    for (std::size_t i = 0; i < std::min(a.chi.size(), b.chi.size()); ++i) {
        int c = compare_polys(f, a.chi[i], b.chi[i]);
        if (c != 0) return c;
    }
    return a.chi.size() < b.chi.size() ? -1 : (a.chi.size() > b.chi.size() ? 1 : 0);
}

// ---------------------------------------------------------------------------------------------
// Hom spaces

/// dim_F Hom_A(M, N): solutions X (N.dim x M.dim) of X act_M(b_i) = act_N(b_i) X.
template <ExactField F>
std::size_t hom_dimension(const AlgebraModule<F>& M, const AlgebraModule<F>& N) {
    const std::size_t m = M.dim, n = N.dim;
    if (m == 0 || n == 0) return 0;
    const F& f = M.field;
    std::vector<Vec<F>> eqs;
    // unknown X(r, c) has index r*m + c
    for (std::size_t t = 0; t < M.act.size(); ++t) {
        const auto& A = M.act[t];
        const auto& B = N.act[t];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                Vec<F> row(n * m, f.zero());
                bool any = false;
                for (std::size_t k = 0; k < m; ++k)
                    if (!scalar_is_zero(A(k, c))) {
                        row[r * m + k] += A(k, c);
                        any = true;
                    }
                for (std::size_t k = 0; k < n; ++k)
                    if (!scalar_is_zero(B(r, k))) {
                        row[k * m + c] -= B(r, k);
                        any = true;
                    }
                if (any) eqs.push_back(std::move(row));
            }
    }
    if (eqs.empty()) return n * m;
    return n * m - rank(Matrix<F>(f, eqs));
}

template <ExactField F>
std::size_t endomorphism_dimension(const AlgebraModule<F>& S) {
    return hom_dimension(S, S);
}

// ---------------------------------------------------------------------------------------------
// Chop

struct ChopOptions {
    std::uint64_t seed = 1;
    std::size_t budget = 400;  // algebra elements tried per module before giving up
    bool verify = false;       // cross-check fingerprint identification with Hom dimensions
};

template <ExactField F>
struct CompositionFactor {
    AlgebraModule<F> module;
    Fingerprint<F> fp;
    std::size_t multiplicity = 0;
};

namespace detail {

/// The t-th algebra element of the search schedule: basis elements, then sums and differences
/// of pairs, then random combinations (integer window growing with t, or uniform over finite fields).
template <ExactField F>
Vec<F> schedule_element(const F& f, std::size_t n, std::size_t t, std::mt19937_64& rng) {
    Vec<F> a(n, f.zero());
    if (t < n) {
        a[t] = f.one();
        return a;
    }
    t -= n;
    const std::size_t pairs = n * (n - 1) / 2;
    if (t < 2 * pairs) {
        std::size_t idx = t / 2;
        std::size_t i = 0;
        while (idx >= n - 1 - i) {
            idx -= n - 1 - i;
            ++i;
        }
        std::size_t j = i + 1 + idx;
        a[i] = f.one();
        a[j] = t % 2 == 0 ? f.one() : -f.one();
        return a;
    }
    t -= 2 * pairs;
    if constexpr (FiniteExactField<F>) {
        for (auto& x : a) x = f.random(rng);
    } else {
        const long w = 2 + static_cast<long>(t / 16);
        std::uniform_int_distribution<long> d(-w, w);
        for (auto& x : a) x = f.from_int(d(rng));
    }
    return a;
}

/// Candidate polynomials g with g(a) singular: irreducible factors where factorization is
/// available, otherwise linear factors from roots plus the square-free pieces.
template <ExactField F>
std::vector<std::pair<UPoly<F>, bool>> splitting_polys(const UPoly<F>& chi) {
    std::vector<std::pair<UPoly<F>, bool>> out;  // (g, g known irreducible)
    if constexpr (kCanFactor<F>) {
        for (auto& [g, e] : factor_univariate(chi).factors) out.emplace_back(g, true);
    } else {
        for (const auto& r : field_roots(chi)) out.emplace_back(UPoly<F>::linear(chi.field(), r), true);
        for (const auto& [s, e] : squarefree_decomposition(chi)) out.emplace_back(s, s.degree() == 1);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
    return out;
}

/// Burnside: the image of the algebra is all of End(M).
template <ExactField F>
bool absolutely_simple(const AlgebraModule<F>& M) {
    const std::size_t d = M.dim;
    std::vector<Vec<F>> rows;
    for (const auto& a : M.act) {
        Vec<F> v;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) v.push_back(a(i, j));
        rows.push_back(std::move(v));
    }
    return rank(Matrix<F>(M.field, rows)) == d * d;
}

template <ExactField F>
std::vector<Matrix<F>> transposes(const std::vector<Matrix<F>>& act) {
    std::vector<Matrix<F>> out;
    for (const auto& a : act) out.push_back(a.transpose());
    return out;
}

/// A proper nonzero submodule, or nullopt when M is certified simple.
template <ExactField F>
std::optional<Subspace<F>> find_submodule(const AlgebraModule<F>& M, std::mt19937_64& rng, std::size_t budget) {
    const std::size_t d = M.dim;
    const F& f = M.field;
    if (d <= 1 || absolutely_simple(M)) return std::nullopt;
    const auto tact = transposes(M.act);
    const std::size_t n = M.act.size();
    for (std::size_t t = 0; t < budget; ++t) {
        Vec<F> a = schedule_element(f, n, t, rng);
        Matrix<F> ra = M.action(a);
        UPoly<F> chi = char_poly(ra);
        for (const auto& [g, irreducible] : splitting_polys(chi)) {
            if (g.degree() >= static_cast<int>(d) && !irreducible) continue;
            Matrix<F> ga = eval_at(g, ra);
            Matrix<F> ker = kernel(ga);
            if (ker.rows() == 0) continue;
            const std::size_t tries = std::min<std::size_t>(ker.rows(), 3);
            for (std::size_t i = 0; i < tries; ++i) {
                auto W = spin(M.act, d, f, {ker.row(i)});
                if (W.dim() < d) return W;
            }
            Matrix<F> kerT = kernel(ga.transpose());
            for (std::size_t i = 0; i < std::min<std::size_t>(kerT.rows(), 3); ++i) {
                auto U = spin(tact, d, f, {kerT.row(i)});
                if (U.dim() < d) {
                    // the annihilator of U is a proper submodule
                    Matrix<F> ann = kernel(U.matrix());
                    Subspace<F> W(f, d);
                    for (const auto& r : ann.row_list()) W.insert(r);
                    return W;
                }
            }
            if (irreducible && ker.rows() == static_cast<std::size_t>(g.degree()))
                return std::nullopt;  // Norton: every kernel vector generates M and M*
        }
    }
    fail(ErrorCode::ChopBudgetExceeded,
         "no submodule or simplicity certificate after " + std::to_string(budget) + " algebra elements (module dimension " +
             std::to_string(d) + " over " + f.name() + ")");
}

}  // namespace detail

/// Composition factors with multiplicities, deduplicated by fingerprint and sorted by
/// (dimension, fingerprint).
template <ExactField F>
std::vector<CompositionFactor<F>> chop(const AlgebraModule<F>& M, const ChopOptions& opt = {}) {
    std::mt19937_64 rng(opt.seed);
    std::vector<CompositionFactor<F>> out;
    std::vector<AlgebraModule<F>> work{M};
    while (!work.empty()) {
        AlgebraModule<F> cur = std::move(work.back());
        work.pop_back();
        if (cur.dim == 0) continue;
        auto W = detail::find_submodule(cur, rng, opt.budget);
        if (W) {
            work.push_back(submodule(cur, *W));
            work.push_back(quotient_module(cur, *W));
            continue;
        }
        Fingerprint<F> fp = fingerprint(cur);
        bool found = false;
        for (auto& cf : out) {
            if (cf.fp == fp) {
                if (opt.verify)
                    require(hom_dimension(cf.module, cur) > 0, ErrorCode::InternalError,
                            "equal fingerprints but no homomorphism between simples");
                ++cf.multiplicity;
                found = true;
                break;
            }
        }
        if (!found) out.push_back({cur, fp, 1});
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.module.dim != b.module.dim) return a.module.dim < b.module.dim;
        return compare_fingerprints(M.field, a.fp, b.fp) < 0;
    });
    if (opt.verify)
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                require(hom_dimension(out[i].module, out[j].module) == 0, ErrorCode::InternalError,
                        "distinct fingerprints but isomorphic simples");
    return out;
}

/// Isomorphism test for simple modules (fingerprint comparison, optional Hom cross-check).
template <ExactField F>
bool is_isomorphic(const AlgebraModule<F>& S, const AlgebraModule<F>& T, bool verify = false) {
    if (S.dim != T.dim) return false;
    bool same = fingerprint(S) == fingerprint(T);
    if (verify) require(same == (hom_dimension(S, T) > 0), ErrorCode::InternalError, "fingerprint and Hom test disagree");
    return same;
}

// ---------------------------------------------------------------------------------------------
// Radical and Wedderburn data

/// Trace form T[i][j] = tr(L_{b_i b_j}).
template <ExactField F>
Matrix<F> trace_gram(const FiberAlgebra<F>& A) {
    const std::size_t n = A.dim();
    Vec<F> t(n, A.field.zero());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) t[k] += A.at(k, j, j);
    Matrix<F> T(A.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_is_zero(A.at(i, j, k))) T(i, j) += A.at(i, j, k) * t[k];
    return T;
}

/// Joint kernel of the actions on the given modules: {a : act_S(a) = 0 for all S}.
template <ExactField F>
Matrix<F> annihilator(const FiberAlgebra<F>& A, const std::vector<CompositionFactor<F>>& simples) {
    const std::size_t n = A.dim();
    std::vector<Vec<F>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& s : simples)
            for (std::size_t r = 0; r < s.module.dim; ++r)
                for (std::size_t c = 0; c < s.module.dim; ++c) rows[i].push_back(s.module.act[i](r, c));
    if (rows[0].empty()) return Matrix<F>::identity(A.field, n);
    return left_kernel(Matrix<F>(A.field, rows));
}

template <ExactField F>
void check_radical(const FiberAlgebra<F>& A, const Matrix<F>& J) {
    require(nilpotency_index(A, J).has_value(), ErrorCode::RadicalNotNilpotent, "computed radical is not nilpotent");
    require(ideal_closure(A, J.row_list()).rows() == J.rows(), ErrorCode::RadicalNotNilpotent,
            "computed radical is not a two-sided ideal");
}

/// Jacobson radical as a reduced echelon basis (trace form in characteristic 0, annihilator of
/// the simples in characteristic p), verified nilpotent.
template <ExactField F>
Matrix<F> radical(const FiberAlgebra<F>& A, const ChopOptions& opt = {}) {
    Matrix<F> J = A.field.characteristic() == 0 ? kernel(trace_gram(A)) : annihilator(A, chop(regular_module(A), opt));
    check_radical(A, J);
    return J;
}

template <ExactField F>
struct WedderburnData {
    std::vector<CompositionFactor<F>> simples;  // multiplicity = multiplicity in A/J
    std::vector<std::size_t> endo_dims;
    std::vector<std::size_t> composition_mult;  // multiplicity as composition factor of A
    Matrix<F> radical;
    std::size_t radical_dim = 0;
    bool split = true;
};

template <ExactField F>
WedderburnData<F> wedderburn(const FiberAlgebra<F>& A, const ChopOptions& opt = {}) {
    WedderburnData<F> w;
    w.simples = chop(regular_module(A), opt);
    w.radical = A.field.characteristic() == 0 ? kernel(trace_gram(A)) : annihilator(A, w.simples);
    check_radical(A, w.radical);
    w.radical_dim = w.radical.rows();
    std::size_t total = w.radical_dim;
    for (auto& s : w.simples) {
        std::size_t e = endomorphism_dimension(s.module);
        require(e > 0 && s.module.dim % e == 0, ErrorCode::InternalError, "endomorphism dimension does not divide");
        w.endo_dims.push_back(e);
        w.composition_mult.push_back(s.multiplicity);
        s.multiplicity = s.module.dim / e;
        total += s.multiplicity * s.module.dim;
        if (e != 1) w.split = false;
    }
    require(total == A.dim(), ErrorCode::InternalError, "Wedderburn bookkeeping fails: r + sum m_i dim S_i != dim A");
    return w;
}

template <ExactField F>
bool is_split(const FiberAlgebra<F>& A, const ChopOptions& opt = {}) {
    return wedderburn(A, opt).split;
}

}  // namespace decompgen

#endif  // DECOMPGEN_MODULES_HPP
