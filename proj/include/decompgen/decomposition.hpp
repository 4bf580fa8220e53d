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

#ifndef DECOMPGEN_DECOMPOSITION_HPP
#define DECOMPGEN_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "brauer_nesbitt.hpp"
#include "gcd_free.hpp"

namespace decompgen {

/// A fiber together with its simples and radical.
template <ExactField F>
struct FiberInfo {
    std::string prime;
    FiberAlgebra<F> algebra;
    WedderburnData<F> wd;

    const F& field() const { return algebra.field; }
};

using AnyFiberInfo = std::variant<FiberInfo<Rationals>, FiberInfo<PrimeField>, FiberInfo<FiniteField>,
                                  FiberInfo<FunctionField<Rationals>>, FiberInfo<FunctionField<PrimeField>>>;

inline std::size_t radical_dim(const AnyFiberInfo& f) {
    return std::visit([](const auto& x) { return x.wd.radical_dim; }, f);
}
inline bool is_split(const AnyFiberInfo& f) {
    return std::visit([](const auto& x) { return x.wd.split; }, f);
}
inline std::string field_name(const AnyFiberInfo& f) {
    return std::visit([](const auto& x) { return x.field().name(); }, f);
}
inline std::vector<std::size_t> simple_dims(const AnyFiberInfo& f) {
    return std::visit(
        [](const auto& x) {
            std::vector<std::size_t> d;
            for (const auto& s : x.wd.simples) d.push_back(s.module.dim);
            return d;
        },
        f);
}
inline std::vector<std::string> simple_labels(const AnyFiberInfo& f) {
    return std::visit(
        [](const auto& x) {
            std::vector<std::string> d;
            for (const auto& s : x.wd.simples) d.push_back(simple_label(x.field(), s));
            return d;
        },
        f);
}

inline AnyFiberInfo analyze_fiber(const AnyFiber& fiber, const std::string& prime, const ChopOptions& opt) {
    return std::visit(
        [&](const auto& A) -> AnyFiberInfo {
            using F = std::decay_t<decltype(A.field)>;
            return FiberInfo<F>{prime, A, wedderburn(A, opt)};
        },
        fiber);
}

/// Caches the generic fiber and the fibers already visited.
template <ExactField K>
class Analysis {
public:
    explicit Analysis(FiniteFreeAlgebra<K> A, ChopOptions opt = {}) : A_(std::move(A)), opt_(opt) {}

    const FiniteFreeAlgebra<K>& algebra() const { return A_; }
    const Ring<K>& ring() const { return A_.ring; }
    const ChopOptions& options() const { return opt_; }

    const AnyFiberInfo& generic() { return fiber(PrimeSpec<K>::generic(A_.ring)); }

    const AnyFiberInfo& fiber(const PrimeSpec<K>& p) {
        const std::string key = p.str();
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, analyze_fiber(specialize(A_, p), key, opt_)).first;
        return it->second;
    }

private:
    FiniteFreeAlgebra<K> A_;
    ChopOptions opt_;
    std::map<std::string, AnyFiberInfo> cache_;
};

template <ExactField K, class FG>
inline constexpr bool kIsFractionFieldOf = std::is_same_v<FG, K> || std::is_same_v<FG, FunctionField<K>>;

// ---------------------------------------------------------------------------------------------
// Decomposition matrices

struct DecompositionMatrix {
    std::string algebra;
    std::string prime;
    std::vector<std::string> rows;  // generic simples
    std::vector<std::string> cols;  // fiber simples
    std::vector<std::size_t> row_dims, col_dims;
    std::vector<std::vector<long>> d;

    friend bool operator==(const DecompositionMatrix& a, const DecompositionMatrix& b) { return a.d == b.d; }

    std::string table() const {
        std::vector<std::string> head{""};
        for (const auto& c : cols) head.push_back(c);
        std::vector<std::vector<std::string>> cells{head};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<std::string> r{rows[i]};
            for (long x : d[i]) r.push_back(std::to_string(x));
            cells.push_back(r);
        }
        std::vector<std::size_t> w(head.size(), 0);
        for (const auto& r : cells)
            for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
        std::string out;
        for (const auto& r : cells) {
            for (std::size_t j = 0; j < r.size(); ++j) {
                out += r[j] + std::string(w[j] - r[j].size(), ' ');
                out += j + 1 < r.size() ? "  " : "";
            }
            while (!out.empty() && out.back() == ' ') out.pop_back();
            out += '\n';
        }
        return out;
    }

    std::string compact() const {
        std::string out = "[";
        for (std::size_t i = 0; i < d.size(); ++i) {
            out += i ? ",[" : "[";
            for (std::size_t j = 0; j < d[i].size(); ++j) out += (j ? "," : "") + std::to_string(d[i][j]);
            out += "]";
        }
        return out + "]";
    }
};

namespace detail {

inline void enumerate_solutions(const Matrix<Rationals>& M, const Vec<Rationals>& b,
                                const std::vector<long>& bound, std::vector<long>& cur, std::size_t j,
                                std::vector<std::vector<long>>& found) {
    if (found.size() > 1) return;
    if (j == bound.size()) {
        for (std::size_t r = 0; r < M.rows(); ++r) {
            Rational s(0);
            for (std::size_t c = 0; c < M.cols(); ++c) s += M(r, c) * Rational(cur[c]);
            if (!(s == b[r])) return;
        }
        found.push_back(cur);
        return;
    }
    for (long v = 0; v <= bound[j]; ++v) {
        cur[j] = v;
        enumerate_solutions(M, b, bound, cur, j + 1, found);
    }
    cur[j] = 0;
}

}  // namespace detail

/// Solves the fingerprint multiplicity system for each row over a common gcd-free basis.
template <ExactField F>
std::vector<std::vector<long>> solve_multiplicities(const std::vector<Fingerprint<F>>& rows,
                                                    const std::vector<std::size_t>& row_dims,
                                                    const std::vector<Fingerprint<F>>& cols,
                                                    const std::vector<std::size_t>& col_dims) {
    const std::size_t l = cols.size();
    require(l > 0, ErrorCode::NoIntegerSolution, "fiber has no simple modules");
    const std::size_t nb = cols[0].chi.size();
    std::vector<UPoly<F>> all;
    for (const auto& c : cols) all.insert(all.end(), c.chi.begin(), c.chi.end());
    for (const auto& r : rows) all.insert(all.end(), r.chi.begin(), r.chi.end());
    const GcdFreeBasis<F> gb = gcd_free_basis(all);
    const std::size_t ng = gb.basis.size();
    auto mult = [&](std::size_t poly, std::size_t g) { return Rational(static_cast<long>(gb.mult[poly][g])); };

    Matrix<Rationals> M(Rationals{}, nb * ng, l);
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t j = 0; j < l; ++j) M(k * ng + g, j) = mult(j * nb + k, g);
    const bool unique = rank(M) == l;

    std::vector<std::vector<long>> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Vec<Rationals> b(nb * ng, Rational(0));
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t g = 0; g < ng; ++g) b[k * ng + g] = mult((l + i) * nb + k, g);
        std::vector<long> row(l, 0);
        if (unique) {
            Vec<Rationals> x;
            try {
                x = solve(M, b);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Inconsistent) throw;
                fail(ErrorCode::NoIntegerSolution, "fingerprint system for generic simple " + std::to_string(i + 1) +
                                                       " has no solution");
            }
            for (std::size_t j = 0; j < l; ++j) {
                require(x[j].den() == 1 && x[j].sign() >= 0, ErrorCode::NoIntegerSolution,
                        "fingerprint system has a non-integral or negative solution " + x[j].str());
                row[j] = x[j].num().get_si();
            }
        } else {
            std::vector<long> bound(l), cur(l, 0);
            for (std::size_t j = 0; j < l; ++j) bound[j] = static_cast<long>(row_dims[i] / col_dims[j]);
            std::vector<std::vector<long>> found;
            detail::enumerate_solutions(M, b, bound, cur, 0, found);
            require(found.size() == 1, ErrorCode::NoIntegerSolution,
                    found.empty() ? "no nonnegative integer solution" : "solution is not unique");
            row = found[0];
        }
        std::size_t total = 0;
        for (std::size_t j = 0; j < l; ++j) total += static_cast<std::size_t>(row[j]) * col_dims[j];
        require(total == row_dims[i], ErrorCode::NoIntegerSolution, "dimension bookkeeping fails for a generic simple");
        out.push_back(row);
    }
    for (std::size_t j = 0; j < l; ++j) {
        bool hit = false;
        for (const auto& r : out) hit = hit || r[j] != 0;
        require(hit, ErrorCode::NoIntegerSolution, "fiber simple " + std::to_string(j + 1) + " is not reached");
    }
    return out;
}

inline void require_split(const AnyFiberInfo& f, const std::string& what) {
    require(is_split(f), ErrorCode::NotSplit, what + " over " + field_name(f) + " is not split");
}

/// Decomposition matrix from the generic fiber to A(p), rows and columns in canonical order.
template <ExactField K>
DecompositionMatrix decomposition_matrix(Analysis<K>& an, const PrimeSpec<K>& p) {
    const AnyFiberInfo& G = an.generic();
    const AnyFiberInfo& S = an.fiber(p);
    require_split(G, "generic fiber");
    require_split(S, "fiber at " + p.str());
    DecompositionMatrix D;
    D.algebra = an.algebra().name;
    D.prime = p.str();
    D.rows = simple_labels(G);
    D.cols = simple_labels(S);
    D.row_dims = simple_dims(G);
    D.col_dims = simple_dims(S);
    D.d = std::visit(
        [&](const auto& g, const auto& s) -> std::vector<std::vector<long>> {
            using FG = std::decay_t<decltype(g.field())>;
            using FR = std::decay_t<decltype(s.field())>;
            if constexpr (!kIsFractionFieldOf<K, FG>) {
                fail(ErrorCode::InternalError, "generic fiber over an unexpected field");
            } else {
                const auto& rm = std::get<ResidueMap<FR>>(p.residue());
                std::vector<Fingerprint<FR>> rows, cols;
                for (const auto& x : g.wd.simples) rows.push_back(reduce_fingerprint(an.ring(), rm, x.fp));
                for (const auto& x : s.wd.simples) cols.push_back(x.fp);
                return solve_multiplicities(rows, D.row_dims, cols, D.col_dims);
            }
        },
        G, S);
    return D;
}

/// Permutation matrix test.
inline bool is_trivial(const DecompositionMatrix& D) {
    const std::size_t m = D.d.size();
    if (m == 0) return D.cols.empty();
    if (D.d[0].size() != m) return false;
    std::vector<int> colsum(m, 0);
    for (const auto& r : D.d) {
        int rs = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (r[j] != 0 && r[j] != 1) return false;
            rs += static_cast<int>(r[j]);
            colsum[j] += static_cast<int>(r[j]);
        }
        if (rs != 1) return false;
    }
    for (int c : colsum)
        if (c != 1) return false;
    return true;
}

/// dim Jac(generic fiber) == dim Jac(A(p)); both fibers must be split.
template <ExactField K>
bool triviality_by_radical(Analysis<K>& an, const PrimeSpec<K>& p) {
    const AnyFiberInfo& G = an.generic();
    const AnyFiberInfo& S = an.fiber(p);
    require_split(G, "generic fiber");
    require_split(S, "fiber at " + p.str());
    const std::size_t g = radical_dim(G), s = radical_dim(S);
    require(s >= g, ErrorCode::InternalError,
            "radical of the fiber at " + p.str() + " is smaller than the generic radical");
    return g == s;
}

struct Membership {
    bool trivial = false;
    std::size_t generic_radical = 0;
    std::size_t fiber_radical = 0;
    std::optional<DecompositionMatrix> matrix;
};

/// Triviality at p by radical dimensions; with `verify` the matrix is computed and must agree.
template <ExactField K>
Membership dec_gen_membership(Analysis<K>& an, const PrimeSpec<K>& p, bool verify) {
    Membership m;
    m.trivial = triviality_by_radical(an, p);
    m.generic_radical = radical_dim(an.generic());
    m.fiber_radical = radical_dim(an.fiber(p));
    if (verify) {
        m.matrix = decomposition_matrix(an, p);
        require(is_trivial(*m.matrix) == m.trivial, ErrorCode::InternalError,
                "decomposition matrix at " + p.str() + " disagrees with the radical criterion");
    }
    return m;
}

// ---------------------------------------------------------------------------------------------
// Composability d^q = d^{q/p}_{A|p} o d^p, reported only

struct ComposabilityReport {
    DecompositionMatrix direct;      // generic -> q
    DecompositionMatrix first;       // generic -> p
    DecompositionMatrix second;      // A|p: generic -> q/p
    bool holds = false;
};

inline std::vector<std::vector<long>> multiply(const std::vector<std::vector<long>>& a,
                                               const std::vector<std::vector<long>>& b) {
    if (a.empty()) return {};
    std::vector<std::vector<long>> out(a.size(), std::vector<long>(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

template <ExactField K>
ComposabilityReport composability(Analysis<K>& an, const PrimeSpec<K>& p, const PrimeSpec<K>& q) {
    require(q.contains(p), ErrorCode::Inconsistent, q.str() + " does not contain " + p.str());
    ComposabilityReport r;
    r.direct = decomposition_matrix(an, q);
    r.first = decomposition_matrix(an, p);
    std::visit(
        [&](const auto& res) {
            using K2 = std::decay_t<decltype(res.algebra.ring.field)>;
            std::vector<MPoly<K2>> g;
            for (const auto& x : q.gens()) g.push_back(res.map(x));
            auto qq = PrimeSpec<K2>::make(res.algebra.ring, g);
            Analysis<K2> sub(res.algebra, an.options());
            r.second = decomposition_matrix(sub, qq);
        },
        restrict(an.algebra(), p));
    r.holds = multiply(r.first.d, r.second.d) == r.direct.d;
    return r;
}

}  // namespace decompgen

#endif  // DECOMPGEN_DECOMPOSITION_HPP
