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

#ifndef DECOMPGEN_STRATA_HPP
#define DECOMPGEN_STRATA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "sampling.hpp"
#include "factor.hpp"
#include "hermite.hpp"
#include "integer.hpp"

namespace decompgen {

namespace detail {

template <ExactField K, ExactField FG>
typename FG::value_type embed_ring(const FG& F, const MPoly<K>& x) {
    if constexpr (std::is_same_v<FG, K>) {
        (void)F;
        return x.constant_value();
    } else {
        return F.from_poly(x);
    }
}

/// Gcd in R, normalized: positive over Z, primitive-times-content over Z[x], monic over k[..].
template <ExactField K>
MPoly<K> ring_gcd(const Ring<K>& R, const MPoly<K>& a, const MPoly<K>& b) {
    if (a.is_zero()) return normalize_associate(R, b);
    if (b.is_zero()) return normalize_associate(R, a);
    if constexpr (std::is_same_v<K, Rationals>) {
        if (R.desc.integral()) {
            mpz_class c;
            mpz_gcd(c.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
            MPoly<K> g = R.nvars() == 0 ? R.one() : primitive_part(gcd(a, b));
            return g.scaled(Rational(c));
        }
    }
    return gcd(a, b);
}

template <ExactField K>
MPoly<K> ring_lcm(const Ring<K>& R, const MPoly<K>& a, const MPoly<K>& b) {
    auto q = (a * b).divide_exact(ring_gcd(R, a, b));
    require(q.has_value(), ErrorCode::InternalError, "lcm: gcd does not divide");
    return normalize_associate(R, *q);
}

/// Scales a vector over Frac(R) into R and removes the content.
template <ExactField K, ExactField FG>
std::vector<MPoly<K>> clear_denominators(const Ring<K>& R, const FG& F, const std::vector<typename FG::value_type>& v) {
    MPoly<K> d = R.one();
    for (const auto& a : v) d = ring_lcm(R, d, denominator_ideal(R, a));
    std::vector<MPoly<K>> out;
    MPoly<K> g = R.zero();
    for (const auto& a : v) {
        out.push_back(integral_fraction(R, a * embed_ring<K>(F, d)).first);
        g = ring_gcd(R, g, out.back());
    }
    if (!g.is_zero())
        for (auto& x : out) {
            auto q = x.divide_exact(g);
            require(q.has_value(), ErrorCode::InternalError, "content does not divide");
            x = *q;
        }
    return out;
}

template <ExactField K>
bool euclidean(const Ring<K>& R) {
    return R.nvars() == 0 ? R.desc.integral() : (R.nvars() == 1 && !R.desc.integral());
}

template <ExactField K, class Ret, class F>
Ret visit_generic(const AnyFiberInfo& g, F&& f) {
    return std::visit(
        [&](const auto& info) -> Ret {
            using FG = std::decay_t<decltype(info.field())>;
            if constexpr (kIsFractionFieldOf<K, FG>) {
                return f(info);
            } else {
                fail(ErrorCode::InternalError, "generic fiber over an unexpected field");
            }
        },
        g);
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------
// Radical lattice

template <ExactField K>
struct RadicalLattice {
    std::vector<std::vector<MPoly<K>>> basis;
    bool saturated = false;
    std::size_t rank() const { return basis.size(); }
};

/// An R-lattice J_R in A with J_R tensor K = Jac(A^K); Hermite-saturated over Z and k[x].
template <ExactField K>
RadicalLattice<K> radical_lattice(Analysis<K>& an) {
    const Ring<K>& R = an.ring();
    const std::size_t n = an.algebra().dim();
    return detail::visit_generic<K, RadicalLattice<K>>(an.generic(), [&](const auto& g) {
        RadicalLattice<K> L;
        for (std::size_t i = 0; i < g.wd.radical.rows(); ++i)
            L.basis.push_back(detail::clear_denominators(R, g.field(), g.wd.radical.row(i)));
        if (detail::euclidean(R)) {
            L.basis = saturate(R, L.basis, n);
            L.saturated = true;
        }
        if (L.basis.empty()) L.saturated = true;  // the zero lattice is saturated in any ring
        // extension to K is the generic radical, closed and nilpotent
        std::vector<Vec<std::decay_t<decltype(g.field())>>> rows;
        for (const auto& r : L.basis) {
            rows.emplace_back();
            for (const auto& x : r) rows.back().push_back(detail::embed_ring<K>(g.field(), x));
        }
        require(rows.size() == g.wd.radical_dim, ErrorCode::InternalError, "radical lattice has the wrong rank");
        if (!rows.empty()) {
            Matrix<std::decay_t<decltype(g.field())>> M(g.field(), rows);
            require(rank(M) == rows.size(), ErrorCode::InternalError, "radical lattice rows are dependent");
            check_radical(g.algebra, rref(M).form);
        }
        return L;
    });
}

// ---------------------------------------------------------------------------------------------
// Candidate discriminant

template <ExactField K>
struct CandidateDiscriminant {
    MPoly<K> g;          // the candidate generator
    MPoly<K> gram;       // numerator of the Gram determinant of A/J_R
    MPoly<K> minor;      // dimension-drop factor of the lattice
    MPoly<K> denominators;
    bool simple_trace_form = false;  // regular trace form degenerate, sum of simple traces used
};

/// g = (Gram determinant of B = A/J_R) * m * d; outside V(g) the radical dimension equals the generic one.
template <ExactField K>
CandidateDiscriminant<K> candidate_discriminant(Analysis<K>& an, const RadicalLattice<K>& L) {
    const Ring<K>& R = an.ring();
    const std::size_t n = an.algebra().dim();
    CandidateDiscriminant<K> out{R.one(), R.one(), R.one(), R.one(), false};
    if (R.desc.is_field()) return out;  // Spec of a field is one point
    detail::visit_generic<K, int>(an.generic(), [&](const auto& g) {
        using FG = std::decay_t<decltype(g.field())>;
        using E = typename FG::value_type;
        const FG& F = g.field();
        const FiberAlgebra<FG>& A = g.algebra;
        const std::size_t r = L.rank();
        auto embed_row = [&](const std::vector<MPoly<K>>& row) {
            Vec<FG> v;
            for (const auto& x : row) v.push_back(detail::embed_ring<K>(F, x));
            return v;
        };
        std::vector<Vec<FG>> W;
        for (const auto& row : L.basis) W.push_back(embed_row(row));
        if (L.saturated && r > 0) {
            for (const auto& row : unimodular_completion(R, L.basis, n).complement) W.push_back(embed_row(row));
        } else if (r > 0) {
            Matrix<FG> J(F, std::vector<Vec<FG>>(W.begin(), W.end()));
            auto ech = rref(J);
            Matrix<FG> minor(F, r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) minor(i, j) = J(i, ech.pivots[j]);
            out.minor = normalize_associate(R, integral_fraction(R, det(minor)).first);
            for (std::size_t c = 0; c < n; ++c)
                if (std::find(ech.pivots.begin(), ech.pivots.end(), c) == ech.pivots.end()) W.push_back(A.basis_vector(c));
        } else {
            for (std::size_t c = 0; c < n; ++c) W.push_back(A.basis_vector(c));
        }
        const Matrix<FG> Wm(F, W);
        auto Winv = inverse(Wm);
        require(Winv.has_value(), ErrorCode::InternalError, "complement does not span");
        auto coords = [&](const Vec<FG>& v) { return v * *Winv; };
        MPoly<K> d = R.one();
        auto absorb = [&](const E& x) { d = detail::ring_lcm(R, d, denominator_ideal(R, x)); };
        // closure of J_R over R
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& prod : {A.mul(A.basis_vector(k), W[i]), A.mul(W[i], A.basis_vector(k))}) {
                    Vec<FG> c = coords(prod);
                    for (std::size_t j = 0; j < n; ++j) {
                        if (j >= r)
                            require(scalar_is_zero(c[j]), ErrorCode::InternalError, "radical lattice is not an ideal");
                        else
                            absorb(c[j]);
                    }
                }
            }
        // B = A/J_R on the complement rows
        const std::size_t m = n - r;
        FiberAlgebra<FG> B;
        B.name = A.name + "/J";
        B.field = F;
        for (std::size_t a = 0; a < m; ++a) B.basis.push_back("c" + std::to_string(a));
        B.c.assign(m * m * m, F.zero());
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vec<FG> c = coords(A.mul(W[r + a], W[r + b]));
                for (std::size_t k = 0; k < m; ++k) {
                    absorb(c[r + k]);
                    B.c[(a * m + b) * m + k] = c[r + k];
                }
            }
        E D = det(trace_gram(B));
        if (scalar_is_zero(D)) {
            // sum over the simples of tr_S(xy); nondegenerate on a split semisimple quotient
            out.simple_trace_form = true;
            std::vector<std::vector<Matrix<FG>>> acts;
            for (const auto& s : g.wd.simples) {
                for (const auto& M : s.module.act)
                    for (std::size_t i = 0; i < M.rows(); ++i)
                        for (std::size_t j = 0; j < M.cols(); ++j) absorb(M(i, j));
                std::vector<Matrix<FG>> v;
                for (std::size_t a = 0; a < m; ++a) {
                    Matrix<FG> X(F, s.module.dim, s.module.dim);
                    for (std::size_t k = 0; k < n; ++k)
                        if (!scalar_is_zero(W[r + a][k])) X = X + s.module.act[k].scaled(W[r + a][k]);
                    v.push_back(X);
                }
                acts.push_back(v);
            }
            Matrix<FG> T(F, m, m);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    for (const auto& v : acts) T(a, b) += trace(v[a] * v[b]);
            D = det(T);
            require(!scalar_is_zero(D), ErrorCode::NotSemisimpleGeneric,
                    "no nondegenerate trace certificate on A/J over " + F.name());
        }
        out.gram = normalize_associate(R, integral_fraction(R, D).first);
        out.denominators = d;
        out.g = normalize_associate(R, out.gram * out.minor * d);
        return 0;
    });
    return out;
}

// ---------------------------------------------------------------------------------------------
// Minimal primes of a principal ideal

template <ExactField K>
struct PrimeCandidate {
    MPoly<K> generator;
    std::optional<PrimeSpec<K>> prime;  // empty when the prime cannot be represented
    std::string error;
    std::string str(const Ring<K>& R) const { return prime ? prime->str() : "(" + R.format(generator) + ")"; }
};

namespace detail {

template <ExactField K>
bool is_square_constant(const K& k, const typename K::value_type& c, typename K::value_type& root) {
    if constexpr (std::is_same_v<K, Rationals>) {
        (void)k;
        if (c.sign() < 0) return false;
        mpz_class n = c.num(), d = c.den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
        mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
        root = Rational(n, d);
        return true;
    } else {
        require(k.p < (1u << 22), ErrorCode::UnsupportedFactorization, "square roots only for small primes");
        for (std::uint64_t v = 0; v < k.p; ++v) {
            Fp x{v, k.p};
            if (x * x == c) {
                root = x;
                return true;
            }
        }
        return false;
    }
}

/// Square root of a univariate polynomial (in variable v) if it is a square.
template <ExactField K>
std::optional<MPoly<K>> poly_sqrt(const MPoly<K>& a, std::size_t v) {
    const K& k = a.field();
    UPoly<K> u = a.to_upoly(v);
    auto fac = factor_univariate(u);
    typename K::value_type r = k.one();
    if (!is_square_constant(k, fac.unit, r)) return std::nullopt;
    UPoly<K> s = UPoly<K>::constant(k, r);
    for (const auto& [f, e] : fac.factors) {
        if (e % 2) return std::nullopt;
        s = s * pow(f, e / 2);
    }
    return MPoly<K>::from_upoly(s, v);
}

template <ExactField K>
MPoly<K> derivative(const MPoly<K>& a, std::size_t v) {
    auto c = a.coefficients_in(v);
    MPoly<K> out(a.field());
    MPoly<K> x = MPoly<K>::variable(a.field(), v);
    MPoly<K> pw = MPoly<K>::from_int(a.field(), 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out += c[i] * pw * MPoly<K>::from_int(a.field(), static_cast<long>(i));
        pw = pw * x;
    }
    return out;
}

/// Irreducible factors of a bivariate polynomial over a field, when this is certifiable.
template <ExactField K>
std::vector<MPoly<K>> bivariate_factors(const MPoly<K>& g) {
    const K& k = g.field();
    std::vector<MPoly<K>> out;
    const std::size_t y = 1;
    auto cy = g.coefficients_in(y);
    MPoly<K> cont(k);
    for (const auto& c : cy) cont = gcd(cont, c);
    if (cont.total_deg() > 0)
        for (const auto& [f, e] : factor_univariate(cont.to_upoly(0)).factors) out.push_back(MPoly<K>::from_upoly(f, 0));
    auto pp = g.divide_exact(cont);
    require(pp.has_value(), ErrorCode::InternalError, "content does not divide");
    if (pp->degree_in(y) <= 0) return out;
    MPoly<K> dy = derivative(*pp, y);
    require(!dy.is_zero(), ErrorCode::UnsupportedFactorization, "inseparable bivariate factor");
    MPoly<K> sq = *pp->divide_exact(gcd(*pp, dy));
    std::vector<MPoly<K>> work{sq.monic()};
    while (!work.empty()) {
        MPoly<K> f = work.back();
        work.pop_back();
        const int dyf = f.degree_in(y), dxf = f.degree_in(0);
        if (dyf == 1 || dxf == 1 || f.total_deg() == 1) {
            // primitive in y by construction; linear in one variable with coprime coefficients
            auto cx = f.coefficients_in(0);
            MPoly<K> c(k);
            for (const auto& t : cx) c = gcd(c, t);
            require(dyf == 1 || c.total_deg() <= 0, ErrorCode::UnsupportedFactorization,
                    "cannot certify irreducibility of a bivariate factor");
            out.push_back(f.monic());
            continue;
        }
        require(dyf == 2 && k.characteristic() != 2, ErrorCode::UnsupportedFactorization,
                "bivariate factor of degree " + std::to_string(dyf) + " in the second variable");
        auto c = f.coefficients_in(y);  // c0 + c1 y + c2 y^2
        MPoly<K> disc = c[1] * c[1] - c[0] * c[2] * MPoly<K>::from_int(k, 4);
        auto s = disc.is_zero() ? std::optional<MPoly<K>>(MPoly<K>(k)) : poly_sqrt(disc, 0);
        if (!s) {
            out.push_back(f.monic());
            continue;
        }
        MPoly<K> Y = MPoly<K>::variable(k, y);
        for (int sign : {1, -1}) {
            MPoly<K> h = c[2] * Y * MPoly<K>::from_int(k, 2) + c[1] + (sign > 0 ? *s : -*s);
            MPoly<K> hc(k);
            for (const auto& t : h.coefficients_in(y)) hc = gcd(hc, t);
            h = *h.divide_exact(hc);
            if (sign < 0 && disc.is_zero()) break;
            out.push_back(h.monic());
        }
    }
    return out;
}

}  // namespace detail

/// The minimal primes over (g), one per irreducible factor.
template <ExactField K>
std::vector<PrimeCandidate<K>> minimal_primes(const Ring<K>& R, const MPoly<K>& g) {
    require(!g.is_zero(), ErrorCode::InternalError, "minimal_primes(0)");
    std::vector<MPoly<K>> factors;
    if constexpr (std::is_same_v<K, Rationals>) {
        if (R.desc.integral()) {
            mpz_class c = integer_content(g);
            for (const auto& p : prime_divisors(c)) factors.push_back(MPoly<K>::constant(R.field, Rational(p)));
            if (R.nvars() == 1 && g.total_deg() > 0)
                for (const auto& [f, e] : factor_univariate(primitive_part(g).to_upoly(0)).factors)
                    factors.push_back(primitive_part(MPoly<K>::from_upoly(f, 0)));
        }
    }
    if (!R.desc.integral() && g.total_deg() > 0) {
        if (R.nvars() == 1) {
            for (const auto& [f, e] : factor_univariate(g.to_upoly(0)).factors) factors.push_back(MPoly<K>::from_upoly(f, 0));
        } else {
            factors = detail::bivariate_factors(g);
        }
    }
    std::vector<PrimeCandidate<K>> out;
    for (const auto& f : factors) {
        PrimeCandidate<K> c{normalize_associate(R, f), std::nullopt, ""};
        try {
            c.prime = PrimeSpec<K>::make(R, {c.generator});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Internal) throw;
            c.error = e.what();
        }
        bool dup = false;
        for (const auto& o : out) dup = dup || o.generator == c.generator;
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// DecEx

enum class ComponentStatus { Excluded, RecoveredTrivial, Unknown };

inline const char* status_name(ComponentStatus s) {
    switch (s) {
        case ComponentStatus::Excluded: return "Excluded";
        case ComponentStatus::RecoveredTrivial: return "RecoveredTrivial";
        case ComponentStatus::Unknown: return "Unknown";
    }
    return "?";
}

template <ExactField K>
struct Component {
    PrimeCandidate<K> candidate;
    ComponentStatus status = ComponentStatus::Unknown;
    std::size_t fiber_radical = 0;
    std::string reason;
};

template <ExactField K>
struct Discriminant {
    RadicalLattice<K> lattice;
    CandidateDiscriminant<K> candidate;
    std::size_t generic_radical = 0;
    std::vector<Component<K>> components;

    std::vector<PrimeSpec<K>> excluded() const {
        std::vector<PrimeSpec<K>> out;
        for (const auto& c : components)
            if (c.status == ComponentStatus::Excluded) out.push_back(*c.candidate.prime);
        return out;
    }
};

/// Candidate discriminant with each minimal prime verified by the radical criterion.
template <ExactField K>
Discriminant<K> dec_ex(Analysis<K>& an) {
    Discriminant<K> D;
    const auto& G = an.generic();
    require_split(G, "generic fiber");
    D.generic_radical = radical_dim(G);
    D.lattice = radical_lattice(an);
    D.candidate = candidate_discriminant(an, D.lattice);
    for (auto& pc : minimal_primes(an.ring(), D.candidate.g)) {
        Component<K> c{pc, ComponentStatus::Unknown, 0, pc.error};
        if (pc.prime) {
            try {
                const bool trivial = triviality_by_radical(an, *pc.prime);
                c.fiber_radical = radical_dim(an.fiber(*pc.prime));
                c.status = trivial ? ComponentStatus::RecoveredTrivial : ComponentStatus::Excluded;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Internal) throw;
                c.reason = e.what();
            }
        }
        D.components.push_back(std::move(c));
    }
    return D;
}

// ---------------------------------------------------------------------------------------------
// Schur elements

template <ExactField K>
struct SchurData {
    std::vector<std::string> labels;
    std::vector<std::string> values;
    std::vector<MPoly<K>> elements;
};

/// c_i = (1/dim S_i) sum_k chi_i(b_k) chi_i(b_k^dual) for a symmetrizing trace.
template <ExactField K>
SchurData<K> schur_elements(Analysis<K>& an) {
    const Ring<K>& R = an.ring();
    require(an.algebra().trace.has_value(), ErrorCode::NotSymmetric, "algebra has no trace form");
    const auto& G = an.generic();
    require(radical_dim(G) == 0, ErrorCode::NotSemisimpleGeneric, "generic fiber is not semisimple");
    require_split(G, "generic fiber");
    SchurData<K> out;
    detail::visit_generic<K, int>(G, [&](const auto& g) {
        using FG = std::decay_t<decltype(g.field())>;
        const FG& F = g.field();
        const FiberAlgebra<FG>& A = g.algebra;
        const std::size_t n = A.dim();
        Matrix<FG> T(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto p = A.mul(A.basis_vector(i), A.basis_vector(j));
                for (std::size_t k = 0; k < n; ++k) T(i, j) += p[k] * (*A.trace)[k];
            }
        require(T == T.transpose(), ErrorCode::NotSymmetric, "trace form is not symmetric");
        auto X = inverse(T);
        require(X.has_value(), ErrorCode::NotSymmetric, "trace form is degenerate");
        for (const auto& s : g.wd.simples) {
            std::vector<typename FG::value_type> chi;
            for (const auto& M : s.module.act) chi.push_back(trace(M));
            typename FG::value_type c = F.zero();
            for (std::size_t k = 0; k < n; ++k) {
                typename FG::value_type dual = F.zero();
                for (std::size_t m = 0; m < n; ++m) dual += (*X)(m, k) * chi[m];
                c += chi[k] * dual;
            }
            c = c / F.from_int(static_cast<long>(s.module.dim));
            require(!scalar_is_zero(c), ErrorCode::InternalError, "zero Schur element");
            require(denominator_ideal(R, c) == R.one(), ErrorCode::InternalError,
                    "Schur element " + F.format(c) + " is not in " + R.desc.name());
            out.labels.push_back(simple_label(F, s));
            out.values.push_back(F.format(c));
            out.elements.push_back(integral_fraction(R, c).first);
        }
        return 0;
    });
    return out;
}

struct SchurCrosscheck {
    std::string product;
    std::vector<std::string> schur_primes;
    std::vector<std::string> excluded;
    bool matches = false;
};

template <ExactField K>
SchurCrosscheck schur_discriminant_crosscheck(Analysis<K>& an, const Discriminant<K>& D) {
    const Ring<K>& R = an.ring();
    SchurData<K> s = schur_elements(an);
    MPoly<K> prod = R.one();
    for (const auto& c : s.elements) prod = prod * c;
    SchurCrosscheck out;
    out.product = R.format(prod);
    for (const auto& pc : minimal_primes(R, prod)) out.schur_primes.push_back(pc.str(R));
    for (const auto& p : D.excluded()) out.excluded.push_back(p.str());
    std::sort(out.schur_primes.begin(), out.schur_primes.end());
    std::sort(out.excluded.begin(), out.excluded.end());
    bool unknown = false;
    for (const auto& c : D.components) unknown = unknown || c.status == ComponentStatus::Unknown;
    out.matches = !unknown && out.schur_primes == out.excluded;
    return out;
}

// ---------------------------------------------------------------------------------------------
// Stratification

template <ExactField K>
struct StratumComponent {
    std::string local;                   // the prime in the node's ring
    std::optional<PrimeSpec<K>> prime;   // pulled back to the root ring
    std::string status;
    std::size_t fiber_radical = 0;
    std::string reason;
    std::optional<std::size_t> child;
    bool shared = false;  // child node was reached first from another branch
    std::size_t sampled = 0;  // RecoveredTrivial: points of the component checked pointwise
    std::optional<PrimeSpec<K>> hidden;  // a sampled point of a recovered component that is not trivial
};

/// Points sampled inside each recovered, non-closed component.
inline constexpr std::size_t kRecoveredSamples = 8;

template <ExactField K>
struct StratumNode {
    std::size_t id = 0;
    std::optional<std::size_t> parent;
    PrimeSpec<K> point;  // generic point in the root ring
    std::string ring;
    std::string algebra;
    std::string discriminant;
    std::size_t generic_radical = 0;
    std::vector<StratumComponent<K>> components;
    bool unresolved = false;
    std::string note;
};

template <ExactField K>
struct StratificationTree {
    std::string algebra;
    std::string ring;
    std::vector<StratumNode<K>> nodes;

    /// V(point) minus the closures of the excluded components.
    std::string describe(std::size_t i) const {
        const auto& n = nodes[i];
        std::string s = n.point.is_generic() ? "Spec " + ring : "V" + n.point.str();
        std::vector<std::string> cut;
        for (const auto& c : n.components)
            if (c.status == "Excluded" && c.prime) cut.push_back("V" + c.prime->str());
        for (std::size_t j = 0; j < cut.size(); ++j) s += (j ? " u " : " \\ (") + cut[j];
        if (!cut.empty()) s += ")";
        return s;
    }

    /// Nodes whose stratum contains q (exactly one on a consistent tree).
    std::vector<std::size_t> locate(const PrimeSpec<K>& q) const {
        std::vector<std::size_t> found;
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
            bool deeper = false;
            for (const auto& c : nodes[i].components)
                if (c.status == "Excluded" && c.prime && q.contains(*c.prime) && c.child) {
                    deeper = true;
                    walk(*c.child);
                }
            if (!deeper && std::find(found.begin(), found.end(), i) == found.end()) found.push_back(i);
        };
        if (!nodes.empty()) walk(0);
        return found;
    }
};

namespace detail {

template <ExactField K0, ExactField KR>
std::size_t stratify_node(StratificationTree<K0>& T, std::map<std::string, std::size_t>& seen,
                          const FiniteFreeAlgebra<KR>& alg, const PrimeSpec<K0>& point,
                          const std::function<PrimeSpec<K0>(const PrimeSpec<KR>&)>& lift,
                          std::optional<std::size_t> parent, const ChopOptions& opt, int depth) {
    require(depth <= 3, ErrorCode::InternalError, "stratification deeper than the supported chains");
    const std::size_t id = T.nodes.size();
    seen[point.str()] = id;
    {
        StratumNode<K0> node;
        node.id = id;
        node.parent = parent;
        node.point = point;
        node.ring = alg.ring.desc.name();
        node.algebra = alg.name;
        T.nodes.push_back(node);
    }
    Analysis<KR> an(alg, opt);
    std::optional<Discriminant<KR>> D;
    try {
        D = dec_ex(an);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Internal) throw;
        T.nodes[id].unresolved = true;
        T.nodes[id].note = e.what();
        return id;
    }
    T.nodes[id].discriminant = alg.ring.format(D->candidate.g);
    T.nodes[id].generic_radical = D->generic_radical;
    for (const auto& c : D->components) {
        StratumComponent<K0> sc;
        sc.local = c.candidate.str(alg.ring);
        sc.status = status_name(c.status);
        sc.fiber_radical = c.fiber_radical;
        sc.reason = c.reason;
        if (c.candidate.prime) sc.prime = lift(*c.candidate.prime);
        if (c.status == ComponentStatus::Unknown) T.nodes[id].unresolved = true;
        T.nodes[id].components.push_back(sc);
    }
    for (std::size_t k = 0; k < D->components.size(); ++k) {
        const auto& c = D->components[k];
        if (c.status == ComponentStatus::RecoveredTrivial && !c.candidate.prime->is_maximal()) {
            auto& sc = T.nodes[id].components[k];
            try {
                std::visit(
                    [&](const auto& r) {
                        using K2 = std::decay_t<decltype(r.algebra.ring.field)>;
                        Analysis<K2> sub(r.algebra, opt);
                        for (const auto& q : sample_primes(r.algebra.ring, kRecoveredSamples, opt.seed + k, r.algebra.ring.one())) {
                            std::size_t rd = 0;
                            try {
                                rd = radical_dim(sub.fiber(q));
                            } catch (const Error& e) {
                                if (e.kind() == ErrorKind::Internal) throw;
                                continue;
                            }
                            ++sc.sampled;
                            if (rd != D->generic_radical) {
                                sc.hidden = lift(r.pull_back(q));
                                break;
                            }
                        }
                    },
                    restrict(alg, *c.candidate.prime));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Internal) throw;
                sc.reason = e.what();
            }
            if (sc.hidden) {
                T.nodes[id].unresolved = true;
                T.nodes[id].note = "recovered component " + sc.local + " has a non-trivial point " + sc.hidden->str();
            }
        }
        if (c.status != ComponentStatus::Excluded) continue;
        const PrimeSpec<K0> root = *T.nodes[id].components[k].prime;
        if (auto it = seen.find(root.str()); it != seen.end()) {
            T.nodes[id].components[k].child = it->second;
            T.nodes[id].components[k].shared = true;
            continue;
        }
        try {
            auto res = restrict(alg, *c.candidate.prime);
            std::size_t child = std::visit(
                [&](const auto& r) {
                    using K2 = std::decay_t<decltype(r.algebra.ring.field)>;
                    std::function<PrimeSpec<K0>(const PrimeSpec<K2>&)> lift2 =
                        [lift, r](const PrimeSpec<K2>& q) { return lift(r.pull_back(q)); };
                    return stratify_node<K0, K2>(T, seen, r.algebra, root, lift2, id, opt, depth + 1);
                },
                res);
            T.nodes[id].components[k].child = child;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Internal) throw;
            T.nodes[id].components[k].reason = e.what();
            T.nodes[id].unresolved = true;
        }
    }
    return id;
}

}  // namespace detail

/// Recursive stratification of Spec(R) by restriction to excluded primes.
template <ExactField K>
StratificationTree<K> stratify(const FiniteFreeAlgebra<K>& A, const ChopOptions& opt = {}) {
    StratificationTree<K> T;
    T.algebra = A.name;
    T.ring = A.ring.desc.name();
    std::map<std::string, std::size_t> seen;
    std::function<PrimeSpec<K>(const PrimeSpec<K>&)> id = [](const PrimeSpec<K>& p) { return p; };
    detail::stratify_node<K, K>(T, seen, A, PrimeSpec<K>::generic(A.ring), id, std::nullopt, opt, 0);
    return T;
}

}  // namespace decompgen

#endif  // DECOMPGEN_STRATA_HPP
