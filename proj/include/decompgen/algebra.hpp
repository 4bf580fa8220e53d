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

#ifndef DECOMPGEN_ALGEBRA_HPP
#define DECOMPGEN_ALGEBRA_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "matrix.hpp"
#include "prime.hpp"
#include "ring.hpp"

namespace decompgen {

/// A free algebra of finite rank over a supported ring, given by structure constants
/// b_i b_j = sum_k c[i][j][k] b_k.
template <ExactField K>
struct FiniteFreeAlgebra {
    std::string name;
    Ring<K> ring;
    std::vector<std::string> basis;
    std::vector<MPoly<K>> c;  // (i*n + j)*n + k
    std::vector<MPoly<K>> unit;
    std::optional<std::vector<MPoly<K>>> trace;

    std::size_t dim() const { return basis.size(); }
    const MPoly<K>& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim() + j) * dim() + k]; }
    MPoly<K>& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim() + j) * dim() + k]; }

    /// Coordinates of x*y.
    std::vector<MPoly<K>> mul(const std::vector<MPoly<K>>& x, const std::vector<MPoly<K>>& y) const {
        const std::size_t n = dim();
        std::vector<MPoly<K>> out(n, ring.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                MPoly<K> s = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!at(i, j, k).is_zero()) out[k] += s * at(i, j, k);
            }
        }
        return out;
    }
    std::vector<MPoly<K>> basis_vector(std::size_t i) const {
        std::vector<MPoly<K>> v(dim(), ring.zero());
        v[i] = ring.one();
        return v;
    }
};

/// A finite-dimensional algebra over an exact field: the fiber A(p) of a finite free algebra.
template <ExactField F>
struct FiberAlgebra {
    using E = typename F::value_type;
    std::string name;
    F field;
    std::vector<std::string> basis;
    std::vector<E> c;
    Vec<F> unit;
    std::optional<Vec<F>> trace;
    std::string provenance;

    std::size_t dim() const { return basis.size(); }
    const E& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim() + j) * dim() + k]; }

    Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const {
        const std::size_t n = dim();
        Vec<F> out(n, field.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (scalar_is_zero(x[i])) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (scalar_is_zero(y[j])) continue;
                E s = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!scalar_is_zero(at(i, j, k))) out[k] += s * at(i, j, k);
            }
        }
        return out;
    }
    Vec<F> basis_vector(std::size_t i) const {
        Vec<F> v(dim(), field.zero());
        v[i] = field.one();
        return v;
    }
};

using AnyAlgebra = std::variant<FiniteFreeAlgebra<Rationals>, FiniteFreeAlgebra<PrimeField>>;
using AnyFiber = std::variant<FiberAlgebra<Rationals>, FiberAlgebra<PrimeField>, FiberAlgebra<FiniteField>,
                              FiberAlgebra<FunctionField<Rationals>>, FiberAlgebra<FunctionField<PrimeField>>>;

// ---------------------------------------------------------------------------------------------
// Validation

/// Associativity and unit law over the ring; trace symmetric and nondegenerate over Frac(R).
template <ExactField K>
void validate(const FiniteFreeAlgebra<K>& A) {
    const std::size_t n = A.dim();
    require(n > 0, ErrorCode::ParseError, "algebra has empty basis");
    require(A.c.size() == n * n * n, ErrorCode::DimensionMismatch, "structure constant table has wrong size");
    require(A.unit.size() == n, ErrorCode::DimensionMismatch, "unit vector has wrong length");
    for (const auto& x : A.c) A.ring.check(x, "structure constant");
    for (const auto& x : A.unit) A.ring.check(x, "unit coordinate");
    // unit law
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            MPoly<K> l = A.ring.zero(), r = A.ring.zero();
            for (std::size_t t = 0; t < n; ++t) {
                if (A.unit[t].is_zero()) continue;
                l += A.unit[t] * A.at(t, i, k);
                r += A.unit[t] * A.at(i, t, k);
            }
            MPoly<K> want = i == k ? A.ring.one() : A.ring.zero();
            require(l == want && r == want, ErrorCode::NoUnit,
                    "unit law fails at basis element " + A.basis[i]);
        }
    // associativity (b_i b_j) b_k = b_i (b_j b_k)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<MPoly<K>> lhs(n, A.ring.zero()), rhs(n, A.ring.zero());
                for (std::size_t l = 0; l < n; ++l) {
                    const auto& a = A.at(i, j, l);
                    if (!a.is_zero())
                        for (std::size_t m = 0; m < n; ++m)
                            if (!A.at(l, k, m).is_zero()) lhs[m] += a * A.at(l, k, m);
                    const auto& b = A.at(j, k, l);
                    if (!b.is_zero())
                        for (std::size_t m = 0; m < n; ++m)
                            if (!A.at(i, l, m).is_zero()) rhs[m] += b * A.at(i, l, m);
                }
                require(lhs == rhs, ErrorCode::NotAssociative,
                        "(" + A.basis[i] + "*" + A.basis[j] + ")*" + A.basis[k] + " != " + A.basis[i] + "*(" +
                            A.basis[j] + "*" + A.basis[k] + ")");
            }
    if (A.trace) {
        require(A.trace->size() == n, ErrorCode::BadTraceForm, "trace vector has wrong length");
        for (const auto& x : *A.trace) A.ring.check(x, "trace coordinate");
        std::vector<std::vector<MPoly<K>>> G(n, std::vector<MPoly<K>>(n, A.ring.zero()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!A.at(i, j, k).is_zero()) G[i][j] += A.at(i, j, k) * (*A.trace)[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                require(G[i][j] == G[j][i], ErrorCode::BadTraceForm, "trace form is not symmetric");
        auto gen = PrimeSpec<K>::generic(A.ring);
        bool nonzero = std::visit(
            [&](const auto& rm) {
                using FF = std::remove_cvref_t<decltype(rm.field)>;
                Matrix<FF> M(rm.field, n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) M(i, j) = rm(G[i][j]);
                return !is_zero(det(M));
            },
            gen.residue());
        require(nonzero, ErrorCode::BadTraceForm, "trace form is degenerate");
    }
}

template <ExactField F>
void validate(const FiberAlgebra<F>& A) {
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i) {
        auto e = A.basis_vector(i);
        require(A.mul(A.unit, e) == e && A.mul(e, A.unit) == e, ErrorCode::NoUnit, "unit law fails in fiber");
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto ej = A.basis_vector(j), ek = A.basis_vector(k);
                require(A.mul(A.mul(e, ej), ek) == A.mul(e, A.mul(ej, ek)), ErrorCode::NotAssociative,
                        "fiber is not associative");
            }
    }
}

// ---------------------------------------------------------------------------------------------
// Text format

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

template <ExactField K>
FiniteFreeAlgebra<K> parse_algebra_body(const std::string& name, const Ring<K>& R,
                                        const std::vector<std::pair<std::string, std::string>>& lines) {
    FiniteFreeAlgebra<K> A;
    A.name = name;
    A.ring = R;
    std::vector<std::string> unit_tok, trace_tok;
    bool have_trace = false;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> triples;
    auto parse_index = [](const std::string& t) -> std::size_t {
        require(!t.empty() && t.find_first_not_of("0123456789") == std::string::npos, ErrorCode::ParseError,
                "bad index '" + t + "'");
        return std::stoul(t);
    };
    for (const auto& [key, rest] : lines) {
        if (key == "basis") {
            A.basis = split_ws(rest);
        } else if (key == "unit") {
            unit_tok = split_ws(rest);
        } else if (key == "trace") {
            trace_tok = split_ws(rest);
            have_trace = true;
        } else if (key == "mult") {
            std::istringstream in(rest);
            std::string a, b, c;
            in >> a >> b >> c;
            std::string coef;
            std::getline(in, coef);
            require(!coef.empty(), ErrorCode::ParseError, "mult line needs i j k coefficient");
            triples.emplace_back(parse_index(a), parse_index(b), parse_index(c), coef);
        } else {
            fail(ErrorCode::ParseError, "unknown keyword '" + key + "'");
        }
    }
    const std::size_t n = A.basis.size();
    require(n > 0, ErrorCode::ParseError, "missing basis line");
    A.c.assign(n * n * n, R.zero());
    for (const auto& [i, j, k, coef] : triples) {
        require(i < n && j < n && k < n, ErrorCode::ParseError, "structure constant index out of range");
        A.at(i, j, k) += R.parse(coef);
    }
    require(unit_tok.size() == n, ErrorCode::ParseError, "unit line needs " + std::to_string(n) + " coordinates");
    for (const auto& t : unit_tok) A.unit.push_back(R.parse(t));
    if (have_trace) {
        require(trace_tok.size() == n, ErrorCode::ParseError, "trace line needs " + std::to_string(n) + " coordinates");
        std::vector<MPoly<K>> tr;
        for (const auto& t : trace_tok) tr.push_back(R.parse(t));
        A.trace = tr;
    }
    return A;
}

}  // namespace detail

/// Parses and validates an algebra definition.
inline AnyAlgebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line, name;
    std::optional<RingDescriptor> desc;
    std::vector<std::pair<std::string, std::string>> body;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto words = detail::split_ws(line);
        if (words.empty()) continue;
        const std::string key = words[0];
        std::string rest = line.substr(line.find(key) + key.size());
        if (key == "algebra") {
            require(words.size() == 2, ErrorCode::ParseError, "algebra line needs exactly one name");
            name = words[1];
        } else if (key == "ring") {
            desc = RingDescriptor::parse(rest);
        } else {
            body.emplace_back(key, rest);
        }
    }
    require(!name.empty(), ErrorCode::ParseError, "missing algebra line");
    require(desc.has_value(), ErrorCode::ParseError, "missing ring line");
    AnyAlgebra out;
    if (desc->kind == CoefficientKind::PrimeField) {
        out = detail::parse_algebra_body(name, make_ring<PrimeField>(*desc), body);
    } else {
        out = detail::parse_algebra_body(name, make_ring<Rationals>(*desc), body);
    }
    std::visit([](const auto& A) { validate(A); }, out);
    return out;
}

/// Canonical text form (sorted triples, canonical coefficients).
template <ExactField K>
std::string serialize(const FiniteFreeAlgebra<K>& A) {
    std::ostringstream out;
    const std::size_t n = A.dim();
    out << "algebra " << A.name << "\n";
    out << "ring " << A.ring.desc.name() << "\n";
    out << "basis";
    for (const auto& b : A.basis) out << " " << b;
    out << "\nunit";
    for (const auto& u : A.unit) out << " " << A.ring.format(u);
    out << "\n";
    if (A.trace) {
        out << "trace";
        for (const auto& u : *A.trace) {
            std::string s = A.ring.format(u);
            require(s.find(' ') == std::string::npos, ErrorCode::InternalError, "trace coordinate needs no spaces");
            out << " " << s;
        }
        out << "\n";
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!A.at(i, j, k).is_zero()) out << "mult " << i << " " << j << " " << k << " " << A.ring.format(A.at(i, j, k)) << "\n";
    return out.str();
}

inline std::string serialize(const AnyAlgebra& A) {
    return std::visit([](const auto& a) { return serialize(a); }, A);
}

// ---------------------------------------------------------------------------------------------
// Specialization and restriction

template <ExactField K, ExactField F>
FiberAlgebra<F> specialize_with(const FiniteFreeAlgebra<K>& A, const ResidueMap<F>& rm, const std::string& prime) {
    FiberAlgebra<F> out;
    out.name = A.name;
    out.field = rm.field;
    out.basis = A.basis;
    out.c.reserve(A.c.size());
    for (const auto& x : A.c) out.c.push_back(rm(x));
    for (const auto& x : A.unit) out.unit.push_back(rm(x));
    if (A.trace) {
        Vec<F> t;
        for (const auto& x : *A.trace) t.push_back(rm(x));
        out.trace = t;
    }
    out.provenance = A.name + " at " + prime + " over " + A.ring.desc.name();
    return out;
}

/// The fiber A(p) = k(p) tensor A.
template <ExactField K>
AnyFiber specialize(const FiniteFreeAlgebra<K>& A, const PrimeSpec<K>& p) {
    require(p.ring() == A.ring, ErrorCode::DimensionMismatch, "prime belongs to a different ring");
    return std::visit([&](const auto& rm) -> AnyFiber { return specialize_with(A, rm, p.str()); }, p.residue());
}

/// The algebra A/pA over R/p together with the data to pull primes of R/p back to R.
template <ExactField K, ExactField K2>
struct Restriction {
    FiniteFreeAlgebra<K2> algebra;
    PrimeSpec<K> along;
    std::vector<std::size_t> var_map;  // variable i of R/p is variable var_map[i] of R
    std::vector<MPoly<K2>> images;     // images of the variables of R

    MPoly<K2> map(const MPoly<K>& a) const {
        const Ring<K2>& T = algebra.ring;
        MPoly<K2> acc = T.zero();
        for (const auto& t : a.terms()) {
            MPoly<K2> m = MPoly<K2>::constant(T.field, coefficient_into<K, K2>(T.field, t.c));
            for (std::size_t i = 0; i < images.size(); ++i)
                for (std::uint32_t e = 0; e < t.m[i]; ++e) m = m * images[i];
            acc += m;
        }
        return acc;
    }

    /// Lifts an element of R/p to R (representatives 0..p-1 for finite coefficients).
    MPoly<K> lift(const MPoly<K2>& a) const {
        std::vector<typename MPoly<K>::Term> t;
        for (const auto& x : a.terms()) {
            Monomial m{};
            for (std::size_t i = 0; i < var_map.size(); ++i) m[var_map[i]] = x.m[i];
            if constexpr (std::is_same_v<K, K2>) {
                t.push_back({m, x.c});
            } else if constexpr (std::is_same_v<K, Rationals> && std::is_same_v<K2, PrimeField>) {
                t.push_back({m, Rational(static_cast<long>(x.c.v))});
            } else {
                fail(ErrorCode::InternalError, "no lift from " + a.field().name());
            }
        }
        return MPoly<K>(along.ring().field, std::move(t));
    }

    /// The prime of R whose image in R/p is q.
    PrimeSpec<K> pull_back(const PrimeSpec<K2>& q) const {
        std::vector<MPoly<K>> g = along.gens();
        for (const auto& x : q.gens()) g.push_back(lift(x));
        return PrimeSpec<K>::make(along.ring(), g);
    }

};

template <ExactField K>
using AnyRestriction = std::variant<Restriction<K, Rationals>, Restriction<K, PrimeField>>;

namespace detail {

template <ExactField K, ExactField K2>
Restriction<K, K2> build_restriction(const FiniteFreeAlgebra<K>& A, const PrimeSpec<K>& p, Ring<K2> T,
                                     std::vector<std::size_t> var_map, std::vector<MPoly<K2>> images) {
    Restriction<K, K2> r;
    r.along = p;
    r.var_map = std::move(var_map);
    r.images = std::move(images);
    r.algebra.ring = T;
    FiniteFreeAlgebra<K2>& B = r.algebra;
    B.name = A.name;
    B.basis = A.basis;
    for (const auto& x : A.c) B.c.push_back(r.map(x));
    for (const auto& x : A.unit) B.unit.push_back(r.map(x));
    if (A.trace) {
        std::vector<MPoly<K2>> t;
        for (const auto& x : *A.trace) t.push_back(r.map(x));
        B.trace = t;
    }
    return r;
}

}  // namespace detail

/// R/p as a supported ring; UnsupportedRestriction when it is not one.
template <ExactField K>
AnyRestriction<K> restrict(const FiniteFreeAlgebra<K>& A, const PrimeSpec<K>& p) {
    const Ring<K>& R = A.ring;
    const std::size_t nv = R.nvars();
    auto unsupported = [&]() -> AnyRestriction<K> {
        fail(ErrorCode::UnsupportedRestriction,
             "restriction of " + R.desc.name() + " along " + p.str() + " is not a supported ring");
    };
    if (p.is_generic()) {
        std::vector<std::size_t> vm;
        std::vector<MPoly<K>> im;
        for (std::size_t i = 0; i < nv; ++i) {
            vm.push_back(i);
            im.push_back(R.variable(i));
        }
        return detail::build_restriction<K, K>(A, p, R, vm, im);
    }
    const auto& g = p.gens();
    if constexpr (std::is_same_v<K, Rationals>) {
        if (R.desc.integral() && g[0].is_constant()) {
            // (p) or (p, h): coefficients modulo p
            const std::uint64_t ch = to_u64(g[0].constant_value().num());
            RingDescriptor d{CoefficientKind::PrimeField, ch, {}};
            if (g.size() == 1) {
                d.vars = R.vars();
                auto T = make_ring<PrimeField>(d);
                std::vector<std::size_t> vm;
                std::vector<MPoly<PrimeField>> im;
                for (std::size_t i = 0; i < nv; ++i) {
                    vm.push_back(i);
                    im.push_back(T.variable(i));
                }
                return detail::build_restriction<K, PrimeField>(A, p, T, vm, im);
            }
            const auto& h = g[1];
            if (h.total_deg() != 1) return unsupported();
            auto T = make_ring<PrimeField>(d);
            auto root = T.field.from_rational(-h.constant_term() / h.lc());
            return detail::build_restriction<K, PrimeField>(A, p, T, {}, {MPoly<PrimeField>::constant(T.field, root)});
        }
    }
    // A generator monic and linear in variable w whose other part only involves variable v.
    if (p.is_maximal()) {
        const auto* rm = std::get_if<ResidueMap<K>>(&p.residue());
        if (!rm) return unsupported();
        RingDescriptor d = R.desc;
        d.vars.clear();
        if (d.kind == CoefficientKind::Integers) d.kind = CoefficientKind::Rationals;
        if constexpr (std::is_same_v<K, Rationals>) {
            if (R.desc.integral()) return unsupported();  // Z[x]/(f) maximal with rational residue is not reached
        }
        auto T = make_ring<K>(d);
        std::vector<MPoly<K>> im;
        for (std::size_t i = 0; i < nv; ++i) im.push_back(MPoly<K>::constant(T.field, rm->images[i]));
        return detail::build_restriction<K, K>(A, p, T, {}, im);
    }
    // principal, not containing a constant
    const MPoly<K>& f = g[0];
    for (std::size_t w = 0; w < nv; ++w) {
        if (f.degree_in(w) != 1) continue;
        auto cw = f.coefficients_in(w);
        if (!cw[1].is_constant() || cw[0].degree_in(w) > 0) continue;
        if constexpr (std::is_same_v<K, Rationals>) {
            if (R.desc.integral() && !(cw[1].constant_value() == Rational(1) || cw[1].constant_value() == Rational(-1)))
                continue;
        }
        MPoly<K> h = cw[0].scaled(-(R.field.one() / cw[1].constant_value()));  // w = h(other)
        RingDescriptor d = R.desc;
        d.vars.clear();
        std::vector<std::size_t> vm;
        for (std::size_t i = 0; i < nv; ++i)
            if (i != w) {
                d.vars.push_back(R.vars()[i]);
                vm.push_back(i);
            }
        auto T = make_ring<K>(d);
        std::vector<MPoly<K>> im(nv, T.zero());
        for (std::size_t i = 0; i < vm.size(); ++i) im[vm[i]] = T.variable(i);
        // rename h's variable into the target indexing
        std::vector<MPoly<K>> subs(kMaxVars, T.zero());
        for (std::size_t i = 0; i < vm.size(); ++i) subs[vm[i]] = T.variable(i);
        im[w] = h.substitute(subs);
        return detail::build_restriction<K, K>(A, p, T, vm, im);
    }
    return unsupported();
}

// ---------------------------------------------------------------------------------------------
// Fiber-level operations

/// Matrix of x -> a*x; column j holds the coordinates of a*b_j.
template <ExactField F>
Matrix<F> left_regular_matrix(const FiberAlgebra<F>& A, const Vec<F>& a) {
    const std::size_t n = A.dim();
    Matrix<F> M(A.field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (scalar_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_is_zero(A.at(i, j, k))) M(k, j) += a[i] * A.at(i, j, k);
    }
    return M;
}

/// Matrix of x -> x*a.
template <ExactField F>
Matrix<F> right_regular_matrix(const FiberAlgebra<F>& A, const Vec<F>& a) {
    const std::size_t n = A.dim();
    Matrix<F> M(A.field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (scalar_is_zero(a[j])) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (!scalar_is_zero(A.at(i, j, k))) M(k, i) += a[j] * A.at(i, j, k);
    }
    return M;
}

/// Smallest two-sided ideal containing the generators, as a reduced echelon basis.
template <ExactField F>
Matrix<F> ideal_closure(const FiberAlgebra<F>& A, const std::vector<Vec<F>>& gens) {
    const std::size_t n = A.dim();
    Subspace<F> S(A.field, n);
    std::vector<Vec<F>> queue;
    for (const auto& g : gens)
        if (S.insert(g)) queue.push_back(g);
    while (!queue.empty()) {
        Vec<F> v = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            auto e = A.basis_vector(i);
            for (auto w : {A.mul(e, v), A.mul(v, e)})
                if (S.insert(w)) queue.push_back(w);
        }
    }
    return S.canonical();
}

/// The quotient by a two-sided ideal given by a reduced echelon basis; the complement basis is
/// the set of non-pivot basis elements.
template <ExactField F>
FiberAlgebra<F> quotient_algebra(const FiberAlgebra<F>& A, const Matrix<F>& ideal) {
    const std::size_t n = A.dim();
    auto [I, piv] = rref(ideal);
    Subspace<F> S(A.field, n);
    for (const auto& r : I.row_list()) S.insert(r);
    require(!S.contains(A.unit), ErrorCode::UnitInIdeal, "ideal contains the unit");
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_piv[j]) keep.push_back(j);
    auto project = [&](Vec<F> v) {
        for (std::size_t r = 0; r < piv.size(); ++r) {
            auto s = v[piv[r]];
            if (scalar_is_zero(s)) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!scalar_is_zero(I(r, j))) v[j] -= s * I(r, j);
        }
        Vec<F> out;
        for (auto j : keep) out.push_back(v[j]);
        return out;
    };
    FiberAlgebra<F> Q;
    Q.name = A.name + "/I";
    Q.field = A.field;
    for (auto j : keep) Q.basis.push_back(A.basis[j]);
    const std::size_t m = keep.size();
    Q.c.assign(m * m * m, A.field.zero());
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto prod = project(A.mul(A.basis_vector(keep[a]), A.basis_vector(keep[b])));
            for (std::size_t k = 0; k < m; ++k) Q.c[(a * m + b) * m + k] = prod[k];
        }
    Q.unit = project(A.unit);
    Q.provenance = A.provenance + " modulo an ideal of dimension " + std::to_string(piv.size());
    return Q;
}

/// Smallest N with I^N = 0, or nullopt when the powers stabilize at a nonzero ideal.
template <ExactField F>
std::optional<std::size_t> nilpotency_index(const FiberAlgebra<F>& A, const Matrix<F>& ideal) {
    const std::size_t n = A.dim();
    std::vector<Vec<F>> base = rref(ideal).form.row_list();
    if (base.empty()) return 1;
    std::vector<Vec<F>> power = base;
    std::size_t N = 1;
    while (!power.empty()) {
        Subspace<F> next(A.field, n);
        for (const auto& x : power)
            for (const auto& y : base) next.insert(A.mul(x, y));
        if (next.dim() == power.size()) return std::nullopt;
        power = next.basis();
        ++N;
    }
    return N;
}

}  // namespace decompgen

#endif  // DECOMPGEN_ALGEBRA_HPP
