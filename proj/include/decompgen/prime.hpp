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

#ifndef DECOMPGEN_PRIME_HPP
#define DECOMPGEN_PRIME_HPP

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "factor.hpp"
#include "finite_field.hpp"
#include "function_field.hpp"
#include "ring.hpp"

namespace decompgen {

enum class PrimeTag { Generic, PrincipalIrreducible, MaximalPoint };

inline const char* tag_name(PrimeTag t) {
    switch (t) {
        case PrimeTag::Generic: return "generic";
        case PrimeTag::PrincipalIrreducible: return "principal";
        case PrimeTag::MaximalPoint: return "maximal";
    }
    return "?";
}

/// Image of a coefficient of K in the field F (Q -> F_p reduces, everything else embeds).
template <ExactField K, ExactField F>
typename F::value_type coefficient_into(const F& target, const typename K::value_type& c) {
    if constexpr (std::is_same_v<K, F>) {
        if constexpr (std::is_same_v<K, PrimeField>)
            require(target.p == c.p, ErrorCode::InternalError, "characteristic mismatch");
        return c;
    } else if constexpr (std::is_same_v<K, Rationals> && std::is_same_v<F, PrimeField>) {
        return target.from_rational(c);
    } else if constexpr (std::is_same_v<F, FiniteField>) {
        return target.embed(coefficient_into<K, PrimeField>(target.base(), c));
    } else if constexpr (std::is_same_v<F, FunctionField<Rationals>> || std::is_same_v<F, FunctionField<PrimeField>>) {
        return target.embed(coefficient_into<K, typename F::base_field>(target.base(), c));
    } else {
        (void)c;
        fail(ErrorCode::InternalError, "no coefficient map from " + K{}.name() + " to " + target.name());
    }
}

/// The residue-field morphism R -> k(p): variables go to `images`.
template <ExactField F>
struct ResidueMap {
    F field;
    std::vector<typename F::value_type> images;

    template <ExactField K>
    typename F::value_type operator()(const MPoly<K>& a) const {
        return a.map_into(field, images, [&](const typename K::value_type& c) { return coefficient_into<K, F>(field, c); });
    }
};

using AnyResidue = std::variant<ResidueMap<Rationals>, ResidueMap<PrimeField>, ResidueMap<FiniteField>,
                                ResidueMap<FunctionField<Rationals>>, ResidueMap<FunctionField<PrimeField>>>;

namespace detail {

/// Re-indexes a polynomial in the single variable `v` as a polynomial in variable 0.
template <ExactField K>
MPoly<K> move_to_first(const MPoly<K>& a, std::size_t v) {
    if (v == 0) return a;
    std::vector<MPoly<K>> subs(kMaxVars, MPoly<K>(a.field()));
    subs[v] = MPoly<K>::variable(a.field(), 0);
    return a.substitute(subs);
}

inline UPoly<PrimeField> upoly_mod_p(const UPoly<Rationals>& f, const PrimeField& fp) {
    std::vector<Fp> c;
    for (const auto& x : f.coeffs()) c.push_back(fp.from_rational(x));
    return UPoly<PrimeField>(fp, std::move(c));
}

template <ExactField K>
MPoly<Rationals> lift_to_integers(const MPoly<K>& a) {
    if constexpr (std::is_same_v<K, Rationals>) {
        return a;
    } else {
        std::vector<MPoly<Rationals>::Term> t;
        for (const auto& x : a.terms()) t.push_back({x.m, Rational(static_cast<long>(x.c.v))});
        return MPoly<Rationals>(Rationals{}, std::move(t));
    }
}

}  // namespace detail

/// A validated prime ideal of a supported ring with its residue field k(p) = Frac(R/p).
template <ExactField K>
class PrimeSpec {
public:
    PrimeSpec() = default;

    static PrimeSpec generic(const Ring<K>& R) {
        PrimeSpec s;
        s.ring_ = R;
        s.tag_ = PrimeTag::Generic;
        if (R.nvars() == 0) {
            s.residue_ = ResidueMap<K>{R.field, {}};
        } else {
            FunctionField<K> F(R.field, R.vars());
            std::vector<RatFun<K>> im;
            for (std::size_t i = 0; i < R.nvars(); ++i) im.push_back(F.variable(i));
            s.residue_ = ResidueMap<FunctionField<K>>{F, im};
        }
        return s;
    }

    /// Validates and classifies the ideal generated by `gens`.
    static PrimeSpec make(const Ring<K>& R, std::vector<MPoly<K>> gens) {
        std::vector<MPoly<K>> g;
        for (auto& x : gens) {
            R.check(x, "prime generator");
            if (!x.is_zero()) g.push_back(normalize_associate(R, x));
        }
        if (g.empty()) return generic(R);
        if constexpr (std::is_same_v<K, Rationals>) {
            if (R.desc.integral()) return make_integral(R, g);
        }
        require(R.nvars() > 0, ErrorCode::NotPrime, "nonzero ideal of the field " + R.desc.name() + " is the unit ideal");
        if (R.nvars() == 1) return make_univariate(R, g);
        return make_bivariate(R, g);
    }

    /// Parses `p=<int>`, `gen=[f, g]` or `generic`.
    static PrimeSpec parse(const Ring<K>& R, std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text == "generic" || text == "0" || text == "(0)") return generic(R);
        if (text.starts_with("p=")) return make(R, {R.parse(text.substr(2))});
        if (text.starts_with("gen=")) {
            std::string_view body = trim(text.substr(4));
            require(body.size() >= 2 && body.front() == '[' && body.back() == ']', ErrorCode::ParseError,
                    "expected gen=[...] in '" + std::string(text) + "'");
            body = body.substr(1, body.size() - 2);
            std::vector<MPoly<K>> gens;
            if (!trim(body).empty()) {
                // split on commas at parenthesis depth 0
                int depth = 0;
                std::size_t start = 0;
                for (std::size_t i = 0; i <= body.size(); ++i) {
                    if (i == body.size() || (body[i] == ',' && depth == 0)) {
                        gens.push_back(R.parse(body.substr(start, i - start)));
                        start = i + 1;
                    } else if (body[i] == '(') {
                        ++depth;
                    } else if (body[i] == ')') {
                        --depth;
                    }
                }
            }
            return make(R, gens);
        }
        fail(ErrorCode::ParseError, "bad prime specification '" + std::string(text) + "' (use p=<int>, gen=[...] or generic)");
    }

    const Ring<K>& ring() const { return ring_; }
    const std::vector<MPoly<K>>& gens() const { return gens_; }
    PrimeTag tag() const { return tag_; }
    bool is_generic() const { return tag_ == PrimeTag::Generic; }
    bool is_maximal() const { return tag_ == PrimeTag::MaximalPoint; }
    const AnyResidue& residue() const { return residue_; }

    std::string residue_name() const {
        return std::visit([](const auto& r) { return r.field.name(); }, residue_);
    }

    std::string str() const {
        if (gens_.empty()) return "(0)";
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + ring_.format(gens_[i]);
        return s + ")";
    }

    /// Membership of a ring element in the ideal.
    bool contains(const MPoly<K>& a) const {
        return std::visit([&](const auto& r) { return is_zero(r(a)); }, residue_);
    }

    /// Every generator of `other` lies in this ideal (this contains other).
    bool contains(const PrimeSpec& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    friend bool operator==(const PrimeSpec& a, const PrimeSpec& b) { return a.ring_ == b.ring_ && a.gens_ == b.gens_; }

private:
    Ring<K> ring_;
    std::vector<MPoly<K>> gens_;
    PrimeTag tag_ = PrimeTag::Generic;
    AnyResidue residue_;

    static PrimeSpec with(const Ring<K>& R, std::vector<MPoly<K>> gens, PrimeTag tag, AnyResidue res) {
        PrimeSpec s;
        s.ring_ = R;
        s.gens_ = std::move(gens);
        s.tag_ = tag;
        s.residue_ = std::move(res);
        return s;
    }

    /// Residue map for K[v]/(f) with f irreducible in one variable, other variables sent to `others`.
    template <class OtherImages>
    static AnyResidue finite_extension(const K& k, const UPoly<K>& f, std::size_t v, const std::string& gen_name,
                                       OtherImages&& others) {
        if (f.degree() == 1) {
            typename K::value_type root = -f.monic().coeff(0);
            std::vector<typename K::value_type> im(kMaxVars, k.zero());
            im[v] = root;
            others(k, im);
            return ResidueMap<K>{k, im};
        }
        if constexpr (std::is_same_v<K, PrimeField>) {
            FiniteField L(k, f, gen_name);
            std::vector<Fq> im(kMaxVars, L.zero());
            im[v] = L.generator();
            others(L, im);
            return ResidueMap<FiniteField>{L, im};
        } else {
            fail(ErrorCode::UnsupportedResidueField,
                 "residue field is a number field of degree " + std::to_string(f.degree()) + " (unsupported)");
        }
    }

    static PrimeSpec make_integral(const Ring<K>& R, const std::vector<MPoly<K>>& g) {
        static_assert(std::is_same_v<K, Rationals>);
        mpz_class n = 0;
        std::vector<MPoly<K>> nonconst;
        for (const auto& x : g) {
            if (x.is_constant()) mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), x.constant_value().num().get_mpz_t());
            else nonconst.push_back(x);
        }
        if (n != 0) {
            require(n != 1, ErrorCode::NotPrime, "ideal contains a unit");
            require(is_probable_prime(n), ErrorCode::NotPrime, n.get_str() + " is not a prime");
            PrimeField fp(to_u64(n));
            MPoly<K> pgen = MPoly<K>::constant(R.field, Rational(n));
            if (R.nvars() == 0) return with(R, {pgen}, PrimeTag::MaximalPoint, ResidueMap<PrimeField>{fp, {}});
            UPoly<PrimeField> h(fp);
            for (const auto& x : nonconst) h = gcd(h, detail::upoly_mod_p(x.to_upoly(0), fp));
            if (h.degree() < 0) {
                FunctionField<PrimeField> F(fp, R.vars());
                return with(R, {pgen}, PrimeTag::PrincipalIrreducible, ResidueMap<FunctionField<PrimeField>>{F, {F.variable(0)}});
            }
            require(h.degree() > 0, ErrorCode::NotPrime, "ideal contains a unit");
            require(is_irreducible(h), ErrorCode::NotPrime,
                    h.format(R.vars()[0]) + " is reducible modulo " + n.get_str() + " so the ideal is not prime");
            h = h.monic();
            MPoly<K> hl = detail::lift_to_integers(MPoly<PrimeField>::from_upoly(h, 0));
            AnyResidue res;
            if (h.degree() == 1) {
                res = ResidueMap<PrimeField>{fp, {-h.coeff(0)}};
            } else {
                FiniteField L(fp, h, "t");
                res = ResidueMap<FiniteField>{L, {L.generator()}};
            }
            return with(R, {pgen, hl}, PrimeTag::MaximalPoint, res);
        }
        require(R.nvars() == 1, ErrorCode::NotPrime, "ideal contains a unit");
        require(nonconst.size() == 1, ErrorCode::UnsupportedResidueField,
                "primes of ZZ[x] must be given as (p), (f) or (p, g)");
        MPoly<K> f = nonconst[0];
        require(integer_content(f) == 1, ErrorCode::NotPrime,
                R.format(f) + " has nontrivial content so the ideal is not prime");
        UPoly<Rationals> fu = f.to_upoly(0);
        require(is_irreducible(fu), ErrorCode::NotPrime, R.format(f) + " is reducible");
        require(fu.degree() == 1, ErrorCode::UnsupportedResidueField,
                "residue field of " + R.format(f) + " is a number field (unsupported)");
        Rational root = -fu.coeff(0) / fu.coeff(1);
        return with(R, {f}, PrimeTag::PrincipalIrreducible, ResidueMap<Rationals>{Rationals{}, {root}});
    }

    static PrimeSpec make_univariate(const Ring<K>& R, const std::vector<MPoly<K>>& g) {
        UPoly<K> h(R.field);
        for (const auto& x : g) h = gcd(h, x.to_upoly(0));
        require(h.degree() > 0, ErrorCode::NotPrime, "ideal contains a unit");
        require(is_irreducible(h), ErrorCode::NotPrime, h.format(R.vars()[0]) + " is reducible");
        h = h.monic();
        AnyResidue res = finite_extension(R.field, h, 0, "t", [](const auto&, auto&) {});
        return with(R, {MPoly<K>::from_upoly(h, 0)}, PrimeTag::MaximalPoint, res);
    }

    static PrimeSpec make_bivariate(const Ring<K>& R, std::vector<MPoly<K>> g) {
        const K& k = R.field;
        if (g.size() == 1) return make_principal_bivariate(R, g[0]);
        // maximal point: find a generator w - h(v)
        for (std::size_t pick = 0; pick < g.size(); ++pick) {
            for (std::size_t w : {std::size_t{1}, std::size_t{0}}) {
                const std::size_t v = 1 - w;
                const MPoly<K>& f = g[pick];
                if (f.degree_in(w) != 1) continue;
                auto cw = f.coefficients_in(w);  // f = cw[1] w + cw[0]
                if (!cw[1].is_constant() || cw[0].degree_in(w) > 0) continue;
                MPoly<K> hv = cw[0].scaled(-(k.one() / cw[1].constant_value()));  // w = hv(v)
                std::vector<MPoly<K>> subs(kMaxVars);
                subs[v] = MPoly<K>::variable(k, v);
                subs[w] = hv;
                UPoly<K> u(k);
                for (std::size_t j = 0; j < g.size(); ++j)
                    if (j != pick) u = gcd(u, g[j].substitute(subs).to_upoly(v));
                if (u.degree() < 0) continue;  // principal, handled below
                require(u.degree() > 0, ErrorCode::NotPrime, "ideal contains a unit");
                require(is_irreducible(u), ErrorCode::NotPrime, "ideal is not prime (reducible eliminant)");
                u = u.monic();
                UPoly<K> hred = hv.to_upoly(v) % u;
                // canonical generators: univariate polynomial first, then the linear one
                std::vector<MPoly<K>> gens;
                if (u.degree() == 1) {
                    // rational point: (x - a, y - b)
                    auto a = -u.coeff(0);
                    std::array<typename K::value_type, kMaxVars> pt{};
                    pt[v] = a;
                    pt[w] = hred.eval(a);
                    for (std::size_t i = 0; i < kMaxVars; ++i)
                        gens.push_back(MPoly<K>::variable(k, i) - MPoly<K>::constant(k, pt[i]));
                    std::vector<typename K::value_type> im(pt.begin(), pt.end());
                    return with(R, gens, PrimeTag::MaximalPoint, ResidueMap<K>{k, im});
                }
                gens.push_back(MPoly<K>::from_upoly(u, v));
                gens.push_back(MPoly<K>::variable(k, w) - MPoly<K>::from_upoly(hred, v));
                AnyResidue res = finite_extension(k, u, v, "t", [&](const auto& L, auto& im) {
                    if constexpr (std::is_same_v<std::remove_cvref_t<decltype(L)>, FiniteField>) {
                        im[w] = L.from_poly(hred);
                    }
                });
                return with(R, gens, PrimeTag::MaximalPoint, res);
            }
        }
        fail(ErrorCode::UnsupportedResidueField,
             "maximal ideals of " + R.desc.name() + " must contain a generator linear and monic in one variable");
    }

    static PrimeSpec make_principal_bivariate(const Ring<K>& R, MPoly<K> f) {
        const K& k = R.field;
        require(!f.is_constant(), ErrorCode::NotPrime, "ideal contains a unit");
        f = f.monic();
        // f linear in w with coefficients in K[v]: f = a(v) w + b(v), prime iff gcd(a, b) = 1
        for (std::size_t w : {std::size_t{1}, std::size_t{0}}) {
            const std::size_t v = 1 - w;
            if (f.degree_in(w) != 1) continue;
            auto cw = f.coefficients_in(w);
            if (cw[1].degree_in(w) > 0 || cw[0].degree_in(w) > 0) continue;
            MPoly<K> a = cw[1], b = cw[0];
            require(gcd(a, b).is_constant(), ErrorCode::NotPrime, R.format(f) + " is reducible");
            FunctionField<K> F(k, {R.vars()[v]});
            MPoly<K> a1 = detail::move_to_first(a, v), b1 = detail::move_to_first(b, v);
            std::vector<RatFun<K>> im(kMaxVars, F.zero());
            im[v] = F.variable(0);
            im[w] = F.fraction(b1.scaled(-k.one()), a1);
            return with(R, {f}, PrimeTag::PrincipalIrreducible, ResidueMap<FunctionField<K>>{F, im});
        }
        for (std::size_t v = 0; v < 2; ++v) {
            if (f.degree_in(1 - v) != 0) continue;
            UPoly<K> u = f.to_upoly(v);
            require(is_irreducible(u), ErrorCode::NotPrime, R.format(f) + " is reducible");
            fail(ErrorCode::UnsupportedResidueField,
                 "residue field of (" + R.format(f) + ") is a function field over a proper extension (unsupported)");
        }
        fail(ErrorCode::UnsupportedResidueField,
             "principal primes of " + R.desc.name() + " must be linear in one variable");
    }
};

// ---------------------------------------------------------------------------------------------
// Denominator ideals and localization

/// Generator of I_a = {r in R : r a in R}: positive over Z, primitive with positive content over
/// Z[x], monic over k[vars].
template <ExactField K, class E>
MPoly<K> denominator_ideal(const Ring<K>& R, const E& a) {
    if constexpr (std::is_same_v<E, Rational>) {
        static_assert(std::is_same_v<K, Rationals>);
        if (!R.desc.integral()) return R.one();
        return MPoly<K>::constant(R.field, Rational(a.den()));
    } else if constexpr (std::is_same_v<E, Fp>) {
        (void)a;
        return R.one();
    } else {
        static_assert(std::is_same_v<E, RatFun<K>>);
        if constexpr (std::is_same_v<K, Rationals>) {
            if (R.desc.integral()) {
                if (a.num.is_zero()) return R.one();
                MPoly<K> np = primitive_part(a.num), dp = primitive_part(a.den);
                Rational c = a.num.lc() / np.lc() / (a.den.lc() / dp.lc());
                return dp.scaled(Rational(c.den()));
            }
        }
        return a.den.monic();
    }
}

/// Writes a in Frac(R) as n/d with n, d in R and d the denominator-ideal generator.
template <ExactField K, class E>
std::pair<MPoly<K>, MPoly<K>> integral_fraction(const Ring<K>& R, const E& a) {
    MPoly<K> d = denominator_ideal(R, a);
    if constexpr (std::is_same_v<E, RatFun<K>>) {
        auto n = (a.num * d).divide_exact(a.den);
        require(n.has_value(), ErrorCode::InternalError, "denominator ideal does not clear the denominator");
        return {*n, d};
    } else {
        return {MPoly<K>::constant(R.field, a * d.constant_value()), d};
    }
}

template <ExactField K, class E>
bool is_in_localization(const E& a, const PrimeSpec<K>& p) {
    return !p.contains(denominator_ideal(p.ring(), a));
}

/// Reduction of a fraction-field element into k(p); NotReducible when a is not in R_p.
template <ExactField K, ExactField F, class E>
typename F::value_type reduce_scalar(const Ring<K>& R, const ResidueMap<F>& rm, const E& a) {
    auto [n, d] = integral_fraction(R, a);
    auto dd = rm(d);
    require(!is_zero(dd), ErrorCode::NotReducible, "element is not in the local ring at the prime");
    return rm(n) / dd;
}

/// Generator of the product of the denominator ideals.
template <ExactField K, class E>
MPoly<K> gen_locus(const Ring<K>& R, const std::vector<E>& values) {
    MPoly<K> g = R.one();
    for (const auto& a : values) g = g * denominator_ideal(R, a);
    return normalize_associate(R, g);
}

}  // namespace decompgen

#endif  // DECOMPGEN_PRIME_HPP
