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

#ifndef DECOMPGEN_MPOLY_HPP
#define DECOMPGEN_MPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "upoly.hpp"

namespace decompgen {

inline constexpr std::size_t kMaxVars = 2;
using Monomial = std::array<std::uint32_t, kMaxVars>;

inline std::uint32_t total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

/// Degree-lexicographic comparison with x0 > x1; returns <0, 0, >0.
inline int deglex_compare(const Monomial& a, const Monomial& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial operator-(const Monomial& b, const Monomial& a) {
    Monomial r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = b[i] - a[i];
    return r;
}

/// Sparse polynomial in at most two variables over an exact field, terms kept in strictly
/// decreasing degree-lexicographic order with no zero coefficients.
template <ExactField K>
class MPoly {
public:
    using E = typename K::value_type;
    struct Term {
        Monomial m;
        E c;
    };

    MPoly() = default;
    explicit MPoly(K field) : field_(std::move(field)) {}
    MPoly(K field, std::vector<Term> terms) : field_(std::move(field)), t_(std::move(terms)) { normalize(); }

    static MPoly constant(const K& f, const E& c) {
        MPoly p(f);
        if (!scalar_is_zero(c)) p.t_.push_back(Term{Monomial{}, c});
        return p;
    }
    static MPoly from_int(const K& f, long v) { return constant(f, f.from_int(v)); }
    static MPoly variable(const K& f, std::size_t index) {
        Monomial m{};
        m[index] = 1;
        return MPoly(f, {Term{m, f.one()}});
    }
    static MPoly monomial(const K& f, const Monomial& m, const E& c) { return MPoly(f, {Term{m, c}}); }

    const K& field() const { return field_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && total_degree(t_[0].m) == 0); }
    E constant_value() const {
        if (t_.empty()) return field_.zero();
        require(is_constant(), ErrorCode::InternalError, "constant_value of nonconstant polynomial");
        return t_[0].c;
    }
    E constant_term() const {
        if (!t_.empty() && total_degree(t_.back().m) == 0) return t_.back().c;
        return field_.zero();
    }
    const E& lc() const { return t_.front().c; }
    const Monomial& lm() const { return t_.front().m; }
    int total_deg() const { return t_.empty() ? -1 : static_cast<int>(total_degree(t_.front().m)); }
    int degree_in(std::size_t v) const {
        int d = t_.empty() ? -1 : 0;
        for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m[v]));
        return d;
    }
    /// Bitmask of variables that occur.
    unsigned var_mask() const {
        unsigned mask = 0;
        for (const auto& t : t_)
            for (std::size_t i = 0; i < kMaxVars; ++i)
                if (t.m[i] > 0) mask |= 1u << i;
        return mask;
    }

    MPoly& operator+=(const MPoly& o) { return *this = merge(*this, o, false); }
    MPoly& operator-=(const MPoly& o) { return *this = merge(*this, o, true); }
    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return MPoly(a.field_);
        if (b.t_.size() == 1 && total_degree(b.t_[0].m) == 0) return a.scaled(b.t_[0].c);
        if (a.t_.size() == 1 && total_degree(a.t_[0].m) == 0) return b.scaled(a.t_[0].c);
        std::vector<Term> v;
        v.reserve(a.t_.size() * b.t_.size());
        for (const auto& x : a.t_)
            for (const auto& y : b.t_) v.push_back(Term{x.m + y.m, x.c * y.c});
        return MPoly(a.field_, std::move(v));
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly scaled(const E& s) const {
        if (scalar_is_zero(s)) return MPoly(field_);
        MPoly r = *this;
        for (auto& t : r.t_) t.c = t.c * s;
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].m != b.t_[i].m || !(a.t_[i].c == b.t_[i].c)) return false;
        return true;
    }

    MPoly monic() const { return t_.empty() ? *this : scaled(field_.one() / lc()); }

    /// Exact division; nullopt when d does not divide *this.
    std::optional<MPoly> divide_exact(const MPoly& d) const {
        require(!d.is_zero(), ErrorCode::InternalError, "polynomial division by zero");
        if (d.is_constant()) return scaled(field_.one() / d.lc());
        MPoly r = *this;
        std::vector<Term> q;
        E inv = field_.one() / d.lc();
        while (!r.is_zero()) {
            if (!monomial_divides(d.lm(), r.lm())) return std::nullopt;
            Term t{r.lm() - d.lm(), r.lc() * inv};
            q.push_back(t);
            r -= d * MPoly(field_, {t});
        }
        return MPoly(field_, std::move(q));
    }

    E eval(const std::array<E, kMaxVars>& point) const {
        E acc = field_.zero();
        for (const auto& t : t_) {
            E m = t.c;
            for (std::size_t i = 0; i < kMaxVars; ++i)
                for (std::uint32_t k = 0; k < t.m[i]; ++k) m = m * point[i];
            acc += m;
        }
        return acc;
    }

    /// Ring morphism into another field: coefficients through coef_map, x_i to images[i].
    template <ExactField T, class CoefMap>
    typename T::value_type map_into(const T& target, const std::vector<typename T::value_type>& images,
                                    CoefMap&& coef_map) const {
        using TE = typename T::value_type;
        std::array<std::vector<TE>, kMaxVars> powers;
        TE acc = target.zero();
        for (const auto& t : t_) {
            TE m = coef_map(t.c);
            for (std::size_t i = 0; i < kMaxVars; ++i) {
                if (t.m[i] == 0) continue;
                require(i < images.size(), ErrorCode::InternalError, "missing variable image");
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(target.one());
                while (pw.size() <= t.m[i]) pw.push_back(pw.back() * images[i]);
                m = m * pw[t.m[i]];
            }
            acc += m;
        }
        return acc;
    }

    /// Polynomial substitution x_i -> subs[i] (same coefficient field).
    MPoly substitute(const std::vector<MPoly>& subs) const {
        MPoly acc(field_);
        std::array<std::vector<MPoly>, kMaxVars> powers;
        for (const auto& t : t_) {
            MPoly m = constant(field_, t.c);
            for (std::size_t i = 0; i < kMaxVars; ++i) {
                if (t.m[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(from_int(field_, 1));
                while (pw.size() <= t.m[i]) pw.push_back(pw.back() * subs[i]);
                m = m * pw[t.m[i]];
            }
            acc += m;
        }
        return acc;
    }

    MPoly derivative(std::size_t v) const {
        std::vector<Term> out;
        for (const auto& t : t_) {
            if (t.m[v] == 0) continue;
            Monomial m = t.m;
            E c = t.c * field_.from_int(static_cast<long>(m[v]));
            m[v] -= 1;
            out.push_back(Term{m, c});
        }
        return MPoly(field_, std::move(out));
    }

    /// View as a univariate polynomial in variable v (others must be absent).
    UPoly<K> to_upoly(std::size_t v) const {
        std::vector<E> c(static_cast<std::size_t>(std::max(0, degree_in(v)) + 1), field_.zero());
        for (const auto& t : t_) {
            for (std::size_t i = 0; i < kMaxVars; ++i)
                require(i == v || t.m[i] == 0, ErrorCode::InternalError, "to_upoly: polynomial is not univariate");
            c[t.m[v]] = t.c;
        }
        return UPoly<K>(field_, std::move(c));
    }
    static MPoly from_upoly(const UPoly<K>& u, std::size_t v) {
        std::vector<Term> out;
        for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
            if (scalar_is_zero(u.coeffs()[i])) continue;
            Monomial m{};
            m[v] = static_cast<std::uint32_t>(i);
            out.push_back(Term{m, u.coeffs()[i]});
        }
        return MPoly(u.field(), std::move(out));
    }

    /// Coefficients with respect to variable v, as polynomials in the remaining variables.
    std::vector<MPoly> coefficients_in(std::size_t v) const {
        std::vector<MPoly> out(static_cast<std::size_t>(std::max(0, degree_in(v)) + 1), MPoly(field_));
        std::vector<std::vector<Term>> buckets(out.size());
        for (const auto& t : t_) {
            Monomial m = t.m;
            auto k = m[v];
            m[v] = 0;
            buckets[k].push_back(Term{m, t.c});
        }
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = MPoly(field_, std::move(buckets[k]));
        return out;
    }

    std::string format(const std::vector<std::string>& vars) const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& t : t_) {
            std::string cs = field_.format(t.c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < kMaxVars; ++i) {
                if (t.m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < vars.size() ? vars[i] : "x" + std::to_string(i);
                if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
            }
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

    /// Total order on polynomials used for canonical sorting (term lists compared lexicographically).
    int compare(const MPoly& o) const {
        for (std::size_t i = 0; i < std::min(t_.size(), o.t_.size()); ++i) {
            int c = deglex_compare(t_[i].m, o.t_[i].m);
            if (c != 0) return c;
            c = field_.compare(t_[i].c, o.t_[i].c);
            if (c != 0) return c;
        }
        if (t_.size() != o.t_.size()) return t_.size() < o.t_.size() ? -1 : 1;
        return 0;
    }

private:
    void normalize() {
        std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return deglex_compare(a.m, b.m) > 0; });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().m == t.m) out.back().c += t.c;
            else out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return scalar_is_zero(t.c); });
        t_ = std::move(out);
    }

    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r(a.field_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c = i == a.t_.size() ? -1 : (j == b.t_.size() ? 1 : deglex_compare(a.t_[i].m, b.t_[j].m));
            if (c > 0) {
                r.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                r.t_.push_back(Term{b.t_[j].m, subtract ? -b.t_[j].c : b.t_[j].c});
                ++j;
            } else {
                E s = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
                if (!scalar_is_zero(s)) r.t_.push_back(Term{a.t_[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    K field_{};
    std::vector<Term> t_;
};

namespace detail {

// Recursive view of a bivariate polynomial: coefficients of y^k as univariate polys in x.
template <ExactField K>
using Recursive = std::vector<UPoly<K>>;

template <ExactField K>
Recursive<K> to_recursive(const MPoly<K>& p) {
    Recursive<K> out;
    for (const auto& c : p.coefficients_in(1)) out.push_back(c.to_upoly(0));
    return out;
}

template <ExactField K>
MPoly<K> from_recursive(const K& f, const Recursive<K>& r) {
    MPoly<K> acc(f);
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k].is_zero()) continue;
        Monomial m{};
        m[1] = static_cast<std::uint32_t>(k);
        acc += MPoly<K>::from_upoly(r[k], 0) * MPoly<K>::monomial(f, m, f.one());
    }
    return acc;
}

template <ExactField K>
void trim(Recursive<K>& r) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

template <ExactField K>
UPoly<K> content(const Recursive<K>& r) {
    UPoly<K> g(r.front().field());
    for (const auto& c : r) g = gcd(g, c);
    return g;
}

template <ExactField K>
Recursive<K> divide_by(const Recursive<K>& r, const UPoly<K>& c) {
    Recursive<K> out;
    for (const auto& a : r) out.push_back(a / c);
    return out;
}

template <ExactField K>
Recursive<K> pseudo_remainder(Recursive<K> a, const Recursive<K>& b) {
    const UPoly<K>& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        UPoly<K> la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

}  // namespace detail

/// Greatest common divisor, normalized to leading coefficient one (degree-lex).
template <ExactField K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b) {
    const K& f = a.field();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    unsigned mask = a.var_mask() | b.var_mask();
    if (mask == 0) return MPoly<K>::from_int(f, 1);
    if (mask == 1u || mask == 2u) {
        std::size_t v = mask == 1u ? 0 : 1;
        return MPoly<K>::from_upoly(gcd(a.to_upoly(v), b.to_upoly(v)), v);
    }
    auto ra = detail::to_recursive(a);
    auto rb = detail::to_recursive(b);
    UPoly<K> ca = detail::content(ra), cb = detail::content(rb);
    UPoly<K> c = gcd(ca, cb);
    ra = detail::divide_by(ra, ca);
    rb = detail::divide_by(rb, cb);
    if (ra.size() < rb.size()) std::swap(ra, rb);
    MPoly<K> g = MPoly<K>::from_int(f, 1);
    while (true) {
        if (rb.size() <= 1) break;  // primitive of y-degree 0 is a unit
        auto r = detail::pseudo_remainder(ra, rb);
        if (r.empty()) {
            g = detail::from_recursive(f, rb);
            break;
        }
        ra = std::move(rb);
        rb = detail::divide_by(r, detail::content(r));
    }
    return (MPoly<K>::from_upoly(c, 0) * g).monic();
}

}  // namespace decompgen

#endif  // DECOMPGEN_MPOLY_HPP
