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

#ifndef DECOMPGEN_UPOLY_HPP
#define DECOMPGEN_UPOLY_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace decompgen {

/// Dense univariate polynomial over an exact field; coefficients stored low to high,
/// no trailing zeros (the zero polynomial has no coefficients).
template <ExactField F>
class UPoly {
public:
    using E = typename F::value_type;

    UPoly() = default;
    explicit UPoly(F field) : field_(std::move(field)) {}
    UPoly(F field, std::vector<E> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const F& f, E c) { return UPoly(f, {std::move(c)}); }
    static UPoly x(const F& f) { return UPoly(f, {f.zero(), f.one()}); }
    /// X - a
    static UPoly linear(const F& f, const E& root) { return UPoly(f, {-root, f.one()}); }
    static UPoly monomial(const F& f, E c, std::size_t deg) {
        std::vector<E> v(deg + 1, f.zero());
        v[deg] = std::move(c);
        return UPoly(f, std::move(v));
    }

    const F& field() const { return field_; }
    const std::vector<E>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    E lc() const { return c_.empty() ? field_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && is_one_elem(c_.back()); }

    UPoly monic() const {
        if (c_.empty()) return *this;
        E inv = field_.one() / c_.back();
        return scaled(inv);
    }
    UPoly scaled(const E& s) const {
        if (scalar_is_zero(s)) return UPoly(field_);
        std::vector<E> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a * s);
        return UPoly(field_, std::move(v));
    }

    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(const UPoly& a) { return UPoly(a.field_) - a; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
        std::vector<E> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(a.field_, std::move(v));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Euclidean division; divisor must be nonzero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        require(!d.is_zero(), ErrorCode::InternalError, "polynomial division by zero");
        UPoly r = *this;
        if (r.degree() < d.degree()) return {UPoly(field_), r};
        std::vector<E> q(r.c_.size() - d.c_.size() + 1, field_.zero());
        E inv = field_.one() / d.lc();
        const std::size_t dd = d.c_.size() - 1;
        for (int k = r.degree() - d.degree(); k >= 0; --k) {
            const std::size_t top = static_cast<std::size_t>(k) + dd;
            if (top >= r.c_.size() || scalar_is_zero(r.c_[top])) continue;
            E t = r.c_[top] * inv;
            for (std::size_t i = 0; i <= dd; ++i) r.c_[static_cast<std::size_t>(k) + i] -= t * d.c_[i];
            q[static_cast<std::size_t>(k)] = std::move(t);
        }
        r.trim();
        return {UPoly(field_, std::move(q)), std::move(r)};
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }

    bool divides(const UPoly& f) const { return (f % *this).is_zero(); }

    E eval(const E& x) const {
        E acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly(field_);
        std::vector<E> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * field_.from_int(static_cast<long>(i)));
        return UPoly(field_, std::move(v));
    }

    /// Substitute g for X.
    UPoly compose(const UPoly& g) const {
        UPoly acc(field_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(field_, c_[i]);
        return acc;
    }

    std::string format(const std::string& var = "X") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (scalar_is_zero(c_[i])) continue;
            std::string cs = field_.format(c_[i]);
            bool neg = false;
            if (field_.characteristic() == 0 && !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
                neg = true;
                cs = cs.substr(1);
            }
            bool compound = cs.find_first_of("+-/") != std::string::npos;
            if (!out.empty()) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (i == 0) out += cs;
            else if (cs == "1") out += mono;
            else out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
        }
        return out;
    }

private:
    static bool is_one_elem(const E& e) { return scalar_is_one(e); }
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }

    F field_{};
    std::vector<E> c_;
};

template <ExactField F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        UPoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
template <ExactField F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> extended_gcd(const UPoly<F>& a, const UPoly<F>& b) {
    const F& f = a.field();
    UPoly<F> r0 = a, r1 = b;
    UPoly<F> s0 = UPoly<F>::constant(f, f.one()), s1(f);
    UPoly<F> t0(f), t1 = UPoly<F>::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly<F> s2 = s0 - q * s1;
        UPoly<F> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto inv = f.one() / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// base^e mod m.
template <ExactField F>
UPoly<F> powmod(UPoly<F> base, mpz_class e, const UPoly<F>& m) {
    UPoly<F> result = UPoly<F>::constant(m.field(), m.field().one()) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return result;
}

template <ExactField F>
UPoly<F> pow(const UPoly<F>& base, unsigned e) {
    UPoly<F> r = UPoly<F>::constant(base.field(), base.field().one());
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// Largest k with g^k | f (g nonconstant, f nonzero).
template <ExactField F>
unsigned multiplicity(UPoly<F> f, const UPoly<F>& g) {
    unsigned k = 0;
    while (true) {
        auto [q, r] = f.divmod(g);
        if (!r.is_zero()) return k;
        f = std::move(q);
        ++k;
    }
}

}  // namespace decompgen

#endif  // DECOMPGEN_UPOLY_HPP
