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

#ifndef DECOMPGEN_FUNCTION_FIELD_HPP
#define DECOMPGEN_FUNCTION_FIELD_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "mpoly.hpp"

namespace decompgen {

template <ExactField K>
struct FunctionFieldContext {
    K base;
    std::vector<std::string> vars;
};

/// Element of K(x[, y]) as num/den with gcd(num, den) = 1 and den of leading coefficient one.
template <ExactField K>
struct RatFun {
    std::shared_ptr<const FunctionFieldContext<K>> ctx;
    MPoly<K> num;
    MPoly<K> den;

    static RatFun make(std::shared_ptr<const FunctionFieldContext<K>> c, MPoly<K> n, MPoly<K> d) {
        require(!d.is_zero(), ErrorCode::InternalError, "zero denominator in function field");
        RatFun r{std::move(c), std::move(n), std::move(d)};
        r.normalize();
        return r;
    }

    bool den_is_one() const { return den.is_constant(); }

    RatFun& operator+=(const RatFun& o) { return *this = add(*this, o, false); }
    RatFun& operator-=(const RatFun& o) { return *this = add(*this, o, true); }
    RatFun& operator*=(const RatFun& o) { return *this = mul(*this, o); }
    RatFun& operator/=(const RatFun& o) { return *this = mul(*this, o.inv()); }
    friend RatFun operator+(const RatFun& a, const RatFun& b) { return add(a, b, false); }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return add(a, b, true); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) { return mul(a, b); }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return mul(a, b.inv()); }
    friend RatFun operator-(const RatFun& a) { return RatFun{a.ctx, -a.num, a.den}; }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num == b.num && a.den == b.den; }

    RatFun inv() const {
        require(!num.is_zero(), ErrorCode::InternalError, "division by zero in function field");
        RatFun r{ctx, den, num};
        r.fix_sign();
        return r;
    }

private:
    void fix_sign() {
        if (den.is_zero()) return;
        auto s = den.field().one() / den.lc();
        if (!is_one(s)) {
            num = num.scaled(s);
            den = den.scaled(s);
        }
    }
    void normalize() {
        if (num.is_zero()) {
            den = MPoly<K>::from_int(den.field(), 1);
            return;
        }
        if (!den.is_constant()) {
            MPoly<K> g = gcd(num, den);
            if (!g.is_constant()) {
                num = *num.divide_exact(g);
                den = *den.divide_exact(g);
            }
        }
        fix_sign();
    }
    static RatFun add(const RatFun& a, const RatFun& b, bool subtract) {
        if (a.den_is_one() && b.den_is_one()) {
            return RatFun{a.ctx, subtract ? a.num - b.num : a.num + b.num, a.den};
        }
        if (a.den == b.den) return make(a.ctx, subtract ? a.num - b.num : a.num + b.num, a.den);
        MPoly<K> g = gcd(a.den, b.den);
        MPoly<K> ad = *a.den.divide_exact(g), bd = *b.den.divide_exact(g);
        MPoly<K> n = subtract ? a.num * bd - b.num * ad : a.num * bd + b.num * ad;
        return make(a.ctx, std::move(n), a.den * bd);
    }
    static RatFun mul(const RatFun& a, const RatFun& b) {
        if (a.num.is_zero() || b.num.is_zero()) return RatFun{a.ctx, MPoly<K>(a.num.field()), MPoly<K>::from_int(a.num.field(), 1)};
        if (a.den_is_one() && b.den_is_one()) return RatFun{a.ctx, a.num * b.num, a.den};
        MPoly<K> an = a.num, ad = a.den, bn = b.num, bd = b.den;
        if (!bd.is_constant()) {
            MPoly<K> g1 = gcd(an, bd);
            if (!g1.is_constant()) {
                an = *an.divide_exact(g1);
                bd = *bd.divide_exact(g1);
            }
        }
        if (!ad.is_constant()) {
            MPoly<K> g2 = gcd(bn, ad);
            if (!g2.is_constant()) {
                bn = *bn.divide_exact(g2);
                ad = *ad.divide_exact(g2);
            }
        }
        RatFun r{a.ctx, an * bn, ad * bd};
        r.fix_sign();
        return r;
    }
};

template <ExactField K>
bool is_zero(const RatFun<K>& a) {
    return a.num.is_zero();
}
template <ExactField K>
bool is_one(const RatFun<K>& a) {
    return a.num == a.den;
}
template <ExactField K>
RatFun<K> inverse(const RatFun<K>& a) {
    return a.inv();
}

/// Rational function field K(vars) with one or two variables.
template <ExactField K>
class FunctionField {
public:
    using value_type = RatFun<K>;
    using base_field = K;

    FunctionField() = default;
    FunctionField(K base, std::vector<std::string> vars) {
        require(vars.size() <= kMaxVars, ErrorCode::UnsupportedRing, "at most two variables supported");
        ctx_ = std::make_shared<const FunctionFieldContext<K>>(FunctionFieldContext<K>{std::move(base), std::move(vars)});
    }

    const K& base() const { return ctx_->base; }
    const std::vector<std::string>& vars() const { return ctx_->vars; }
    std::size_t nvars() const { return ctx_->vars.size(); }

    value_type zero() const { return value_type{ctx_, MPoly<K>(base()), one_poly()}; }
    value_type one() const { return value_type{ctx_, one_poly(), one_poly()}; }
    value_type from_int(long v) const { return embed(base().from_int(v)); }
    value_type from_mpz(const mpz_class& v) const { return embed(base().from_mpz(v)); }
    value_type embed(const typename K::value_type& c) const {
        return value_type{ctx_, MPoly<K>::constant(base(), c), one_poly()};
    }
    value_type variable(std::size_t i) const { return value_type{ctx_, MPoly<K>::variable(base(), i), one_poly()}; }
    value_type from_poly(MPoly<K> p) const { return value_type{ctx_, std::move(p), one_poly()}; }
    value_type fraction(MPoly<K> n, MPoly<K> d) const { return value_type::make(ctx_, std::move(n), std::move(d)); }

    std::uint64_t characteristic() const { return base().characteristic(); }
    bool is_finite() const { return false; }
    std::string name() const {
        std::string s = base().name() + "(";
        for (std::size_t i = 0; i < vars().size(); ++i) s += (i ? "," : "") + vars()[i];
        return s + ")";
    }
    std::string format(const value_type& a) const {
        std::string n = a.num.format(vars());
        if (a.den_is_one()) return n;
        std::string d = a.den.format(vars());
        auto wrap = [](const std::string& s) {
            return s.find_first_of(" */") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(n) + "/" + wrap(d);
    }
    /// Char 0: the ordering with every variable larger than all constants (sign of the leading
    /// coefficient). Char p: lexicographic on the canonical representation.
    int compare(const value_type& a, const value_type& b) const {
        if (a == b) return 0;
        if (characteristic() == 0) {
            value_type d = a - b;
            return base().compare(d.num.lc(), base().zero()) < 0 ? -1 : 1;
        }
        int c = a.num.compare(b.num);
        return c != 0 ? c : a.den.compare(b.den);
    }
    friend bool operator==(const FunctionField& a, const FunctionField& b) {
        return a.ctx_ == b.ctx_ || (a.base() == b.base() && a.vars() == b.vars());
    }

private:
    MPoly<K> one_poly() const { return MPoly<K>::from_int(base(), 1); }
    std::shared_ptr<const FunctionFieldContext<K>> ctx_;
};

}  // namespace decompgen

#endif  // DECOMPGEN_FUNCTION_FIELD_HPP
