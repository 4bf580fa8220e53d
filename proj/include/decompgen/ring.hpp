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

#ifndef DECOMPGEN_RING_HPP
#define DECOMPGEN_RING_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "fields.hpp"
#include "integer.hpp"
#include "mpoly.hpp"

namespace decompgen {

enum class CoefficientKind { Integers, Rationals, PrimeField };

/// One of Z, Z[x], Q, Q[x], Q[x,y], F_p, F_p[x], F_p[x,y].
struct RingDescriptor {
    CoefficientKind kind = CoefficientKind::Integers;
    std::uint64_t p = 0;
    std::vector<std::string> vars;

    std::size_t nvars() const { return vars.size(); }
    bool integral() const { return kind == CoefficientKind::Integers; }
    bool is_field() const { return vars.empty() && kind != CoefficientKind::Integers; }
    /// Z-like: Dedekind dimension one in the arithmetic direction.
    std::uint64_t characteristic() const { return kind == CoefficientKind::PrimeField ? p : 0; }

    std::string coefficient_name() const {
        switch (kind) {
            case CoefficientKind::Integers: return "ZZ";
            case CoefficientKind::Rationals: return "QQ";
            case CoefficientKind::PrimeField: return "GF(" + std::to_string(p) + ")";
        }
        return "?";
    }
    std::string name() const {
        std::string s = coefficient_name();
        if (vars.empty()) return s;
        s += "[";
        for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
        return s + "]";
    }

    void validate() const {
        if (kind == CoefficientKind::PrimeField)
            require(p >= 2 && is_prime_u64(p), ErrorCode::NotPrime, "GF(" + std::to_string(p) + "): not a prime");
        require(vars.size() <= (integral() ? 1u : 2u), ErrorCode::UnsupportedRing,
                "unsupported ring " + name() + " (at most one variable over ZZ, two over a field)");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const auto& v = vars[i];
            bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
            for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
            require(ok, ErrorCode::ParseError, "bad variable name '" + v + "'");
            for (std::size_t j = 0; j < i; ++j)
                require(vars[j] != v, ErrorCode::ParseError, "duplicate variable name '" + v + "'");
        }
    }

    /// Parses "ZZ", "ZZ[x]", "QQ[x,y]", "GF(5)[t]", "QQ", "GF(2)".
    static RingDescriptor parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        RingDescriptor r;
        std::string_view rest;
        if (text.starts_with("ZZ")) {
            r.kind = CoefficientKind::Integers;
            rest = text.substr(2);
        } else if (text.starts_with("QQ")) {
            r.kind = CoefficientKind::Rationals;
            rest = text.substr(2);
        } else if (text.starts_with("GF(")) {
            auto close = text.find(')');
            require(close != std::string_view::npos, ErrorCode::ParseError, "unterminated GF(");
            std::string num(trim(text.substr(3, close - 3)));
            require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos, ErrorCode::ParseError,
                    "bad characteristic in '" + std::string(text) + "'");
            r.kind = CoefficientKind::PrimeField;
            r.p = std::stoull(num);
            rest = text.substr(close + 1);
        } else {
            fail(ErrorCode::UnsupportedRing, "unknown ring '" + std::string(text) + "'");
        }
        rest = trim(rest);
        if (!rest.empty()) {
            require(rest.front() == '[' && rest.back() == ']', ErrorCode::ParseError,
                    "bad ring variables '" + std::string(rest) + "'");
            rest = rest.substr(1, rest.size() - 2);
            while (true) {
                auto comma = rest.find(',');
                r.vars.emplace_back(trim(rest.substr(0, comma)));
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
            }
        }
        r.validate();
        return r;
    }

    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// A supported ring together with the coefficient field K of its polynomial representation
/// (Q for integer rings, with integrality enforced).
template <ExactField K>
struct Ring {
    RingDescriptor desc;
    K field;

    std::size_t nvars() const { return desc.nvars(); }
    const std::vector<std::string>& vars() const { return desc.vars; }

    MPoly<K> zero() const { return MPoly<K>(field); }
    MPoly<K> one() const { return MPoly<K>::from_int(field, 1); }
    MPoly<K> from_int(long v) const { return MPoly<K>::from_int(field, v); }
    MPoly<K> variable(std::size_t i) const { return MPoly<K>::variable(field, i); }

    bool contains(const MPoly<K>& a) const {
        if (a.var_mask() >> nvars()) return false;
        if constexpr (std::is_same_v<K, Rationals>) {
            if (desc.integral())
                for (const auto& t : a.terms())
                    if (!t.c.is_integer()) return false;
        }
        return true;
    }
    void check(const MPoly<K>& a, std::string_view what) const {
        require(contains(a), ErrorCode::ParseError,
                std::string(what) + ": " + a.format(vars()) + " is not an element of " + desc.name());
    }

    std::string format(const MPoly<K>& a) const { return a.format(vars()); }
    MPoly<K> parse(std::string_view text) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.desc == b.desc; }
};

namespace detail {

template <ExactField K>
class PolyParser {
public:
    PolyParser(const Ring<K>& ring, std::string_view text) : ring_(ring), s_(text) {}

    MPoly<K> run() {
        MPoly<K> r = expr();
        skip();
        require(pos_ == s_.size(), ErrorCode::ParseError, err("unexpected trailing input"));
        return r;
    }

private:
    const Ring<K>& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;

    std::string err(std::string_view what) const {
        return std::string(what) + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'";
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    MPoly<K> expr() {
        skip();
        bool neg = eat('-');
        if (!neg) eat('+');
        MPoly<K> acc = term();
        if (neg) acc = acc.scaled(-ring_.field.one());
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    MPoly<K> term() {
        MPoly<K> acc = power();
        while (true) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                MPoly<K> d = power();
                require(d.is_constant() && !d.is_zero(), ErrorCode::ParseError, err("division by a non-constant or zero"));
                acc = acc.scaled(ring_.field.one() / d.constant_value());
            } else {
                return acc;
            }
        }
    }
    MPoly<K> power() {
        MPoly<K> base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            require(pos_ > start, ErrorCode::ParseError, err("expected exponent"));
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            require(e <= 4096, ErrorCode::ParseError, err("exponent too large"));
            MPoly<K> r = ring_.one();
            for (unsigned long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
    MPoly<K> atom() {
        skip();
        require(pos_ < s_.size(), ErrorCode::ParseError, err("unexpected end of input"));
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly<K> r = expr();
            require(eat(')'), ErrorCode::ParseError, err("expected ')'"));
            return r;
        }
        if (c == '-') {
            ++pos_;
            return power().scaled(-ring_.field.one());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class v(std::string(s_.substr(start, pos_ - start)));
            return MPoly<K>::constant(ring_.field, ring_.field.from_mpz(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < ring_.nvars(); ++i)
                if (ring_.vars()[i] == name) return ring_.variable(i);
            pos_ = start;
            fail(ErrorCode::ParseError, err("unknown variable '" + name + "'"));
        }
        fail(ErrorCode::ParseError, err(std::string("unexpected character '") + c + "'"));
    }
};

}  // namespace detail

/// Parses polynomial text such as `3*x^2*y - 1/2`; over integer rings the result must be integral.
template <ExactField K>
MPoly<K> Ring<K>::parse(std::string_view text) const {
    MPoly<K> r = detail::PolyParser<K>(*this, text).run();
    check(r, "parse");
    return r;
}

/// Coefficient field for a ring descriptor.
inline Rationals coefficient_field(const RingDescriptor& d, Rationals) {
    require(d.kind != CoefficientKind::PrimeField, ErrorCode::InternalError, "ring has finite coefficients");
    return Rationals{};
}
inline PrimeField coefficient_field(const RingDescriptor& d, PrimeField) {
    require(d.kind == CoefficientKind::PrimeField, ErrorCode::InternalError, "ring has rational coefficients");
    return PrimeField(d.p);
}

template <ExactField K>
Ring<K> make_ring(const RingDescriptor& d) {
    d.validate();
    return Ring<K>{d, coefficient_field(d, K{})};
}

// ---------------------------------------------------------------------------------------------
// Integer helpers for polynomials with rational coefficients

/// Least common denominator of the coefficients.
inline mpz_class common_denominator(const MPoly<Rationals>& a) {
    mpz_class l = 1;
    for (const auto& t : a.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.den().get_mpz_t());
    return l;
}

/// Gcd of the numerators (for integral input: the content), nonnegative.
inline mpz_class integer_content(const MPoly<Rationals>& a) {
    mpz_class g = 0;
    for (const auto& t : a.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.num().get_mpz_t());
    return g;
}

/// Unique integral primitive associate with positive leading coefficient.
inline MPoly<Rationals> primitive_part(const MPoly<Rationals>& a) {
    if (a.is_zero()) return a;
    MPoly<Rationals> b = a.scaled(Rational(common_denominator(a)));
    mpz_class c = integer_content(b);
    if (b.lc().sign() < 0) c = -c;
    return b.scaled(Rational(mpz_class(1), c));
}

/// Canonical associate of a ring element: positive primitive over integer rings, monic over fields.
template <ExactField K>
MPoly<K> normalize_associate(const Ring<K>& R, const MPoly<K>& a) {
    if (a.is_zero()) return a;
    if constexpr (std::is_same_v<K, Rationals>) {
        if (R.desc.integral()) {
            if (a.is_constant()) return MPoly<K>::constant(R.field, Rational(mpz_class(abs(a.constant_value().num()))));
            return primitive_part(a).scaled(Rational(integer_content(a)));
        }
    }
    return a.monic();
}

}  // namespace decompgen

#endif  // DECOMPGEN_RING_HPP
