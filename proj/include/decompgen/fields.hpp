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

#ifndef DECOMPGEN_FIELDS_HPP
#define DECOMPGEN_FIELDS_HPP

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>

#include "error.hpp"
#include "integer.hpp"

namespace decompgen {

/// Arbitrary-precision rational in canonical form (positive denominator, gcd 1).
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        require(d != 0, ErrorCode::ParseError, "zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& get() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        require(sgn(o.v_) != 0, ErrorCode::InternalError, "division by zero in QQ");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.sign() == 0; }
inline bool is_one(const Rational& a) { return a.get() == 1; }
inline Rational inverse(const Rational& a) { return Rational(1) / a; }

/// The field of rational numbers.
struct Rationals {
    using value_type = Rational;

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long v) const { return Rational(v); }
    Rational from_mpz(const mpz_class& v) const { return Rational(v); }
    std::uint64_t characteristic() const { return 0; }
    bool is_finite() const { return false; }
    std::string name() const { return "QQ"; }
    std::string format(const Rational& a) const { return a.str(); }
    /// Numeric order.
    int compare(const Rational& a, const Rational& b) const {
        auto c = a <=> b;
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Element of F_p. The modulus travels with the value so that arithmetic needs no context.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    }

    Fp& operator+=(const Fp& o) {
        v = v + o.v;
        if (v >= p || v < o.v) v -= p;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v = v >= o.v ? v - o.v : v + (p - o.v);
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        v = mulmod(v, o.v, p);
        return *this;
    }
    Fp inv() const {
        require(v != 0, ErrorCode::InternalError, "division by zero in GF(p)");
        // Fermat; p is prime.
        std::uint64_t r = 1, b = v, e = p - 2;
        while (e > 0) {
            if (e & 1) r = mulmod(r, b, p);
            b = mulmod(b, b, p);
            e >>= 1;
        }
        return Fp{r, p};
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp{a.v == 0 ? 0 : a.p - a.v, a.p}; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }

/// Element predicates dispatched by argument-dependent lookup, usable inside classes whose own
/// is_zero member would otherwise hide the free functions.
template <class T>
bool scalar_is_zero(const T& a) {
    return is_zero(a);
}
template <class T>
bool scalar_is_one(const T& a) {
    return is_one(a);
}
inline bool is_one(const Fp& a) { return a.v == 1; }
inline Fp inverse(const Fp& a) { return a.inv(); }

/// The prime field F_p.
struct PrimeField {
    using value_type = Fp;
    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        require(is_prime_u64(prime), ErrorCode::NotPrime, std::to_string(prime) + " is not prime");
    }

    Fp zero() const { return Fp{0, p}; }
    Fp one() const { return Fp{1 % p, p}; }
    Fp from_int(long v) const {
        long m = static_cast<long>(p > static_cast<std::uint64_t>(LONG_MAX) ? 0 : p);
        if (m != 0) {
            long r = v % m;
            if (r < 0) r += m;
            return Fp{static_cast<std::uint64_t>(r), p};
        }
        return from_mpz(mpz_class(v));
    }
    Fp from_mpz(const mpz_class& v) const {
        mpz_class r;
        mpz_class mod = from_u64(p);
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        return Fp{to_u64(r), p};
    }
    Fp from_rational(const Rational& q) const {
        Fp d = from_mpz(q.den());
        require(!is_zero(d), ErrorCode::NotReducible,
                q.str() + " has denominator divisible by " + std::to_string(p));
        return from_mpz(q.num()) / d;
    }
    std::uint64_t characteristic() const { return p; }
    bool is_finite() const { return true; }
    mpz_class size() const { return from_u64(p); }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
    std::string format(const Fp& a) const { return std::to_string(a.v); }
    /// Order of the symmetric representatives in (-p/2, p/2].
    int compare(const Fp& a, const Fp& b) const {
        auto sym = [&](std::uint64_t v) { return v > p / 2 ? static_cast<std::int64_t>(v) - static_cast<std::int64_t>(p) : static_cast<std::int64_t>(v); };
        const auto x = sym(a.v), y = sym(b.v);
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    Fp pth_root(const Fp& a) const { return a; }
    template <class Rng>
    Fp random(Rng& rng) const {
        return Fp{std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng), p};
    }
    /// Enumerates the first min(p, count) elements 0, 1, 2, ...
    Fp element(std::uint64_t index) const { return Fp{index % p, p}; }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a) {
    typename F::value_type;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(1L) } -> std::same_as<typename F::value_type>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.is_finite() } -> std::convertible_to<bool>;
    { f.name() } -> std::convertible_to<std::string>;
    { f.format(a) } -> std::convertible_to<std::string>;
    { f.compare(a, a) } -> std::convertible_to<int>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { a + a } -> std::convertible_to<typename F::value_type>;
    { a - a } -> std::convertible_to<typename F::value_type>;
    { a * a } -> std::convertible_to<typename F::value_type>;
    { a / a } -> std::convertible_to<typename F::value_type>;
    { -a } -> std::convertible_to<typename F::value_type>;
    { a == a } -> std::convertible_to<bool>;
};

template <class F>
concept FiniteExactField = ExactField<F> && requires(const F& f, const typename F::value_type& a, std::mt19937_64& rng) {
    { f.size() } -> std::convertible_to<mpz_class>;
    { f.pth_root(a) } -> std::same_as<typename F::value_type>;
    { f.random(rng) } -> std::same_as<typename F::value_type>;
};

}  // namespace decompgen

#endif  // DECOMPGEN_FIELDS_HPP
