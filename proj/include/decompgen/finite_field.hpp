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

#ifndef DECOMPGEN_FINITE_FIELD_HPP
#define DECOMPGEN_FINITE_FIELD_HPP

#include <memory>
#include <string>
#include <utility>

#include "fields.hpp"
#include "upoly.hpp"

namespace decompgen {

struct FiniteFieldContext {
    PrimeField base;
    UPoly<PrimeField> modulus;  // monic irreducible of degree e
    std::string generator;      // display name of the class of X
};

/// Element of F_q = F_p[t]/(m(t)), stored as its reduced representative.
struct Fq {
    std::shared_ptr<const FiniteFieldContext> ctx;
    UPoly<PrimeField> v;

    Fq& operator+=(const Fq& o) { v += o.v; return *this; }
    Fq& operator-=(const Fq& o) { v -= o.v; return *this; }
    Fq& operator*=(const Fq& o) {
        v = (v * o.v) % ctx->modulus;
        return *this;
    }
    Fq inv() const {
        require(!v.is_zero(), ErrorCode::InternalError, "division by zero in GF(q)");
        auto [g, s, t] = extended_gcd(v, ctx->modulus);
        return Fq{ctx, s % ctx->modulus};
    }
    Fq& operator/=(const Fq& o) { return *this *= o.inv(); }
    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
    friend Fq operator-(const Fq& a) { return Fq{a.ctx, -a.v}; }
    friend bool operator==(const Fq& a, const Fq& b) { return a.v == b.v; }
};

inline bool is_zero(const Fq& a) { return a.v.is_zero(); }
inline bool is_one(const Fq& a) { return a.v.degree() == 0 && is_one(a.v.coeffs()[0]); }
inline Fq inverse(const Fq& a) { return a.inv(); }

/// The finite field F_p[t]/(m).
class FiniteField {
public:
    using value_type = Fq;

    FiniteField() = default;
    FiniteField(const PrimeField& base, const UPoly<PrimeField>& modulus, std::string generator = "t") {
        require(modulus.degree() >= 1, ErrorCode::UnsupportedResidueField, "modulus must be nonconstant");
        ctx_ = std::make_shared<const FiniteFieldContext>(
            FiniteFieldContext{base, modulus.monic(), std::move(generator)});
    }

    const PrimeField& base() const { return ctx_->base; }
    const UPoly<PrimeField>& modulus() const { return ctx_->modulus; }
    int degree() const { return ctx_->modulus.degree(); }
    const std::string& generator_name() const { return ctx_->generator; }

    Fq zero() const { return Fq{ctx_, UPoly<PrimeField>(ctx_->base)}; }
    Fq one() const { return embed(ctx_->base.one()); }
    Fq from_int(long v) const { return embed(ctx_->base.from_int(v)); }
    Fq from_mpz(const mpz_class& v) const { return embed(ctx_->base.from_mpz(v)); }
    Fq embed(const Fp& a) const { return Fq{ctx_, UPoly<PrimeField>::constant(ctx_->base, a)}; }
    Fq generator() const { return from_poly(UPoly<PrimeField>::x(ctx_->base)); }
    Fq from_poly(const UPoly<PrimeField>& f) const { return Fq{ctx_, f % ctx_->modulus}; }

    std::uint64_t characteristic() const { return ctx_->base.p; }
    bool is_finite() const { return true; }
    mpz_class size() const {
        mpz_class q = 1;
        for (int i = 0; i < degree(); ++i) q *= from_u64(ctx_->base.p);
        return q;
    }
    std::string name() const {
        return "GF(" + std::to_string(ctx_->base.p) + "^" + std::to_string(degree()) + ")[" + ctx_->generator +
               "]/(" + ctx_->modulus.format(ctx_->generator) + ")";
    }
    std::string format(const Fq& a) const { return a.v.format(ctx_->generator); }
    int compare(const Fq& a, const Fq& b) const {
        if (a.v.degree() != b.v.degree()) return a.v.degree() < b.v.degree() ? -1 : 1;
        for (int i = a.v.degree(); i >= 0; --i) {
            int c = ctx_->base.compare(a.v.coeff(static_cast<std::size_t>(i)), b.v.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c;
        }
        return 0;
    }
    Fq pth_root(const Fq& a) const {
        // Frobenius has order e, so a^(p^(e-1)) is the p-th root.
        Fq r = a;
        for (int i = 0; i + 1 < degree(); ++i) r = power(r, from_u64(ctx_->base.p));
        return r;
    }
    Fq power(Fq a, mpz_class e) const {
        Fq r = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r *= a;
            e >>= 1;
            if (e > 0) a *= a;
        }
        return r;
    }
    template <class Rng>
    Fq random(Rng& rng) const {
        std::vector<Fp> c;
        for (int i = 0; i < degree(); ++i) c.push_back(ctx_->base.random(rng));
        return Fq{ctx_, UPoly<PrimeField>(ctx_->base, std::move(c))};
    }
    Fq element(std::uint64_t index) const {
        std::vector<Fp> c;
        for (int i = 0; i < degree(); ++i) {
            c.push_back(ctx_->base.element(index % ctx_->base.p));
            index /= ctx_->base.p;
        }
        return Fq{ctx_, UPoly<PrimeField>(ctx_->base, std::move(c))};
    }
    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.ctx_ == b.ctx_ || (a.ctx_->base == b.ctx_->base && a.ctx_->modulus == b.ctx_->modulus);
    }

private:
    std::shared_ptr<const FiniteFieldContext> ctx_;
};

}  // namespace decompgen

#endif  // DECOMPGEN_FINITE_FIELD_HPP
