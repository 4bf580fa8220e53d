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

#ifndef DECOMPGEN_FACTOR_HPP
#define DECOMPGEN_FACTOR_HPP

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <random>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "finite_field.hpp"
#include "function_field.hpp"
#include "upoly.hpp"

namespace decompgen {

template <ExactField F>
struct Factorization {
    typename F::value_type unit;
    std::vector<std::pair<UPoly<F>, unsigned>> factors;  // monic, pairwise distinct

    UPoly<F> expand(const F& f) const {
        UPoly<F> r = UPoly<F>::constant(f, unit);
        for (const auto& [g, e] : factors) r *= pow(g, e);
        return r;
    }
};

// ---------------------------------------------------------------------------------------------
// p-th roots (only meaningful in characteristic p)

template <ExactField F>
std::optional<typename F::value_type> try_pth_root(const F& f, const typename F::value_type& a) {
    if constexpr (requires { f.pth_root(a); }) {
        return f.pth_root(a);
    } else if constexpr (std::is_same_v<F, FunctionField<PrimeField>>) {
        const std::uint64_t p = f.characteristic();
        auto root = [&](const MPoly<PrimeField>& q) -> std::optional<MPoly<PrimeField>> {
            std::vector<typename MPoly<PrimeField>::Term> out;
            for (const auto& t : q.terms()) {
                Monomial m = t.m;
                for (auto& e : m) {
                    if (e % p != 0) return std::nullopt;
                    e = static_cast<std::uint32_t>(e / p);
                }
                out.push_back({m, t.c});
            }
            return MPoly<PrimeField>(q.field(), std::move(out));
        };
        auto n = root(a.num), d = root(a.den);
        if (!n || !d) return std::nullopt;
        return f.fraction(*n, *d);
    } else {
        (void)a;
        return std::nullopt;
    }
}

/// f(X) = g(X^p) -> g^(1/p) when every coefficient has a p-th root.
template <ExactField F>
std::optional<UPoly<F>> try_pth_root(const UPoly<F>& f) {
    const auto p = f.field().characteristic();
    if (p == 0) return std::nullopt;
    std::vector<typename F::value_type> c;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i % p != 0) {
            if (!is_zero(f.coeffs()[i])) return std::nullopt;
            continue;
        }
        auto r = try_pth_root(f.field(), f.coeffs()[i]);
        if (!r) return std::nullopt;
        c.push_back(*r);
    }
    return UPoly<F>(f.field(), std::move(c));
}

/// Square-free decomposition f = lc * prod s_i^i. Over imperfect fields of characteristic p a
/// remaining inseparable piece is returned as-is (it is then not necessarily square-free).
template <ExactField F>
std::vector<std::pair<UPoly<F>, unsigned>> squarefree_decomposition(const UPoly<F>& f_in) {
    std::vector<std::pair<UPoly<F>, unsigned>> out;
    if (f_in.degree() <= 0) return out;
    UPoly<F> f = f_in.monic();
    const F& fld = f.field();
    const auto p = fld.characteristic();
    auto emit = [&](const UPoly<F>& g, unsigned m) {
        if (g.degree() <= 0) return;
        for (auto& [h, e] : out)
            if (h == g) {
                e += m;
                return;
            }
        out.emplace_back(g, m);
    };
    // recursion over p-th roots
    std::vector<std::pair<UPoly<F>, unsigned>> stack{{f, 1}};
    while (!stack.empty()) {
        auto [g, scale] = stack.back();
        stack.pop_back();
        UPoly<F> d = g.derivative();
        if (d.is_zero()) {
            auto r = try_pth_root(g);
            if (r) stack.emplace_back(r->monic(), scale * static_cast<unsigned>(p));
            else emit(g, scale);
            continue;
        }
        UPoly<F> c = gcd(g, d);
        UPoly<F> w = g / c;
        unsigned i = 1;
        while (w.degree() > 0) {
            UPoly<F> y = gcd(w, c);
            UPoly<F> z = w / y;
            emit(z.monic(), i * scale);
            ++i;
            w = y;
            c = c / y;
        }
        if (c.degree() > 0) {
            // In characteristic 0 c is constant here; otherwise c = h^p.
            auto r = try_pth_root(c.monic());
            if (r) stack.emplace_back(r->monic(), scale * static_cast<unsigned>(p));
            else emit(c.monic(), scale);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first.degree() < b.first.degree();
    });
    return out;
}

// ---------------------------------------------------------------------------------------------
// Finite fields: Cantor–Zassenhaus

namespace detail {

template <FiniteExactField F>
std::vector<std::pair<UPoly<F>, int>> distinct_degree(UPoly<F> f) {
    const F& fld = f.field();
    const mpz_class q = fld.size();
    std::vector<std::pair<UPoly<F>, int>> out;
    UPoly<F> x = UPoly<F>::x(fld);
    UPoly<F> h = x % f;
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = powmod(h, q, f);
        UPoly<F> g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

template <FiniteExactField F, class Rng>
void equal_degree(const UPoly<F>& g, int d, Rng& rng, std::vector<UPoly<F>>& out) {
    if (g.degree() <= d) {
        out.push_back(g.monic());
        return;
    }
    const F& fld = g.field();
    const mpz_class q = fld.size();
    while (true) {
        std::vector<typename F::value_type> c;
        for (int i = 0; i < g.degree(); ++i) c.push_back(fld.random(rng));
        UPoly<F> a(fld, std::move(c));
        if (a.degree() <= 0) continue;
        UPoly<F> b(fld);
        if (fld.characteristic() == 2) {
            // absolute trace to F_2
            mpz_class k = 0;
            for (mpz_class t = q; t > 1; t /= 2) ++k;
            UPoly<F> acc = a % g, term = a % g;
            const long steps = k.get_si() * d;
            for (long i = 1; i < steps; ++i) {
                term = (term * term) % g;
                acc += term;
            }
            b = acc;
        } else {
            mpz_class e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            b = powmod(a, e, g) - UPoly<F>::constant(fld, fld.one());
        }
        UPoly<F> h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Irreducible factorization of a square-free polynomial over a finite field.
template <FiniteExactField F>
std::vector<UPoly<F>> factor_squarefree_finite(const UPoly<F>& f) {
    std::vector<UPoly<F>> out;
    std::mt19937_64 rng(0x5eed);
    for (auto& [g, d] : detail::distinct_degree(f.monic())) detail::equal_degree(g, d, rng, out);
    std::sort(out.begin(), out.end(), [&](const UPoly<F>& a, const UPoly<F>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = f.field().compare(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

/// Distinct roots in the field.
template <FiniteExactField F>
std::vector<typename F::value_type> roots_finite(const UPoly<F>& f) {
    std::vector<typename F::value_type> out;
    if (f.degree() <= 0) return out;
    const F& fld = f.field();
    UPoly<F> m = f.monic();
    UPoly<F> x = UPoly<F>::x(fld);
    UPoly<F> g = gcd(m, powmod(x, fld.size(), m) - x);
    if (g.degree() <= 0) return out;
    std::vector<UPoly<F>> lin;
    std::mt19937_64 rng(0x5eed);
    detail::equal_degree(g, 1, rng, lin);
    for (auto& l : lin) out.push_back(-l.coeff(0));
    return out;
}

// ---------------------------------------------------------------------------------------------
// Rationals: Zassenhaus (modular factorization, Hensel lifting, recombination)

namespace detail {

using ZPoly = std::vector<mpz_class>;  // low to high

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline mpz_class smod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

inline ZPoly zmod(ZPoly a, const mpz_class& m) {
    for (auto& c : a) c = smod(c, m);
    ztrim(a);
    return a;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

inline ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

inline ZPoly zadd_scaled(ZPoly a, const ZPoly& b, const mpz_class& s) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    ztrim(a);
    return a;
}

inline UPoly<PrimeField> to_fp(const ZPoly& a, const PrimeField& f) {
    std::vector<Fp> c;
    for (const auto& x : a) c.push_back(f.from_mpz(x));
    return UPoly<PrimeField>(f, std::move(c));
}

inline ZPoly from_fp(const UPoly<PrimeField>& a) {
    ZPoly r;
    for (const auto& c : a.coeffs()) r.push_back(from_u64(c.v));
    return r;
}

/// Lifts target = g*h (mod p) with g monic to a factorization modulo p^k.
inline std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& target, ZPoly g, ZPoly h, const PrimeField& fp, unsigned k) {
    const mpz_class p = from_u64(fp.p);
    auto [one, s, t] = extended_gcd(to_fp(g, fp), to_fp(h, fp));
    require(one.degree() == 0, ErrorCode::InternalError, "Hensel: factors not coprime");
    // pin the leading coefficient of h to that of target
    h.back() = target.back();
    mpz_class pj = p;
    for (unsigned j = 1; j < k; ++j) {
        mpz_class next = pj * p;
        ZPoly err = zsub(target, zmul(g, h));
        for (auto& c : err) {
            c = smod(c, next);
            c /= pj;  // exact
        }
        ztrim(err);
        if (!err.empty()) {
            UPoly<PrimeField> e = to_fp(err, fp);
            auto [q, a] = (t * e).divmod(to_fp(g, fp));
            UPoly<PrimeField> b = s * e + q * to_fp(h, fp);
            g = zmod(zadd_scaled(g, from_fp(a), pj), next);
            h = zmod(zadd_scaled(h, from_fp(b), pj), next);
        }
        pj = next;
    }
    return {g, h};
}

inline Factorization<Rationals> factor_squarefree_rational(const UPoly<Rationals>& f);

}  // namespace detail

/// Irreducible factors of a square-free primitive integer polynomial (monic over Q on return).
inline std::vector<UPoly<Rationals>> factor_squarefree_rational(const UPoly<Rationals>& f_in) {
    using detail::ZPoly;
    const Rationals Q;
    std::vector<UPoly<Rationals>> out;
    if (f_in.degree() <= 0) return out;
    if (f_in.degree() == 1) return {f_in.monic()};
    require(f_in.degree() <= 64, ErrorCode::FactorBudgetExceeded, "degree too large for factorization");
    // clear denominators, remove content
    mpz_class lcm_den = 1;
    for (const auto& c : f_in.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    ZPoly F;
    for (const auto& c : f_in.coeffs()) F.push_back(c.num() * (lcm_den / c.den()));
    mpz_class cont = 0;
    for (const auto& c : F) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
    for (auto& c : F) c /= cont;
    if (F.back() < 0)
        for (auto& c : F) c = -c;

    // choose a prime: p does not divide lc, F mod p square-free; prefer fewest modular factors
    std::optional<PrimeField> best;
    std::vector<UPoly<PrimeField>> best_factors;
    int good = 0;
    for (std::uint64_t cand = 3; good < 5 && cand < 2000; cand += 2) {
        if (!is_prime_u64(cand)) continue;
        PrimeField fp(cand);
        if (fp.from_mpz(F.back()) == fp.zero()) continue;
        UPoly<PrimeField> fm = detail::to_fp(F, fp);
        if (gcd(fm, fm.derivative()).degree() > 0) continue;
        auto facs = factor_squarefree_finite(fm);
        ++good;
        if (!best || facs.size() < best_factors.size()) {
            best = fp;
            best_factors = std::move(facs);
        }
        if (best_factors.size() == 1) break;
    }
    require(best.has_value(), ErrorCode::FactorBudgetExceeded, "no suitable prime for factorization");
    if (best_factors.size() == 1) return {f_in.monic()};

    const PrimeField fp = *best;
    const mpz_class p = from_u64(fp.p);
    // coefficient bound for factors of lc*F
    const std::size_t n = F.size() - 1;
    mpz_class norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    mpz_class norm = sqrt(norm2) + 1;
    mpz_class bound = norm * abs(F.back());
    bound <<= static_cast<mp_bitcnt_t>(n + 1);
    unsigned k = 1;
    mpz_class pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }
    // multifactor lift by peeling one factor at a time
    std::vector<ZPoly> lifted;
    ZPoly rest_target = F;
    for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
        UPoly<PrimeField> others = UPoly<PrimeField>::constant(fp, fp.from_mpz(rest_target.back()));
        for (std::size_t j = i + 1; j < best_factors.size(); ++j) others *= best_factors[j];
        auto [g, h] = detail::hensel_lift(rest_target, detail::from_fp(best_factors[i]), detail::from_fp(others), fp, k);
        lifted.push_back(g);
        rest_target = h;
    }
    {
        // last factor: make monic modulo p^k
        ZPoly last = rest_target;
        mpz_class inv;
        mpz_class lc = detail::smod(last.back(), pk);
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
        for (auto& c : last) c = detail::smod(c * inv, pk);
        lifted.push_back(last);
    }

    // recombination
    ZPoly G = F;
    std::vector<ZPoly> remaining = lifted;
    auto to_q = [&](const ZPoly& z) {
        std::vector<Rational> c;
        for (const auto& x : z) c.emplace_back(x);
        return UPoly<Rationals>(Q, std::move(c));
    };
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{G.back()};
            for (auto i : idx) cand = detail::zmod(detail::zmul(cand, remaining[i]), pk);
            // primitive part
            mpz_class c = 0;
            for (const auto& x : cand) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
            if (c != 0) {
                for (auto& x : cand) x /= c;
                auto [q, r] = to_q(G).divmod(to_q(cand));
                if (r.is_zero()) {
                    out.push_back(to_q(cand).monic());
                    // G <- G / cand over Z
                    ZPoly ng;
                    for (const auto& x : q.coeffs()) ng.push_back(x.num());
                    G = ng;
                    std::vector<ZPoly> keep;
                    for (std::size_t i = 0; i < remaining.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
                    remaining = std::move(keep);
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == remaining.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (G.size() > 1) out.push_back(to_q(G).monic());
    return out;
}

// ---------------------------------------------------------------------------------------------
// Unified entry points

template <ExactField F>
constexpr bool kCanFactor = std::is_same_v<F, Rationals> || FiniteExactField<F>;

/// Largest square-free degree handed to the Zassenhaus factorizer over Q.
inline std::atomic<int>& factor_degree_limit() {
    static std::atomic<int> limit{32};
    return limit;
}

/// Complete factorization into monic irreducibles over Q or a finite field.
template <ExactField F>
    requires kCanFactor<F>
Factorization<F> factor_univariate(const UPoly<F>& f) {
    require(!f.is_zero(), ErrorCode::InternalError, "factor_univariate(0)");
    Factorization<F> out{f.lc(), {}};
    for (auto& [s, m] : squarefree_decomposition(f)) {
        std::vector<UPoly<F>> parts;
        if constexpr (std::is_same_v<F, Rationals>) {
            require(s.degree() <= factor_degree_limit().load(), ErrorCode::FactorBudgetExceeded,
                    "square-free factor of degree " + std::to_string(s.degree()) + " exceeds the factorization budget");
            parts = factor_squarefree_rational(s);
        }
        else parts = factor_squarefree_finite(s);
        for (auto& g : parts) out.factors.emplace_back(g, m);
    }
    std::sort(out.factors.begin(), out.factors.end(), [&](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            int c = f.field().compare(a.first.coeff(static_cast<std::size_t>(i)), b.first.coeff(static_cast<std::size_t>(i)));
            if (c != 0) return c < 0;
        }
        return a.second < b.second;
    });
    return out;
}

template <ExactField F>
    requires kCanFactor<F>
bool is_irreducible(const UPoly<F>& f) {
    if (f.degree() <= 0) return false;
    auto fac = factor_univariate(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

namespace detail {

// Roots in K[v] of a monic Q(Y) with coefficients in K[v], by lifting simple roots of a
// specialization at a K-point through truncated power series.
template <ExactField K>
std::vector<MPoly<K>> polynomial_roots_monic(const std::vector<MPoly<K>>& q, std::size_t nvars, bool& complete);

}  // namespace detail

/// Distinct roots of f lying in the field. For function fields the search lifts roots from
/// specializations; `complete` (when given) reports whether every root is guaranteed found.
template <ExactField F>
std::vector<typename F::value_type> field_roots(const UPoly<F>& f, bool* complete = nullptr) {
    using E = typename F::value_type;
    std::vector<E> out;
    if (complete) *complete = true;
    if (f.degree() <= 0) return out;
    if constexpr (FiniteExactField<F>) {
        return roots_finite(f);
    } else if constexpr (std::is_same_v<F, Rationals>) {
        for (auto& [g, m] : factor_univariate(f).factors)
            if (g.degree() == 1) out.push_back(-g.coeff(0));
        return out;
    } else {
        // function field K(v)
        using K = typename F::base_field;
        const F& fld = f.field();
        UPoly<F> g = f.monic();
        UPoly<F> d = g.derivative();
        if (!d.is_zero()) g = g / gcd(g, d);
        // clear denominators
        MPoly<K> l = MPoly<K>::from_int(fld.base(), 1);
        for (const auto& c : g.coeffs()) {
            MPoly<K> gg = gcd(l, c.den);
            l = l * *c.den.divide_exact(gg);
        }
        std::vector<MPoly<K>> P;
        for (const auto& c : g.coeffs()) P.push_back(*(c.num * l).divide_exact(c.den));
        const std::size_t n = P.size() - 1;
        const MPoly<K> cn = P[n];
        // monic transform Y = cn * X
        std::vector<MPoly<K>> Qc(n + 1, MPoly<K>(fld.base()));
        Qc[n] = MPoly<K>::from_int(fld.base(), 1);
        MPoly<K> pw = MPoly<K>::from_int(fld.base(), 1);
        for (std::size_t i = n; i-- > 0;) {
            Qc[i] = P[i] * pw;
            pw = pw * cn;
        }
        bool comp = true;
        for (auto& r : detail::polynomial_roots_monic<K>(Qc, fld.nvars(), comp)) {
            out.push_back(fld.fraction(r, cn));
        }
        if (complete) *complete = comp;
        return out;
    }
}

namespace detail {

template <ExactField K>
MPoly<K> truncate(const MPoly<K>& a, int max_deg) {
    std::vector<typename MPoly<K>::Term> t;
    for (const auto& x : a.terms())
        if (static_cast<int>(total_degree(x.m)) <= max_deg) t.push_back(x);
    return MPoly<K>(a.field(), std::move(t));
}

template <ExactField K>
std::vector<std::array<typename K::value_type, kMaxVars>> specialization_points(const K& k, std::size_t nvars) {
    using E = typename K::value_type;
    std::vector<E> vals;
    if constexpr (std::is_same_v<K, Rationals>) {
        for (long v : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, 7L, -7L, 11L, 13L}) vals.push_back(k.from_int(v));
    } else {
        const std::uint64_t lim = std::min<std::uint64_t>(k.characteristic(), 16);
        for (std::uint64_t i = 0; i < lim; ++i) vals.push_back(k.from_int(static_cast<long>(i)));
    }
    std::vector<std::array<E, kMaxVars>> pts;
    for (const auto& a : vals) {
        if (nvars <= 1) {
            pts.push_back({a, k.zero()});
            continue;
        }
        for (const auto& b : vals) pts.push_back({a, b});
    }
    return pts;
}

template <ExactField K>
std::vector<MPoly<K>> polynomial_roots_monic(const std::vector<MPoly<K>>& q, std::size_t nvars, bool& complete) {
    const K& k = q.back().field();
    const std::size_t n = q.size() - 1;
    int D = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int dq = q[i].total_deg();
        if (dq < 0) continue;
        int need = (dq + static_cast<int>(n - i) - 1) / static_cast<int>(n - i);
        D = std::max(D, need);
    }
    std::vector<MPoly<K>> found;
    complete = false;
    auto eval_q = [&](const MPoly<K>& r, int maxdeg, const std::vector<MPoly<K>>& coeffs) {
        MPoly<K> acc(k);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = truncate(acc * r + coeffs[i], maxdeg);
        return acc;
    };
    for (const auto& pt : specialization_points(k, nvars)) {
        // shift: v = w + t
        std::vector<MPoly<K>> shift;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            shift.push_back(i < nvars ? MPoly<K>::variable(k, i) + MPoly<K>::constant(k, pt[i]) : MPoly<K>::variable(k, i));
        std::vector<MPoly<K>> unshift;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            unshift.push_back(i < nvars ? MPoly<K>::variable(k, i) - MPoly<K>::constant(k, pt[i]) : MPoly<K>::variable(k, i));
        std::vector<MPoly<K>> qs;
        std::vector<typename K::value_type> spec;
        for (const auto& c : q) {
            qs.push_back(c.substitute(shift));
            spec.push_back(qs.back().constant_term());
        }
        UPoly<K> qt(k, spec);
        UPoly<K> dqt = qt.derivative();
        bool squarefree = !dqt.is_zero() && gcd(qt, dqt).degree() == 0;
        for (const auto& r0 : field_roots(qt)) {
            auto slope = dqt.eval(r0);
            if (is_zero(slope)) continue;
            auto inv = k.one() / slope;
            MPoly<K> r = MPoly<K>::constant(k, r0);
            for (int it = 0; it <= D + 1; ++it) {
                MPoly<K> e = eval_q(r, D, qs);
                if (e.is_zero()) break;
                r = truncate(r - e.scaled(inv), D);
            }
            MPoly<K> cand = r.substitute(unshift);
            // exact check
            MPoly<K> acc(k);
            for (std::size_t i = q.size(); i-- > 0;) acc = acc * cand + q[i];
            if (!acc.is_zero()) continue;
            if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
        }
        if (squarefree || found.size() == n) {
            complete = true;
            break;
        }
    }
    return found;
}

}  // namespace detail

}  // namespace decompgen

#endif  // DECOMPGEN_FACTOR_HPP
