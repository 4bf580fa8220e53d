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

#include <gtest/gtest.h>

#include <set>

#include "decompgen/corpus.hpp"
#include "decompgen/sampling.hpp"
#include "decompgen/strata.hpp"
#include "oracles.hpp"

using namespace decompgen;

namespace {

using RPoly = MPoly<Rationals>;

// det of the regular trace form, computed directly from structure constants (oracle for the
// Gram factor of the candidate).
RPoly regular_trace_gram_det(const FiniteFreeAlgebra<Rationals>& A) {
    const std::size_t n = A.dim();
    std::vector<RPoly> tr(n, A.ring.zero());  // tr(L_{b_k})
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) tr[k] += A.at(k, j, j);
    std::vector<std::vector<RPoly>> G(n, std::vector<RPoly>(n, A.ring.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) G[i][j] += A.at(i, j, k) * tr[k];
    // Laplace expansion; n <= 6 here
    std::function<RPoly(std::vector<std::size_t>, std::size_t)> lap = [&](std::vector<std::size_t> cols, std::size_t r) {
        if (cols.empty()) return A.ring.one();
        RPoly acc = A.ring.zero();
        for (std::size_t t = 0; t < cols.size(); ++t) {
            auto rest = cols;
            rest.erase(rest.begin() + static_cast<long>(t));
            RPoly term = G[r][cols[t]] * lap(rest, r + 1);
            acc = t % 2 ? acc - term : acc + term;
        }
        return acc;
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return lap(all, 0);
}

template <ExactField K>
std::set<std::string> excluded_set(const Discriminant<K>& D) {
    std::set<std::string> s;
    for (const auto& p : D.excluded()) s.insert(p.str());
    return s;
}

template <ExactField K>
std::set<std::string> prime_strings(const Ring<K>& R, const std::vector<PrimeCandidate<K>>& v) {
    std::set<std::string> s;
    for (const auto& c : v) s.insert(c.str(R));
    return s;
}

FiniteFreeAlgebra<Rationals> s3() { return group_algebra("S3", ring_zz(), s3_table(), s3_names()); }
FiniteFreeAlgebra<Rationals> c2() { return group_algebra("C2", ring_zz(), cyclic_group_table(2), cyclic_group_names(2)); }

}  // namespace

TEST(Candidate, GramFactorMatchesDirectDeterminant) {
    for (const auto& A : {c2(), s3(), brauer_algebra(2, ring_zz_delta(), "B2Z")}) {
        Analysis<Rationals> an(A);
        auto L = radical_lattice(an);
        EXPECT_EQ(L.rank(), 0u);
        auto c = candidate_discriminant(an, L);
        EXPECT_EQ(c.gram, normalize_associate(A.ring, regular_trace_gram_det(A))) << A.name;
    }
    // hand values: Z[C2] -> 4, Z[S3] -> 6^6, B2 over Z[delta] -> 4 delta^2
    Analysis<Rationals> b(brauer_algebra(2, ring_zz_delta(), "B2Z"));
    EXPECT_EQ(ring_zz_delta().format(candidate_discriminant(b, radical_lattice(b)).g), "4*delta^2");
    Analysis<Rationals> s(s3());
    EXPECT_EQ(candidate_discriminant(s, radical_lattice(s)).g, ring_zz().from_int(46656));
}

TEST(Candidate, RadicalLatticeOfNonSemisimple) {
    Analysis<Rationals> an(upper_triangular(2, ring_zz()));
    auto L = radical_lattice(an);
    EXPECT_EQ(L.rank(), 1u);
    EXPECT_TRUE(L.saturated);
    EXPECT_EQ(candidate_discriminant(an, L).g, ring_zz().one());
}

TEST(MinimalPrimes, AcrossRings) {
    auto Z = ring_zz();
    EXPECT_EQ(prime_strings(Z, minimal_primes(Z, Z.from_int(46656))), (std::set<std::string>{"(2)", "(3)"}));
    auto Qd = ring_qq_delta();
    EXPECT_EQ(prime_strings(Qd, minimal_primes(Qd, Qd.parse("(delta^2-1)^4*delta"))),
              (std::set<std::string>{"(delta)", "(delta - 1)", "(delta + 1)"}));
    auto Zd = ring_zz_delta();
    EXPECT_EQ(prime_strings(Zd, minimal_primes(Zd, Zd.parse("12*delta^2*(2*delta+1)"))),
              (std::set<std::string>{"(2)", "(3)", "(delta)", "(2*delta + 1)"}));
    auto Qxy = make_ring<Rationals>(RingDescriptor::parse("QQ[x,y]"));
    EXPECT_EQ(prime_strings(Qxy, minimal_primes(Qxy, Qxy.parse("x*y^2*(y-x^2)"))),
              (std::set<std::string>{"(x)", "(y)", "(x^2 - y)"}));
    // delta^2 - 2 has a number-field residue field: recorded without a PrimeSpec
    auto parts = minimal_primes(Qd, Qd.parse("delta^2-2"));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_FALSE(parts[0].prime.has_value());
}

TEST(DecEx, GroupAlgebrasMatchOrderDivisors) {
    Analysis<Rationals> a(c2()), b(s3());
    EXPECT_EQ(excluded_set(dec_ex(a)), (std::set<std::string>{"(2)"}));
    EXPECT_EQ(excluded_set(dec_ex(b)), (std::set<std::string>{"(2)", "(3)"}));
}

TEST(DecEx, MatrixAlgebraComponentIsRecovered) {
    Analysis<Rationals> an(matrix_algebra(2, ring_zz()));
    auto D = dec_ex(an);
    EXPECT_TRUE(D.excluded().empty());
    ASSERT_EQ(D.components.size(), 1u);
    EXPECT_EQ(D.components[0].status, ComponentStatus::RecoveredTrivial);
}

TEST(Schur, ElementsMatchCharacterTableOracle) {
    auto check = [](const FiniteFreeAlgebra<Rationals>& A, const oracle::CharacterTable& ct) {
        Analysis<Rationals> an(A);
        auto s = schur_elements(an);
        std::multiset<std::string> got, want;
        for (const auto& v : s.values) got.insert(v);
        for (const auto& v : oracle::schur_from_characters(ct)) want.insert(v.str());
        EXPECT_EQ(got, want) << A.name;
        auto x = schur_discriminant_crosscheck(an, dec_ex(an));
        EXPECT_TRUE(x.matches) << A.name;
    };
    check(c2(), oracle::c2_characters());
    check(s3(), oracle::s3_characters());
}

TEST(Schur, RejectsAlgebraWithoutTrace) {
    Analysis<Rationals> an(brauer_algebra(2, ring_qq_delta()));
    EXPECT_THROW(schur_elements(an), Error);
}

TEST(Stratify, C2AndS3) {
    auto T = stratify(c2());
    ASSERT_EQ(T.nodes.size(), 2u);
    EXPECT_EQ(T.describe(0), "Spec ZZ \\ (V(2))");
    EXPECT_EQ(T.describe(1), "V(2)");
    auto U = stratify(s3());
    EXPECT_EQ(U.describe(0), "Spec ZZ \\ (V(2) u V(3))");
    auto Z = ring_zz();
    EXPECT_EQ(U.locate(PrimeSpec<Rationals>::parse(Z, "p=3")), (std::vector<std::size_t>{2}));
    EXPECT_EQ(U.locate(PrimeSpec<Rationals>::parse(Z, "p=7")), (std::vector<std::size_t>{0}));
}

TEST(Stratify, B2OverIntegersSharesTheClosedPoint) {
    auto T = stratify(brauer_algebra(2, ring_zz_delta(), "B2Z"));
    std::set<std::string> points;
    std::size_t shared = 0;
    for (const auto& n : T.nodes) {
        points.insert(n.point.str());
        for (const auto& c : n.components) shared += c.shared;
        EXPECT_FALSE(n.unresolved);
    }
    EXPECT_EQ(points, (std::set<std::string>{"(0)", "(2)", "(delta)", "(2, delta)"}));
    EXPECT_EQ(shared, 1u);
    auto Zd = ring_zz_delta();
    auto hit = T.locate(PrimeSpec<Rationals>::parse(Zd, "gen=[2,delta]"));
    ASSERT_EQ(hit.size(), 1u);
    EXPECT_EQ(T.nodes[hit[0]].point.str(), "(2, delta)");
}

TEST(Stratify, TreeCoversSampledAndVerifiedPoints) {
    std::vector<FiniteFreeAlgebra<Rationals>> algs = {c2(), s3(), brauer_algebra(2, ring_zz_delta(), "B2Z"),
                                                      brauer_algebra(2, ring_qq_delta(), "B2"),
                                                      temperley_lieb(3, ring_qq_delta(), "TL3")};
    for (const auto& A : algs) {
        auto T = stratify(A);
        std::vector<PrimeSpec<Rationals>> pts = sample_primes(A.ring, 50, 2024, A.ring.one());
        EXPECT_GE(pts.size(), 20u) << A.name;
        for (const auto& n : T.nodes) {
            pts.push_back(n.point);
            for (const auto& c : n.components)
                if (c.prime) pts.push_back(*c.prime);
        }
        for (const auto& q : pts) {
            auto hit = T.locate(q);
            ASSERT_EQ(hit.size(), 1u) << A.name << " " << q.str();
            EXPECT_TRUE(q.contains(T.nodes[hit[0]].point)) << A.name << " " << q.str();
        }
    }
}

TEST(Stratify, RecoveredComponentIsSampledPointwise) {
    auto T = stratify(matrix_algebra(2, ring_zz_delta(), "Mat2Zd"));
    ASSERT_EQ(T.nodes.size(), 1u);
    ASSERT_EQ(T.nodes[0].components.size(), 1u);
    const auto& c = T.nodes[0].components[0];
    EXPECT_EQ(c.status, "RecoveredTrivial");
    EXPECT_GT(c.sampled, 0u);
    EXPECT_FALSE(c.hidden.has_value());
    EXPECT_FALSE(T.nodes[0].unresolved);
}
