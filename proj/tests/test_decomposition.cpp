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

#include "decompgen/corpus.hpp"
#include "decompgen/decomposition.hpp"
#include "oracles.hpp"

using namespace decompgen;

namespace {

Analysis<Rationals> analysis_of(const FiniteFreeAlgebra<Rationals>& A) { return Analysis<Rationals>(A); }

FiniteFreeAlgebra<Rationals> s3() { return group_algebra("S3", ring_zz(), s3_table(), s3_names()); }
FiniteFreeAlgebra<Rationals> c2() { return group_algebra("C2", ring_zz(), cyclic_group_table(2), cyclic_group_names(2)); }

using Mat = std::vector<std::vector<long>>;

// Matrix entries keyed by (row label, column label) so the comparison does not depend on ordering.
std::map<std::pair<std::string, std::string>, long> keyed(const DecompositionMatrix& D) {
    std::map<std::pair<std::string, std::string>, long> m;
    for (std::size_t i = 0; i < D.rows.size(); ++i)
        for (std::size_t j = 0; j < D.cols.size(); ++j) m[{D.rows[i], D.cols[j]}] = D.d[i][j];
    return m;
}

std::string b2_label(const oracle::B2Character& c, const std::string& delta) {
    return "(1, " + std::to_string(c.sigma) + ", " + (c.upsilon_is_delta ? delta : "0") + ")";
}

}  // namespace

TEST(DecompositionMatrix, GroupAlgebras) {
    auto an = analysis_of(c2());
    auto p2 = PrimeSpec<Rationals>::parse(an.ring(), "p=2");
    EXPECT_EQ(decomposition_matrix(an, p2).d, (Mat{{1}, {1}}));
    EXPECT_TRUE(is_trivial(decomposition_matrix(an, PrimeSpec<Rationals>::parse(an.ring(), "p=3"))));

    auto bn = analysis_of(s3());
    auto D2 = decomposition_matrix(bn, PrimeSpec<Rationals>::parse(bn.ring(), "p=2"));
    EXPECT_EQ(D2.d, (Mat{{1, 0}, {1, 0}, {0, 1}}));
    auto D3 = decomposition_matrix(bn, PrimeSpec<Rationals>::parse(bn.ring(), "p=3"));
    EXPECT_EQ(D3.d, (Mat{{1, 0}, {0, 1}, {1, 1}}));
    EXPECT_FALSE(is_trivial(D3));
    auto D5 = decomposition_matrix(bn, PrimeSpec<Rationals>::parse(bn.ring(), "p=5"));
    EXPECT_TRUE(is_trivial(D5));
    // dimension bookkeeping: row dims = d * col dims
    for (const auto* D : {&D2, &D3, &D5})
        for (std::size_t i = 0; i < D->rows.size(); ++i) {
            std::size_t s = 0;
            for (std::size_t j = 0; j < D->cols.size(); ++j) s += static_cast<std::size_t>(D->d[i][j]) * D->col_dims[j];
            EXPECT_EQ(s, D->row_dims[i]);
        }
}

TEST(DecompositionMatrix, BrauerB2AgainstCharacterEnumeration) {
    auto an = analysis_of(brauer_algebra(2, ring_qq_delta()));
    auto D = decomposition_matrix(an, PrimeSpec<Rationals>::parse(an.ring(), "gen=[delta]"));
    auto gen = oracle::b2_characters(false), spec = oracle::b2_characters(true);
    auto want = oracle::b2_decomposition_at_zero();
    ASSERT_EQ(D.rows.size(), gen.size());
    ASSERT_EQ(D.cols.size(), spec.size());
    auto got = keyed(D);
    for (std::size_t i = 0; i < gen.size(); ++i)
        for (std::size_t j = 0; j < spec.size(); ++j)
            EXPECT_EQ((got[{b2_label(gen[i], "delta"), b2_label(spec[j], "0")}]), want[i][j]);
    EXPECT_EQ(D.d, (Mat{{1, 0}, {1, 0}, {0, 1}}));
}

TEST(DecompositionMatrix, TrivialityCriteriaAgree) {
    auto an = analysis_of(brauer_algebra(2, ring_zz_delta()));
    for (const char* t : {"gen=[delta]", "p=2", "gen=[2,delta]", "gen=[delta-1]", "p=3", "gen=[delta+2]", "gen=[5,delta-2]"}) {
        auto p = PrimeSpec<Rationals>::parse(an.ring(), t);
        EXPECT_EQ(is_trivial(decomposition_matrix(an, p)), triviality_by_radical(an, p)) << t;
        auto m = dec_gen_membership(an, p, true);
        EXPECT_EQ(m.trivial, triviality_by_radical(an, p)) << t;
        EXPECT_GE(m.fiber_radical, m.generic_radical) << t;
    }
}

TEST(DecompositionMatrix, ComposabilityAlongChain) {
    auto an = analysis_of(brauer_algebra(2, ring_zz_delta()));
    auto c = composability(an, PrimeSpec<Rationals>::parse(an.ring(), "gen=[delta]"),
                           PrimeSpec<Rationals>::parse(an.ring(), "gen=[2,delta]"));
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(multiply(c.first.d, c.second.d), c.direct.d);
    EXPECT_EQ(c.direct.d, (Mat{{1}, {1}, {1}}));
}

TEST(DecompositionMatrix, RequiresSplitFibers) {
    auto an = analysis_of(group_algebra("C3", ring_zz(), cyclic_group_table(3), cyclic_group_names(3)));
    try {
        decomposition_matrix(an, PrimeSpec<Rationals>::parse(an.ring(), "p=2"));
        ADD_FAILURE() << "expected NotSplit";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSplit);
    }
}

TEST(DecompositionMatrix, MultiplicitySolverHandlesRepeatedFingerprints) {
    // rows: 1+1, 2 copies of a character; columns two distinct characters
    Rationals Q;
    auto X = UPoly<Rationals>::x(Q);
    auto c = [&](long v) { return UPoly<Rationals>::constant(Q, Rational(v)); };
    Fingerprint<Rationals> a{{X - c(1), X - c(1)}}, b{{X - c(1), X + c(1)}};
    auto ab = direct_sum(a, b);
    auto aa = direct_sum(a, a);
    auto m = solve_multiplicities(std::vector<Fingerprint<Rationals>>{ab, aa, b}, {2, 2, 1}, std::vector<Fingerprint<Rationals>>{a, b}, {1, 1});
    EXPECT_EQ(m, (Mat{{1, 1}, {2, 0}, {0, 1}}));
}
