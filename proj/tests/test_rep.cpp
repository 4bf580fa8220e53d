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

#include "decompgen/brauer_nesbitt.hpp"
#include "decompgen/corpus.hpp"
#include "decompgen/modules.hpp"
#include "oracles.hpp"

using namespace decompgen;

namespace {

template <ExactField F>
AlgebraModule<F> module_sum(const AlgebraModule<F>& a, const AlgebraModule<F>& b) {
    AlgebraModule<F> s{a.field, a.dim + b.dim, {}};
    for (std::size_t i = 0; i < a.act.size(); ++i) {
        Matrix<F> m(a.field, s.dim, s.dim);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c) m(r, c) = a.act[i](r, c);
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c) m(a.dim + r, a.dim + c) = b.act[i](r, c);
        s.act.push_back(m);
    }
    return s;
}

FiberAlgebra<Rationals> generic_group_fiber(const FiniteFreeAlgebra<Rationals>& A) {
    return std::get<FiberAlgebra<Rationals>>(specialize(A, PrimeSpec<Rationals>::generic(A.ring)));
}

}  // namespace

TEST(Wedderburn, ModularGroupAlgebras) {
    struct Case {
        std::uint64_t p;
        std::size_t n;
        std::size_t radical, simples;
    };
    // F_p[C_n] = F_p[x]/(x^n - 1): radical dimension n - #distinct irreducible factors (with degree)
    for (const Case& c : {Case{2, 2, 1, 1}, Case{3, 3, 2, 1}, Case{2, 4, 3, 1}, Case{5, 2, 0, 2}, Case{2, 3, 0, 2},
                          Case{3, 2, 0, 2}, Case{2, 6, 3, 2}}) {
        PrimeField f(c.p);
        auto A = oracle::group_fiber(f, oracle::cyclic(c.n), "C");
        auto w = wedderburn(A);
        EXPECT_EQ(w.radical_dim, c.radical) << "p=" << c.p << " n=" << c.n;
        EXPECT_EQ(w.simples.size(), c.simples) << "p=" << c.p << " n=" << c.n;
    }
    // F_2[C3]: x^2+x+1 is irreducible over F_2, so one simple is not absolutely simple
    auto w = wedderburn(oracle::group_fiber(PrimeField(2), oracle::cyclic(3), "C3"));
    EXPECT_FALSE(w.split);
}

TEST(Wedderburn, GenericS3AndC3) {
    auto S3 = generic_group_fiber(group_algebra("S3", ring_zz(), s3_table(), s3_names()));
    auto w = wedderburn(S3);
    EXPECT_EQ(w.radical_dim, 0u);
    ASSERT_EQ(w.simples.size(), 3u);
    EXPECT_EQ(w.simples[0].module.dim, 1u);
    EXPECT_EQ(w.simples[1].module.dim, 1u);
    EXPECT_EQ(w.simples[2].module.dim, 2u);
    EXPECT_TRUE(w.split);
    auto C3 = generic_group_fiber(group_algebra("C3", ring_zz(), cyclic_group_table(3), cyclic_group_names(3)));
    EXPECT_FALSE(wedderburn(C3).split);
}

TEST(Radical, AgreesWithExhaustiveSearchOnSample) {
    auto fam = oracle::small_algebra_family(11);
    ASSERT_GE(fam.size(), 50u);
    for (std::size_t i = 0; i < fam.size(); i += 5) {
        const auto& A = fam[i];
        validate(A);
        auto o = oracle::brute_radical(A);
        EXPECT_TRUE(o.contains_all) << A.name;
        EXPECT_TRUE(oracle::same_span(A.field, A.dim(), o.radical, radical(A))) << A.name;
    }
}

TEST(Modules, ChopBookkeepingAndHom) {
    PrimeField f(3);
    auto A = oracle::group_fiber(f, oracle::s3_characters().table, "F3[S3]");
    auto M = regular_module(A);
    validate_module(A, M);
    auto factors = chop(M, {5, 400, true});
    std::size_t total = 0;
    for (const auto& s : factors) {
        total += s.multiplicity * s.module.dim;
        EXPECT_EQ(hom_dimension(s.module, s.module), 1u);
        validate_module(A, s.module);
    }
    EXPECT_EQ(total, 6u);
    ASSERT_EQ(factors.size(), 2u);
    EXPECT_EQ(hom_dimension(factors[0].module, factors[1].module), 0u);
    EXPECT_FALSE(is_isomorphic(factors[0].module, factors[1].module, true));
}

TEST(Modules, ChopIsSeedIndependent) {
    PrimeField f(2);
    auto A = oracle::group_fiber(f, oracle::s3_characters().table, "F2[S3]");
    auto a = chop(regular_module(A), {1, 400, false});
    auto b = chop(regular_module(A), {99, 400, false});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].fp, b[i].fp);
        EXPECT_EQ(a[i].multiplicity, b[i].multiplicity);
    }
}

TEST(BrauerNesbitt, FingerprintOfDirectSumIsProduct) {
    auto S3 = generic_group_fiber(group_algebra("S3", ring_zz(), s3_table(), s3_names()));
    auto w = wedderburn(S3);
    const auto& a = w.simples[1].module;
    const auto& b = w.simples[2].module;
    EXPECT_EQ(fingerprint(module_sum(a, b)), direct_sum(fingerprint(a), fingerprint(b)));
    EXPECT_EQ(fingerprint(module_sum(b, a)), direct_sum(fingerprint(a), fingerprint(b)));
}

TEST(BrauerNesbitt, ReductionMatchesFiberComposition) {
    // the 2-dimensional simple of S3 reduced mod 3 equals trivial + sign there
    const auto A = group_algebra("S3", ring_zz(), s3_table(), s3_names());
    auto gw = wedderburn(generic_group_fiber(A));
    auto p = PrimeSpec<Rationals>::parse(A.ring, "p=3");
    auto rm = std::get<ResidueMap<PrimeField>>(p.residue());
    auto red = reduce_fingerprint(A.ring, rm, gw.simples[2].fp);
    auto fw = wedderburn(std::get<FiberAlgebra<PrimeField>>(specialize(A, p)));
    ASSERT_EQ(fw.simples.size(), 2u);
    EXPECT_EQ(red, direct_sum(fw.simples[0].fp, fw.simples[1].fp));
}

TEST(BrauerNesbitt, AttractorOfGroupAlgebraIsIntegral) {
    const auto A = group_algebra("S3", ring_zz(), s3_table(), s3_names());
    auto gw = wedderburn(generic_group_fiber(A));
    auto gens = attractor_generators(A.ring, Rationals{}, gw.simples);
    for (const auto& g : gens) EXPECT_TRUE(g.is_integer());
    EXPECT_EQ(gen_locus(A.ring, gens), A.ring.one());
    EXPECT_EQ(simple_label(Rationals{}, gw.simples[1]), "(1, -1, -1, -1, 1, 1)");
}
