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

#include "decompgen/algebra.hpp"

using namespace decompgen;

namespace {

const char* kB2 = R"(algebra B2
ring ZZ[delta]
basis 1 s u
unit 1 0 0
mult 0 0 0 1
mult 0 1 1 1
mult 0 2 2 1
mult 1 0 1 1
mult 1 1 0 1
mult 1 2 2 1
mult 2 0 2 1
mult 2 1 2 1
mult 2 2 2 delta
)";

const FiniteFreeAlgebra<Rationals>& b2() {
    static const auto A = std::get<FiniteFreeAlgebra<Rationals>>(parse_algebra(kB2));
    return A;
}

ErrorCode code_of(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalError;
}

}  // namespace

TEST(AlgebraFormat, ParseSerializeRoundTrip) {
    const std::string s = serialize(AnyAlgebra(b2()));
    EXPECT_EQ(serialize(parse_algebra(s)), s);
    EXPECT_EQ(b2().dim(), 3u);
    EXPECT_EQ(b2().ring.desc.name(), "ZZ[delta]");
}

TEST(AlgebraFormat, RejectsMalformedInput) {
    // x*y = x and every other product of x, y vanishes: (xy)y = x but x(yy) = 0
    EXPECT_EQ(code_of("algebra X\nring ZZ\nbasis 1 x y\nunit 1 0 0\nmult 0 0 0 1\nmult 0 1 1 1\nmult 0 2 2 1\nmult 1 0 1 1\n"
                      "mult 2 0 2 1\nmult 1 2 1 1\n"),
              ErrorCode::NotAssociative);
    EXPECT_EQ(code_of("algebra X\nring ZZ\nbasis a b\nunit 0 1\nmult 0 0 0 1\nmult 0 1 1 1\nmult 1 0 1 1\n"),
              ErrorCode::NoUnit);
    EXPECT_EQ(code_of("algebra X\nring ZZ\nbasis a\nunit 1\nmult 0 0 5 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("algebra X\nring ZZ\nbasis a\nunit 1\nmult 0 0 0 1/2\n"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("algebra X\nring ZZ[x,y,z]\nbasis a\nunit 1\nmult 0 0 0 1\n"), ErrorCode::UnsupportedRing);
    EXPECT_EQ(code_of("algebra X\nring ZZ\nbasis a b\nunit 1 0\nmult 0 0 0 1\nmult 0 1 1 1\nmult 1 0 1 1\ntrace 1 0\n"),
              ErrorCode::BadTraceForm);
}

TEST(Specialize, FibersOfB2) {
    struct Case {
        const char* prime;
        const char* field;
        const char* u2;
    };
    for (const Case& c : {Case{"generic", "QQ(delta)", "delta"}, Case{"gen=[delta]", "QQ", "0"},
                          Case{"p=2", "GF(2)(delta)", "delta"}, Case{"gen=[2,delta+1]", "GF(2)", "1"},
                          Case{"gen=[delta-1]", "QQ", "1"}}) {
        auto p = PrimeSpec<Rationals>::parse(b2().ring, c.prime);
        std::visit(
            [&](const auto& F) {
                EXPECT_EQ(F.field.name(), c.field) << c.prime;
                EXPECT_EQ(F.field.format(F.at(2, 2, 2)), c.u2) << c.prime;
                validate(F);
            },
            specialize(b2(), p));
    }
}

TEST(Ideals, ClosureNilpotencyQuotient) {
    auto p = PrimeSpec<Rationals>::parse(b2().ring, "gen=[delta]");
    auto F = std::get<FiberAlgebra<Rationals>>(specialize(b2(), p));
    auto u = F.basis_vector(2);
    auto I = ideal_closure(F, {u});
    EXPECT_EQ(I.rows(), 1u);
    auto idx = nilpotency_index(F, I);
    ASSERT_TRUE(idx.has_value());
    EXPECT_EQ(*idx, 2u);
    auto Q = quotient_algebra(F, I);
    EXPECT_EQ(Q.dim(), 2u);
    validate(Q);
    // at delta = 1, u is idempotent so (u) is not nilpotent
    auto F1 = std::get<FiberAlgebra<Rationals>>(specialize(b2(), PrimeSpec<Rationals>::parse(b2().ring, "gen=[delta-1]")));
    EXPECT_FALSE(nilpotency_index(F1, ideal_closure(F1, {F1.basis_vector(2)})).has_value());
}

TEST(Ideals, RegularRepresentation) {
    auto F = std::get<FiberAlgebra<Rationals>>(specialize(b2(), PrimeSpec<Rationals>::parse(b2().ring, "gen=[delta-3]")));
    auto L = left_regular_matrix(F, F.basis_vector(2));
    auto R = right_regular_matrix(F, F.basis_vector(1));
    // L(u)R(s) = R(s)L(u) by associativity
    EXPECT_EQ(L * R, R * L);
    EXPECT_EQ(trace(L), Rational(3));
}

TEST(Restrict, AlongPrimesAndPullBack) {
    auto p2 = PrimeSpec<Rationals>::parse(b2().ring, "p=2");
    auto r = std::get<Restriction<Rationals, PrimeField>>(restrict(b2(), p2));
    EXPECT_EQ(r.algebra.ring.desc.name(), "GF(2)[delta]");
    validate(r.algebra);
    auto q = PrimeSpec<PrimeField>::parse(r.algebra.ring, "gen=[delta]");
    EXPECT_EQ(r.pull_back(q).str(), "(2, delta)");

    auto pd = PrimeSpec<Rationals>::parse(b2().ring, "gen=[delta]");
    auto rd = std::get<Restriction<Rationals, Rationals>>(restrict(b2(), pd));
    EXPECT_EQ(rd.algebra.ring.desc.name(), "ZZ");
    EXPECT_EQ(rd.pull_back(PrimeSpec<Rationals>::parse(rd.algebra.ring, "p=2")).str(), "(2, delta)");
}
