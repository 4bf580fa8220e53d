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

#include <fstream>
#include <set>
#include <sstream>

#include "decompgen/corpus.hpp"
#include "decompgen/sampling.hpp"

using namespace decompgen;

namespace {

std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

template <ExactField K>
std::string constant(const FiniteFreeAlgebra<K>& A, const std::string& a, const std::string& b, const std::string& c) {
    auto idx = [&](const std::string& name) {
        auto it = std::find(A.basis.begin(), A.basis.end(), name);
        EXPECT_NE(it, A.basis.end()) << name;
        return static_cast<std::size_t>(it - A.basis.begin());
    };
    return A.ring.format(A.at(idx(a), idx(b), idx(c)));
}

std::size_t catalan(std::size_t n) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

}  // namespace

TEST(Corpus, EveryEntryValidatesAndFactsAreTagged) {
    std::set<std::string> ids;
    for (const auto& e : corpus()) {
        EXPECT_TRUE(ids.insert(e.id).second) << e.id;
        std::visit([](const auto& A) { validate(A); }, e.algebra);
        for (const auto& f : e.facts) {
            EXPECT_TRUE(f.provenance == "PAPER" || f.provenance == "TRIVIAL" || f.provenance == "DERIVED") << e.id;
            if (f.provenance == "DERIVED") EXPECT_FALSE(f.oracle.empty()) << e.id << " " << f.kind;
            if (f.kind == "dim") {
                std::visit([&](const auto& A) { EXPECT_EQ(std::to_string(A.dim()), f.value) << e.id; }, e.algebra);
            }
        }
    }
}

TEST(Corpus, FixturesAreByteIdenticalToBuilders) {
    for (const auto& e : corpus()) {
        const std::string path = std::string(DECOMPGEN_SOURCE_DIR) + "/corpus/" + e.id + ".alg";
        EXPECT_EQ(read(path), "# " + e.builder + "\n" + serialize(e.algebra)) << path;
        EXPECT_EQ(serialize(parse_algebra(read(path))), serialize(e.algebra)) << path;
    }
}

TEST(Diagrams, BrauerTwoRelations) {
    auto B = brauer_algebra(2, ring_qq_delta());
    ASSERT_EQ(B.basis, (std::vector<std::string>{"1", "s", "u"}));
    EXPECT_EQ(constant(B, "s", "s", "1"), "1");
    EXPECT_EQ(constant(B, "s", "u", "u"), "1");
    EXPECT_EQ(constant(B, "u", "s", "u"), "1");
    EXPECT_EQ(constant(B, "u", "u", "u"), "delta");
    EXPECT_EQ(constant(B, "u", "u", "1"), "0");
}

TEST(Diagrams, CountsAndPlanarity) {
    EXPECT_EQ(all_matchings(2).size(), 3u);
    EXPECT_EQ(all_matchings(3).size(), 15u);  // (2*3-1)!!
    EXPECT_EQ(brauer_algebra(3, ring_qq_delta()).dim(), 15u);
    for (std::size_t n : {2u, 3u, 4u}) {
        std::size_t planar = 0;
        for (const auto& d : all_matchings(n)) planar += is_planar(d);
        EXPECT_EQ(planar, catalan(n));
        EXPECT_EQ(temperley_lieb(n, ring_qq_delta()).dim(), catalan(n));
    }
}

TEST(Diagrams, TemperleyLiebGeneratorsSquareToDelta) {
    // e_i: cup at (i, i+1) on top, cap at the same positions below, all other strands vertical
    for (std::size_t n : {2u, 3u, 4u}) {
        std::size_t generators = 0;
        for (const auto& d : all_matchings(n)) {
            bool is_generator = true;
            std::size_t cup_ends = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (d[i] < n) {
                    ++cup_ends;
                    is_generator = is_generator && d[n + i] == n + d[i];
                } else {
                    is_generator = is_generator && d[i] == n + i;
                }
            }
            if (!is_generator || cup_ends != 2 || !is_planar(d)) continue;
            ++generators;
            auto [sq, loops] = compose(d, d);
            EXPECT_EQ(sq, d);
            EXPECT_EQ(loops, 1u);
        }
        EXPECT_EQ(generators, n - 1);
    }
    auto TL3 = temperley_lieb(3, ring_qq_delta());
    std::size_t idempotent_like = 0;
    for (std::size_t i = 0; i < TL3.dim(); ++i)
        if (TL3.ring.format(TL3.at(i, i, i)) == "delta") ++idempotent_like;
    EXPECT_EQ(idempotent_like, 2u);  // e1 and e2
}

TEST(GroupAlgebra, RejectsNonGroups) {
    std::vector<std::vector<std::size_t>> t{{0, 1}, {1, 1}};
    try {
        group_algebra("X", ring_zz(), t, {"e", "x"});
        ADD_FAILURE() << "expected NotAGroup";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAGroup);
    }
}

TEST(Synthetic, KnownRadicals) {
    EXPECT_EQ(matrix_algebra(2, ring_zz()).dim(), 4u);
    EXPECT_EQ(upper_triangular(2, ring_zz()).dim(), 3u);
    EXPECT_EQ(dual_numbers(ring_zz()).dim(), 2u);
    auto S = direct_sum(dual_numbers(ring_zz()), matrix_algebra(2, ring_zz()), "S");
    EXPECT_EQ(S.dim(), 6u);
    validate(S);
}

TEST(Sampling, DeterministicAndAvoiding) {
    auto Zd = ring_zz_delta();
    auto avoid = Zd.parse("4*delta^2");
    auto a = sample_primes(Zd, 20, 5, avoid);
    auto b = sample_primes(Zd, 20, 5, avoid);
    ASSERT_EQ(a.size(), 20u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].str(), b[i].str());
        EXPECT_FALSE(a[i].contains(avoid)) << a[i].str();
    }
    auto Z = ring_zz();
    for (const auto& p : sample_primes(Z, 20, 1, Z.from_int(46656))) EXPECT_FALSE(p.contains(Z.from_int(6)));
    EXPECT_TRUE(sample_primes(make_ring<Rationals>(RingDescriptor::parse("QQ")), 5, 1, Z.one()).empty());
}
