// Copyright 2026 The secant-census Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "secant/chains.hpp"
#include "secant/macdonald.hpp"
#include "secant/plucker.hpp"

#include <set>

using namespace secant;

TEST_CASE("Plucker posets")
{
    const auto p3 = plucker_poset(3);
    CHECK(p3.vertices.size() == 3);
    CHECK(p3.covers.size() == 2);
    const auto p4 = plucker_poset(4);
    CHECK(p4.vertices.size() == 6);
    std::set<std::pair<PluckerVertex, PluckerVertex>> edges;
    for (const auto& [lo, hi] : p4.covers)
        edges.insert({p4.vertices[lo], p4.vertices[hi]});
    const std::set<std::pair<PluckerVertex, PluckerVertex>> diamond{
        {{1, 2}, {1, 3}}, {{1, 3}, {1, 4}}, {{1, 3}, {2, 3}}, {{1, 4}, {2, 4}}, {{2, 3}, {2, 4}}, {{2, 4}, {3, 4}}};
    CHECK(edges == diamond);
    const auto p5 = plucker_poset(5);
    CHECK(p5.vertices.size() == 10);
    CHECK(p5.covers.size() == 12);
    CHECK_THROWS_AS(plucker_poset(2), DomainError);
}

TEST_CASE("maximal chains")
{
    CHECK(maximal_chains(3).size() == 1);
    CHECK(maximal_chains(4).size() == 2);
    const auto c5 = maximal_chains(5);
    CHECK(c5.size() == 5);
    for (int n = 3; n <= 10; ++n) {
        const auto chains = maximal_chains(n);
        CHECK(oracle::Int(static_cast<unsigned long>(chains.size())) == oracle::catalan(n - 2));
        for (const auto& c : chains) {
            const auto lam = prohibition_of_chain(c);
            CHECK(lam.rows() == 2 * (n - 2));
            CHECK(lam.modulus == n);
            for (int x : lam.labels)
                CHECK((x >= 1 && x <= n));
        }
    }
    for (int n = 3; n <= 8; ++n)
        CHECK(maximal_chains(n).size() == enumerate_tableaux(2, n - 2).size());
    CHECK_THROWS_AS(maximal_chains(11), DomainError);
    CHECK_THROWS_AS(PluckerChain(4, {{1, 2}, {2, 3}, {3, 4}}), DomainError);
    CHECK_THROWS_AS(PluckerChain(4, {{1, 2}, {1, 3}}), DomainError);
}

TEST_CASE("prohibition sequences of chains")
{
    const PluckerChain worked(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(prohibition_of_chain(worked).labels == std::vector<int>{1, 3, 2, 4, 3, 5});
    const PluckerChain edge(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    CHECK(prohibition_of_chain(edge).labels == std::vector<int>{1, 1, 1, 5, 5, 5});
    CHECK(prohibition_of_chain(maximal_chains(3).front()).labels == std::vector<int>{1, 3});
    std::set<std::vector<int>> all;
    for (const auto& c : maximal_chains(5))
        all.insert(prohibition_of_chain(c).labels);
    const std::set<std::vector<int>> expected{
        {1, 3, 2, 4, 3, 5}, {1, 3, 2, 2, 5, 5}, {1, 1, 4, 4, 3, 5}, {1, 1, 4, 2, 5, 5}, {1, 1, 1, 5, 5, 5}};
    CHECK(all == expected);
}

TEST_CASE("r = s-1 counts equal the Macdonald numbers")
{
    CHECK(count_rs1(3, 1) == 0);
    CHECK(count_rs1(2, 2) == macdonald_rs1(2, 2));
    CHECK(count_rs1(2, 2) == 13);
    CHECK(count_rs1(3, 2) == 41);
    for (int r = 2; r <= 3; ++r)
        for (int u = 1; u <= 6; ++u) {
            CAPTURE(r);
            CAPTURE(u);
            const ExactInt dp = count_rs1(r, u);
            CHECK(dp == macdonald_rs1(r, u));
            CHECK(dp == count_rs1(r, u, TraversalMethod::stratified));
            if (u <= 3)
                CHECK(dp == count_rs1(r, u, TraversalMethod::brute));
        }
    CHECK_THROWS_AS(count_rs1(1, 2), DomainError);
}

TEST_CASE("worked chain of Gr(2,5)")
{
    GridSpec spec;
    spec.g = 10;
    spec.modulus = 5;
    spec.prohibition = {{1, 3, 2, 4, 3, 5}, 5};
    CHECK(count_traversals_dp(spec) == 4);
    std::set<std::vector<int>> words;
    for (const auto& cols : list_traversals(spec)) {
        std::vector<int> w;
        for (long c : cols)
            w.push_back(1 + static_cast<int>((c - 1) % 5));
        words.insert(w);
    }
    std::set<std::vector<int>> leftover;
    for (int a : {2, 3})
        for (int b : {3, 4})
            leftover.insert({a, 4, 5, 1, 2, b});
    CHECK(words == leftover);

    const WordStrata strata = stratify_words(spec.prohibition);
    const std::map<int, ExactInt> widths{{2, 4}, {3, 461}, {4, 2465}, {5, 1095}, {6, 71}};
    CHECK(strata.by_width == widths);
    for (int u = 1; u <= 4; ++u) {
        spec.g = 5L * u;
        ExactInt total = 0;
        for (const auto& [w, n] : strata.by_width)
            if (u + 6 - w >= 6)
                total += n * binom(u + 6 - w, 6);
        CHECK(total == count_traversals_dp(spec));
    }
}

TEST_CASE("sums over caller-supplied prohibitions")
{
    const std::vector<ProhibitionSequence> lams{{{1, 3}, 3}, {{0, 0}, 3}};
    CHECK(count_over_prohibitions(lams, 6) == 4 + 15);
}
