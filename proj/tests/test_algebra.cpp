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
#include "secant/algebra.hpp"
#include "secant/truncated_poly.hpp"

using namespace secant;

TEST_CASE("binomials agree with Pascal's triangle")
{
    for (long n = 0; n <= 60; ++n)
        for (long k = 0; k <= n + 2; ++k)
            CHECK(binom(n, k) == oracle::pascal(n, k));
}

TEST_CASE("binomials with negative top")
{
    CHECK(binom(-1, 3) == -1);
    CHECK(binom(-2, 2) == 3);
    CHECK(binom(-5, 0) == 1);
    // C(-n, k) = (-1)^k C(n+k-1, k)
    for (long n = 1; n <= 10; ++n)
        for (long k = 0; k <= 10; ++k)
            CHECK(binom(-n, k) == (k % 2 ? -1 : 1) * oracle::pascal(n + k - 1, k));
    CHECK_THROWS_AS(binom(5, -1), DomainError);
}

TEST_CASE("factorial, power, multinomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == oracle::factorial(20));
    CHECK(power(6, 3) == 216);
    CHECK(power(-2, 5) == -32);
    CHECK(power(7, 0) == 1);
    const std::vector<long> parts{2, 1, 1};
    CHECK(multinomial(parts) == 12);
    const std::vector<long> one{5};
    CHECK(multinomial(one) == 1);
}

TEST_CASE("rationals print and parse")
{
    CHECK(to_string(parse_rational("-1280/3")) == "-1280/3");
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(is_integer(parse_rational("8/4")));
    CHECK(to_string(ExactInt(42)) == "42");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("partitions")
{
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int k = 0; k <= 10; ++k)
        CHECK(partitions_of(k).size() == p[static_cast<std::size_t>(k)]);
    const auto four = partitions_of(4);
    CHECK(four.front() == Partition({4}));
    CHECK(four.back() == Partition({1, 1, 1, 1}));
    for (const auto& lam : partitions_of(7))
        CHECK(lam.weight() == 7);
    const Partition lam({1, 2, 1});
    CHECK(lam.parts() == std::vector<int>{2, 1, 1});
    CHECK(lam.length() == 3);
    CHECK(lam.multiplicities() == std::vector<std::pair<int, int>>{{2, 1}, {1, 2}});
    CHECK_THROWS_AS(Partition({0}), DomainError);
    CHECK(to_string(lam) == "(2,1,1)");
}

TEST_CASE("truncated polynomials")
{
    const std::vector<int> caps{3, 3};
    const auto x = TruncatedMultiPoly::binomial_series(caps, 0, 2);
    // (1 + t_0)^2 (1 + t_0)^-2 = 1 within the caps
    const auto inv = TruncatedMultiPoly::binomial_series(caps, 0, -2);
    CHECK(x * inv == TruncatedMultiPoly::constant(caps, 1));
    const auto lin = TruncatedMultiPoly::linear_form_power(caps, 4);
    CHECK(lin.coefficient({1, 2}) == 12);
    CHECK(lin.coefficient({3, 3}) == 0);
    const auto v = TruncatedMultiPoly::vandermonde_squared(caps);
    CHECK(v.coefficient({2, 0}) == 1);
    CHECK(v.coefficient({1, 1}) == -2);
    CHECK(product_coefficient(lin, v, {2, 1}) == (lin * v).coefficient({2, 1}));
    CHECK((lin.pow(2)).coefficient({1, 1}) == TruncatedMultiPoly::linear_form_power(caps, 8).coefficient({1, 1}));
    CHECK_THROWS_AS(lin.coefficient({4, 0}), DomainError);
    CHECK_THROWS_AS(TruncatedMultiPoly(std::vector<int>(9, 1)), DomainError);
}
