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
#include "secant/macdonald.hpp"

using namespace secant;

namespace {

SecantParams make(long g, long s, long m, long d, long r)
{
    SecantParams p;
    p.g = g;
    p.s = s;
    p.m = m;
    p.d = d;
    p.r = r;
    return p;
}

}  // namespace

TEST_CASE("known values")
{
    CHECK(macdonald_general(make(6, 2, 6, 2, 1), MacdonaldForm::one) == 4);
    CHECK(macdonald_general(make(6, 2, 6, 2, 1), MacdonaldForm::two) == 4);
    CHECK(macdonald_general(make(3, 2, 4, 2, 1), MacdonaldForm::one) == 0);
    CHECK(macdonald_general(make(10, 4, 12, 6, 3), MacdonaldForm::one) == 41);
    CHECK(macdonald_general(make(10, 4, 12, 6, 3), MacdonaldForm::two) == 41);
    CHECK(macdonald_r1(2, 6, 6) == 4);
    CHECK(macdonald_r1(3, 10, 12) == 40);
}

TEST_CASE("second form needs the n-variable normalization")
{
    // raw extraction for (g,s,m,d,r) = (6,2,6,2,1): two variables, exponent 2
    const oracle::Int raw = oracle::diagonal_coefficient(2, 2, 1, -2, 6);
    CHECK(raw == -8);
    // (-1)^{C(2,2)}/2! turns it into the first-form value 4
    CHECK(-raw / 2 == 4);
}

TEST_CASE("both forms match the determinant-expansion oracle")
{
    int compared = 0;
    for (long d = 1; d <= 4; ++d)
        for (long r = 1; r <= d; ++r)
            for (long s = std::max(1L, d - r); s <= d + 1; ++s)
                for (long g = 0; g <= 8; g += 2)
                    for (long m = d + 1; m <= d + 5; m += 2) {
                        const SecantParams p = make(g, s, m, d, r);
                        if (s - d + r + 1 > 3 || r > 3)
                            continue;
                        const oracle::Rat one = oracle::macdonald_one(g, s, m, d, r);
                        const oracle::Rat two = oracle::macdonald_two(g, s, m, d, r);
                        CAPTURE(p.to_string());
                        CHECK(one == two);
                        if (one.get_den() == 1) {
                            CHECK(macdonald_general(p, MacdonaldForm::one) == one.get_num());
                            CHECK(macdonald_general(p, MacdonaldForm::two) == two.get_num());
                        } else {
                            CHECK_THROWS_AS(macdonald_general(p, MacdonaldForm::one), std::logic_error);
                        }
                        ++compared;
                    }
    CHECK(compared > 100);
}

TEST_CASE("closed r = 1 sum equals the first form when s = 2d-2")
{
    for (long d = 2; d <= 4; ++d)
        for (long g = 0; g <= 12; ++g)
            for (long m = d + 1; m <= d + 8; ++m) {
                const SecantParams p = make(g, 2 * d - 2, m, d, 1);
                CAPTURE(p.to_string());
                CHECK(macdonald_r1(d, g, m) == macdonald_general(p, MacdonaldForm::one));
            }
}

TEST_CASE("r = s-1 specialization")
{
    for (long r = 2; r <= 3; ++r)
        for (long u = 1; u <= 6; ++u) {
            const SecantParams p = rs1_params(r, u);
            CAPTURE(p.to_string());
            CHECK(p.rho() == 0);
            CHECK(p.mu() == 0);
            CHECK(macdonald_rs1(r, u) == macdonald_general(p, MacdonaldForm::one));
        }
    CHECK(macdonald_rs1(2, 1) == 0);
    CHECK_THROWS_AS(rs1_params(1, 2), DomainError);
}

TEST_CASE("r = 1 family has rho = mu = 0")
{
    for (long t = 1; t <= 4; ++t)
        for (long u = 1; u <= 4; ++u) {
            const SecantParams p = r1_params(t, u);
            CHECK(p.rho() == 0);
            CHECK(p.mu() == 0);
        }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(macdonald_general(make(6, 2, 6, 2, 0), MacdonaldForm::one), DomainError);
    CHECK_THROWS_AS(macdonald_general(make(6, 2, 2, 2, 1), MacdonaldForm::one), DomainError);
    CHECK_THROWS_AS(macdonald_general(make(-1, 2, 6, 2, 1), MacdonaldForm::one), DomainError);
    CHECK_THROWS_AS(macdonald_general(make(6, 1, 8, 4, 1), MacdonaldForm::one), DomainError);
    // nine variables exceed the extraction engine
    CHECK_THROWS_AS(macdonald_general(make(20, 9, 30, 2, 1), MacdonaldForm::two), DomainError);
}

TEST_CASE("generalized Catalan numbers")
{
    CHECK(eta(4, 1, 3) == 2);
    CHECK(eta(6, 2, 6) == 5);
    for (int rows = 1; rows <= 5; ++rows)
        for (int cols = 1; cols <= 5; ++cols) {
            const long s = cols - 1;
            const long g = static_cast<long>(rows) * cols;
            CHECK(eta(g, s, s + g - rows) == oracle::hook_length(rows, cols));
        }
    CHECK_THROWS_AS(eta(5, 1, 3), DomainError);
}
