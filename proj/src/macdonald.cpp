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

#include "secant/macdonald.hpp"

#include "secant/truncated_poly.hpp"

#include <stdexcept>
#include <vector>

namespace secant {

void SecantParams::validate() const
{
    if (g < 0)
        throw DomainError("genus must be nonnegative");
    if (s < 1)
        throw DomainError("s must be at least 1");
    if (d < 1)
        throw DomainError("d must be at least 1");
    if (m <= d)
        throw DomainError("m must exceed d");
    if (r < 1 || r > d)
        throw DomainError("r must satisfy 1 <= r <= d");
    if (s - d + r < 0)
        throw DomainError("included series rank s-d+r is negative");
}

std::string SecantParams::to_string() const
{
    return "(g=" + std::to_string(g) + ",s=" + std::to_string(s) + ",m=" + std::to_string(m) +
           ",d=" + std::to_string(d) + ",r=" + std::to_string(r) + ")";
}

namespace {

// Upper bound on the dense size of an extraction, prod (cap+1).
constexpr double max_extraction_box = 4.0e6;

// [t_1^e ... t_n^e] prod (1 + a t_i)^power * (1 + sum t_i)^g * Delta(t)^2
ExactRat extract_diagonal(long n, long e, long a, long power, long g)
{
    if (n < 1 || n > static_cast<long>(TruncatedMultiPoly::max_vars) || e > TruncatedMultiPoly::max_cap)
        throw DomainError("Macdonald extraction outside supported size (<= 8 variables, exponent <= 127)");
    double box = 1.0;
    for (long i = 0; i < n; ++i)
        box *= static_cast<double>(e + 1);
    if (box > max_extraction_box)
        throw DomainError("Macdonald extraction too large: " + std::to_string(n) + " variables at exponent " +
                          std::to_string(e));

    std::vector<int> caps(static_cast<std::size_t>(n), static_cast<int>(e));
    TruncatedMultiPoly acc = TruncatedMultiPoly::vandermonde_squared(caps);
    for (std::size_t i = 0; i < caps.size(); ++i)
        acc *= TruncatedMultiPoly::binomial_series(caps, i, power, a);
    const auto linear = TruncatedMultiPoly::linear_form_power(caps, g);
    return product_coefficient(acc, linear, std::vector<int>(caps.size(), static_cast<int>(e)));
}

ExactInt normalize(const ExactRat& raw, long k, const std::string& what)
{
    ExactRat v = raw / ExactRat(factorial(k));
    if ((k * (k - 1) / 2) % 2 != 0)
        v = -v;
    if (!is_integer(v))
        throw std::logic_error("non-integral Macdonald value " + to_string(v) + " for " + what);
    return v.get_num();
}

}  // namespace

ExactInt macdonald_general(const SecantParams& p, MacdonaldForm form)
{
    p.validate();
    const long e = p.s - p.d + 2 * p.r;
    if (form == MacdonaldForm::one) {
        ExactRat raw = extract_diagonal(p.r, e, -1, p.g + p.s - p.m, p.g);
        return normalize(raw, p.r, p.to_string());
    }
    const long n = p.s - p.d + p.r + 1;
    ExactRat raw = extract_diagonal(n, e, 1, p.m - p.g - p.s, p.g);
    return normalize(raw, n, p.to_string());
}

ExactInt macdonald_r1(long d, long g, long m)
{
    if (d < 1)
        throw DomainError("macdonald_r1: d must be at least 1");
    ExactInt total = 0;
    for (long i = 0; i <= d; ++i) {
        ExactInt term = binom(g + 2 * d - 2 - m, i) * binom(g, d - i);
        if (i % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

SecantParams rs1_params(long r, long u)
{
    if (r < 2 || u < 1)
        throw DomainError("r = s-1 family requires r >= 2 and u >= 1");
    SecantParams p;
    p.r = r;
    p.d = 2 * r;
    p.s = r + 1;
    p.g = u * (r + 2);
    p.m = (r + 1) * (u + 1);
    return p;
}

SecantParams r1_params(long t, long u)
{
    if (t < 1 || u < 1)
        throw DomainError("r = 1 family requires t >= 1 and u >= 1");
    SecantParams p;
    p.r = 1;
    p.d = t + 1;
    p.s = 2 * t;
    p.g = (2 * t + 1) * u;
    p.m = 2 * t * (u + 1);
    return p;
}

ExactInt macdonald_rs1(long r, long u)
{
    const SecantParams p = rs1_params(r, u);
    ExactRat raw = extract_diagonal(2, r + 1, 1, p.m - p.g - p.s, p.g);
    return normalize(raw, 2, p.to_string());
}

ExactInt eta(long g, long s, long m)
{
    const long rho = g - (s + 1) * (s + g - m);
    if (rho != 0)
        throw DomainError("eta requires rho(g,s,m) = 0, got rho = " + std::to_string(rho));
    if (s < 0 || g < 0)
        throw DomainError("eta: g and s must be nonnegative");
    ExactRat value = ExactRat(factorial(g));
    for (long i = 0; i <= s; ++i) {
        ExactRat ratio(factorial(i), factorial(g - m + s + i));
        ratio.canonicalize();
        value *= ratio;
    }
    if (!is_integer(value))
        throw std::logic_error("eta: non-integral result");
    return value.get_num();
}

}  // namespace secant
