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

#include "secant/algebra.hpp"

#include <algorithm>
#include <functional>

namespace secant {

ExactInt binom(long n, long k)
{
    if (k < 0)
        throw DomainError("binom: k must be nonnegative, got " + std::to_string(k));
    ExactInt top = n;
    ExactInt result;
    // mpz_bin_ui accepts a negative top argument with the usual sign law.
    mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return result;
}

ExactInt factorial(long n)
{
    if (n < 0)
        throw DomainError("factorial of negative argument " + std::to_string(n));
    ExactInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

ExactInt multinomial(std::span<const long> parts)
{
    long total = 0;
    ExactInt result = 1;
    for (long p : parts) {
        if (p < 0)
            throw DomainError("multinomial: negative part");
        total += p;
        result *= binom(total, p);
    }
    return result;
}

ExactInt power(long base, long exponent)
{
    if (exponent < 0)
        throw DomainError("power: negative exponent");
    ExactInt b = base;
    ExactInt result;
    mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
    return result;
}

std::string to_string(const ExactInt& value) { return value.get_str(10); }

std::string to_string(const ExactRat& value) { return value.get_str(10); }

ExactRat parse_rational(const std::string& text)
{
    ExactRat value;
    if (value.set_str(text, 10) != 0 || value.get_den() == 0)
        throw DomainError("not a rational number: '" + text + "'");
    value.canonicalize();
    return value;
}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    if (std::ranges::any_of(parts_, [](int p) { return p <= 0; }))
        throw DomainError("partition parts must be positive");
    std::ranges::sort(parts_, std::greater<>());
}

int Partition::weight() const
{
    int w = 0;
    for (int p : parts_)
        w += p;
    return w;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const
{
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k)
{
    if (k < 0)
        throw DomainError("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(k, k, prefix, out);
    return out;
}

}  // namespace secant
