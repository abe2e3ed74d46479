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

#pragma once

// Exact scalars and the elementary combinatorial functions every other
// module is built on. Integers and rationals are GMP-backed; mpq_class keeps
// values in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace secant {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Thrown when a caller violates a documented precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!. n may be negative.
ExactInt binom(long n, long k);

ExactInt factorial(long n);

/// (sum parts)! / prod(parts_i!)
ExactInt multinomial(std::span<const long> parts);

/// base^exponent for exponent >= 0.
ExactInt power(long base, long exponent);

std::string to_string(const ExactInt& value);
std::string to_string(const ExactRat& value);

/// Parses a decimal integer or a reduced fraction "p/q".
ExactRat parse_rational(const std::string& text);

inline bool is_integer(const ExactRat& value) { return value.get_den() == 1; }

/// Weakly decreasing tuple of positive integers.
class Partition {
public:
    Partition() = default;
    /// Parts are sorted into decreasing order; zero or negative parts throw.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// (value, multiplicity) pairs in decreasing order of value.
    std::vector<std::pair<int, int>> multiplicities() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// All partitions of k, lexicographically decreasing; partitions_of(0) is the
/// single empty partition.
std::vector<Partition> partitions_of(int k);

}  // namespace secant
