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

#include "secant/algebra.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace secant {

/// Sparse multivariate polynomial with exact rational coefficients and a
/// per-variable exponent cap. Every product discards terms exceeding a cap, so
/// the stored coefficients are exactly those of the untruncated product at
/// multidegrees within the caps.
///
/// At most 8 variables, each cap at most 127.
class TruncatedMultiPoly {
public:
    using Exponents = std::vector<int>;

    static constexpr std::size_t max_vars = 8;
    static constexpr int max_cap = 127;

    /// The zero polynomial.
    explicit TruncatedMultiPoly(std::vector<int> caps);

    static TruncatedMultiPoly constant(std::vector<int> caps, const ExactRat& c);
    static TruncatedMultiPoly monomial(std::vector<int> caps, const Exponents& e, const ExactRat& c);

    /// (1 + a*t_var)^n as a binomial series; n may be negative.
    static TruncatedMultiPoly binomial_series(std::vector<int> caps, std::size_t var, long n, long a = 1);

    /// (1 + t_1 + ... + t_k)^n for n >= 0, built from multinomial coefficients.
    static TruncatedMultiPoly linear_form_power(std::vector<int> caps, long n);

    /// prod_{i>j} (t_i - t_j)^2
    static TruncatedMultiPoly vandermonde_squared(std::vector<int> caps);

    std::size_t num_vars() const { return caps_.size(); }
    const std::vector<int>& caps() const { return caps_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Throws DomainError if an exponent exceeds its cap.
    ExactRat coefficient(const Exponents& e) const;

    /// Nonzero terms sorted by exponent vector.
    std::vector<std::pair<Exponents, ExactRat>> terms() const;

    /// Adds c * t^e; terms beyond the caps are silently dropped.
    void add_term(const Exponents& e, const ExactRat& c);

    TruncatedMultiPoly& operator+=(const TruncatedMultiPoly& other);
    TruncatedMultiPoly& operator-=(const TruncatedMultiPoly& other);
    TruncatedMultiPoly& operator*=(const TruncatedMultiPoly& other);
    TruncatedMultiPoly& operator*=(const ExactRat& c);

    friend TruncatedMultiPoly operator+(TruncatedMultiPoly a, const TruncatedMultiPoly& b) { return a += b; }
    friend TruncatedMultiPoly operator-(TruncatedMultiPoly a, const TruncatedMultiPoly& b) { return a -= b; }
    friend TruncatedMultiPoly operator*(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b);
    friend bool operator==(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b);

    TruncatedMultiPoly pow(unsigned n) const;

private:
    using Key = std::uint64_t;

    Key pack(const Exponents& e) const;
    Exponents unpack(Key k) const;
    bool within_caps(Key k) const;
    void check_compatible(const TruncatedMultiPoly& other) const;

    std::vector<int> caps_;
    std::unordered_map<Key, ExactRat> terms_;
};

/// Coefficient of t^e in p; the exponent must lie within the caps of p.
ExactRat poly_coefficient(const TruncatedMultiPoly& p, const TruncatedMultiPoly::Exponents& e);

/// Coefficient of t^e in a*b, computed without forming the product.
ExactRat product_coefficient(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b,
                             const TruncatedMultiPoly::Exponents& e);

}  // namespace secant
