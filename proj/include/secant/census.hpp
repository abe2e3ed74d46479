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

// Counting engine on elliptic chains: the set S, positive traversals of
// prohibition grids, path counts of Gamma(d,e) and the stratification of
// W^s(d) by negative entries.

#include "secant/algebra.hpp"

#include <map>
#include <vector>

namespace secant {

/// Per-row forbidden column labels; 0 means no prohibition in that row.
struct ProhibitionSequence {
    std::vector<int> labels;
    int modulus = 1;

    /// Throws DomainError unless labels is nonempty, modulus >= 1 and every
    /// entry lies in [0, modulus].
    void validate() const;
    int rows() const { return static_cast<int>(labels.size()); }
};

/// g columns; column c carries label 1 + ((c-1) mod modulus) and cell (j, c)
/// is prohibited iff that label equals prohibition.labels[j] != 0.
struct GridSpec {
    long g = 0;
    int modulus = 1;
    ProhibitionSequence prohibition;

    void validate() const;
    bool prohibited(int row, long column) const;
};

/// Labels 2k-1 reduced into [1, 2t+1], k = 1..t+1.
ProhibitionSequence r1_prohibition(int t);
/// Grid of the r = 1 family: g = (2t+1)u, modulus 2t+1.
GridSpec r1_grid(int t, int u);

/// |{ j_1 < ... < j_{t+1} in [(2t+1)u] : j_k != 2k-1 mod 2t+1 }| by direct
/// enumeration. Throws DomainError if there are more than 10^7 subsets.
ExactInt count_set_S(int t, int u);

/// Number of positive traversals, by a prefix-sum DP over rows.
ExactInt count_traversals_dp(const GridSpec& spec);

/// All positive traversals as 1-based column tuples. Throws DomainError if
/// C(g, d) exceeds 10^7.
std::vector<std::vector<long>> list_traversals(const GridSpec& spec);

/// Positive traversals grouped by the word of column labels they visit.
/// width(word) = ceil(span / modulus), where span is the least column a
/// traversal with that word can end in; the word contributes
/// C(floor((g - span)/modulus) + d, d) traversals. When g = u * modulus this
/// is C(u + d - width, d).
struct WordStrata {
    int rows = 0;
    int modulus = 1;
    /// width -> number of admissible label words of that width
    std::map<int, ExactInt> by_width;
    /// span -> number of admissible label words of that span
    std::map<long, ExactInt> by_span;
};

/// Requires modulus^rows <= 10^8.
WordStrata stratify_words(const ProhibitionSequence& p);

/// count_traversals_dp recomputed from the word stratification.
ExactInt count_traversals_stratified(const GridSpec& spec);

enum class TraversalMethod {
    dp,
    brute,
    stratified,
};

/// Dispatches to count_traversals_dp, list_traversals or
/// count_traversals_stratified.
ExactInt count_traversals(const GridSpec& spec, TraversalMethod method);

/// C(d+e-1, d): top-to-bottom paths of Gamma(d,e). Requires d, e >= 1.
ExactInt path_count_gamma(long d, long e);

/// counts[k] = number of integer tuples (x_1..x_d) with
/// j <= x_1 + ... + x_j <= s+j-1 for all j having exactly k negative entries,
/// k = 0..d. Requires s, d >= 1 and s^d <= 10^8.
std::vector<ExactInt> enumerate_W(int s, int d);

/// sum_{k=0}^{t-1} N_k * C(t+1+u-2-k, t+1), N = enumerate_W(2t, t+1).
ExactInt count_r1(int t, int u);

}  // namespace secant
