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

// Word types and rectangular tableaux of limit linear series on elliptic
// chains, their vanishing sequences, shifts of included series, exhaustive
// checkers for the nearly-consecutive-sequence shift bounds, and the
// Eisenbud-Harris compatibility test.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace secant {

/// Length-g word over the alphabet [1, s+1].
class WordType {
public:
    WordType(std::vector<int> letters, int s);

    const std::vector<int>& letters() const { return letters_; }
    int rank() const { return s_; }
    int genus() const { return static_cast<int>(letters_.size()); }

    friend bool operator==(const WordType&, const WordType&) = default;

private:
    std::vector<int> letters_;
    int s_;
};

/// The word (1 2 ... s+1) repeated u times.
WordType canonical_word(int s, int u);

/// Standard Young tableau of rectangular shape, entries 1..rows*cols.
class RectTableau {
public:
    /// Throws DomainError unless the rows form a standard Young tableau.
    explicit RectTableau(std::vector<std::vector<int>> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
    int at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& entries() const { return rows_; }

    friend bool operator==(const RectTableau&, const RectTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// T_{ij} = position of the i-th occurrence of letter j.
RectTableau word_to_tableau(const WordType& w);

/// Position T_{ij} of the word carries letter j.
WordType tableau_to_word(const RectTableau& t);

/// All standard Young tableaux of a rows x cols rectangle, ordered by their
/// words lexicographically. Requires rows*cols <= 16.
std::vector<RectTableau> enumerate_tableaux(int rows, int cols);

/// Vanishing orders of the aspect on each component of an elliptic chain.
/// at_p[j] is increasing at the first marked point of component j; at_q[j] is
/// the aligned (decreasing) sequence at the second point.
struct VanishingTable {
    int s = 0;
    int m = 0;
    std::vector<std::vector<int>> at_p;
    std::vector<std::vector<int>> at_q;
};

/// Vanishing sequences of the refined limit g^s_m of word type w, which must
/// satisfy rho(g,s,m) = 0.
VanishingTable vanishing_sequences(const WordType& w, int m);

/// Increasing sequence with unit gaps except at most one gap of 2.
class NearConsecSeq {
public:
    /// nullopt unless the differences are all 1 apart from at most one 2.
    static std::optional<NearConsecSeq> from(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    /// 1-based index j0 with a_{j0} - a_{j0-1} = 2; nullopt when consecutive.
    std::optional<int> distinguished_index() const { return distinguished_; }

private:
    NearConsecSeq() = default;
    std::vector<int> values_;
    std::optional<int> distinguished_;
};

/// The nearly-consecutive sequence of length s+1 starting at 0 whose gap of 2
/// sits at the 1-based index i0 (so it ends at s+1).
std::vector<int> nearly_consecutive(int i0, int s);

/// Sum of w(i) - v(i) over two strictly increasing index lists of equal length.
int shift(std::span<const int> v, std::span<const int> w);

struct ClaimReport {
    /// Minimum shift over all admissible pairs; empty when there are none.
    std::optional<int> min_shift;
    bool vacuous = true;
    /// M * sstar + 1
    int bound = 0;
    long pairs_checked = 0;

    bool holds() const { return vacuous || *min_shift >= bound; }
};

/// Exhaustive check of the shift bound for base points on a component with
/// complement m-1-L_i (m-L_{i0} at the distinguished index) and target
/// (m-M-1, ..., m-M-1, m-M). Requires M >= 2, 2 <= i0 <= s, 0 <= sstar <= s,
/// s < m and s <= 8.
ClaimReport verify_claim_A(int s, int m, int i0, int M, int sstar);

/// As verify_claim_A with complement m-L_i and target (m-M, ..., m-M).
ClaimReport verify_claim_B(int s, int m, int i0, int M, int sstar);

/// Aspect of a limit series on one component: vanishing orders at the
/// incoming node (increasing) and at the outgoing node (decreasing).
struct ComponentAspect {
    std::vector<int> incoming;
    std::vector<int> outgoing;
};

/// True iff outgoing(j) + incoming(j+1) >= (d, ..., d) at every node.
bool eh_compatible(std::span<const ComponentAspect> chain, int d);

/// 0-based indices j of the nodes between components j and j+1 where
/// compatibility fails.
std::vector<std::size_t> eh_violations(std::span<const ComponentAspect> chain, int d);

/// Reads a vanishing table: one block per component, two lines of integers
/// (incoming then outgoing). Blank lines separate blocks; '#' starts a comment.
std::vector<ComponentAspect> read_vanishing_table(std::istream& in);
std::vector<ComponentAspect> load_vanishing_table(const std::string& path);

}  // namespace secant
