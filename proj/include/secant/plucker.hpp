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

// Plucker poset of Gr(2,n), its maximal chains, and the prohibition
// sequences they induce on elliptic chains for the r = s-1 count.

#include "secant/census.hpp"

#include <span>
#include <utility>
#include <vector>

namespace secant {

/// The 2-subset {a, b} of [n], a < b.
struct PluckerVertex {
    int a = 1;
    int b = 2;

    friend bool operator==(const PluckerVertex&, const PluckerVertex&) = default;
    friend auto operator<=>(const PluckerVertex&, const PluckerVertex&) = default;
};

struct PluckerPoset {
    int n = 0;
    /// Lexicographic order.
    std::vector<PluckerVertex> vertices;
    /// (lower, upper) index pairs into vertices.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// {a,b} is covered by {a+1,b} and {a,b+1} when those are 2-subsets of [n].
/// Requires n >= 3.
PluckerPoset plucker_poset(int n);

/// Saturated chain from {1,2} to {n-1,n}.
class PluckerChain {
public:
    /// Throws DomainError unless consecutive vertices are covers in Gr(2,n).
    PluckerChain(int n, std::vector<PluckerVertex> vertices);

    int ambient() const { return n_; }
    const std::vector<PluckerVertex>& vertices() const { return vertices_; }
    /// Element shared by the two ends of each edge; length 2(n-2).
    std::vector<int> nu() const;

private:
    int n_;
    std::vector<PluckerVertex> vertices_;
};

/// All maximal chains, depth-first with the {a+1,b} branch taken first.
/// Requires 3 <= n <= 10.
std::vector<PluckerChain> maximal_chains(int n);

/// Labels nu of the chain with modulus n.
ProhibitionSequence prohibition_of_chain(const PluckerChain& c);

/// Sum of traversal counts of g-column grids over the given prohibitions.
ExactInt count_over_prohibitions(std::span<const ProhibitionSequence> prohibitions, long g,
                                 TraversalMethod method = TraversalMethod::dp);

/// r = s-1 count: prohibitions of all maximal chains of Gr(2, r+2) on grids
/// with g = (r+2)u columns. Requires r >= 2, u >= 1.
ExactInt count_rs1(int r, int u, TraversalMethod method = TraversalMethod::dp);

}  // namespace secant
