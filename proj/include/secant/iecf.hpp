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

// Inclusion-exclusion closed forms for the number of tuples in W^{2d-2}(d)
// with a given number of negative entries.

#include "secant/algebra.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>

namespace secant {

/// Number of binary strings on d-1 bits whose maximal runs of ones have the
/// lengths in lam: ell!/prod(e_i!) * C(d - |lam|, ell), where e_i are the
/// part multiplicities. Zero when |lam| + ell > d.
ExactInt c_d(int d, const Partition& lam);

/// prod_i N(lam_i + 1, 2d-2-2 lam_i) * (2d-2)^{d - ell - |lam|} with
/// N(a, e) = C(a+e-1, a); zero when the exponent is negative.
ExactInt m_d(int d, const Partition& lam);

/// Tuples with negative entries at least at a prescribed set of j positions,
/// summed over all such sets: sum over |lam| = j of c_d(lam) m_d(lam).
/// Requires 0 <= j <= d-2.
ExactInt n_plus(int d, int j);

/// Inclusion-exclusion coefficients gamma_j^k(d), keyed by (d, j, k).
class GammaTable {
public:
    /// Lines "d j k gamma"; '#' starts a comment.
    static GammaTable read(std::istream& in);
    static GammaTable load(const std::string& path);

    void set(int d, int j, int k, const ExactInt& value);
    /// gamma_j^j = 1; throws DomainError for a missing entry with j < k.
    ExactInt at(int d, int j, int k) const;
    const std::map<std::tuple<int, int, int>, ExactInt>& entries() const { return entries_; }

private:
    std::map<std::tuple<int, int, int>, ExactInt> entries_;
};

/// sum_{k=j}^{d-2} (-1)^{k-j} gamma_j^k(d) n_plus(d, k).
ExactInt n_exact_closed(int d, int j, const GammaTable& gammas);

/// sum_{j=1}^{d-1} C(2d-j-1, j) C(d+j-1, d-j): tuples with d-2 negative
/// entries. Requires d >= 2.
ExactInt n_top(int d);

}  // namespace secant
