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

// Virtual secant-plane numbers of a g^s_m on a general genus-g curve,
// computed by coefficient extraction.

#include "secant/algebra.hpp"

#include <string>

namespace secant {

/// Parameters of an inclusion g^{s-d+r}_{m-d} + p_1 + ... + p_d -> g^s_m.
/// d is the incidence degree; the secant planes have dimension d-r-1.
struct SecantParams {
    long g = 0;
    long s = 1;
    long m = 2;
    long d = 1;
    long r = 1;

    /// Throws DomainError unless 1 <= r <= d, s >= 1, m > d >= 1, g >= 0
    /// and the included series has nonnegative rank s-d+r.
    void validate() const;

    /// Brill-Noether number g - (s+1)(s+g-m).
    long rho() const { return g - (s + 1) * (s + g - m); }
    /// Expected dimension d - r(s+1-d+r) of the secant family.
    long mu() const { return d - r * (s + 1 - d + r); }
    long included_rank() const { return s - d + r; }

    std::string to_string() const;
};

enum class MacdonaldForm {
    /// r variables: prod (1-t_i)^{g+s-m} (1+sum t)^g Delta^2.
    one,
    /// s-d+r+1 variables: prod (1+t_i)^{m-g-s} (1+sum t)^g Delta^2.
    two,
};

/// Evaluates either form of Macdonald's formula. The extraction exponent is
/// s-d+2r in every variable for both forms. The second form is normalized by
/// (-1)^{C(n,2)}/n! with n = s-d+r+1 its number of variables, which makes it
/// agree with the first form.
///
/// Throws std::logic_error if the normalized coefficient is not an integer.
ExactInt macdonald_general(const SecantParams& p, MacdonaldForm form);

/// r = 1 closed form: sum_i (-1)^i C(g+2d-2-m, i) C(g, d-i).
ExactInt macdonald_r1(long d, long g, long m);

/// r = s-1 specialization with d = 2r, s = r+1, g = u(r+2), m = (r+1)(u+1):
/// the second form over two variables, extraction exponent r+1.
ExactInt macdonald_rs1(long r, long u);

/// Parameters of the r = s-1 family for given (r, u).
SecantParams rs1_params(long r, long u);

/// Parameters of the r = 1 family d = t+1, s = 2t, g = (2t+1)u, m = 2t(u+1).
SecantParams r1_params(long t, long u);

/// Generalized Catalan number g! prod_{i=0}^{s} i!/(g-m+s+i)!; requires rho = 0.
ExactInt eta(long g, long s, long m);

}  // namespace secant
