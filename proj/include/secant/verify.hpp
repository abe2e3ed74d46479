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

// Self-checking suites behind `secant-census verify`.

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace secant {

struct CheckResult {
    std::string suite;
    std::string check;
    /// Parameter names and values, in display order.
    std::vector<std::pair<std::string, long>> params;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    /// 2 <= max_d <= 7
    int max_d = 6;
    /// max_u >= 1
    int max_u = 25;
    /// Directory holding chain_ambient.txt, chain_included.txt, gamma_tables.txt.
    std::string fixtures_dir;
};

using CheckSink = std::function<void(const CheckResult&)>;

/// suite is one of identities, claims, fixtures, all. Every check is reported
/// to sink; returns true iff all passed. Throws DomainError for a bad suite
/// name or out-of-range options.
bool run_verify(const std::string& suite, const VerifyOptions& options, const CheckSink& sink);

}  // namespace secant
