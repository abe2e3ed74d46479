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

#include "secant/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace secant {

std::size_t thread_budget()
{
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SECANT_CENSUS_THREADS")) {
        try {
            long cap = std::stol(env);
            n = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1L, cap)));
        } catch (const std::exception&) {
            // unparsable values leave the default in place
        }
    }
    return n;
}

}  // namespace secant
