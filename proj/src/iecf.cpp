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

#include "secant/iecf.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace secant {

namespace {

ExactInt path_count(long a, long e)
{
    if (e <= 0)
        return 0;
    return binom(a + e - 1, a);
}

}  // namespace

ExactInt c_d(int d, const Partition& lam)
{
    const long ell = lam.length();
    const long w = lam.weight();
    if (w + ell > d)
        return 0;
    std::vector<long> mult;
    for (const auto& [value, count] : lam.multiplicities())
        mult.push_back(count);
    return multinomial(mult) * binom(d - w, ell);
}

ExactInt m_d(int d, const Partition& lam)
{
    const long exponent = static_cast<long>(d) - lam.length() - lam.weight();
    if (exponent < 0)
        return 0;
    ExactInt value = power(2L * d - 2, exponent);
    for (int x : lam.parts())
        value *= path_count(x + 1, 2L * d - 2 - 2L * x);
    return value;
}

ExactInt n_plus(int d, int j)
{
    if (d < 2 || j < 0 || j > d - 2)
        throw DomainError("n_plus requires d >= 2 and 0 <= j <= d-2");
    ExactInt total = 0;
    for (const auto& lam : partitions_of(j))
        total += c_d(d, lam) * m_d(d, lam);
    return total;
}

GammaTable GammaTable::read(std::istream& in)
{
    GammaTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        int d = 0, j = 0, k = 0;
        std::string value, extra;
        if (!(ss >> d)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw DomainError("gamma table line " + std::to_string(lineno) + ": malformed");
            continue;
        }
        if (!(ss >> j >> k >> value) || (ss >> extra))
            throw DomainError("gamma table line " + std::to_string(lineno) + ": expected 'd j k gamma'");
        ExactInt v;
        if (v.set_str(value, 10) != 0)
            throw DomainError("gamma table line " + std::to_string(lineno) + ": bad value '" + value + "'");
        table.set(d, j, k, v);
    }
    return table;
}

GammaTable GammaTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open gamma table '" + path + "'");
    return read(in);
}

void GammaTable::set(int d, int j, int k, const ExactInt& value)
{
    if (j < 0 || j > k || k > d - 2)
        throw DomainError("gamma index out of range: d=" + std::to_string(d) + " j=" + std::to_string(j) +
                          " k=" + std::to_string(k));
    entries_[{d, j, k}] = value;
}

ExactInt GammaTable::at(int d, int j, int k) const
{
    if (j == k)
        return 1;
    auto it = entries_.find({d, j, k});
    if (it == entries_.end())
        throw DomainError("gamma table has no entry for d=" + std::to_string(d) + " j=" + std::to_string(j) +
                          " k=" + std::to_string(k));
    return it->second;
}

ExactInt n_exact_closed(int d, int j, const GammaTable& gammas)
{
    if (d < 2 || j < 0 || j > d - 2)
        throw DomainError("n_exact_closed requires d >= 2 and 0 <= j <= d-2");
    ExactInt total = 0;
    for (int k = j; k <= d - 2; ++k) {
        ExactInt term = gammas.at(d, j, k) * n_plus(d, k);
        if ((k - j) % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

ExactInt n_top(int d)
{
    if (d < 2)
        throw DomainError("n_top requires d >= 2");
    ExactInt total = 0;
    for (long j = 1; j <= d - 1; ++j)
        total += binom(2L * d - j - 1, j) * binom(d + j - 1, d - j);
    return total;
}

}  // namespace secant
