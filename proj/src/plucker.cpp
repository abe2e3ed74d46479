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

#include "secant/plucker.hpp"

#include "secant/parallel.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace secant {

namespace {

bool covers(const PluckerVertex& lo, const PluckerVertex& hi)
{
    return (hi.a == lo.a + 1 && hi.b == lo.b) || (hi.a == lo.a && hi.b == lo.b + 1);
}

}  // namespace

PluckerPoset plucker_poset(int n)
{
    if (n < 3)
        throw DomainError("plucker_poset requires n >= 3");
    PluckerPoset poset;
    poset.n = n;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            poset.vertices.push_back({a, b});
    for (std::size_t i = 0; i < poset.vertices.size(); ++i)
        for (std::size_t j = 0; j < poset.vertices.size(); ++j)
            if (covers(poset.vertices[i], poset.vertices[j]))
                poset.covers.emplace_back(i, j);
    return poset;
}

PluckerChain::PluckerChain(int n, std::vector<PluckerVertex> vertices)
    : n_(n)
    , vertices_(std::move(vertices))
{
    if (n_ < 3)
        throw DomainError("Plucker chain requires n >= 3");
    if (vertices_.empty() || vertices_.front() != PluckerVertex{1, 2} || vertices_.back() != PluckerVertex{n_ - 1, n_})
        throw DomainError("Plucker chain must run from {1,2} to {n-1,n}");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (!covers(vertices_[i], vertices_[i + 1]) || vertices_[i + 1].a >= vertices_[i + 1].b)
            throw DomainError("consecutive Plucker chain vertices are not a cover");
}

std::vector<int> PluckerChain::nu() const
{
    std::vector<int> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        const auto& x = vertices_[i];
        const auto& y = vertices_[i + 1];
        out.push_back(x.a == y.a || x.a == y.b ? x.a : x.b);
    }
    return out;
}

std::vector<PluckerChain> maximal_chains(int n)
{
    if (n < 3 || n > 10)
        throw DomainError("maximal_chains requires 3 <= n <= 10");
    std::vector<PluckerChain> out;
    std::vector<PluckerVertex> path{{1, 2}};
    std::function<void()> rec = [&] {
        const PluckerVertex v = path.back();
        if (v == PluckerVertex{n - 1, n}) {
            out.emplace_back(n, path);
            return;
        }
        for (PluckerVertex next : {PluckerVertex{v.a + 1, v.b}, PluckerVertex{v.a, v.b + 1}}) {
            if (next.a >= next.b || next.b > n)
                continue;
            path.push_back(next);
            rec();
            path.pop_back();
        }
    };
    rec();
    return out;
}

ProhibitionSequence prohibition_of_chain(const PluckerChain& c)
{
    ProhibitionSequence p;
    p.modulus = c.ambient();
    for (int v : c.nu())
        p.labels.push_back((v - 1) % p.modulus + 1);
    return p;
}

ExactInt count_over_prohibitions(std::span<const ProhibitionSequence> prohibitions, long g, TraversalMethod method)
{
    std::vector<ExactInt> parts(prohibitions.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(prohibitions.size(), thread_budget()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < prohibitions.size(); i += workers) {
                GridSpec spec;
                spec.g = g;
                spec.modulus = prohibitions[i].modulus;
                spec.prohibition = prohibitions[i];
                parts[i] = count_traversals(spec, method);
            }
        }));
    for (auto& j : jobs)
        j.get();
    ExactInt total = 0;
    for (const auto& x : parts)
        total += x;
    return total;
}

ExactInt count_rs1(int r, int u, TraversalMethod method)
{
    if (r < 2 || u < 1)
        throw DomainError("count_rs1 requires r >= 2 and u >= 1");
    std::vector<ProhibitionSequence> prohibitions;
    for (const auto& c : maximal_chains(r + 2))
        prohibitions.push_back(prohibition_of_chain(c));
    return count_over_prohibitions(prohibitions, static_cast<long>(r + 2) * u, method);
}

}  // namespace secant
