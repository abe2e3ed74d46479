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

#include "secant/census.hpp"

#include "secant/parallel.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>

namespace secant {

namespace {

constexpr double enumeration_guard = 1.0e7;
constexpr double word_guard = 1.0e8;

// Runs task(i) for i in [0, n) on up to thread_budget() threads.
void run_sharded(std::size_t n, const std::function<void(std::size_t)>& task)
{
    const std::size_t workers = std::min(n, thread_budget());
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                task(i);
        });
}

int label_of(long column, int modulus)
{
    return 1 + static_cast<int>((column - 1) % modulus);
}

}  // namespace

void ProhibitionSequence::validate() const
{
    if (labels.empty())
        throw DomainError("prohibition sequence must have at least one row");
    if (modulus < 1)
        throw DomainError("prohibition modulus must be positive");
    for (int x : labels)
        if (x < 0 || x > modulus)
            throw DomainError("prohibition label " + std::to_string(x) + " outside [0," +
                              std::to_string(modulus) + "]");
}

void GridSpec::validate() const
{
    prohibition.validate();
    if (g < 0)
        throw DomainError("grid column count must be nonnegative");
    if (modulus != prohibition.modulus)
        throw DomainError("grid modulus differs from the prohibition modulus");
}

bool GridSpec::prohibited(int row, long column) const
{
    const int lab = prohibition.labels.at(static_cast<std::size_t>(row));
    return lab != 0 && label_of(column, modulus) == lab;
}

ProhibitionSequence r1_prohibition(int t)
{
    if (t < 1)
        throw DomainError("r = 1 family requires t >= 1");
    ProhibitionSequence p;
    p.modulus = 2 * t + 1;
    for (int k = 1; k <= t + 1; ++k)
        p.labels.push_back((2 * k - 2) % p.modulus + 1);
    return p;
}

GridSpec r1_grid(int t, int u)
{
    if (u < 1)
        throw DomainError("r = 1 family requires u >= 1");
    GridSpec spec;
    spec.prohibition = r1_prohibition(t);
    spec.modulus = spec.prohibition.modulus;
    spec.g = static_cast<long>(spec.modulus) * u;
    return spec;
}

ExactInt count_set_S(int t, int u)
{
    if (t < 1 || u < 1)
        throw DomainError("count_set_S requires t >= 1 and u >= 1");
    const long n = static_cast<long>(2 * t + 1) * u;
    const int k = t + 1;
    if (binom(n, k) > enumeration_guard)
        throw DomainError("count_set_S: more than 10^7 subsets; use count_traversals_dp");
    const long mod = 2 * t + 1;
    std::vector<long> j(static_cast<std::size_t>(k));
    std::uint64_t count = 0;
    std::function<void(int, long)> rec = [&](int idx, long from) {
        if (idx == k) {
            for (int i = 0; i < k; ++i)
                if ((j[static_cast<std::size_t>(i)] - (2 * (i + 1) - 1)) % mod == 0)
                    return;
            ++count;
            return;
        }
        for (long c = from; c <= n - (k - 1 - idx); ++c) {
            j[static_cast<std::size_t>(idx)] = c;
            rec(idx + 1, c + 1);
        }
    };
    rec(0, 1);
    return ExactInt(static_cast<unsigned long>(count));
}

ExactInt count_traversals_dp(const GridSpec& spec)
{
    spec.validate();
    const int d = spec.prohibition.rows();
    if (d > spec.g)
        return 0;
    const auto g = static_cast<std::size_t>(spec.g);
    // f[c] = traversals of the rows so far whose last column is c + 1
    std::vector<ExactInt> f(g), next(g);
    for (std::size_t c = 0; c < g; ++c)
        f[c] = spec.prohibited(0, static_cast<long>(c + 1)) ? 0 : 1;
    for (int row = 1; row < d; ++row) {
        ExactInt prefix = 0;
        for (std::size_t c = 0; c < g; ++c) {
            next[c] = spec.prohibited(row, static_cast<long>(c + 1)) ? ExactInt(0) : prefix;
            prefix += f[c];
        }
        f.swap(next);
    }
    ExactInt total = 0;
    for (const auto& x : f)
        total += x;
    return total;
}

std::vector<std::vector<long>> list_traversals(const GridSpec& spec)
{
    spec.validate();
    const int d = spec.prohibition.rows();
    std::vector<std::vector<long>> out;
    if (d > spec.g)
        return out;
    if (binom(spec.g, d) > enumeration_guard)
        throw DomainError("list_traversals: more than 10^7 column tuples");
    std::vector<long> cols(static_cast<std::size_t>(d));
    std::function<void(int, long)> rec = [&](int row, long from) {
        if (row == d) {
            out.push_back(cols);
            return;
        }
        for (long c = from; c <= spec.g - (d - 1 - row); ++c) {
            if (spec.prohibited(row, c))
                continue;
            cols[static_cast<std::size_t>(row)] = c;
            rec(row + 1, c + 1);
        }
    };
    rec(0, 1);
    return out;
}

WordStrata stratify_words(const ProhibitionSequence& p)
{
    p.validate();
    const int d = p.rows();
    const int mod = p.modulus;
    if (std::pow(static_cast<double>(mod), d) > word_guard)
        throw DomainError("stratify_words: more than 10^8 label words");
    const long max_span = static_cast<long>(mod) * d;
    // per first label: histogram of spans
    std::vector<std::vector<std::uint64_t>> shards(static_cast<std::size_t>(mod),
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(max_span + 1)));
    run_sharded(static_cast<std::size_t>(mod), [&](std::size_t shard) {
        const int first = static_cast<int>(shard) + 1;
        if (p.labels[0] == first)
            return;
        auto& hist = shards[shard];
        std::function<void(int, int, long)> rec = [&](int row, int prev, long span) {
            if (row == d) {
                ++hist[static_cast<std::size_t>(span)];
                return;
            }
            for (int a = 1; a <= mod; ++a) {
                if (p.labels[static_cast<std::size_t>(row)] == a)
                    continue;
                const int step = ((a - prev - 1) % mod + mod) % mod + 1;
                rec(row + 1, a, span + step);
            }
        };
        rec(1, first, first);
    });
    WordStrata out;
    out.rows = d;
    out.modulus = mod;
    for (long span = 0; span <= max_span; ++span) {
        std::uint64_t total = 0;
        for (const auto& hist : shards)
            total += hist[static_cast<std::size_t>(span)];
        if (total == 0)
            continue;
        const ExactInt n(static_cast<unsigned long>(total));
        out.by_span[span] += n;
        out.by_width[static_cast<int>((span + mod - 1) / mod)] += n;
    }
    return out;
}

ExactInt count_traversals_stratified(const GridSpec& spec)
{
    spec.validate();
    const WordStrata strata = stratify_words(spec.prohibition);
    const long d = spec.prohibition.rows();
    ExactInt total = 0;
    for (const auto& [span, words] : strata.by_span) {
        if (span > spec.g)
            continue;
        total += words * binom((spec.g - span) / spec.modulus + d, d);
    }
    return total;
}

ExactInt count_traversals(const GridSpec& spec, TraversalMethod method)
{
    switch (method) {
    case TraversalMethod::dp:
        return count_traversals_dp(spec);
    case TraversalMethod::brute:
        return ExactInt(static_cast<unsigned long>(list_traversals(spec).size()));
    case TraversalMethod::stratified:
        return count_traversals_stratified(spec);
    }
    throw DomainError("unknown traversal method");
}

ExactInt path_count_gamma(long d, long e)
{
    if (d < 1 || e < 1)
        throw DomainError("path_count_gamma requires d, e >= 1");
    return binom(d + e - 1, d);
}

std::vector<ExactInt> enumerate_W(int s, int d)
{
    if (s < 1 || d < 1)
        throw DomainError("enumerate_W requires s, d >= 1");
    if (std::pow(static_cast<double>(s), d) > word_guard)
        throw DomainError("enumerate_W: more than 10^8 tuples");
    const auto width = static_cast<std::size_t>(d + 1);
    std::vector<std::vector<std::uint64_t>> shards(static_cast<std::size_t>(s), std::vector<std::uint64_t>(width));
    run_sharded(static_cast<std::size_t>(s), [&](std::size_t shard) {
        auto& hist = shards[shard];
        // prefix sum S_j ranges over [j, s+j-1]; x_j = S_j - S_{j-1}
        std::function<void(int, int, int)> rec = [&](int j, int prev, int neg) {
            if (j > d) {
                ++hist[static_cast<std::size_t>(neg)];
                return;
            }
            for (int S = j; S <= s + j - 1; ++S)
                rec(j + 1, S, neg + (S < prev ? 1 : 0));
        };
        rec(2, static_cast<int>(shard) + 1, 0);
    });
    std::vector<ExactInt> out(width);
    for (std::size_t k = 0; k < width; ++k) {
        std::uint64_t total = 0;
        for (const auto& hist : shards)
            total += hist[k];
        out[k] = ExactInt(static_cast<unsigned long>(total));
    }
    return out;
}

ExactInt count_r1(int t, int u)
{
    if (t < 1 || u < 1)
        throw DomainError("count_r1 requires t >= 1 and u >= 1");
    const long d = t + 1;
    const auto N = enumerate_W(2 * t, t + 1);
    ExactInt total = 0;
    for (long k = 0; k <= d - 2; ++k)
        total += N[static_cast<std::size_t>(k)] * binom(d + u - 2 - k, d);
    return total;
}

}  // namespace secant
