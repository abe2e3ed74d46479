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

#include "secant/chains.hpp"

#include "secant/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace secant {

WordType::WordType(std::vector<int> letters, int s)
    : letters_(std::move(letters))
    , s_(s)
{
    if (s_ < 0)
        throw DomainError("word type: rank must be nonnegative");
    for (int x : letters_)
        if (x < 1 || x > s_ + 1)
            throw DomainError("word type: letter " + std::to_string(x) + " outside [1," + std::to_string(s_ + 1) + "]");
}

WordType canonical_word(int s, int u)
{
    if (s < 0 || u < 0)
        throw DomainError("canonical_word: negative argument");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>((s + 1) * u));
    for (int rep = 0; rep < u; ++rep)
        for (int j = 1; j <= s + 1; ++j)
            letters.push_back(j);
    return WordType(std::move(letters), s);
}

RectTableau::RectTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows))
{
    const std::size_t cols = rows_.empty() ? 0 : rows_.front().size();
    std::vector<bool> seen(rows_.size() * cols + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != cols || cols == 0)
            throw DomainError("tableau rows must be nonempty and of equal length");
        for (std::size_t j = 0; j < cols; ++j) {
            int v = rows_[i][j];
            if (v < 1 || static_cast<std::size_t>(v) >= seen.size() || seen[static_cast<std::size_t>(v)])
                throw DomainError("tableau entries must be a permutation of 1..n");
            seen[static_cast<std::size_t>(v)] = true;
            if (j > 0 && rows_[i][j - 1] >= v)
                throw DomainError("tableau rows must increase");
            if (i > 0 && rows_[i - 1][j] >= v)
                throw DomainError("tableau columns must increase");
        }
    }
}

RectTableau word_to_tableau(const WordType& w)
{
    const int cols = w.rank() + 1;
    const int g = w.genus();
    if (g % cols != 0)
        throw DomainError("word length is not a multiple of s+1");
    const int rows = g / cols;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
    std::vector<int> seen(static_cast<std::size_t>(cols), 0);
    for (int pos = 1; pos <= g; ++pos) {
        const int j = w.letters()[static_cast<std::size_t>(pos - 1)] - 1;
        const int i = seen[static_cast<std::size_t>(j)]++;
        if (i >= rows)
            throw DomainError("letter multiset is inconsistent with a rectangle");
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pos;
    }
    return RectTableau(std::move(t));
}

WordType tableau_to_word(const RectTableau& t)
{
    std::vector<int> letters(static_cast<std::size_t>(t.rows() * t.cols()), 0);
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            letters[static_cast<std::size_t>(t.at(i, j) - 1)] = j + 1;
    return WordType(std::move(letters), t.cols() - 1);
}

namespace {

void lattice_words(int rows, int cols, std::vector<int>& counts, std::vector<int>& word, std::vector<RectTableau>& out)
{
    if (static_cast<int>(word.size()) == rows * cols) {
        out.push_back(word_to_tableau(WordType(word, cols - 1)));
        return;
    }
    for (int j = 0; j < cols; ++j) {
        auto& c = counts[static_cast<std::size_t>(j)];
        if (c == rows || (j > 0 && counts[static_cast<std::size_t>(j - 1)] <= c))
            continue;
        ++c;
        word.push_back(j + 1);
        lattice_words(rows, cols, counts, word, out);
        word.pop_back();
        --c;
    }
}

}  // namespace

std::vector<RectTableau> enumerate_tableaux(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw DomainError("enumerate_tableaux: shape must be at least 1x1");
    if (rows * cols > 16)
        throw DomainError("enumerate_tableaux: more than 16 cells");
    std::vector<RectTableau> out;
    std::vector<int> counts(static_cast<std::size_t>(cols), 0);
    std::vector<int> word;
    lattice_words(rows, cols, counts, word, out);
    return out;
}

VanishingTable vanishing_sequences(const WordType& w, int m)
{
    const int s = w.rank();
    const int g = w.genus();
    const long rho = static_cast<long>(g) - static_cast<long>(s + 1) * (s + g - m);
    if (rho != 0)
        throw DomainError("vanishing_sequences requires rho(g,s,m) = 0");
    VanishingTable table;
    table.s = s;
    table.m = m;
    std::vector<int> a(static_cast<std::size_t>(s + 1));
    std::iota(a.begin(), a.end(), 0);
    for (int j = 0; j < g; ++j) {
        table.at_p.push_back(a);
        const int fixed = w.letters()[static_cast<std::size_t>(j)] - 1;
        for (int i = 0; i <= s; ++i)
            if (i != fixed)
                ++a[static_cast<std::size_t>(i)];
        for (int i = 0; i <= s; ++i) {
            const int v = a[static_cast<std::size_t>(i)];
            if (v > m || (i > 0 && a[static_cast<std::size_t>(i - 1)] >= v))
                throw DomainError("word is not a valid type for this (g,s,m): component " + std::to_string(j + 1));
        }
        std::vector<int> b(a.size());
        std::ranges::transform(a, b.begin(), [m](int x) { return m - x; });
        table.at_q.push_back(std::move(b));
    }
    return table;
}

std::optional<NearConsecSeq> NearConsecSeq::from(std::vector<int> values)
{
    NearConsecSeq seq;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const int diff = values[i] - values[i - 1];
        if (diff == 1)
            continue;
        if (diff != 2 || seq.distinguished_)
            return std::nullopt;
        seq.distinguished_ = static_cast<int>(i) + 1;
    }
    seq.values_ = std::move(values);
    return seq;
}

std::vector<int> nearly_consecutive(int i0, int s)
{
    if (s < 1 || i0 < 2 || i0 > s + 1)
        throw DomainError("nearly_consecutive: need 2 <= i0 <= s+1");
    std::vector<int> out(static_cast<std::size_t>(s + 1));
    for (int i = 1; i <= s + 1; ++i)
        out[static_cast<std::size_t>(i - 1)] = i < i0 ? i - 1 : i;
    return out;
}

int shift(std::span<const int> v, std::span<const int> w)
{
    if (v.size() != w.size())
        throw DomainError("shift: index lists differ in length");
    auto check = [](std::span<const int> x) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < 0 || (i > 0 && x[i - 1] >= x[i]))
                throw DomainError("shift: index lists must be strictly increasing and nonnegative");
    };
    check(v);
    check(w);
    int total = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        total += w[i] - v[i];
    return total;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    if (k > n)
        return out;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void check_claim_params(int s, int m, int i0, int M, int sstar)
{
    if (M < 2)
        throw DomainError("claim check: M must be at least 2");
    if (s < 2 || s > 8)
        throw DomainError("claim check: need 2 <= s <= 8");
    if (i0 < 2 || i0 > s)
        throw DomainError("claim check: need 2 <= i0 <= s");
    if (sstar < 0 || sstar > s)
        throw DomainError("claim check: need 0 <= sstar <= s");
    if (m <= s)
        throw DomainError("claim check: need s < m");
}

ClaimReport min_forced_shift(const std::vector<int>& L, const std::vector<int>& complement,
                             const std::vector<int>& target, int M, int sstar)
{
    ClaimReport report;
    report.bound = M * sstar + 1;
    const int n = static_cast<int>(L.size());
    const auto subsets = combinations(n, sstar + 1);
    for (const auto& v : subsets) {
        for (const auto& w : subsets) {
            ++report.pairs_checked;
            bool fits = true;
            for (std::size_t i = 0; i < v.size() && fits; ++i)
                fits = L[static_cast<std::size_t>(v[i])] + complement[static_cast<std::size_t>(w[i])] <= target[i];
            if (!fits)
                continue;
            const int sh = shift(v, w);
            if (!report.min_shift || sh < *report.min_shift)
                report.min_shift = sh;
        }
    }
    report.vacuous = !report.min_shift.has_value();
    return report;
}

}  // namespace

ClaimReport verify_claim_A(int s, int m, int i0, int M, int sstar)
{
    check_claim_params(s, m, i0, M, sstar);
    const auto L = nearly_consecutive(i0, s);
    std::vector<int> comp(L.size());
    for (std::size_t i = 0; i < L.size(); ++i)
        comp[i] = (static_cast<int>(i) + 1 == i0) ? m - L[i] : m - 1 - L[i];
    std::vector<int> target(static_cast<std::size_t>(sstar + 1), m - M - 1);
    target.back() = m - M;
    return min_forced_shift(L, comp, target, M, sstar);
}

ClaimReport verify_claim_B(int s, int m, int i0, int M, int sstar)
{
    check_claim_params(s, m, i0, M, sstar);
    const auto L = nearly_consecutive(i0, s);
    std::vector<int> comp(L.size());
    std::ranges::transform(L, comp.begin(), [m](int x) { return m - x; });
    std::vector<int> target(static_cast<std::size_t>(sstar + 1), m - M);
    return min_forced_shift(L, comp, target, M, sstar);
}

std::vector<std::size_t> eh_violations(std::span<const ComponentAspect> chain, int d)
{
    for (const auto& c : chain)
        if (c.incoming.size() != c.outgoing.size())
            throw DomainError("eh_compatible: incoming and outgoing sequences differ in length");
    std::vector<std::size_t> bad;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        const auto& out = chain[j].outgoing;
        const auto& in = chain[j + 1].incoming;
        if (out.size() != in.size())
            throw DomainError("eh_compatible: adjacent components have different ranks");
        for (std::size_t i = 0; i < out.size(); ++i)
            if (out[i] + in[i] < d) {
                bad.push_back(j);
                break;
            }
    }
    return bad;
}

bool eh_compatible(std::span<const ComponentAspect> chain, int d)
{
    return eh_violations(chain, d).empty();
}

namespace {

constexpr const char* table_magic = "vanishing-table";

std::vector<int> parse_ints(const std::string& line, int lineno)
{
    std::istringstream ss(line);
    std::vector<int> out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError("vanishing table line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

std::vector<ComponentAspect> read_vanishing_table(std::istream& in)
{
    std::vector<ComponentAspect> table;
    std::vector<std::vector<int>> block;
    bool header_seen = false;
    int lineno = 0;
    auto flush = [&] {
        if (block.empty())
            return;
        if (block.size() != 2)
            throw DomainError("vanishing table block ending at line " + std::to_string(lineno) +
                              " must have exactly two lines");
        table.push_back({block[0], block[1]});
        block.clear();
    };
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            continue;
        }
        if (!header_seen) {
            std::istringstream ss(line);
            std::string magic, version;
            ss >> magic >> version;
            if (magic != table_magic || version != "v1")
                throw DomainError("vanishing table must start with 'vanishing-table v1'");
            header_seen = true;
            continue;
        }
        block.push_back(parse_ints(line, lineno));
    }
    flush();
    if (!header_seen)
        throw DomainError("vanishing table is empty");
    return table;
}

std::vector<ComponentAspect> load_vanishing_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open vanishing table '" + path + "'");
    return read_vanishing_table(in);
}

}  // namespace secant
