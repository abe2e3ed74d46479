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

#include "secant/truncated_poly.hpp"

#include <algorithm>

namespace secant {

namespace {

constexpr int field_bits = 8;
constexpr std::uint64_t field_mask = 0xff;

}  // namespace

TruncatedMultiPoly::TruncatedMultiPoly(std::vector<int> caps)
    : caps_(std::move(caps))
{
    if (caps_.size() > max_vars)
        throw DomainError("TruncatedMultiPoly: at most 8 variables supported");
    for (int c : caps_)
        if (c < 0 || c > max_cap)
            throw DomainError("TruncatedMultiPoly: cap out of range [0,127]");
}

TruncatedMultiPoly TruncatedMultiPoly::constant(std::vector<int> caps, const ExactRat& c)
{
    TruncatedMultiPoly p(std::move(caps));
    p.add_term(Exponents(p.num_vars(), 0), c);
    return p;
}

TruncatedMultiPoly TruncatedMultiPoly::monomial(std::vector<int> caps, const Exponents& e, const ExactRat& c)
{
    TruncatedMultiPoly p(std::move(caps));
    p.add_term(e, c);
    return p;
}

TruncatedMultiPoly TruncatedMultiPoly::binomial_series(std::vector<int> caps, std::size_t var, long n, long a)
{
    TruncatedMultiPoly p(std::move(caps));
    if (var >= p.num_vars())
        throw DomainError("binomial_series: variable index out of range");
    Exponents e(p.num_vars(), 0);
    ExactInt a_pow = 1;
    for (int k = 0; k <= p.caps_[var]; ++k) {
        e[var] = k;
        p.add_term(e, ExactRat(binom(n, k) * a_pow));
        a_pow *= a;
    }
    return p;
}

TruncatedMultiPoly TruncatedMultiPoly::linear_form_power(std::vector<int> caps, long n)
{
    if (n < 0)
        throw DomainError("linear_form_power: negative power");
    TruncatedMultiPoly p(std::move(caps));
    const std::size_t k = p.num_vars();
    Exponents e(k, 0);
    std::vector<long> parts(k + 1);
    // odometer over the box of exponents within the caps
    while (true) {
        long total = 0;
        for (int x : e)
            total += x;
        if (total <= n) {
            parts[0] = n - total;
            for (std::size_t i = 0; i < k; ++i)
                parts[i + 1] = e[i];
            p.add_term(e, ExactRat(multinomial(parts)));
        }
        std::size_t i = 0;
        while (i < k && e[i] == p.caps_[i]) {
            e[i] = 0;
            ++i;
        }
        if (i == k)
            break;
        ++e[i];
    }
    return p;
}

TruncatedMultiPoly TruncatedMultiPoly::vandermonde_squared(std::vector<int> caps)
{
    TruncatedMultiPoly result = constant(caps, 1);
    const std::size_t k = result.num_vars();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            TruncatedMultiPoly diff(caps);
            Exponents e(k, 0);
            e[i] = 1;
            diff.add_term(e, 1);
            e[i] = 0;
            e[j] = 1;
            diff.add_term(e, -1);
            result *= diff;
            result *= diff;
        }
    }
    return result;
}

TruncatedMultiPoly::Key TruncatedMultiPoly::pack(const Exponents& e) const
{
    if (e.size() != caps_.size())
        throw DomainError("exponent vector length does not match variable count");
    Key key = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0)
            throw DomainError("negative exponent");
        key |= static_cast<Key>(std::min(e[i], 255)) << (field_bits * i);
    }
    return key;
}

TruncatedMultiPoly::Exponents TruncatedMultiPoly::unpack(Key key) const
{
    Exponents e(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i)
        e[i] = static_cast<int>((key >> (field_bits * i)) & field_mask);
    return e;
}

bool TruncatedMultiPoly::within_caps(Key key) const
{
    for (std::size_t i = 0; i < caps_.size(); ++i)
        if (static_cast<int>((key >> (field_bits * i)) & field_mask) > caps_[i])
            return false;
    return true;
}

void TruncatedMultiPoly::check_compatible(const TruncatedMultiPoly& other) const
{
    if (caps_ != other.caps_)
        throw DomainError("TruncatedMultiPoly: operands have different caps");
}

ExactRat TruncatedMultiPoly::coefficient(const Exponents& e) const
{
    Key key = pack(e);
    if (!within_caps(key))
        throw DomainError("coefficient requested beyond the truncation cap");
    auto it = terms_.find(key);
    return it == terms_.end() ? ExactRat(0) : it->second;
}

std::vector<std::pair<TruncatedMultiPoly::Exponents, ExactRat>> TruncatedMultiPoly::terms() const
{
    std::vector<std::pair<Exponents, ExactRat>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_)
        out.emplace_back(unpack(key), c);
    std::ranges::sort(out, [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

void TruncatedMultiPoly::add_term(const Exponents& e, const ExactRat& c)
{
    Key key = pack(e);
    if (!within_caps(key) || c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TruncatedMultiPoly& TruncatedMultiPoly::operator+=(const TruncatedMultiPoly& other)
{
    check_compatible(other);
    for (const auto& [key, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator-=(const TruncatedMultiPoly& other)
{
    check_compatible(other);
    for (const auto& [key, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(key, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator*=(const TruncatedMultiPoly& other)
{
    *this = *this * other;
    return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator*=(const ExactRat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_)
        v *= c;
    return *this;
}

TruncatedMultiPoly operator*(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b)
{
    a.check_compatible(b);
    TruncatedMultiPoly out(a.caps_);
    out.terms_.reserve(std::max(a.terms_.size(), b.terms_.size()));
    ExactRat prod;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // fields are at most 127, so the packed sum never carries
            TruncatedMultiPoly::Key k = ka + kb;
            if (!out.within_caps(k))
                continue;
            prod = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(k, prod);
            if (!inserted)
                it->second += prod;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool operator==(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b)
{
    return a.caps_ == b.caps_ && a.terms_ == b.terms_;
}

TruncatedMultiPoly TruncatedMultiPoly::pow(unsigned n) const
{
    TruncatedMultiPoly result = constant(caps_, 1);
    TruncatedMultiPoly base = *this;
    while (n) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

ExactRat poly_coefficient(const TruncatedMultiPoly& p, const TruncatedMultiPoly::Exponents& e)
{
    return p.coefficient(e);
}

ExactRat product_coefficient(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b,
                             const TruncatedMultiPoly::Exponents& e)
{
    if (a.caps() != b.caps())
        throw DomainError("product_coefficient: operands have different caps");
    // validates e against the caps
    (void)a.coefficient(e);
    ExactRat total = 0;
    TruncatedMultiPoly::Exponents rest(e.size());
    for (const auto& [ea, ca] : a.terms()) {
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            rest[i] = e[i] - ea[i];
            if (rest[i] < 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            total += ca * b.coefficient(rest);
    }
    return total;
}

}  // namespace secant
