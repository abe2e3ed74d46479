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

#include "secant/verify.hpp"

#include "secant/census.hpp"
#include "secant/chains.hpp"
#include "secant/iecf.hpp"
#include "secant/macdonald.hpp"
#include "secant/plucker.hpp"

#include <array>
#include <set>

namespace secant {

namespace {

using Params = std::vector<std::pair<std::string, long>>;

// N_k^{2d-2}(d) for d = 2..6, indexed [d-2][k].
const std::vector<std::vector<long>> stratum_table = {
    {4},
    {40, 24},
    {364, 784, 148},
    {3264, 16920, 11664, 920},
    {29260, 308044, 501908, 155012, 5776},
};

// Count polynomials in u for d = 2..6, coefficients of u^0, u^1, ...
const std::vector<std::vector<const char*>> count_polynomials = {
    {"0", "-2", "2"},
    {"0", "4/3", "-12", "32/3"},
    {"0", "-2", "20", "-72", "54"},
    {"0", "8/5", "-100/3", "556/3", "-1280/3", "4096/15"},
    {"0", "-2", "392/9", "-386", "13100/9", "-2500", "12500/9"},
};

class Reporter {
public:
    Reporter(std::string suite, const CheckSink& sink)
        : suite_(std::move(suite))
        , sink_(sink)
    {
    }

    void check(const std::string& name, Params params, bool pass, std::string detail = {})
    {
        all_pass_ = all_pass_ && pass;
        sink_({suite_, name, std::move(params), pass, std::move(detail)});
    }

    template <class A, class B>
    void equal(const std::string& name, Params params, const A& actual, const B& expected)
    {
        const bool pass = actual == expected;
        check(name, std::move(params), pass,
              pass ? to_string(actual) : "got " + to_string(actual) + ", expected " + to_string(expected));
    }

    bool all_pass() const { return all_pass_; }

private:
    std::string suite_;
    const CheckSink& sink_;
    bool all_pass_ = true;
};

ExactInt central_rhs(long d, long u)
{
    ExactInt total = 0;
    for (long i = 0; i <= d; ++i) {
        ExactInt term = binom(u, i) * binom((2 * d - 1) * u, d - i);
        if (i % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

ExactRat eval_poly(const std::vector<const char*>& coeffs, long u)
{
    ExactRat value = 0;
    ExactRat upow = 1;
    for (const char* c : coeffs) {
        value += parse_rational(c) * upow;
        upow *= u;
    }
    return value;
}

void identities(const VerifyOptions& opt, Reporter& rep)
{
    const std::string data = opt.fixtures_dir;
    const GammaTable gammas = GammaTable::load(data + "/gamma_tables.txt");

    for (int d = 2; d <= opt.max_d; ++d) {
        const auto N = enumerate_W(2 * d - 2, d);
        ExactInt total = 0;
        for (const auto& x : N)
            total += x;
        rep.equal("W_total", {{"d", d}}, total, power(2 * d - 2, d));
        for (int k = d - 1; k <= d; ++k)
            rep.equal("W_stratum_vanishes", {{"d", d}, {"k", k}}, N[static_cast<std::size_t>(k)], ExactInt(0));
        if (d <= 6) {
            const auto& row = stratum_table[static_cast<std::size_t>(d - 2)];
            for (std::size_t k = 0; k < row.size(); ++k)
                rep.equal("W_stratum", {{"d", d}, {"k", static_cast<long>(k)}}, N[k], ExactInt(row[k]));
            for (int j = 0; j <= d - 2; ++j)
                rep.equal("inclusion_exclusion", {{"d", d}, {"j", j}}, n_exact_closed(d, j, gammas),
                          N[static_cast<std::size_t>(j)]);
        }
        rep.equal("top_stratum_closed_form", {{"d", d}}, n_top(d), N[static_cast<std::size_t>(d - 2)]);

        for (long u = 1; u <= opt.max_u; ++u) {
            ExactInt lhs = 0;
            for (long k = 0; k <= d - 2; ++k)
                lhs += N[static_cast<std::size_t>(k)] * binom(d + u - 2 - k, d);
            const Params p{{"d", d}, {"u", u}};
            rep.equal("central_identity", p, lhs, central_rhs(d, u));
            rep.equal("macdonald_r1_closed", p, lhs, macdonald_r1(d, (2 * d - 1) * u, (2 * d - 2) * (u + 1)));
            if (d <= 6 && u <= 10)
                rep.equal("count_polynomial", p, ExactRat(lhs), eval_poly(count_polynomials[static_cast<std::size_t>(d - 2)], u));
        }
    }

    for (int t = 1; t <= std::min(3, opt.max_d - 1); ++t) {
        for (int u = 1; u <= std::min(5, opt.max_u); ++u) {
            const Params p{{"t", t}, {"u", u}};
            const ExactInt expected = macdonald_r1(t + 1, (2L * t + 1) * u, 2L * t * (u + 1));
            rep.equal("r1_set_S", p, count_set_S(t, u), expected);
            rep.equal("r1_traversals_dp", p, count_traversals_dp(r1_grid(t, u)), expected);
            rep.equal("r1_traversals_stratified", p, count_traversals_stratified(r1_grid(t, u)), expected);
            rep.equal("r1_stratified_sum", p, count_r1(t, u), expected);
            rep.equal("macdonald_one_r1", p, macdonald_general(r1_params(t, u), MacdonaldForm::one), expected);
            rep.equal("macdonald_two_r1", p, macdonald_general(r1_params(t, u), MacdonaldForm::two), expected);
        }
    }

    for (int r = 2; r <= std::min(3, opt.max_d / 2); ++r) {
        for (int u = 1; u <= std::min(6, opt.max_u); ++u) {
            const Params p{{"r", r}, {"u", u}};
            const ExactInt expected = macdonald_rs1(r, u);
            rep.equal("rs1_traversals_dp", p, count_rs1(r, u), expected);
            rep.equal("rs1_traversals_stratified", p, count_rs1(r, u, TraversalMethod::stratified), expected);
            rep.equal("macdonald_one_rs1", p, macdonald_general(rs1_params(r, u), MacdonaldForm::one), expected);
            rep.equal("macdonald_two_rs1", p, macdonald_general(rs1_params(r, u), MacdonaldForm::two), expected);
        }
    }
}

void claims(Reporter& rep)
{
    for (int s = 2; s <= 6; ++s) {
        for (int which = 0; which < 2; ++which) {
            long instances = 0, vacuous = 0;
            std::string failure;
            for (int m = s + 1; m <= 3 * s + 6; ++m)
                for (int i0 = 2; i0 <= s; ++i0)
                    for (int M = 2; M <= 4; ++M)
                        for (int sstar = 0; sstar <= s; ++sstar) {
                            const ClaimReport r = which == 0 ? verify_claim_A(s, m, i0, M, sstar)
                                                             : verify_claim_B(s, m, i0, M, sstar);
                            ++instances;
                            vacuous += r.vacuous ? 1 : 0;
                            if (!r.holds() && failure.empty())
                                failure = "m=" + std::to_string(m) + " i0=" + std::to_string(i0) +
                                          " M=" + std::to_string(M) + " sstar=" + std::to_string(sstar) +
                                          " min_shift=" + std::to_string(*r.min_shift) +
                                          " bound=" + std::to_string(r.bound);
                        }
            rep.check(which == 0 ? "claim_A" : "claim_B", {{"s", s}, {"instances", instances}, {"vacuous", vacuous}},
                      failure.empty(), failure);
        }
    }
}

void fixtures(const VerifyOptions& opt, Reporter& rep)
{
    const std::string data = opt.fixtures_dir;
    const auto ambient = load_vanishing_table(data + "/chain_ambient.txt");
    const auto included = load_vanishing_table(data + "/chain_included.txt");
    std::string nodes;
    for (std::size_t j : eh_violations(ambient, 10))
        nodes += " Z" + std::to_string(j + 1) + "-Z" + std::to_string(j + 2);
    rep.check("ambient_compatible", {{"d", 10}, {"components", static_cast<long>(ambient.size())}},
              ambient.size() == 13 && nodes.empty(), nodes.empty() ? "" : "incompatible at" + nodes);
    rep.check("included_compatible", {{"d", 7}, {"components", static_cast<long>(included.size())}},
              included.size() == 13 && eh_compatible(included, 7));
    long perturbations = 0;
    long caught = 0;
    for (std::size_t c = 1; c < ambient.size(); ++c)
        for (std::size_t i = 0; i < ambient[c].incoming.size(); ++i) {
            auto copy = ambient;
            --copy[c].incoming[i];
            ++perturbations;
            caught += eh_compatible(copy, 10) ? 0 : 1;
        }
    rep.check("ambient_perturbation_detected", {{"perturbations", perturbations}, {"detected", caught}},
              perturbations > 0 && caught == perturbations);

    const GammaTable gammas = GammaTable::load(data + "/gamma_tables.txt");
    bool gammas_ok = !gammas.entries().empty();
    for (const auto& [key, value] : gammas.entries())
        gammas_ok = gammas_ok && value == binom(std::get<2>(key), std::get<1>(key));
    rep.check("gamma_table_binomial", {{"entries", static_cast<long>(gammas.entries().size())}}, gammas_ok);

    const auto chains5 = maximal_chains(5);
    rep.equal("plucker_chains", {{"n", 5}}, ExactInt(static_cast<unsigned long>(chains5.size())), ExactInt(5));
    const std::vector<int> worked{1, 3, 2, 4, 3, 5};
    bool found = false;
    for (const auto& c : chains5)
        found = found || prohibition_of_chain(c).labels == worked;
    rep.check("worked_chain_prohibition", {{"n", 5}}, found);

    GridSpec grid;
    grid.g = 10;
    grid.modulus = 5;
    grid.prohibition = {worked, 5};
    const auto paths = list_traversals(grid);
    std::set<std::vector<int>> words;
    for (const auto& cols : paths) {
        std::vector<int> w;
        for (long c : cols)
            w.push_back(1 + static_cast<int>((c - 1) % 5));
        words.insert(w);
    }
    const std::set<std::vector<int>> leftover{
        {2, 4, 5, 1, 2, 3}, {2, 4, 5, 1, 2, 4}, {3, 4, 5, 1, 2, 3}, {3, 4, 5, 1, 2, 4}};
    rep.check("worked_chain_leftover", {{"u", 2}, {"paths", static_cast<long>(paths.size())}},
              paths.size() == 4 && words == leftover);

    for (int n = 3; n <= 8; ++n) {
        const ExactInt catalan = binom(2L * (n - 2), n - 2) / (n - 1);
        const Params p{{"n", n}};
        rep.equal("tableaux_catalan", p, ExactInt(static_cast<unsigned long>(enumerate_tableaux(2, n - 2).size())), catalan);
        rep.equal("chains_catalan", p, ExactInt(static_cast<unsigned long>(maximal_chains(n).size())), catalan);
    }
    for (int rows = 1; rows <= 16; ++rows)
        for (int cols = 1; rows * cols <= 16; ++cols) {
            const long s = cols - 1;
            const long g = static_cast<long>(rows) * cols;
            const long m = s + g - rows;
            rep.equal("eta_tableaux", {{"g", g}, {"s", s}, {"m", m}}, eta(g, s, m),
                      ExactInt(static_cast<unsigned long>(enumerate_tableaux(rows, cols).size())));
        }
}

}  // namespace

bool run_verify(const std::string& suite, const VerifyOptions& options, const CheckSink& sink)
{
    if (options.max_d < 2 || options.max_d > 7)
        throw DomainError("--max-d must lie in [2, 7]");
    if (options.max_u < 1)
        throw DomainError("--max-u must be at least 1");
    static const std::array<const char*, 4> names{"identities", "claims", "fixtures", "all"};
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw DomainError("unknown suite '" + suite + "'");
    bool ok = true;
    if (suite == "identities" || suite == "all") {
        Reporter rep("identities", sink);
        identities(options, rep);
        ok = ok && rep.all_pass();
    }
    if (suite == "claims" || suite == "all") {
        Reporter rep("claims", sink);
        claims(rep);
        ok = ok && rep.all_pass();
    }
    if (suite == "fixtures" || suite == "all") {
        Reporter rep("fixtures", sink);
        fixtures(options, rep);
        ok = ok && rep.all_pass();
    }
    return ok;
}

}  // namespace secant
