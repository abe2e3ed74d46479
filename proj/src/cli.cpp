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

#include "secant/cli.hpp"

#include "secant/census.hpp"
#include "secant/macdonald.hpp"
#include "secant/plucker.hpp"
#include "secant/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>

namespace secant {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& text, const std::string& flag)
{
    auto parse_one = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw UsageError(flag + ": expected an integer or a range a..b, got '" + text + "'");
        return v;
    };
    if (auto dots = text.find(".."); dots != std::string::npos) {
        Range r{parse_one(text.substr(0, dots)), parse_one(text.substr(dots + 2))};
        if (r.lo > r.hi)
            throw UsageError(flag + ": empty range '" + text + "'");
        return r;
    }
    const long v = parse_one(text);
    return {v, v};
}

TraversalMethod parse_method(const std::string& m)
{
    if (m == "dp")
        return TraversalMethod::dp;
    if (m == "brute")
        return TraversalMethod::brute;
    return TraversalMethod::stratified;
}

ExactInt count_case(const std::string& which, long param, long u, TraversalMethod method)
{
    if (which == "r1") {
        const int t = static_cast<int>(param);
        switch (method) {
        case TraversalMethod::brute:
            return count_set_S(t, static_cast<int>(u));
        case TraversalMethod::stratified:
            return count_r1(t, static_cast<int>(u));
        case TraversalMethod::dp:
            break;
        }
        return count_traversals_dp(r1_grid(t, static_cast<int>(u)));
    }
    return count_rs1(static_cast<int>(param), static_cast<int>(u), method);
}

std::string param_name(const std::string& which)
{
    return which == "r1" ? "t" : "r";
}

struct Common {
    std::string format = "text";
    std::string fixtures = SECANT_DATA_DIR;
};

void require_text_or_json(const Common& c)
{
    if (c.format == "csv")
        throw UsageError("--format csv is only available for the table command");
}

int cmd_macdonald(const Common& c, SecantParams p, const std::string& version, std::ostream& out)
{
    require_text_or_json(c);
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    ExactInt value;
    if (version == "closed") {
        if (p.r != 1 || p.s != 2 * p.d - 2)
            throw UsageError("--version closed requires r = 1 and s = 2d-2");
        value = macdonald_r1(p.d, p.g, p.m);
    } else {
        value = macdonald_general(p, version == "two" ? MacdonaldForm::two : MacdonaldForm::one);
    }
    if (c.format == "json") {
        ordered_json j;
        j["command"] = "macdonald";
        j["g"] = p.g;
        j["s"] = p.s;
        j["m"] = p.m;
        j["d"] = p.d;
        j["r"] = p.r;
        j["method"] = version;
        j["rho"] = std::to_string(p.rho());
        j["mu"] = std::to_string(p.mu());
        j["value"] = to_string(value);
        out << j.dump() << '\n';
    } else {
        out << to_string(value) << '\n'
            << "rho=" << p.rho() << " mu=" << p.mu() << " method=" << version << '\n';
    }
    return exit_ok;
}

int cmd_count(const Common& c, const std::string& which, std::optional<long> t, std::optional<long> r, long u,
              const std::string& method, std::ostream& out)
{
    require_text_or_json(c);
    const auto param = which == "r1" ? t : r;
    if (!param)
        throw UsageError("--case " + which + " requires --" + param_name(which));
    const ExactInt value = count_case(which, *param, u, parse_method(method));
    if (c.format == "json") {
        ordered_json j;
        j["command"] = "count";
        j["case"] = which;
        j[param_name(which)] = *param;
        j["u"] = u;
        j["method"] = method;
        j["value"] = to_string(value);
        out << j.dump() << '\n';
    } else {
        out << to_string(value) << '\n';
    }
    return exit_ok;
}

int cmd_verify(const Common& c, const std::string& suite, int max_d, int max_u, std::ostream& out)
{
    require_text_or_json(c);
    VerifyOptions opt;
    opt.max_d = max_d;
    opt.max_u = max_u;
    opt.fixtures_dir = c.fixtures;
    long passed = 0, failed = 0;
    const bool json = c.format == "json";
    const bool ok = run_verify(suite, opt, [&](const CheckResult& r) {
        (r.pass ? passed : failed)++;
        if (json) {
            ordered_json j;
            j["suite"] = r.suite;
            j["check"] = r.check;
            ordered_json params = ordered_json::object();
            for (const auto& [k, v] : r.params)
                params[k] = v;
            j["params"] = params;
            j["pass"] = r.pass;
            j["detail"] = r.detail;
            out << j.dump() << '\n';
            return;
        }
        out << (r.pass ? "PASS " : "FAIL ") << r.suite << ' ' << r.check;
        for (const auto& [k, v] : r.params)
            out << ' ' << k << '=' << v;
        if (!r.pass)
            out << "  " << r.detail;
        out << '\n';
    });
    if (json) {
        ordered_json j;
        j["summary"] = suite;
        j["passed"] = passed;
        j["failed"] = failed;
        out << j.dump() << '\n';
    } else {
        out << (ok ? "all " : "") << passed << " passed, " << failed << " failed\n";
    }
    return ok ? exit_ok : exit_verification_failed;
}

struct TableArgs {
    std::string what;
    std::string d = "2..6";
    std::string which = "r1";
    std::optional<std::string> t;
    std::optional<std::string> r;
    std::string u = "1..5";
    std::string method = "dp";
    std::string output;
};

int cmd_table(const Common& c, const TableArgs& a, std::ostream& out)
{
    const bool json = c.format == "json";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    if (a.what == "nk") {
        header = {"d", "k", "value"};
        const Range d = parse_range(a.d, "--d");
        if (d.lo < 2 || d.hi > 7)
            throw UsageError("--d must lie in 2..7");
        for (long dd = d.lo; dd <= d.hi; ++dd) {
            const auto N = enumerate_W(static_cast<int>(2 * dd - 2), static_cast<int>(dd));
            for (long k = 0; k <= dd - 2; ++k)
                rows.push_back({std::to_string(dd), std::to_string(k), to_string(N[static_cast<std::size_t>(k)])});
        }
    } else {
        header = {"case", "param", "u", "value"};
        const auto& p = a.which == "r1" ? a.t : a.r;
        if (!p)
            throw UsageError("--case " + a.which + " requires --" + param_name(a.which));
        const Range pr = parse_range(*p, "--" + param_name(a.which));
        const Range ur = parse_range(a.u, "--u");
        for (long x = pr.lo; x <= pr.hi; ++x)
            for (long u = ur.lo; u <= ur.hi; ++u)
                rows.push_back({a.which, std::to_string(x), std::to_string(u),
                                to_string(count_case(a.which, x, u, parse_method(a.method)))});
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file)
            throw UsageError("cannot write to '" + a.output + "'");
        sink = &file;
    }
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            for (std::size_t i = 0; i < header.size(); ++i)
                j[header[i]] = row[i];
            arr.push_back(j);
        }
        *sink << arr.dump(1) << '\n';
    } else {
        for (std::size_t i = 0; i < header.size(); ++i)
            *sink << (i ? "," : "") << header[i];
        *sink << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                *sink << (i ? "," : "") << row[i];
            *sink << '\n';
        }
    }
    sink->flush();
    if (!*sink)
        throw UsageError("write to '" + (a.output.empty() ? std::string("stdout") : a.output) + "' failed");
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Secant-plane counts on general curves and their degenerations to elliptic chains",
                 "secant-census"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "text, json, or csv (table only)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--fixtures", common.fixtures, "directory with the fixture and data files");

    SecantParams p;
    std::string version = "one";
    auto* mac = app.add_subcommand("macdonald", "Macdonald's virtual secant-plane count");
    mac->add_option("--g", p.g, "genus")->required();
    mac->add_option("--s", p.s, "rank of the ambient series")->required();
    mac->add_option("--m", p.m, "degree of the ambient series")->required();
    mac->add_option("--d", p.d, "number of base points")->required();
    mac->add_option("--r", p.r, "secancy defect")->required();
    mac->add_option("--version", version, "one, two, or closed (r = 1, s = 2d-2)")
        ->check(CLI::IsMember({"one", "two", "closed"}));

    std::string which = "r1";
    std::optional<long> t, r;
    long u = 1;
    std::string method = "dp";
    auto* count = app.add_subcommand("count", "count inclusions on an elliptic chain");
    count->add_option("--case", which, "r1 or rs1")->check(CLI::IsMember({"r1", "rs1"}));
    count->add_option("--t", t, "pencil parameter of the r1 family");
    count->add_option("--r", r, "parameter of the rs1 family");
    count->add_option("--u", u, "chain multiplicity")->required();
    count->add_option("--method", method, "dp, brute, or stratified")
        ->check(CLI::IsMember({"dp", "brute", "stratified"}));

    std::string suite = "all";
    int max_d = 6, max_u = 25;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "identities, claims, fixtures, or all")
        ->check(CLI::IsMember({"identities", "claims", "fixtures", "all"}));
    verify->add_option("--max-d", max_d, "largest d in the identity checks (2..7)");
    verify->add_option("--max-u", max_u, "largest u in the identity checks");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "emit stratum or count tables");
    table->add_option("--what", ta.what, "nk or counts")->required()->check(CLI::IsMember({"nk", "counts"}));
    table->add_option("--d", ta.d, "d or a..b");
    table->add_option("--case", ta.which, "r1 or rs1")->check(CLI::IsMember({"r1", "rs1"}));
    table->add_option("--t", ta.t, "t or a..b");
    table->add_option("--r", ta.r, "r or a..b");
    table->add_option("--u", ta.u, "u or a..b");
    table->add_option("--method", ta.method, "dp, brute, or stratified")
        ->check(CLI::IsMember({"dp", "brute", "stratified"}));
    table->add_option("--output", ta.output, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*mac)
            return cmd_macdonald(common, p, version, out);
        if (*count)
            return cmd_count(common, which, t, r, u, method, out);
        if (*verify)
            return cmd_verify(common, suite, max_d, max_u, out);
        return cmd_table(common, ta, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

}  // namespace secant
