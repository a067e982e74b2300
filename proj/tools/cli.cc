// Copyright 2026 The djq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "djq/analysis.h"
#include "djq/analytic.h"
#include "djq/classical_sim.h"
#include "djq/quantum_sim.h"
#include "djq/rng.h"
#include "djq/truth_table.h"

namespace djq::cli {

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool exact_for(const RunConfig &c, int n) {
    switch (c.mode) {
        case Mode::Exact:
            return true;
        case Mode::Float:
            return false;
        case Mode::Auto:
            break;
    }
    return n <= kMaxExactAverageBits;
}

int need_n(const RunConfig &c) {
    if (!c.n) {
        throw UsageError("--n is required");
    }
    return *c.n;
}

uint64_t need_k(const RunConfig &c) {
    if (!c.k) {
        throw UsageError("--k is required");
    }
    return *c.k;
}

uint64_t need_m(const RunConfig &c) {
    if (!c.m) {
        throw UsageError("--m is required");
    }
    return *c.m;
}

// Writes to --output when given, otherwise to `out`.
void emit(const RunConfig &c, std::ostream &out, const std::string &text) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + c.output + "' for writing");
    }
    f << text;
    if (!f) {
        throw IoError("failed writing '" + c.output + "'");
    }
}

struct AnalyticValue {
    std::optional<std::string> exact;
    double value = 0.0;
};

AnalyticValue evaluate_quantity(const RunConfig &c, bool exact) {
    const std::string &q = c.quantity;
    const int n = need_n(c);
    auto prob = [](const ExactProb &p) { return AnalyticValue{p.to_string(), p.to_double()}; };
    auto eff = [](const EfficiencyValue &d) { return AnalyticValue{d.to_string(), d.to_double()}; };
    if (q == "kstar") {
        if (exact) {
            const uint64_t ks = kstar_exact(n);
            return {std::to_string(ks), static_cast<double>(ks)};
        }
        return {std::nullopt, kstar_closed_form(n)};
    }
    const uint64_t k = need_k(c);
    if (q == "p1") {
        return exact ? prob(p1(k, n)) : AnalyticValue{std::nullopt, approx::p1(k, n)};
    }
    if (q == "q1") {
        return exact ? prob(q1(k, n)) : AnalyticValue{std::nullopt, approx::q1(k, n)};
    }
    if (q == "delta1") {
        return exact ? eff(delta1(k, n)) : AnalyticValue{std::nullopt, approx::delta1(k, n)};
    }
    if (q == "pbar") {
        return exact ? prob(pbar(k, n)) : AnalyticValue{std::nullopt, approx::pbar(k, n)};
    }
    if (q == "qbar") {
        return exact ? prob(qbar(k, n)) : AnalyticValue{std::nullopt, approx::qbar(k, n)};
    }
    if (q == "delta_bar") {
        return exact ? eff(delta_bar(k, n)) : AnalyticValue{std::nullopt, approx::delta_bar(k, n)};
    }
    const uint64_t m = need_m(c);
    if (q == "pm") {
        return exact ? prob(pm(k, n, m)) : AnalyticValue{std::nullopt, approx::pm(k, n, m)};
    }
    if (q == "qm") {
        return exact ? prob(qm(k, n, m)) : AnalyticValue{std::nullopt, approx::qm(k, n, m)};
    }
    if (q == "delta_m") {
        return exact ? eff(delta_m(k, n, m)) : AnalyticValue{std::nullopt, approx::delta_m(k, n, m)};
    }
    throw UsageError("unknown quantity '" + q + "'");
}

std::string describe_args(const RunConfig &c) {
    std::string s = "n=" + std::to_string(*c.n);
    if (c.quantity != "kstar") {
        s += ", k=" + std::to_string(*c.k);
    }
    if (c.m && (c.quantity == "pm" || c.quantity == "qm" || c.quantity == "delta_m")) {
        s += ", m=" + std::to_string(*c.m);
    }
    return s;
}

int cmd_analytic(const RunConfig &c, std::ostream &out) {
    const int n = need_n(c);
    const bool exact = exact_for(c, n);
    const AnalyticValue v = evaluate_quantity(c, exact);
    const std::string mode = exact ? "exact" : "float";
    const bool uses_m = c.quantity == "pm" || c.quantity == "qm" || c.quantity == "delta_m";
    std::ostringstream os;
    switch (c.format) {
        case Format::Plain:
            os << c.quantity << "(" << describe_args(c) << ") [" << mode << "] = ";
            if (v.exact) {
                os << *v.exact << " ~ " << format_double(v.value) << "\n";
            } else {
                os << format_double(v.value) << "\n";
            }
            break;
        case Format::Json: {
            ordered_json j;
            j["quantity"] = c.quantity;
            j["n"] = n;
            j["k"] = c.quantity == "kstar" ? ordered_json(nullptr) : ordered_json(*c.k);
            j["m"] = uses_m ? ordered_json(*c.m) : ordered_json(nullptr);
            j["mode"] = mode;
            j["exact"] = v.exact ? ordered_json(*v.exact) : ordered_json(nullptr);
            j["value"] = v.value;
            os << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            os << "quantity,n,k,m,mode,exact,value\n";
            os << c.quantity << ',' << n << ',' << (c.quantity == "kstar" ? "" : std::to_string(*c.k)) << ','
               << (uses_m ? std::to_string(*c.m) : "") << ',' << mode << ',' << v.exact.value_or("") << ','
               << format_double(v.value) << "\n";
            break;
    }
    emit(c, out, os.str());
    return kOk;
}

TruthTable load_function(const RunConfig &c, Rng &placement) {
    if (!c.function_file.empty() && !c.fm.empty()) {
        throw UsageError("--fm and --function-file are mutually exclusive");
    }
    if (!c.function_file.empty()) {
        std::ifstream f(c.function_file, std::ios::binary);
        if (!f) {
            throw IoError("cannot read function file '" + c.function_file + "'");
        }
        std::stringstream buf;
        buf << f.rdbuf();
        return TruthTable::parse(buf.str());
    }
    if (c.fm.empty()) {
        throw UsageError("one of --fm n,m or --function-file is required");
    }
    const auto comma = c.fm.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--fm expects n,m");
    }
    int n = 0;
    uint64_t m = 0;
    try {
        size_t used = 0;
        n = std::stoi(c.fm.substr(0, comma), &used);
        if (used != comma) {
            throw std::invalid_argument("n");
        }
        const std::string ms = c.fm.substr(comma + 1);
        m = std::stoull(ms, &used);
        if (used != ms.size() || ms.front() == '-') {
            throw std::invalid_argument("m");
        }
    } catch (const std::logic_error &) {
        throw UsageError("--fm expects two non-negative integers n,m; got '" + c.fm + "'");
    }
    return make_fm(n, m, c.majority != 0, placement);
}

int cmd_simulate(const RunConfig &c, std::ostream &out) {
    if (c.procedure != "classical" && c.procedure != "quantum") {
        throw UsageError("--procedure must be classical or quantum");
    }
    const uint64_t k = need_k(c);
    Rng placement = substream(c.seed, "fm-placement", 0);
    const TruthTable tt = load_function(c, placement);
    Rng rng = substream(c.seed, "decide", 0);
    const DecisionOutcome result =
        c.procedure == "classical" ? classical_decide(tt, k, rng, c.transcript) : quantum_decide(tt, k, rng);
    const FunctionProfile prof = profile(tt);

    std::ostringstream os;
    if (c.format == Format::Json) {
        ordered_json j;
        j["procedure"] = c.procedure;
        j["n"] = tt.n();
        j["m"] = prof.m;
        j["class"] = std::string(to_string(prof.function_class));
        j["k"] = k;
        j["seed"] = c.seed;
        j["verdict"] = std::string(to_string(result.verdict));
        j["queries_used"] = result.queries_used;
        ordered_json tr = ordered_json::array();
        for (const Query &q : result.transcript) {
            tr.push_back({q.input, q.output ? 1 : 0});
        }
        j["transcript"] = std::move(tr);
        os << j.dump(2) << "\n";
    } else {
        os << "procedure: " << c.procedure << "\n";
        os << "function: n=" << tt.n() << " m=" << prof.m << " (" << to_string(prof.function_class) << ")\n";
        os << "verdict: " << to_string(result.verdict) << "\n";
        os << "queries_used: " << result.queries_used << "\n";
        if (!result.transcript.empty()) {
            os << "transcript:";
            for (const Query &q : result.transcript) {
                os << ' ' << q.input << ':' << (q.output ? 1 : 0);
            }
            os << "\n";
        }
    }
    emit(c, out, os.str());
    return kOk;
}

void write_figure(const std::filesystem::path &path, const std::vector<SweepRecord> &records) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_sweep_csv(f, records);
    if (!f) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

int cmd_figures(const RunConfig &c, std::ostream &out) {
    std::vector<int> which;
    if (c.which == "all") {
        which = {1, 2, 3};
    } else if (c.which == "1" || c.which == "2" || c.which == "3") {
        which = {c.which[0] - '0'};
    } else {
        throw UsageError("--which must be 1, 2, 3 or all");
    }
    const std::filesystem::path dir(c.out_dir);
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw IoError("output directory '" + c.out_dir + "' does not exist");
    }
    for (int w : which) {
        std::vector<SweepRecord> records = w == 1   ? figure1_records(c.threads)
                                           : w == 2 ? figure2_records(c.threads)
                                                    : figure3_records(c.threads);
        const std::filesystem::path path = dir / ("fig" + std::to_string(w) + ".csv");
        write_figure(path, records);
        out << "wrote " << path.string() << " (" << records.size() << " rows)\n";
    }
    return kOk;
}

int cmd_reconcile(const RunConfig &c, std::ostream &out) {
    if (c.trials == 0) {
        throw UsageError("--trials must be >= 1");
    }
    std::vector<ReconcileReport> reports;
    const int given = (c.n ? 1 : 0) + (c.m ? 1 : 0) + (c.k ? 1 : 0);
    if (given == 3) {
        reports.push_back(reconcile(*c.n, *c.m, *c.k, c.trials, c.seed, c.threads));
    } else if (given == 0) {
        const std::vector<GridPoint> grid = default_reconcile_grid();
        reports = reconcile_grid(grid, c.trials, c.seed, c.threads);
    } else {
        throw UsageError("--n, --m and --k must be given together (or not at all for the default grid)");
    }
    const std::string text = c.format == Format::Plain ? reconcile_to_text(reports) : reconcile_to_json(reports);
    emit(c, out, text);
    const bool flagged = std::any_of(reports.begin(), reports.end(), [](const auto &r) { return r.any_flagged(); });
    return flagged ? kDiscrepancy : kOk;
}

std::string bounds_text() {
    return "Bounds: N_MAX=" + std::to_string(kMaxTableBits) + " (truth tables), N_MAX_Q=" +
           std::to_string(kMaxStateBits) + " (statevectors), N_EXACT=" + std::to_string(kMaxExactAverageBits) +
           " (exact pbar/qbar/delta_bar; auto mode is exact iff n <= N_EXACT), float average-case n <= " +
           std::to_string(kMaxFloatAverageBits) + ", kstar exact n <= " + std::to_string(kMaxKstarBits) +
           ".\nExit codes: 0 ok, 1 reconciliation discrepancy, 2 usage/range error, 3 I/O error.";
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig c;
    CLI::App app{"Classical vs. iterated Deutsch-Jozsa constancy testing: exact error probabilities, simulation and "
                 "Monte Carlo reconciliation.", "djq"};
    app.footer(bounds_text());
    app.require_subcommand(1);

    const std::map<std::string, Mode> modes = {{"exact", Mode::Exact}, {"float", Mode::Float}, {"auto", Mode::Auto}};
    const std::map<std::string, Format> formats = {
        {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
    const std::map<std::string, Format> report_formats = {{"plain", Format::Plain}, {"json", Format::Json}};

    auto *analytic = app.add_subcommand("analytic", "Evaluate a closed-form probability or efficiency");
    analytic->add_option("quantity", c.quantity, "p1 q1 delta1 pm qm delta_m pbar qbar delta_bar kstar")
        ->required()
        ->check(CLI::IsMember({"p1", "q1", "delta1", "pm", "qm", "delta_m", "pbar", "qbar", "delta_bar", "kstar"}));
    analytic->add_option("--n", c.n, "Bit-width n");
    analytic->add_option("--k", c.k, "Query budget k");
    analytic->add_option("--m", c.m, "Minority count m");
    analytic->add_option("--mode", c.mode, "exact, float or auto")->transform(CLI::CheckedTransformer(modes));
    analytic->add_option("--format", c.format, "plain, json or csv")->transform(CLI::CheckedTransformer(formats));
    analytic->add_option("--output", c.output, "Write to this file instead of stdout");

    auto *simulate = app.add_subcommand("simulate", "Run one classical or quantum decision");
    simulate->add_option("--procedure", c.procedure, "classical or quantum")->required();
    simulate->add_option("--fm", c.fm, "Build an f_m-type table: n,m (minority positions drawn from the seed)");
    simulate->add_option("--function-file", c.function_file, "Truth table file (n=<int> line, then 2^n bits)");
    simulate->add_option("--majority", c.majority, "Majority bit for --fm")->check(CLI::Range(0, 1));
    simulate->add_option("--k", c.k, "Query budget / iteration count")->required();
    simulate->add_option("--seed", c.seed, "Seed (default 0)");
    simulate->add_flag("!--no-transcript", c.transcript, "Omit the classical query transcript");
    simulate->add_option("--format", c.format, "plain or json")->transform(CLI::CheckedTransformer(report_formats));
    simulate->add_option("--output", c.output, "Write to this file instead of stdout");

    auto *figures = app.add_subcommand("figures", "Write fig1.csv, fig2.csv, fig3.csv");
    figures->add_option("--which", c.which, "1, 2, 3 or all");
    figures->add_option("--out-dir", c.out_dir, "Directory for the CSV files");
    figures->add_option("--threads", c.threads, "Worker threads (0 = hardware)");

    auto *rec = app.add_subcommand("reconcile", "Compare Monte Carlo error rates with the closed forms");
    rec->add_option("--trials", c.trials, "Trials per estimate (default 100000)");
    rec->add_option("--seed", c.seed, "Seed (default 0)");
    rec->add_option("--n", c.n, "Single grid point: bit-width");
    rec->add_option("--m", c.m, "Single grid point: minority count");
    rec->add_option("--k", c.k, "Single grid point: budget");
    rec->add_option("--format", c.format, "plain or json (default json)")
        ->transform(CLI::CheckedTransformer(report_formats));
    rec->add_option("--output", c.output, "Report file (default stdout)");
    rec->add_option("--threads", c.threads, "Worker threads (0 = hardware)");
    rec->preparse_callback([&c](size_t) { c.format = Format::Json; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (analytic->parsed()) {
            c.subcommand = "analytic";
            return cmd_analytic(c, out);
        }
        if (simulate->parsed()) {
            c.subcommand = "simulate";
            return cmd_simulate(c, out);
        }
        if (figures->parsed()) {
            c.subcommand = "figures";
            return cmd_figures(c, out);
        }
        c.subcommand = "reconcile";
        return cmd_reconcile(c, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace djq::cli
