// Copyright 2026 The ckasim Authors
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
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ckasim/errors.h"
#include "ckasim/keyrate.h"
#include "ckasim/protocol.h"
#include "ckasim/serialization.h"
#include "ckasim/states.h"
#include "ckasim/witness.h"

namespace ckasim {

namespace {

template <typename T>
std::vector<T> parse_list(const std::string &text, const char *flag) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw DomainError(std::string("empty entry in ") + flag);
        }
        std::size_t used = 0;
        T v{};
        try {
            if constexpr (std::is_integral_v<T>) {
                v = static_cast<T>(std::stoll(item, &used));
            } else {
                v = static_cast<T>(std::stod(item, &used));
            }
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size()) {
            throw DomainError(std::string("cannot parse \"") + item + "\" in " + flag);
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw DomainError(std::string(flag) + " needs at least one value");
    }
    return out;
}

// Writes to --output when given, otherwise to the command's stdout.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw DomainError("cannot open output file " + path);
            }
        }
    }
    std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : fallback_; }

   private:
    std::ofstream file_;
    std::ostream &fallback_;
};

void check_format(const std::string &format) {
    if (format != "csv" && format != "json") {
        throw DomainError("--format must be csv or json");
    }
}

std::string k_key(int k) {
    return std::to_string(k);
}

// ---------------------------------------------------------------- rate

struct RateArgs {
    int n = 2;
    int k = 2;
    double p = 0.0;
    std::string method = "closed";
};

int cmd_rate(const RateArgs &a, std::ostream &out) {
    RateReport r;
    if (a.method == "closed") {
        r = rate_nbb84(a.n, a.k, a.p);
    } else if (a.method == "numeric") {
        r = rate_entropy_numeric(GhzMixtureSpec::uniform(a.n, a.k, a.p));
    } else {
        throw DomainError("--method must be closed or numeric");
    }
    Json j{{"n", a.n}, {"k", a.k}, {"p", a.p}};
    j.update(to_json(r));
    j["r_bipartite"] = rate_bipartite_concat(a.n, a.p);
    out << j.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- scan-n

struct ScanNArgs {
    std::optional<int> k;
    std::optional<int> k_offset;
    int n_min = 3;
    int n_max = 13;
    std::string format = "csv";
    std::string output;
};

int cmd_scan_n(const ScanNArgs &a, std::ostream &out) {
    check_format(a.format);
    if (a.k && a.k_offset) {
        throw DomainError("--k and --k-offset are mutually exclusive");
    }
    const int offset = a.k_offset.value_or(1);
    if (a.n_min > a.n_max || a.n_min < 2) {
        throw DomainError("empty or invalid N range");
    }
    struct Row {
        int n, k;
        double r, rb;
        bool biseparable;
    };
    std::vector<Row> rows;
    for (int n = a.n_min; n <= a.n_max; n++) {
        const int k = a.k ? *a.k : n - offset;
        if (k < 2 || k > n) {
            continue;
        }
        rows.push_back(Row{n, k, rate_nbb84(n, k, 0.0).r_infinity, rate_bipartite_concat(n, 0.0), k <= n - 1});
    }
    if (rows.empty()) {
        throw DomainError("no valid (N, k) rows in the requested range");
    }
    Sink sink(a.output, out);
    std::ostream &os = sink.stream();
    if (a.format == "csv") {
        os << csv_line({"n", "k", "r_nbb84", "r_bipartite", "biseparable"});
        for (const auto &r : rows) {
            os << csv_line({std::to_string(r.n), std::to_string(r.k), format_csv_double(r.r), format_csv_double(r.rb),
                            r.biseparable ? "true" : "false"});
        }
    } else {
        Json arr = Json::array();
        for (const auto &r : rows) {
            arr.push_back(
                Json{{"n", r.n}, {"k", r.k}, {"r_nbb84", r.r}, {"r_bipartite", r.rb}, {"biseparable", r.biseparable}});
        }
        os << arr.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- scan-noise

struct ScanNoiseArgs {
    int n = 6;
    std::string k_list = "4,5";
    double p_min = 0.0;
    double p_max = 0.3;
    int steps = 31;
    std::string format = "csv";
    std::string output;
};

int cmd_scan_noise(const ScanNoiseArgs &a, std::ostream &out) {
    check_format(a.format);
    auto ks = parse_list<int>(a.k_list, "--k-list");
    if (a.steps < 1 || !(a.p_min <= a.p_max) || a.p_min < 0.0 || a.p_max > 1.0) {
        throw DomainError("empty or invalid noise grid");
    }
    std::vector<double> ps;
    for (int i = 0; i < a.steps; i++) {
        ps.push_back(a.steps == 1 ? a.p_min : a.p_min + (a.p_max - a.p_min) * i / (a.steps - 1));
    }
    std::map<int, std::optional<double>> thresholds, crossings, crossings_grid;
    for (int k : ks) {
        rate_nbb84(a.n, k, 0.0);  // validates (N, k)
        try {
            thresholds[k] = noise_threshold(a.n, k);
        } catch (const DomainError &) {
            thresholds[k] = std::nullopt;
        }
        crossings[k] = advantage_crossing(a.n, k);
        crossings_grid[k] = std::nullopt;
        for (double p : ps) {
            if (rate_bipartite_concat(a.n, p) > rate_nbb84(a.n, k, p).r_infinity) {
                crossings_grid[k] = p;
                break;
            }
        }
    }
    std::optional<double> bip;
    try {
        bip = concat_noise_threshold(a.n);
    } catch (const DomainError &) {
    }

    Sink sink(a.output, out);
    std::ostream &os = sink.stream();
    auto opt_str = [](const std::optional<double> &v) { return v ? format_csv_double(*v) : std::string("none"); };
    if (a.format == "csv") {
        std::vector<std::string> header{"p"};
        for (int k : ks) {
            header.push_back("r_k" + std::to_string(k));
        }
        header.push_back("r_bipartite");
        os << csv_line(header);
        for (double p : ps) {
            std::vector<std::string> f{format_csv_double(p)};
            for (int k : ks) {
                f.push_back(format_csv_double(rate_nbb84(a.n, k, p).r_infinity));
            }
            f.push_back(format_csv_double(rate_bipartite_concat(a.n, p)));
            os << csv_line(f);
        }
        for (int k : ks) {
            os << "# k=" << k << " threshold=" << opt_str(thresholds[k]) << " crossing=" << opt_str(crossings[k])
               << " crossing_grid=" << opt_str(crossings_grid[k]) << "\n";
        }
        os << "# bipartite threshold=" << opt_str(bip) << "\n";
    } else {
        auto opt_json = [](const std::optional<double> &v) { return v ? Json(*v) : Json(nullptr); };
        Json rows = Json::array();
        for (double p : ps) {
            Json r = Json::object();
            for (int k : ks) {
                RateReport rep = rate_nbb84(a.n, k, p);
                r[k_key(k)] = Json{{"r", rep.r_infinity}, {"r_unclamped", rep.r_unclamped}};
            }
            rows.push_back(Json{{"p", p}, {"r", std::move(r)}, {"r_bipartite", rate_bipartite_concat(a.n, p)}});
        }
        Json th = Json::object(), cr = Json::object(), cg = Json::object();
        for (int k : ks) {
            th[k_key(k)] = opt_json(thresholds[k]);
            cr[k_key(k)] = opt_json(crossings[k]);
            cg[k_key(k)] = opt_json(crossings_grid[k]);
        }
        Json j{{"n", a.n},          {"k_list", ks},   {"rows", std::move(rows)}, {"thresholds", std::move(th)},
               {"bipartite_threshold", opt_json(bip)}, {"crossings", std::move(cr)}, {"crossings_grid", std::move(cg)}};
        os << j.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string n = "3";
    std::string k = "2";
    std::string p = "0";
    long long rounds = 100000;
    std::uint64_t seed = 1;
    double test_fraction = 0.1;
    int threads = 0;
    std::string format = "csv";
    std::string output;
    std::string records;
};

int cmd_simulate(const SimulateArgs &a, std::ostream &out, std::ostream &err) {
    check_format(a.format);
    auto ns = parse_list<int>(a.n, "--n");
    auto ks = parse_list<int>(a.k, "--k");
    auto ps = parse_list<double>(a.p, "--p");
    std::vector<SweepPoint> grid;
    for (int n : ns) {
        for (int k : ks) {
            if (k > n && (ns.size() > 1 || ks.size() > 1)) {
                continue;  // outside the family on a cartesian grid
            }
            for (double p : ps) {
                grid.push_back(SweepPoint{n, k, p});
            }
        }
    }
    if (grid.empty()) {
        throw DomainError("simulation grid is empty");
    }
    // Validate parameters up front so bad flags exit 2, not 3.
    for (const auto &pt : grid) {
        GhzMixtureSpec::uniform(pt.n, pt.k, pt.p);
    }
    ProtocolConfig probe;
    probe.rounds = a.rounds;
    probe.test_fraction = a.test_fraction;
    probe.threads = a.threads;
    probe.validate();

    if (!a.records.empty()) {
        if (grid.size() != 1) {
            throw DomainError("--records needs a single grid point");
        }
        ProtocolConfig cfg = probe;
        cfg.spec = GhzMixtureSpec::uniform(grid[0].n, grid[0].k, grid[0].p);
        cfg.seed = a.seed;
        cfg.record_rounds = true;
        EstimateReport rep = run_protocol(cfg);
        std::ofstream f(a.records, std::ios::binary);
        if (!f) {
            throw DomainError("cannot open records file " + a.records);
        }
        f << csv_line({"round", "type", "outcome"});
        for (const auto &r : rep.records) {
            f << csv_line({std::to_string(r.round_index), r.type == RoundType::Test ? "X" : "Z", r.outcome.str()});
        }
    }

    std::vector<SweepRow> rows = sweep(grid, a.rounds, a.test_fraction, a.seed, a.threads);
    bool failed = false;
    Sink sink(a.output, out);
    std::ostream &os = sink.stream();
    if (a.format == "csv") {
        os << csv_line({"n", "k", "p", "rounds", "q_x_hat", "q_ab_hat_max", "r_hat", "r_closed", "z_max"});
    }
    Json arr = Json::array();
    for (const auto &row : rows) {
        if (!row.report) {
            failed = true;
            err << "simulation failed at n=" << row.point.n << " k=" << row.point.k << " p=" << row.point.p << ": "
                << row.error << "\n";
        }
        if (a.format == "csv") {
            const auto &r = row.report;
            os << csv_line({std::to_string(row.point.n), std::to_string(row.point.k), format_csv_double(row.point.p),
                            std::to_string(a.rounds), r ? format_csv_double(r->q_x_hat) : "nan",
                            r ? format_csv_double(r->q_ab_hat_max()) : "nan", r ? format_csv_double(r->r_hat) : "nan",
                            format_csv_double(row.r_closed), r ? format_csv_double(row.z_max) : "nan"});
        } else {
            Json j{{"n", row.point.n}, {"k", row.point.k}, {"p", row.point.p}, {"r_closed", row.r_closed},
                   {"r_closed_unclamped", row.r_closed_unclamped}};
            if (row.report) {
                j["estimate"] = to_json(*row.report);
                j["z_q_x"] = row.z_q_x;
                j["z_q_ab"] = row.z_q_ab;
                j["z_max"] = row.z_max;
            } else {
                j["error"] = row.error;
            }
            arr.push_back(std::move(j));
        }
    }
    if (a.format == "json") {
        os << arr.dump(2) << "\n";
    }
    return failed ? kExitSimulationFailed : kExitOk;
}

// ---------------------------------------------------------------- witness

struct WitnessArgs {
    int n = 3;
    int k = 2;
    double p = 0.0;
    std::string partition = "all";
    int max_cuts = 300;
    double tol = 1e-7;
    int restarts = 20;
    std::uint64_t seed = 1;
    std::string oracle = "altopt";
    double grid_step = 2.0;
    std::string state_file;
    std::string output;
};

int cmd_witness(const WitnessArgs &a, std::ostream &out) {
    WitnessOptions opts;
    opts.max_cuts = a.max_cuts;
    opts.tol = a.tol;
    opts.restarts = a.restarts;
    opts.seed = a.seed;
    opts.grid_step_degrees = a.grid_step;
    if (a.oracle == "grid") {
        opts.oracle = OracleKind::Grid;
    } else if (a.oracle != "altopt") {
        throw DomainError("--oracle must be altopt or grid");
    }
    std::optional<DensityMatrix> rho;
    int n = a.n;
    if (!a.state_file.empty()) {
        std::ifstream f(a.state_file);
        if (!f) {
            throw DomainError("cannot open state file " + a.state_file);
        }
        Json j;
        try {
            f >> j;
        } catch (const Json::exception &e) {
            throw DomainError(std::string("state file is not valid JSON: ") + e.what());
        }
        rho = density_from_json(j);
        n = rho->qubit_count();
    } else {
        rho = build_ghz_mixture(GhzMixtureSpec::uniform(a.n, a.k, a.p));
    }
    MeasurementSet meas = MeasurementSet::nbb84(n);
    ProbabilityTable target = statistics_of(*rho, meas);
    std::vector<Partition> parts =
        a.partition == "all" ? Partition::all(n) : std::vector<Partition>{Partition::parse(a.partition, n)};

    bool inconclusive = false;
    Json arr = Json::array();
    for (const auto &part : parts) {
        SeparationCertificate cert = find_witness(target, part, meas, opts);
        inconclusive = inconclusive || cert.status == CertificateStatus::Inconclusive;
        arr.push_back(to_json(cert));
    }
    Sink sink(a.output, out);
    sink.stream() << (a.partition == "all" ? arr : arr[0]).dump(2) << "\n";
    return inconclusive ? kExitInconclusive : kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    int n_max = 5;
    std::string noise_levels = "0";
    int specs = 100;
    std::uint64_t seed = 1;
};

struct CheckLog {
    std::ostream &out;
    int total = 0;
    int failed = 0;
    std::string first_failure;

    void record(const std::string &name, bool pass, double value, double tol) {
        total++;
        if (!pass) {
            failed++;
            if (first_failure.empty()) {
                first_failure = name;
            }
        }
        out << (pass ? "PASS " : "FAIL ") << name << " value=" << format_csv_double(value)
            << " tol=" << format_csv_double(tol) << "\n";
    }
};

void verify_entropy_suite(const VerifyArgs &a, CheckLog &log) {
    auto ps = parse_list<double>(a.noise_levels, "--noise-levels");
    if (a.n_max < 2) {
        throw DomainError("--n-max must be at least 2");
    }
    for (int n = 2; n <= a.n_max; n++) {
        for (int k = 2; k <= n; k++) {
            for (double p : ps) {
                GhzMixtureSpec spec = GhzMixtureSpec::uniform(n, k, p);
                RateReport num = rate_entropy_numeric(spec);
                RateReport cf = rate_nbb84(spec);
                std::ostringstream tag;
                tag << "N=" << n << ",k=" << k << ",p=" << format_csv_double(p);
                if (p == 0.0) {
                    double d = std::abs(num.h_x_given_e - 1.0);
                    log.record("appendix.h_x_given_e[" + tag.str() + "]", d <= 1e-9, d, 1e-9);
                }
                double d = std::abs(num.r_infinity - cf.r_infinity);
                log.record("appendix.rate_agreement[" + tag.str() + "]", d <= 1e-8, d, 1e-8);
            }
        }
    }
}

void verify_separable_suite(const VerifyArgs &a, CheckLog &log) {
    if (a.specs < 1) {
        throw DomainError("--specs must be positive");
    }
    Rng rng(a.seed, 0);
    const std::vector<Partition> cuts = Partition::all(3);
    for (int i = 0; i < a.specs; i++) {
        const Partition &cut = cuts[static_cast<std::size_t>(i) % cuts.size()];
        SeparableSpec spec = random_separable_spec(cut, 1 + static_cast<int>(rng.below(4)), rng);
        SeparableCheckReport r = verify_no_key_separable(spec);
        double slack = r.min_leak - r.h_x_given_e_total;
        log.record("theorem1.chain[spec=" + std::to_string(i) + "," + cut.to_string() + "]", r.chain_holds, slack,
                   1e-9);
        log.record("theorem1.no_key[spec=" + std::to_string(i) + "]", r.implied_rate <= 1e-9, r.implied_rate, 1e-9);
    }
}

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err) {
    if (a.suite != "appendix" && a.suite != "theorem1" && a.suite != "all") {
        throw DomainError("--suite must be appendix, theorem1 or all");
    }
    CheckLog log{out, 0, 0, {}};
    if (a.suite == "appendix" || a.suite == "all") {
        verify_entropy_suite(a, log);
    }
    if (a.suite == "theorem1" || a.suite == "all") {
        verify_separable_suite(a, log);
    }
    out << "verify: " << log.total << " checks, " << log.failed << " failed\n";
    if (log.failed) {
        err << "first failure: " << log.first_failure << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Conference key agreement toolkit: key rates, protocol simulation and partition witnesses.",
                 "ckasim"};
    app.require_subcommand(1);

    RateArgs rate;
    auto *c_rate = app.add_subcommand("rate", "Asymptotic N-BB84 key rate");
    c_rate->add_option("--n", rate.n, "Party count N")->required();
    c_rate->add_option("--k", rate.k, "Entangled-party count k")->required();
    c_rate->add_option("--p", rate.p, "Depolarizing parameter")->capture_default_str();
    c_rate->add_option("--method", rate.method, "closed or numeric")->capture_default_str();

    ScanNArgs scan_n;
    auto *c_scan_n = app.add_subcommand("scan-n", "Noiseless rate as a function of N");
    auto *k_opt = c_scan_n->add_option("--k", scan_n.k, "Fixed k");
    auto *off_opt = c_scan_n->add_option("--k-offset", scan_n.k_offset, "k = N - offset (default 1)");
    k_opt->excludes(off_opt);
    c_scan_n->add_option("--n-min", scan_n.n_min)->capture_default_str();
    c_scan_n->add_option("--n-max", scan_n.n_max)->capture_default_str();
    c_scan_n->add_option("--format", scan_n.format, "csv or json")->capture_default_str();
    c_scan_n->add_option("--output", scan_n.output, "Output file (default stdout)");

    ScanNoiseArgs scan_noise;
    auto *c_scan_noise = app.add_subcommand("scan-noise", "Rate as a function of the depolarizing parameter");
    c_scan_noise->add_option("--n", scan_noise.n)->capture_default_str();
    c_scan_noise->add_option("--k-list", scan_noise.k_list, "Comma-separated k values")->capture_default_str();
    c_scan_noise->add_option("--p-min", scan_noise.p_min)->capture_default_str();
    c_scan_noise->add_option("--p-max", scan_noise.p_max)->capture_default_str();
    c_scan_noise->add_option("--steps", scan_noise.steps, "Number of grid points")->capture_default_str();
    c_scan_noise->add_option("--format", scan_noise.format, "csv or json")->capture_default_str();
    c_scan_noise->add_option("--output", scan_noise.output, "Output file (default stdout)");

    SimulateArgs sim;
    auto *c_sim = app.add_subcommand("simulate", "Monte Carlo run of the protocol; comma lists sweep a grid");
    c_sim->add_option("--n", sim.n)->capture_default_str();
    c_sim->add_option("--k", sim.k)->capture_default_str();
    c_sim->add_option("--p", sim.p)->capture_default_str();
    c_sim->add_option("--rounds", sim.rounds)->capture_default_str();
    c_sim->add_option("--seed", sim.seed)->capture_default_str();
    c_sim->add_option("--test-fraction", sim.test_fraction)->capture_default_str();
    c_sim->add_option("--threads", sim.threads, "Worker threads (0 = all cores)")->capture_default_str();
    c_sim->add_option("--format", sim.format, "csv or json")->capture_default_str();
    c_sim->add_option("--output", sim.output, "Output file (default stdout)");
    c_sim->add_option("--records", sim.records, "Write every round to this CSV file");

    WitnessArgs wit;
    auto *c_wit = app.add_subcommand("witness", "Search partition witnesses for the family statistics");
    c_wit->add_option("--n", wit.n)->capture_default_str();
    c_wit->add_option("--k", wit.k)->capture_default_str();
    c_wit->add_option("--p", wit.p)->capture_default_str();
    c_wit->add_option("--partition", wit.partition, "e.g. A|B1B2, or all")->capture_default_str();
    c_wit->add_option("--max-cuts", wit.max_cuts)->capture_default_str();
    c_wit->add_option("--tol", wit.tol)->capture_default_str();
    c_wit->add_option("--restarts", wit.restarts)->capture_default_str();
    c_wit->add_option("--seed", wit.seed)->capture_default_str();
    c_wit->add_option("--oracle", wit.oracle, "altopt or grid")->capture_default_str();
    c_wit->add_option("--grid-step", wit.grid_step, "Grid step in degrees")->capture_default_str();
    c_wit->add_option("--state-file", wit.state_file, "Density matrix JSON to use as the target state");
    c_wit->add_option("--output", wit.output, "Output file (default stdout)");

    VerifyArgs ver;
    auto *c_ver = app.add_subcommand("verify", "Numerical verification suites");
    c_ver->add_option("--suite", ver.suite, "appendix, theorem1 or all")->capture_default_str();
    c_ver->add_option("--n-max", ver.n_max)->capture_default_str();
    c_ver->add_option("--noise-levels", ver.noise_levels, "Comma-separated p values")->capture_default_str();
    c_ver->add_option("--specs", ver.specs, "Random separable specs")->capture_default_str();
    c_ver->add_option("--seed", ver.seed)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }

    try {
        if (c_rate->parsed()) {
            return cmd_rate(rate, out);
        }
        if (c_scan_n->parsed()) {
            return cmd_scan_n(scan_n, out);
        }
        if (c_scan_noise->parsed()) {
            return cmd_scan_noise(scan_noise, out);
        }
        if (c_sim->parsed()) {
            return cmd_simulate(sim, out, err);
        }
        if (c_wit->parsed()) {
            return cmd_witness(wit, out);
        }
        if (c_ver->parsed()) {
            return cmd_verify(ver, out, err);
        }
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const EstimationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitSimulationFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    err << "error: no subcommand\n";
    return kExitBadArguments;
}

}  // namespace ckasim
