#include "qsearch/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsearch/blockenc.hpp"
#include "qsearch/checks.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/kraus.hpp"
#include "qsearch/metric.hpp"
#include "qsearch/problem.hpp"
#include "qsearch/rng.hpp"
#include "qsearch/version.hpp"

namespace qsearch::cli {

namespace {

// 12 significant digits everywhere: below every test tolerance, stable bytes
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

class JsonBuilder {
public:
    JsonBuilder& str_field(const std::string& k, const std::string& v) {
        key(k);
        buf_ += '"';
        buf_ += json_escape(v);
        buf_ += '"';
        return *this;
    }
    JsonBuilder& num_field(const std::string& k, double v) {
        key(k);
        buf_ += num(v);
        return *this;
    }
    JsonBuilder& int_field(const std::string& k, std::uint64_t v) {
        key(k);
        buf_ += std::to_string(v);
        return *this;
    }
    JsonBuilder& bool_field(const std::string& k, bool v) {
        key(k);
        buf_ += v ? "true" : "false";
        return *this;
    }
    JsonBuilder& raw_field(const std::string& k, const std::string& raw) {
        key(k);
        buf_ += raw;
        return *this;
    }
    JsonBuilder& indices_field(const std::string& k, const std::vector<std::uint64_t>& v) {
        key(k);
        buf_ += '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) buf_ += ", ";
            buf_ += std::to_string(v[i]);
        }
        buf_ += ']';
        return *this;
    }
    std::string str() const { return buf_ + "}"; }

private:
    void key(const std::string& k) {
        if (!first_) buf_ += ", ";
        first_ = false;
        buf_ += '"';
        buf_ += k;
        buf_ += "\": ";
    }
    std::string buf_ = "{";
    bool first_ = true;
};

// fixed CSV schema shared by single runs and sweeps
constexpr const char* kCsvHeader =
    "n,N,M,phi,convention,theta,g00,lambda,p_norm,branch_prob,total_success,rounds,"
    "oracle_calls,shots,branch_successes,solution_successes,seed,error";

struct CsvRow {
    std::optional<std::int64_t> n, rounds, oracle_calls;
    std::optional<std::uint64_t> big_n, m, shots, branch_successes, solution_successes, seed;
    std::optional<double> phi, theta, g00, lambda, p_norm, branch_prob, total_success;
    std::string convention;
    std::string error;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_line(const CsvRow& r) {
    const auto opt_i = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    const auto opt_d = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
    std::string line;
    line += opt_i(r.n) + ',' + opt_i(r.big_n) + ',' + opt_i(r.m) + ',';
    line += opt_d(r.phi) + ',' + csv_quote(r.convention) + ',';
    line += opt_d(r.theta) + ',' + opt_d(r.g00) + ',' + opt_d(r.lambda) + ',';
    line += opt_d(r.p_norm) + ',' + opt_d(r.branch_prob) + ',' + opt_d(r.total_success) + ',';
    line += opt_i(r.rounds) + ',' + opt_i(r.oracle_calls) + ',';
    line += opt_i(r.shots) + ',' + opt_i(r.branch_successes) + ',' +
            opt_i(r.solution_successes) + ',';
    line += opt_i(r.seed) + ',' + csv_quote(r.error);
    return line;
}

int emit(const std::string& payload, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
    if (out_path.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << out_path << "'\n";
        return 1;
    }
    file << payload;
    return 0;
}

struct RunOptions {
    int n = 0;
    std::string solutions;
    std::string phi = "optimal";
    std::string convention = "paper";
    std::string iters = "auto";
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    double epsilon = 1e-3;
    double target = 0.99;
    std::string format = "json";
    std::string out_path;
    std::string stamp;
};

double resolve_phi(const SearchProblem& p, const std::string& spec) {
    if (spec == "optimal") return optimal_phi(p);
    try {
        std::size_t used = 0;
        const double v = std::stod(spec, &used);
        if (used != spec.size()) throw std::invalid_argument(spec);
        return v;
    } catch (const std::exception&) {
        throw InvalidArgument("--phi expects 'optimal' or radians, got '" + spec + "'");
    }
}

KrausConvention resolve_convention(const std::string& spec) {
    if (spec == "paper") return KrausConvention::BareDiagonal;
    if (spec == "full") return KrausConvention::FullDiffusion;
    throw InvalidArgument("--convention expects 'paper' or 'full', got '" + spec + "'");
}

void check_format(const std::string& format) {
    if (format != "json" && format != "csv") {
        throw InvalidArgument("--format expects 'json' or 'csv', got '" + format + "'");
    }
}

void warn_phi(const MetricDiagonal& m, std::ostream& err) {
    if (m.phi <= m.theta) {
        err << "warning: phi <= theta (" << num(m.phi) << " <= " << num(m.theta)
            << "); the deformed step does not beat the unitary one\n";
    }
}

int cmd_grover(const RunOptions& o, std::ostream& out, std::ostream& err) {
    check_format(o.format);
    const SearchProblem p(o.n, parse_solution_spec(o.n, o.solutions));
    int iterations = 0;
    if (o.iters == "auto") {
        iterations = optimal_iterations(p);
    } else {
        try {
            iterations = std::stoi(o.iters);
        } catch (const std::exception&) {
            throw InvalidArgument("--iters expects 'auto' or an integer");
        }
        if (iterations < 0) throw InvalidArgument("--iters must be >= 0");
    }
    const GroverAngles angles = grover_angles(p);
    const double prob = success_probability(p, grover_iterate(p, iterations));
    const double angle = angles.half_theta + iterations * angles.theta;
    const double closed = std::sin(angle) * std::sin(angle);

    if (o.format == "csv") {
        CsvRow row;
        row.n = o.n;
        row.big_n = p.search_space();
        row.m = p.solution_count();
        row.theta = angles.theta;
        row.rounds = iterations;
        row.oracle_calls = iterations;
        row.total_success = prob;
        row.seed = o.seed;
        return emit(std::string(kCsvHeader) + "\n" + csv_line(row) + "\n", o.out_path, out, err);
    }

    JsonBuilder config;
    config.int_field("n", static_cast<std::uint64_t>(o.n))
        .str_field("solutions", o.solutions)
        .str_field("iters", o.iters)
        .int_field("seed", o.seed);
    JsonBuilder results;
    results.int_field("N", p.search_space()).int_field("M", p.solution_count());
    if (p.solution_count() <= 1024) results.indices_field("solution_indices", p.solutions());
    results.num_field("theta", angles.theta)
        .int_field("iterations", static_cast<std::uint64_t>(iterations))
        .int_field("oracle_calls", static_cast<std::uint64_t>(iterations))
        .num_field("success_probability", prob)
        .num_field("closed_form_probability", closed);
    JsonBuilder root;
    root.str_field("tool", kToolName)
        .str_field("version", kToolVersion)
        .str_field("command", "grover")
        .str_field("stamp", o.stamp)
        .raw_field("config", config.str())
        .raw_field("results", results.str());
    return emit(root.str() + "\n", o.out_path, out, err);
}

int cmd_metric(const RunOptions& o, std::ostream& out, std::ostream& err) {
    check_format(o.format);
    const SearchProblem p(o.n, parse_solution_spec(o.n, o.solutions));
    const double phi = resolve_phi(p, o.phi);
    const MetricDiagonal m = metric_params(p, phi);
    warn_phi(m, err);
    const StateVector shot = single_shot(p, phi);
    const double sol_prob = success_probability(p, shot);
    const double out_norm = shot.norm();

    if (o.format == "csv") {
        CsvRow row;
        row.n = o.n;
        row.big_n = p.search_space();
        row.m = p.solution_count();
        row.phi = phi;
        row.theta = m.theta;
        row.g00 = m.g00;
        row.lambda = m.lam;
        row.total_success = sol_prob;
        row.seed = o.seed;
        return emit(std::string(kCsvHeader) + "\n" + csv_line(row) + "\n", o.out_path, out, err);
    }

    JsonBuilder config;
    config.int_field("n", static_cast<std::uint64_t>(o.n))
        .str_field("solutions", o.solutions)
        .str_field("phi", o.phi)
        .int_field("seed", o.seed);
    JsonBuilder results;
    results.int_field("N", p.search_space()).int_field("M", p.solution_count());
    if (p.solution_count() <= 1024) results.indices_field("solution_indices", p.solutions());
    results.num_field("theta", m.theta)
        .num_field("phi", phi)
        .num_field("g00", m.g00)
        .num_field("lambda", m.lam)
        .num_field("solution_probability", sol_prob)
        .num_field("output_norm", out_norm)
        .bool_field("advantage_regime", m.advantage_regime());
    JsonBuilder root;
    root.str_field("tool", kToolName)
        .str_field("version", kToolVersion)
        .str_field("command", "metric")
        .str_field("stamp", o.stamp)
        .raw_field("config", config.str())
        .raw_field("results", results.str());
    return emit(root.str() + "\n", o.out_path, out, err);
}

int cmd_kraus(const RunOptions& o, std::ostream& out, std::ostream& err) {
    check_format(o.format);
    const SearchProblem p(o.n, parse_solution_spec(o.n, o.solutions));
    const double phi = resolve_phi(p, o.phi);
    const KrausConvention convention = resolve_convention(o.convention);
    const MetricDiagonal m = metric_params(p, phi);
    warn_phi(m, err);
    const KrausPair pair = kraus_pair(m, convention);
    const double branch = branch_probability(pair, p);
    const double post_prob = success_probability(p, post_selected_state(pair, p));
    const double total = total_success(p, phi, convention);
    std::optional<double> closed;
    if (phi > m.theta) closed = closed_form_branch_probability(p, phi);
    std::optional<ShotStats> stats;
    if (o.shots > 0) stats = sample_shots(p, phi, convention, o.shots, o.seed);

    if (o.format == "csv") {
        CsvRow row;
        row.n = o.n;
        row.big_n = p.search_space();
        row.m = p.solution_count();
        row.phi = phi;
        row.convention = o.convention;
        row.theta = m.theta;
        row.g00 = m.g00;
        row.lambda = m.lam;
        row.p_norm = pair.p_norm;
        row.branch_prob = branch;
        row.total_success = total;
        row.seed = o.seed;
        if (stats) {
            row.shots = stats->shots;
            row.branch_successes = stats->branch_successes;
            row.solution_successes = stats->solution_successes;
        }
        return emit(std::string(kCsvHeader) + "\n" + csv_line(row) + "\n", o.out_path, out, err);
    }

    JsonBuilder config;
    config.int_field("n", static_cast<std::uint64_t>(o.n))
        .str_field("solutions", o.solutions)
        .str_field("phi", o.phi)
        .str_field("convention", o.convention)
        .int_field("shots", o.shots)
        .int_field("seed", o.seed);
    JsonBuilder results;
    results.int_field("N", p.search_space()).int_field("M", p.solution_count());
    if (p.solution_count() <= 1024) results.indices_field("solution_indices", p.solutions());
    results.num_field("theta", m.theta)
        .num_field("phi", phi)
        .num_field("g00", m.g00)
        .num_field("lambda", m.lam)
        .num_field("p_norm", pair.p_norm)
        .num_field("branch_probability", branch);
    if (closed) results.num_field("closed_form_branch_probability", *closed);
    results.num_field("post_selected_solution_probability", post_prob)
        .num_field("total_success", total);
    if (stats) {
        results.int_field("shots", stats->shots)
            .int_field("branch_successes", stats->branch_successes)
            .int_field("solution_successes", stats->solution_successes)
            .num_field("empirical_p_branch", stats->empirical_p_branch)
            .num_field("empirical_p_total", stats->empirical_p_total);
    }
    JsonBuilder root;
    root.str_field("tool", kToolName)
        .str_field("version", kToolVersion)
        .str_field("command", "kraus")
        .str_field("stamp", o.stamp)
        .raw_field("config", config.str())
        .raw_field("results", results.str());
    return emit(root.str() + "\n", o.out_path, out, err);
}

int cmd_block(const RunOptions& o, std::ostream& out, std::ostream& err) {
    check_format(o.format);
    const SearchProblem p(o.n, parse_solution_spec(o.n, o.solutions));
    const double phi = resolve_phi(p, o.phi);
    const MetricDiagonal m = metric_params(p, phi);
    warn_phi(m, err);
    const KrausPair pair = kraus_pair(m, KrausConvention::FullDiffusion);
    const int degree = degree_for_error(pair.p_norm, o.epsilon);
    const auto [rounds, ledger] = rounds_needed(p, phi, o.target);
    const double amplified = amplified_success(p, phi, rounds);
    const double angle = std::asin(std::min(1.0, std::sqrt(pair.p_norm)));
    const double closed = std::pow(std::sin((2.0 * rounds + 1.0) * angle), 2);

    if (o.format == "csv") {
        CsvRow row;
        row.n = o.n;
        row.big_n = p.search_space();
        row.m = p.solution_count();
        row.phi = phi;
        row.theta = m.theta;
        row.g00 = m.g00;
        row.lambda = m.lam;
        row.p_norm = pair.p_norm;
        row.branch_prob = pair.p_norm;
        row.total_success = amplified;
        row.rounds = rounds;
        row.oracle_calls = static_cast<std::int64_t>(ledger.oracle_calls);
        row.seed = o.seed;
        return emit(std::string(kCsvHeader) + "\n" + csv_line(row) + "\n", o.out_path, out, err);
    }

    JsonBuilder config;
    config.int_field("n", static_cast<std::uint64_t>(o.n))
        .str_field("solutions", o.solutions)
        .str_field("phi", o.phi)
        .num_field("epsilon", o.epsilon)
        .num_field("target", o.target)
        .int_field("seed", o.seed);
    JsonBuilder results;
    results.int_field("N", p.search_space()).int_field("M", p.solution_count());
    if (p.solution_count() <= 1024) results.indices_field("solution_indices", p.solutions());
    results.num_field("theta", m.theta)
        .num_field("phi", phi)
        .num_field("p_norm", pair.p_norm)
        .int_field("degree", static_cast<std::uint64_t>(degree))
        .int_field("rounds", static_cast<std::uint64_t>(rounds))
        .int_field("oracle_calls", ledger.oracle_calls)
        .int_field("walk_steps", ledger.walk_steps)
        .int_field("reflections", ledger.reflections)
        .num_field("amplified_success", amplified)
        .num_field("closed_form_amplified_success", closed);
    JsonBuilder root;
    root.str_field("tool", kToolName)
        .str_field("version", kToolVersion)
        .str_field("command", "block")
        .str_field("stamp", o.stamp)
        .raw_field("config", config.str())
        .raw_field("results", results.str());
    return emit(root.str() + "\n", o.out_path, out, err);
}

struct SweepOptions {
    std::string mode;
    std::string n_spec = "4:10";
    std::string m_spec = "1";
    std::string phi = "optimal";
    std::string convention = "paper";
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    double epsilon = 1e-3;
    double target = 0.99;
    std::string format = "csv";
    std::string out_path;
};

std::vector<std::int64_t> parse_grid_axis(const std::string& spec, const char* what) {
    std::vector<std::int64_t> values;
    const auto parse_one = [&](const std::string& token) {
        try {
            std::size_t used = 0;
            const std::int64_t v = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            return v;
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("cannot parse ") + what + " value '" + token + "'");
        }
    };
    const std::size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::int64_t lo = parse_one(spec.substr(0, colon));
        const std::int64_t hi = parse_one(spec.substr(colon + 1));
        for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
        return values;  // lo > hi is a legal empty axis
    }
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', pos), spec.size());
        values.push_back(parse_one(spec.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return values;
}

std::vector<double> parse_phi_axis(const std::string& spec) {
    if (spec == "optimal") return {};  // resolved per problem
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', pos), spec.size());
        const std::string token = spec.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse --phi value '" + token + "'");
        }
        pos = comma + 1;
    }
    return values;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
    if (o.mode != "grover" && o.mode != "kraus" && o.mode != "block") {
        throw InvalidArgument("--mode expects grover, kraus or block");
    }
    if (o.format != "csv") {
        throw InvalidArgument("sweeps emit CSV only");
    }
    const KrausConvention convention = resolve_convention(o.convention);
    const std::vector<std::int64_t> ns = parse_grid_axis(o.n_spec, "--n");
    const std::vector<std::int64_t> ms = parse_grid_axis(o.m_spec, "--m");
    const std::vector<double> phis = parse_phi_axis(o.phi);
    const std::size_t phi_count = phis.empty() ? 1 : phis.size();

    struct GridPoint {
        std::int64_t n;
        std::int64_t m;
        std::size_t phi_index;
    };
    std::vector<GridPoint> grid;
    for (std::int64_t n : ns) {
        for (std::int64_t m : ms) {
            for (std::size_t f = 0; f < phi_count; ++f) grid.push_back({n, m, f});
        }
    }

    std::vector<CsvRow> rows(grid.size());
    const auto count = static_cast<std::int64_t>(grid.size());
    // grid points are independent; per-point seeds hang off the grid index,
    // so scheduling cannot change any row
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t idx = 0; idx < count; ++idx) {
        const GridPoint& point = grid[static_cast<std::size_t>(idx)];
        CsvRow& row = rows[static_cast<std::size_t>(idx)];
        row.n = point.n;
        row.m = static_cast<std::uint64_t>(std::max<std::int64_t>(0, point.m));
        row.seed = o.seed;
        row.convention = o.mode == "grover" ? "" : o.convention;
        SplitMix64 rs = substream(o.seed, static_cast<std::uint64_t>(idx));
        const std::uint64_t sol_seed = rs.next();
        const std::uint64_t shot_seed = rs.next();
        try {
            if (point.n < 1 || point.m < 1) {
                throw InvalidProblem("grid point requires n >= 1 and M >= 1");
            }
            const int n = static_cast<int>(point.n);
            // random draws skip index 0 so the bare-diagonal totals stay
            // on the M/N law; use the kraus subcommand to probe 0 in S
            const SearchProblem p(
                n, random_solutions(n, static_cast<std::uint64_t>(point.m), sol_seed, true));
            row.big_n = p.search_space();
            row.theta = grover_angles(p).theta;

            if (o.mode == "grover") {
                const int k = optimal_iterations(p);
                row.rounds = k;
                row.oracle_calls = k;
                row.total_success = success_probability(p, grover_iterate(p, k));
                continue;
            }

            const double phi = phis.empty() ? optimal_phi(p) : phis[point.phi_index];
            const MetricDiagonal metric = metric_params(p, phi);
            row.phi = phi;
            row.g00 = metric.g00;
            row.lambda = metric.lam;

            if (o.mode == "kraus") {
                const KrausPair pair = kraus_pair(metric, convention);
                row.p_norm = pair.p_norm;
                row.branch_prob = branch_probability(pair, p);
                row.total_success = total_success(p, phi, convention);
                if (o.shots > 0) {
                    const ShotStats stats = sample_shots(p, phi, convention, o.shots, shot_seed);
                    row.shots = stats.shots;
                    row.branch_successes = stats.branch_successes;
                    row.solution_successes = stats.solution_successes;
                }
            } else {  // block
                const KrausPair pair = kraus_pair(metric, KrausConvention::FullDiffusion);
                row.p_norm = pair.p_norm;
                row.branch_prob = pair.p_norm;
                const auto [rounds, ledger] = rounds_needed(p, phi, o.target);
                row.rounds = rounds;
                row.oracle_calls = static_cast<std::int64_t>(ledger.oracle_calls);
                row.total_success = amplified_success(p, phi, rounds);
            }
        } catch (const Error& e) {
            row.error = e.what();
        }
    }

    std::string payload(kCsvHeader);
    payload += '\n';
    bool any_error = false;
    for (const CsvRow& row : rows) {
        payload += csv_line(row);
        payload += '\n';
        if (!row.error.empty()) any_error = true;
    }
    const int emit_rc = emit(payload, o.out_path, out, err);
    if (emit_rc != 0) return emit_rc;
    return any_error ? 2 : 0;
}

int cmd_verify(std::ostream& out) {
    const std::vector<checks::CheckResult> results = checks::run_all();
    bool all_ok = true;
    for (const checks::CheckResult& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
        all_ok = all_ok && r.passed;
    }
    out << (all_ok ? "verification passed" : "verification FAILED") << " (" << results.size()
        << " checks)\n";
    return all_ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"statevector search experiments: unitary and metric-deformed amplification"};
    app.name("qsearch");
    app.require_subcommand(1);

    RunOptions opt;
    SweepOptions sweep;

    const auto add_common = [&](CLI::App* cmd, bool with_phi) {
        cmd->add_option("--n", opt.n, "qubit count")->required();
        cmd->add_option("--solutions", opt.solutions,
                        "comma-separated indices or random:M:seed")
            ->required();
        if (with_phi) {
            cmd->add_option("--phi", opt.phi, "rotation angle in radians, or 'optimal'");
        }
        cmd->add_option("--seed", opt.seed, "base seed echoed into records");
        cmd->add_option("--format", opt.format, "json or csv");
        cmd->add_option("--out", opt.out_path, "write the record here instead of stdout");
        cmd->add_option("--stamp", opt.stamp, "caller-supplied provenance string");
    };

    CLI::App* grover_cmd = app.add_subcommand("grover", "plain iterative amplification");
    add_common(grover_cmd, false);
    grover_cmd->add_option("--iters", opt.iters, "iteration count or 'auto'");

    CLI::App* metric_cmd = app.add_subcommand("metric", "single-shot deformed diffusion");
    add_common(metric_cmd, true);

    CLI::App* kraus_cmd = app.add_subcommand("kraus", "post-selected channel realization");
    add_common(kraus_cmd, true);
    kraus_cmd->add_option("--convention", opt.convention, "paper or full");
    kraus_cmd->add_option("--shots", opt.shots, "Monte Carlo shots (0 = analytic only)");

    CLI::App* block_cmd = app.add_subcommand("block", "one-ancilla walk with amplification");
    add_common(block_cmd, true);
    block_cmd->add_option("--epsilon", opt.epsilon, "polynomial accuracy");
    block_cmd->add_option("--target", opt.target, "amplification target probability");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid of runs emitted as CSV");
    sweep_cmd->add_option("--mode", sweep.mode, "grover, kraus or block")->required();
    sweep_cmd->add_option("--n", sweep.n_spec, "qubit axis: lo:hi or comma list");
    sweep_cmd->add_option("--m", sweep.m_spec, "solution-count axis: lo:hi or comma list");
    sweep_cmd->add_option("--phi", sweep.phi, "'optimal' or comma list of radians");
    sweep_cmd->add_option("--convention", sweep.convention, "paper or full");
    sweep_cmd->add_option("--shots", sweep.shots, "Monte Carlo shots per kraus row");
    sweep_cmd->add_option("--seed", sweep.seed, "base seed; row seeds derive from it");
    sweep_cmd->add_option("--epsilon", sweep.epsilon, "polynomial accuracy (block rows)");
    sweep_cmd->add_option("--target", sweep.target, "amplification target (block rows)");
    sweep_cmd->add_option("--format", sweep.format, "csv (the only sweep format)");
    sweep_cmd->add_option("--out", sweep.out_path, "write CSV here instead of stdout");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity/oracle suite");

    std::vector<const char*> argv;
    argv.push_back("qsearch");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (grover_cmd->parsed()) return cmd_grover(opt, out, err);
        if (metric_cmd->parsed()) return cmd_metric(opt, out, err);
        if (kraus_cmd->parsed()) return cmd_kraus(opt, out, err);
        if (block_cmd->parsed()) return cmd_block(opt, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
        if (verify_cmd->parsed()) return cmd_verify(out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand selected\n";
    return 1;
}

}  // namespace qsearch::cli
