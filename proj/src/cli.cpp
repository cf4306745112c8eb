#include "specgap/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "specgap/bounds.hpp"
#include "specgap/constructions.hpp"
#include "specgap/errors.hpp"
#include "specgap/graph6.hpp"
#include "specgap/optimize.hpp"
#include "specgap/search.hpp"
#include "specgap/spectral.hpp"

namespace specgap {

namespace {

using json = nlohmann::ordered_json;

// Shortest round-trip decimal form, shared by the JSON and CSV writers so
// both stay byte-stable across runs.
std::string num_str(double x) { return json(x).dump(); }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParams("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, std::ostream& fallback, const std::string& text) {
    if (path == "-") {
        fallback << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParams("cannot open output file: " + path);
    out << text;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t start = 0;
    while (start < s.size() && (s[start] == '\n' || s[start] == '\r' || s[start] == ' ')) ++start;
    return s.substr(start);
}

Graph load_graph(const std::string& path, const std::string& input_format) {
    std::string raw = read_input(path);
    if (input_format == "graph6") return graph6_decode(strip(raw));
    if (input_format == "edgelist") return parse_edge_list(raw);
    // Auto: graph6 bytes start at '?' (63); an edge-list header starts with
    // a digit, which is below that range.
    std::string token = strip(raw);
    if (token.empty()) throw FormatError("empty input");
    if (static_cast<unsigned char>(token[0]) >= 63) return graph6_decode(token);
    return parse_edge_list(raw);
}

std::map<std::string, std::string> parse_params(const std::string& spec) {
    std::map<std::string, std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidParams("expected k=v in --params, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

long long param_int(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw InvalidParams("missing parameter " + key);
    return std::stoll(it->second);
}

double param_double(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw InvalidParams("missing parameter " + key);
    return std::stod(it->second);
}

json split_json(const HarmonicSplit& s) {
    return json{{"vol_p", s.vol_p}, {"vol_n", s.vol_n},     {"u", s.u},
                {"v", s.v},         {"dist_uv", s.dist_uv}, {"p_size", s.p_set.size()},
                {"n_size", s.n_set.size()}};
}

json bounds_json(const BoundsReport& r) {
    return json{{"lambda1", r.lambda1},
                {"landau_odlyzko", r.lower.landau_odlyzko},
                {"chung", r.lower.chung},
                {"improved", r.lower.improved},
                {"harmonic", r.harmonic},
                {"slack_landau_odlyzko", r.slack_landau_odlyzko},
                {"slack_chung", r.slack_chung},
                {"slack_improved", r.slack_improved},
                {"slack_harmonic", r.slack_harmonic},
                {"min_slack", r.min_slack},
                {"split", split_json(r.split)}};
}

constexpr const char* kAuditCsvHeader =
    "graph6,n,m,vol,diam,lambda1,lo,chung,improved,harmonic,min_slack";

std::string audit_csv_row(const Graph& g, const BoundsReport& r, const GraphMetrics& m) {
    std::ostringstream row;
    row << graph6_encode(g) << ',' << g.vertex_count() << ',' << g.edge_count() << ','
        << m.volume << ',' << *m.diameter << ',' << num_str(r.lambda1) << ','
        << num_str(r.lower.landau_odlyzko) << ',' << num_str(r.lower.chung) << ','
        << num_str(r.lower.improved) << ',' << num_str(r.harmonic) << ','
        << num_str(r.min_slack);
    return row.str();
}

struct CommonOpts {
    std::string input = "-";
    std::string output = "-";
    std::string format;  // per-command default
    std::string input_format = "auto";
    uint64_t seed = 0;
    double tol = 1e-8;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--input", o.input, "input path, - for stdin");
    cmd->add_option("--output", o.output, "output path, - for stdout");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "graph6"}));
    cmd->add_option("--input-format", o.input_format, "graph input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--tol", o.tol, "numerical tolerance");
    cmd->add_option("--workers", o.workers, "worker threads, 0 = all cores");
}

int cmd_analyze(const CommonOpts& o, std::ostream& out) {
    if (o.format == "graph6") throw InvalidParams("analyze emits json or csv");
    Graph g = load_graph(o.input, o.input_format);
    auto m = metrics(g);
    auto spec = spectral_gap(g);
    auto report = bounds_report(g);
    double oracle_gap = transition_gap_oracle(g, o.tol);

    if (o.format == "csv") {
        std::string text = std::string(kAuditCsvHeader) + "\n" + audit_csv_row(g, report, m) + "\n";
        write_output(o.output, out, text);
        return 0;
    }
    json j{{"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"volume", m.volume},
           {"max_degree", m.max_degree},
           {"diameter", *m.diameter},
           {"connected", m.connected},
           {"lambda1", spec.lambda1},
           {"lambda_max", spec.eigenvalues.back()},
           {"relaxation_time", spec.relaxation_time},
           {"residual", spec.residual},
           {"transition_gap_oracle", oracle_gap},
           {"bounds", bounds_json(report)}};
    write_output(o.output, out, j.dump(2) + "\n");
    return 0;
}

int cmd_construct(const CommonOpts& o, const std::string& family, const std::string& params_spec,
                  std::ostream& out) {
    auto params = parse_params(params_spec);
    Graph g;
    if (family == "double_kite") {
        g = double_kite(static_cast<int>(param_int(params, "r")),
                        static_cast<int>(param_int(params, "s")));
    } else if (family == "joined_regular_pair") {
        g = joined_regular_pair(static_cast<int>(param_int(params, "n")),
                                static_cast<int>(param_int(params, "D")),
                                static_cast<int>(param_int(params, "d")));
    } else if (family == "path") {
        g = path_graph(static_cast<int>(param_int(params, "n")));
    } else if (family == "cycle") {
        g = cycle_graph(static_cast<int>(param_int(params, "n")));
    } else if (family == "complete") {
        g = complete_graph(static_cast<int>(param_int(params, "n")));
    } else if (family == "hypercube") {
        g = hypercube(static_cast<int>(param_int(params, "d")));
    } else if (family == "random_connected") {
        g = random_connected(static_cast<int>(param_int(params, "n")),
                             param_double(params, "p"), o.seed);
    } else {
        throw InvalidParams("unknown family: " + family);
    }

    if (o.format == "json") {
        json j{{"family", family},
               {"n", g.vertex_count()},
               {"m", g.edge_count()},
               {"graph6", graph6_encode(g)}};
        write_output(o.output, out, j.dump(2) + "\n");
    } else if (o.format == "graph6") {
        write_output(o.output, out, graph6_encode(g) + "\n");
    } else {
        throw InvalidParams("construct emits graph6 or json");
    }
    return 0;
}

int cmd_bounds(const CommonOpts& o, std::ostream& out) {
    if (o.format == "graph6") throw InvalidParams("bounds emits json or csv");
    Graph g = load_graph(o.input, o.input_format);
    auto report = bounds_report(g);
    if (o.format == "csv") {
        auto m = metrics(g);
        std::string text = std::string(kAuditCsvHeader) + "\n" + audit_csv_row(g, report, m) + "\n";
        write_output(o.output, out, text);
        return 0;
    }
    write_output(o.output, out, bounds_json(report).dump(2) + "\n");
    return 0;
}

int cmd_search(const CommonOpts& o, int n, bool classes, std::ostream& out) {
    if (o.format == "graph6") throw InvalidParams("search emits json or csv");
    SearchRecord rec = alpha(n, o.workers, classes);
    if (o.format == "csv") {
        std::ostringstream text;
        text << "n,alpha,graph6,lambda1,e_np,np_bridges\n";
        for (const auto& m : rec.minimizers)
            text << rec.n << ',' << num_str(rec.alpha) << ',' << m.graph6 << ','
                 << num_str(m.lambda1) << ',' << m.e_np << ',' << m.np_bridges << "\n";
        write_output(o.output, out, text.str());
        return 0;
    }
    json mins = json::array();
    for (const auto& m : rec.minimizers)
        mins.push_back(json{{"graph6", m.graph6},
                            {"lambda1", m.lambda1},
                            {"e_np", m.e_np},
                            {"np_bridges", m.np_bridges}});
    json j{{"n", rec.n},
           {"alpha", rec.alpha},
           {"graphs_scanned", rec.graphs_scanned},
           {"minimizers", mins}};
    if (rec.distinct_classes) j["distinct_classes"] = *rec.distinct_classes;
    write_output(o.output, out, j.dump(2) + "\n");
    return 0;
}

int cmd_sweep_dk(const CommonOpts& o, int n, std::ostream& out) {
    if (o.format == "graph6") throw InvalidParams("sweep-dk emits json or csv");
    auto rows = sweep_double_kite(n, o.workers);
    size_t best = sweep_argmin(rows);
    if (o.format == "csv") {
        std::ostringstream text;
        text << "n,r,s,lambda1,scaled\n";
        for (const auto& r : rows)
            text << n << ',' << r.r << ',' << r.s << ',' << num_str(r.lambda1) << ','
                 << num_str(r.scaled) << "\n";
        write_output(o.output, out, text.str());
        return 0;
    }
    json jrows = json::array();
    for (const auto& r : rows)
        jrows.push_back(
            json{{"r", r.r}, {"s", r.s}, {"lambda1", r.lambda1}, {"scaled", r.scaled}});
    json j{{"n", n},
           {"rows", jrows},
           {"argmin", json{{"r", rows[best].r},
                           {"s", rows[best].s},
                           {"lambda1", rows[best].lambda1},
                           {"scaled", rows[best].scaled}}}};
    write_output(o.output, out, j.dump(2) + "\n");
    return 0;
}

int cmd_verify_prop21(const CommonOpts& o, int trials, int max_n, std::ostream& out) {
    if (o.format == "graph6") throw InvalidParams("verify-prop21 emits json or csv");
    if (trials < 1 || max_n < 2 || max_n > 24) throw InvalidParams("bad trials/max-n");
    int objective_failures = 0, two_valued_failures = 0, interior_failures = 0;
    double worst_gap = 0.0, worst_level = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(o.seed * 0x9e3779b97f4a7c15ULL + t);
        std::uniform_int_distribution<int> size_dist(2, max_n);
        std::uniform_int_distribution<int> deg_dist(1, 10);
        int n = size_dist(rng);
        std::vector<int> degrees(n);
        for (int& d : degrees) d = deg_dist(rng);

        auto exact = two_point_optimum(degrees);
        auto numeric = numeric_minimize(degrees, rng());
        double gap = std::abs(numeric.objective - exact.objective);
        worst_gap = std::max(worst_gap, gap);
        if (gap > 1e-6) ++objective_failures;

        double lo = numeric.f.front(), hi = numeric.f.back();
        double level = 0.0;
        for (double x : numeric.f) level = std::max(level, std::min(std::abs(x - lo), std::abs(x - hi)));
        worst_level = std::max(worst_level, level);
        if (level > 1e-4) ++two_valued_failures;

        double interior = interior_critical_value(degrees);
        if (n >= 3 && !(interior > exact.objective)) ++interior_failures;
    }
    json j{{"trials", trials},
           {"objective_failures", objective_failures},
           {"two_valued_failures", two_valued_failures},
           {"interior_failures", interior_failures},
           {"worst_objective_gap", worst_gap},
           {"worst_level_deviation", worst_level}};
    if (o.format == "csv") {
        std::ostringstream text;
        text << "trials,objective_failures,two_valued_failures,interior_failures,"
                "worst_objective_gap,worst_level_deviation\n"
             << trials << ',' << objective_failures << ',' << two_valued_failures << ','
             << interior_failures << ',' << num_str(worst_gap) << ',' << num_str(worst_level)
             << "\n";
        write_output(o.output, out, text.str());
        return 0;
    }
    write_output(o.output, out, j.dump(2) + "\n");
    return 0;
}

int cmd_audit(const CommonOpts& o, int exhaustive_max, int random_count, int random_min_n,
              int random_max_n, std::ostream& out) {
    if (o.format == "graph6") throw InvalidParams("audit emits json or csv");
    CorpusSpec spec;
    spec.exhaustive_max = exhaustive_max;
    spec.random_count = random_count;
    spec.random_min_n = random_min_n;
    spec.random_max_n = random_max_n;
    spec.seed = o.seed;

    if (o.format == "csv") {
        // Per-graph rows in a fixed order: exhaustive sizes ascending, mask
        // ascending, then random samples by index. Row generation is
        // single-threaded so the byte stream never depends on --workers.
        std::ostringstream text;
        text << kAuditCsvHeader << "\n";
        for (int n = 2; n <= spec.exhaustive_max; ++n)
            for_each_connected(n, [&](const Graph& g) {
                text << audit_csv_row(g, bounds_report(g), metrics(g)) << "\n";
            });
        for (int i = 0; i < spec.random_count; ++i) {
            std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + i);
            std::uniform_int_distribution<int> size_dist(spec.random_min_n, spec.random_max_n);
            std::uniform_real_distribution<double> p_dist(0.15, 0.95);
            int gn = size_dist(rng);
            double p = p_dist(rng);
            Graph g = random_connected(gn, p, rng());
            text << audit_csv_row(g, bounds_report(g), metrics(g)) << "\n";
        }
        write_output(o.output, out, text.str());
        return 0;
    }

    AuditReport rep = audit_corpus(spec, o.workers);
    json viols = json::array();
    for (const auto& v : rep.violations)
        viols.push_back(json{{"graph6", v.graph6},
                             {"bound", v.bound},
                             {"lambda1", v.lambda1},
                             {"value", v.value}});
    json j{{"graphs_audited", rep.graphs_audited},
           {"min_slack_landau_odlyzko", rep.min_slack_landau_odlyzko},
           {"min_slack_chung", rep.min_slack_chung},
           {"min_slack_improved", rep.min_slack_improved},
           {"min_slack_harmonic", rep.min_slack_harmonic},
           {"min_chain_harmonic_vs_diameter", rep.min_chain_harmonic_vs_diameter},
           {"min_chain_diameter_vs_improved", rep.min_chain_diameter_vs_improved},
           {"violations", viols}};
    write_output(o.output, out, j.dump(2) + "\n");
    return 0;
}

int cmd_gap_curve(const CommonOpts& o, const std::string& family, bool balanced,
                  const std::string& n_list, std::ostream& out) {
    if (o.format == "graph6") throw InvalidParams("gap-curve emits json or csv");
    if (family != "double_kite") throw InvalidParams("gap-curve supports family double_kite");
    if (!balanced) throw InvalidParams("gap-curve currently requires --balanced");
    std::vector<int> sizes;
    std::stringstream ss(n_list);
    std::string item;
    while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
    if (sizes.empty()) throw InvalidParams("empty --n-list");

    struct Row {
        int n, r, s;
        double lambda1, ratio;
    };
    std::vector<Row> rows;
    for (int n : sizes) {
        int r = (n + 1) / 3;
        int s = n - 2 * r;
        if (r < 2 || s < 0) throw InvalidParams("n too small for a balanced double kite");
        double l1 = lambda1_dense(double_kite(r, s));
        double ratio = l1 * std::pow(static_cast<double>(n), 3) / 54.0;
        rows.push_back({n, r, s, l1, ratio});
    }

    if (o.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back(json{{"n", r.n},
                                 {"r", r.r},
                                 {"s", r.s},
                                 {"lambda1", r.lambda1},
                                 {"ratio", r.ratio}});
        write_output(o.output, out, jrows.dump(2) + "\n");
        return 0;
    }
    std::ostringstream text;
    text << "n,r,s,lambda1,ratio\n";
    for (const auto& r : rows)
        text << r.n << ',' << r.r << ',' << r.s << ',' << num_str(r.lambda1) << ','
             << num_str(r.ratio) << "\n";
    write_output(o.output, out, text.str());
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"normalized Laplacian spectral gap toolkit"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, construct_opts, bounds_opts, search_opts, sweep_opts, verify_opts,
        audit_opts, curve_opts;

    auto* analyze = app.add_subcommand("analyze", "metrics, spectrum and bounds of one graph");
    add_common(analyze, analyze_opts, "json");

    auto* construct = app.add_subcommand("construct", "emit a generated graph");
    std::string family, params_spec;
    add_common(construct, construct_opts, "graph6");
    construct->add_option("--family", family, "graph family")->required();
    construct->add_option("--params", params_spec, "comma separated k=v parameters");

    auto* bounds_cmd = app.add_subcommand("bounds", "bounds report for one graph");
    add_common(bounds_cmd, bounds_opts, "json");

    auto* search = app.add_subcommand("search", "exhaustive alpha(n) over connected graphs");
    int search_n = 0;
    bool classes = false;
    add_common(search, search_opts, "json");
    search->add_option("--n", search_n, "vertex count (2..8)")->required();
    search->add_flag("--classes", classes, "also count isomorphism classes");

    auto* sweep = app.add_subcommand("sweep-dk", "lambda1 over all double kites DK(r,s), 2r+s=n");
    int sweep_n = 0;
    add_common(sweep, sweep_opts, "json");
    sweep->add_option("--n", sweep_n, "total vertex count")->required();

    auto* verify = app.add_subcommand("verify-prop21", "two-level optimum structure check");
    int trials = 500, max_n = 8;
    add_common(verify, verify_opts, "json");
    verify->add_option("--trials", trials, "number of random degree sequences");
    verify->add_option("--max-n", max_n, "largest sequence length");

    auto* audit = app.add_subcommand("audit", "bound audit over a graph corpus");
    int exhaustive_max = 6, random_count = 0, random_min_n = 8, random_max_n = 50;
    add_common(audit, audit_opts, "json");
    audit->add_option("--exhaustive-max", exhaustive_max, "exhaust all graphs up to this n (<=7)");
    audit->add_option("--random-count", random_count, "number of random samples");
    audit->add_option("--random-min-n", random_min_n, "smallest random size");
    audit->add_option("--random-max-n", random_max_n, "largest random size");

    auto* curve = app.add_subcommand("gap-curve", "scaled gap of balanced double kites");
    std::string curve_family = "double_kite", n_list;
    bool balanced = false;
    add_common(curve, curve_opts, "csv");
    curve->add_option("--family", curve_family, "graph family");
    curve->add_flag("--balanced", balanced, "use the balanced DK(n/3,n/3) member");
    curve->add_option("--n-list", n_list, "comma separated sizes")->required();

    std::reverse(args.begin(), args.end());  // CLI11 takes the vector reversed
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_opts, out);
        if (construct->parsed()) return cmd_construct(construct_opts, family, params_spec, out);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_opts, out);
        if (search->parsed()) return cmd_search(search_opts, search_n, classes, out);
        if (sweep->parsed()) return cmd_sweep_dk(sweep_opts, sweep_n, out);
        if (verify->parsed()) return cmd_verify_prop21(verify_opts, trials, max_n, out);
        if (audit->parsed())
            return cmd_audit(audit_opts, exhaustive_max, random_count, random_min_n, random_max_n,
                             out);
        if (curve->parsed()) return cmd_gap_curve(curve_opts, curve_family, balanced, n_list, out);
        err << "no subcommand given\n";
        return 2;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const SamplingFailure& e) {
        err << "sampling failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace specgap
