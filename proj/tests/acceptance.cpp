// Acceptance suite: one hard check per headline claim, each printing a
// single PASS/FAIL line. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "specgap/bounds.hpp"
#include "specgap/cli.hpp"
#include "specgap/constructions.hpp"
#include "specgap/graph6.hpp"
#include "specgap/optimize.hpp"
#include "specgap/search.hpp"
#include "specgap/spectral.hpp"

using namespace specgap;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (detail.empty()) detail = what;
    }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// 1. Hypercube sharpness gap: lambda1(Q_d) = 2/d, and the improved bound
//    evaluates to exactly 4/(d * d*2^d).
Outcome criterion1() {
    Outcome o;
    for (int d = 2; d <= 6; ++d) {
        auto q = hypercube(d);
        double l1 = spectral_gap(q).lambda1;
        if (std::abs(l1 - 2.0 / d) > 1e-9)
            o.fail("lambda1(Q_" + std::to_string(d) + ") = " + fmt(l1) + " != 2/" +
                   std::to_string(d));
        auto m = metrics(q);
        long long vol = static_cast<long long>(d) << d;
        if (!m.diameter || *m.diameter != d || m.volume != vol)
            o.fail("Q_" + std::to_string(d) + " metrics off");
        double improved = lower_bounds(q).improved;
        if (improved != 4.0 / static_cast<double>(d * vol))
            o.fail("improved bound not exactly 4/(D*vol) on Q_" + std::to_string(d));
    }
    o.note("lambda1(Q_d) = 2/d for d = 2..6 and 4/(D vol) is exact in rationals");
    return o;
}

// 2. Balanced double kites approach 54/n^3 from below, never beating the
//    joined-pair upper bound.
Outcome criterion2() {
    Outcome o;
    const int sizes[] = {99, 333, 999};
    double prev_ratio = 0.0;
    double lambda_999 = 0.0;
    for (int n : sizes) {
        int r = n / 3, s = n / 3;
        double l1 = lambda1_dense(double_kite(r, s));
        double ratio = l1 * std::pow(double(n), 3) / 54.0;
        if (!(ratio > prev_ratio))
            o.fail("ratio not strictly increasing at n=" + std::to_string(n));
        if (!(ratio > 0.6 && ratio <= 1.0))
            o.fail("ratio " + fmt(ratio) + " outside (0.6, 1] at n=" + std::to_string(n));
        double upper = joined_pair_upper(n, s + 1, r - 1);
        if (!(l1 <= upper + 1e-12))
            o.fail("lambda1 " + fmt(l1) + " above joined-pair bound " + fmt(upper));
        prev_ratio = ratio;
        if (n == 999) {
            lambda_999 = l1;
            if (!(ratio > 0.85)) o.fail("ratio " + fmt(ratio) + " <= 0.85 at n=999");
        }
    }
    // Independent confirmation of the largest size with the Sturm oracle.
    double sturm = sturm_eigen_oracle(normalized_laplacian(double_kite(333, 333)), 1);
    if (std::abs(sturm - lambda_999) > 1e-10)
        o.fail("Sturm oracle disagrees at n=999: " + fmt(sturm) + " vs " + fmt(lambda_999));
    o.note("lambda1*n^3/54 climbs " + fmt(prev_ratio) + " at n=999, below the upper bound");
    return o;
}

// 3. Bound audit: every lower bound holds over the exhaustive n <= 7 corpus
//    plus 10^4 random connected graphs.
Outcome criterion3() {
    Outcome o;
    CorpusSpec spec;
    spec.exhaustive_max = 7;
    spec.random_count = 10000;
    spec.random_min_n = 8;
    spec.random_max_n = 50;
    spec.seed = 2026;
    auto rep = audit_corpus(spec);
    if (!rep.violations.empty())
        o.fail(std::to_string(rep.violations.size()) + " bound violations, first on " +
               rep.violations.front().graph6 + " (" + rep.violations.front().bound + ")");
    if (rep.min_slack_landau_odlyzko < -1e-10 || rep.min_slack_chung < -1e-10 ||
        rep.min_slack_improved < -1e-10 || rep.min_slack_harmonic < -1e-10)
        o.fail("negative slack below -1e-10");
    if (rep.min_chain_harmonic_vs_diameter < -1e-12 || rep.min_chain_diameter_vs_improved < -1e-12)
        o.fail("proof chain inequality violated");
    o.note(std::to_string(rep.graphs_audited) + " graphs audited, 0 violations, min slack " +
           fmt(std::min(rep.min_slack_improved, rep.min_slack_harmonic)));
    return o;
}

// 4. Constant gap between the Landau-Odlyzko and improved bounds on the
//    balanced double kite at n = 999.
Outcome criterion4() {
    Outcome o;
    auto g = double_kite(333, 333);
    auto b = lower_bounds(g);
    double n3 = std::pow(999.0, 3);
    double lo_scaled = b.landau_odlyzko * n3;
    double improved_scaled = b.improved * n3;
    if (!(lo_scaled >= 8.0 && lo_scaled <= 9.1))
        o.fail("landau_odlyzko*n^3 = " + fmt(lo_scaled) + " outside [8, 9.1]");
    if (!(improved_scaled >= 50.0 && improved_scaled <= 54.5))
        o.fail("improved*n^3 = " + fmt(improved_scaled) + " outside [50, 54.5]");
    o.note("landau_odlyzko*n^3 = " + fmt(lo_scaled) + ", improved*n^3 = " + fmt(improved_scaled));
    return o;
}

// 5. Two-level structure of the constrained minimizer.
Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(54);
    std::uniform_int_distribution<int> len(2, 8);
    std::uniform_int_distribution<int> deg(1, 10);
    double worst_gap = 0.0, worst_level = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = len(rng);
        std::vector<int> degrees(n);
        for (int& d : degrees) d = deg(rng);
        auto exact = two_point_optimum(degrees);
        auto numeric = numeric_minimize(degrees, rng());

        double gap = std::abs(numeric.objective - exact.objective);
        worst_gap = std::max(worst_gap, gap);
        if (gap > 1e-6) o.fail("objective off by " + fmt(gap) + " on trial " + std::to_string(trial));

        double lo = numeric.f.front(), hi = numeric.f.back();
        for (double x : numeric.f) {
            double dev = std::min(std::abs(x - lo), std::abs(x - hi));
            worst_level = std::max(worst_level, dev);
            if (dev > 1e-4) {
                o.fail("solution not two-valued on trial " + std::to_string(trial));
                break;
            }
        }
        if (n >= 3 && !(interior_critical_value(degrees) > exact.objective))
            o.fail("interior critical value not strictly larger on trial " +
                   std::to_string(trial));
    }
    o.note("500 sequences, worst objective gap " + fmt(worst_gap) + ", worst level deviation " +
           fmt(worst_level));
    return o;
}

// 6. Exhaustive alpha(n) for n = 2..7 against pinned values and fixtures.
Outcome criterion6() {
    Outcome o;
    struct Expect {
        int n;
        double value;
    };
    const Expect small[] = {{2, 2.0}, {3, 1.0}, {4, 0.5}};
    for (auto [n, value] : small) {
        auto rec = alpha(n);
        if (std::abs(rec.alpha - value) > 1e-9)
            o.fail("alpha(" + std::to_string(n) + ") = " + fmt(rec.alpha) + " != " + fmt(value));
        for (const auto& m : rec.minimizers)
            if (m.e_np < 1) o.fail("minimizer with e(N,P) = 0 at n=" + std::to_string(n));
    }

    std::ifstream in(std::string(FIXTURES_DIR) + "/alpha_small.json");
    if (!in.good()) {
        o.fail("missing fixture alpha_small.json");
        return o;
    }
    json fixtures = json::parse(in);
    for (int n = 5; n <= 7; ++n) {
        auto rec = alpha(n);
        const auto& fx = fixtures.at(std::to_string(n));
        double expect = fx.at("alpha").get<double>();
        if (std::abs(rec.alpha - expect) > 1e-9)
            o.fail("alpha(" + std::to_string(n) + ") = " + fmt(rec.alpha) + " != fixture " +
                   fmt(expect));
        std::set<std::string> got, want;
        for (const auto& m : rec.minimizers) got.insert(m.graph6);
        for (const auto& s : fx.at("minimizers")) want.insert(s.get<std::string>());
        if (got != want) o.fail("minimizer set mismatch at n=" + std::to_string(n));
        for (const auto& m : rec.minimizers) {
            if (m.e_np < 1) o.fail("minimizer with e(N,P) = 0 at n=" + std::to_string(n));
            double recheck = spectral_gap(graph6_decode(m.graph6)).lambda1;
            if (std::abs(recheck - rec.alpha) > 1e-9)
                o.fail("minimizer gap recheck failed at n=" + std::to_string(n));
        }
    }
    o.note("alpha(2..4) exact, alpha(5..7) match fixtures, all minimizers have e(N,P) >= 1");
    return o;
}

// 7. Oracle equivalence: QL solver vs Sturm bisection vs lazy power
//    iteration, plus the exact relaxation identity.
Outcome criterion7() {
    Outcome o;
    long long graphs = 0;
    auto check = [&](const Graph& g) {
        auto spec = spectral_gap(g);
        double sturm = sturm_eigen_oracle(normalized_laplacian(g), 1);
        double power = transition_gap_oracle(g, 1e-6);
        if (std::abs(spec.lambda1 - sturm) > 1e-6) o.fail("sturm disagrees: " + graph6_encode(g));
        if (std::abs(spec.lambda1 - power) > 1e-6) o.fail("power disagrees: " + graph6_encode(g));
        // tau is the exact computed quotient; the product can differ from
        // 1.0 by at most one ulp of double rounding.
        if (spec.relaxation_time != 1.0 / spec.lambda1)
            o.fail("tau is not the exact reciprocal on " + graph6_encode(g));
        if (std::abs(spec.relaxation_time * spec.lambda1 - 1.0) > 0x1p-52)
            o.fail("tau*lambda1 off by more than one ulp on " + graph6_encode(g));
        ++graphs;
    };
    for (int n = 2; n <= 6; ++n) for_each_connected(n, check);

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> size(5, 40);
        int n = size(rng);
        std::uniform_real_distribution<double> p(0.15, 0.8);
        check(random_connected(n, p(rng), rng()));
    }
    o.note(std::to_string(graphs) +
           " graphs, three solvers within 1e-6, tau exactly 1/lambda1 as computed");
    return o;
}

// 8. Format fidelity and CLI determinism across worker counts.
Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> size(1, 30);
        std::uniform_real_distribution<double> p(0.0, 1.0);
        int n = size(rng);
        double prob = p(rng);
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (p(rng) < prob) g.add_edge(i, j);
        std::string bytes = graph6_encode(g);
        if (graph6_encode(graph6_decode(bytes)) != bytes) {
            o.fail("graph6 round trip broke on trial " + std::to_string(trial));
            break;
        }
    }

    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(std::move(args), out, err);
        return std::pair(code, out.str());
    };
    auto s1 = run({"search", "--n", "6", "--workers", "1"});
    auto s4 = run({"search", "--n", "6", "--workers", "4"});
    if (s1.first != 0 || s4.first != 0 || s1.second != s4.second)
        o.fail("search output differs between --workers 1 and 4");
    auto a1 = run({"audit", "--exhaustive-max", "5", "--random-count", "20", "--seed", "9",
                   "--workers", "1"});
    auto a4 = run({"audit", "--exhaustive-max", "5", "--random-count", "20", "--seed", "9",
                   "--workers", "4"});
    if (a1.first != 0 || a4.first != 0 || a1.second != a4.second)
        o.fail("audit output differs between --workers 1 and 4");
    o.note("1000 graph6 round trips byte-exact; CLI byte-identical for workers 1 and 4");
    return o;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> fn;
    };
    const Entry entries[] = {
        {1, "hypercube sharpness gap", criterion1},
        {2, "double kite 54/n^3 trend", criterion2},
        {3, "bound audit over exhaustive and random corpora", criterion3},
        {4, "bound constant comparison on DK(333,333)", criterion4},
        {5, "two-level minimizer structure", criterion5},
        {6, "exhaustive alpha(n) for n = 2..7", criterion6},
        {7, "three-way solver equivalence", criterion7},
        {8, "format fidelity and CLI determinism", criterion8},
    };

    int failures = 0;
    for (const auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.name << " ["
                  << fmt(secs) << "s]";
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << "\n" << std::flush;
        if (!o.pass) ++failures;
    }
    return failures;
}
