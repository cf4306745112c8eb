#include "specgap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specgap/errors.hpp"
#include "specgap/spectral.hpp"

namespace specgap {

LowerBounds lower_bounds(const Graph& g) {
    if (g.vertex_count() < 2) throw Disconnected("bounds need a connected graph on >= 2 vertices");
    auto m = metrics(g);
    if (!m.connected) throw Disconnected("bounds are undefined for disconnected graphs");
    const long long n = g.vertex_count();
    const long long diam = *m.diameter;
    LowerBounds b;
    // Integer products first so the only rounding is the final division.
    b.landau_odlyzko = 1.0 / static_cast<double>(n * m.max_degree * (diam + 1));
    b.chung = 1.0 / static_cast<double>(diam * m.volume);
    b.improved = 4.0 / static_cast<double>(diam * m.volume);
    return b;
}

double vertex_transitive_bound(int k, int diameter) {
    if (k < 1 || diameter < 1) throw InvalidParams("degree and diameter must be positive");
    return 1.0 / (static_cast<double>(k) * diameter * diameter);
}

HarmonicSplit harmonic_split(const Graph& g, std::span<const double> f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n) throw NotHarmonic("length mismatch");
    double weighted_sum = 0.0, max_abs = 0.0;
    for (int u = 0; u < n; ++u) {
        weighted_sum += f[u] * g.degree(u);
        max_abs = std::max(max_abs, std::abs(f[u]));
    }
    if (max_abs == 0.0) throw NotHarmonic("f is identically zero");
    if (std::abs(weighted_sum) > 1e-8) throw NotHarmonic("degree-weighted mean is not zero");

    HarmonicSplit s;
    for (int z = 0; z < n; ++z) {
        if (f[z] >= 0.0) {
            s.p_set.push_back(z);
            s.vol_p += g.degree(z);
        } else {
            s.n_set.push_back(z);
            s.vol_n += g.degree(z);
        }
        if (s.u < 0 || f[z] < f[s.u]) s.u = z;
        if (s.v < 0 || f[z] > f[s.v]) s.v = z;
    }
    auto dist = bfs_distances(g, s.u);
    if (dist[s.v] < 0) throw Disconnected("split endpoints are not connected");
    s.dist_uv = dist[s.v];
    return s;
}

double harmonic_lower_bound(const Graph& g) {
    auto spec = spectral_gap(g);
    auto s = harmonic_split(g, spec.harmonic_f);
    return 2.0 / (s.dist_uv * std::sqrt(static_cast<double>(s.vol_p) *
                                        static_cast<double>(s.vol_n)));
}

double test_function_upper(const Graph& g, std::span<const double> f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw InvalidParams("test function length does not match vertex count");
    long long vol = 0;
    double weighted_sum = 0.0;
    for (int u = 0; u < n; ++u) {
        vol += g.degree(u);
        weighted_sum += f[u] * g.degree(u);
    }
    if (vol == 0) throw DegenerateFunction("graph has no edges");
    double shift = weighted_sum / static_cast<double>(vol);
    std::vector<double> centered(f.begin(), f.end());
    double max_abs = 0.0;
    for (double& x : centered) {
        x -= shift;
        max_abs = std::max(max_abs, std::abs(x));
    }
    if (max_abs < 1e-14) throw DegenerateFunction("f is constant after recentering");
    return rayleigh_quotient(g, centered);
}

double joined_pair_upper(int n, int diameter_d, int degree) {
    const long long D = diameter_d, d = degree;
    // Same feasibility constraints as the joined_regular_pair generator.
    if (D < 1) throw InvalidParams("path length D must be >= 1");
    const long long hh = static_cast<long long>(n) - D + 1;
    if (hh < 4 || hh % 2 != 0) throw InvalidParams("n-D+1 must split into two equal halves");
    const long long h = hh / 2;
    if (d < 1 || d >= h) throw InvalidParams("need 1 <= d < (n-D+1)/2");
    if (d % 2 == 1 && h % 2 == 1) throw InvalidParams("d-regularity needs d*(n-D+1)/2 even");
    if (d == 1 && h > 2) throw InvalidParams("1-regular halves are never connected");
    return 4.0 / static_cast<double>(D * d * (n - D));
}

double amgm_combination(double vol_p, double vol_n) {
    if (!(vol_p > 0.0) || !(vol_n > 0.0)) throw InvalidParams("volumes must be positive");
    double a = std::sqrt(vol_n / (vol_p * vol_p + vol_p * vol_n));
    double b = std::sqrt(vol_p / (vol_n * vol_n + vol_p * vol_n));
    return (a + b) * (a + b);
}

BoundsReport bounds_report(const Graph& g) {
    BoundsReport r;
    auto spec = spectral_gap(g);
    r.lambda1 = spec.lambda1;
    r.lower = lower_bounds(g);
    r.split = harmonic_split(g, spec.harmonic_f);
    r.harmonic = 2.0 / (r.split.dist_uv * std::sqrt(static_cast<double>(r.split.vol_p) *
                                                    static_cast<double>(r.split.vol_n)));
    r.slack_landau_odlyzko = r.lambda1 - r.lower.landau_odlyzko;
    r.slack_chung = r.lambda1 - r.lower.chung;
    r.slack_improved = r.lambda1 - r.lower.improved;
    r.slack_harmonic = r.lambda1 - r.harmonic;
    r.min_slack = std::min({r.slack_landau_odlyzko, r.slack_chung, r.slack_improved,
                            r.slack_harmonic});
    return r;
}

}  // namespace specgap
