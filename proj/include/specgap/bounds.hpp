#ifndef SPECGAP_BOUNDS_HPP
#define SPECGAP_BOUNDS_HPP

#include <span>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

// Sign split of a harmonic eigenvector: P gets f >= 0, N gets f < 0.
// u and v are the argmin/argmax vertices of f, ties broken by lowest index.
struct HarmonicSplit {
    std::vector<int> p_set;
    std::vector<int> n_set;
    long long vol_p = 0;
    long long vol_n = 0;
    int u = -1;
    int v = -1;
    int dist_uv = 0;
};

struct LowerBounds {
    double landau_odlyzko = 0.0;  // 1/(n*max_degree*(D+1))
    double chung = 0.0;           // 1/(D*vol)
    double improved = 0.0;        // 4/(D*vol)
};

// Every bound value for one graph, with slack against the computed gap.
struct BoundsReport {
    double lambda1 = 0.0;
    LowerBounds lower;
    double harmonic = 0.0;  // 2/(dist(u,v)*sqrt(vol_p*vol_n))
    HarmonicSplit split;
    double slack_landau_odlyzko = 0.0;
    double slack_chung = 0.0;
    double slack_improved = 0.0;
    double slack_harmonic = 0.0;
    double min_slack = 0.0;
};

LowerBounds lower_bounds(const Graph& g);

// 1/(k*D^2); the caller asserts vertex-transitivity, it is not verified.
double vertex_transitive_bound(int k, int diameter);

HarmonicSplit harmonic_split(const Graph& g, std::span<const double> f);

double harmonic_lower_bound(const Graph& g);

// Recenters f to degree-weighted mean zero and returns its Rayleigh
// quotient; always an upper bound on lambda1.
double test_function_upper(const Graph& g, std::span<const double> f);

// 4/(D*d*(n-D)) for a joined regular pair with these parameters.
double joined_pair_upper(int n, int diameter_d, int degree);

// (sqrt(vol_n/(vol_p^2+vol_p*vol_n)) + sqrt(vol_p/(vol_n^2+vol_p*vol_n)))^2,
// the exact combination the harmonic bound's proof compares to 2/sqrt(ab).
double amgm_combination(double vol_p, double vol_n);

BoundsReport bounds_report(const Graph& g);

}  // namespace specgap

#endif
