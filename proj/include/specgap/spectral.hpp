#ifndef SPECGAP_SPECTRAL_HPP
#define SPECGAP_SPECTRAL_HPP

#include <span>
#include <vector>

#include "specgap/graph.hpp"
#include "specgap/matrix.hpp"

namespace specgap {

// Full spectral picture of a connected graph. eigenvalues are ascending,
// so eigenvalues[1] is the spectral gap. harmonic_f is T^{-1/2} times the
// unit eigenvector for lambda1, sign-normalized so its entry of largest
// absolute value is positive (ties broken by lowest index).
struct SpectralResult {
    std::vector<double> eigenvalues;
    double lambda1 = 0.0;
    std::vector<double> harmonic_f;
    double relaxation_time = 0.0;  // 1/lambda1, exactly as computed
    double residual = 0.0;         // max_i ||L g_i - lambda_i g_i||_2
};

// L = I - T^{-1/2} A T^{-1/2}. Throws DegreeZero on isolated vertices.
SymMatrix normalized_laplacian(const Graph& g);

SpectralResult spectral_gap(const Graph& g);

// sum_{u~v} (f(u)-f(v))^2 / sum_v f(v)^2 d(v), each edge counted once.
double rayleigh_quotient(const Graph& g, std::span<const double> f);

double relaxation_time(const Graph& g);

// Spectral gap only, skipping eigenvectors; same solver family as
// spectral_gap but much cheaper for sweep workloads.
double lambda1_dense(const Graph& g);

// Independent estimate of 1 - rho_{n-1} for the walk matrix T^{-1}A:
// power iteration on the lazy symmetrized operator (I + T^{-1/2}AT^{-1/2})/2
// with the known top eigenvector (components ~ sqrt(d)) deflated out.
// Returns 2*(1 - top deflated eigenvalue).
double transition_gap_oracle(const Graph& g, double tol);

// k-th smallest eigenvalue (0-based) by bisection on Sylvester inertia
// counts of m - xI, eliminating without pivoting. No tridiagonalization;
// shares nothing with the QL solver. Final interval width <= 1e-10.
double sturm_eigen_oracle(const SymMatrix& m, int k);

}  // namespace specgap

#endif
