#include "specgap/spectral.hpp"

#include <cmath>
#include <random>
#include <string>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

std::vector<double> inv_sqrt_degrees(const Graph& g) {
    std::vector<double> s(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) == 0)
            throw DegreeZero("vertex " + std::to_string(u) + " is isolated");
        s[u] = 1.0 / std::sqrt(static_cast<double>(g.degree(u)));
    }
    return s;
}

void require_connected(const Graph& g) {
    if (g.vertex_count() == 0) throw Disconnected("empty graph");
    if (!is_connected(g)) throw Disconnected("graph is not connected");
}

// y = L x applied through the adjacency structure, avoiding the dense matrix.
void apply_laplacian(const Graph& g, const std::vector<double>& isd,
                     const std::vector<double>& x, std::vector<double>& y) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        double acc = 0.0;
        g.for_neighbors(u, [&](int v) { acc += isd[v] * x[v]; });
        y[u] = x[u] - isd[u] * acc;
    }
}

}  // namespace

SymMatrix normalized_laplacian(const Graph& g) {
    const int n = g.vertex_count();
    auto isd = inv_sqrt_degrees(g);
    SymMatrix m(n);
    for (int u = 0; u < n; ++u) {
        m(u, u) = 1.0;
        g.for_neighbors(u, [&](int v) { m(u, v) = -isd[u] * isd[v]; });
    }
    return m;
}

SpectralResult spectral_gap(const Graph& g) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n < 2) throw Disconnected("spectral gap needs at least 2 vertices");
    auto isd = inv_sqrt_degrees(g);
    auto sys = sym_eigen(normalized_laplacian(g), true);

    SpectralResult r;
    r.eigenvalues = sys.values;
    r.lambda1 = sys.values[1];

    // Residual over all computed pairs, via sparse application of L.
    std::vector<double> gi(n), lg(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) gi[i] = sys.vectors[static_cast<size_t>(i) * n + j];
        apply_laplacian(g, isd, gi, lg);
        double ss = 0.0;
        for (int i = 0; i < n; ++i) {
            double diff = lg[i] - sys.values[j] * gi[i];
            ss += diff * diff;
        }
        r.residual = std::max(r.residual, std::sqrt(ss));
    }
    if (r.residual > 1e-8)
        throw NumericalFailure("eigensolver residual " + std::to_string(r.residual));

    r.harmonic_f.resize(n);
    for (int i = 0; i < n; ++i)
        r.harmonic_f[i] = isd[i] * sys.vectors[static_cast<size_t>(i) * n + 1];
    int top = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(r.harmonic_f[i]) > std::abs(r.harmonic_f[top])) top = i;
    if (r.harmonic_f[top] < 0)
        for (double& x : r.harmonic_f) x = -x;

    r.relaxation_time = 1.0 / r.lambda1;
    return r;
}

double rayleigh_quotient(const Graph& g, std::span<const double> f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw InvalidParams("test function length does not match vertex count");
    double num = 0.0;
    for (auto [u, v] : g.edges()) {
        double diff = f[u] - f[v];
        num += diff * diff;
    }
    double den = 0.0;
    for (int u = 0; u < n; ++u) den += f[u] * f[u] * g.degree(u);
    if (den <= 0.0) throw DegenerateFunction("degree-weighted norm of f is zero");
    return num / den;
}

double relaxation_time(const Graph& g) { return spectral_gap(g).relaxation_time; }

double lambda1_dense(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() < 2) throw Disconnected("spectral gap needs at least 2 vertices");
    auto sys = sym_eigen(normalized_laplacian(g), false);
    return sys.values[1];
}

double transition_gap_oracle(const Graph& g, double tol) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n < 2) throw Disconnected("spectral gap needs at least 2 vertices");
    if (!(tol > 0)) throw InvalidParams("tolerance must be positive");
    auto isd = inv_sqrt_degrees(g);

    // Unit vector spanning the known top eigenspace of the lazy operator.
    std::vector<double> w(n);
    double wn = 0.0;
    for (int u = 0; u < n; ++u) {
        w[u] = std::sqrt(static_cast<double>(g.degree(u)));
        wn += w[u] * w[u];
    }
    wn = std::sqrt(wn);
    for (double& x : w) x /= wn;

    auto deflate = [&](std::vector<double>& x) {
        double dot = 0.0;
        for (int u = 0; u < n; ++u) dot += w[u] * x[u];
        for (int u = 0; u < n; ++u) x[u] -= dot * w[u];
    };
    auto normalize = [&](std::vector<double>& x) {
        double ss = 0.0;
        for (double v : x) ss += v * v;
        double norm = std::sqrt(ss);
        if (norm > 0)
            for (double& v : x) v /= norm;
        return norm;
    };

    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> u01(-1.0, 1.0);
    std::vector<double> x(n), y(n);
    for (double& v : x) v = u01(rng);
    deflate(x);
    if (normalize(x) == 0.0) throw NumericalFailure("degenerate start vector");

    // y = (x + T^{-1/2} A T^{-1/2} x) / 2; eigenvalues of this lazy operator
    // are 1 - lambda/2, all in [0, 1].
    auto apply_lazy = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (int u = 0; u < n; ++u) {
            double acc = 0.0;
            g.for_neighbors(u, [&](int v) { acc += isd[v] * in[v]; });
            out[u] = 0.5 * (in[u] + isd[u] * acc);
        }
    };

    const long long cap = 1000000;
    double prev = 2.0;
    for (long long it = 0; it < cap; ++it) {
        apply_lazy(x, y);
        deflate(y);
        double rho = 0.0;  // x is unit, so x.y is the Rayleigh estimate
        for (int u = 0; u < n; ++u) rho += x[u] * y[u];
        // The successive-difference test alone stalls early on slowly
        // separating spectra, so also require the eigenpair residual to be
        // small before trusting rho.
        double resid = 0.0;
        for (int u = 0; u < n; ++u) {
            double d = y[u] - rho * x[u];
            resid += d * d;
        }
        if (std::abs(rho - prev) < tol / 10.0 && std::sqrt(resid) <= tol / 4.0)
            return 2.0 * (1.0 - rho);
        prev = rho;
        if (normalize(y) == 0.0) return 2.0 * (1.0 - 0.0);  // x was in the kernel
        x.swap(y);
    }
    throw NumericalFailure("power iteration did not converge within 1e6 iterations");
}

namespace {

// Eigenvalue count below x via the inertia of (m - xI) under a
// Bunch-Kaufman style LDL^T with 1x1 and 2x2 pivots. The symmetric
// permutations are congruences, so Sylvester's law applies; the 2x2 pivots
// matter near repeated eigenvalues, where every remaining diagonal entry
// is tiny and unpivoted elimination miscounts in a window (~1e-9) much
// wider than the bisection tolerance. Each indefinite 2x2 block
// contributes one negative eigenvalue; a definite one contributes the
// sign of its trace twice. Returns -1 on a genuine breakdown so the
// caller can nudge x.
int inertia_below(const SymMatrix& m, double x, double breakdown) {
    const int n = m.size();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = m(i, j) - (i == j ? x : 0.0);
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto swap_rc = [&](int p, int q) {
        if (p == q) return;
        for (int j = 0; j < n; ++j) std::swap(at(p, j), at(q, j));
        for (int i = 0; i < n; ++i) std::swap(at(i, p), at(i, q));
    };

    const double alpha = (1.0 + std::sqrt(17.0)) / 8.0;
    int neg = 0;
    int k = 0;
    while (k < n) {
        bool one_by_one = true;
        int pivot_row = k;
        int r = -1;
        if (k < n - 1) {
            double gamma_k = 0.0;
            for (int i = k + 1; i < n; ++i)
                if (std::abs(at(i, k)) > gamma_k) {
                    gamma_k = std::abs(at(i, k));
                    r = i;
                }
            if (std::abs(at(k, k)) < alpha * gamma_k) {
                double gamma_r = 0.0;
                for (int i = k; i < n; ++i)
                    if (i != r) gamma_r = std::max(gamma_r, std::abs(at(i, r)));
                if (std::abs(at(k, k)) * gamma_r >= alpha * gamma_k * gamma_k) {
                    // keep the k pivot
                } else if (std::abs(at(r, r)) >= alpha * gamma_r) {
                    pivot_row = r;
                } else {
                    one_by_one = false;
                }
            }
        }

        if (one_by_one) {
            swap_rc(k, pivot_row);
            double piv = at(k, k);
            if (std::abs(piv) < breakdown) return -1;
            if (piv < 0) ++neg;
            for (int i = k + 1; i < n; ++i) {
                double f = at(i, k) / piv;
                for (int j = k + 1; j <= i; ++j) {
                    double v = at(i, j) - f * at(k, j);
                    at(i, j) = v;
                    at(j, i) = v;
                }
            }
            ++k;
        } else {
            swap_rc(k + 1, r);
            const double e11 = at(k, k), e21 = at(k + 1, k), e22 = at(k + 1, k + 1);
            const double det = e11 * e22 - e21 * e21;
            if (std::abs(det) < 1e-300) return -1;
            if (det < 0)
                ++neg;
            else if (e11 + e22 < 0)
                neg += 2;
            for (int i = k + 2; i < n; ++i) {
                const double u = at(i, k), v = at(i, k + 1);
                const double su = (e22 * u - e21 * v) / det;
                const double sv = (e11 * v - e21 * u) / det;
                for (int j = k + 2; j <= i; ++j) {
                    double val = at(i, j) - (su * at(j, k) + sv * at(j, k + 1));
                    at(i, j) = val;
                    at(j, i) = val;
                }
            }
            k += 2;
        }
    }
    return neg;
}

int inertia_below_robust(const SymMatrix& m, double x, double scale) {
    // Nudge x away from pivot breakdowns; the shift stays far below the
    // 1e-10 bisection tolerance.
    double eps = 1e-14 * scale;
    for (int tries = 0; tries < 60; ++tries) {
        int c = inertia_below(m, x, 1e-30 * scale);
        if (c >= 0) return c;
        x += eps;
        eps *= 2.0;
    }
    throw NumericalFailure("inertia count kept breaking down");
}

}  // namespace

double sturm_eigen_oracle(const SymMatrix& m, int k) {
    const int n = m.size();
    if (k < 0 || k >= n) throw InvalidParams("eigenvalue index out of range");

    // Gershgorin interval encloses the whole spectrum.
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::abs(m(i, j));
        lo = std::min(i == 0 ? m(i, i) - radius : lo, m(i, i) - radius);
        hi = std::max(i == 0 ? m(i, i) + radius : hi, m(i, i) + radius);
    }
    double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    lo -= 1e-8 * scale;
    hi += 1e-8 * scale;

    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (inertia_below_robust(m, mid, scale) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace specgap
