#include "specgap/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

// Householder reduction to tridiagonal form, in place on v (row-major n*n).
// Classic tred2; when accumulate is false the transformation product is
// skipped, leaving only d (diagonal) and e (subdiagonal).
void tred2(std::vector<double>& v, int n, std::vector<double>& d, std::vector<double>& e,
           bool accumulate) {
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    for (int j = 0; j < n; ++j) d[j] = V(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        double scale = 0.0, h = 0.0;
        for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (int j = 0; j < i; ++j) {
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
                V(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (int j = 0; j < i; ++j) e[j] = 0.0;

            for (int j = 0; j < i; ++j) {
                f = d[j];
                V(j, i) = f;
                g = e[j] + V(j, j) * f;
                for (int k = j + 1; k <= i - 1; ++k) {
                    g += V(k, j) * d[k];
                    e[k] += V(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (int j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            double hh = f / (h + h);
            for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (int j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (int k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    if (accumulate) {
        for (int i = 0; i < n - 1; ++i) {
            V(n - 1, i) = V(i, i);
            V(i, i) = 1.0;
            double h = d[i + 1];
            if (h != 0.0) {
                for (int k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
                for (int j = 0; j <= i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
                    for (int k = 0; k <= i; ++k) V(k, j) -= g * d[k];
                }
            }
            for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
        }
        for (int j = 0; j < n; ++j) {
            d[j] = V(n - 1, j);
            V(n - 1, j) = 0.0;
        }
        V(n - 1, n - 1) = 1.0;
    } else {
        // d holds Householder norms after the reduction; the tridiagonal
        // diagonal survives on the matrix diagonal.
        for (int i = 0; i < n; ++i) d[i] = V(i, i);
    }
    e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e); eigenvalues sorted ascending.
// Rotations are applied to v only when accumulate is set.
void tql2(std::vector<double>& d, std::vector<double>& e, std::vector<double>& v, int n,
          bool accumulate) {
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0, tst1 = 0.0;
    const double eps = 0x1p-52;
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 50)
                    throw NumericalFailure("QL sweep failed to deflate after 50 iterations");
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if (accumulate) {
                        for (int k = 0; k < n; ++k) {
                            h = V(k, i + 1);
                            V(k, i + 1) = s * V(k, i) + c * h;
                            V(k, i) = c * V(k, i) - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }

    // Ascending selection sort, swapping eigenvector columns along.
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        double p = d[i];
        for (int j = i + 1; j < n; ++j)
            if (d[j] < p) {
                k = j;
                p = d[j];
            }
        if (k != i) {
            d[k] = d[i];
            d[i] = p;
            if (accumulate)
                for (int j = 0; j < n; ++j) std::swap(V(j, i), V(j, k));
        }
    }
}

}  // namespace

EigenSystem sym_eigen(const SymMatrix& m, bool with_vectors) {
    const int n = m.size();
    EigenSystem sys;
    sys.n = n;
    sys.values.assign(n, 0.0);
    if (n == 0) return sys;

    std::vector<double> v = m.data();
    std::vector<double> e(n, 0.0);
    tred2(v, n, sys.values, e, with_vectors);
    tql2(sys.values, e, v, n, with_vectors);
    if (with_vectors) sys.vectors = std::move(v);
    return sys;
}

}  // namespace specgap
