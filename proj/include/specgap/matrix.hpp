#ifndef SPECGAP_MATRIX_HPP
#define SPECGAP_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace specgap {

// Dense real symmetric matrix, row-major full storage.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<double>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

// Full eigensystem of a symmetric matrix. values are ascending; vectors is
// row-major with column j holding the unit eigenvector for values[j].
struct EigenSystem {
    std::vector<double> values;
    std::vector<double> vectors;  // empty when computed values-only
    int n = 0;

    std::vector<double> eigenvector(int j) const {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = vectors[static_cast<size_t>(i) * n + j];
        return v;
    }
};

// Householder tridiagonalization + implicit-shift QL. Throws
// NumericalFailure if QL fails to deflate within its sweep cap.
EigenSystem sym_eigen(const SymMatrix& m, bool with_vectors = true);

}  // namespace specgap

#endif
