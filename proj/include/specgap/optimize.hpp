#ifndef SPECGAP_OPTIMIZE_HPP
#define SPECGAP_OPTIMIZE_HPP

#include <cstdint>
#include <vector>

namespace specgap {

// Minimize (f_n - f_1)^2 over f_1 <= f_k <= f_n subject to
// sum f_i d_i = 0 and sum f_i^2 d_i = 1. The minimizer is two-valued;
// assignment records which level each index sits on.
struct TwoPointProblem {
    std::vector<int> degrees;
    std::vector<double> f;
    double objective = 0.0;
    std::vector<int> assignment;  // 0 = low level, 1 = high level
};

// Exact optimum by exhausting the 2^(n-2) splits of the middle indices
// (index 0 pinned low, index n-1 pinned high). A split with group degree
// sums a and b scores 1/a + 1/b; ties go to the smallest split mask.
TwoPointProblem two_point_optimum(const std::vector<int>& degrees);

// Projected descent on the constraint manifold with clipped ordering,
// best of 50 random restarts. Independent check that local optimization
// lands on the two-valued structure.
TwoPointProblem numeric_minimize(const std::vector<int>& degrees, uint64_t seed);

// 1/d_1 + 1/d_n, the objective value at the interior Lagrangian critical
// point (a maximum, never the minimum for n >= 3).
double interior_critical_value(const std::vector<int>& degrees);

}  // namespace specgap

#endif
