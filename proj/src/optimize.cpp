#include "specgap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

void check_degrees(const std::vector<int>& degrees) {
    if (degrees.size() < 2) throw InvalidParams("need at least two indices");
    for (int d : degrees)
        if (d < 1) throw InvalidParams("degrees must be positive");
}

// Two-valued solution for a split with low-group mass a and high-group
// mass b: levels -sqrt(b/(a(a+b))) and sqrt(a/(b(a+b))) meet both
// constraints exactly and give objective 1/a + 1/b.
void fill_two_level(TwoPointProblem& p, long long a, long long b) {
    const double da = static_cast<double>(a), db = static_cast<double>(b);
    const double low = -std::sqrt(db / (da * (da + db)));
    const double high = std::sqrt(da / (db * (da + db)));
    p.f.resize(p.degrees.size());
    for (size_t i = 0; i < p.degrees.size(); ++i) p.f[i] = p.assignment[i] ? high : low;
    p.objective = 1.0 / da + 1.0 / db;
}

}  // namespace

TwoPointProblem two_point_optimum(const std::vector<int>& degrees) {
    check_degrees(degrees);
    const int n = static_cast<int>(degrees.size());
    if (n > 24) throw TooLarge("split enumeration capped at n = 24");

    const int mid = n - 2;
    long long best_a = 0, best_b = 0;
    uint32_t best_mask = 0;
    long long best_product = -1;
    for (uint32_t mask = 0; mask < (1u << mid); ++mask) {
        long long a = degrees[0], b = degrees[n - 1];
        for (int i = 0; i < mid; ++i)
            ((mask >> i) & 1 ? b : a) += degrees[i + 1];
        // 1/a + 1/b = (a+b)/(ab) with a+b fixed, so maximize the product.
        if (a * b > best_product) {
            best_product = a * b;
            best_a = a;
            best_b = b;
            best_mask = mask;
        }
    }

    TwoPointProblem p;
    p.degrees = degrees;
    p.assignment.assign(n, 0);
    p.assignment[n - 1] = 1;
    for (int i = 0; i < mid; ++i) p.assignment[i + 1] = (best_mask >> i) & 1;
    fill_two_level(p, best_a, best_b);
    return p;
}

double interior_critical_value(const std::vector<int>& degrees) {
    check_degrees(degrees);
    return 1.0 / degrees.front() + 1.0 / degrees.back();
}

namespace {

struct Manifold {
    const std::vector<int>& d;
    long long vol;

    // Shift to degree-weighted mean zero, then scale to unit weighted norm.
    // Both preserve the index ordering. Returns false if f collapses.
    bool project(std::vector<double>& f) const {
        double mean = 0.0;
        for (size_t i = 0; i < f.size(); ++i) mean += f[i] * d[i];
        mean /= static_cast<double>(vol);
        double ss = 0.0;
        for (size_t i = 0; i < f.size(); ++i) {
            f[i] -= mean;
            ss += f[i] * f[i] * d[i];
        }
        if (ss < 1e-30) return false;
        double inv = 1.0 / std::sqrt(ss);
        for (double& x : f) x *= inv;
        return true;
    }
};

double objective_of(const std::vector<double>& f) {
    double gap = f.back() - f.front();
    return gap * gap;
}

// Clip-and-project descent from the given start. The endpoints carry the
// whole gradient; middles move through clipping and reprojection. Once a
// middle merges with an endpoint the clipping keeps them glued, so this
// converges onto one two-valued face and polishes it.
double descend_from(const Manifold& man, std::vector<double>& f) {
    const int n = static_cast<int>(f.size());
    if (!man.project(f)) return std::numeric_limits<double>::infinity();
    double step = 0.1;
    double obj = objective_of(f);
    std::vector<double> trial(n);
    for (int iter = 0; iter < 20000 && step > 1e-14; ++iter) {
        double gap = f[n - 1] - f[0];
        trial = f;
        trial[0] += step * 2.0 * gap;
        trial[n - 1] -= step * 2.0 * gap;
        if (trial[0] > trial[n - 1]) {
            double mid = 0.5 * (trial[0] + trial[n - 1]);
            trial[0] = trial[n - 1] = mid;
        }
        for (int i = 1; i + 1 < n; ++i) trial[i] = std::clamp(trial[i], trial[0], trial[n - 1]);
        if (!man.project(trial)) {
            step *= 0.5;
            continue;
        }
        double trial_obj = objective_of(trial);
        if (trial_obj < obj - 1e-18) {
            f.swap(trial);
            obj = trial_obj;
            step = std::min(step * 1.3, 0.25);
        } else {
            step *= 0.5;
        }
    }
    return obj;
}

// One restart: descend, then try teleporting each middle to the opposite
// level and re-descending. The teleports let the search leave the face the
// clipping glued it to; everything is still evaluated numerically.
std::vector<double> descend(const std::vector<int>& d, std::mt19937_64& rng) {
    const int n = static_cast<int>(d.size());
    Manifold man{d, 0};
    for (int deg : d) man.vol += deg;

    std::uniform_real_distribution<double> u01(-1.0, 1.0);
    std::vector<double> f(n);
    for (double& x : f) x = u01(rng);
    f[0] = -1.5 - std::abs(f[0]);
    f[n - 1] = 1.5 + std::abs(f[n - 1]);
    for (int i = 1; i + 1 < n; ++i) f[i] = std::clamp(f[i], f[0], f[n - 1]);
    double obj = descend_from(man, f);
    if (n == 2) return f;

    std::vector<int> order(n - 2);
    for (int i = 0; i < n - 2; ++i) order[i] = i + 1;
    for (int pass = 0; pass < 3; ++pass) {
        std::shuffle(order.begin(), order.end(), rng);
        bool moved = false;
        for (int i : order) {
            std::vector<double> g = f;
            double mid = 0.5 * (g[0] + g[n - 1]);
            g[i] = (g[i] <= mid) ? g[n - 1] : g[0];
            double cand = descend_from(man, g);
            if (cand < obj - 1e-15) {
                f.swap(g);
                obj = cand;
                moved = true;
            }
        }
        if (!moved) break;
    }
    return f;
}

}  // namespace

TwoPointProblem numeric_minimize(const std::vector<int>& degrees, uint64_t seed) {
    check_degrees(degrees);
    const int n = static_cast<int>(degrees.size());

    TwoPointProblem best;
    best.degrees = degrees;
    best.objective = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < 50; ++restart) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + restart);
        auto f = descend(degrees, rng);
        double obj = objective_of(f);
        if (obj < best.objective) {
            best.objective = obj;
            best.f = f;
        }
    }

    // Record which level each entry landed on.
    best.assignment.assign(n, 0);
    double lo = best.f.front(), hi = best.f.back();
    for (int i = 0; i < n; ++i)
        best.assignment[i] = (std::abs(best.f[i] - hi) < std::abs(best.f[i] - lo)) ? 1 : 0;
    return best;
}

}  // namespace specgap
