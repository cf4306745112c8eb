#include "specgap/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <tuple>

#include "specgap/bounds.hpp"
#include "specgap/constructions.hpp"
#include "specgap/graph6.hpp"
#include "specgap/matrix.hpp"
#include "specgap/spectral.hpp"

namespace specgap {

namespace {

constexpr int kEnumCap = 8;
// Collect every labeled minimizer whose gap is this close to the minimum.
constexpr double kTieTol = 1e-12;

int mask_bits(int n) { return n * (n - 1) / 2; }

int worker_count(int workers) {
    if (workers > 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Adjacency rows as n-bit words, for mask-level connectivity tests.
struct SmallRows {
    uint8_t row[kEnumCap] = {};
};

SmallRows rows_from_mask(int n, uint64_t mask) {
    SmallRows r;
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((mask >> b) & 1) {
                r.row[i] |= uint8_t(1u << j);
                r.row[j] |= uint8_t(1u << i);
            }
    return r;
}

bool mask_connected(int n, const SmallRows& r) {
    const uint8_t all = static_cast<uint8_t>((1u << n) - 1);
    uint8_t reach = 1, frontier = 1;
    while (frontier) {
        uint8_t next = 0;
        uint8_t f = frontier;
        while (f) {
            int v = __builtin_ctz(f);
            f &= static_cast<uint8_t>(f - 1);
            next |= r.row[v];
        }
        frontier = next & static_cast<uint8_t>(~reach);
        reach |= next;
    }
    return reach == all;
}

// Normalized Laplacian of a mask graph on the stack.
void small_laplacian(int n, const SmallRows& r, double L[kEnumCap][kEnumCap]) {
    double isd[kEnumCap];
    for (int u = 0; u < n; ++u) isd[u] = 1.0 / std::sqrt(double(__builtin_popcount(r.row[u])));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                L[i][j] = 1.0;
            else
                L[i][j] = ((r.row[i] >> j) & 1) ? -isd[i] * isd[j] : 0.0;
        }
}

// Eigenvalue count below x via elimination without pivoting; -1 on a pivot
// breakdown (caller falls back to the full solve).
int small_inertia_below(int n, const double L[kEnumCap][kEnumCap], double x) {
    double a[kEnumCap][kEnumCap];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a[i][j] = L[i][j] - (i == j ? x : 0.0);
    int neg = 0;
    for (int k = 0; k < n; ++k) {
        double piv = a[k][k];
        if (std::abs(piv) < 1e-200) return -1;
        if (piv < 0) ++neg;
        for (int i = k + 1; i < n; ++i) {
            double f = a[i][k] / piv;
            for (int j = k + 1; j <= i; ++j) a[i][j] -= f * a[j][k];
        }
    }
    return neg;
}

double small_lambda1(int n, const double L[kEnumCap][kEnumCap]) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = L[i][j];
    return sym_eigen(m, false).values[1];
}

void check_enum_range(int n) {
    if (n < 2) throw InvalidParams("enumeration needs n >= 2");
    if (n > kEnumCap) throw TooLarge("exhaustive enumeration capped at n = 8");
}

// Backtracking search for the lexicographically smallest relabeled
// bitstring. Column j of a labeling is the j-bit value of the adjacency
// bits (place[0],c), ..., (place[j-1],c) read MSB first, matching the
// graph6 stream order, so the overall string compares column by column.
struct CanonSearch {
    int n = 0;
    bool adj[kEnumCap][kEnumCap] = {};
    int place[kEnumCap] = {};
    uint8_t curcol[kEnumCap] = {};
    uint8_t bestcol[kEnumCap] = {};
    bool used[kEnumCap] = {};
    bool improved = false;  // some relabeling beat the input labeling
    bool stop_on_improvement = false;

    explicit CanonSearch(const Graph& g) {
        n = g.vertex_count();
        for (int u = 0; u < n; ++u)
            g.for_neighbors(u, [&](int v) { adj[u][v] = true; });
        for (int j = 0; j < n; ++j) {
            uint8_t col = 0;
            for (int i = 0; i < j; ++i) col = static_cast<uint8_t>((col << 1) | (adj[i][j] ? 1 : 0));
            bestcol[j] = col;
        }
    }

    // -1 current prefix < best, 0 equal, +1 greater.
    int compare_prefix(int depth) const {
        for (int i = 0; i < depth; ++i) {
            if (curcol[i] < bestcol[i]) return -1;
            if (curcol[i] > bestcol[i]) return 1;
        }
        return 0;
    }

    bool dfs(int depth) {
        if (depth >= n) {
            if (compare_prefix(n) < 0) {
                for (int i = 0; i < n; ++i) bestcol[i] = curcol[i];
                improved = true;
                if (stop_on_improvement) return false;
            }
            return true;
        }
        if (depth >= kEnumCap) return true;  // n <= kEnumCap, so depth stays in range
        // Candidates sorted by their column value; smallest extension first.
        std::pair<uint8_t, int> cand[kEnumCap];
        int count = 0;
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            uint8_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = static_cast<uint8_t>((col << 1) | (adj[place[i]][c] ? 1 : 0));
            cand[count++] = {col, c};
        }
        std::sort(cand, cand + count);

        for (int t = 0; t < count; ++t) {
            int state = compare_prefix(depth);
            if (state > 0) return true;  // a deeper update outdated this branch
            if (state == 0 && cand[t].first > bestcol[depth]) break;
            place[depth] = cand[t].second;
            curcol[depth] = cand[t].first;
            used[cand[t].second] = true;
            bool keep_going = dfs(depth + 1);
            used[cand[t].second] = false;
            if (!keep_going) return false;
        }
        return true;
    }

    uint64_t best_mask() const {
        uint64_t mask = 0;
        int b = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if ((bestcol[j] >> (j - 1 - i)) & 1) mask |= uint64_t{1} << b;
        return mask;
    }
};

}  // namespace

uint64_t graph_to_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (mask_bits(n) > 64) throw TooLarge("mask form limited to 11 vertices");
    uint64_t mask = 0;
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if (g.has_edge(i, j)) mask |= uint64_t{1} << b;
    return mask;
}

Graph mask_to_graph(int n, uint64_t mask) {
    if (mask_bits(n) > 64) throw TooLarge("mask form limited to 11 vertices");
    Graph g(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((mask >> b) & 1) g.add_edge(i, j);
    return g;
}

void for_each_connected(int n, const std::function<void(const Graph&)>& fn) {
    check_enum_range(n);
    const uint64_t total = uint64_t{1} << mask_bits(n);
    for (uint64_t mask = 0; mask < total; ++mask) {
        auto rows = rows_from_mask(n, mask);
        if (mask_connected(n, rows)) fn(mask_to_graph(n, mask));
    }
}

uint64_t canonical_mask(const Graph& g) {
    if (g.vertex_count() > kEnumCap) throw TooLarge("canonical form capped at n = 8");
    if (g.vertex_count() < 2) return 0;
    CanonSearch search(g);
    search.dfs(0);
    return search.best_mask();
}

bool is_canonical_mask(const Graph& g) {
    if (g.vertex_count() > kEnumCap) throw TooLarge("canonical form capped at n = 8");
    if (g.vertex_count() < 2) return true;
    CanonSearch search(g);
    search.stop_on_improvement = true;
    search.dfs(0);
    return !search.improved;
}

namespace {

struct ShardResult {
    double min_lambda1 = std::numeric_limits<double>::infinity();
    std::vector<std::pair<uint64_t, double>> candidates;  // mask, lambda1
    long long scanned = 0;
    long long canonical_count = 0;
};

// One contiguous mask range of the alpha scan. shared_min is a monotone
// hint that tightens the inertia prune across workers; correctness never
// depends on how fresh it is.
ShardResult scan_masks(int n, uint64_t lo, uint64_t hi, bool count_classes,
                       std::atomic<double>* shared_min) {
    ShardResult res;
    double L[kEnumCap][kEnumCap];
    for (uint64_t mask = lo; mask < hi; ++mask) {
        auto rows = rows_from_mask(n, mask);
        if (!mask_connected(n, rows)) continue;
        ++res.scanned;
        if (count_classes && is_canonical_mask(mask_to_graph(n, mask))) ++res.canonical_count;

        small_laplacian(n, rows, L);
        double cutoff = std::min(res.min_lambda1, shared_min->load(std::memory_order_relaxed));
        if (std::isfinite(cutoff)) {
            int below = small_inertia_below(n, L, cutoff + 2 * kTieTol);
            if (below >= 0 && below <= 1) continue;  // lambda1 above every tie window
        }
        double l1 = small_lambda1(n, L);
        if (l1 < res.min_lambda1) {
            res.min_lambda1 = l1;
            double seen = shared_min->load(std::memory_order_relaxed);
            while (l1 < seen &&
                   !shared_min->compare_exchange_weak(seen, l1, std::memory_order_relaxed)) {
            }
        }
        if (l1 <= res.min_lambda1 + kTieTol) {
            res.candidates.emplace_back(mask, l1);
            if (res.candidates.size() > 4096) {
                std::erase_if(res.candidates, [&](const auto& c) {
                    return c.second > res.min_lambda1 + kTieTol;
                });
            }
        }
    }
    return res;
}

}  // namespace

SearchRecord alpha(int n, int workers, bool count_classes) {
    check_enum_range(n);
    const uint64_t total = uint64_t{1} << mask_bits(n);
    const int w = std::min<int>(worker_count(workers), 64);

    std::atomic<double> shared_min{std::numeric_limits<double>::infinity()};
    std::vector<ShardResult> shards(w);
    {
        std::vector<std::thread> pool;
        const uint64_t chunk = (total + w - 1) / w;
        for (int t = 0; t < w; ++t) {
            uint64_t lo = chunk * t, hi = std::min(total, lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, t, lo, hi] {
                shards[t] = scan_masks(n, lo, hi, count_classes, &shared_min);
            });
        }
        for (auto& th : pool) th.join();
    }

    SearchRecord rec;
    rec.n = n;
    double min_l1 = std::numeric_limits<double>::infinity();
    for (auto& s : shards) {
        rec.graphs_scanned += s.scanned;
        min_l1 = std::min(min_l1, s.min_lambda1);
    }
    rec.alpha = min_l1;
    if (count_classes) {
        long long classes = 0;
        for (auto& s : shards) classes += s.canonical_count;
        rec.distinct_classes = classes;
    }

    // Deterministic merge: labeled candidates within the tie window, then
    // canonical dedup, then per-class reporting.
    std::vector<uint64_t> winning;
    for (auto& s : shards)
        for (auto& [mask, l1] : s.candidates)
            if (l1 <= min_l1 + kTieTol) winning.push_back(mask);
    std::vector<uint64_t> canon;
    canon.reserve(winning.size());
    for (uint64_t mask : winning) canon.push_back(canonical_mask(mask_to_graph(n, mask)));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    for (uint64_t mask : canon) {
        Graph g = mask_to_graph(n, mask);
        auto spec = spectral_gap(g);
        auto split = harmonic_split(g, spec.harmonic_f);
        MinimizerInfo info;
        info.graph6 = graph6_encode(g);
        info.lambda1 = spec.lambda1;
        info.e_np = cut_edges_between(g, split.n_set);
        auto bridge_edges = bridges(g);
        std::vector<char> in_n(n, 0);
        for (int v : split.n_set) in_n[v] = 1;
        for (auto e : g.edges())
            if (in_n[e.first] != in_n[e.second])
                if (std::find(bridge_edges.begin(), bridge_edges.end(), e) != bridge_edges.end())
                    ++info.np_bridges;
        rec.minimizers.push_back(std::move(info));
    }
    return rec;
}

std::vector<SweepRow> sweep_double_kite(int n, int workers) {
    if (n < 4) throw InvalidParams("double kite sweep needs n >= 4");
    std::vector<SweepRow> rows;
    for (int r = 2; 2 * r <= n; ++r) rows.push_back({r, n - 2 * r, 0.0, 0.0});

    const int w = worker_count(workers);
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
            double l1 = lambda1_dense(double_kite(rows[i].r, rows[i].s));
            rows[i].lambda1 = l1;
            rows[i].scaled = l1 * std::pow(static_cast<double>(n), 3);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < w && t < static_cast<int>(rows.size()); ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    return rows;
}

size_t sweep_argmin(const std::vector<SweepRow>& rows) {
    size_t best = 0;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].lambda1 < rows[best].lambda1) best = i;
    return best;
}

namespace {

struct AuditAccum {
    long long audited = 0;
    double slack_lo = std::numeric_limits<double>::infinity();
    double slack_chung = std::numeric_limits<double>::infinity();
    double slack_improved = std::numeric_limits<double>::infinity();
    double slack_harmonic = std::numeric_limits<double>::infinity();
    double chain_hd = std::numeric_limits<double>::infinity();
    double chain_di = std::numeric_limits<double>::infinity();
    std::vector<AuditViolation> violations;

    void merge(const AuditAccum& o) {
        audited += o.audited;
        slack_lo = std::min(slack_lo, o.slack_lo);
        slack_chung = std::min(slack_chung, o.slack_chung);
        slack_improved = std::min(slack_improved, o.slack_improved);
        slack_harmonic = std::min(slack_harmonic, o.slack_harmonic);
        chain_hd = std::min(chain_hd, o.chain_hd);
        chain_di = std::min(chain_di, o.chain_di);
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

void audit_one(const Graph& g, AuditAccum& acc) {
    auto r = bounds_report(g);
    auto m = metrics(g);
    ++acc.audited;
    acc.slack_lo = std::min(acc.slack_lo, r.slack_landau_odlyzko);
    acc.slack_chung = std::min(acc.slack_chung, r.slack_chung);
    acc.slack_improved = std::min(acc.slack_improved, r.slack_improved);
    acc.slack_harmonic = std::min(acc.slack_harmonic, r.slack_harmonic);

    double mid = 2.0 / (*m.diameter * std::sqrt(static_cast<double>(r.split.vol_p) *
                                                static_cast<double>(r.split.vol_n)));
    acc.chain_hd = std::min(acc.chain_hd, r.harmonic - mid);
    acc.chain_di = std::min(acc.chain_di, mid - r.lower.improved);

    auto flag = [&](double slack, const char* which, double value) {
        if (slack < -1e-10 && acc.violations.size() < 100) {
            AuditViolation v;
            v.graph6 = g.vertex_count() <= 62 ? graph6_encode(g) : "(large)";
            v.bound = which;
            v.lambda1 = r.lambda1;
            v.value = value;
            acc.violations.push_back(std::move(v));
        }
    };
    flag(r.slack_landau_odlyzko, "landau_odlyzko", r.lower.landau_odlyzko);
    flag(r.slack_chung, "chung", r.lower.chung);
    flag(r.slack_improved, "improved", r.lower.improved);
    flag(r.slack_harmonic, "harmonic", r.harmonic);
    if (r.harmonic - mid < -1e-12) flag(-1.0, "chain_harmonic_vs_diameter", mid);
    if (mid - r.lower.improved < -1e-12) flag(-1.0, "chain_diameter_vs_improved", mid);
}

}  // namespace

AuditReport audit_corpus(const CorpusSpec& spec, int workers) {
    if (spec.exhaustive_max > 7) throw TooLarge("exhaustive audit capped at n = 7");
    if (spec.random_count > 0) {
        if (spec.random_min_n < 2 || spec.random_max_n < spec.random_min_n)
            throw InvalidParams("bad random size range");
    }
    const int w = worker_count(workers);

    std::vector<AuditAccum> accums(w);

    // Exhaustive part, sharded by mask range per size.
    for (int n = 2; n <= spec.exhaustive_max; ++n) {
        const uint64_t total = uint64_t{1} << mask_bits(n);
        const uint64_t chunk = (total + w - 1) / w;
        std::vector<std::thread> pool;
        for (int t = 0; t < w; ++t) {
            uint64_t lo = chunk * t, hi = std::min(total, lo + chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, t, n, lo, hi] {
                for (uint64_t mask = lo; mask < hi; ++mask) {
                    auto rows = rows_from_mask(n, mask);
                    if (!mask_connected(n, rows)) continue;
                    audit_one(mask_to_graph(n, mask), accums[t]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Random part; each sample's parameters derive from (seed, index) so the
    // corpus is identical however the indices are scheduled.
    if (spec.random_count > 0) {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        auto run = [&](int t) {
            for (int i = next.fetch_add(1); i < spec.random_count; i = next.fetch_add(1)) {
                std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + i);
                std::uniform_int_distribution<int> size_dist(spec.random_min_n, spec.random_max_n);
                std::uniform_real_distribution<double> p_dist(0.15, 0.95);
                int gn = size_dist(rng);
                double p = p_dist(rng);
                audit_one(random_connected(gn, p, rng()), accums[t]);
            }
        };
        for (int t = 1; t < w; ++t) pool.emplace_back(run, t);
        run(0);
        for (auto& th : pool) th.join();
    }

    AuditAccum total;
    for (auto& a : accums) total.merge(a);
    std::sort(total.violations.begin(), total.violations.end(),
              [](const AuditViolation& a, const AuditViolation& b) {
                  return std::tie(a.graph6, a.bound) < std::tie(b.graph6, b.bound);
              });

    AuditReport rep;
    rep.graphs_audited = total.audited;
    rep.min_slack_landau_odlyzko = total.slack_lo;
    rep.min_slack_chung = total.slack_chung;
    rep.min_slack_improved = total.slack_improved;
    rep.min_slack_harmonic = total.slack_harmonic;
    rep.min_chain_harmonic_vs_diameter = total.chain_hd;
    rep.min_chain_diameter_vs_improved = total.chain_di;
    rep.violations = std::move(total.violations);
    return rep;
}

}  // namespace specgap
