#ifndef SPECGAP_SEARCH_HPP
#define SPECGAP_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

// Labeled graphs on n <= 8 vertices are addressed by their upper-triangle
// bitmask in colex order: bit j(j-1)/2 + i is edge (i,j) for i < j. This is
// the same pair order as the graph6 bit stream.
uint64_t graph_to_mask(const Graph& g);
Graph mask_to_graph(int n, uint64_t mask);

// Streams every connected labeled graph on n vertices in ascending mask
// order. 2 <= n <= 8 (TooLarge above, InvalidParams below).
void for_each_connected(int n, const std::function<void(const Graph&)>& fn);

// Minimum adjacency bitstring over all n! relabelings, computed by
// prefix-pruned backtracking. n <= 8.
uint64_t canonical_mask(const Graph& g);

// True iff the graph's own labeling already is the canonical one. Cheaper
// than canonical_mask for counting isomorphism classes: it bails out at the
// first strictly smaller relabeling.
bool is_canonical_mask(const Graph& g);

struct MinimizerInfo {
    std::string graph6;  // canonical labeling
    double lambda1 = 0.0;
    int e_np = 0;        // edges crossing the harmonic sign split
    int np_bridges = 0;  // how many of those crossing edges are bridges
};

struct SearchRecord {
    int n = 0;
    double alpha = 0.0;
    std::vector<MinimizerInfo> minimizers;
    long long graphs_scanned = 0;
    std::optional<long long> distinct_classes;
};

// Exhaustive minimum of lambda1 over all connected labeled graphs on n
// vertices. Deterministic for any worker count; workers = 0 means all
// available cores.
SearchRecord alpha(int n, int workers = 0, bool count_classes = false);

struct SweepRow {
    int r = 0;
    int s = 0;
    double lambda1 = 0.0;
    double scaled = 0.0;  // lambda1 * n^3
};

// lambda1 of every double kite DK(r,s) with 2r+s = n, r >= 2; rows ordered
// by r.
std::vector<SweepRow> sweep_double_kite(int n, int workers = 0);

// Index of the row with minimal lambda1 (ties to the smallest r).
size_t sweep_argmin(const std::vector<SweepRow>& rows);

struct CorpusSpec {
    int exhaustive_max = 6;   // exhaust all connected graphs with 2..this many vertices
    int random_count = 0;     // extra random_connected samples
    int random_min_n = 8;
    int random_max_n = 50;
    uint64_t seed = 0;
};

struct AuditViolation {
    std::string graph6;
    std::string bound;
    double lambda1 = 0.0;
    double value = 0.0;
};

struct AuditReport {
    long long graphs_audited = 0;
    double min_slack_landau_odlyzko = 0.0;
    double min_slack_chung = 0.0;
    double min_slack_improved = 0.0;
    double min_slack_harmonic = 0.0;
    // Pointwise gaps along the improved bound's proof chain:
    // harmonic >= 2/(D sqrt(vol_p vol_n)) >= improved.
    double min_chain_harmonic_vs_diameter = 0.0;
    double min_chain_diameter_vs_improved = 0.0;
    std::vector<AuditViolation> violations;  // empty when every bound holds
};

// Audits every lower bound over the given corpus. Violations are report
// content, never exceptions.
AuditReport audit_corpus(const CorpusSpec& spec, int workers = 0);

}  // namespace specgap

#endif
