#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "usg/alignment.hpp"
#include "usg/graph.hpp"

namespace usg {

// Per-document measurements feeding the bucketed statistics.
struct DocGraphRecord {
    std::string doc_id;
    int64_t node_count = 0;      // excluding the supernode
    int64_t edge_count = 0;      // base edges, pre-augmentation
    int64_t token_count = 0;     // t(d_i)
    int64_t covered_tokens = 0;  // subwords aligned to at least one node
};

DocGraphRecord measure_document(const SemanticGraph& g,
                                const std::vector<SubwordToken>& subwords);

struct BucketStats {
    int bucket = 0;  // T
    int halfwidth = 20;
    int64_t doc_count = 0;  // |D_T| under |T - t(d_i)| <= halfwidth
    // Means are meaningful only when doc_count > 0.
    double mean_tokens = 0.0;
    double mean_nodes = 0.0;
    double mean_edges = 0.0;
    double mean_covered = 0.0;
};

std::vector<BucketStats> graph_stats(const std::vector<DocGraphRecord>& records,
                                     const std::vector<int>& buckets = {400, 600, 800, 1000},
                                     int halfwidth = 20);

// Percentage increase of b over a, rounded half-up to a whole percent
// (117 -> 129 reports 10).
int percent_increase(double a, double b);

struct IncreaseRow {
    int bucket = 0;
    int nodes_pct = 0;
    int edges_pct = 0;
    int covered_pct = 0;
};

// Per bucket and quantity, the increase of b over a. Buckets must match.
std::vector<IncreaseRow> compare_graph_sets(const std::vector<BucketStats>& a,
                                            const std::vector<BucketStats>& b);

std::string stats_to_json(const std::vector<BucketStats>& stats, const std::string& label);
std::vector<BucketStats> stats_from_json(const std::string& text, std::string* label = nullptr);

// Aligned plain-text table: one column group per bucket with the node, edge
// and covered-token means; optionally a second set plus its increase row.
std::string render_stats_table(const std::vector<BucketStats>& stats, const std::string& label);
std::string render_comparison(const std::vector<BucketStats>& a, const std::string& label_a,
                              const std::vector<BucketStats>& b, const std::string& label_b);

std::string comparison_to_json(const std::vector<IncreaseRow>& rows);

}  // namespace usg
