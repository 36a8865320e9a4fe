#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gedgeo {

// Undirected attributed graph: symmetric 0/1 adjacency with zero diagonal
// plus one real-valued feature row per node. Immutable by convention after
// construction; all operations below are pure.
struct AttributedGraph {
    std::string id;
    Eigen::MatrixXd adjacency;       // n x n, symmetric, zero diagonal, entries in {0,1}
    Eigen::MatrixXd features;        // n x d
    std::vector<char> is_dummy;      // per node; set only by equalize()

    int node_count() const { return static_cast<int>(adjacency.rows()); }
    int feature_dim() const { return static_cast<int>(features.cols()); }
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adjacency.row(v).sum() + 0.5); }

    // Throws std::invalid_argument when any structural invariant is broken.
    void validate() const;
};

struct GraphDataset {
    std::string name;
    int feature_dim = 0;
    std::vector<AttributedGraph> graphs;

    int size() const { return static_cast<int>(graphs.size()); }
    const AttributedGraph& by_id(const std::string& id) const;
    int index_of(const std::string& id) const;  // -1 when absent

    // Checks shared feature dimension, unique ids, per-graph invariants.
    void validate() const;
};

// Feature rows are compared after quantization to 9 decimal digits, both by
// WL refinement and by the GED substitution rule, so floating noise below
// 5e-10 can never split a color or charge an edit.
std::vector<std::int64_t> quantize_row(const Eigen::MatrixXd& features, int row);
bool rows_equal_quantized(const Eigen::MatrixXd& fa, int ra, const Eigen::MatrixXd& fb, int rb);

// --- constructors -----------------------------------------------------------

AttributedGraph make_graph(std::string id, int n,
                           const std::vector<std::pair<int, int>>& edges,
                           Eigen::MatrixXd features);

// Convenience builders; features default to a single constant column.
AttributedGraph cycle_graph(int n, const std::string& id = "C");
AttributedGraph path_graph(int n, const std::string& id = "P");
AttributedGraph complete_graph(int n, const std::string& id = "K");
AttributedGraph empty_graph(int n, const std::string& id = "E");
AttributedGraph disjoint_union(const AttributedGraph& a, const AttributedGraph& b,
                               const std::string& id = "U");

// Relabels nodes: node i of the result is node perm[i] of g.
AttributedGraph permuted(const AttributedGraph& g, const std::vector<int>& perm);

// --- equalization ------------------------------------------------------------

// Pads the smaller graph with isolated dummy nodes so both have
// max(n_g, n_h) nodes. When padding happens, both feature matrices gain one
// trailing indicator column (0 for real nodes); each dummy row is all zeros
// with a 1 in that column, which keeps dummy/real feature cost strictly
// positive. Equal-size inputs are returned unchanged.
std::pair<AttributedGraph, AttributedGraph> equalize(const AttributedGraph& g,
                                                     const AttributedGraph& h);

// Appends the trailing dummy-indicator column (all zeros) when the graph does
// not have it yet relative to base_dim. Used so one fixed-width encoder can
// consume both raw and equalized graphs.
AttributedGraph with_indicator_column(const AttributedGraph& g);

}  // namespace gedgeo
