#include "gedgeo/graph.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace gedgeo {

namespace {
constexpr double kQuantScale = 1e9;
}

int AttributedGraph::edge_count() const {
    return static_cast<int>(adjacency.sum() / 2.0 + 0.5);
}

void AttributedGraph::validate() const {
    const int n = node_count();
    if (n < 1) throw std::invalid_argument("graph '" + id + "': node count must be >= 1");
    if (adjacency.cols() != n)
        throw std::invalid_argument("graph '" + id + "': adjacency must be square");
    if (features.rows() != n)
        throw std::invalid_argument("graph '" + id + "': one feature row per node required");
    if (features.cols() < 1)
        throw std::invalid_argument("graph '" + id + "': feature dimension must be >= 1");
    if (!is_dummy.empty() && static_cast<int>(is_dummy.size()) != n)
        throw std::invalid_argument("graph '" + id + "': is_dummy size mismatch");
    for (int i = 0; i < n; ++i) {
        if (adjacency(i, i) != 0.0)
            throw std::invalid_argument("graph '" + id + "': nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            const double a = adjacency(i, j);
            if (a != 0.0 && a != 1.0)
                throw std::invalid_argument("graph '" + id + "': adjacency entries must be 0/1");
            if (a != adjacency(j, i))
                throw std::invalid_argument("graph '" + id + "': adjacency must be symmetric");
        }
        if (!features.row(i).allFinite())
            throw std::invalid_argument("graph '" + id + "': non-finite feature");
    }
    for (int i = 0; i < n; ++i) {
        if (!is_dummy.empty() && is_dummy[i] && degree(i) != 0)
            throw std::invalid_argument("graph '" + id + "': dummy node with nonzero degree");
    }
}

const AttributedGraph& GraphDataset::by_id(const std::string& gid) const {
    const int idx = index_of(gid);
    if (idx < 0) throw std::invalid_argument("dataset '" + name + "': no graph with id '" + gid + "'");
    return graphs[static_cast<std::size_t>(idx)];
}

int GraphDataset::index_of(const std::string& gid) const {
    for (int i = 0; i < size(); ++i)
        if (graphs[static_cast<std::size_t>(i)].id == gid) return i;
    return -1;
}

void GraphDataset::validate() const {
    std::unordered_set<std::string> ids;
    for (const auto& g : graphs) {
        g.validate();
        if (g.feature_dim() != feature_dim)
            throw std::invalid_argument("dataset '" + name + "': graph '" + g.id +
                                        "' feature dim differs from dataset feature_dim");
        if (!ids.insert(g.id).second)
            throw std::invalid_argument("dataset '" + name + "': duplicate id '" + g.id + "'");
    }
}

std::vector<std::int64_t> quantize_row(const Eigen::MatrixXd& features, int row) {
    std::vector<std::int64_t> key(static_cast<std::size_t>(features.cols()));
    for (int c = 0; c < features.cols(); ++c)
        key[static_cast<std::size_t>(c)] =
            static_cast<std::int64_t>(std::llround(features(row, c) * kQuantScale));
    return key;
}

bool rows_equal_quantized(const Eigen::MatrixXd& fa, int ra, const Eigen::MatrixXd& fb, int rb) {
    if (fa.cols() != fb.cols()) return false;
    for (int c = 0; c < fa.cols(); ++c) {
        if (std::llround(fa(ra, c) * kQuantScale) != std::llround(fb(rb, c) * kQuantScale))
            return false;
    }
    return true;
}

AttributedGraph make_graph(std::string id, int n,
                           const std::vector<std::pair<int, int>>& edges,
                           Eigen::MatrixXd features) {
    AttributedGraph g;
    g.id = std::move(id);
    g.adjacency = Eigen::MatrixXd::Zero(n, n);
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw std::invalid_argument("graph '" + g.id + "': bad edge (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        g.adjacency(i, j) = 1.0;
        g.adjacency(j, i) = 1.0;
    }
    g.features = std::move(features);
    g.is_dummy.assign(static_cast<std::size_t>(n), 0);
    g.validate();
    return g;
}

namespace {
Eigen::MatrixXd unit_features(int n) { return Eigen::MatrixXd::Zero(n, 1); }
}  // namespace

AttributedGraph cycle_graph(int n, const std::string& id) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    if (n == 1) edges.clear();
    if (n == 2) edges = {{0, 1}};
    return make_graph(id, n, edges, unit_features(n));
}

AttributedGraph path_graph(int n, const std::string& id) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(id, n, edges, unit_features(n));
}

AttributedGraph complete_graph(int n, const std::string& id) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(id, n, edges, unit_features(n));
}

AttributedGraph empty_graph(int n, const std::string& id) {
    return make_graph(id, n, {}, unit_features(n));
}

AttributedGraph disjoint_union(const AttributedGraph& a, const AttributedGraph& b,
                               const std::string& id) {
    if (a.feature_dim() != b.feature_dim())
        throw std::invalid_argument("disjoint_union: feature dimension mismatch");
    const int na = a.node_count(), nb = b.node_count();
    AttributedGraph g;
    g.id = id;
    g.adjacency = Eigen::MatrixXd::Zero(na + nb, na + nb);
    g.adjacency.topLeftCorner(na, na) = a.adjacency;
    g.adjacency.bottomRightCorner(nb, nb) = b.adjacency;
    g.features.resize(na + nb, a.feature_dim());
    g.features.topRows(na) = a.features;
    g.features.bottomRows(nb) = b.features;
    g.is_dummy.assign(static_cast<std::size_t>(na + nb), 0);
    for (int i = 0; i < na; ++i) g.is_dummy[static_cast<std::size_t>(i)] = a.is_dummy.empty() ? 0 : a.is_dummy[static_cast<std::size_t>(i)];
    for (int i = 0; i < nb; ++i) g.is_dummy[static_cast<std::size_t>(na + i)] = b.is_dummy.empty() ? 0 : b.is_dummy[static_cast<std::size_t>(i)];
    g.validate();
    return g;
}

AttributedGraph permuted(const AttributedGraph& g, const std::vector<int>& perm) {
    const int n = g.node_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permuted: permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("permuted: not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    AttributedGraph out;
    out.id = g.id;
    out.adjacency.resize(n, n);
    out.features.resize(n, g.feature_dim());
    out.is_dummy.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        out.features.row(i) = g.features.row(perm[static_cast<std::size_t>(i)]);
        if (!g.is_dummy.empty())
            out.is_dummy[static_cast<std::size_t>(i)] = g.is_dummy[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        for (int j = 0; j < n; ++j)
            out.adjacency(i, j) = g.adjacency(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return out;
}

namespace {

AttributedGraph pad_with_dummies(const AttributedGraph& g, int target_n) {
    // Assumes the indicator column is already appended.
    const int n = g.node_count();
    const int d = g.feature_dim();
    AttributedGraph out;
    out.id = g.id;
    out.adjacency = Eigen::MatrixXd::Zero(target_n, target_n);
    out.adjacency.topLeftCorner(n, n) = g.adjacency;
    out.features = Eigen::MatrixXd::Zero(target_n, d);
    out.features.topRows(n) = g.features;
    out.is_dummy.assign(static_cast<std::size_t>(target_n), 0);
    for (int i = 0; i < n; ++i)
        out.is_dummy[static_cast<std::size_t>(i)] = g.is_dummy.empty() ? 0 : g.is_dummy[static_cast<std::size_t>(i)];
    for (int i = n; i < target_n; ++i) {
        out.features(i, d - 1) = 1.0;  // reserved dummy indicator
        out.is_dummy[static_cast<std::size_t>(i)] = 1;
    }
    return out;
}

}  // namespace

AttributedGraph with_indicator_column(const AttributedGraph& g) {
    AttributedGraph out = g;
    out.features.conservativeResize(Eigen::NoChange, g.feature_dim() + 1);
    out.features.col(g.feature_dim()).setZero();
    for (int i = 0; i < g.node_count(); ++i)
        if (!g.is_dummy.empty() && g.is_dummy[static_cast<std::size_t>(i)])
            out.features(i, g.feature_dim()) = 1.0;
    return out;
}

std::pair<AttributedGraph, AttributedGraph> equalize(const AttributedGraph& g,
                                                     const AttributedGraph& h) {
    if (g.feature_dim() != h.feature_dim())
        throw std::invalid_argument("equalize: feature dimension mismatch");
    if (g.node_count() == h.node_count()) return {g, h};
    const int target = std::max(g.node_count(), h.node_count());
    AttributedGraph ge = with_indicator_column(g);
    AttributedGraph he = with_indicator_column(h);
    return {pad_with_dummies(ge, target), pad_with_dummies(he, target)};
}

}  // namespace gedgeo
