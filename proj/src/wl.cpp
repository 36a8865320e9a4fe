#include "gedgeo/wl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gedgeo {

namespace {

// Assigns canonical ids 0..k-1 to the distinct keys in sorted key order.
template <typename Key>
std::vector<int> canonical_ids(const std::vector<Key>& keys) {
    std::map<Key, int> order;
    for (const auto& k : keys) order.emplace(k, 0);
    int next = 0;
    for (auto& [k, idx] : order) idx = next++;
    std::vector<int> ids(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) ids[i] = order.at(keys[i]);
    return ids;
}

int distinct_count(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

struct JointColoring {
    std::vector<int> colors;
    int rounds;
};

// One refinement pass over an adjacency list; initial colors come from
// quantized feature rows. Runs until one extra round leaves the partition
// unchanged; that confirming round is counted.
JointColoring refine(const Eigen::MatrixXd& adjacency, const Eigen::MatrixXd& features) {
    const int n = static_cast<int>(adjacency.rows());
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adjacency(i, j) != 0.0) nbrs[static_cast<std::size_t>(i)].push_back(j);

    std::vector<std::vector<std::int64_t>> feature_keys;
    feature_keys.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) feature_keys.push_back(quantize_row(features, i));
    std::vector<int> colors = canonical_ids(feature_keys);

    int rounds = 0;
    while (true) {
        std::vector<std::vector<int>> signatures(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            auto& sig = signatures[static_cast<std::size_t>(i)];
            sig.push_back(colors[static_cast<std::size_t>(i)]);
            std::vector<int> around;
            around.reserve(nbrs[static_cast<std::size_t>(i)].size());
            for (int j : nbrs[static_cast<std::size_t>(i)]) around.push_back(colors[static_cast<std::size_t>(j)]);
            std::sort(around.begin(), around.end());
            sig.insert(sig.end(), around.begin(), around.end());
        }
        std::vector<int> next = canonical_ids(signatures);
        ++rounds;
        if (distinct_count(next) == distinct_count(colors)) {
            colors = std::move(next);
            break;
        }
        colors = std::move(next);
    }
    return {std::move(colors), rounds};
}

std::vector<std::pair<int, int>> histogram_of(const std::vector<int>& colors) {
    std::map<int, int> counts;
    for (int c : colors) ++counts[c];
    return {counts.begin(), counts.end()};
}

}  // namespace

WlColoring wl_refine(const AttributedGraph& g) {
    g.validate();
    JointColoring jc = refine(g.adjacency, g.features);
    WlColoring out;
    out.colors = std::move(jc.colors);
    out.rounds = jc.rounds;
    out.histogram = histogram_of(out.colors);
    return out;
}

bool wl_equivalent(const AttributedGraph& g, const AttributedGraph& h) {
    if (g.feature_dim() != h.feature_dim())
        throw std::invalid_argument("wl_equivalent: feature dimension mismatch");
    const AttributedGraph u = disjoint_union(g, h, "wl-joint");
    JointColoring jc = refine(u.adjacency, u.features);
    const int ng = g.node_count();
    std::vector<int> cg(jc.colors.begin(), jc.colors.begin() + ng);
    std::vector<int> ch(jc.colors.begin() + ng, jc.colors.end());
    return histogram_of(cg) == histogram_of(ch);
}

}  // namespace gedgeo
