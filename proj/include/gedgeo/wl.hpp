#pragma once

#include <utility>
#include <vector>

#include "gedgeo/graph.hpp"

namespace gedgeo {

// Stable 1-WL coloring. Color ids are canonical: at every round the distinct
// signatures are sorted and numbered in sorted order, so isomorphic inputs get
// identical per-node color multisets, not merely identical partitions.
struct WlColoring {
    std::vector<int> colors;                      // per node
    int rounds = 0;                               // refinement rounds executed
    std::vector<std::pair<int, int>> histogram;   // (color, count), sorted by color
};

WlColoring wl_refine(const AttributedGraph& g);

// Joint refinement over the disjoint union (shared color ids), then multiset
// comparison of the two stable histograms.
bool wl_equivalent(const AttributedGraph& g, const AttributedGraph& h);

}  // namespace gedgeo
