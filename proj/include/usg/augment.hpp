#pragma once

#include <string>
#include <vector>

#include "usg/graph.hpp"
#include "usg/sparse.hpp"

namespace usg {

enum class EdgeKind { Original, Reverse, TwoHop, SelfLoop, Supernode };

std::string to_string(EdgeKind k);
EdgeKind edge_kind_from_string(const std::string& s);

struct AugmentedGraph {
    SemanticGraph base;
    int supernode_id = 0;        // == base.nodes.size(), appended last
    SparseMatrix adjacency;      // (N_V+1) x (N_V+1), entries in {0,1}
    std::vector<EdgeKind> kinds; // parallel to adjacency.coo
};

// Ordered construction: symmetrize, add two-hop shortcuts over the symmetrized
// edges, add self-loops, then append a supernode connected bidirectionally to
// every node. The supernode is excluded from the shortcut computation.
AugmentedGraph augment_graph(const SemanticGraph& g);

// adj JSON-lines: the base graph plus
//   {"supernode","adjacency":{"rows","cols","coo":[[i,j,v]...]},"kinds":[...]}
std::string serialize_augmented(const AugmentedGraph& g);
AugmentedGraph parse_augmented(const std::string& line);

}  // namespace usg
