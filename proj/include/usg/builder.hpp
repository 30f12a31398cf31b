#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "usg/annotation.hpp"
#include "usg/graph.hpp"

namespace usg {

// Working graph over one chunk's dependency trees. Construction populates one
// node per token; the four pipeline stages below mutate it in place, in order:
//
//   remove_punctuation -> merge_coref_phrase -> merge_nodes -> merge_phrases
//
// finalize() extracts the surviving structure as a SemanticGraph. Nodes can be
// shared between sentence trees once coref chains merge across sentences, so
// the internal structure is a general directed graph; traversals carry visited
// sets and treat each sentence root as a tree root.
class ChunkGraph {
public:
    ChunkGraph(const AnnotatedDocument& doc, const Chunk& chunk);

    // Variant ppr drops tokens whose relation is "punct" or whose POS tag is in
    // the punctuation set; variant src drops only on the POS test. Children of
    // a removed token re-attach to its head; a removed sentence root promotes
    // its smallest-token child.
    void remove_punctuation(Variant v, const MergeRuleTable& rules);

    // Collapse each mention's surviving tokens into one entity node, longest
    // mention first. Variant src then immediately merges all entity nodes of
    // the same chain; ppr defers that to merge_phrases.
    void merge_coref_phrase(Variant v);

    // Rule-driven traversal of the dependency trees: src visits pre-order and a
    // deletion detaches the whole unvisited subtree; ppr visits post-order and
    // a deletion removes the visited node alone. Entity nodes are never deleted.
    void merge_nodes(const MergeRuleTable& rules, Variant v);

    // ppr: merge entity nodes of the same coref chain, then merge non-entity
    // nodes with byte-identical phrases. src: only the phrase merge.
    void merge_phrases(Variant v);

    SemanticGraph finalize(Variant v) const;

    const std::vector<std::string>& warnings() const { return warnings_; }

    // Introspection used by tests.
    size_t live_node_count() const;
    bool token_alive(TokenRef ref) const;
    std::vector<TokenRef> live_tokens() const;
    std::string phrase_of(TokenRef ref) const;  // phrase of the node holding ref

private:
    struct Node {
        std::set<TokenRef> refs;
        std::set<int> chains;
        bool entity = false;
        bool alive = true;
    };

    struct Edge {
        int parent = 0;
        int child = 0;
        std::string relation;
    };

    int node_of(TokenRef ref) const;
    TokenRef min_ref(int node) const;
    std::vector<int> children_of(int node) const;           // deduped, document order
    std::vector<Edge> child_edges(int node) const;          // document order of child
    bool has_relation(int parent, int child, const std::set<std::string>& rels) const;
    void merge_into(int survivor, int victim);
    void kill(int node);                                     // drop node and incident edges
    void delete_subtree(int parent, int node, std::set<int>& visited);
    void delete_alone(int parent, int node);
    void traverse_merge(int parent, const MergeRuleTable& rules, Variant v,
                        std::set<int>& processed, std::set<int>& on_path);
    std::string phrase_string(const Node& n) const;

    const AnnotatedDocument* doc_;
    Chunk chunk_;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<int> roots_;  // node id per sentence of the chunk, -1 when gone
    std::map<TokenRef, int> token_node_;
    std::vector<std::string> warnings_;
};

struct BuildResult {
    SemanticGraph graph;
    std::vector<std::string> warnings;
};

// Runs the full pipeline per chunk and concatenates the chunk graphs with
// disjoint node id spaces; nodes in different chunks are neither merged nor
// connected.
BuildResult build_usg(const AnnotatedDocument& doc, const std::vector<Chunk>& chunks,
                      Variant v, const MergeRuleTable& rules);

}  // namespace usg
