#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace usg {

struct TokenRef {
    int sentence = 0;
    int token = 0;

    auto operator<=>(const TokenRef&) const = default;
};

// The two graph construction variants of the replication: the source-compliant
// build (src) and the paper-compliant build (ppr). They differ in punctuation
// removal, coref chain merge timing, traversal order and deletion scope.
enum class Variant { Src, Ppr };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct ByteSpan {
    int64_t begin = 0;
    int64_t end = 0;  // exclusive

    auto operator<=>(const ByteSpan&) const = default;
};

struct GraphNode {
    int node_id = 0;
    std::vector<TokenRef> token_refs;   // sorted by (sentence, token)
    std::string phrase;                 // member texts joined by single spaces, document order
    std::vector<std::string> pos_tags;  // one per member token, document order
    bool is_entity = false;             // originated from a coreference mention
    std::vector<ByteSpan> char_spans;   // union of member token spans, sorted, coalesced
};

struct GraphEdge {
    int source = 0;
    int target = 0;
    std::string relation;

    auto operator<=>(const GraphEdge&) const = default;
};

struct SemanticGraph {
    std::string doc_id;
    Variant variant = Variant::Ppr;
    int chunk_count = 1;
    std::vector<GraphNode> nodes;  // node_id == index
    std::vector<GraphEdge> edges;  // sorted, unique
};

struct MergeRuleTable {
    std::set<std::string> relations_merge_into_parent;
    std::set<std::string> relations_delete_subtree;
    std::set<std::string> pos_punct_set;

    // The paper omits the linguistic rules of the merge step; this table is a
    // declared stand-in that bundles function words into their head's phrase.
    static MergeRuleTable defaults();

    // The three sets must be pairwise disjoint.
    void validate() const;
};

MergeRuleTable load_rules(const std::string& path);
MergeRuleTable parse_rules(const std::string& text);
std::string serialize_rules(const MergeRuleTable& rules);

// Graph JSON-lines:
//   {"doc_id","variant","nodes":[{"id","phrase","entity","tokens":[[sent,idx]...],
//    "spans":[[s,e]...]}],"edges":[[src,dst,"rel"]...]}
std::string serialize_graph(const SemanticGraph& g);
SemanticGraph parse_graph(const std::string& line);

}  // namespace usg
