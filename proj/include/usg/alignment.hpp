#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "usg/augment.hpp"
#include "usg/dense.hpp"
#include "usg/sparse.hpp"

namespace usg {

// Externally produced subword token, identified only by its character span, so
// the toolkit stays tokenizer-agnostic.
struct SubwordToken {
    int index = 0;
    int64_t char_start = 0;
    int64_t char_end = 0;  // exclusive
};

struct SubwordDoc {
    std::string doc_id;
    std::vector<SubwordToken> subwords;
};

// Subword file JSON-lines: {"doc_id","subwords":[[start,end]...]}.
std::string serialize_subwords(const SubwordDoc& doc);
SubwordDoc parse_subwords(const std::string& line);

// Trivial span tokenizer bundled for tests: maximal runs of non-whitespace bytes.
std::vector<SubwordToken> whitespace_subwords(const std::string& text);

struct AlignmentOptions {
    int max_context = 1024;            // subwords beyond this are tail-truncated
    bool supernode_row_all_ones = true;
};

struct CoverageSummary {
    int64_t covered_tokens = 0;        // subwords aligned to at least one real node
    std::vector<int> uncovered_nodes;  // real nodes with zero aligned subwords
    int64_t truncated_tokens = 0;
};

struct ConstructionMatrix {
    SparseMatrix matrix;  // (N_V+1) x N_T, binary
    bool supernode_all_ones = true;
    CoverageSummary coverage;
};

// c_ij = 1 iff subword j shares at least one byte with a character span of
// node i; the supernode row follows the policy flag (default all ones).
ConstructionMatrix align_tokens_to_nodes(const AugmentedGraph& graph,
                                         const std::vector<SubwordToken>& subwords,
                                         const AlignmentOptions& opts = {});

// Each non-zero row divided by its row sum; zero rows unchanged (and reported
// when the caller asks). Applies to both C -> C' and A -> A-hat.
SparseMatrix degree_normalize_rows(const SparseMatrix& m,
                                   std::vector<int64_t>* zero_rows = nullptr);
Matrix degree_normalize_rows(const Matrix& m, std::vector<int64_t>* zero_rows = nullptr);

// g = C't. Row i is the arithmetic mean of the embeddings of the subwords
// aligned to node i.
Matrix node_init(const SparseMatrix& c_norm, const Matrix& t);
Matrix node_init(const Matrix& c_norm, const Matrix& t);

// C JSON-lines: {"doc_id","matrix":{"rows","cols","coo":...},"supernode_all_ones",
//                "coverage":{"covered_tokens","uncovered_nodes","truncated_tokens"}}
std::string serialize_construction(const std::string& doc_id, const ConstructionMatrix& c);
ConstructionMatrix parse_construction(const std::string& line, std::string* doc_id = nullptr);

}  // namespace usg
