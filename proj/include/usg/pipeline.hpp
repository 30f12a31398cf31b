#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "usg/alignment.hpp"
#include "usg/annotation.hpp"
#include "usg/graph.hpp"
#include "usg/kernels.hpp"

namespace usg {

struct PipelineConfig {
    std::string input;     // annotations jsonl, required
    std::string subwords;  // subword jsonl; empty -> bundled whitespace tokenizer
    std::string rules;     // rule table json; empty -> defaults
    Variant variant = Variant::Ppr;
    ChunkOptions chunking;
    AlignmentOptions alignment;
    std::vector<int> buckets = {400, 600, 800, 1000};
    int bucket_halfwidth = 20;
    bool token_kind_words = false;  // t(d_i) counts words instead of subwords
    bool write_propagation = false;
    PropagationConfig propagation;

    static PipelineConfig load(const std::string& path);
};

struct StageCount {
    std::string stage;
    int64_t count = 0;
};

struct Manifest {
    std::string tool_version;
    std::string config_hash;  // fnv1a-64 of the config file bytes, hex
    bool complete = false;
    std::vector<StageCount> counts;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;

    std::string to_json() const;
};

// ingest -> chunk -> build -> augment -> align -> stats, writing every
// interchange file plus manifest.json into out_dir. Any stage error aborts
// (InputError naming stage and doc), leaving a manifest flagged incomplete.
// Document processing parallelizes over `threads`; outputs are written in
// input order, so results are byte-identical across thread counts.
Manifest run_pipeline(const PipelineConfig& cfg, const std::string& out_dir, int threads = 1);

// fnv1a-64 over a byte string, lower-case hex.
std::string fnv1a_hex(const std::string& bytes);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace usg
