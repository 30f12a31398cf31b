#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "usg/dense.hpp"

namespace usg {

struct PropagationConfig {
    double omega = 0.85;  // teleport probability, in (0,1)
    int p = 2;            // aggregation step count, >= 1
    // The propagation polynomial as written uses omega^p * A-hat for the lead
    // term; the power reading uses omega^p * A-hat^p. Both are row-stochastic;
    // neither is endorsed.
    bool literal_formula = true;

    void validate() const;
};

// P = w^p A + (1-w) sum_{i=0}^{p-1} w^i A^i   (literal_formula)
// P = w^p A^p + (1-w) sum_{i=0}^{p-1} w^i A^i (power reading)
// a_hat must be row-stochastic (row sum within 1e-9 of 1).
Matrix propagation_matrix(const Matrix& a_hat, const PropagationConfig& cfg);

struct AttentionConfig {
    int d_model = 64;
    int heads = 4;
    int d_ff = 0;          // 0 means 4 * d_model
    double dropout = 0.0;  // stored for completeness; applied as identity in reference mode
    uint64_t seed = 7;

    int d_k() const { return d_model / heads; }
    int ff_width() const { return d_ff > 0 ? d_ff : 4 * d_model; }
    void validate() const;
};

struct AttentionWeights {
    Matrix w_q, w_k, w_v, w_o;                 // d_model x d_model
    std::vector<double> b_q, b_k, b_v, b_o;    // d_model
};

struct LayerNormWeights {
    std::vector<double> gamma, beta;
};

struct FeedForwardWeights {
    Matrix w1;  // d_model x d_ff
    Matrix w2;  // d_ff x d_model
    std::vector<double> b1, b2;
};

struct EncoderLayerWeights {
    AttentionWeights attn;
    LayerNormWeights ln_attn, ln_ffn;
    FeedForwardWeights ffn;
};

struct GraphEncoderWeights {
    AttentionConfig cfg;
    std::vector<EncoderLayerWeights> layers;

    static GraphEncoderWeights init(const AttentionConfig& cfg, int n_layers = 2);
};

struct EncoderTrace {
    // attention[layer][head] is (N x N), rows sum to 1
    std::vector<std::vector<Matrix>> attention;
    Matrix output;
};

// Two-layer (by default) transformer encoder over node states, with the
// adjacency matrix as attention mask: pairs with a_ij = 0 get -inf logits and
// exactly zero weight after normalization.
EncoderTrace graph_encoder_attention(const Matrix& node_states, const Matrix& adjacency,
                                     const GraphEncoderWeights& weights);

struct CrossAttentionWeights {
    AttentionConfig cfg;
    AttentionWeights attn;

    static CrossAttentionWeights init(const AttentionConfig& cfg);
};

struct CrossAttentionTrace {
    std::vector<Matrix> alpha;         // per head, softmaxed rows (L x N)
    std::vector<Matrix> alpha_prop;    // alpha * P^T, before renormalization
    std::vector<Matrix> alpha_renorm;  // rows renormalized to sum to 1
    Matrix propagation;                // P
    Matrix output;                     // L x d_model
};

// Graph propagated cross-attention: per head, alpha_ij = (y_i Wq)(v_j Wk)^T / sqrt(d_k),
// softmax over j, then alpha' = alpha P^T, renormalized. The value projection
// and the renormalization are gap-fills; the formula gives only alpha and P.
CrossAttentionTrace graph_prop_cross_attention(const Matrix& decoder_states,
                                               const Matrix& node_states,
                                               const Matrix& a_hat,
                                               const CrossAttentionWeights& weights,
                                               const PropagationConfig& pcfg);

struct FusionWeights {
    Matrix w;               // 2*d_model x d_model
    std::vector<double> b;  // d_model

    static FusionWeights init(const AttentionConfig& cfg);
};

// concat(text_ctx, graph_ctx) * W + b + residual, dropout as identity.
Matrix fuse_graph_text(const Matrix& text_ctx, const Matrix& graph_ctx,
                       const Matrix& residual, const FusionWeights& weights);

// Hyperparameters of the full summarization architecture; only used to count
// trainable parameters, never to allocate the real model.
struct ModelConfig {
    int d_model = 768;
    int heads = 12;
    int d_ff = 3072;
    int vocab = 50265;
    int positions = 1026;  // context 1024 plus the tokenizer's two offset slots
    int type_vocab = 1;
    int text_layers = 12;
    int graph_layers = 2;
    int decoder_layers = 6;
    bool tie_lm_head = true;
    bool lm_head_bias = true;
    bool decoder_learned_positions = true;

    static ModelConfig bass_scale() { return {}; }
};

struct ParamCount {
    int64_t total = 0;
    std::vector<std::pair<std::string, int64_t>> breakdown;
};

// Closed-form count of every trainable tensor: text encoder, graph encoder,
// decoder with the extra graph cross-attention and fusion layer, LM head.
ParamCount count_parameters(const ModelConfig& cfg);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Oracle suite behind `usg kernel-check`: every formula checked against an
// independent route (polynomial evaluation, entrywise loops, tiny-model
// enumeration) at the tolerances the properties state.
std::vector<CheckResult> run_kernel_checks(uint64_t seed);

}  // namespace usg
