#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace usg {

// Sentinel head index for the root of a dependency tree.
inline constexpr int kRoot = -1;

struct WordToken {
    int index = 0;  // 0-based position within the sentence
    std::string text;
    int64_t char_start = 0;  // byte offsets into the document text, end exclusive
    int64_t char_end = 0;
    std::string pos;  // Penn Treebank tag
    std::string lemma;
};

struct DependencyEdge {
    int head = kRoot;  // token index within the sentence, or kRoot
    int dependent = 0;
    std::string relation;
    bool extra = false;  // enhanced arc; ignored by tree traversals
};

struct Sentence {
    std::vector<WordToken> tokens;
    std::vector<DependencyEdge> deps;
};

// Token range [first, last], inclusive, within one sentence.
struct Mention {
    int sentence = 0;
    int first = 0;
    int last = 0;
};

struct CorefChain {
    int chain_id = 0;
    std::vector<Mention> mentions;
};

struct AnnotatedDocument {
    std::string doc_id;
    std::string text;
    std::vector<Sentence> sentences;
    std::vector<CorefChain> coref;
};

// A block of consecutive whole sentences; chunks partition the sentence list.
struct Chunk {
    std::string doc_id;
    int chunk_index = 0;
    int begin_sentence = 0;
    int end_sentence = 0;  // half-open
    int word_count = 0;
};

struct IngestError {
    size_t line = 0;  // 1-based line in the input stream, 0 if not line-bound
    std::string doc_id;
    std::string message;
};

struct IngestResult {
    std::vector<AnnotatedDocument> documents;  // only the valid ones
    std::vector<IngestError> errors;           // invalid documents are reported here

    bool ok() const { return errors.empty(); }
};

// Reads the JSON-lines annotation interchange format, one document per line:
//   {"doc_id","text","sentences":[{"tokens":[{"i","text","start","end","pos","lemma"}],
//    "deps":[{"head","dep","rel","extra"}]}],"coref":[{"id","mentions":[{"sent","first","last"}]}]}
IngestResult ingest_annotations(std::istream& in);
IngestResult ingest_annotations_file(const std::string& path);

// All invariant violations of a document, empty when valid.
std::vector<std::string> validate_document(const AnnotatedDocument& doc);

// Canonical single-line JSON in the interchange schema. ingest(serialize(d)) == d.
std::string serialize_document(const AnnotatedDocument& doc);

struct ChunkOptions {
    int target_words = 500;
    // Whether punctuation tokens count towards target_words. The word count of
    // a sentence is its token count; when false, tokens whose POS tag is in
    // punct_pos are excluded.
    bool count_punctuation = true;
    std::vector<std::string> punct_pos = {".", ",", ":", "!", "?", "(", ")"};
};

int sentence_word_count(const Sentence& s, const ChunkOptions& opts);

// Greedy accumulation: sentences are appended to the current chunk until the
// next sentence would push it past target_words; a sentence longer than
// target_words forms its own chunk.
std::vector<Chunk> chunk_document(const AnnotatedDocument& doc, const ChunkOptions& opts = {});

}  // namespace usg
