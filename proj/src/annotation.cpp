#include "usg/annotation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "usg/errors.hpp"

namespace usg {

namespace {

using nlohmann::json;

AnnotatedDocument document_from_json(const json& j) {
    AnnotatedDocument doc;
    doc.doc_id = j.at("doc_id").get<std::string>();
    doc.text = j.at("text").get<std::string>();
    for (const auto& js : j.at("sentences")) {
        Sentence s;
        for (const auto& jt : js.at("tokens")) {
            WordToken t;
            t.index = jt.at("i").get<int>();
            t.text = jt.at("text").get<std::string>();
            t.char_start = jt.at("start").get<int64_t>();
            t.char_end = jt.at("end").get<int64_t>();
            t.pos = jt.at("pos").get<std::string>();
            t.lemma = jt.value("lemma", std::string{});
            s.tokens.push_back(std::move(t));
        }
        for (const auto& jd : js.at("deps")) {
            DependencyEdge e;
            e.head = jd.at("head").get<int>();
            e.dependent = jd.at("dep").get<int>();
            e.relation = jd.at("rel").get<std::string>();
            e.extra = jd.value("extra", false);
            s.deps.push_back(std::move(e));
        }
        doc.sentences.push_back(std::move(s));
    }
    if (j.contains("coref")) {
        for (const auto& jc : j.at("coref")) {
            CorefChain chain;
            chain.chain_id = jc.at("id").get<int>();
            for (const auto& jm : jc.at("mentions")) {
                chain.mentions.push_back({jm.at("sent").get<int>(), jm.at("first").get<int>(),
                                          jm.at("last").get<int>()});
            }
            doc.coref.push_back(std::move(chain));
        }
    }
    return doc;
}

}  // namespace

std::vector<std::string> validate_document(const AnnotatedDocument& doc) {
    std::vector<std::string> errs;
    auto fail = [&](const std::string& msg) { errs.push_back(msg); };

    if (doc.doc_id.empty()) fail("empty doc_id");
    const int64_t text_len = static_cast<int64_t>(doc.text.size());

    int64_t prev_end = -1;
    for (size_t si = 0; si < doc.sentences.size(); ++si) {
        const Sentence& s = doc.sentences[si];
        const std::string where = "sentence " + std::to_string(si);
        if (s.tokens.empty()) {
            fail(where + ": empty sentence");
            continue;
        }
        const int n = static_cast<int>(s.tokens.size());
        for (int ti = 0; ti < n; ++ti) {
            const WordToken& t = s.tokens[static_cast<size_t>(ti)];
            const std::string tok = where + " token " + std::to_string(ti);
            if (t.index != ti) fail(tok + ": index field " + std::to_string(t.index) + " out of order");
            if (t.char_start >= t.char_end) fail(tok + ": empty or inverted span");
            if (t.char_start < 0 || t.char_end > text_len) {
                fail(tok + ": span outside document text");
                continue;
            }
            if (t.char_start < prev_end)
                fail(tok + ": span not strictly after the previous token");
            prev_end = std::max(prev_end, t.char_end);
            const std::string actual =
                doc.text.substr(static_cast<size_t>(t.char_start),
                                static_cast<size_t>(t.char_end - t.char_start));
            if (actual != t.text)
                fail("span mismatch: doc " + doc.doc_id + " " + tok + ": token text \"" + t.text +
                     "\" != document substring \"" + actual + "\"");
        }

        // Dependency tree: exactly one non-extra head per token, one root,
        // and no cycles among the non-extra edges.
        std::vector<int> head_of(static_cast<size_t>(n), -2);
        int root_count = 0;
        for (const DependencyEdge& e : s.deps) {
            if (e.dependent < 0 || e.dependent >= n) {
                fail(where + ": dependency edge with dependent " + std::to_string(e.dependent) +
                     " out of range");
                continue;
            }
            if (e.head < kRoot || e.head >= n) {
                fail(where + ": dependency edge with head " + std::to_string(e.head) + " out of range");
                continue;
            }
            if (e.extra) continue;
            if (head_of[static_cast<size_t>(e.dependent)] != -2) {
                fail(where + ": tree violation: two head edges for dependent " +
                     std::to_string(e.dependent));
                continue;
            }
            head_of[static_cast<size_t>(e.dependent)] = e.head;
            if (e.head == kRoot) ++root_count;
        }
        bool edges_complete = true;
        for (int ti = 0; ti < n; ++ti) {
            if (head_of[static_cast<size_t>(ti)] == -2) {
                fail(where + ": tree violation: token " + std::to_string(ti) + " has no head edge");
                edges_complete = false;
            }
        }
        if (root_count != 1)
            fail(where + ": tree violation: " + std::to_string(root_count) + " root edges");
        if (edges_complete && root_count == 1) {
            for (int ti = 0; ti < n; ++ti) {
                int cur = ti, steps = 0;
                while (cur != kRoot && steps <= n) {
                    cur = head_of[static_cast<size_t>(cur)];
                    ++steps;
                }
                if (cur != kRoot) {
                    fail(where + ": dependency cycle reachable from token " + std::to_string(ti));
                    break;
                }
            }
        }
    }

    for (const CorefChain& chain : doc.coref) {
        const std::string where = "coref chain " + std::to_string(chain.chain_id);
        if (chain.mentions.size() < 2) fail(where + ": fewer than 2 mentions");
        for (const Mention& m : chain.mentions) {
            if (m.sentence < 0 || m.sentence >= static_cast<int>(doc.sentences.size())) {
                fail(where + ": mention sentence " + std::to_string(m.sentence) + " out of range");
                continue;
            }
            const int n = static_cast<int>(doc.sentences[static_cast<size_t>(m.sentence)].tokens.size());
            if (m.first < 0 || m.last < m.first || m.last >= n)
                fail(where + ": mention range [" + std::to_string(m.first) + "," +
                     std::to_string(m.last) + "] invalid in sentence " + std::to_string(m.sentence));
        }
    }
    return errs;
}

IngestResult ingest_annotations(std::istream& in) {
    IngestResult result;
    std::set<std::string> seen_ids;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            result.errors.push_back({line_no, "", std::string("malformed line: ") + e.what()});
            continue;
        }
        AnnotatedDocument doc;
        try {
            doc = document_from_json(j);
        } catch (const json::exception& e) {
            result.errors.push_back({line_no, j.value("doc_id", std::string{}),
                                     std::string("bad field: ") + e.what()});
            continue;
        }
        if (!seen_ids.insert(doc.doc_id).second) {
            result.errors.push_back({line_no, doc.doc_id, "duplicate doc_id"});
            continue;
        }
        std::vector<std::string> errs = validate_document(doc);
        if (!errs.empty()) {
            for (const std::string& e : errs) result.errors.push_back({line_no, doc.doc_id, e});
            continue;
        }
        result.documents.push_back(std::move(doc));
    }
    return result;
}

IngestResult ingest_annotations_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open: " + path);
    return ingest_annotations(in);
}

std::string serialize_document(const AnnotatedDocument& doc) {
    nlohmann::ordered_json j;
    j["doc_id"] = doc.doc_id;
    j["text"] = doc.text;
    auto sentences = nlohmann::ordered_json::array();
    for (const Sentence& s : doc.sentences) {
        nlohmann::ordered_json js;
        auto tokens = nlohmann::ordered_json::array();
        for (const WordToken& t : s.tokens) {
            tokens.push_back({{"i", t.index},
                              {"text", t.text},
                              {"start", t.char_start},
                              {"end", t.char_end},
                              {"pos", t.pos},
                              {"lemma", t.lemma}});
        }
        js["tokens"] = std::move(tokens);
        auto deps = nlohmann::ordered_json::array();
        for (const DependencyEdge& e : s.deps) {
            nlohmann::ordered_json jd{{"head", e.head}, {"dep", e.dependent}, {"rel", e.relation}};
            if (e.extra) jd["extra"] = true;
            deps.push_back(std::move(jd));
        }
        js["deps"] = std::move(deps);
        sentences.push_back(std::move(js));
    }
    j["sentences"] = std::move(sentences);
    auto coref = nlohmann::ordered_json::array();
    for (const CorefChain& chain : doc.coref) {
        auto mentions = nlohmann::ordered_json::array();
        for (const Mention& m : chain.mentions)
            mentions.push_back({{"sent", m.sentence}, {"first", m.first}, {"last", m.last}});
        coref.push_back({{"id", chain.chain_id}, {"mentions", std::move(mentions)}});
    }
    j["coref"] = std::move(coref);
    return j.dump();
}

int sentence_word_count(const Sentence& s, const ChunkOptions& opts) {
    if (opts.count_punctuation) return static_cast<int>(s.tokens.size());
    int count = 0;
    for (const WordToken& t : s.tokens) {
        if (std::find(opts.punct_pos.begin(), opts.punct_pos.end(), t.pos) == opts.punct_pos.end())
            ++count;
    }
    return count;
}

std::vector<Chunk> chunk_document(const AnnotatedDocument& doc, const ChunkOptions& opts) {
    if (doc.sentences.empty()) throw InputError("chunk_document: document has no sentences");
    if (opts.target_words < 1) throw InputError("chunk_document: target_words must be >= 1");

    std::vector<Chunk> chunks;
    Chunk cur{doc.doc_id, 0, 0, 0, 0};
    for (size_t si = 0; si < doc.sentences.size(); ++si) {
        const int words = sentence_word_count(doc.sentences[si], opts);
        const bool chunk_open = cur.end_sentence > cur.begin_sentence;
        if (chunk_open && cur.word_count + words > opts.target_words) {
            chunks.push_back(cur);
            cur = Chunk{doc.doc_id, static_cast<int>(chunks.size()), static_cast<int>(si),
                        static_cast<int>(si), 0};
        }
        cur.end_sentence = static_cast<int>(si) + 1;
        cur.word_count += words;
    }
    chunks.push_back(cur);
    return chunks;
}

}  // namespace usg
