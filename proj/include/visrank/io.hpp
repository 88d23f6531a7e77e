#pragma once

#include "visrank/relatedness.hpp"
#include "visrank/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace visrank {

// All loaders accept a leading block of "# key=value" comment lines (the
// provenance header the CLI writes); words and labels are NFC-normalized on
// load, image ids are kept verbatim. Loaders throw ParseError for malformed
// input and ValidationError for contract violations, both carrying the line.

struct HypothesesLoad {
    std::vector<HypothesisList> lists;
    std::size_t reorder_warnings = 0;  // lists re-sorted because input violated ordering
};

HypothesesLoad load_hypotheses(std::istream& in);
void save_hypotheses(const std::vector<HypothesisList>& lists, std::ostream& out);

struct ContextsLoad {
    std::unordered_map<std::string, VisualContext> by_image;
    std::size_t replaced = 0;  // duplicate image ids (later record wins)
    std::size_t reorder_warnings = 0;
};

ContextsLoad load_contexts(std::istream& in);
void save_contexts(const std::vector<VisualContext>& contexts, std::ostream& out);

struct EmbeddingsLoad {
    EmbeddingSpace space;
    std::size_t duplicates_ignored = 0;  // first occurrence wins
    std::size_t zero_norm_words = 0;
};

EmbeddingsLoad load_embeddings(std::istream& in);
void save_embeddings(const EmbeddingSpace& space, std::ostream& out);

std::unordered_map<std::string, std::uint64_t> load_unigram_counts(std::istream& in);
void save_unigram_counts(const std::unordered_map<std::string, std::uint64_t>& counts,
                         std::ostream& out);

CooccurrenceTable load_cooccurrence(std::istream& in);
void save_cooccurrence(const CooccurrenceTable& table, std::ostream& out);

Dictionary load_dictionary(std::istream& in);

// twe-trainer corpus: TSV "word<TAB>object" per line
std::vector<std::pair<std::string, std::string>> load_pairs(std::istream& in);
void save_pairs(const std::vector<std::pair<std::string, std::string>>& pairs,
                std::ostream& out);

// Deterministic provenance header ("# key=value" lines); every writer above
// except save_embeddings emits one when the CLI asks for it.
void write_comment_header(std::ostream& out,
                          const std::vector<std::pair<std::string, std::string>>& kv);

// Comment block of a possibly header-carrying file, parsed into key/value
// pairs (used to recover scheme labels and the cooccurrence epsilon).
std::vector<std::pair<std::string, std::string>> read_comment_header(std::istream& in);

}  // namespace visrank
