#pragma once

#include "visrank/relatedness.hpp"
#include "visrank/types.hpp"
#include "visrank/unigram.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace visrank {

enum class Scheme { bl, ulm, swe, swe_tdp, tdp_twe, swe_tdp_twe };

// "BL", "ULM", "SWE", "SWE+TDP", "TDP+TWE", "SWE+TDP+TWE"
const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);  // throws ConfigError on unknown names
const std::vector<Scheme>& all_schemes();

struct RerankConfig {
    Scheme scheme = Scheme::bl;
    // Visual factors are skipped when the top-1 confidence is below this;
    // values above 1 disable them everywhere.
    double object_threshold = 0.2;
    bool apply_ulm_stage = true;  // rescore by P(w) before the visual factors
    std::optional<double> tdp_epsilon;  // overrides the table's smoothing epsilon
};

enum class FallbackReason { no_context, below_threshold, object_oov };
const char* fallback_name(FallbackReason r);

struct RankedWord {
    std::string word;
    double final_score = 0.0;
    // multiplicative factors in application order; their product reproduces
    // final_score
    std::vector<std::pair<std::string, double>> factors;
    // embedding spaces in which the word was missing or unusable (sim=0 was
    // substituted): "swe", "twe"
    std::vector<std::string> oov;
};

struct RankedOutput {
    std::string image_id;
    std::vector<RankedWord> ranked;  // sorted by final_score descending
    std::optional<FallbackReason> fallback;
    std::optional<std::string> error;  // set on per-record failures in batch mode
};

struct ModelSet {
    const UnigramModel* ulm = nullptr;
    const EmbeddingSpace* swe = nullptr;  // general-text embeddings
    const EmbeddingSpace* twe = nullptr;  // task-trained embeddings
    const CooccurrenceTable* tdp = nullptr;
};

// Re-rank one image's hypotheses. ctx may be null (no-context fallback).
// Throws ConfigError when a model the scheme requires is missing.
RankedOutput rerank(const HypothesisList& hyps, const VisualContext* ctx,
                    const ModelSet& models, const RerankConfig& config);

// Batch form: output order matches input order; per-record failures become
// error entries instead of aborting the batch.
std::vector<RankedOutput> rerank_batch(
    const std::vector<HypothesisList>& hyps,
    const std::unordered_map<std::string, VisualContext>& contexts, const ModelSet& models,
    const RerankConfig& config);

// keeps at most k hypotheses (no-op when k is 0)
HypothesisList truncate_to_k(const HypothesisList& hyps, std::size_t k);

// One JSON object per line:
// {"image_id":..., "ranked":[{"word":..., "score":..., "factors":{...}}], "fallback": ...}
void write_ranked(const std::vector<RankedOutput>& outputs, std::ostream& out);

struct RankedLoad {
    std::vector<RankedOutput> outputs;
    std::vector<std::pair<std::string, std::string>> header;  // provenance comments
};

RankedLoad load_ranked(std::istream& in);

}  // namespace visrank
