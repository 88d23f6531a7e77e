#pragma once

#include "visrank/types.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace visrank {

// Unigram language model: prob(w) = count(w) / total tokens, with a strictly
// positive floor for out-of-vocabulary words so rescoring never annihilates
// a candidate. Immutable after build; concurrent reads are safe.
class UnigramModel {
public:
    static UnigramModel build(const std::unordered_map<std::string, std::uint64_t>& counts,
                              double oov_floor = kDefaultOovFloor);

    double prob(const std::string& word) const;
    bool contains(const std::string& word) const { return probs_.count(word) != 0; }
    std::uint64_t total_tokens() const { return total_tokens_; }
    double oov_floor() const { return oov_floor_; }
    std::size_t vocab_size() const { return probs_.size(); }

    static constexpr double kDefaultOovFloor = 1e-9;

private:
    std::unordered_map<std::string, double> probs_;
    std::uint64_t total_tokens_ = 0;
    double oov_floor_ = kDefaultOovFloor;
};

// Rescores each hypothesis as score * prob(word) and re-sorts descending
// (stable, so ties keep their incoming order). base_score fields pass
// through unchanged for audit.
HypothesisList ulm_rerank(const HypothesisList& hyps, const UnigramModel& model);

}  // namespace visrank
