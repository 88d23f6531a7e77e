#include "visrank/unigram.hpp"

#include "visrank/error.hpp"

#include <algorithm>
#include <limits>

namespace visrank {

UnigramModel UnigramModel::build(const std::unordered_map<std::string, std::uint64_t>& counts,
                                 double oov_floor) {
    if (counts.empty()) throw ValidationError("unigram model: empty counts");
    std::uint64_t total = 0;
    std::uint64_t min_count = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [word, count] : counts) {
        if (count == 0)
            throw ValidationError("unigram model: zero count for word '" + word + "'");
        if (__builtin_add_overflow(total, count, &total))
            throw ValidationError("unigram model: token count overflow");
        min_count = std::min(min_count, count);
    }
    const double min_prob =
        static_cast<double>(min_count) / static_cast<double>(total);
    if (!(oov_floor > 0.0) || oov_floor >= min_prob)
        throw ValidationError(
            "unigram model: oov floor must lie in (0, min in-vocabulary probability)");

    UnigramModel m;
    m.total_tokens_ = total;
    m.oov_floor_ = oov_floor;
    m.probs_.reserve(counts.size());
    for (const auto& [word, count] : counts)
        m.probs_.emplace(word, static_cast<double>(count) / static_cast<double>(total));
    return m;
}

double UnigramModel::prob(const std::string& word) const {
    auto it = probs_.find(word);
    return it == probs_.end() ? oov_floor_ : it->second;
}

HypothesisList ulm_rerank(const HypothesisList& hyps, const UnigramModel& model) {
    HypothesisList out = hyps;
    for (Hypothesis& h : out.hypotheses) h.score *= model.prob(h.word);
    std::stable_sort(out.hypotheses.begin(), out.hypotheses.end(),
                     [](const Hypothesis& a, const Hypothesis& b) { return a.score > b.score; });
    return out;
}

}  // namespace visrank
