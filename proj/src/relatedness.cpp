#include "visrank/relatedness.hpp"

#include "visrank/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace visrank {

std::uint64_t CooccurrenceTable::pair(const std::string& word, const std::string& object) const {
    auto it = pair_counts.find({word, object});
    return it == pair_counts.end() ? 0 : it->second;
}

std::uint64_t CooccurrenceTable::ctx(const std::string& object) const {
    auto it = ctx_counts.find(object);
    return it == ctx_counts.end() ? 0 : it->second;
}

void CooccurrenceTable::add(const std::string& word, const std::string& object) {
    ++pair_counts[{word, object}];
    ++ctx_counts[object];
}

double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw std::domain_error("cosine: dimension mismatch");
    const kernels::CosineTerms t = kernels::cosine_terms(u, v);
    if (t.uu == 0.0 || t.vv == 0.0) throw std::domain_error("cosine: zero-norm vector");
    const double c = t.uv / (std::sqrt(t.uu) * std::sqrt(t.vv));
    return std::clamp(c, -1.0, 1.0);
}

double swe_prob(double sim, double p_w, double p_c) {
    if (!(sim > -1.0) || sim > 1.0)
        throw std::domain_error("swe_prob: sim must be in (-1,1]");
    if (!(p_w > 0.0) || p_w > 1.0)
        throw std::domain_error("swe_prob: p_w must be in (0,1]");
    if (!(p_c > 0.0) || !(p_c < 1.0))
        throw std::domain_error("swe_prob: p_c must be in (0,1)");
    const double alpha = std::pow((1.0 - sim) / (1.0 + sim), 1.0 - p_c);
    return std::pow(p_w, alpha);
}

double tdp_prob(const CooccurrenceTable& table, const std::string& word,
                const std::string& object) {
    const std::uint64_t joint = table.pair(word, object);
    const std::uint64_t marginal = table.ctx(object);
    if (joint > 0 && marginal > 0)
        return static_cast<double>(joint) / static_cast<double>(marginal);
    return table.smoothing_epsilon;
}

double twe_prob(double sim, double p_c) {
    if (!(p_c > 0.0) || p_c > 1.0)
        throw std::domain_error("twe_prob: p_c must be in (0,1]");
    return (std::tanh(sim) + 1.0) / (2.0 * p_c);
}

CooccurrenceBuild build_cooccurrence(
    const std::vector<std::pair<std::string, VisualContext>>& annotations,
    double smoothing_epsilon) {
    CooccurrenceBuild out;
    out.table.smoothing_epsilon = smoothing_epsilon;
    for (const auto& [gold, ctx] : annotations) {
        const DetectedObject* top = ctx.top();
        if (!top) {
            ++out.skipped_no_context;
            continue;
        }
        out.table.add(gold, top->label);
    }
    return out;
}

}  // namespace visrank
