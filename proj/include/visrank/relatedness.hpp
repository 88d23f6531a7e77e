#pragma once

#include "visrank/types.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace visrank {

// (word, object) co-occurrence counts over training images. Only nonzero
// counts are stored; absent means 0. Ordered maps keep serialization and
// iteration deterministic.
struct CooccurrenceTable {
    std::map<std::pair<std::string, std::string>, std::uint64_t> pair_counts;
    std::map<std::string, std::uint64_t> ctx_counts;
    double smoothing_epsilon = 1e-6;

    std::uint64_t pair(const std::string& word, const std::string& object) const;
    std::uint64_t ctx(const std::string& object) const;

    // one training image whose gold word is `word` and top-1 object `object`
    void add(const std::string& word, const std::string& object);

    bool operator==(const CooccurrenceTable&) const = default;
};

// Relatedness converted to the scale the reranker multiplies with.
// SWE/TDP values are probabilities; TWE is an unnormalized score that may
// exceed 1 (it lies in [0, 1/P(c)]).
struct RelatednessScore {
    enum class Kind { swe_probability, tdp_probability, twe_score };

    double value = 0.0;
    Kind kind = Kind::swe_probability;
};

// u.v / (|u| |v|), clamped to [-1,1] against rounding.
// Throws std::domain_error on dimension mismatch or a zero-norm input.
double cosine(std::span<const double> u, std::span<const double> v);

// P(w)^alpha with alpha = ((1-sim)/(1+sim))^(1-p_c).
// Domain: sim in (-1,1], p_w in (0,1], p_c in (0,1).
double swe_prob(double sim, double p_w, double p_c);

// pair(w,c)/ctx(c) when both counts are positive, otherwise the table's
// smoothing epsilon (never annihilates a candidate unless epsilon is 0).
double tdp_prob(const CooccurrenceTable& table, const std::string& word,
                const std::string& object);

// (tanh(sim)+1) / (2 p_c). Domain: p_c in (0,1].
double twe_prob(double sim, double p_c);

struct CooccurrenceBuild {
    CooccurrenceTable table;
    std::size_t skipped_no_context = 0;
};

// pair_counts(w,c) = #records with gold w and top-1 object c;
// ctx_counts(c) = #records with top-1 object c. Records without any detected
// object are skipped and counted.
CooccurrenceBuild build_cooccurrence(
    const std::vector<std::pair<std::string, VisualContext>>& annotations,
    double smoothing_epsilon = 1e-6);

}  // namespace visrank
