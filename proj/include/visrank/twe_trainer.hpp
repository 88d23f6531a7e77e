#pragma once

#include "visrank/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace visrank {

struct TrainConfig {
    std::size_t dimension = 300;
    std::size_t epochs = 50;
    double learning_rate = 0.025;
    double learning_rate_floor = 1e-4;  // linear decay endpoint
    std::size_t negatives = 5;
    std::uint64_t seed = 0;
    const EmbeddingSpace* init = nullptr;  // optional warm start for the input matrix
};

// (word, object) training pairs; each is a two-token "sentence", so with
// window 1 every pair yields exactly the two events (w -> c) and (c -> w).
// The vocabulary is induced over both columns, no token filtering.
struct TrainCorpus {
    std::vector<std::pair<std::string, std::string>> pairs;
};

// -log sigmoid(center.context) - sum_i log sigmoid(-center.neg_i)
double sgns_loss(std::span<const double> center, std::span<const double> context,
                 const std::vector<std::span<const double>>& negatives);

struct SgnsGradient {
    std::vector<double> center;
    std::vector<double> context;
    std::vector<std::vector<double>> negatives;
};

// Analytic gradient of sgns_loss with respect to every input vector.
SgnsGradient sgns_gradient(std::span<const double> center, std::span<const double> context,
                           const std::vector<std::span<const double>>& negatives);

// Skip-gram with negative sampling over the pair corpus. Single-threaded and
// fully deterministic for a fixed (corpus, config): identical runs produce
// bit-identical embeddings. Negative samples are drawn from the corpus
// unigram distribution raised to the 0.75 power. Returns the input-side
// vectors for the full vocabulary. When epoch_mean_loss is non-null it
// receives one pre-update mean loss per epoch.
EmbeddingSpace train_twe(const TrainCorpus& corpus, const TrainConfig& config,
                         std::vector<double>* epoch_mean_loss = nullptr);

}  // namespace visrank
