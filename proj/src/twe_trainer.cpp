#include "visrank/twe_trainer.hpp"

#include "visrank/error.hpp"
#include "visrank/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace visrank {
namespace {

double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// -log sigmoid(x) = softplus(-x), computed without overflow
double neg_log_sigmoid(double x) {
    if (x >= 0.0) return std::log1p(std::exp(-x));
    return -x + std::log1p(std::exp(x));
}

void check_dims(std::span<const double> center, std::span<const double> context,
                const std::vector<std::span<const double>>& negatives) {
    if (center.size() != context.size())
        throw std::domain_error("sgns: center/context dimension mismatch");
    for (const auto& n : negatives)
        if (n.size() != center.size())
            throw std::domain_error("sgns: negative sample dimension mismatch");
}

// uniform double in [0,1) with 53 random bits; avoids distribution objects so
// draws are identical across standard libraries
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double sgns_loss(std::span<const double> center, std::span<const double> context,
                 const std::vector<std::span<const double>>& negatives) {
    check_dims(center, context, negatives);
    double loss = neg_log_sigmoid(kernels::dot(center, context));
    for (const auto& neg : negatives) loss += neg_log_sigmoid(-kernels::dot(center, neg));
    return loss;
}

SgnsGradient sgns_gradient(std::span<const double> center, std::span<const double> context,
                           const std::vector<std::span<const double>>& negatives) {
    check_dims(center, context, negatives);
    const std::size_t dim = center.size();
    SgnsGradient g;
    g.center.assign(dim, 0.0);
    g.context.assign(dim, 0.0);
    g.negatives.assign(negatives.size(), std::vector<double>(dim, 0.0));

    // d/dx of -log sigmoid(x) is sigmoid(x) - 1; for the -x terms it is sigmoid(x)
    const double g_pos = sigmoid(kernels::dot(center, context)) - 1.0;
    kernels::axpy(g_pos, context, g.center);
    kernels::axpy(g_pos, center, g.context);
    for (std::size_t i = 0; i < negatives.size(); ++i) {
        const double g_neg = sigmoid(kernels::dot(center, negatives[i]));
        kernels::axpy(g_neg, negatives[i], g.center);
        kernels::axpy(g_neg, center, g.negatives[i]);
    }
    return g;
}

EmbeddingSpace train_twe(const TrainCorpus& corpus, const TrainConfig& config,
                         std::vector<double>* epoch_mean_loss) {
    if (corpus.pairs.empty()) throw ValidationError("twe trainer: empty corpus");
    if (config.dimension == 0) throw ConfigError("twe trainer: dimension must be positive");
    if (config.init && config.init->dimension() != config.dimension)
        throw ConfigError("twe trainer: init dimension " +
                          std::to_string(config.init->dimension()) + " != configured " +
                          std::to_string(config.dimension));
    if (!(config.learning_rate > 0.0))
        throw ConfigError("twe trainer: learning rate must be positive");
    if (config.learning_rate_floor >= config.learning_rate)
        throw ConfigError("twe trainer: decay endpoint must be below the starting rate");

    // vocabulary in first-appearance order, counting each pair as two tokens
    std::vector<std::string> vocab;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::uint64_t> token_counts;
    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = index.emplace(tok, vocab.size());
        if (inserted) {
            vocab.push_back(tok);
            token_counts.push_back(0);
        }
        ++token_counts[it->second];
        return it->second;
    };
    std::vector<std::pair<std::size_t, std::size_t>> events;  // (center, context)
    events.reserve(corpus.pairs.size() * 2);
    for (const auto& [word, object] : corpus.pairs) {
        const std::size_t w = intern(word);
        const std::size_t c = intern(object);
        events.emplace_back(w, c);
        events.emplace_back(c, w);
    }
    const std::size_t vocab_size = vocab.size();
    const std::size_t dim = config.dimension;

    // negative-sampling distribution: count^0.75, sampled by binary search
    // over the cumulative weights
    std::vector<double> cumulative(vocab_size);
    double acc = 0.0;
    for (std::size_t i = 0; i < vocab_size; ++i) {
        acc += std::pow(static_cast<double>(token_counts[i]), 0.75);
        cumulative[i] = acc;
    }

    std::mt19937_64 rng(config.seed);
    std::vector<double> input(vocab_size * dim);
    std::vector<double> output(vocab_size * dim, 0.0);
    const double span = 0.5 / static_cast<double>(dim);
    for (std::size_t i = 0; i < vocab_size; ++i) {
        const std::span<const double> warm =
            config.init ? config.init->vec(vocab[i]) : std::span<const double>{};
        if (!warm.empty()) {
            std::copy(warm.begin(), warm.end(), input.begin() + i * dim);
        } else {
            for (std::size_t d = 0; d < dim; ++d)
                input[i * dim + d] = -span + uniform01(rng) * 2.0 * span;
        }
    }

    auto sample_negative = [&]() {
        const double u = uniform01(rng) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
            it - cumulative.begin(), static_cast<std::ptrdiff_t>(vocab_size) - 1));
    };

    const std::size_t total_updates = config.epochs * events.size();
    std::size_t update = 0;
    std::vector<std::size_t> negs;
    std::vector<double> grad_center(dim);
    if (epoch_mean_loss) epoch_mean_loss->clear();
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        double epoch_loss = 0.0;
        for (const auto& [center, context] : events) {
            const double lr =
                total_updates > 1
                    ? config.learning_rate -
                          (config.learning_rate - config.learning_rate_floor) *
                              static_cast<double>(update) / static_cast<double>(total_updates - 1)
                    : config.learning_rate;
            ++update;

            negs.clear();
            for (std::size_t k = 0; k < config.negatives; ++k) {
                const std::size_t draw = sample_negative();
                if (draw == context) continue;  // word2vec convention: skip, don't redraw
                negs.push_back(draw);
            }

            std::span<double> in(input.data() + center * dim, dim);
            std::span<double> out_pos(output.data() + context * dim, dim);
            std::fill(grad_center.begin(), grad_center.end(), 0.0);

            double event_loss = 0.0;
            const double dot_pos = kernels::dot(in, out_pos);
            event_loss += neg_log_sigmoid(dot_pos);
            const double g_pos = sigmoid(dot_pos) - 1.0;
            kernels::axpy(g_pos, out_pos, grad_center);
            kernels::axpy(-lr * g_pos, in, out_pos);
            for (const std::size_t neg : negs) {
                std::span<double> out_neg(output.data() + neg * dim, dim);
                const double dot_neg = kernels::dot(in, out_neg);
                event_loss += neg_log_sigmoid(-dot_neg);
                const double g_neg = sigmoid(dot_neg);
                kernels::axpy(g_neg, out_neg, grad_center);
                kernels::axpy(-lr * g_neg, in, out_neg);
            }
            kernels::axpy(-lr, grad_center, in);
            epoch_loss += event_loss;
        }
        if (epoch_mean_loss)
            epoch_mean_loss->push_back(epoch_loss / static_cast<double>(events.size()));
    }

    EmbeddingSpace space(dim);
    for (std::size_t i = 0; i < vocab_size; ++i)
        space.insert(vocab[i], {input.data() + i * dim, dim});
    return space;
}

}  // namespace visrank
