#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace visrank {

struct Hypothesis {
    std::string word;
    double score = 0.0;       // current score; rescoring stages update it
    double base_score = 0.0;  // score as loaded, kept for audit

    bool operator==(const Hypothesis&) const = default;
};

// One image's k-best candidate words, sorted by score descending.
struct HypothesisList {
    std::string image_id;
    std::vector<Hypothesis> hypotheses;
    std::optional<std::string> gold;

    bool operator==(const HypothesisList&) const = default;
};

struct DetectedObject {
    std::string label;
    double confidence = 0.0;

    bool operator==(const DetectedObject&) const = default;
};

// Classifier output for one image, sorted by confidence descending.
struct VisualContext {
    std::string image_id;
    std::vector<DetectedObject> objects;

    const DetectedObject* top() const { return objects.empty() ? nullptr : &objects.front(); }

    bool operator==(const VisualContext&) const = default;
};

// word -> dense vector of fixed dimension; rows stored contiguously so the
// kernels can run over them directly.
class EmbeddingSpace {
public:
    EmbeddingSpace() = default;
    explicit EmbeddingSpace(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }
    bool contains(const std::string& word) const { return index_.count(word) != 0; }

    // false when the word is already present (first occurrence wins)
    bool insert(const std::string& word, std::span<const double> v);

    // empty span when absent
    std::span<const double> vec(const std::string& word) const;

    // insertion order; save_embeddings and the trainer rely on it
    const std::vector<std::string>& words() const { return order_; }

    bool operator==(const EmbeddingSpace& other) const;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> order_;
    std::unordered_map<std::string, std::size_t> index_;  // word -> row
    std::vector<double> data_;                            // size() * dim_
};

struct Dictionary {
    std::unordered_set<std::string> entries;  // NFC-normalized

    bool contains(const std::string& normalized_word) const {
        return entries.count(normalized_word) != 0;
    }
};

}  // namespace visrank
