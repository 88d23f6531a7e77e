#include "visrank/types.hpp"

#include <stdexcept>

namespace visrank {

bool EmbeddingSpace::insert(const std::string& word, std::span<const double> v) {
    if (v.size() != dim_) throw std::domain_error("vector dimension mismatch");
    if (index_.count(word)) return false;
    index_.emplace(word, order_.size());
    order_.push_back(word);
    data_.insert(data_.end(), v.begin(), v.end());
    return true;
}

std::span<const double> EmbeddingSpace::vec(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return {};
    return {data_.data() + it->second * dim_, dim_};
}

bool EmbeddingSpace::operator==(const EmbeddingSpace& other) const {
    return dim_ == other.dim_ && order_ == other.order_ && data_ == other.data_;
}

}  // namespace visrank
