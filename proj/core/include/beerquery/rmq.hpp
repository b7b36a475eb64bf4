#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace beerquery {

// Sparse-table range minimum over an array of doubles. Queries return the
// leftmost index of the minimum in [i, j], which keeps downstream tie-breaks
// deterministic. Table depth adapts to the largest query span actually
// needed, so callers with short windows pay little memory.
class RmqIndex {
 public:
  RmqIndex() = default;
  explicit RmqIndex(std::vector<double> values)
      : RmqIndex(std::move(values), 0) {}
  // max_span > 0 limits the table to queries with j - i + 1 <= max_span.
  RmqIndex(std::vector<double> values, std::size_t max_span);

  std::size_t size() const { return values_.size(); }
  double value_at(std::size_t i) const { return values_[i]; }

  // Leftmost argmin over [i, j] inclusive. Throws std::out_of_range on a bad
  // range.
  std::size_t query(std::size_t i, std::size_t j) const;

 private:
  std::size_t pick(std::size_t a, std::size_t b) const {
    // Leftmost on ties; the two candidate windows may overlap, so compare
    // indices explicitly.
    if (values_[b] < values_[a] || (values_[b] == values_[a] && b < a)) return b;
    return a;
  }

  std::vector<double> values_;
  std::vector<std::vector<std::int32_t>> table_;  // table_[k][i]: argmin of [i, i+2^k)
  std::size_t max_span_ = 0;
};

}  // namespace beerquery
