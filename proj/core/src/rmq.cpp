#include "beerquery/rmq.hpp"

#include <bit>

namespace beerquery {

RmqIndex::RmqIndex(std::vector<double> values, std::size_t max_span)
    : values_(std::move(values)) {
  const std::size_t n = values_.size();
  max_span_ = (max_span == 0 || max_span > n) ? n : max_span;
  if (n == 0) return;
  std::size_t levels = std::bit_width(max_span_);  // spans up to 2^(levels-1)
  table_.resize(levels);
  table_[0].resize(n);
  for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::int32_t>(i);
  for (std::size_t k = 1; k < levels; ++k) {
    std::size_t half = std::size_t{1} << (k - 1);
    std::size_t len = std::size_t{1} << k;
    table_[k].resize(n - len + 1);
    for (std::size_t i = 0; i + len <= n; ++i) {
      table_[k][i] = static_cast<std::int32_t>(
          pick(table_[k - 1][i], table_[k - 1][i + half]));
    }
  }
}

std::size_t RmqIndex::query(std::size_t i, std::size_t j) const {
  if (i > j || j >= values_.size()) {
    throw std::out_of_range("rmq: bad range");
  }
  std::size_t len = j - i + 1;
  if (len > max_span_ || table_.empty()) {
    throw std::out_of_range("rmq: span exceeds index limit");
  }
  std::size_t k = std::bit_width(len) - 1;
  std::size_t a = table_[k][i];
  std::size_t b = table_[k][j + 1 - (std::size_t{1} << k)];
  // Overlapping halves cover [i, j].
  return pick(a, b);
}

}  // namespace beerquery
