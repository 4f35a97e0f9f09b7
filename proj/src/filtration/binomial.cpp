#include "cyclematch/binomial.hpp"

#include <limits>

#include "cyclematch/error.hpp"

namespace cyclematch {

BinomialTable::BinomialTable(index_t max_n, int max_k)
    : max_n_(max_n), max_k_(max_k), stride_(static_cast<std::size_t>(max_n) + 1) {
  if (max_n < 0 || max_k < 0) throw InvalidSimplexError("negative binomial table bounds");
  table_.assign(stride_ * (static_cast<std::size_t>(max_k) + 1), 0);
  constexpr index_t kMax = std::numeric_limits<index_t>::max();
  for (index_t n = 0; n <= max_n; ++n) {
    table_[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k <= max_k && k <= n; ++k) {
      const index_t a = (*this)(n - 1, k - 1);
      const index_t b = (*this)(n - 1, k);
      if (a > kMax - b)
        throw InvalidSimplexError("simplex index overflow: C(" + std::to_string(n) + ", " +
                                  std::to_string(k) + ") exceeds 64 bits");
      table_[static_cast<std::size_t>(k) * stride_ + static_cast<std::size_t>(n)] = a + b;
    }
  }
}

}  // namespace cyclematch
