#pragma once

#include <vector>

#include "cyclematch/types.hpp"

namespace cyclematch {

// Binomial coefficients C(n, k) for 0 <= n <= max_n, 0 <= k <= max_k.
// Construction fails with InvalidSimplexError if an entry overflows index_t.
class BinomialTable {
 public:
  BinomialTable(index_t max_n, int max_k);

  index_t operator()(index_t n, index_t k) const noexcept {
    if (k > n || k < 0) return 0;
    return table_[static_cast<std::size_t>(k) * stride_ + static_cast<std::size_t>(n)];
  }

  index_t max_n() const noexcept { return max_n_; }
  int max_k() const noexcept { return max_k_; }

 private:
  index_t max_n_;
  int max_k_;
  std::size_t stride_;
  std::vector<index_t> table_;  // k-major
};

}  // namespace cyclematch
