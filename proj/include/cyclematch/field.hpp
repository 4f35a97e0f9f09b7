#pragma once

#include "cyclematch/types.hpp"

namespace cyclematch {

bool is_prime(coefficient_t p);

// Throws InvalidFieldError unless p is a prime small enough for int64 products.
void require_prime_field(coefficient_t p);

// Arithmetic in Z/p; arguments are expected in [0, p).
class PrimeField {
 public:
  explicit PrimeField(coefficient_t p);

  coefficient_t characteristic() const noexcept { return p_; }
  coefficient_t normalize(coefficient_t x) const noexcept {
    x %= p_;
    return x < 0 ? x + p_ : x;
  }
  coefficient_t add(coefficient_t a, coefficient_t b) const noexcept { return (a + b) % p_; }
  coefficient_t sub(coefficient_t a, coefficient_t b) const noexcept { return (a - b + p_) % p_; }
  coefficient_t mul(coefficient_t a, coefficient_t b) const noexcept { return (a * b) % p_; }
  coefficient_t neg(coefficient_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  coefficient_t inverse(coefficient_t a) const;
  // (-1)^k as a field element
  coefficient_t sign(int k) const noexcept { return (k & 1) ? p_ - 1 : 1 % p_; }

 private:
  coefficient_t p_;
};

}  // namespace cyclematch
