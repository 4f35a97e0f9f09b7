#include "cyclematch/field.hpp"

#include <string>

#include "cyclematch/error.hpp"

namespace cyclematch {

namespace {
// Keeps a * b inside int64 for a, b < p.
constexpr coefficient_t kMaxCharacteristic = 1 << 30;
}  // namespace

bool is_prime(coefficient_t p) {
  if (p < 2) return false;
  for (coefficient_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime_field(coefficient_t p) {
  if (!is_prime(p) || p > kMaxCharacteristic)
    throw InvalidFieldError("field characteristic " + std::to_string(p) +
                            " is not a supported prime");
}

PrimeField::PrimeField(coefficient_t p) : p_(p) { require_prime_field(p); }

coefficient_t PrimeField::inverse(coefficient_t a) const {
  a = normalize(a);
  if (a == 0) throw InvariantError("inverse of zero in prime field");
  // extended Euclid
  coefficient_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    coefficient_t q = r / new_r;
    coefficient_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return normalize(t);
}

}  // namespace cyclematch
