#include "spp/field.hpp"

namespace spp {

bool is_prime(uint32_t x) {
  if (x < 2) return false;
  for (uint32_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

uint32_t select_prime(uint32_t num_blocks) {
  if (num_blocks < 2)
    throw std::invalid_argument("select_prime: need at least 2 blocks");
  for (uint32_t q = num_blocks + 1; q <= 2 * num_blocks; ++q)
    if (is_prime(q)) return q;
  throw std::logic_error("select_prime: no prime found (impossible)");
}

Field::Field(uint32_t q) : q_(q) {
  if (q < 2) throw std::invalid_argument("Field: modulus must be >= 2");
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("Field::inv: division by zero");
  // Extended Euclid on (a, q).
  int64_t old_r = a, r = q_;
  int64_t old_s = 1, s = 0;
  while (r != 0) {
    int64_t quot = old_r / r;
    int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return from_int(old_s);
}

FieldElem::FieldElem(uint32_t value, uint32_t q) : value_(value), q_(q) {
  if (q < 2) throw std::invalid_argument("FieldElem: modulus must be >= 2");
  if (value >= q) throw std::invalid_argument("FieldElem: value out of range");
}

}  // namespace spp
