#pragma once

#include <cstdint>
#include <stdexcept>

namespace spp {

// Prime field F_q used by the reduction. q stays below 2n, so residues fit
// comfortably in 32-bit words; vectors store them as uint16_t.

bool is_prime(uint32_t x);

// Least prime q with num_blocks < q <= 2*num_blocks. Requires num_blocks >= 2,
// so q is always odd. Existence is guaranteed by Bertrand's postulate.
uint32_t select_prime(uint32_t num_blocks);

class FieldElem;

// Arithmetic context for a fixed modulus. Operates on raw residues in [0, q);
// the hot loops use this directly instead of FieldElem to avoid carrying the
// modulus per entry.
class Field {
 public:
  explicit Field(uint32_t q);

  uint32_t modulus() const { return q_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + q_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % q_);
  }
  // Multiplicative inverse via extended Euclid. Throws on zero input.
  uint32_t inv(uint32_t a) const;

  // Reduce an arbitrary signed value into [0, q).
  uint32_t from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<uint32_t>(r);
  }

  FieldElem elem(int64_t v) const;

  bool operator==(const Field& other) const { return q_ == other.q_; }

 private:
  uint32_t q_;
};

// Value type with its modulus attached; used at API boundaries and in tests.
// Mixing moduli is a programming error and throws.
class FieldElem {
 public:
  FieldElem() : value_(0), q_(0) {}
  FieldElem(uint32_t value, uint32_t q);

  uint32_t value() const { return value_; }
  uint32_t modulus() const { return q_; }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    check_same(a, b);
    return FieldElem(Field(a.q_).add(a.value_, b.value_), a.q_);
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) {
    check_same(a, b);
    return FieldElem(Field(a.q_).sub(a.value_, b.value_), a.q_);
  }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    check_same(a, b);
    return FieldElem(Field(a.q_).mul(a.value_, b.value_), a.q_);
  }
  FieldElem operator-() const { return FieldElem(Field(q_).neg(value_), q_); }
  FieldElem inverse() const { return FieldElem(Field(q_).inv(value_), q_); }

  bool operator==(const FieldElem& other) const = default;

 private:
  static void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.q_ != b.q_) throw std::logic_error("field modulus mismatch");
  }

  uint32_t value_;
  uint32_t q_;
};

inline FieldElem Field::elem(int64_t v) const { return FieldElem(from_int(v), q_); }

}  // namespace spp
