#pragma once

// Arithmetic in Z/p for an odd prime p, 3 <= p < 2^31.
// Elements are canonical representatives stored as uint32_t in [0, p).
// Each PrimeField instance carries its own operation counter, so cost
// instrumentation is per computation context rather than global.

#include <cstdint>
#include <stdexcept>

namespace gb {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in prime field") {}
};

inline bool is_prime_u32(uint32_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (uint64_t q = 3; q * q <= m; q += 2)
    if (m % q == 0) return false;
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime_u32(p))
      throw std::invalid_argument("modulus must be an odd prime in [3, 2^31)");
  }

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    ++ops_;
    uint32_t s = a + b;  // no overflow: both < 2^31
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    ++ops_;
    return a >= b ? a - b : a + p_ - b;
  }
  uint32_t neg(uint32_t a) const {
    ++ops_;
    return a == 0 ? 0 : p_ - a;
  }
  uint32_t mul(uint32_t a, uint32_t b) const {
    ++ops_;
    return uint32_t((uint64_t(a) * b) % p_);
  }
  // Extended Euclid; counts one unit per iteration so inversion cost is
  // measured rather than flat.
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero();
    int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      ++ops_;
      int64_t q = r0 / r1;
      int64_t r2 = r0 - q * r1;
      int64_t t2 = t0 - q * t1;
      r0 = r1; r1 = r2;
      t0 = t1; t1 = t2;
    }
    return uint32_t(t0 < 0 ? t0 + p_ : t0);
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  uint64_t ops() const { return ops_; }
  void reset_ops() const { ops_ = 0; }

 private:
  uint32_t p_;
  mutable uint64_t ops_ = 0;
};

}  // namespace gb
