#pragma once

#include <cstdint>
#include <stdexcept>

namespace subcan {

// Arithmetic in Z/p for an odd prime p.  Elements are canonical residues in
// [0, p).  p is capped so that products fit in int64 without overflow.
class PrimeField {
public:
  static constexpr int64_t kMaxPrime = (int64_t(1) << 31) - 1;

  explicit PrimeField(int64_t p);

  int64_t p() const { return p_; }

  int64_t reduce(int64_t a) const {
    int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  int64_t add(int64_t a, int64_t b) const {
    int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  int64_t sub(int64_t a, int64_t b) const {
    int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  int64_t neg(int64_t a) const { return a == 0 ? 0 : p_ - a; }
  int64_t mul(int64_t a, int64_t b) const { return (a * b) % p_; }
  int64_t pow(int64_t a, int64_t e) const;
  int64_t inv(int64_t a) const;

  static bool is_prime(int64_t p);

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  int64_t p_;
};

}  // namespace subcan
