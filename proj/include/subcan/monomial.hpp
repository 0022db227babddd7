#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcan {

// Monomials in at most kMaxVars variables, exponents < 256.  Total degree is
// cached.  Comparison is degree reverse lexicographic with x0 > x1 > ... .
constexpr int kMaxVars = 8;

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : nvars_(static_cast<uint8_t>(nvars)) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  }

  int nvars() const { return nvars_; }
  int degree() const { return deg_; }
  int exponent(int i) const { return e_[static_cast<size_t>(i)]; }

  void set_exponent(int i, int v) {
    if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
    deg_ += v - e_[static_cast<size_t>(i)];
    e_[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
  }

  static Monomial variable(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    m.set_exponent(i, power);
    return m;
  }
  static Monomial one(int nvars) { return Monomial(nvars); }

  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars_; ++i) r.set_exponent(i, exponent(i) + o.exponent(i));
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars_; ++i)
      if (e_[static_cast<size_t>(i)] > o.e_[static_cast<size_t>(i)]) return false;
    return true;
  }

  // quotient this / o, requires o | this
  Monomial operator/(const Monomial& o) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) r.set_exponent(i, exponent(i) - o.exponent(i));
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i)
      r.set_exponent(i, exponent(i) > o.exponent(i) ? exponent(i) : o.exponent(i));
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars_; ++i)
      if (exponent(i) > 0 && o.exponent(i) > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const {
    if (nvars_ != o.nvars_ || deg_ != o.deg_) return false;
    for (int i = 0; i < nvars_; ++i)
      if (e_[static_cast<size_t>(i)] != o.e_[static_cast<size_t>(i)]) return false;
    return true;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
  std::array<uint8_t, kMaxVars> e_{};
  uint8_t nvars_ = 0;
  int16_t deg_ = 0;
};

// grevlex: higher total degree wins; on ties the last variable where the
// exponents differ decides, smaller exponent there wins.
// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

}  // namespace subcan
