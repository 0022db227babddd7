#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subcan/ring.hpp"

namespace subcan {

// A homogeneous polynomial with canonical sparse storage: terms sorted
// descending in grevlex, no zero coefficients, coefficients in [1, p).
// The zero polynomial has no terms and no degree.
class GradedPolynomial {
public:
  using Term = std::pair<Monomial, int64_t>;

  GradedPolynomial() = default;
  explicit GradedPolynomial(const PolyRing* ring) : ring_(ring) {}

  // from unsorted, possibly repeated term list; enforces homogeneity
  static GradedPolynomial from_terms(const PolyRing* ring, std::vector<Term> terms);
  static GradedPolynomial zero(const PolyRing* ring) { return GradedPolynomial(ring); }
  static GradedPolynomial constant(const PolyRing* ring, int64_t c);
  static GradedPolynomial variable(const PolyRing* ring, int i);
  static GradedPolynomial monomial(const PolyRing* ring, const Monomial& m, int64_t c = 1);

  const PolyRing* ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  // degree of a nonzero homogeneous polynomial
  int degree() const;
  std::optional<int> degree_opt() const {
    return is_zero() ? std::nullopt : std::optional<int>(degree());
  }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  const Monomial& lead_monomial() const;
  int64_t lead_coefficient() const;
  int64_t coefficient_of(const Monomial& m) const;

  GradedPolynomial operator-() const;
  GradedPolynomial scaled(int64_t c) const;
  GradedPolynomial monic() const;

  bool operator==(const GradedPolynomial& o) const;
  bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }

  std::string str() const;  // canonical text form, symmetric residues

private:
  const PolyRing* ring_ = nullptr;
  std::vector<Term> terms_;

  friend GradedPolynomial poly_combine(const GradedPolynomial&, int64_t, const GradedPolynomial&,
                                       int64_t);
  friend GradedPolynomial poly_multiply(const GradedPolynomial&, const GradedPolynomial&);
  friend GradedPolynomial poly_monomial_multiply(const GradedPolynomial&, const Monomial&, int64_t);
};

// a*f + b*g; f, g zero or homogeneous of the same degree
GradedPolynomial poly_combine(const GradedPolynomial& f, int64_t a, const GradedPolynomial& g,
                              int64_t b);
inline GradedPolynomial operator+(const GradedPolynomial& f, const GradedPolynomial& g) {
  return poly_combine(f, 1, g, 1);
}
inline GradedPolynomial operator-(const GradedPolynomial& f, const GradedPolynomial& g) {
  return poly_combine(f, 1, g, -1);
}
GradedPolynomial poly_multiply(const GradedPolynomial& f, const GradedPolynomial& g);
inline GradedPolynomial operator*(const GradedPolynomial& f, const GradedPolynomial& g) {
  return poly_multiply(f, g);
}
GradedPolynomial poly_monomial_multiply(const GradedPolynomial& f, const Monomial& m, int64_t c);
GradedPolynomial poly_power(const GradedPolynomial& f, int e);

}  // namespace subcan
