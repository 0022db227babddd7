#include "subcan/poly.hpp"

#include <algorithm>
#include <sstream>

namespace subcan {

static void check_ring(const PolyRing* a, const PolyRing* b) {
  if (a == nullptr || b == nullptr || a != b)
    throw std::invalid_argument("mixed or missing rings");
}

GradedPolynomial GradedPolynomial::from_terms(const PolyRing* ring, std::vector<Term> terms) {
  if (ring == nullptr) throw std::invalid_argument("null ring");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.first, b.first) > 0; });
  GradedPolynomial r(ring);
  for (const Term& t : terms) {
    int64_t c = ring->field().reduce(t.second);
    if (c == 0) continue;
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      int64_t s = ring->field().add(r.terms_.back().second, c);
      if (s == 0)
        r.terms_.pop_back();
      else
        r.terms_.back().second = s;
    } else {
      r.terms_.emplace_back(t.first, c);
    }
  }
  for (const Term& t : r.terms_)
    if (t.first.degree() != r.terms_.front().first.degree())
      throw std::invalid_argument("inhomogeneous term list");
  return r;
}

GradedPolynomial GradedPolynomial::constant(const PolyRing* ring, int64_t c) {
  return from_terms(ring, {{Monomial::one(ring->nvars()), c}});
}

GradedPolynomial GradedPolynomial::variable(const PolyRing* ring, int i) {
  return monomial(ring, Monomial::variable(ring->nvars(), i), 1);
}

GradedPolynomial GradedPolynomial::monomial(const PolyRing* ring, const Monomial& m, int64_t c) {
  return from_terms(ring, {{m, c}});
}

int GradedPolynomial::degree() const {
  if (is_zero()) throw std::logic_error("degree of zero polynomial");
  return terms_.front().first.degree();
}

const Monomial& GradedPolynomial::lead_monomial() const {
  if (is_zero()) throw std::logic_error("lead of zero polynomial");
  return terms_.front().first;
}

int64_t GradedPolynomial::lead_coefficient() const {
  if (is_zero()) throw std::logic_error("lead of zero polynomial");
  return terms_.front().second;
}

int64_t GradedPolynomial::coefficient_of(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return grevlex_compare(t.first, key) > 0; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

GradedPolynomial GradedPolynomial::operator-() const { return scaled(-1); }

GradedPolynomial GradedPolynomial::scaled(int64_t c) const {
  GradedPolynomial r(ring_);
  c = ring_->field().reduce(c);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.emplace_back(t.first, ring_->field().mul(t.second, c));
  return r;
}

GradedPolynomial GradedPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coefficient()));
}

bool GradedPolynomial::operator==(const GradedPolynomial& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

GradedPolynomial poly_combine(const GradedPolynomial& f, int64_t a, const GradedPolynomial& g,
                              int64_t b) {
  if (f.is_zero() && g.is_zero()) return f.ring_ ? f : g;
  if (g.is_zero()) return f.scaled(a);
  if (f.is_zero()) return g.scaled(b);
  check_ring(f.ring_, g.ring_);
  if (f.degree() != g.degree()) throw std::invalid_argument("inhomogeneous combination");
  const PrimeField& F = f.ring_->field();
  a = F.reduce(a);
  b = F.reduce(b);
  GradedPolynomial r(f.ring_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  size_t i = 0, j = 0;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    int cmp;
    if (i == f.terms_.size())
      cmp = -1;
    else if (j == g.terms_.size())
      cmp = 1;
    else
      cmp = grevlex_compare(f.terms_[i].first, g.terms_[j].first);
    if (cmp > 0) {
      int64_t c = F.mul(f.terms_[i].second, a);
      if (c != 0) r.terms_.emplace_back(f.terms_[i].first, c);
      ++i;
    } else if (cmp < 0) {
      int64_t c = F.mul(g.terms_[j].second, b);
      if (c != 0) r.terms_.emplace_back(g.terms_[j].first, c);
      ++j;
    } else {
      int64_t c = F.add(F.mul(f.terms_[i].second, a), F.mul(g.terms_[j].second, b));
      if (c != 0) r.terms_.emplace_back(f.terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

GradedPolynomial poly_monomial_multiply(const GradedPolynomial& f, const Monomial& m, int64_t c) {
  GradedPolynomial r(f.ring_);
  if (f.is_zero()) return r;
  c = f.ring_->field().reduce(c);
  if (c == 0) return r;
  r.terms_.reserve(f.terms_.size());
  for (const auto& t : f.terms_)
    r.terms_.emplace_back(t.first * m, f.ring_->field().mul(t.second, c));
  // multiplication by a fixed monomial preserves grevlex order
  return r;
}

GradedPolynomial poly_multiply(const GradedPolynomial& f, const GradedPolynomial& g) {
  if (f.is_zero()) return f;
  if (g.is_zero()) return g;
  check_ring(f.ring_, g.ring_);
  GradedPolynomial acc(f.ring_);
  const GradedPolynomial *small = &f, *big = &g;
  if (small->term_count() > big->term_count()) std::swap(small, big);
  for (const auto& t : small->terms_)
    acc = poly_combine(acc, 1, poly_monomial_multiply(*big, t.first, t.second), 1);
  return acc;
}

GradedPolynomial poly_power(const GradedPolynomial& f, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  GradedPolynomial r = GradedPolynomial::constant(f.ring(), 1);
  for (int i = 0; i < e; ++i) r = poly_multiply(r, f);
  return r;
}

std::string GradedPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const int64_t p = ring_->p();
  bool first = true;
  for (const Term& t : terms_) {
    int64_t c = t.second;
    bool neg = c > p / 2;  // print symmetric residue
    int64_t mag = neg ? p - c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool printed = false;
    if (mag != 1 || t.first.is_one()) {
      os << mag;
      printed = true;
    }
    for (int i = 0; i < t.first.nvars(); ++i) {
      int e = t.first.exponent(i);
      if (e == 0) continue;
      if (printed) os << "*";
      os << ring_->var_name(i);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace subcan
