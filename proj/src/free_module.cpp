#include "subcan/free_module.hpp"

#include <algorithm>

namespace subcan {

ModuleElement ModuleElement::from_terms(const FreeModule& F, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const ModTerm& a, const ModTerm& b) {
    return module_term_compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  ModuleElement r;
  const PrimeField& k = F.ring->field();
  for (const ModTerm& t : terms) {
    if (t.comp < 0 || t.comp >= F.rank()) throw std::invalid_argument("component out of range");
    int64_t c = k.reduce(t.coeff);
    if (c == 0) continue;
    if (!r.terms_.empty() && r.terms_.back().comp == t.comp && r.terms_.back().mono == t.mono) {
      int64_t s = k.add(r.terms_.back().coeff, c);
      if (s == 0)
        r.terms_.pop_back();
      else
        r.terms_.back().coeff = s;
    } else {
      r.terms_.push_back({t.mono, t.comp, c});
    }
  }
  if (!r.terms_.empty()) {
    int d = r.terms_.front().mono.degree() + F.twists[static_cast<size_t>(r.terms_.front().comp)];
    for (const ModTerm& t : r.terms_)
      if (t.mono.degree() + F.twists[static_cast<size_t>(t.comp)] != d)
        throw std::invalid_argument("inhomogeneous module element");
  }
  return r;
}

ModuleElement ModuleElement::generator(const FreeModule& F, int comp, int64_t c) {
  return from_terms(F, {{Monomial::one(F.ring->nvars()), comp, c}});
}

ModuleElement ModuleElement::embed(const FreeModule& F, int comp, const GradedPolynomial& f) {
  std::vector<ModTerm> ts;
  for (const auto& t : f.terms()) ts.push_back({t.first, comp, t.second});
  return from_terms(F, std::move(ts));
}

int ModuleElement::degree(const FreeModule& F) const {
  if (is_zero()) throw std::logic_error("degree of zero element");
  return terms_.front().mono.degree() + F.twists[static_cast<size_t>(terms_.front().comp)];
}

const ModTerm& ModuleElement::lead() const {
  if (is_zero()) throw std::logic_error("lead of zero element");
  return terms_.front();
}

GradedPolynomial ModuleElement::component(const FreeModule& F, int comp) const {
  std::vector<GradedPolynomial::Term> ts;
  for (const ModTerm& t : terms_)
    if (t.comp == comp) ts.emplace_back(t.mono, t.coeff);
  return GradedPolynomial::from_terms(F.ring, std::move(ts));
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].comp != o.terms_[i].comp || terms_[i].coeff != o.terms_[i].coeff ||
        terms_[i].mono != o.terms_[i].mono)
      return false;
  return true;
}

ModuleElement mod_combine(const PrimeField& F, const ModuleElement& a, int64_t ca,
                          const ModuleElement& b, int64_t cb) {
  ca = F.reduce(ca);
  cb = F.reduce(cb);
  ModuleElement r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int cmp;
    if (i == a.terms_.size())
      cmp = -1;
    else if (j == b.terms_.size())
      cmp = 1;
    else
      cmp = module_term_compare(a.terms_[i].mono, a.terms_[i].comp, b.terms_[j].mono,
                                b.terms_[j].comp);
    if (cmp > 0) {
      int64_t c = F.mul(a.terms_[i].coeff, ca);
      if (c != 0) r.terms_.push_back({a.terms_[i].mono, a.terms_[i].comp, c});
      ++i;
    } else if (cmp < 0) {
      int64_t c = F.mul(b.terms_[j].coeff, cb);
      if (c != 0) r.terms_.push_back({b.terms_[j].mono, b.terms_[j].comp, c});
      ++j;
    } else {
      int64_t c = F.add(F.mul(a.terms_[i].coeff, ca), F.mul(b.terms_[j].coeff, cb));
      if (c != 0) r.terms_.push_back({a.terms_[i].mono, a.terms_[i].comp, c});
      ++i;
      ++j;
    }
  }
  return r;
}

ModuleElement mod_monomial_multiply(const PrimeField& F, const ModuleElement& v, const Monomial& m,
                                    int64_t c) {
  c = F.reduce(c);
  ModuleElement r;
  if (c == 0) return r;
  r.terms_.reserve(v.terms_.size());
  for (const ModTerm& t : v.terms_) r.terms_.push_back({t.mono * m, t.comp, F.mul(t.coeff, c)});
  return r;
}

ModuleElement mod_poly_multiply(const PrimeField& F, const ModuleElement& v,
                                const GradedPolynomial& f) {
  ModuleElement acc;
  for (const auto& t : f.terms())
    acc = mod_combine(F, acc, 1, mod_monomial_multiply(F, v, t.first, t.second), 1);
  return acc;
}

GradedMatrix::GradedMatrix(FreeModule target, FreeModule source)
    : target_(std::move(target)), source_(std::move(source)) {
  if (target_.ring != source_.ring) throw std::invalid_argument("mixed rings in matrix");
  e_.assign(static_cast<size_t>(rows()) * static_cast<size_t>(cols()),
            GradedPolynomial::zero(target_.ring));
}

const GradedPolynomial& GradedMatrix::at(int i, int j) const {
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols()) + static_cast<size_t>(j)];
}

void GradedMatrix::set(int i, int j, GradedPolynomial f) {
  if (!f.is_zero() && f.degree() != source_.twists[static_cast<size_t>(j)] -
                                        target_.twists[static_cast<size_t>(i)])
    throw std::invalid_argument("entry degree violates matrix grading");
  e_[static_cast<size_t>(i) * static_cast<size_t>(cols()) + static_cast<size_t>(j)] = std::move(f);
}

ModuleElement GradedMatrix::column(int j) const {
  std::vector<ModTerm> ts;
  for (int i = 0; i < rows(); ++i)
    for (const auto& t : at(i, j).terms()) ts.push_back({t.first, i, t.second});
  return ModuleElement::from_terms(target_, std::move(ts));
}

void GradedMatrix::set_column(int j, const ModuleElement& v) {
  for (int i = 0; i < rows(); ++i) set(i, j, v.component(target_, i));
}

std::vector<ModuleElement> GradedMatrix::columns() const {
  std::vector<ModuleElement> cs;
  for (int j = 0; j < cols(); ++j) cs.push_back(column(j));
  return cs;
}

GradedMatrix GradedMatrix::transpose() const {
  GradedMatrix t(source_.dual(), target_.dual());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) t.set(j, i, at(i, j));
  return t;
}

GradedMatrix GradedMatrix::shifted(int a) const {
  GradedMatrix s(target_.shifted(a), source_.shifted(a));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) s.set(i, j, at(i, j));
  return s;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& other) const {
  if (!(other.target_ == source_)) throw std::invalid_argument("composition shape mismatch");
  GradedMatrix r(target_, other.source_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < other.cols(); ++j) {
      GradedPolynomial acc = GradedPolynomial::zero(target_.ring);
      for (int k = 0; k < cols(); ++k) {
        if (at(i, k).is_zero() || other.at(k, j).is_zero()) continue;
        acc = poly_combine(acc, 1, poly_multiply(at(i, k), other.at(k, j)), 1);
      }
      r.set(i, j, acc);
    }
  return r;
}

bool GradedMatrix::is_zero() const {
  for (const auto& f : e_)
    if (!f.is_zero()) return false;
  return true;
}

GradedMatrix GradedMatrix::from_columns(FreeModule target, const std::vector<ModuleElement>& cols,
                                        const std::vector<int>& col_degrees) {
  if (cols.size() != col_degrees.size()) throw std::invalid_argument("column/degree mismatch");
  GradedMatrix m(target, FreeModule(target.ring, col_degrees));
  for (size_t j = 0; j < cols.size(); ++j) m.set_column(static_cast<int>(j), cols[j]);
  return m;
}

static GradedPolynomial pfaffian_rec(const std::vector<std::vector<GradedPolynomial>>& a,
                                     std::vector<int> idx, const PolyRing* ring) {
  if (idx.empty()) return GradedPolynomial::constant(ring, 1);
  int i0 = idx[0];
  GradedPolynomial acc = GradedPolynomial::zero(ring);
  for (size_t pos = 1; pos < idx.size(); ++pos) {
    int j = idx[pos];
    if (a[static_cast<size_t>(i0)][static_cast<size_t>(j)].is_zero()) continue;
    std::vector<int> rest;
    for (size_t k = 1; k < idx.size(); ++k)
      if (k != pos) rest.push_back(idx[k]);
    GradedPolynomial sub = pfaffian_rec(a, rest, ring);
    GradedPolynomial term = poly_multiply(a[static_cast<size_t>(i0)][static_cast<size_t>(j)], sub);
    acc = poly_combine(acc, 1, term, (pos % 2 == 1) ? 1 : -1);
  }
  return acc;
}

GradedPolynomial pfaffian(const std::vector<std::vector<GradedPolynomial>>& a) {
  size_t n = a.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian needs even size");
  const PolyRing* ring = nullptr;
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("pfaffian needs a square grid");
    for (const auto& f : row)
      if (!f.is_zero()) ring = f.ring();
  }
  if (ring == nullptr) return GradedPolynomial();
  for (size_t i = 0; i < n; ++i) {
    if (!a[i][i].is_zero()) throw std::invalid_argument("pfaffian needs zero diagonal");
    for (size_t j = 0; j < n; ++j) {
      GradedPolynomial s = poly_combine(a[i][j], 1, a[j][i], 1);
      if (!s.is_zero()) throw std::invalid_argument("pfaffian needs a skew matrix");
    }
  }
  std::vector<int> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  return pfaffian_rec(a, idx, ring);
}

ModuleElement apply_map(const GradedMatrix& A, const ModuleElement& v) {
  if (v.is_zero()) return ModuleElement::zero();
  const PrimeField& k = A.target().ring->field();
  ModuleElement out;
  for (const ModTerm& t : v.terms()) {
    if (t.comp >= A.cols()) throw std::invalid_argument("apply_map: component out of range");
    ModuleElement img = A.column(t.comp);
    if (img.is_zero()) continue;
    out = mod_combine(k, out, 1, mod_monomial_multiply(k, img, t.mono, t.coeff), 1);
  }
  return out;
}

GradedMatrix identity_matrix(const FreeModule& F) {
  GradedMatrix I(F, F);
  for (int i = 0; i < F.rank(); ++i) I.set(i, i, GradedPolynomial::constant(F.ring, 1));
  return I;
}

}  // namespace subcan
