#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "subcan/field.hpp"
#include "subcan/monomial.hpp"

namespace subcan {

// Z/p[x_0..x_n], all variables of degree 1, grevlex with x0 > x1 > ... .
// Immutable after construction; the monomial-basis cache is guarded so shared
// rings tolerate concurrent reads.
class PolyRing {
public:
  PolyRing(int64_t p, int n, std::vector<std::string> var_names = {});

  const PrimeField& field() const { return field_; }
  int64_t p() const { return field_.p(); }
  int n() const { return n_; }
  int nvars() const { return n_ + 1; }
  const std::string& var_name(int i) const { return var_names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  int var_index(const std::string& name) const;  // -1 if unknown

  // dim_k R_d = C(d+n, n); 0 for d < 0
  int64_t dim_degree(int d) const;

  // all monomials of total degree d, sorted descending in grevlex
  const std::vector<Monomial>& monomials_of_degree(int d) const;

private:
  PrimeField field_;
  int n_;
  std::vector<std::string> var_names_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<Monomial>> mono_cache_;
};

}  // namespace subcan
