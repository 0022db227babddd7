#include "subcan/ring.hpp"

#include <algorithm>

namespace subcan {

PolyRing::PolyRing(int64_t p, int n, std::vector<std::string> var_names)
    : field_(p), n_(n), var_names_(std::move(var_names)) {
  if (n < 1 || n + 1 > kMaxVars) throw std::invalid_argument("variable count out of range");
  if (var_names_.empty()) {
    for (int i = 0; i <= n; ++i) var_names_.push_back("x" + std::to_string(i));
  }
  if (static_cast<int>(var_names_.size()) != n + 1)
    throw std::invalid_argument("need n+1 variable names");
  for (size_t i = 0; i < var_names_.size(); ++i)
    for (size_t j = i + 1; j < var_names_.size(); ++j)
      if (var_names_[i] == var_names_[j]) throw std::invalid_argument("duplicate variable name");
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < var_names_.size(); ++i)
    if (var_names_[i] == name) return static_cast<int>(i);
  return -1;
}

int64_t PolyRing::dim_degree(int d) const {
  if (d < 0) return 0;
  // C(d+n, n) with small arguments; overflow is not a concern at this scale
  int64_t num = 1;
  for (int i = 1; i <= n_; ++i) num = num * (d + i) / i;
  return num;
}

static void enumerate(int nvars, int var, int remaining, Monomial& scratch,
                      std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    scratch.set_exponent(var, remaining);
    out.push_back(scratch);
    scratch.set_exponent(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    scratch.set_exponent(var, e);
    enumerate(nvars, var + 1, remaining - e, scratch, out);
  }
  scratch.set_exponent(var, 0);
}

const std::vector<Monomial>& PolyRing::monomials_of_degree(int d) const {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = mono_cache_.find(d);
  if (it != mono_cache_.end()) return it->second;
  std::vector<Monomial> list;
  Monomial scratch(nvars());
  enumerate(nvars(), 0, d, scratch, list);
  std::sort(list.begin(), list.end(), GrevlexGreater{});
  return mono_cache_.emplace(d, std::move(list)).first->second;
}

}  // namespace subcan
