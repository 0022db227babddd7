#include "subcan/field.hpp"

namespace subcan {

PrimeField::PrimeField(int64_t p) : p_(p) {
  if (p < 2 || p > kMaxPrime) throw std::invalid_argument("field characteristic out of range");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
}

int64_t PrimeField::pow(int64_t a, int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  int64_t r = 1, b = reduce(a);
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int64_t PrimeField::inv(int64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::invalid_argument("inverse of zero");
  // extended Euclid
  int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return t < 0 ? t + p_ : t;
}

bool PrimeField::is_prime(int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace subcan
