#include "doctest.h"
#include "subcan/monomial.hpp"
#include "subcan/ring.hpp"

#include <vector>

using namespace subcan;

namespace {
Monomial mono(std::initializer_list<int> exps) {
  Monomial m(static_cast<int>(exps.size()));
  int i = 0;
  for (int e : exps) m.set_exponent(i++, e);
  return m;
}
}  // namespace

TEST_CASE("grevlex order on the degree-2 monomials in three variables") {
  // expected descending: x0^2, x0x1, x1^2, x0x2, x1x2, x2^2
  std::vector<Monomial> want = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  for (size_t i = 0; i < want.size(); ++i) {
    for (size_t j = 0; j < want.size(); ++j) {
      const int c = grevlex_compare(want[i], want[j]);
      if (i < j) CHECK(c == 1);
      if (i == j) CHECK(c == 0);
      if (i > j) CHECK(c == -1);
    }
  }

  PolyRing R(32003, 2);
  CHECK(R.monomials_of_degree(2) == want);
}

TEST_CASE("degree dominates grevlex") {
  CHECK(grevlex_compare(mono({3, 0, 0}), mono({0, 2, 0})) == 1);
  CHECK(grevlex_compare(mono({0, 0, 1}), mono({2, 0, 0})) == -1);
}

TEST_CASE("divisibility, quotient, lcm, coprimality") {
  Monomial a = mono({2, 1, 0});
  Monomial b = mono({1, 1, 0});
  Monomial c = mono({0, 0, 3});
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a / b == mono({1, 0, 0}));
  CHECK(a.lcm(c) == mono({2, 1, 3}));
  CHECK(a.coprime(c));
  CHECK_FALSE(a.coprime(b));
  CHECK((a * b) == mono({3, 2, 0}));
  CHECK(Monomial::one(3).divides(a));
  CHECK(Monomial::variable(3, 1) == mono({0, 1, 0}));
}

TEST_CASE("ring monomial enumeration counts") {
  PolyRing R(32003, 3);
  CHECK(R.dim_degree(0) == 1);
  CHECK(R.dim_degree(1) == 4);
  CHECK(R.dim_degree(2) == 10);
  CHECK(R.dim_degree(5) == 56);  // C(8,3)
  for (int d = 0; d <= 5; ++d) {
    CHECK(static_cast<int64_t>(R.monomials_of_degree(d).size()) == R.dim_degree(d));
  }
  // strictly descending
  const auto& ms = R.monomials_of_degree(3);
  for (size_t i = 0; i + 1 < ms.size(); ++i) {
    CHECK(grevlex_compare(ms[i], ms[i + 1]) == 1);
  }
}
