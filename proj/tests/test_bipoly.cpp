#include <doctest.h>
#include <cmath>

#include <cstdint>

#include "mandelmat/bipoly.hpp"
#include "mandelmat/homotopy.hpp"
#include "mandelmat/singular.hpp"

using namespace mandelmat;

namespace {

IntPoly ip(std::initializer_list<long long> ascending) {
  std::vector<BigInt> c;
  for (long long v : ascending) c.emplace_back(v);
  return IntPoly(std::move(c));
}

struct Lcg {
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  long long next(long long lo, long long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long long>((state >> 33) %
                                       static_cast<std::uint64_t>(hi - lo + 1));
  }
};

BiPoly random_bipoly(Lcg& rng, int dl, int de) {
  std::vector<IntPoly> cs;
  for (int i = 0; i <= dl; ++i) {
    std::vector<BigInt> c;
    for (int j = 0; j <= de; ++j) c.emplace_back(rng.next(-4, 4));
    cs.emplace_back(std::move(c));
  }
  return BiPoly(std::move(cs));
}

}  // namespace

TEST_CASE("IntPoly arithmetic") {
  const IntPoly a = ip({1, 2});       // 1 + 2e
  const IntPoly b = ip({-1, 0, 3});   // -1 + 3e^2
  CHECK((a + b) == ip({0, 2, 3}));
  CHECK((a - b) == ip({2, 2, -3}));
  CHECK((a * b) == ip({-1, -2, 3, 6}));
  CHECK(exact_div(a * b, a) == b);
  CHECK(exact_div(a * b, b) == a);
  CHECK_THROWS_AS(exact_div(ip({1, 1}), ip({0, 1})), std::logic_error);
  CHECK(ip({}).zero());
  CHECK(ip({0}).zero());
  CHECK(a.eval(0.5) == doctest::Approx(2.0));
}

TEST_CASE("BiPoly product/division round trip on random samples") {
  Lcg rng;
  for (int trial = 0; trial < 40; ++trial) {
    BiPoly a = random_bipoly(rng, 3, 2);
    BiPoly b = random_bipoly(rng, 2, 2);
    if (a.zero() || b.zero()) continue;
    const BiPoly prod = a * b;
    CHECK(exact_div(prod, b) == a);
    CHECK(exact_div(prod, a) == b);
  }
}

TEST_CASE("textbook discriminants") {
  // f = lambda^2 - eps: disc = 4 eps.
  const BiPoly f(std::vector<IntPoly>{-IntPoly::monomial(1, 1), ip({}), ip({1})});
  const IntPoly disc_f = discriminant_lambda(f);
  CHECK(disc_f == ip({0, 4}));
  CHECK(nonzero_coefficients_positive(disc_f));

  // g = lambda^2 + eps: disc = -4 eps.
  const BiPoly g(std::vector<IntPoly>{IntPoly::monomial(1, 1), ip({}), ip({1})});
  const IntPoly disc_g = discriminant_lambda(g);
  CHECK(disc_g == ip({0, -4}));
  CHECK_FALSE(nonzero_coefficients_positive(disc_g));

  // A plain univariate check: disc(lambda^2 - 3 lambda + 2) = 1.
  const BiPoly h(std::vector<IntPoly>{ip({2}), ip({-3}), ip({1})});
  CHECK(discriminant_lambda(h) == ip({1}));
}

TEST_CASE("resultant basics") {
  // Res(lambda - a, lambda - b) = b - a for constants a, b in eps terms.
  const BiPoly fa(std::vector<IntPoly>{ip({-2}), ip({1})});   // lambda - 2
  const BiPoly fb(std::vector<IntPoly>{ip({0, -1}), ip({1})}); // lambda - eps
  const IntPoly r = resultant_lambda(fa, fb);
  // Common root exactly when eps = 2.
  CHECK(r.eval(2.0) == doctest::Approx(0.0));
  CHECK(r.eval(0.0) != 0.0);
}

TEST_CASE("char_poly_T at n = 1 matches the hand-computed determinant") {
  // T = [[e,0,1],[0,0,e],[1,e,0]]:
  // det(lambda I - T) = lambda^3 - e lambda^2 - (1 + e^2) lambda + e^3.
  const BiPoly f = char_poly_T(1);
  REQUIRE(f.degree_lambda() == 3);
  CHECK(f.coeff(3) == ip({1}));
  CHECK(f.coeff(2) == ip({0, -1}));
  CHECK(f.coeff(1) == ip({-1, 0, -1}));
  CHECK(f.coeff(0) == ip({0, 0, 0, 1}));

  // At eps = 0 the polynomial factors as lambda (lambda^2 - 1):
  // roots {0, +1, -1}.
  const auto at0 = specialize_eps_ascending(f, 0);
  REQUIRE(at0.size() == 4);
  CHECK(at0[0] == 0);
  CHECK(at0[1] == -1);
  CHECK(at0[2] == 0);
  CHECK(at0[3] == 1);
}

TEST_CASE("char_poly_T at eps = 1 vanishes on the signed singular spectrum") {
  // F(lambda, 1) is the characteristic polynomial of S_2, so it vanishes at
  // the signed singular values of M_2 computed by the dense eigensolver.
  const BiPoly f = char_poly_T(1);
  const auto s_eigs = all_singular_values(2).s_eigs;
  REQUIRE(s_eigs.size() == 3);
  for (double lambda : s_eigs)
    CHECK(std::abs(f.eval(lambda, 1.0)) < 1e-10);
}

TEST_CASE("char_poly_T at eps = 0 has only odd lambda powers") {
  for (int n : {1, 2}) {
    const BiPoly f = char_poly_T(n);
    const auto at0 = specialize_eps_ascending(f, 0);
    for (std::size_t k = 0; k < at0.size(); ++k)
      if (k % 2 == 0) CHECK(at0[k] == 0);  // lambda times an even polynomial
  }
}

TEST_CASE("constant term at eps = 1 equals +1 (minus det S)") {
  for (int n : {1, 2}) {
    const BiPoly f = char_poly_T(n);
    BigInt constant = 0;
    const IntPoly& c0 = f.coeff(0);
    BigInt acc = 0;
    for (std::size_t i = c0.coeffs().size(); i-- > 0;) acc = acc + c0.coeffs()[i];
    constant = acc;
    CHECK(constant == 1);
  }
}

TEST_CASE("discriminant positivity for the exact orders") {
  // Frozen oracle (computed symbolically, ascending eps powers):
  // n = 1 -> 4 + 13 e^2 + 32 e^4.
  const IntPoly d1 = discriminant_lambda(char_poly_T(1));
  CHECK(d1 == ip({4, 0, 13, 0, 32}));
  CHECK(discriminant_positivity(1));

  // n = 2, degree 24 in eps, even powers only.
  const IntPoly d2 = discriminant_lambda(char_poly_T(2));
  const IntPoly expected2 = ip({153664, 0, 1187760, 0, 5019212, 0, 6470953, 0,
                                5966476, 0, 3651388, 0, 1841860, 0, 747296, 0,
                                241384, 0, 68748, 0, 16180, 0, 2256, 0, 512});
  CHECK(d2 == expected2);
  CHECK(discriminant_positivity(2));

  CHECK_THROWS_AS(char_poly_T(3), std::length_error);
  CHECK_THROWS_AS(char_poly_T(4, true), std::length_error);
}
