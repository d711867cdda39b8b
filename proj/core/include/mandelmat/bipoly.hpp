#pragma once

#include <string>
#include <vector>

#include "mandelmat/exact.hpp"

namespace mandelmat {

/// Univariate polynomial over the integers (used as coefficients in eps).
/// Exact arithmetic only; division asserts exactness.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long c) { if (c != 0) coeffs_.assign(1, BigInt(c)); }  // NOLINT(google-explicit-constructor)
  explicit IntPoly(std::vector<BigInt> ascending);

  static IntPoly monomial(std::size_t degree, BigInt coefficient);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }  // ascending
  bool zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Exact quotient; throws std::logic_error when b does not divide a.
  friend IntPoly exact_div(const IntPoly& a, const IntPoly& b);
  friend bool is_zero(const IntPoly& a) { return a.zero(); }

  double eval(double x) const;
  std::string str(const std::string& var = "e") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;  // ascending powers, no trailing zeros
};

/// Bivariate integer polynomial in (lambda, eps), stored as a vector of
/// eps-polynomials indexed by the lambda power. Exact arithmetic only.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long long c) { if (c != 0) coeffs_.assign(1, IntPoly(c)); }  // NOLINT(google-explicit-constructor)
  explicit BiPoly(std::vector<IntPoly> lambda_ascending);

  static BiPoly lambda();                      // the polynomial "lambda"
  static BiPoly eps_monomial(std::size_t degree, BigInt coefficient);

  const std::vector<IntPoly>& coeffs() const { return coeffs_; }
  bool zero() const { return coeffs_.empty(); }
  int degree_lambda() const { return static_cast<int>(coeffs_.size()) - 1; }
  const IntPoly& leading() const;

  /// Coefficient of lambda^k (zero polynomial when absent).
  const IntPoly& coeff(std::size_t k) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  friend BiPoly exact_div(const BiPoly& a, const BiPoly& b);
  friend bool is_zero(const BiPoly& a) { return a.zero(); }

  BiPoly derivative_lambda() const;
  double eval(double lambda, double eps) const;

 private:
  void trim();
  std::vector<IntPoly> coeffs_;  // ascending lambda powers, no trailing zeros
};

/// Polynomial in lambda with BigInt coefficients: the eps-specialized form.
std::vector<BigInt> specialize_eps_ascending(const BiPoly& f, const BigInt& eps);

/// Resultant of f and g with respect to lambda, as a polynomial in eps:
/// determinant of the Sylvester matrix over Z[eps] by fraction-free
/// elimination.
IntPoly resultant_lambda(const BiPoly& f, const BiPoly& g);

/// Discriminant of a monic (in lambda) polynomial:
/// (-1)^{d(d-1)/2} Res_lambda(f, df/dlambda).
IntPoly discriminant_lambda(const BiPoly& f);

}  // namespace mandelmat
