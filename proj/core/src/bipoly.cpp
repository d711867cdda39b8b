#include "mandelmat/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mandelmat {

// ---- IntPoly ----

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPoly IntPoly::monomial(std::size_t degree, BigInt coefficient) {
  IntPoly p;
  if (!coefficient.is_zero()) {
    p.coeffs_.assign(degree + 1, BigInt(0));
    p.coeffs_[degree] = std::move(coefficient);
  }
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
  if (zero()) throw std::logic_error("IntPoly::leading on zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.zero()) throw std::logic_error("IntPoly exact_div by zero");
  if (a.zero()) return {};
  if (a.degree() < b.degree())
    throw std::logic_error("IntPoly exact_div: degree underflow");
  std::vector<BigInt> rem = a.coeffs_;
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                           BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& num = rem[k + static_cast<std::size_t>(b.degree())];
    if (num.is_zero()) continue;
    if (num % b.leading() != 0)
      throw std::logic_error("IntPoly exact_div: inexact leading division");
    quot[k] = num / b.leading();
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      rem[k + j] -= quot[k] * b.coeffs_[j];
  }
  for (const BigInt& r : rem)
    if (!r.is_zero()) throw std::logic_error("IntPoly exact_div: nonzero remainder");
  return IntPoly(std::move(quot));
}

double IntPoly::eval(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x + static_cast<double>(coeffs_[i]);
  return acc;
}

std::string IntPoly::str(const std::string& var) const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) os << "-";
    const BigInt mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1) os << mag.str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---- BiPoly ----

BiPoly::BiPoly(std::vector<IntPoly> lambda_ascending)
    : coeffs_(std::move(lambda_ascending)) {
  trim();
}

BiPoly BiPoly::lambda() {
  BiPoly p;
  p.coeffs_ = {IntPoly(0), IntPoly(1)};
  p.trim();
  return p;
}

BiPoly BiPoly::eps_monomial(std::size_t degree, BigInt coefficient) {
  BiPoly p;
  IntPoly m = IntPoly::monomial(degree, std::move(coefficient));
  if (!m.zero()) p.coeffs_.assign(1, std::move(m));
  return p;
}

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().zero()) coeffs_.pop_back();
}

const IntPoly& BiPoly::leading() const {
  if (zero()) throw std::logic_error("BiPoly::leading on zero polynomial");
  return coeffs_.back();
}

const IntPoly& BiPoly::coeff(std::size_t k) const {
  static const IntPoly kZero{};
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (IntPoly& c : out.coeffs_) c = -c;
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<IntPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = c[i] + a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
  return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<IntPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return BiPoly(std::move(c));
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.zero()) throw std::logic_error("BiPoly exact_div by zero");
  if (a.zero()) return {};
  if (a.degree_lambda() < b.degree_lambda())
    throw std::logic_error("BiPoly exact_div: degree underflow");
  std::vector<IntPoly> rem = a.coeffs_;
  std::vector<IntPoly> quot(
      static_cast<std::size_t>(a.degree_lambda() - b.degree_lambda()) + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const IntPoly& num = rem[k + static_cast<std::size_t>(b.degree_lambda())];
    if (num.zero()) continue;
    quot[k] = exact_div(num, b.leading());
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      rem[k + j] = rem[k + j] - quot[k] * b.coeffs_[j];
  }
  for (const IntPoly& r : rem)
    if (!r.zero()) throw std::logic_error("BiPoly exact_div: nonzero remainder");
  return BiPoly(std::move(quot));
}

BiPoly BiPoly::derivative_lambda() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<IntPoly> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * IntPoly(static_cast<long long>(i));
  return BiPoly(std::move(d));
}

double BiPoly::eval(double lambda_value, double eps_value) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * lambda_value + coeffs_[i].eval(eps_value);
  return acc;
}

std::vector<BigInt> specialize_eps_ascending(const BiPoly& f, const BigInt& eps) {
  std::vector<BigInt> out;
  out.reserve(f.coeffs().size());
  for (const IntPoly& c : f.coeffs()) {
    BigInt acc = 0;
    for (std::size_t i = c.coeffs().size(); i-- > 0;)
      acc = acc * eps + c.coeffs()[i];
    out.push_back(std::move(acc));
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

IntPoly resultant_lambda(const BiPoly& f, const BiPoly& g) {
  const int m = f.degree_lambda();
  const int n = g.degree_lambda();
  if (m < 0 || n < 0)
    throw std::invalid_argument("resultant_lambda: zero polynomial");
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return IntPoly(1);
  std::vector<std::vector<IntPoly>> syl(size, std::vector<IntPoly>(size));
  // n rows of f's coefficients (descending), then m rows of g's.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
          f.coeff(static_cast<std::size_t>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
          g.coeff(static_cast<std::size_t>(n - k));
  return bareiss_determinant(std::move(syl));
}

IntPoly discriminant_lambda(const BiPoly& f) {
  const int d = f.degree_lambda();
  if (d < 1) throw std::invalid_argument("discriminant_lambda: degree < 1");
  const IntPoly res = resultant_lambda(f, f.derivative_lambda());
  const IntPoly scaled = exact_div(res, f.leading());
  return (d * (d - 1) / 2) % 2 == 0 ? scaled : -scaled;
}

}  // namespace mandelmat
