#include "polynomial.hpp"

#include <sstream>

namespace flatmorse {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
  if (degree < 0)
    throw Error(ErrorCode::InvalidArgument, "monomial degree must be >= 0");
  if (coeff == 0) return zero();
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(int degree) const {
  if (degree < 0 || degree > this->degree()) return 0;
  return coeffs_[degree];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = coefficient(static_cast<int>(i)) + o.coefficient(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = coefficient(static_cast<int>(i)) - o.coefficient(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = one();
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero())
    throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
  if (is_zero()) return zero();
  std::vector<BigInt> rem = coeffs_;
  int dd = divisor.degree();
  const BigInt& lead = divisor.coeffs_[dd];
  int qd = degree() - dd;
  if (qd < 0)
    throw Error(ErrorCode::InexactDivision, "degree of dividend too small");
  std::vector<BigInt> quot(qd + 1);
  for (int i = qd; i >= 0; --i) {
    BigInt& top = rem[i + dd];
    if (top % lead != 0)
      throw Error(ErrorCode::InexactDivision, "nonzero remainder");
    BigInt q = top / lead;
    quot[i] = q;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= q * divisor.coeffs_[j];
  }
  for (const BigInt& r : rem)
    if (r != 0) throw Error(ErrorCode::InexactDivision, "nonzero remainder");
  return IntPolynomial(std::move(quot));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::reversed(int dim) const {
  if (is_zero()) return zero();
  if (dim < degree())
    throw Error(ErrorCode::InvalidArgument,
                "reversal dimension below polynomial degree");
  std::vector<BigInt> c(dim + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[dim - i] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::has_negative_coefficient() const {
  for (const BigInt& c : coeffs_)
    if (c < 0) return true;
  return false;
}

std::string IntPolynomial::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigInt mag = coeffs_[i] < 0 ? BigInt(-coeffs_[i]) : coeffs_[i];
    if (first) {
      if (coeffs_[i] < 0) os << "-";
      first = false;
    } else {
      os << (coeffs_[i] < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i == 1)
      os << "t";
    else if (i > 1)
      os << "t^" << i;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const BigInt& c : coeffs_) out.push_back(c.str());
  return out;
}

}  // namespace flatmorse
