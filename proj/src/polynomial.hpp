#ifndef FLATMORSE_POLYNOMIAL_HPP
#define FLATMORSE_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "rational.hpp"

namespace flatmorse {

// Dense integer-coefficient polynomial in one variable t, arbitrary
// precision. The zero polynomial has degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return monomial(0, 1); }
  static IntPolynomial monomial(int degree, BigInt coeff);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int degree) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  IntPolynomial pow(unsigned exponent) const;

  // Exact quotient; throws Error(InexactDivision) on nonzero remainder.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  BigInt evaluate(const BigInt& x) const;

  // t^dim * P(1/t); requires dim >= degree().
  IntPolynomial reversed(int dim) const;
  bool is_palindromic(int dim) const { return *this == reversed(dim); }

  bool has_negative_coefficient() const;

  // "1 + t^2 + 4t^3"; "0" for the zero polynomial.
  std::string to_text() const;
  // Decimal strings, lowest degree first.
  std::vector<std::string> to_decimal_strings() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace flatmorse

#endif
