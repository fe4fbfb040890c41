#pragma once

#include "transient/bigint.hpp"

#include <string>
#include <vector>

namespace transient {

/// Polynomial with integer coefficients, lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  /// 1 + t + ... + t^(p-1).
  static IntPolynomial geometric_sum(int p);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt operator()(const BigInt& t) const;

  /// Divides out the largest power of t and flips the sign so the lowest
  /// coefficient is positive.
  IntPolynomial normalized() const;
  bool is_palindromic() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Res(p, q) as the determinant of the Sylvester matrix. Throws DomainError
/// when either argument is the zero polynomial.
BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

/// `t^-1 - 1 + t`: exponents are shifted by -degree/2 so the Laurent form of
/// a symmetric polynomial is centred on zero.
std::string format_laurent(const IntPolynomial& p);

}  // namespace transient
