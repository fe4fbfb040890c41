#include "transient/polynomial.hpp"

#include "transient/errors.hpp"
#include "transient/int_matrix.hpp"
#include "transient/smith.hpp"

#include <sstream>

namespace transient {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::geometric_sum(int p) {
  if (p < 1) throw DomainError("geometric_sum: p must be >= 1");
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(1)));
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::normalized() const {
  if (is_zero()) return {};
  std::size_t low = 0;
  while (coeffs_[low] == 0) ++low;
  std::vector<BigInt> c(coeffs_.begin() + static_cast<std::ptrdiff_t>(low), coeffs_.end());
  if (c.front() < 0)
    for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = coeffs_.size(); i < j--; ++i)
    if (coeffs_[i] != coeffs_[j]) return false;
  return true;
}

BigInt resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant: zero polynomial");
  const auto m = static_cast<std::size_t>(p.degree());
  const auto n = static_cast<std::size_t>(q.degree());
  const std::size_t size = m + n;
  IntMatrix sylvester(size, size);
  // n shifted copies of p, then m shifted copies of q, highest degree first.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) sylvester(r, r + k) = p.coefficients()[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) sylvester(n + r, r + k) = q.coefficients()[n - k];
  return det(sylvester);
}

std::string format_laurent(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const int shift = p.degree() / 2;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const BigInt& c = p.coefficients()[i];
    if (c == 0) continue;
    const int e = static_cast<int>(i) - shift;
    BigInt mag = abs(c);
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace transient
