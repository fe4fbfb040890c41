#pragma once

#include "transient/abelian_group.hpp"
#include "transient/int_matrix.hpp"
#include "transient/knotcodes.hpp"
#include "transient/polynomial.hpp"

#include <variant>

namespace transient {

/// Seifert form of a knot: square, and V - V^T unimodular.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  /// Throws ValidationError unless `v` is square with det(V - V^T) = 1.
  explicit SeifertMatrix(IntMatrix v);

  const IntMatrix& matrix() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.rows(); }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix v_;
};

/// Reduced Goeritz matrix: symmetric with odd determinant.
class GoeritzMatrix {
 public:
  GoeritzMatrix() = default;
  /// Throws ValidationError unless `g` is symmetric with odd determinant.
  explicit GoeritzMatrix(IntMatrix g);

  const IntMatrix& matrix() const noexcept { return g_; }

 private:
  IntMatrix g_;
};

/// Goeritz matrix on the White regions of a shaded diagram, reduced by
/// deleting the unbounded region.
///
/// A crossing whose White corners sit counterclockwise from the under-strand
/// to the over-strand (corners closing slots 1 and 3) has eta = +1, otherwise
/// eta = -1. Off-diagonal entries are -sum(eta) over crossings joining two
/// distinct White regions; each diagonal entry is minus the rest of its row.
GoeritzMatrix goeritz_matrix(const Diagram& d);

/// Seifert's algorithm on a closed braid: one disk per strand, one
/// half-twisted band per letter, and one basis loop for every pair of
/// consecutive letters with the same generator index. The result has
/// size (letters - strands + 1).
SeifertMatrix seifert_matrix_from_braid(const BraidWord& b);

/// det(V - t V^T), shifted to start at t^0 with a positive constant term.
IntPolynomial alexander_polynomial(const SeifertMatrix& v);

/// Square presentation of H1 of the p-fold branched cover, of size
/// n(p-1) for an n x n Seifert matrix: block tridiagonal with V + V^T on the
/// diagonal, -V above it and -V^T below it. Throws DomainError for p < 2.
IntMatrix cover_presentation(const SeifertMatrix& v, int p);

using HomologySource = std::variant<SeifertMatrix, GoeritzMatrix>;

/// H1 of the p-fold cyclic branched cover. Goeritz sources only present the
/// double cover; any other p throws DomainError.
AbelianGroup cover_homology(const SeifertMatrix& v, int p);
AbelianGroup cover_homology(const GoeritzMatrix& g, int p);
AbelianGroup cover_homology(const HomologySource& source, int p);

/// Result of Fox's order formula: either finite with an exact order, or
/// infinite (the product vanishes).
struct FoxOrder {
  bool infinite = false;
  BigInt order;  // meaningful only when finite

  static FoxOrder finite(BigInt n) { return {false, std::move(n)}; }
  static FoxOrder infinite_order() { return {true, 0}; }

  friend bool operator==(const FoxOrder&, const FoxOrder&) = default;
};

/// |prod_{j=1}^{p-1} delta(zeta_p^j)| computed as |Res(delta, 1 + t + ... + t^(p-1))|.
/// Throws DomainError for p < 2 or a zero polynomial.
FoxOrder fox_order(const IntPolynomial& delta, int p);

/// Block sizes above this are allowed but worth a diagnostic.
inline constexpr int kRecommendedMaxCover = 12;

}  // namespace transient
