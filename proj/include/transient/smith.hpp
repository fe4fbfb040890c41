#pragma once

#include "transient/int_matrix.hpp"

namespace transient {

/// Smith normal form with transform certificates: u * input * v == d.
///
/// `d` has the input's shape; its diagonal is nonnegative, nonzero entries
/// come first, and each divides the next. `u` and `v` are unimodular.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<BigInt> diagonal() const;
};

/// Total on every shape, including 0x0 and non-square input. Pivots on the
/// entry of least absolute value and reduces until the divisibility chain
/// holds. Deterministic for a fixed input.
SnfResult snf(const IntMatrix& m);

/// True iff `r` satisfies every SnfResult invariant for input `m`.
bool verify_snf(const IntMatrix& m, const SnfResult& r);

/// Exact determinant by fraction-free (Bareiss) elimination. det of 0x0 is 1.
/// Throws DomainError for non-square input.
BigInt det(const IntMatrix& m);

}  // namespace transient
