#pragma once

#include "transient/bigint.hpp"
#include "transient/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace transient {

/// Finitely generated abelian group in invariant-factor form:
/// Z_{t1} + ... + Z_{tk} + Z^free_rank with every t_i >= 2 and t_i | t_{i+1}.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Throws DomainError if the torsion list is not a divisibility chain of
  /// entries >= 2.
  AbelianGroup(std::vector<BigInt> torsion, std::size_t free_rank);

  static AbelianGroup cyclic(const BigInt& order);  // order 0 gives Z, 1 gives 0
  static AbelianGroup free(std::size_t rank) { return AbelianGroup({}, rank); }

  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }

  /// Minimal number of generators.
  std::size_t rank() const noexcept { return torsion_.size() + free_rank_; }
  bool is_trivial() const noexcept { return rank() == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_cyclic() const noexcept { return rank() <= 1; }
  /// Product of the torsion coefficients (the order when finite).
  BigInt torsion_order() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<BigInt> torsion_;
  std::size_t free_rank_ = 0;
};

/// Cokernel of `m` viewed as relations (rows) on `m.cols()` generators.
AbelianGroup group_from_presentation(const IntMatrix& m);

/// Direct sum renormalized to invariant factors.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// `{p,{d1,...,dk,0,...,0}}`: torsion in chain order, free factors as zeros.
std::string format_cover_notation(int p, const AbelianGroup& g);

/// Parses `{p,{...}}` back into (p, group). Throws ParseError.
std::pair<int, AbelianGroup> parse_cover_notation(const std::string& text);

/// `Z_3 + Z_3 + Z`, or `0` for the trivial group.
std::string format_group(const AbelianGroup& g);

}  // namespace transient
