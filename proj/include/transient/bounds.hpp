#pragma once

#include "transient/abelian_group.hpp"
#include "transient/int_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace transient {

/// Homology of the p-fold branched covers of one knot, keyed by p >= 2.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(std::initializer_list<std::pair<const int, AbelianGroup>> covers);

  /// Throws DomainError for p < 2, or for a double-cover group that is
  /// infinite or of even order (impossible for a knot).
  void set(int p, AbelianGroup g);

  const std::map<int, AbelianGroup>& covers() const noexcept { return covers_; }
  bool empty() const noexcept { return covers_.empty(); }
  const AbelianGroup* find(int p) const;

 private:
  std::map<int, AbelianGroup> covers_;
};

/// One rule's contribution to a bound. Tags are stable strings:
///   thm1.1/p=2       rank(H1(Sigma_2)) <= 2 tr + 1
///   thm1.2/p=<p>     rank(H1(Sigma_p)) <= p tr + 1
///   thm1.3/p=2       tr = 1 forces a cyclic H1(Sigma_2)
///   nontrivial/p=<p> nontrivial cover homology, so the knot is knotted
///   thm3.1/n=<n>     n-fold connected sum of a knot with nontrivial H1(Sigma_2)
///   wendt/p=2        rank(H1(Sigma_2)) <= u
///   heegaard/p=2     rank(H1(Sigma_2)) <= 2 t + 1
///   thm2.6/p=2       t = 1 forces a cyclic H1(Sigma_2)
///   via:tr           tr <= u and tr <= t carry the tr bound over
///   upper:u, upper:t, upper:min(u,t)   tr <= u, tr <= t
///   thm5.1           tr(K1 # K2) <= tr(K1) + tr(K2) + 1
///   upper:u-subadditive   tr(K1 # K2) <= u(K1 # K2) <= u(K1) + u(K2)
///   none             no rule applies (bound 0 or unknown)
struct BoundTerm {
  std::string tag;
  int value = 0;

  friend bool operator==(const BoundTerm&, const BoundTerm&) = default;
};

struct LowerBound {
  int value = 0;
  /// Tags of the terms that attain `value`.
  std::vector<std::string> provenance;
  /// Every rule evaluated, attaining or not.
  std::vector<BoundTerm> terms;
};

struct UpperBound {
  std::optional<int> value;  // nullopt: unknown
  std::vector<std::string> provenance;
};

struct BoundReport {
  LowerBound tr_lower;
  UpperBound tr_upper;
  LowerBound u_lower;
  LowerBound t_lower;
  std::optional<int> exact;
  /// Set when supplied u/t data contradict the homology bounds.
  bool inconsistent = false;
  std::vector<std::string> issues;
};

/// Minimal number of generators.
int rank(const AbelianGroup& g);

/// Max over the cover rules; throws DomainError on an empty profile.
LowerBound tr_lower_bound(const HomologyProfile& h);

/// rank of H1(Sigma_2).
int u_lower_bound(const AbelianGroup& g2);

/// max(ceil((rank - 1)/2), 2 if non-cyclic, 1 if nontrivial).
int t_lower_bound(const AbelianGroup& g2);

/// Combines homology lower bounds with known u and t. Never throws on
/// inconsistent data; the report is flagged instead.
BoundReport classify(const HomologyProfile& h, std::optional<int> u_known,
                     std::optional<int> t_known);

AbelianGroup connected_sum_homology(const AbelianGroup& a, const AbelianGroup& b);

/// tr lower bound for the n-fold connected sum of a knot whose double
/// cover has homology g2. The terms include the thm3.1/n=<n> instance,
/// ceil((n - 1)/2). Throws DomainError if g2 is trivial or n < 1.
LowerBound repeated_sum_bound(const AbelianGroup& g2, int n);
int repeated_sum_lower_bound(const AbelianGroup& g2, int n);

/// tr1 + tr2 + 1. Throws DomainError on negative input.
int connected_sum_upper_bound(int tr1, int tr2);

/// [[a1, a2, a3], [a1+a2, a1+a2, 2a3], [a4, a4, a5]].
IntMatrix lemma_grupos_presentation(long long a1, long long a2, long long a3, long long a4,
                                    long long a5);
/// det [[a1+a2, 2a3], [a4, a5]].
BigInt lemma_grupos_hypothesis_det(long long a1, long long a2, long long a3, long long a4,
                                   long long a5);
/// Group presented by lemma_grupos_presentation. Throws DomainError unless
/// the 2x2 hypothesis determinant is +-1.
AbelianGroup lemma_grupos_group(long long a1, long long a2, long long a3, long long a4,
                                long long a5);

}  // namespace transient
