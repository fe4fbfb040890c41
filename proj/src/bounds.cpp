#include "transient/bounds.hpp"

#include "transient/errors.hpp"
#include "transient/smith.hpp"

#include <algorithm>

namespace transient {

namespace {

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

std::string cover_tag(const char* rule, int p) { return std::string(rule) + "/p=" + std::to_string(p); }

LowerBound settle(std::vector<BoundTerm> terms) {
  LowerBound out;
  for (const auto& t : terms) out.value = std::max(out.value, t.value);
  if (out.value == 0) {
    out.provenance.push_back("none");
  } else {
    for (const auto& t : terms)
      if (t.value == out.value) out.provenance.push_back(t.tag);
  }
  out.terms = std::move(terms);
  return out;
}

}  // namespace

HomologyProfile::HomologyProfile(std::initializer_list<std::pair<const int, AbelianGroup>> covers) {
  for (const auto& [p, g] : covers) set(p, g);
}

void HomologyProfile::set(int p, AbelianGroup g) {
  if (p < 2) throw DomainError("HomologyProfile: p must be >= 2");
  if (p == 2 && (!g.is_finite() || g.torsion_order() % 2 == 0))
    throw DomainError("HomologyProfile: H1 of the double cover of a knot is finite of odd order");
  covers_.insert_or_assign(p, std::move(g));
}

const AbelianGroup* HomologyProfile::find(int p) const {
  auto it = covers_.find(p);
  return it == covers_.end() ? nullptr : &it->second;
}

int rank(const AbelianGroup& g) { return static_cast<int>(g.rank()); }

LowerBound tr_lower_bound(const HomologyProfile& h) {
  if (h.empty()) throw DomainError("tr_lower_bound: empty homology profile");
  std::vector<BoundTerm> terms;
  for (const auto& [p, g] : h.covers()) {
    terms.push_back({cover_tag(p == 2 ? "thm1.1" : "thm1.2", p), ceil_div(rank(g) - 1, p)});
    if (p == 2) terms.push_back({cover_tag("thm1.3", 2), rank(g) >= 2 ? 2 : 0});
  }
  for (const auto& [p, g] : h.covers())
    if (!g.is_trivial()) {
      terms.push_back({cover_tag("nontrivial", p), 1});
      break;
    }
  return settle(std::move(terms));
}

int u_lower_bound(const AbelianGroup& g2) { return rank(g2); }

int t_lower_bound(const AbelianGroup& g2) {
  const int r = rank(g2);
  return std::max({ceil_div(r - 1, 2), r >= 2 ? 2 : 0, r >= 1 ? 1 : 0});
}

BoundReport classify(const HomologyProfile& h, std::optional<int> u_known,
                     std::optional<int> t_known) {
  BoundReport rep;
  rep.tr_lower = tr_lower_bound(h);

  if (u_known && t_known) {
    rep.tr_upper.value = std::min(*u_known, *t_known);
    rep.tr_upper.provenance.push_back("upper:min(u,t)");
  } else if (u_known) {
    rep.tr_upper.value = *u_known;
    rep.tr_upper.provenance.push_back("upper:u");
  } else if (t_known) {
    rep.tr_upper.value = *t_known;
    rep.tr_upper.provenance.push_back("upper:t");
  } else {
    rep.tr_upper.provenance.push_back("none");
  }

  std::vector<BoundTerm> u_terms{{"via:tr", rep.tr_lower.value}};
  std::vector<BoundTerm> t_terms{{"via:tr", rep.tr_lower.value}};
  if (const AbelianGroup* g2 = h.find(2)) {
    const int r = rank(*g2);
    u_terms.push_back({"wendt/p=2", u_lower_bound(*g2)});
    t_terms.push_back({"heegaard/p=2", ceil_div(r - 1, 2)});
    t_terms.push_back({"thm2.6/p=2", r >= 2 ? 2 : 0});
    t_terms.push_back({"nontrivial/p=2", r >= 1 ? 1 : 0});
  }
  rep.u_lower = settle(std::move(u_terms));
  rep.t_lower = settle(std::move(t_terms));

  if (rep.tr_upper.value && rep.tr_lower.value > *rep.tr_upper.value) {
    rep.inconsistent = true;
    rep.issues.push_back("tr lower bound " + std::to_string(rep.tr_lower.value) +
                         " exceeds upper bound " + std::to_string(*rep.tr_upper.value));
  }
  if (u_known && *u_known < rep.u_lower.value) {
    rep.inconsistent = true;
    rep.issues.push_back("u = " + std::to_string(*u_known) + " is below its homology bound " +
                         std::to_string(rep.u_lower.value));
  }
  if (t_known && *t_known < rep.t_lower.value) {
    rep.inconsistent = true;
    rep.issues.push_back("t = " + std::to_string(*t_known) + " is below its homology bound " +
                         std::to_string(rep.t_lower.value));
  }
  if (!rep.inconsistent && rep.tr_upper.value && *rep.tr_upper.value == rep.tr_lower.value)
    rep.exact = rep.tr_lower.value;
  return rep;
}

AbelianGroup connected_sum_homology(const AbelianGroup& a, const AbelianGroup& b) {
  return direct_sum(a, b);
}

LowerBound repeated_sum_bound(const AbelianGroup& g2, int n) {
  if (n < 1) throw DomainError("repeated_sum_lower_bound: n must be >= 1");
  if (g2.is_trivial())
    throw DomainError("repeated_sum_lower_bound: H1 of the double cover must be nontrivial");
  AbelianGroup sum = g2;
  for (int i = 1; i < n; ++i) sum = connected_sum_homology(sum, g2);
  HomologyProfile profile;
  profile.set(2, sum);
  LowerBound from_rank = tr_lower_bound(profile);
  std::vector<BoundTerm> terms = from_rank.terms;
  // rank(sum) >= n, so the rank rule alone gives at least ceil((n - 1)/2).
  terms.push_back({"thm3.1/n=" + std::to_string(n), ceil_div(n - 1, 2)});
  return settle(std::move(terms));
}

int repeated_sum_lower_bound(const AbelianGroup& g2, int n) {
  return repeated_sum_bound(g2, n).value;
}

int connected_sum_upper_bound(int tr1, int tr2) {
  if (tr1 < 0 || tr2 < 0) throw DomainError("connected_sum_upper_bound: negative input");
  return tr1 + tr2 + 1;
}

IntMatrix lemma_grupos_presentation(long long a1, long long a2, long long a3, long long a4,
                                    long long a5) {
  return IntMatrix{{a1, a2, a3}, {a1 + a2, a1 + a2, 2 * a3}, {a4, a4, a5}};
}

BigInt lemma_grupos_hypothesis_det(long long a1, long long a2, long long a3, long long a4,
                                   long long a5) {
  return det(IntMatrix{{a1 + a2, 2 * a3}, {a4, a5}});
}

AbelianGroup lemma_grupos_group(long long a1, long long a2, long long a3, long long a4,
                                long long a5) {
  BigInt d = lemma_grupos_hypothesis_det(a1, a2, a3, a4, a5);
  if (abs(d) != 1)
    throw DomainError("lemma hypothesis violated: det [[a1+a2, 2a3], [a4, a5]] = " + d.str() +
                      ", expected +-1");
  return group_from_presentation(lemma_grupos_presentation(a1, a2, a3, a4, a5));
}

}  // namespace transient
