#include "transient/abelian_group.hpp"

#include "transient/errors.hpp"
#include "transient/smith.hpp"

#include <cctype>
#include <sstream>

namespace transient {

AbelianGroup::AbelianGroup(std::vector<BigInt> torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw DomainError("AbelianGroup: torsion entries must be >= 2");
    if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
      throw DomainError("AbelianGroup: torsion is not a divisibility chain");
  }
}

AbelianGroup AbelianGroup::cyclic(const BigInt& order) {
  BigInt n = abs(order);
  if (n == 0) return free(1);
  if (n == 1) return {};
  return AbelianGroup({n}, 0);
}

BigInt AbelianGroup::torsion_order() const {
  BigInt order = 1;
  for (const auto& t : torsion_) order *= t;
  return order;
}

AbelianGroup group_from_presentation(const IntMatrix& m) {
  auto diag = snf(m).diagonal();
  std::vector<BigInt> torsion;
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) torsion.push_back(d);
  }
  return AbelianGroup(std::move(torsion), m.cols() - nonzero);
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<BigInt> entries = a.torsion();
  entries.insert(entries.end(), b.torsion().begin(), b.torsion().end());
  const std::size_t free_rank = a.free_rank() + b.free_rank();
  IntMatrix relations = IntMatrix::diagonal(entries);
  AbelianGroup torsion_part = group_from_presentation(relations);
  return AbelianGroup(torsion_part.torsion(), free_rank);
}

std::string format_cover_notation(int p, const AbelianGroup& g) {
  std::ostringstream out;
  out << '{' << p << ",{";
  bool first = true;
  for (const auto& t : g.torsion()) {
    out << (first ? "" : ",") << t;
    first = false;
  }
  for (std::size_t i = 0; i < g.free_rank(); ++i) {
    out << (first ? "" : ",") << 0;
    first = false;
  }
  out << "}}";
  return out.str();
}

std::pair<int, AbelianGroup> parse_cover_notation(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch)
      throw ParseError(std::string("cover notation: expected '") + ch + "'", pos);
    ++pos;
  };
  auto number = [&] {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("cover notation: expected number", start);
    return BigInt(text.substr(start, pos - start));
  };
  expect('{');
  BigInt p = number();
  expect(',');
  expect('{');
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;
  skip();
  if (pos < text.size() && text[pos] != '}') {
    while (true) {
      BigInt d = number();
      if (d == 0) ++free_rank;
      else if (free_rank) throw ParseError("cover notation: torsion after free factor", pos);
      else if (d != 1) torsion.push_back(d);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect('}');
  expect('}');
  skip();
  if (pos != text.size()) throw ParseError("cover notation: trailing characters", pos);
  return {p.convert_to<int>(), AbelianGroup(std::move(torsion), free_rank)};
}

std::string format_group(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : g.torsion()) {
    out << (first ? "" : " + ") << "Z_" << t;
    first = false;
  }
  for (std::size_t i = 0; i < g.free_rank(); ++i) {
    out << (first ? "" : " + ") << 'Z';
    first = false;
  }
  return out.str();
}

}  // namespace transient
