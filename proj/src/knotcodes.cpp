#include "transient/knotcodes.hpp"

#include "transient/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace transient {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, const char* what) : text_(text), what_(what) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  void expect_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::int64_t integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (INT64_MAX - 9) / 10) throw ParseError(std::string(what_) + ": integer too large", start);
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == digits) throw ParseError(std::string(what_) + ": expected integer", start);
    return negative ? -value : value;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(std::string(what_) + ": " + msg, pos_);
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  const char* what_;
  std::size_t pos_ = 0;
};

std::int64_t pd_label(Scanner& in) {
  const std::size_t at = in.position();
  std::int64_t v = in.integer(false);
  if (v <= 0) throw ParseError("PD: edge labels must be positive", at);
  return v;
}

PdCrossing pd_tuple(Scanner& in, char open, char close) {
  in.expect(open);
  PdCrossing x{};
  for (int i = 0; i < 4; ++i) {
    if (i) in.expect(',');
    x[static_cast<std::size_t>(i)] = pd_label(in);
  }
  in.expect(close);
  return x;
}

// Union-find over dense indices.
struct Components {
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t count() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i;
    return n;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

// ---------------------------------------------------------------------------

void validate_pd(const PdCode& pd) {
  if (pd.crossings.empty()) throw ValidationError("PD: code has no crossings");
  std::map<std::int64_t, int> occurrences;
  for (const auto& x : pd.crossings)
    for (auto label : x) {
      if (label <= 0) throw ValidationError("PD: edge labels must be positive");
      ++occurrences[label];
    }
  std::vector<std::int64_t> dangling;
  for (const auto& [label, n] : occurrences)
    if (n != 2) dangling.push_back(label);
  if (!dangling.empty()) {
    std::ostringstream msg;
    msg << "PD: edge labels must occur exactly twice; offending labels:";
    for (auto l : dangling) msg << ' ' << l << " (x" << occurrences[l] << ')';
    throw ValidationError(msg.str());
  }

  std::map<std::int64_t, std::size_t> index;
  for (const auto& [label, n] : occurrences) index.emplace(label, index.size());
  Components strands(index.size());
  for (const auto& x : pd.crossings) {
    strands.join(index[x[0]], index[x[2]]);
    strands.join(index[x[1]], index[x[3]]);
  }
  if (auto n = strands.count(); n != 1)
    throw ValidationError("PD: code describes a link with " + std::to_string(n) +
                          " components, not a knot");
}

PdCode parse_pd(std::string_view text) {
  Scanner in(text, "PD");
  PdCode pd;
  if (in.peek() == '[') {
    in.expect('[');
    if (!in.accept(']')) {
      do pd.crossings.push_back(pd_tuple(in, '[', ']'));
      while (in.accept(','));
      in.expect(']');
    }
  } else {
    in.expect_word("PD");
    in.expect('[');
    if (!in.accept(']')) {
      do {
        in.expect_word("X");
        pd.crossings.push_back(pd_tuple(in, '(', ')'));
      } while (in.accept(','));
      in.expect(']');
    }
  }
  if (!in.at_end()) in.fail("trailing characters");
  validate_pd(pd);
  return pd;
}

std::string format_pd(const PdCode& pd) {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    out << (i ? "," : "") << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------

int closure_components(int strands, const std::vector<int>& letters) {
  if (strands < 1) return 0;
  // perm[i]: where the strand starting at position i ends after the word.
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> at(perm);  // at[position] = starting strand now there
  for (int e : letters) {
    const int g = std::abs(e);
    if (g >= 1 && g < strands) std::swap(at[static_cast<std::size_t>(g - 1)], at[static_cast<std::size_t>(g)]);
  }
  for (int pos = 0; pos < strands; ++pos) perm[static_cast<std::size_t>(at[static_cast<std::size_t>(pos)])] = pos;
  int cycles = 0;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

BraidWord parse_braid(std::string_view text) {
  Scanner in(text, "braid");
  BraidWord b;
  const std::size_t at = in.position();
  std::int64_t n = in.integer(false);
  if (n < 1 || n > 1'000'000) throw ParseError("braid: strand count must be >= 1", at);
  b.strands = static_cast<int>(n);
  in.expect(':');
  while (!in.at_end()) {
    const std::size_t letter_at = in.position();
    std::int64_t e = in.integer(true);
    if (e == 0 || e >= n || e <= -n)
      throw ValidationError("braid: generator " + std::to_string(e) + " at position " +
                            std::to_string(letter_at) + " is out of range for " +
                            std::to_string(n) + " strands");
    b.letters.push_back(static_cast<int>(e));
  }
  if (int c = closure_components(b.strands, b.letters); c != 1)
    throw ValidationError("braid: closure has " + std::to_string(c) + " components, not a knot");
  return b;
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream out;
  out << b.strands << ':';
  for (int e : b.letters) out << ' ' << e;
  return out.str();
}

// ---------------------------------------------------------------------------

int Diagram::writhe() const noexcept {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

std::size_t Diagram::face_of(Dart d) const {
  return face_index_.at(d.crossing * 4 + static_cast<std::size_t>(d.slot));
}

namespace {

std::size_t dart_id(Dart d) { return d.crossing * 4 + static_cast<std::size_t>(d.slot); }

Dart rotate(Dart d, int by) { return Dart{d.crossing, (d.slot + by + 4) % 4}; }

// Sign of cross(position(over_in), position(under_in)) with slots placed
// counterclockwise at south, east, north, west.
int crossing_sign(int under_in, int over_in) {
  static constexpr int px[4] = {0, 1, 0, -1};
  static constexpr int py[4] = {-1, 0, 1, 0};
  int z = px[over_in] * py[under_in] - py[over_in] * px[under_in];
  return z > 0 ? 1 : -1;
}

}  // namespace

Diagram reconstruct_diagram(const PdCode& pd) {
  validate_pd(pd);
  Diagram dg;
  const std::size_t n = pd.crossings.size();
  dg.crossings.resize(n);

  // Edges in order of first appearance; each has exactly two ends.
  std::map<std::int64_t, std::size_t> edge_of_label;
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      const auto label = pd.crossings[c][static_cast<std::size_t>(s)];
      auto [it, fresh] = edge_of_label.emplace(label, dg.edges.size());
      if (fresh) {
        dg.edges.push_back(DiagramEdge{label, {Dart{c, s}, Dart{}}});
      } else {
        dg.edges[it->second].ends[1] = Dart{c, s};
      }
      dg.crossings[c].edges[static_cast<std::size_t>(s)] = it->second;
    }
  auto opposite_end = [&](Dart d) {
    const auto& e = dg.edges[dg.crossings[d.crossing].edges[static_cast<std::size_t>(d.slot)]];
    return e.ends[0] == d ? e.ends[1] : e.ends[0];
  };

  // Orient by walking the knot from the under-strand entering crossing 0.
  std::vector<std::optional<int>> under_in(n), over_in(n);
  Dart arrive{0, 0};
  for (std::size_t steps = 0; steps < 2 * n; ++steps) {
    auto& slot = arrive.slot % 2 == 0 ? under_in[arrive.crossing] : over_in[arrive.crossing];
    slot = arrive.slot;
    arrive = opposite_end(rotate(arrive, 2));
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (!under_in[c] || !over_in[c]) throw ValidationError("PD: strand trace does not visit every crossing");
    dg.crossings[c].sign = crossing_sign(*under_in[c], *over_in[c]);
  }

  // Faces are the orbits of dart -> rotate(opposite_end(dart), +1).
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  dg.face_index_.assign(4 * n, unset);
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      Dart start{c, s};
      if (dg.face_index_[dart_id(start)] != unset) continue;
      Face face;
      Dart d = start;
      do {
        dg.face_index_[dart_id(d)] = dg.faces.size();
        face.corners.push_back(d);
        face.edges.push_back(dg.crossings[d.crossing].edges[static_cast<std::size_t>(d.slot)]);
        d = rotate(opposite_end(d), 1);
      } while (!(d == start));
      dg.faces.push_back(std::move(face));
    }
  if (dg.euler_characteristic() != 2)
    throw ValidationError("PD: face trace is not planar (V - E + F = " +
                          std::to_string(dg.euler_characteristic()) + ")");

  for (std::size_t f = 1; f < dg.faces.size(); ++f)
    if (dg.faces[f].corners.size() > dg.faces[dg.unbounded_face].corners.size())
      dg.unbounded_face = f;

  // Faces on either side of the edge at dart (c, s) close corners s and s + 1.
  std::vector<std::vector<std::size_t>> adjacent(dg.faces.size());
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      std::size_t a = dg.face_of(Dart{c, s});
      std::size_t b = dg.face_of(Dart{c, (s + 1) % 4});
      adjacent[a].push_back(b);
      adjacent[b].push_back(a);
    }
  std::vector<std::optional<Shade>> shade(dg.faces.size());
  std::vector<std::size_t> queue{dg.unbounded_face};
  shade[dg.unbounded_face] = Shade::White;
  while (!queue.empty()) {
    std::size_t f = queue.back();
    queue.pop_back();
    const Shade other = *shade[f] == Shade::White ? Shade::Black : Shade::White;
    for (std::size_t g : adjacent[f]) {
      if (!shade[g]) {
        shade[g] = other;
        queue.push_back(g);
      } else if (*shade[g] != other) {
        throw ValidationError("PD: regions admit no checkerboard shading");
      }
    }
  }
  dg.shading.reserve(shade.size());
  for (auto& s : shade) {
    if (!s) throw ValidationError("PD: disconnected diagram");
    dg.shading.push_back(*s);
  }
  return dg;
}

}  // namespace transient
