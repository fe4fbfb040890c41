#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace transient {

// ---------------------------------------------------------------------------
// Planar diagram codes

/// One `X(a,b,c,d)` entry: edge labels counterclockwise around the crossing,
/// starting from the incoming under-strand. Slots 0 and 2 carry the
/// under-strand, slots 1 and 3 the over-strand.
using PdCrossing = std::array<std::int64_t, 4>;

struct PdCode {
  std::vector<PdCrossing> crossings;

  friend bool operator==(const PdCode&, const PdCode&) = default;
};

/// Parses `PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]` (whitespace-insensitive).
/// The bracketed export form `[[1,4,2,5],[3,6,4,1],[5,2,6,3]]` is accepted
/// too. Edge labels must be positive but need not be consecutive.
///
/// Throws ParseError (with character position) on bad syntax and
/// ValidationError if a label does not occur exactly twice or the code
/// describes a link with more than one component.
PdCode parse_pd(std::string_view text);

/// Checks the two-occurrence and single-component invariants.
void validate_pd(const PdCode& pd);

std::string format_pd(const PdCode& pd);

// ---------------------------------------------------------------------------
// Braid words

struct BraidWord {
  int strands = 1;
  /// Nonzero generator indices; the sign is the crossing sign.
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Number of components of the closure: cycles of the product of the
/// transpositions (|e|, |e|+1) over the word.
int closure_components(int strands, const std::vector<int>& letters);

/// Parses `n: e1 e2 ... ek`. Throws ParseError on bad syntax and
/// ValidationError when a generator is out of range or the closure is a
/// link rather than a knot.
BraidWord parse_braid(std::string_view text);

std::string format_braid(const BraidWord& b);

// ---------------------------------------------------------------------------
// Reconstructed diagrams

/// A corner of the diagram: crossing index and PD slot.
struct Dart {
  std::size_t crossing = 0;
  int slot = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

enum class Shade : std::uint8_t { White, Black };

struct DiagramCrossing {
  /// Edge index at each PD slot.
  std::array<std::size_t, 4> edges{};
  /// +1 when the over-strand enters at slot 3, -1 when it enters at slot 1.
  int sign = 0;
};

struct DiagramEdge {
  std::int64_t label = 0;
  std::array<Dart, 2> ends;
};

/// A region of the diagram. `corners[i]` is the dart whose slot closes
/// the corner between slots (slot - 1) and slot at that crossing; the
/// boundary edges are listed in the same cyclic order.
struct Face {
  std::vector<Dart> corners;
  std::vector<std::size_t> edges;
};

struct Diagram {
  std::vector<DiagramCrossing> crossings;
  std::vector<DiagramEdge> edges;
  std::vector<Face> faces;
  std::vector<Shade> shading;
  /// The face treated as unbounded: the one with the most sides, ties broken
  /// by first appearance. It is always shaded White.
  std::size_t unbounded_face = 0;

  std::size_t vertex_count() const noexcept { return crossings.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
  std::size_t face_count() const noexcept { return faces.size(); }
  int euler_characteristic() const noexcept {
    return static_cast<int>(vertex_count()) - static_cast<int>(edge_count()) +
           static_cast<int>(face_count());
  }
  int writhe() const noexcept;

  /// Face containing the corner that `d` closes.
  std::size_t face_of(Dart d) const;

 private:
  friend Diagram reconstruct_diagram(const PdCode& pd);
  std::vector<std::size_t> face_index_;  // by crossing * 4 + slot
};

/// Traces faces from the cyclic slot order, checks V - E + F = 2 and shades
/// the faces as a checkerboard with the unbounded face White. Throws
/// ValidationError if the trace is not planar.
Diagram reconstruct_diagram(const PdCode& pd);

}  // namespace transient
