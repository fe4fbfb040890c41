#include "transient/covers.hpp"

#include "transient/errors.hpp"
#include "transient/smith.hpp"

#include <cstdlib>
#include <map>

namespace transient {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
  if (!v_.is_square()) throw ValidationError("Seifert matrix must be square");
  if (det(v_ - v_.transpose()) != 1)
    throw ValidationError("Seifert matrix: det(V - V^T) != 1");
}

GoeritzMatrix::GoeritzMatrix(IntMatrix g) : g_(std::move(g)) {
  if (!g_.is_symmetric()) throw ValidationError("Goeritz matrix must be symmetric");
  if (det(g_) % 2 == 0) throw ValidationError("Goeritz matrix: determinant is even");
}

GoeritzMatrix goeritz_matrix(const Diagram& d) {
  std::map<std::size_t, std::size_t> white_index;
  for (std::size_t f = 0; f < d.faces.size(); ++f)
    if (d.shading[f] == Shade::White) white_index.emplace(f, white_index.size());

  IntMatrix g(white_index.size(), white_index.size());
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    // Corners closing slots 1 and 3 lie counterclockwise from under to over.
    const std::size_t f1 = d.face_of(Dart{c, 1});
    const bool ccw_white = d.shading[f1] == Shade::White;
    const int eta = ccw_white ? 1 : -1;
    const std::size_t a = d.face_of(Dart{c, ccw_white ? 1 : 0});
    const std::size_t b = d.face_of(Dart{c, ccw_white ? 3 : 2});
    if (a == b) continue;
    const std::size_t i = white_index.at(a);
    const std::size_t j = white_index.at(b);
    g(i, j) -= eta;
    g(j, i) -= eta;
  }
  for (std::size_t i = 0; i < g.rows(); ++i) {
    BigInt off = 0;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (j != i) off += g(i, j);
    g(i, i) = -off;
  }
  const std::size_t drop = white_index.at(d.unbounded_face);
  return GoeritzMatrix(g.without_row_col(drop, drop));
}

SeifertMatrix seifert_matrix_from_braid(const BraidWord& b) {
  if (closure_components(b.strands, b.letters) != 1)
    throw ValidationError("braid closure is not a knot");
  const auto& x = b.letters;
  const std::size_t k = x.size();

  // next[i]: position of the following letter with the same index, or 0.
  std::vector<std::size_t> next(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (std::abs(x[j]) == std::abs(x[i])) {
        next[i] = j;
        break;
      }
  std::vector<std::size_t> loops;
  for (std::size_t i = 0; i < k; ++i)
    if (next[i]) loops.push_back(i);

  IntMatrix v(loops.size(), loops.size());
  for (std::size_t a = 0; a < loops.size(); ++a) {
    const std::size_t i = loops[a];
    const std::size_t hi = next[i];
    // Two bands of equal sign twist the loop once; opposite signs cancel.
    if (x[i] > 0 && x[hi] > 0) v(a, a) = -1;
    else if (x[i] < 0 && x[hi] < 0) v(a, a) = 1;

    for (std::size_t c = a + 1; c < loops.size(); ++c) {
      const std::size_t j = loops[c];
      if (j > hi) break;
      if (j == hi) {
        // Consecutive loops on the same disk pair share band j.
        if (x[j] > 0) v(a, c) = 1;
        else v(c, a) = -1;
        continue;
      }
      if (next[j] < hi) continue;  // nested inside loop a: unlinked
      const int di = std::abs(x[i]);
      const int dj = std::abs(x[j]);
      if (di - dj == 1) v(c, a) = -1;
      else if (dj - di == 1) v(a, c) = 1;
    }
  }
  return SeifertMatrix(std::move(v));
}

IntPolynomial alexander_polynomial(const SeifertMatrix& sm) {
  const IntMatrix& v = sm.matrix();
  const IntMatrix vt = v.transpose();
  const std::size_t n = v.rows();

  // det(V - tV^T) has degree <= n; sample t = 0..n and interpolate in the
  // falling-factorial basis, whose coefficients are the integers
  // (forward difference)^k / k!.
  std::vector<BigInt> samples(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i, j) - BigInt(t) * vt(i, j);
    samples[t] = det(m);
  }
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  std::vector<BigInt> falling{1};  // t (t-1) ... (t-k+1), lowest degree first
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k) factorial *= k;
    const BigInt scale = samples[0] / factorial;
    for (std::size_t i = 0; i < falling.size(); ++i) coeffs[i] += scale * falling[i];
    for (std::size_t i = 0; i + k + 1 <= n; ++i) samples[i] = samples[i + 1] - samples[i];
    // falling *= (t - k)
    std::vector<BigInt> grown(falling.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < falling.size(); ++i) {
      grown[i + 1] += falling[i];
      grown[i] -= BigInt(k) * falling[i];
    }
    falling = std::move(grown);
  }
  return IntPolynomial(std::move(coeffs)).normalized();
}

IntMatrix cover_presentation(const SeifertMatrix& sm, int p) {
  if (p < 2) throw DomainError("cover_presentation: p must be >= 2");
  const IntMatrix& v = sm.matrix();
  const IntMatrix vt = v.transpose();
  const IntMatrix sym = v + vt;
  const std::size_t n = v.rows();
  const std::size_t blocks = static_cast<std::size_t>(p - 1);
  IntMatrix m(n * blocks, n * blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(b * n + i, b * n + j) = sym(i, j);
        if (b + 1 < blocks) {
          m(b * n + i, (b + 1) * n + j) = -v(i, j);
          m((b + 1) * n + i, b * n + j) = -vt(i, j);
        }
      }
  return m;
}

AbelianGroup cover_homology(const SeifertMatrix& v, int p) {
  return group_from_presentation(cover_presentation(v, p));
}

AbelianGroup cover_homology(const GoeritzMatrix& g, int p) {
  if (p != 2) throw DomainError("a Goeritz matrix only presents the double branched cover");
  return group_from_presentation(g.matrix());
}

AbelianGroup cover_homology(const HomologySource& source, int p) {
  return std::visit([p](const auto& s) { return cover_homology(s, p); }, source);
}

FoxOrder fox_order(const IntPolynomial& delta, int p) {
  if (p < 2) throw DomainError("fox_order: p must be >= 2");
  BigInt r = abs(resultant(delta, IntPolynomial::geometric_sum(p)));
  if (r == 0) return FoxOrder::infinite_order();
  return FoxOrder::finite(std::move(r));
}

}  // namespace transient
