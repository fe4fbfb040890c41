#include "transient/smith.hpp"

#include "transient/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace transient {

namespace {

using Cell = std::pair<std::size_t, std::size_t>;

std::optional<Cell> smallest_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Cell> best;
  BigInt best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      BigInt a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Cell{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SnfResult run() && {
    const std::size_t n = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      auto pivot = smallest_nonzero(d_, t);
      if (!pivot) break;
      move_to(t, *pivot);
      reduce_pivot(t);
      if (d_(t, t) < 0) {
        d_.negate_row(t);
        u_.negate_row(t);
      }
    }
    return SnfResult{std::move(d_), std::move(u_), std::move(v_)};
  }

 private:
  void move_to(std::size_t t, Cell cell) {
    d_.swap_rows(t, cell.first);
    u_.swap_rows(t, cell.first);
    d_.swap_cols(t, cell.second);
    v_.swap_cols(t, cell.second);
  }

  // Clears row t and column t outside the pivot, then enforces that the
  // pivot divides the whole trailing block.
  void reduce_pivot(std::size_t t) {
    while (true) {
      const BigInt& p = d_(t, t);
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        BigInt q = d_(i, t) / p;
        d_.add_row_multiple(i, t, -q);
        u_.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        BigInt q = d_(t, j) / d_(t, t);
        d_.add_col_multiple(j, t, -q);
        v_.add_col_multiple(j, t, -q);
      }

      // Remainders are strictly smaller than the pivot; promote the smallest.
      std::optional<Cell> next;
      BigInt next_abs = abs(d_(t, t));
      for (std::size_t i = t + 1; i < d_.rows(); ++i)
        if (d_(i, t) != 0 && abs(d_(i, t)) < next_abs) {
          next = Cell{i, t};
          next_abs = abs(d_(i, t));
        }
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (d_(t, j) != 0 && abs(d_(t, j)) < next_abs) {
          next = Cell{t, j};
          next_abs = abs(d_(t, j));
        }
      if (next) {
        move_to(t, *next);
        continue;
      }

      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < d_.rows() && !offending_row; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (d_(i, j) % d_(t, t) != 0) {
            offending_row = i;
            break;
          }
      if (!offending_row) return;
      d_.add_row_multiple(t, *offending_row, 1);
      u_.add_row_multiple(t, *offending_row, 1);
    }
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

SnfResult snf(const IntMatrix& m) { return Reducer(m).run(); }

bool verify_snf(const IntMatrix& m, const SnfResult& r) {
  if (r.d.rows() != m.rows() || r.d.cols() != m.cols()) return false;
  if (r.u.rows() != m.rows() || !r.u.is_square()) return false;
  if (r.v.rows() != m.cols() || !r.v.is_square()) return false;
  if (r.u * m * r.v != r.d) return false;
  if (abs(det(r.u)) != 1 || abs(det(r.v)) != 1) return false;
  for (std::size_t i = 0; i < r.d.rows(); ++i)
    for (std::size_t j = 0; j < r.d.cols(); ++j)
      if (i != j && r.d(i, j) != 0) return false;
  auto diag = r.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 && diag[i + 1] != 0) return false;
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    }
  }
  return true;
}

BigInt det(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace transient
