#include "transient/int_matrix.hpp"

#include "transient/errors.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace transient {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    for (long long x : row) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& values) {
  IntMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const BigInt& s = (*this)(src, c);
    if (s != 0) (*this)(dst, c) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const BigInt& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::with_row(const std::vector<BigInt>& row) const {
  if (row.size() != cols_) throw DomainError("with_row: length mismatch");
  IntMatrix m(rows_ + 1, cols_);
  std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
  std::copy(row.begin(), row.end(), m.entries_.begin() + rows_ * cols_);
  return m;
}

IntMatrix IntMatrix::with_col(const std::vector<BigInt>& col) const {
  if (col.size() != rows_) throw DomainError("with_col: length mismatch");
  IntMatrix m(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    m(r, cols_) = col[r];
  }
  return m;
}

IntMatrix IntMatrix::without_row_col(std::size_t r, std::size_t c) const {
  IntMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
      if (j == c) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix sum: dimension mismatch");
  IntMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
  return s;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix n(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) n(i, j) = -a(i, j);
  return n;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

namespace {

class MatrixScanner {
 public:
  explicit MatrixScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char ch) {
    if (peek() != ch) throw ParseError(std::string("matrix: expected '") + ch + "'", pos_);
    ++pos_;
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  BigInt integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("matrix: expected integer", start);
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    return BigInt(token);
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

IntMatrix assemble(const std::vector<std::vector<BigInt>>& rows, std::size_t pos) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ParseError("matrix: ragged rows", pos);
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix parse_bracketed(MatrixScanner& in) {
  std::vector<std::vector<BigInt>> rows;
  in.expect('[');
  if (!in.accept(']')) {
    do {
      in.expect('[');
      std::vector<BigInt> row;
      if (in.peek() != ']') {
        do row.push_back(in.integer());
        while (in.accept(','));
      }
      in.expect(']');
      rows.push_back(std::move(row));
    } while (in.accept(','));
    in.expect(']');
  }
  if (!in.at_end()) throw ParseError("matrix: trailing characters", in.position());
  return assemble(rows, in.position());
}

IntMatrix parse_semicolon(MatrixScanner& in) {
  std::vector<std::vector<BigInt>> rows;
  while (true) {
    std::vector<BigInt> row;
    while (!in.at_end() && in.peek() != ';') {
      row.push_back(in.integer());
      in.accept(',');
    }
    if (row.empty()) throw ParseError("matrix: empty row", in.position());
    rows.push_back(std::move(row));
    if (!in.accept(';')) break;
  }
  return assemble(rows, in.position());
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  MatrixScanner in(text);
  if (in.at_end()) return {};
  if (in.peek() == '[') return parse_bracketed(in);
  return parse_semicolon(in);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
  }
  return out.str();
}

}  // namespace transient
