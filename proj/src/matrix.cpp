#include "hhweyl/matrix.hpp"

#include <ostream>
#include <utility>

#include "hhweyl/errors.hpp"

namespace hhweyl {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1L);
  return m;
}

Cyclotomic& ExactMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return entries_[i * cols_ + j];
}

const Cyclotomic& ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return entries_[i * cols_ + j];
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Cyclotomic ExactMatrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace requires a square matrix");
  Cyclotomic t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
}

void ExactMatrix::scale_row(std::size_t r, const Cyclotomic& s) {
  for (std::size_t j = 0; j < cols_; ++j) entries_[r * cols_ + j] *= s;
}

void ExactMatrix::row_minus(std::size_t a, std::size_t b, Cyclotomic f) {
  for (std::size_t j = 0; j < cols_; ++j) entries_[a * cols_ + j] -= f * entries_[b * cols_ + j];
}

std::string ExactMatrix::key(unsigned ambient) const {
  std::string out;
  out += std::to_string(rows_);
  out += 'x';
  out += std::to_string(cols_);
  out += '|';
  for (const Cyclotomic& e : entries_) {
    e.append_key(out, ambient);
    out += ';';
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i] != b.entries_[i]) return false;
  return true;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product dimension mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Cyclotomic& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Cyclotomic& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum dimension mismatch");
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix difference dimension mismatch");
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

ExactMatrix mat_inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse requires a square matrix");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).is_zero()) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Cyclotomic s = a.at(c, c).inverse();
    a.scale_row(c, s);
    inv.scale_row(c, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c && !a.at(i, c).is_zero()) {
        const Cyclotomic f = a.at(i, c);
        a.row_minus(i, c, f);
        inv.row_minus(i, c, f);
      }
    }
  }
  return inv;
}

std::size_t mat_rank(ExactMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    a.scale_row(r, a.at(r, c).inverse());
    for (std::size_t i = r + 1; i < rows; ++i)
      if (!a.at(i, c).is_zero()) a.row_minus(i, r, a.at(i, c));
    ++r;
  }
  return r;
}

std::size_t kernel_dim(const ExactMatrix& m) { return m.cols() - mat_rank(m); }

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j);
    }
  }
  return os << ']';
}

}  // namespace hhweyl
