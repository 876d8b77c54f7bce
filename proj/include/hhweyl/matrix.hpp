#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hhweyl/cyclotomic.hpp"

namespace hhweyl {

// Dense matrix over the cyclotomic numbers. Elimination pivots on the first
// structurally nonzero entry; exactness makes that sound.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyclotomic& at(std::size_t i, std::size_t j);
  const Cyclotomic& at(std::size_t i, std::size_t j) const;

  ExactMatrix transpose() const;
  Cyclotomic trace() const;

  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, const Cyclotomic& s);
  // row a -= f * row b
  void row_minus(std::size_t a, std::size_t b, Cyclotomic f);

  // Entry fingerprint at a fixed ambient conductor; see Cyclotomic::append_key.
  std::string key(unsigned ambient) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;

private:
  std::size_t rows_, cols_;
  std::vector<Cyclotomic> entries_;
};

inline ExactMatrix mat_product(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

ExactMatrix mat_inverse(const ExactMatrix& m);
std::size_t mat_rank(ExactMatrix m);
std::size_t kernel_dim(const ExactMatrix& m);

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

}  // namespace hhweyl
