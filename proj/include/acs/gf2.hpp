#pragma once

// Dense GF(2) linear algebra on bit-packed rows, plus the based chain
// complex container used by the brute-force homology oracle.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace acs {

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, bool value = true);
  bool get(std::size_t r, std::size_t c) const;
  void flip(std::size_t r, std::size_t c);

  // Rank by Gaussian elimination with word-level row XOR; the matrix itself
  // is left untouched (elimination runs on a copy).
  int rank() const;

  // Exactly one entry per row and per column.
  bool is_permutation() const;

  bool is_zero() const;

  // XORs row r of this matrix into acc (acc.size() == words_per_row()).
  void xor_row_into(std::size_t r, std::vector<std::uint64_t>& acc) const;

  std::vector<std::size_t> row_support(std::size_t r) const;
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Gf2Matrix& x, const Gf2Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

// True when a*b is the zero matrix (a.cols() == b.rows() required).
bool composes_to_zero(const Gf2Matrix& a, const Gf2Matrix& b);

// A finite based chain complex: cell counts per dimension and one boundary
// matrix per dimension (boundary(d) maps d-cells to (d-1)-cells; the d = 0
// matrix has zero rows).  Construction verifies shapes and that consecutive
// boundaries compose to zero.
class BasedComplex {
 public:
  BasedComplex(std::vector<std::size_t> cells_per_dim,
               std::vector<Gf2Matrix> boundaries);

  int top_dim() const { return static_cast<int>(cells_per_dim_.size()) - 1; }
  std::size_t cell_count(int d) const;
  const Gf2Matrix& boundary(int d) const;
  bool empty() const { return cells_per_dim_.empty(); }

 private:
  std::vector<std::size_t> cells_per_dim_;
  std::vector<Gf2Matrix> boundaries_;
};

// Z2 Betti numbers: beta_d = dim C_d - rank boundary(d) - rank boundary(d+1).
// Rank computations for distinct dimensions run on up to `threads` threads
// (0 = hardware default, 1 = sequential).
std::vector<std::int64_t> betti_numbers(const BasedComplex& cx, int threads = 1);

}  // namespace acs
