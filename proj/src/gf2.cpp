#include "acs/gf2.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>
#include <thread>

namespace acs {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (c & 63);
  if (value) {
    data_[r * words_ + (c >> 6)] |= bit;
  } else {
    data_[r * words_ + (c >> 6)] &= ~bit;
  }
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1u;
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  data_[r * words_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
}

int Gf2Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> work = data_;
  const std::size_t w = words_;
  int rank = 0;
  std::size_t top = 0;  // rows above `top` already hold pivots
  for (std::size_t col = 0; col < cols_ && top < rows_; ++col) {
    const std::size_t wi = col >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (col & 63);
    std::size_t pivot = top;
    while (pivot < rows_ && !(work[pivot * w + wi] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != top) {
      std::swap_ranges(work.begin() + static_cast<std::ptrdiff_t>(pivot * w),
                       work.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * w),
                       work.begin() + static_cast<std::ptrdiff_t>(top * w));
    }
    const std::uint64_t* prow = &work[top * w];
    for (std::size_t r = top + 1; r < rows_; ++r) {
      std::uint64_t* row = &work[r * w];
      if (row[wi] & bit) {
        for (std::size_t k = wi; k < w; ++k) row[k] ^= prow[k];
      }
    }
    ++top;
    ++rank;
  }
  return rank;
}

bool Gf2Matrix::is_permutation() const {
  if (rows_ != cols_) return false;
  std::vector<bool> col_seen(cols_, false);
  for (std::size_t r = 0; r < rows_; ++r) {
    int ones = 0;
    std::size_t col = 0;
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t word = data_[r * words_ + k];
      ones += std::popcount(word);
      if (word) col = k * 64 + static_cast<std::size_t>(std::countr_zero(word));
    }
    if (ones != 1 || col_seen[col]) return false;
    col_seen[col] = true;
  }
  return true;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t word) { return word == 0; });
}

void Gf2Matrix::xor_row_into(std::size_t r, std::vector<std::uint64_t>& acc) const {
  const std::uint64_t* row = &data_[r * words_];
  for (std::size_t k = 0; k < words_; ++k) acc[k] ^= row[k];
}

std::vector<std::size_t> Gf2Matrix::row_support(std::size_t r) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_; ++k) {
    std::uint64_t word = data_[r * words_ + k];
    while (word) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

bool composes_to_zero(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("composes_to_zero: shape mismatch");
  }
  // Row i of a*b is the XOR of the rows of b picked out by row i of a.
  std::vector<std::uint64_t> acc(b.words_per_row());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k : a.row_support(i)) b.xor_row_into(k, acc);
    for (std::uint64_t word : acc) {
      if (word) return false;
    }
  }
  return true;
}

BasedComplex::BasedComplex(std::vector<std::size_t> cells_per_dim,
                           std::vector<Gf2Matrix> boundaries)
    : cells_per_dim_(std::move(cells_per_dim)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != cells_per_dim_.size()) {
    throw std::invalid_argument("based complex: one boundary matrix per dimension");
  }
  for (std::size_t d = 0; d < boundaries_.size(); ++d) {
    const std::size_t expect_rows = d == 0 ? 0 : cells_per_dim_[d - 1];
    if (boundaries_[d].rows() != expect_rows ||
        boundaries_[d].cols() != cells_per_dim_[d]) {
      throw std::invalid_argument("based complex: boundary matrix shape mismatch");
    }
  }
  for (std::size_t d = 2; d < boundaries_.size(); ++d) {
    if (!composes_to_zero(boundaries_[d - 1], boundaries_[d])) {
      throw std::invalid_argument("based complex: boundaries do not compose to zero");
    }
  }
}

std::size_t BasedComplex::cell_count(int d) const {
  if (d < 0 || d > top_dim()) return 0;
  return cells_per_dim_[static_cast<std::size_t>(d)];
}

const Gf2Matrix& BasedComplex::boundary(int d) const {
  return boundaries_.at(static_cast<std::size_t>(d));
}

std::vector<std::int64_t> betti_numbers(const BasedComplex& cx, int threads) {
  if (cx.empty()) return {};
  const int top = cx.top_dim();
  std::vector<int> ranks(static_cast<std::size_t>(top) + 1, 0);

  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  if (threads <= 1 || top == 0) {
    for (int d = 1; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = cx.boundary(d).rank();
  } else {
    std::vector<std::future<int>> jobs;
    jobs.reserve(static_cast<std::size_t>(top));
    // One job per dimension; std::async keeps at most `threads` running.
    std::vector<int> dims;
    for (int d = 1; d <= top; ++d) dims.push_back(d);
    std::size_t next = 0;
    std::vector<std::pair<int, std::future<int>>> running;
    while (next < dims.size() || !running.empty()) {
      while (next < dims.size() && running.size() < static_cast<std::size_t>(threads)) {
        int d = dims[next++];
        running.emplace_back(d, std::async(std::launch::async, [&cx, d] {
                               return cx.boundary(d).rank();
                             }));
      }
      auto& [d, fut] = running.front();
      ranks[static_cast<std::size_t>(d)] = fut.get();
      running.erase(running.begin());
    }
  }

  std::vector<std::int64_t> betti(static_cast<std::size_t>(top) + 1, 0);
  for (int d = 0; d <= top; ++d) {
    const std::int64_t cells = static_cast<std::int64_t>(cx.cell_count(d));
    const std::int64_t rank_d = ranks[static_cast<std::size_t>(d)];
    const std::int64_t rank_up = d < top ? ranks[static_cast<std::size_t>(d) + 1] : 0;
    betti[static_cast<std::size_t>(d)] = cells - rank_d - rank_up;
  }
  return betti;
}

}  // namespace acs
