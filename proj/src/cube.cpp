#include "acs/cube.hpp"

#include <algorithm>
#include <stdexcept>

namespace acs {

CubeLabel::CubeLabel(Mask a, Mask b, Mask c, Mask d, int n)
    : a(a), b(b), c(c), d(d), n(n) {
  if (n < 2 || n > kMaxPoints) {
    throw std::invalid_argument("cube label: n must be in [2, 63]");
  }
  const Mask full = full_mask(n);
  if ((a | b | c | d) != full ||
      set_size(a) + set_size(b) + set_size(c) + set_size(d) != n) {
    throw std::invalid_argument(
        "cube label: (a,b,c,d) must be an ordered partition of {1..n}");
  }
  if (a == 0 || c == 0) {
    throw std::invalid_argument("cube label: anchor parts a, c must be non-empty");
  }
}

std::string CubeLabel::to_string() const {
  return "(" + set_to_string(a) + "|" + set_to_string(b) + "|" +
         set_to_string(c) + "|" + set_to_string(d) + ")";
}

Chain Chain::reduce(int n, int dim, std::vector<CubeLabel> cells) {
  for (const CubeLabel& s : cells) {
    if (s.n != n || s.dim() != dim) {
      throw std::invalid_argument("chain: cells must share dimension and ambient n");
    }
  }
  std::sort(cells.begin(), cells.end());
  Chain out(n, dim);
  out.cells_.reserve(cells.size());
  std::size_t i = 0;
  while (i < cells.size()) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    if ((j - i) % 2 == 1) out.cells_.push_back(cells[i]);
    i = j;
  }
  return out;
}

bool Chain::contains_cell(const CubeLabel& s) const {
  return std::binary_search(cells_.begin(), cells_.end(), s);
}

Chain& Chain::operator^=(const Chain& other) {
  if (!other.empty() && !empty() && (other.dim_ != dim_ || other.n_ != n_)) {
    throw std::invalid_argument("chain: mixed dimensions in Z2 sum");
  }
  if (empty()) {
    *this = other;
    return *this;
  }
  std::vector<CubeLabel> merged;
  merged.reserve(cells_.size() + other.cells_.size());
  std::set_symmetric_difference(cells_.begin(), cells_.end(),
                                other.cells_.begin(), other.cells_.end(),
                                std::back_inserter(merged));
  cells_ = std::move(merged);
  return *this;
}

std::string Chain::to_string() const {
  std::string out;
  for (const CubeLabel& s : cells_) {
    if (!out.empty()) out += " + ";
    out += s.to_string();
  }
  return out.empty() ? "0" : out;
}

std::vector<CubeLabel> enumerate_cubes(int n, int d) {
  if (n < 2) throw std::invalid_argument("enumerate_cubes: n must be >= 2");
  if (n > kMaxPoints) throw std::invalid_argument("enumerate_cubes: n too large");
  std::vector<CubeLabel> out;
  if (d < 0 || d > n - 2) return out;

  const Mask full = full_mask(n);
  // Pick the arc support u = b|d, split it, then split the rest into the
  // two non-empty anchor parts.
  for (Mask u = 0; u <= full; ++u) {
    if (set_size(u) != d) continue;
    const Mask anchors = full & ~u;
    for_each_subset(u, [&](Mask b) {
      const Mask dd = u & ~b;
      for_each_subset(anchors, [&](Mask a) {
        if (a == 0 || a == anchors) return;
        out.emplace_back(a, b, anchors & ~a, dd, n);
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chain boundary_cube(const CubeLabel& s) {
  std::vector<CubeLabel> faces;
  faces.reserve(static_cast<std::size_t>(2 * s.dim()));
  for (int x : elements(s.b)) {
    const Mask m = single(x);
    faces.emplace_back(s.a | m, s.b & ~m, s.c, s.d, s.n);
    faces.emplace_back(s.a, s.b & ~m, s.c | m, s.d, s.n);
  }
  for (int x : elements(s.d)) {
    const Mask m = single(x);
    faces.emplace_back(s.a | m, s.b, s.c, s.d & ~m, s.n);
    faces.emplace_back(s.a, s.b, s.c | m, s.d & ~m, s.n);
  }
  return Chain::reduce(s.n, s.dim() - 1, std::move(faces));
}

Chain boundary_chain(const Chain& ch) {
  if (ch.empty() || ch.dim() == 0) return Chain(ch.n(), ch.dim() - 1);
  std::vector<CubeLabel> faces;
  faces.reserve(ch.size() * static_cast<std::size_t>(2 * ch.dim()));
  for (const CubeLabel& s : ch.cells()) {
    const Chain faces_of_s = boundary_cube(s);
    for (const CubeLabel& f : faces_of_s.cells()) faces.push_back(f);
  }
  return Chain::reduce(ch.n(), ch.dim() - 1, std::move(faces));
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

namespace {

// The closed-form counts overflow 64-bit arithmetic long before the bitmask
// limit; keep them honest.
void check_formula_range(int n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  if (n > 30) throw std::invalid_argument(std::string(who) + ": n too large for exact 64-bit counts");
}

}  // namespace

std::vector<std::int64_t> f_vector(int n) {
  check_formula_range(n, "f_vector");
  std::vector<std::int64_t> f(static_cast<std::size_t>(n - 1));
  const std::int64_t pow_n = std::int64_t{1} << n;
  for (int d = 0; d <= n - 2; ++d) {
    f[static_cast<std::size_t>(d)] = binomial(n, d) * (pow_n - (std::int64_t{2} << d));
  }
  return f;
}

std::int64_t euler_characteristic(int n) {
  check_formula_range(n, "euler_characteristic");
  const std::int64_t value = (std::int64_t{1} << n) - 2;
  return n % 2 == 0 ? value : -value;
}

std::vector<std::int64_t> betti_formula(int n) {
  check_formula_range(n, "betti_formula");
  std::vector<std::int64_t> betti(static_cast<std::size_t>(n - 1));
  for (int d = 0; d <= n - 3; ++d) betti[static_cast<std::size_t>(d)] = binomial(n, d);
  betti[static_cast<std::size_t>(n - 2)] =
      (std::int64_t{1} << n) + binomial(n - 1, 2) - 2;
  return betti;
}

}  // namespace acs
