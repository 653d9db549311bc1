#pragma once

// Cubical model of the configuration space of n labeled points on a circle
// with two anchor vertices that every configuration must cover.
//
// A cube is an ordered partition (a,b,c,d) of {1,...,n}: a and c hold the
// points sitting at the two anchors (both non-empty), b and d the points
// moving along the two open arcs.  Its dimension is |b|+|d|.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "acs/bits.hpp"

namespace acs {

struct CubeLabel {
  Mask a = 0;
  Mask b = 0;
  Mask c = 0;
  Mask d = 0;
  int n = 0;

  CubeLabel() = default;

  // Validates the partition invariants: a,b,c,d pairwise disjoint with
  // union {1..n}, a and c non-empty, 2 <= n <= 63.
  CubeLabel(Mask a, Mask b, Mask c, Mask d, int n);

  int dim() const { return set_size(b) + set_size(d); }

  // "(3|-|1,2|-)"
  std::string to_string() const;

  friend bool operator==(const CubeLabel& x, const CubeLabel& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  // Canonical order: lexicographic on the (a,b,c,d) encodings.  All
  // enumeration and matrix indexing follows this order.
  friend bool operator<(const CubeLabel& x, const CubeLabel& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  }
};

struct CubeHash {
  std::size_t operator()(const CubeLabel& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Mask m : {s.a, s.b, s.c, s.d}) {
      h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// A formal Z2 sum of cubes: a set of distinct cells of one dimension.
// Addition of chains is symmetric difference.
class Chain {
 public:
  Chain() = default;
  Chain(int n, int dim) : n_(n), dim_(dim) {}

  // Canonicalizes a list of cells with Z2 cancellation (cells appearing an
  // even number of times vanish).  All cells must share dimension dim and
  // ambient n; otherwise a domain error is thrown.
  static Chain reduce(int n, int dim, std::vector<CubeLabel> cells);

  int n() const { return n_; }
  int dim() const { return dim_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<CubeLabel>& cells() const { return cells_; }
  bool contains_cell(const CubeLabel& s) const;

  // Z2 addition
  Chain& operator^=(const Chain& other);
  friend Chain operator^(Chain lhs, const Chain& rhs) { return lhs ^= rhs; }

  friend bool operator==(const Chain& x, const Chain& y) {
    return x.cells_ == y.cells_;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  int dim_ = -1;
  std::vector<CubeLabel> cells_;  // sorted, unique
};

// Every valid cube of dimension d, in canonical order.  Out-of-range d
// yields an empty list; n < 2 is a domain error.
std::vector<CubeLabel> enumerate_cubes(int n, int d);

// Z2 boundary: each arc point of the cube is pushed to either adjacent
// anchor, giving 2(|b|+|d|) distinct facets.  0-cubes map to the empty chain.
Chain boundary_cube(const CubeLabel& s);

// Linear extension of boundary_cube; satisfies boundary of boundary = 0.
Chain boundary_chain(const Chain& ch);

// Closed-form cell counts: entry d is C(n,d) * (2^n - 2^(d+1)), d = 0..n-2.
std::vector<std::int64_t> f_vector(int n);

// (-1)^n (2^n - 2); equals the alternating sum of the f-vector.
std::int64_t euler_characteristic(int n);

// Z2 Betti numbers: C(n,d) for d <= n-3 and 2^n + C(n-1,2) - 2 for d = n-2.
std::vector<std::int64_t> betti_formula(int n);

std::int64_t binomial(int n, int k);

}  // namespace acs
