#pragma once

// Discrete Morse matching on the circle complex: pivot functions, the
// seven-way cell classification, the matching involution, acyclicity
// certification, alternating/Lambda path machinery and the Morse-theoretic
// Betti numbers.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acs/cube.hpp"

namespace acs {

enum class MorseClass : std::uint8_t {
  Up1,    // alpha sits on an arc; matched downward by moving it to anchor a
  Down1,  // alpha at anchor a with company; matched upward onto the arc
  Up2,    // a = {alpha} and beta sits on the arc
  Down2,  // a = {alpha}, beta at anchor c with company, beta > alpha
  Crit1,  // a = {alpha}, empty b-arc, |c| >= 2, beta < alpha
  Crit2,  // a = {alpha}, empty b-arc, c = {beta}
  Crit3,  // a = {alpha}, c = {beta}, b-arc between them
};

const char* to_string(MorseClass m);
bool is_up(MorseClass m);
bool is_down(MorseClass m);
bool is_critical(MorseClass m);

// min(a | b); defined since a is never empty.
int pivot_alpha(const CubeLabel& s);

// max(b | c); defined since c is never empty.
int pivot_beta(const CubeLabel& s);

// Total classification; every valid cube receives exactly one tag.
MorseClass classify(const CubeLabel& s);

// The matching involution.  Down cells map to the covering partner obtained
// by moving the pivot onto the b-arc; up cells map back.  Critical input is
// a domain error ("unmatched cell").
CubeLabel mu(const CubeLabel& s);

// All critical cubes of dimension d in canonical order, built directly:
// for d <= n-3 one cell per choice of the d-set on the second arc; for
// d = n-2 the anchor-pair cells plus the between-the-anchors cells.
std::vector<CubeLabel> critical_cells(int n, int d);

// Per-dimension certificate for the acyclicity of the matching: for each
// dimension the digraph on down cells (edges into distinct down cells in the
// boundary of the matched partner) is topologically sorted.  On failure the
// certificate carries a directed cycle instead.
struct AcyclicityCertificate {
  int n = 0;
  bool ok = true;
  std::vector<std::vector<CubeLabel>> order_by_dim;  // dims 0..n-3
  int failed_dim = -1;
  std::vector<CubeLabel> cycle;
};

AcyclicityCertificate check_acyclic(int n);

// The unique alternating descent from a cube with empty b-arc: repeatedly
// step to the matched partner and take its other empty-b facet until a
// critical cube is reached.  `cubes` lists the traversed cubes starting at
// the input; `end` is the critical terminus.
struct LambdaPath {
  std::vector<CubeLabel> cubes;
  CubeLabel end;
};

LambdaPath lambda_path(const CubeLabel& start);

// A zig-zag from a critical d-cube down through matched (d-1, d) pairs to a
// critical (d-1)-cube.
struct AlternatingPath {
  CubeLabel start;
  std::vector<std::pair<CubeLabel, CubeLabel>> steps;  // (down cube, partner)
  CubeLabel end;
};

// Explicit depth-first enumeration of every alternating path from a critical
// cube.  Intended for desk-scale checks; throws if more than `limit` paths
// materialize.
std::vector<AlternatingPath> alternating_paths(const CubeLabel& start,
                                               std::size_t limit = 1u << 20);

// Alternating-path bookkeeping with memoized path counts per cell, shared
// across queries of the same ambient n.  Acyclicity of the matching makes
// the recursion well-founded.
class MorseFlow {
 public:
  explicit MorseFlow(int n);

  // Morse boundary of a critical cube: endpoints reached by an odd number of
  // alternating paths.  Critical 0-cubes yield the empty chain.
  Chain boundary(const CubeLabel& critical_cube);

  struct Census {
    std::uint64_t path_count = 0;
    std::vector<std::pair<CubeLabel, std::uint64_t>> endpoint_counts;
  };

  // Exact alternating-path counts per endpoint.
  Census census(const CubeLabel& critical_cube);

 private:
  using Counts = std::vector<std::pair<CubeLabel, std::uint64_t>>;  // sorted by cube

  const Counts& flow(const CubeLabel& cell);

  int n_;
  Counts empty_counts_;
  std::unordered_map<CubeLabel, Counts, CubeHash> memo_;
};

// Convenience wrapper around MorseFlow::boundary for one-off queries.
Chain morse_boundary(const CubeLabel& critical_cube);

// Verifies the Morse boundary vanishes on every critical cube, then reports
// the critical-cell counts per dimension.  A nonzero boundary is an internal
// defect and aborts with a logic error.
std::vector<std::int64_t> betti_morse(int n);

}  // namespace acs
