#pragma once

// Explicit generating cycles for the homology of the circle complex and the
// machinery that certifies them against the critical cells: support checks,
// generator-to-cell pairing and machine-readable certificates.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "acs/cube.hpp"
#include "acs/gf2.hpp"

namespace acs {

struct GeneratorSpec {
  enum class Kind { Rho, Gamma };
  Kind kind = Kind::Rho;
  Mask a_set = 0;  // Rho: points fixed at anchor a
  Mask c_set = 0;  // Rho: points fixed at anchor c
  Mask g_set = 0;  // Gamma: the anchor-visiting set
  int n = 0;

  std::string label() const;  // "rho(3|1,2)" / "gamma(1,3)"
};

// Sum over all splits of the remaining points between the two arcs, with the
// anchor occupations held fixed.  A cycle of dimension n - |A| - |C|.
Chain rho(Mask a_set, Mask c_set, int n);

// Top-dimensional cycle attached to a set G of at least two points: anchors
// range over the interval [min G, max G], points of G ride the b-arc, points
// of the gap ride the d-arc, points outside the interval ride either.
Chain gamma(Mask g_set, int n);

Chain realize(const GeneratorSpec& spec);

// Cells of the chain that the matching leaves critical, in canonical order.
std::vector<CubeLabel> critical_support(const Chain& ch);

// The generating family for dimension d in canonical order: for d <= n-3 the
// rho cycles with a singleton high anchor above all of C; for d = n-2 every
// gamma followed by the descending-anchor rho pairs.
std::vector<GeneratorSpec> generator_specs(int n, int d);
std::vector<Chain> generator_set(int n, int d);

struct BasisCertificate {
  int n = 0;
  int dim = 0;
  bool ok = false;
  // parallel to generator_specs(n, dim)
  std::vector<std::string> generator_labels;
  std::vector<std::vector<std::size_t>> support_cells;  // indices into critical_cells
  // generator index -> critical cell index; complete only when ok
  std::vector<std::pair<std::size_t, std::size_t>> bijection;
  std::vector<std::string> failures;
};

// Checks that every generator is a cycle with exactly one critical cell in
// its support and that the induced map onto the critical cells of dimension
// d is a bijection.  Failures are reported per generator rather than thrown.
BasisCertificate certify_basis(int n, int d);

// Entry (i,j): membership of the i-th critical d-cell in the support of the
// j-th generator (the dual-cochain evaluation).
Gf2Matrix pairing_matrix(int n, int d);

nlohmann::json certificate_json(const BasisCertificate& cert);

}  // namespace acs
