#pragma once

// Assembles the circle complex into a based chain complex so the GF(2)
// elimination oracle can recompute its homology from scratch.

#include <cstdint>
#include <vector>

#include "acs/cube.hpp"
#include "acs/gf2.hpp"

namespace acs {

// Boundary matrix of dimension d: one column per d-cube, one row per
// (d-1)-cube, both in canonical order.
Gf2Matrix boundary_matrix(int n, int d);

BasedComplex circle_complex(int n);

// Brute-force Betti numbers via Gaussian elimination, independent of the
// matching machinery.
std::vector<std::int64_t> betti_gf2(int n, int threads = 1);

}  // namespace acs
