#include "acs/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace acs {

namespace {

std::size_t cell_index(const std::vector<CubeLabel>& cells, const CubeLabel& s) {
  auto it = std::lower_bound(cells.begin(), cells.end(), s);
  if (it == cells.end() || !(*it == s)) {
    throw std::logic_error("cell not found in canonical enumeration");
  }
  return static_cast<std::size_t>(it - cells.begin());
}

}  // namespace

Gf2Matrix boundary_matrix(int n, int d) {
  const std::vector<CubeLabel> rows = d > 0 ? enumerate_cubes(n, d - 1)
                                            : std::vector<CubeLabel>{};
  const std::vector<CubeLabel> cols = enumerate_cubes(n, d);
  Gf2Matrix m(rows.size(), cols.size());
  if (d == 0) return m;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Chain faces = boundary_cube(cols[j]);
    for (const CubeLabel& face : faces.cells()) {
      m.set(cell_index(rows, face), j);
    }
  }
  return m;
}

BasedComplex circle_complex(int n) {
  std::vector<std::size_t> counts;
  std::vector<Gf2Matrix> boundaries;
  for (int d = 0; d <= n - 2; ++d) {
    counts.push_back(enumerate_cubes(n, d).size());
    boundaries.push_back(boundary_matrix(n, d));
  }
  return BasedComplex(std::move(counts), std::move(boundaries));
}

std::vector<std::int64_t> betti_gf2(int n, int threads) {
  return betti_numbers(circle_complex(n), threads);
}

}  // namespace acs
