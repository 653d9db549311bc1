#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "acs/cube.hpp"

using namespace acs;

namespace {

CubeLabel cube(Mask a, Mask b, Mask c, Mask d, int n) { return CubeLabel(a, b, c, d, n); }

Mask mask(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= single(x);
  return m;
}

}  // namespace

TEST_CASE("cube label validation") {
  CHECK_NOTHROW(cube(mask({1}), 0, mask({2, 3}), 0, 3));
  CHECK_THROWS_AS(cube(mask({1}), 0, mask({1, 2, 3}), 0, 3), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(cube(0, mask({1}), mask({2, 3}), 0, 3), std::invalid_argument);     // empty a
  CHECK_THROWS_AS(cube(mask({1, 2}), 0, 0, mask({3}), 3), std::invalid_argument);     // empty c
  CHECK_THROWS_AS(cube(mask({1}), 0, mask({2}), 0, 3), std::invalid_argument);        // not a partition
  CHECK_THROWS_AS(cube(mask({1}), 0, mask({2}), 0, 1), std::invalid_argument);        // n too small
}

TEST_CASE("enumeration counts and canonical order") {
  CHECK(enumerate_cubes(3, 0).size() == 6);
  CHECK(enumerate_cubes(3, 1).size() == 12);
  CHECK(enumerate_cubes(3, 2).empty());
  CHECK(enumerate_cubes(3, -1).empty());
  CHECK_THROWS_AS(enumerate_cubes(1, 0), std::invalid_argument);

  const auto zero_cells = enumerate_cubes(2, 0);
  REQUIRE(zero_cells.size() == 2);
  CHECK(zero_cells[0] == cube(mask({1}), 0, mask({2}), 0, 2));
  CHECK(zero_cells[1] == cube(mask({2}), 0, mask({1}), 0, 2));

  for (int n = 2; n <= 6; ++n) {
    for (int d = 0; d <= n - 2; ++d) {
      const auto cells = enumerate_cubes(n, d);
      CHECK(std::is_sorted(cells.begin(), cells.end()));
      CHECK(std::adjacent_find(cells.begin(), cells.end()) == cells.end());
      for (const CubeLabel& s : cells) CHECK(s.dim() == d);
    }
  }
}

TEST_CASE("boundary of single cubes") {
  const Chain b1 = boundary_cube(cube(mask({1}), mask({2}), mask({3}), 0, 3));
  CHECK(b1.size() == 2);
  CHECK(b1.contains_cell(cube(mask({1, 2}), 0, mask({3}), 0, 3)));
  CHECK(b1.contains_cell(cube(mask({1}), 0, mask({2, 3}), 0, 3)));

  const Chain b2 = boundary_cube(cube(mask({2}), 0, mask({1}), mask({3}), 3));
  CHECK(b2.size() == 2);
  CHECK(b2.contains_cell(cube(mask({2, 3}), 0, mask({1}), 0, 3)));
  CHECK(b2.contains_cell(cube(mask({2}), 0, mask({1, 3}), 0, 3)));

  CHECK(boundary_cube(cube(mask({1}), 0, mask({2, 3}), 0, 3)).empty());
}

TEST_CASE("boundary of chains") {
  CHECK(boundary_chain(Chain(3, 1)).empty());

  const CubeLabel s = cube(mask({2}), mask({1}), mask({3}), 0, 3);
  const Chain single_cube = Chain::reduce(3, 1, {s});
  CHECK(boundary_chain(single_cube) == boundary_cube(s));

  // Both summands share their boundary, so the sum cancels over Z2.
  const Chain rho21 = Chain::reduce(3, 1,
                                    {cube(mask({2}), mask({3}), mask({1}), 0, 3),
                                     cube(mask({2}), 0, mask({1}), mask({3}), 3)});
  CHECK(boundary_chain(rho21).empty());

  CHECK_THROWS_AS(Chain::reduce(3, 1, {cube(mask({1}), 0, mask({2, 3}), 0, 3)}),
                  std::invalid_argument);
}

TEST_CASE("boundary squares to zero exhaustively") {
  for (int n = 2; n <= 7; ++n) {
    for (int d = 2; d <= n - 2; ++d) {
      for (const CubeLabel& s : enumerate_cubes(n, d)) {
        const Chain faces = boundary_cube(s);
        CHECK(faces.size() == static_cast<std::size_t>(2 * d));
        CHECK(boundary_chain(faces).empty());
      }
    }
  }
}

TEST_CASE("f-vector") {
  CHECK(f_vector(2) == std::vector<std::int64_t>{2});
  CHECK(f_vector(3) == std::vector<std::int64_t>{6, 12});
  CHECK(f_vector(4) == std::vector<std::int64_t>{14, 48, 48});
  CHECK_THROWS_AS(f_vector(1), std::invalid_argument);

  for (int n = 2; n <= 7; ++n) {
    const auto f = f_vector(n);
    for (int d = 0; d <= n - 2; ++d) {
      CHECK(static_cast<std::int64_t>(enumerate_cubes(n, d).size()) ==
            f[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(2) == 2);
  CHECK(euler_characteristic(3) == -6);
  CHECK(euler_characteristic(4) == 14);

  for (int n = 2; n <= 12; ++n) {
    std::int64_t from_f = 0;
    const auto f = f_vector(n);
    for (std::size_t d = 0; d < f.size(); ++d) from_f += (d % 2 == 0 ? f[d] : -f[d]);
    std::int64_t from_betti = 0;
    const auto betti = betti_formula(n);
    for (std::size_t d = 0; d < betti.size(); ++d) {
      from_betti += (d % 2 == 0 ? betti[d] : -betti[d]);
    }
    CHECK(from_f == euler_characteristic(n));
    CHECK(from_betti == euler_characteristic(n));
  }
}

TEST_CASE("betti formula values") {
  CHECK(betti_formula(2) == std::vector<std::int64_t>{2});
  CHECK(betti_formula(3) == std::vector<std::int64_t>{1, 7});
  CHECK(betti_formula(4) == std::vector<std::int64_t>{1, 4, 17});
  CHECK(betti_formula(5) == std::vector<std::int64_t>{1, 5, 10, 36});
}

TEST_CASE("chain algebra") {
  const Chain x = Chain::reduce(3, 0, {cube(mask({1}), 0, mask({2, 3}), 0, 3),
                                       cube(mask({2}), 0, mask({1, 3}), 0, 3)});
  const Chain y = Chain::reduce(3, 0, {cube(mask({2}), 0, mask({1, 3}), 0, 3),
                                       cube(mask({3}), 0, mask({1, 2}), 0, 3)});
  const Chain z = x ^ y;
  CHECK(z.size() == 2);
  CHECK(z.contains_cell(cube(mask({1}), 0, mask({2, 3}), 0, 3)));
  CHECK(z.contains_cell(cube(mask({3}), 0, mask({1, 2}), 0, 3)));
  CHECK((z ^ z).empty());

  // duplicate pairs cancel in reduce
  const CubeLabel s = cube(mask({1}), 0, mask({2, 3}), 0, 3);
  CHECK(Chain::reduce(3, 0, {s, s}).empty());
  CHECK(Chain::reduce(3, 0, {s, s, s}).size() == 1);
}
