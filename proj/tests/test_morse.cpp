#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "acs/morse.hpp"

using namespace acs;

namespace {

CubeLabel cube(Mask a, Mask b, Mask c, Mask d, int n) { return CubeLabel(a, b, c, d, n); }

Mask mask(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= single(x);
  return m;
}

}  // namespace

TEST_CASE("pivots") {
  CHECK(pivot_alpha(cube(mask({2}), mask({1, 3}), mask({4}), 0, 4)) == 1);
  CHECK(pivot_alpha(cube(mask({1, 2}), 0, mask({3}), 0, 3)) == 1);
  CHECK(pivot_alpha(cube(mask({3}), 0, mask({1, 2}), 0, 3)) == 3);

  CHECK(pivot_beta(cube(mask({2}), mask({1, 3}), mask({4}), 0, 4)) == 4);
  CHECK(pivot_beta(cube(mask({1}), 0, mask({2, 3}), 0, 3)) == 3);
  CHECK(pivot_beta(cube(mask({3}), 0, mask({1, 2}), 0, 3)) == 2);
}

TEST_CASE("classification examples") {
  CHECK(classify(cube(mask({2}), mask({1}), mask({3}), 0, 3)) == MorseClass::Up1);
  CHECK(classify(cube(mask({1}), 0, mask({2, 3}), 0, 3)) == MorseClass::Down2);
  CHECK(classify(cube(mask({3}), 0, mask({1, 2}), 0, 3)) == MorseClass::Crit1);
  CHECK(classify(cube(mask({1, 2}), 0, mask({3}), 0, 3)) == MorseClass::Down1);
  CHECK(classify(cube(mask({1}), mask({3}), mask({2}), 0, 3)) == MorseClass::Up2);
  CHECK(classify(cube(mask({1}), 0, mask({2}), mask({3}), 3)) == MorseClass::Crit2);
  CHECK(classify(cube(mask({1}), mask({2}), mask({3}), 0, 3)) == MorseClass::Crit3);
}

TEST_CASE("classification partitions every cube and balances the matching") {
  for (int n = 2; n <= 6; ++n) {
    std::map<int, std::size_t> ups, downs, crits;
    for (int d = 0; d <= n - 2; ++d) {
      for (const CubeLabel& s : enumerate_cubes(n, d)) {
        const MorseClass cls = classify(s);
        if (is_up(cls)) {
          CHECK(d >= 1);
          ++ups[d];
        } else if (is_down(cls)) {
          CHECK(d <= n - 3);
          ++downs[d];
        } else {
          if (cls == MorseClass::Crit1) CHECK(d <= n - 3);
          if (cls == MorseClass::Crit2) CHECK(d == n - 2);
          if (cls == MorseClass::Crit3) CHECK(d == n - 2);
          ++crits[d];
        }
      }
    }
    for (int d = 0; d <= n - 3; ++d) CHECK(downs[d] == ups[d + 1]);
  }
}

TEST_CASE("matching involution") {
  CHECK(mu(cube(mask({1, 2}), 0, mask({3}), 0, 3)) ==
        cube(mask({2}), mask({1}), mask({3}), 0, 3));
  CHECK(mu(cube(mask({1}), 0, mask({2, 3}), 0, 3)) ==
        cube(mask({1}), mask({3}), mask({2}), 0, 3));
  CHECK(mu(cube(mask({2}), mask({1}), mask({3}), 0, 3)) ==
        cube(mask({1, 2}), 0, mask({3}), 0, 3));
  CHECK_THROWS_AS(mu(cube(mask({3}), 0, mask({1, 2}), 0, 3)), std::invalid_argument);

  for (int n = 2; n <= 6; ++n) {
    for (int d = 0; d <= n - 2; ++d) {
      std::set<CubeLabel> up_images;
      for (const CubeLabel& s : enumerate_cubes(n, d)) {
        const MorseClass cls = classify(s);
        if (is_critical(cls)) continue;
        const CubeLabel partner = mu(s);
        CHECK(mu(partner) == s);
        if (is_down(cls)) {
          CHECK(partner.dim() == d + 1);
          CHECK(is_up(classify(partner)));
          CHECK(boundary_cube(partner).contains_cell(s));
          CHECK(up_images.insert(partner).second);  // injective
        }
      }
    }
  }
}

TEST_CASE("critical cells") {
  const auto c30 = critical_cells(3, 0);
  REQUIRE(c30.size() == 1);
  CHECK(c30[0] == cube(mask({3}), 0, mask({1, 2}), 0, 3));

  const auto c31 = critical_cells(3, 1);
  CHECK(c31.size() == 7);
  std::size_t with_arc = 0;
  for (const CubeLabel& s : c31) {
    if (s.b != 0) {
      ++with_arc;
      CHECK(s == cube(mask({1}), mask({2}), mask({3}), 0, 3));
    }
  }
  CHECK(with_arc == 1);

  CHECK(critical_cells(4, 2).size() == 17);
  CHECK(critical_cells(2, 0).size() == 2);

  // agreement with the classification, and the census formulas
  for (int n = 2; n <= 6; ++n) {
    for (int d = 0; d <= n - 2; ++d) {
      std::vector<CubeLabel> filtered;
      for (const CubeLabel& s : enumerate_cubes(n, d)) {
        if (is_critical(classify(s))) filtered.push_back(s);
      }
      CHECK(critical_cells(n, d) == filtered);
      const std::int64_t expect = d <= n - 3
                                      ? binomial(n, d)
                                      : (std::int64_t{1} << n) + binomial(n - 1, 2) - 2;
      CHECK(static_cast<std::int64_t>(filtered.size()) == expect);
    }
  }
}

TEST_CASE("acyclicity certificates") {
  const AcyclicityCertificate c2 = check_acyclic(2);
  CHECK(c2.ok);
  CHECK(c2.order_by_dim.empty());

  const AcyclicityCertificate c3 = check_acyclic(3);
  CHECK(c3.ok);
  REQUIRE(c3.order_by_dim.size() == 1);
  CHECK(c3.order_by_dim[0].size() == 5);

  for (int n = 4; n <= 6; ++n) {
    const AcyclicityCertificate cert = check_acyclic(n);
    CHECK(cert.ok);
    // a topological order covers exactly the down cells of each dimension
    for (int d = 0; d <= n - 3; ++d) {
      std::size_t downs = 0;
      for (const CubeLabel& s : enumerate_cubes(n, d)) {
        if (is_down(classify(s))) ++downs;
      }
      CHECK(cert.order_by_dim[static_cast<std::size_t>(d)].size() == downs);
    }
  }
}

TEST_CASE("lambda paths") {
  // descent from a matched cube
  const LambdaPath p1 = lambda_path(cube(mask({1}), 0, mask({2, 3}), 0, 3));
  CHECK(p1.end == cube(mask({3}), 0, mask({1, 2}), 0, 3));
  REQUIRE(p1.cubes.size() == 4);
  CHECK(p1.cubes[0] == cube(mask({1}), 0, mask({2, 3}), 0, 3));
  CHECK(p1.cubes[1] == cube(mask({1}), mask({3}), mask({2}), 0, 3));
  CHECK(p1.cubes[2] == cube(mask({1, 3}), 0, mask({2}), 0, 3));
  CHECK(p1.cubes[3] == cube(mask({3}), mask({1}), mask({2}), 0, 3));

  // critical start is its own path
  const CubeLabel crit = cube(mask({3}), 0, mask({1, 2}), 0, 3);
  const LambdaPath p2 = lambda_path(crit);
  CHECK(p2.end == crit);
  CHECK(p2.cubes == std::vector<CubeLabel>{crit});

  const LambdaPath p3 = lambda_path(cube(mask({1, 2}), 0, mask({3}), 0, 3));
  CHECK(p3.end == cube(mask({3}), 0, mask({1, 2}), 0, 3));

  CHECK_THROWS_AS(lambda_path(cube(mask({1}), mask({2}), mask({3}), 0, 3)),
                  std::invalid_argument);
}

TEST_CASE("lambda path laws over all empty-arc cubes") {
  for (int n = 2; n <= 5; ++n) {
    for (int d = 0; d <= n - 2; ++d) {
      for (const CubeLabel& s : enumerate_cubes(n, d)) {
        if (s.b != 0) continue;
        const LambdaPath path = lambda_path(s);
        CHECK(is_critical(classify(path.end)));
        for (std::size_t i = 0; i < path.cubes.size(); ++i) {
          if (i % 2 == 0) {
            CHECK(path.cubes[i].b == 0);
          } else {
            CHECK(set_size(path.cubes[i].b) == 1);
          }
        }
        if (is_critical(classify(s))) {
          CHECK(path.end == s);
        } else {
          // matched starts always descend to the maximal anchor cube
          const int x = max_element(s.a | s.c);
          const CubeLabel expect(single(x), 0, (s.a | s.c) & ~single(x), s.d, s.n);
          CHECK(path.end == expect);
        }
      }
    }
  }
}

TEST_CASE("morse boundary vanishes") {
  CHECK(morse_boundary(cube(mask({2}), 0, mask({1}), mask({3}), 3)).empty());

  MorseFlow flow(3);
  const CubeLabel c3 = cube(mask({1}), mask({2}), mask({3}), 0, 3);
  CHECK(flow.boundary(c3).empty());
  const MorseFlow::Census census = flow.census(c3);
  CHECK(census.path_count == 2);
  REQUIRE(census.endpoint_counts.size() == 1);
  CHECK(census.endpoint_counts[0].first == cube(mask({3}), 0, mask({1, 2}), 0, 3));
  CHECK(census.endpoint_counts[0].second == 2);

  MorseFlow flow4(4);
  for (int d = 1; d <= 2; ++d) {
    for (const CubeLabel& s : critical_cells(4, d)) {
      CHECK(flow4.boundary(s).empty());
    }
  }

  CHECK_THROWS_AS(morse_boundary(cube(mask({1}), 0, mask({2, 3}), 0, 3)),
                  std::invalid_argument);
}

TEST_CASE("explicit alternating paths agree with the memoized counts") {
  for (int n = 3; n <= 5; ++n) {
    MorseFlow flow(n);
    for (int d = 1; d <= n - 2; ++d) {
      for (const CubeLabel& s : critical_cells(n, d)) {
        const auto paths = alternating_paths(s);
        const MorseFlow::Census census = flow.census(s);
        CHECK(static_cast<std::uint64_t>(paths.size()) == census.path_count);
        for (const AlternatingPath& p : paths) {
          CHECK(p.start == s);
          CHECK(is_critical(classify(p.end)));
          CHECK(p.end.dim() == d - 1);
          const CubeLabel* upper = &p.start;
          for (const auto& [low, partner] : p.steps) {
            CHECK(boundary_cube(*upper).contains_cell(low));
            CHECK(is_down(classify(low)));
            CHECK(mu(low) == partner);
            upper = &partner;
          }
          CHECK(boundary_cube(*upper).contains_cell(p.end));
        }
      }
    }
  }
}

TEST_CASE("betti numbers via the matching") {
  CHECK(betti_morse(2) == std::vector<std::int64_t>{2});
  CHECK(betti_morse(3) == std::vector<std::int64_t>{1, 7});
  CHECK(betti_morse(4) == std::vector<std::int64_t>{1, 4, 17});
  CHECK(betti_morse(5) == betti_formula(5));
  CHECK(betti_morse(8) == betti_formula(8));
}
