#include "acs/morse.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace acs {

const char* to_string(MorseClass m) {
  switch (m) {
    case MorseClass::Up1: return "UP1";
    case MorseClass::Down1: return "DOWN1";
    case MorseClass::Up2: return "UP2";
    case MorseClass::Down2: return "DOWN2";
    case MorseClass::Crit1: return "CRIT1";
    case MorseClass::Crit2: return "CRIT2";
    case MorseClass::Crit3: return "CRIT3";
  }
  return "?";
}

bool is_up(MorseClass m) { return m == MorseClass::Up1 || m == MorseClass::Up2; }
bool is_down(MorseClass m) { return m == MorseClass::Down1 || m == MorseClass::Down2; }
bool is_critical(MorseClass m) { return !is_up(m) && !is_down(m); }

int pivot_alpha(const CubeLabel& s) { return min_element(s.a | s.b); }
int pivot_beta(const CubeLabel& s) { return max_element(s.b | s.c); }

MorseClass classify(const CubeLabel& s) {
  const int alpha = pivot_alpha(s);
  if (contains(s.b, alpha)) return MorseClass::Up1;
  // alpha sits at anchor a
  if (set_size(s.a) >= 2) return MorseClass::Down1;
  // a = {alpha}
  const int beta = pivot_beta(s);
  if (contains(s.b, beta)) return MorseClass::Up2;
  // beta sits at anchor c
  if (set_size(s.c) >= 2) {
    if (beta > alpha) return MorseClass::Down2;
    // beta < alpha forces an empty b-arc: alpha < b would push beta above alpha
    if (s.b != 0) throw std::logic_error("classify: impossible cell " + s.to_string());
    return MorseClass::Crit1;
  }
  // c = {beta}
  if (s.b == 0) return MorseClass::Crit2;
  if (!(below_all(alpha, s.b) && above_all(beta, s.b))) {
    throw std::logic_error("classify: fall-through on " + s.to_string());
  }
  return MorseClass::Crit3;
}

CubeLabel mu(const CubeLabel& s) {
  switch (classify(s)) {
    case MorseClass::Down1: {
      const Mask m = single(pivot_alpha(s));
      return CubeLabel(s.a & ~m, s.b | m, s.c, s.d, s.n);
    }
    case MorseClass::Up1: {
      const Mask m = single(pivot_alpha(s));
      return CubeLabel(s.a | m, s.b & ~m, s.c, s.d, s.n);
    }
    case MorseClass::Down2: {
      const Mask m = single(pivot_beta(s));
      return CubeLabel(s.a, s.b | m, s.c & ~m, s.d, s.n);
    }
    case MorseClass::Up2: {
      const Mask m = single(pivot_beta(s));
      return CubeLabel(s.a, s.b & ~m, s.c | m, s.d, s.n);
    }
    default:
      throw std::invalid_argument("mu: unmatched cell " + s.to_string());
  }
}

std::vector<CubeLabel> critical_cells(int n, int d) {
  if (n < 2) throw std::invalid_argument("critical_cells: n must be >= 2");
  if (n > kMaxPoints) throw std::invalid_argument("critical_cells: n too large");
  std::vector<CubeLabel> out;
  if (d < 0 || d > n - 2) return out;
  const Mask full = full_mask(n);

  if (d <= n - 3) {
    // One cell per d-subset on the second arc: the largest remaining point
    // takes anchor a, the rest anchor c.
    for (Mask dd = 0; dd <= full; ++dd) {
      if (set_size(dd) != d) continue;
      const Mask rest = full & ~dd;
      const Mask top = single(max_element(rest));
      out.emplace_back(top, Mask{0}, rest & ~top, dd, n);
    }
  } else {
    // Anchor-pair cells: both anchors singletons, empty b-arc.
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        if (x == y) continue;
        out.emplace_back(single(x), Mask{0}, single(y),
                         full & ~single(x) & ~single(y), n);
      }
    }
    // Cells whose b-arc sits strictly between the two anchors.
    for (Mask dd = 0; dd <= full; ++dd) {
      if (set_size(dd) > n - 3) continue;
      const Mask rest = full & ~dd;
      const Mask lo = single(min_element(rest));
      const Mask hi = single(max_element(rest));
      out.emplace_back(lo, rest & ~lo & ~hi, hi, dd, n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Down-cell digraph of one dimension: edge i -> j when cell j appears in the
// boundary of cell i's matched partner.
struct DownLayer {
  std::vector<CubeLabel> cells;  // canonical order
  std::vector<std::vector<std::size_t>> succ;

  explicit DownLayer(int n, int d) {
    for (const CubeLabel& s : enumerate_cubes(n, d)) {
      if (is_down(classify(s))) cells.push_back(s);
    }
    std::unordered_map<CubeLabel, std::size_t, CubeHash> index;
    index.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);
    succ.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Chain faces = boundary_cube(mu(cells[i]));
      for (const CubeLabel& face : faces.cells()) {
        if (face == cells[i]) continue;
        auto it = index.find(face);
        if (it != index.end()) succ[i].push_back(it->second);
      }
    }
  }
};

}  // namespace

AcyclicityCertificate check_acyclic(int n) {
  if (n < 2) throw std::invalid_argument("check_acyclic: n must be >= 2");
  AcyclicityCertificate cert;
  cert.n = n;
  for (int d = 0; d <= n - 3; ++d) {
    DownLayer layer(n, d);
    const std::size_t count = layer.cells.size();
    std::vector<std::size_t> indeg(count, 0);
    for (const auto& edges : layer.succ) {
      for (std::size_t j : edges) ++indeg[j];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < count; ++i) {
      if (indeg[i] == 0) ready.push(i);
    }
    std::vector<CubeLabel> order;
    order.reserve(count);
    while (!ready.empty()) {
      const std::size_t i = ready.top();
      ready.pop();
      order.push_back(layer.cells[i]);
      for (std::size_t j : layer.succ[i]) {
        if (--indeg[j] == 0) ready.push(j);
      }
    }
    if (order.size() != count) {
      // Walk the residual subgraph until a vertex repeats, then cut the loop.
      cert.ok = false;
      cert.failed_dim = d;
      std::size_t cur = 0;
      while (indeg[cur] == 0) ++cur;
      std::vector<std::size_t> trail;
      std::vector<int> seen_at(count, -1);
      while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(trail.size());
        trail.push_back(cur);
        for (std::size_t j : layer.succ[cur]) {
          if (indeg[j] > 0) {
            cur = j;
            break;
          }
        }
      }
      for (std::size_t k = static_cast<std::size_t>(seen_at[cur]); k < trail.size(); ++k) {
        cert.cycle.push_back(layer.cells[trail[k]]);
      }
      return cert;
    }
    cert.order_by_dim.push_back(std::move(order));
  }
  return cert;
}

LambdaPath lambda_path(const CubeLabel& start) {
  if (start.b != 0) {
    throw std::invalid_argument("lambda_path: cube must have an empty b-arc");
  }
  LambdaPath path;
  CubeLabel cur = start;
  const int cap = 4 * start.n + 16;
  for (int step = 0; step <= cap; ++step) {
    if (is_critical(classify(cur))) {
      if (path.cubes.empty()) path.cubes.push_back(cur);
      path.end = cur;
      return path;
    }
    path.cubes.push_back(cur);
    const CubeLabel up = mu(cur);
    path.cubes.push_back(up);
    // The only continuation with an empty b-arc is the facet that clears the
    // freshly moved pivot to the other anchor.
    const Mask m = up.b;
    const CubeLabel to_a(up.a | m, Mask{0}, up.c, up.d, up.n);
    const CubeLabel to_c(up.a, Mask{0}, up.c | m, up.d, up.n);
    cur = to_a == cur ? to_c : to_a;
  }
  throw std::logic_error("lambda_path: walk failed to terminate");
}

std::vector<AlternatingPath> alternating_paths(const CubeLabel& start, std::size_t limit) {
  if (!is_critical(classify(start))) {
    throw std::invalid_argument("alternating_paths: start must be critical");
  }
  std::vector<AlternatingPath> out;
  std::vector<std::pair<CubeLabel, CubeLabel>> steps;

  const std::function<void(const CubeLabel&)> descend = [&](const CubeLabel& low) {
    const MorseClass cls = classify(low);
    if (is_critical(cls)) {
      if (out.size() >= limit) throw std::length_error("alternating_paths: limit exceeded");
      out.push_back(AlternatingPath{start, steps, low});
      return;
    }
    if (is_up(cls)) return;  // dead end
    const CubeLabel partner = mu(low);
    steps.emplace_back(low, partner);
    const Chain faces = boundary_cube(partner);
    for (const CubeLabel& face : faces.cells()) {
      if (!(face == low)) descend(face);
    }
    steps.pop_back();
  };

  const Chain faces = boundary_cube(start);
  for (const CubeLabel& face : faces.cells()) descend(face);
  return out;
}

MorseFlow::MorseFlow(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("morse flow: n must be >= 2");
}

const MorseFlow::Counts& MorseFlow::flow(const CubeLabel& cell) {
  {
    auto it = memo_.find(cell);
    if (it != memo_.end()) return it->second;
  }
  // Iterative post-order evaluation; the matching digraph is acyclic, so
  // every dependency chain bottoms out.
  std::vector<CubeLabel> work{cell};
  while (!work.empty()) {
    const CubeLabel cur = work.back();
    if (memo_.count(cur)) {
      work.pop_back();
      continue;
    }
    const MorseClass cls = classify(cur);
    if (is_critical(cls)) {
      memo_.emplace(cur, Counts{{cur, 1}});
      work.pop_back();
      continue;
    }
    if (is_up(cls)) {
      memo_.emplace(cur, Counts{});
      work.pop_back();
      continue;
    }
    const Chain partner_faces = boundary_cube(mu(cur));
    std::vector<const Counts*> deps;
    bool pending = false;
    for (const CubeLabel& face : partner_faces.cells()) {
      if (face == cur) continue;
      auto it = memo_.find(face);
      if (it == memo_.end()) {
        work.push_back(face);
        pending = true;
      } else if (!pending) {
        deps.push_back(&it->second);
      }
    }
    if (pending) continue;
    Counts merged;
    for (const Counts* dep : deps) {
      Counts next;
      next.reserve(merged.size() + dep->size());
      auto a = merged.begin();
      auto b = dep->begin();
      while (a != merged.end() || b != dep->end()) {
        if (b == dep->end() || (a != merged.end() && a->first < b->first)) {
          next.push_back(*a++);
        } else if (a == merged.end() || b->first < a->first) {
          next.push_back(*b++);
        } else {
          next.emplace_back(a->first, a->second + b->second);
          ++a;
          ++b;
        }
      }
      merged = std::move(next);
    }
    memo_.emplace(cur, std::move(merged));
    work.pop_back();
  }
  return memo_.at(cell);
}

MorseFlow::Census MorseFlow::census(const CubeLabel& critical_cube) {
  if (critical_cube.n != n_) throw std::invalid_argument("morse flow: ambient n mismatch");
  if (!is_critical(classify(critical_cube))) {
    throw std::invalid_argument("morse boundary: cell is not critical");
  }
  Census result;
  if (critical_cube.dim() == 0) return result;
  std::vector<std::pair<CubeLabel, std::uint64_t>> acc;
  const Chain faces = boundary_cube(critical_cube);
  for (const CubeLabel& face : faces.cells()) {
    for (const auto& [end, count] : flow(face)) {
      acc.emplace_back(end, count);
    }
  }
  std::sort(acc.begin(), acc.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [end, count] : acc) {
    result.path_count += count;
    if (!result.endpoint_counts.empty() && result.endpoint_counts.back().first == end) {
      result.endpoint_counts.back().second += count;
    } else {
      result.endpoint_counts.emplace_back(end, count);
    }
  }
  return result;
}

Chain MorseFlow::boundary(const CubeLabel& critical_cube) {
  const Census c = census(critical_cube);
  std::vector<CubeLabel> odd;
  for (const auto& [end, count] : c.endpoint_counts) {
    if (count % 2 == 1) odd.push_back(end);
  }
  return Chain::reduce(critical_cube.n, critical_cube.dim() - 1, std::move(odd));
}

Chain morse_boundary(const CubeLabel& critical_cube) {
  MorseFlow flow(critical_cube.n);
  return flow.boundary(critical_cube);
}

std::vector<std::int64_t> betti_morse(int n) {
  if (n < 2) throw std::invalid_argument("betti_morse: n must be >= 2");
  MorseFlow flow(n);
  std::vector<std::int64_t> betti(static_cast<std::size_t>(n - 1), 0);
  for (int d = 0; d <= n - 2; ++d) {
    const std::vector<CubeLabel> crits = critical_cells(n, d);
    betti[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(crits.size());
    if (d == 0) continue;
    for (const CubeLabel& s : crits) {
      if (!flow.boundary(s).empty()) {
        throw std::logic_error("betti_morse: nonzero Morse boundary at " + s.to_string());
      }
    }
  }
  return betti;
}

}  // namespace acs
