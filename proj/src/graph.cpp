#include "acs/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "acs/cube.hpp"  // binomial

namespace acs {

AnchoredGraph::AnchoredGraph(std::vector<std::string> vertex_ids,
                             std::vector<std::pair<std::string, std::string>> edges,
                             std::vector<std::string> anchor_ids, int n)
    : vertex_ids_(std::move(vertex_ids)), n_(n) {
  if (n_ < 0) throw std::invalid_argument("graph: n must be non-negative");
  std::map<std::string, int> index;
  for (int v = 0; v < static_cast<int>(vertex_ids_.size()); ++v) {
    if (!index.emplace(vertex_ids_[v], v).second) {
      throw std::invalid_argument("graph: duplicate vertex id '" + vertex_ids_[v] + "'");
    }
  }
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw std::invalid_argument("graph: unknown vertex id '" + id + "'");
    }
    return it->second;
  };
  for (const auto& [u, v] : edges) {
    const int ui = lookup(u);
    const int vi = lookup(v);
    if (ui == vi) {
      throw std::invalid_argument("graph: loop edge at '" + u + "'; subdivide loops");
    }
    edges_.emplace_back(ui, vi);
  }
  for (const std::string& id : anchor_ids) anchors_.push_back(lookup(id));
  std::sort(anchors_.begin(), anchors_.end());
  if (std::adjacent_find(anchors_.begin(), anchors_.end()) != anchors_.end()) {
    throw std::invalid_argument("graph: duplicate anchor");
  }
}

AnchoredGraph AnchoredGraph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j.contains("anchors") || !j.contains("n")) {
    throw std::invalid_argument(
        "graph json: expected object with vertices, edges, anchors, n");
  }
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("graph json: each edge must be a pair of vertex ids");
    }
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  std::vector<std::string> anchors = j.at("anchors").get<std::vector<std::string>>();
  return AnchoredGraph(std::move(vertices), std::move(edges), std::move(anchors),
                       j.at("n").get<int>());
}

AnchoredGraph AnchoredGraph::with_n(int n) const {
  AnchoredGraph g = *this;
  if (n < 0) throw std::invalid_argument("graph: n must be non-negative");
  g.n_ = n;
  return g;
}

int GraphCube::dim(int vertex_count) const {
  return static_cast<int>(std::count_if(assignment.begin(), assignment.end(),
                                        [&](int c) { return c >= vertex_count; }));
}

std::string GraphCube::to_string(const AnchoredGraph& g) const {
  std::string out = "[";
  for (std::size_t p = 0; p < assignment.size(); ++p) {
    if (p) out += ",";
    const int c = assignment[p];
    if (c < g.vertex_count()) {
      out += g.vertex_ids()[static_cast<std::size_t>(c)];
    } else {
      out += "e" + std::to_string(c - g.vertex_count());
    }
  }
  return out + "]";
}

namespace {

// Assignments are encoded in mixed radix: point p contributes digit p with
// radix V + E.
struct CodeSpace {
  int radix;
  int n;
  std::uint64_t total;

  CodeSpace(const AnchoredGraph& g)
      : radix(g.vertex_count() + g.edge_count()), n(g.n()) {
    if (radix == 0 && n > 0) throw std::invalid_argument("graph: no cells to place points on");
    std::uint64_t t = 1;
    for (int p = 0; p < n; ++p) {
      if (radix != 0 && t > std::uint64_t{250'000'000} / static_cast<std::uint64_t>(radix)) {
        throw std::invalid_argument("graph: configuration space too large to enumerate");
      }
      t *= static_cast<std::uint64_t>(radix);
    }
    total = t;
  }

  std::vector<int> decode(std::uint64_t code) const {
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      digits[static_cast<std::size_t>(p)] = static_cast<int>(code % static_cast<std::uint64_t>(radix));
      code /= static_cast<std::uint64_t>(radix);
    }
    return digits;
  }
};

bool covers_anchors(const std::vector<int>& digits, const AnchoredGraph& g) {
  for (int anchor : g.anchors()) {
    if (std::find(digits.begin(), digits.end(), anchor) == digits.end()) return false;
  }
  return true;
}

// Codes of admissible assignments per dimension, ascending within each.
std::vector<std::vector<std::uint64_t>> codes_by_dim(const AnchoredGraph& g) {
  const CodeSpace space(g);
  std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(g.n()) + 1);
  const int vcount = g.vertex_count();
  for (std::uint64_t code = 0; code < space.total; ++code) {
    const std::vector<int> digits = space.decode(code);
    if (!covers_anchors(digits, g)) continue;
    int dim = 0;
    for (int c : digits) dim += c >= vcount ? 1 : 0;
    by_dim[static_cast<std::size_t>(dim)].push_back(code);
  }
  while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  return by_dim;
}

}  // namespace

std::vector<std::vector<GraphCube>> enumerate_graph_cubes(const AnchoredGraph& g) {
  const CodeSpace space(g);
  std::vector<std::vector<GraphCube>> out;
  for (const auto& codes : codes_by_dim(g)) {
    std::vector<GraphCube> cells;
    cells.reserve(codes.size());
    for (std::uint64_t code : codes) cells.push_back(GraphCube{space.decode(code)});
    out.push_back(std::move(cells));
  }
  return out;
}

BasedComplex build_complex(const AnchoredGraph& g) {
  const CodeSpace space(g);
  const auto by_dim = codes_by_dim(g);
  const int vcount = g.vertex_count();

  std::vector<std::size_t> counts;
  counts.reserve(by_dim.size());
  for (const auto& codes : by_dim) counts.push_back(codes.size());

  std::vector<Gf2Matrix> boundaries;
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    Gf2Matrix m(d == 0 ? 0 : counts[d - 1], counts[d]);
    if (d > 0) {
      const std::vector<std::uint64_t>& rows = by_dim[d - 1];
      for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
        const std::uint64_t code = by_dim[d][j];
        std::uint64_t weight = 1;
        std::uint64_t rest = code;
        for (int p = 0; p < g.n(); ++p) {
          const int cell = static_cast<int>(rest % static_cast<std::uint64_t>(space.radix));
          rest /= static_cast<std::uint64_t>(space.radix);
          if (cell >= vcount) {
            const auto& [u, v] = g.edges()[static_cast<std::size_t>(cell - vcount)];
            for (int endpoint : {u, v}) {
              const std::uint64_t face =
                  code - weight * static_cast<std::uint64_t>(cell - endpoint);
              auto it = std::lower_bound(rows.begin(), rows.end(), face);
              if (it == rows.end() || *it != face) {
                throw std::logic_error("graph complex: facet not enumerated");
              }
              m.flip(static_cast<std::size_t>(it - rows.begin()), j);
            }
          }
          weight *= static_cast<std::uint64_t>(space.radix);
        }
      }
    }
    boundaries.push_back(std::move(m));
  }
  return BasedComplex(std::move(counts), std::move(boundaries));
}

std::vector<std::int64_t> graph_f_vector(const AnchoredGraph& g) {
  std::vector<std::int64_t> f;
  for (const auto& codes : codes_by_dim(g)) {
    f.push_back(static_cast<std::int64_t>(codes.size()));
  }
  return f;
}

std::vector<std::int64_t> betti_graph(const AnchoredGraph& g, int threads) {
  return betti_numbers(build_complex(g), threads);
}

std::int64_t tree_sphere_count(int m, int n) {
  if (m < 2) throw std::invalid_argument("tree_sphere_count: need at least two anchors");
  if (n < m) throw std::invalid_argument("tree_sphere_count: need n >= m");
  std::int64_t total = 0;
  for (int k = 0; k <= m - 2; ++k) {
    std::int64_t power = 1;
    for (int i = 0; i < n; ++i) power *= m - 1 - k;
    total += (k % 2 == 0 ? 1 : -1) * binomial(m, k) * power;
  }
  return total;
}

HomGraphSummary hom_graph(int m) {
  if (m < 1 || m > 9) throw std::invalid_argument("hom_graph: m must be in [1, 9]");
  HomGraphSummary out;
  out.m = m;

  // Injections [m] -> [m+1], each the prefix of a unique permutation.
  std::vector<std::vector<int>> verts;
  std::vector<int> perm(static_cast<std::size_t>(m) + 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    verts.emplace_back(perm.begin(), perm.begin() + m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(verts.begin(), verts.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) index.emplace(verts[i], i);

  std::vector<std::vector<int>> adj(verts.size());
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    // The one legal replacement for argument k is the currently missing value.
    int sum = (m + 1) * (m + 2) / 2;
    for (int value : verts[static_cast<std::size_t>(i)]) sum -= value;
    for (int k = 0; k < m; ++k) {
      std::vector<int> g = verts[static_cast<std::size_t>(i)];
      g[static_cast<std::size_t>(k)] = sum;
      adj[static_cast<std::size_t>(i)].push_back(index.at(g));
    }
  }

  out.vertex_count = static_cast<std::int64_t>(verts.size());
  std::int64_t degree_sum = 0;
  out.regular = true;
  for (const auto& nb : adj) {
    degree_sum += static_cast<std::int64_t>(nb.size());
    if (nb.size() != adj.front().size()) out.regular = false;
  }
  out.degree = static_cast<int>(adj.empty() ? 0 : adj.front().size());
  out.edge_count = degree_sum / 2;

  std::vector<char> seen(verts.size(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (seen[i]) continue;
    ++out.components;
    std::vector<std::size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(static_cast<std::size_t>(w));
        }
      }
    }
  }

  out.beta1 = out.edge_count - out.vertex_count + out.components;
  std::int64_t factorial = 1;
  for (int i = 2; i <= m + 1; ++i) factorial *= i;
  out.zeta = factorial * (m - 2) / 2 + 1;
  out.zeta_matches = out.beta1 == out.zeta;
  return out;
}

namespace {

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& x,
                                   const std::vector<std::int64_t>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<std::int64_t> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> partition_betti(const std::vector<AnchoredGraph>& components,
                                          int n) {
  if (components.empty()) throw std::invalid_argument("partition_betti: no components");
  // Betti vectors per component and point count, computed on demand.
  std::vector<std::vector<std::vector<std::int64_t>>> cache(
      components.size(), std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(n) + 1));
  std::vector<std::vector<char>> known(components.size(),
                                       std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  auto betti_of = [&](std::size_t i, int count) -> const std::vector<std::int64_t>& {
    if (!known[i][static_cast<std::size_t>(count)]) {
      cache[i][static_cast<std::size_t>(count)] = betti_graph(components[i].with_n(count));
      known[i][static_cast<std::size_t>(count)] = 1;
    }
    return cache[i][static_cast<std::size_t>(count)];
  };

  std::vector<std::int64_t> total;
  const std::function<void(std::size_t, int, std::int64_t, std::vector<std::int64_t>)> distribute =
      [&](std::size_t idx, int remaining, std::int64_t ways, std::vector<std::int64_t> partial) {
        if (partial.empty()) return;
        if (idx + 1 == components.size()) {
          const std::vector<std::int64_t> piece = convolve(partial, betti_of(idx, remaining));
          if (piece.empty()) return;
          if (total.size() < piece.size()) total.resize(piece.size(), 0);
          for (std::size_t d = 0; d < piece.size(); ++d) total[d] += ways * piece[d];
          return;
        }
        for (int count = 0; count <= remaining; ++count) {
          distribute(idx + 1, remaining - count, ways * binomial(remaining, count),
                     convolve(partial, betti_of(idx, count)));
        }
      };
  distribute(0, n, 1, {1});

  while (!total.empty() && total.back() == 0) total.pop_back();
  return total;
}

AnchoredGraph disjoint_union(const std::vector<AnchoredGraph>& components, int n) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> anchors;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::string prefix = std::to_string(i) + ":";
    const AnchoredGraph& g = components[i];
    for (const std::string& v : g.vertex_ids()) vertices.push_back(prefix + v);
    for (const auto& [u, v] : g.edges()) {
      edges.emplace_back(prefix + g.vertex_ids()[static_cast<std::size_t>(u)],
                         prefix + g.vertex_ids()[static_cast<std::size_t>(v)]);
    }
    for (int a : g.anchors()) {
      anchors.push_back(prefix + g.vertex_ids()[static_cast<std::size_t>(a)]);
    }
  }
  return AnchoredGraph(std::move(vertices), std::move(edges), std::move(anchors), n);
}

}  // namespace acs
