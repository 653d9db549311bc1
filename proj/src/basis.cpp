#include "acs/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "acs/morse.hpp"

namespace acs {

std::string GeneratorSpec::label() const {
  if (kind == Kind::Rho) {
    return "rho(" + set_to_string(a_set) + "|" + set_to_string(c_set) + ")";
  }
  return "gamma(" + set_to_string(g_set) + ")";
}

Chain rho(Mask a_set, Mask c_set, int n) {
  if (a_set == 0 || c_set == 0 || (a_set & c_set) != 0) {
    throw std::invalid_argument("rho: anchor sets must be non-empty and disjoint");
  }
  if (((a_set | c_set) & ~full_mask(n)) != 0) {
    throw std::invalid_argument("rho: anchor sets exceed {1..n}");
  }
  const Mask rest = full_mask(n) & ~(a_set | c_set);
  std::vector<CubeLabel> cells;
  cells.reserve(std::size_t{1} << set_size(rest));
  for_each_subset(rest, [&](Mask b) {
    cells.emplace_back(a_set, b, c_set, rest & ~b, n);
  });
  return Chain::reduce(n, set_size(rest), std::move(cells));
}

Chain gamma(Mask g_set, int n) {
  if (set_size(g_set) < 2) {
    throw std::invalid_argument("gamma: need at least two points");
  }
  if ((g_set & ~full_mask(n)) != 0) {
    throw std::invalid_argument("gamma: set exceeds {1..n}");
  }
  const int lo = min_element(g_set);
  const int hi = max_element(g_set);
  const Mask span = interval_mask(lo, hi);
  const Mask outside = full_mask(n) & ~span;  // rides either arc
  const Mask gap = span & ~g_set;             // rides the d-arc

  std::vector<CubeLabel> cells;
  for (int i : elements(span)) {
    for (int j : elements(span)) {
      if (i == j) continue;
      const Mask rest = full_mask(n) & ~single(i) & ~single(j);
      const Mask b_fixed = g_set & rest;
      const Mask d_fixed = gap & rest;
      for_each_subset(outside, [&](Mask free_b) {
        cells.emplace_back(single(i), b_fixed | free_b, single(j),
                           d_fixed | (outside & ~free_b), n);
      });
    }
  }
  return Chain::reduce(n, n - 2, std::move(cells));
}

Chain realize(const GeneratorSpec& spec) {
  return spec.kind == GeneratorSpec::Kind::Rho ? rho(spec.a_set, spec.c_set, spec.n)
                                               : gamma(spec.g_set, spec.n);
}

std::vector<CubeLabel> critical_support(const Chain& ch) {
  std::vector<CubeLabel> out;
  for (const CubeLabel& s : ch.cells()) {
    if (is_critical(classify(s))) out.push_back(s);
  }
  return out;  // chain cells are already in canonical order
}

std::vector<GeneratorSpec> generator_specs(int n, int d) {
  if (n < 2) throw std::invalid_argument("generator_specs: n must be >= 2");
  std::vector<GeneratorSpec> out;
  if (d < 0 || d > n - 2) return out;

  if (d <= n - 3) {
    const int c_size = n - 1 - d;
    for (int a = 1; a <= n; ++a) {
      const Mask below = full_mask(a - 1);
      for (Mask c = 0; c <= below; ++c) {
        if (set_size(c) != c_size || (c & ~below) != 0) continue;
        out.push_back({GeneratorSpec::Kind::Rho, single(a), c, Mask{0}, n});
      }
    }
    return out;
  }

  // d = n-2: every gamma by ascending set encoding, then descending rho pairs.
  for (Mask g = 0; g <= full_mask(n); ++g) {
    if (set_size(g) >= 2) out.push_back({GeneratorSpec::Kind::Gamma, 0, 0, g, n});
  }
  for (int a = 2; a <= n; ++a) {
    for (int c = 1; c < a; ++c) {
      out.push_back({GeneratorSpec::Kind::Rho, single(a), single(c), Mask{0}, n});
    }
  }
  return out;
}

std::vector<Chain> generator_set(int n, int d) {
  std::vector<Chain> out;
  for (const GeneratorSpec& spec : generator_specs(n, d)) {
    out.push_back(realize(spec));
  }
  return out;
}

BasisCertificate certify_basis(int n, int d) {
  BasisCertificate cert;
  cert.n = n;
  cert.dim = d;
  const std::vector<GeneratorSpec> specs = generator_specs(n, d);
  const std::vector<CubeLabel> crits = critical_cells(n, d);

  std::vector<int> cell_hits(crits.size(), 0);
  for (const GeneratorSpec& spec : specs) {
    const std::string label = spec.label();
    cert.generator_labels.push_back(label);
    const Chain chain = realize(spec);
    if (!boundary_chain(chain).empty()) {
      cert.failures.push_back(label + ": not a cycle");
      cert.support_cells.emplace_back();
      continue;
    }
    std::vector<std::size_t> supp;
    for (const CubeLabel& s : critical_support(chain)) {
      auto it = std::lower_bound(crits.begin(), crits.end(), s);
      if (it == crits.end() || !(*it == s)) {
        throw std::logic_error("certify_basis: critical cell missing from census");
      }
      supp.push_back(static_cast<std::size_t>(it - crits.begin()));
    }
    cert.support_cells.push_back(supp);
    if (supp.size() != 1) {
      std::string cells;
      for (std::size_t i : supp) {
        if (!cells.empty()) cells += ", ";
        cells += crits[i].to_string();
      }
      cert.failures.push_back(label + ": " + std::to_string(supp.size()) +
                              " critical cells in support [" + cells + "]");
      continue;
    }
    ++cell_hits[supp.front()];
    cert.bijection.emplace_back(cert.generator_labels.size() - 1, supp.front());
  }

  bool onto = specs.size() == crits.size();
  for (std::size_t i = 0; i < cell_hits.size(); ++i) {
    if (cell_hits[i] > 1) {
      cert.failures.push_back("critical cell " + crits[i].to_string() +
                              " claimed by " + std::to_string(cell_hits[i]) +
                              " generators");
      onto = false;
    } else if (cell_hits[i] == 0) {
      onto = false;
    }
  }
  cert.ok = cert.failures.empty() && onto &&
            cert.bijection.size() == crits.size();
  if (cert.failures.empty() && !onto) {
    cert.failures.push_back("generator-to-cell map is not onto the critical cells");
  }
  return cert;
}

Gf2Matrix pairing_matrix(int n, int d) {
  const std::vector<GeneratorSpec> specs = generator_specs(n, d);
  const std::vector<CubeLabel> crits = critical_cells(n, d);
  Gf2Matrix m(crits.size(), specs.size());
  for (std::size_t j = 0; j < specs.size(); ++j) {
    const Chain chain = realize(specs[j]);
    for (std::size_t i = 0; i < crits.size(); ++i) {
      if (chain.contains_cell(crits[i])) m.set(i, j);
    }
  }
  return m;
}

nlohmann::json certificate_json(const BasisCertificate& cert) {
  nlohmann::json j;
  j["n"] = cert.n;
  j["dim"] = cert.dim;
  j["status"] = cert.ok ? "ok" : "fail";
  nlohmann::json bij = nlohmann::json::array();
  const std::vector<CubeLabel> crits = critical_cells(cert.n, cert.dim);
  for (const auto& [gen, cell] : cert.bijection) {
    bij.push_back({cert.generator_labels[gen], crits[cell].to_string()});
  }
  j["bijection"] = std::move(bij);
  j["failures"] = cert.failures;
  return j;
}

}  // namespace acs
