#include "acs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "acs/basis.hpp"
#include "acs/cube.hpp"
#include "acs/graph.hpp"
#include "acs/homology.hpp"
#include "acs/morse.hpp"

namespace acs::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json_output = false;
  int threads = 0;
  std::int64_t max_cells = 5'000'000;
};

std::string vec_str(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

void guard_cell_budget(int n, const Options& opt) {
  const std::vector<std::int64_t> f = f_vector(n);
  const std::int64_t cells = std::accumulate(f.begin(), f.end(), std::int64_t{0});
  if (cells > opt.max_cells) {
    throw UsageError("complex for n = " + std::to_string(n) + " holds " +
                     std::to_string(cells) + " cells, over the --max-cells budget");
  }
}

void require_cap(int value, int cap, const std::string& what) {
  if (value > cap) {
    throw UsageError(what + " supports values up to " + std::to_string(cap) +
                     " (got " + std::to_string(value) + ")");
  }
}

// ---- verify checks -------------------------------------------------------

json check_acyclicity(int n, bool& ok, std::ostream& out, bool human) {
  const AcyclicityCertificate cert = check_acyclic(n);
  json j;
  j["ok"] = cert.ok;
  std::vector<std::int64_t> sizes;
  for (const auto& order : cert.order_by_dim) {
    sizes.push_back(static_cast<std::int64_t>(order.size()));
  }
  j["down_cells_per_dim"] = sizes;
  if (!cert.ok) {
    json cycle = json::array();
    for (const CubeLabel& s : cert.cycle) cycle.push_back(s.to_string());
    j["cycle"] = std::move(cycle);
    j["failed_dim"] = cert.failed_dim;
  }
  ok = cert.ok;
  if (human) {
    out << "acyclicity: " << (cert.ok ? "ok" : "FAIL") << " (down cells per dim "
        << vec_str(sizes) << ")\n";
  }
  return j;
}

json check_morse_boundary(int n, bool& ok, std::ostream& out, bool human) {
  MorseFlow flow(n);
  std::int64_t checked = 0;
  std::int64_t pair_checked = 0;
  std::vector<std::string> failures;
  for (int d = 1; d <= n - 2; ++d) {
    for (const CubeLabel& s : critical_cells(n, d)) {
      if (!flow.boundary(s).empty()) {
        failures.push_back("nonzero boundary at " + s.to_string());
      }
      ++checked;
      if (d == n - 2 && set_size(s.b) == 1) {
        const MorseFlow::Census c = flow.census(s);
        if (c.path_count != 2 || c.endpoint_counts.size() != 1) {
          failures.push_back("path census off at " + s.to_string() + ": " +
                             std::to_string(c.path_count) + " paths, " +
                             std::to_string(c.endpoint_counts.size()) + " endpoints");
        }
        ++pair_checked;
      }
    }
  }
  ok = failures.empty();
  json j;
  j["ok"] = ok;
  j["cells_checked"] = checked;
  j["paired_path_cells"] = pair_checked;
  if (!failures.empty()) j["failures"] = failures;
  if (human) {
    out << "morse boundary: " << (ok ? "ok" : "FAIL") << " (" << checked
        << " critical cells, " << pair_checked << " two-path cells)\n";
    for (const std::string& f : failures) out << "  " << f << "\n";
  }
  return j;
}

json check_basis(int n, bool& ok, std::ostream& out, bool human) {
  ok = true;
  json dims = json::array();
  for (int d = 0; d <= n - 2; ++d) {
    const BasisCertificate cert = certify_basis(n, d);
    ok = ok && cert.ok;
    dims.push_back(certificate_json(cert));
    if (human) {
      out << "basis dim " << d << ": " << (cert.ok ? "ok" : "FAIL") << " ("
          << cert.generator_labels.size() << " generators)\n";
      for (const std::string& f : cert.failures) out << "  " << f << "\n";
    }
  }
  json j;
  j["ok"] = ok;
  j["dims"] = std::move(dims);
  return j;
}

json check_pairing(int n, bool& ok, std::ostream& out, bool human) {
  ok = true;
  json dims = json::array();
  for (int d = 0; d <= n - 2; ++d) {
    const Gf2Matrix m = pairing_matrix(n, d);
    const bool permutation = m.is_permutation();
    const int rank = m.rank();
    ok = ok && permutation;
    json entry;
    entry["dim"] = d;
    entry["rows"] = m.rows();
    entry["cols"] = m.cols();
    entry["permutation"] = permutation;
    entry["rank"] = rank;
    dims.push_back(std::move(entry));
    if (human) {
      out << "pairing dim " << d << ": " << m.rows() << "x" << m.cols()
          << (permutation ? " permutation" : " NOT a permutation") << " (rank "
          << rank << ")\n";
    }
  }
  json j;
  j["ok"] = ok;
  j["dims"] = std::move(dims);
  return j;
}

json check_oracle(int n, const Options& opt, bool& ok, std::ostream& out, bool human) {
  const std::vector<std::int64_t> formula = betti_formula(n);
  const std::vector<std::int64_t> morse = betti_morse(n);
  const std::vector<std::int64_t> gf2 = betti_gf2(n, opt.threads);
  ok = formula == morse && formula == gf2;
  json j;
  j["ok"] = ok;
  j["betti_formula"] = formula;
  j["betti_morse"] = morse;
  j["betti_gf2"] = gf2;
  if (human) {
    out << "oracle agreement: " << (ok ? "ok" : "FAIL") << "\n";
    out << "  dim  formula    morse      gf2       match\n";
    for (std::size_t d = 0; d < formula.size(); ++d) {
      const bool row_ok = formula[d] == morse[d] && formula[d] == gf2[d];
      out << "  " << std::setw(3) << d << "  " << std::setw(8) << formula[d] << "  "
          << std::setw(8) << morse[d] << "  " << std::setw(8) << gf2[d] << "  "
          << (row_ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  return j;
}

// ---- command handlers ----------------------------------------------------

struct RunOutcome {
  json results;
  bool ok = true;
};

RunOutcome run_fvector(int n, const Options& opt, std::ostream& out) {
  if (n < 2) throw UsageError("fvector requires n >= 2");
  require_cap(n, 30, "fvector");
  const std::vector<std::int64_t> f = f_vector(n);
  std::int64_t alternating = 0;
  for (std::size_t d = 0; d < f.size(); ++d) alternating += (d % 2 == 0 ? f[d] : -f[d]);
  const std::int64_t euler = euler_characteristic(n);
  RunOutcome r;
  r.results["n"] = n;
  r.results["f_vector"] = f;
  r.results["euler_characteristic"] = euler;
  r.results["alternating_sum"] = alternating;
  r.results["consistent"] = alternating == euler;
  r.ok = alternating == euler;
  if (!opt.json_output) {
    out << "n = " << n << "\n";
    out << "f-vector: " << vec_str(f) << "\n";
    out << "euler characteristic: " << euler << " (alternating sum " << alternating
        << ", " << (r.ok ? "consistent" : "INCONSISTENT") << ")\n";
  }
  return r;
}

RunOutcome run_betti(int n, const std::string& method, const Options& opt,
                     std::ostream& out) {
  if (n < 2) throw UsageError("betti requires n >= 2");
  std::vector<std::int64_t> betti;
  if (method == "formula") {
    require_cap(n, 12, "betti --method formula");
    betti = betti_formula(n);
  } else if (method == "gf2") {
    require_cap(n, 8, "betti --method gf2");
    guard_cell_budget(n, opt);
    betti = betti_gf2(n, opt.threads);
  } else if (method == "morse") {
    require_cap(n, 9, "betti --method morse");
    guard_cell_budget(n, opt);
    betti = betti_morse(n);
  } else {
    throw UsageError("unknown method '" + method + "' (formula|morse|gf2)");
  }
  RunOutcome r;
  r.results["n"] = n;
  r.results["method"] = method;
  r.results["betti"] = betti;
  if (!opt.json_output) {
    out << "betti (" << method << "): " << vec_str(betti) << "\n";
  }
  return r;
}

RunOutcome run_verify(int n, std::vector<std::string> checks, const Options& opt,
                      std::ostream& out) {
  if (n < 2) throw UsageError("verify requires n >= 2");
  require_cap(n, 8, "verify");
  guard_cell_budget(n, opt);

  const std::vector<std::string> known = {"acyclicity", "morse-boundary", "basis",
                                          "pairing", "oracle"};
  if (checks.empty()) checks = {"all"};
  bool all = false;
  for (const std::string& c : checks) {
    if (c == "all") {
      all = true;
    } else if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw UsageError("unknown check '" + c + "'");
    }
  }
  std::vector<std::string> selected;
  if (all) {
    selected = known;
  } else {
    for (const std::string& c : known) {
      if (std::find(checks.begin(), checks.end(), c) != checks.end()) {
        selected.push_back(c);
      }
    }
  }

  RunOutcome r;
  r.results["n"] = n;
  const bool human = !opt.json_output;
  json results_checks;
  for (const std::string& c : selected) {
    bool ok = false;
    if (c == "acyclicity") {
      results_checks[c] = check_acyclicity(n, ok, out, human);
    } else if (c == "morse-boundary") {
      results_checks[c] = check_morse_boundary(n, ok, out, human);
    } else if (c == "basis") {
      results_checks[c] = check_basis(n, ok, out, human);
    } else if (c == "pairing") {
      results_checks[c] = check_pairing(n, ok, out, human);
    } else {
      results_checks[c] = check_oracle(n, opt, ok, out, human);
    }
    r.ok = r.ok && ok;
  }
  r.results["checks"] = std::move(results_checks);
  r.results["ok"] = r.ok;
  if (human) {
    out << "verify n = " << n << ": " << (r.ok ? "ok" : "FAIL") << "\n";
  }
  return r;
}

RunOutcome run_basis(int n, int dim, const Options& opt, std::ostream& out) {
  if (n < 2) throw UsageError("basis requires n >= 2");
  require_cap(n, 8, "basis");
  guard_cell_budget(n, opt);
  std::vector<int> dims;
  if (dim >= 0) {
    if (dim > n - 2) throw UsageError("basis: dim must be in [0, n-2]");
    dims.push_back(dim);
  } else {
    for (int d = 0; d <= n - 2; ++d) dims.push_back(d);
  }
  RunOutcome r;
  r.results["n"] = n;
  json certs = json::array();
  for (int d : dims) {
    const BasisCertificate cert = certify_basis(n, d);
    r.ok = r.ok && cert.ok;
    certs.push_back(certificate_json(cert));
    if (!opt.json_output) {
      out << "dim " << d << ": " << cert.generator_labels.size() << " generators, "
          << (cert.ok ? "certified" : "NOT certified") << "\n";
      for (const std::string& f : cert.failures) out << "  " << f << "\n";
    }
  }
  r.results["certificates"] = std::move(certs);
  return r;
}

RunOutcome run_graph(const std::string& input, const Options& opt, std::ostream& out) {
  std::ifstream file(input);
  if (!file) throw UsageError("cannot open graph file '" + input + "'");
  json parsed;
  try {
    file >> parsed;
  } catch (const json::parse_error& e) {
    throw UsageError("malformed graph JSON: " + std::string(e.what()));
  }
  AnchoredGraph g = [&] {
    try {
      return AnchoredGraph::from_json(parsed);
    } catch (const json::exception& e) {
      throw UsageError("malformed graph JSON: " + std::string(e.what()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  std::int64_t estimate = 1;
  const std::int64_t radix = g.vertex_count() + g.edge_count();
  for (int p = 0; p < g.n(); ++p) {
    estimate *= radix;
    if (estimate > opt.max_cells) {
      throw UsageError("graph complex estimate exceeds the --max-cells budget");
    }
  }

  const std::vector<std::int64_t> f = graph_f_vector(g);
  const std::vector<std::int64_t> betti = betti_graph(g, opt.threads);
  RunOutcome r;
  r.results["input"] = input;
  r.results["vertices"] = g.vertex_count();
  r.results["edges"] = g.edge_count();
  r.results["anchors"] = g.anchor_count();
  r.results["n"] = g.n();
  r.results["f_vector"] = f;
  r.results["betti"] = betti;
  if (!opt.json_output) {
    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges, " << g.anchor_count() << " anchors, n = " << g.n() << "\n";
    out << "f-vector: " << vec_str(f) << "\n";
    out << "betti: " << vec_str(betti) << "\n";
  }
  return r;
}

RunOutcome run_hom_graph(int m, const Options& opt, std::ostream& out) {
  if (m < 1) throw UsageError("hom-graph requires m >= 1");
  require_cap(m, 7, "hom-graph");
  const HomGraphSummary s = hom_graph(m);
  RunOutcome r;
  r.results["m"] = s.m;
  r.results["vertices"] = s.vertex_count;
  r.results["edges"] = s.edge_count;
  r.results["degree"] = s.degree;
  r.results["regular"] = s.regular;
  r.results["components"] = s.components;
  r.results["beta1"] = s.beta1;
  r.results["zeta"] = s.zeta;
  r.results["ok"] = s.zeta_matches;
  r.ok = s.zeta_matches && s.regular;
  if (!opt.json_output) {
    out << "hom-graph m = " << m << ": " << s.vertex_count << " vertices, "
        << s.edge_count << " edges, " << (s.regular ? "" : "not ") << s.degree
        << "-regular, " << s.components << " component(s)\n";
    out << "beta1 = " << s.beta1 << ", zeta = " << s.zeta << " ("
        << (s.zeta_matches ? "ok" : "MISMATCH") << ")\n";
  }
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"homology of anchored configuration spaces on the circle and on graphs"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json_output, "emit the run report as JSON");
    cmd->add_option("--threads", opt.threads, "worker threads, 0 = auto")
        ->check(CLI::Range(0, 1024));
    cmd->add_option("--max-cells", opt.max_cells,
                    "abort before building complexes larger than this");
  };

  int n = 0;
  int m = 0;
  int dim = -1;
  std::string method = "formula";
  std::string input;
  std::vector<std::string> checks;

  CLI::App* c_fvector = app.add_subcommand("fvector", "cell counts and Euler characteristic");
  c_fvector->add_option("--n", n, "number of points")->required();
  add_common(c_fvector);

  CLI::App* c_betti = app.add_subcommand("betti", "Betti numbers of the circle complex");
  c_betti->add_option("--n", n, "number of points")->required();
  c_betti->add_option("--method", method, "formula | morse | gf2")
      ->check(CLI::IsMember({"formula", "morse", "gf2"}));
  add_common(c_betti);

  CLI::App* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->add_option("--n", n, "number of points")->required();
  c_verify
      ->add_option("--checks", checks,
                   "comma-separated: acyclicity, morse-boundary, basis, pairing, oracle, all")
      ->delimiter(',');
  add_common(c_verify);

  CLI::App* c_basis = app.add_subcommand("basis", "generator certification");
  c_basis->add_option("--n", n, "number of points")->required();
  c_basis->add_option("--dim", dim, "single dimension (default: all)");
  add_common(c_basis);

  CLI::App* c_graph = app.add_subcommand("graph", "anchored space of a graph from JSON");
  c_graph->add_option("--input", input, "graph JSON file")->required();
  add_common(c_graph);

  CLI::App* c_hom = app.add_subcommand("hom-graph", "the injection graph and its cycle rank");
  c_hom->add_option("--m", m, "number of anchors")->required();
  add_common(c_hom);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  RunOutcome outcome;
  json parameters;
  try {
    if (app.got_subcommand(c_fvector)) {
      command = "fvector";
      parameters["n"] = n;
      outcome = run_fvector(n, opt, out);
    } else if (app.got_subcommand(c_betti)) {
      command = "betti";
      parameters["n"] = n;
      parameters["method"] = method;
      outcome = run_betti(n, method, opt, out);
    } else if (app.got_subcommand(c_verify)) {
      command = "verify";
      parameters["n"] = n;
      parameters["checks"] = checks.empty() ? std::vector<std::string>{"all"} : checks;
      outcome = run_verify(n, checks, opt, out);
    } else if (app.got_subcommand(c_basis)) {
      command = "basis";
      parameters["n"] = n;
      parameters["dim"] = dim;
      outcome = run_basis(n, dim, opt, out);
    } else if (app.got_subcommand(c_graph)) {
      command = "graph";
      parameters["input"] = input;
      outcome = run_graph(input, opt, out);
    } else {
      command = "hom-graph";
      parameters["m"] = m;
      outcome = run_hom_graph(m, opt, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return 1;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (opt.json_output) {
    json report;
    report["command"] = command;
    report["parameters"] = parameters;
    report["results"] = outcome.results;
    report["status"] = outcome.ok ? "ok" : "fail";
    report["elapsed_ms"] = elapsed;
    out << report.dump(2) << "\n";
  }
  return outcome.ok ? 0 : 1;
}

}  // namespace acs::cli
