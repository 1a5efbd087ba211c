// twlab: exact verification tool for the algebra generated by the
// adjacency matrix and distance projections of the incidence graph of the
// (m, m+1)-subset geometry of an n-element ground set.
//
// Exit codes: 0 all requested checks pass, 1 at least one check failed
// (any requested report is still written), 2 usage or resource error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twlab/incidence.hpp"
#include "twlab/intersection.hpp"
#include "twlab/mmio.hpp"
#include "twlab/subsets.hpp"
#include "twlab/terwilliger.hpp"

namespace {

using namespace twlab;
using ordered_json = nlohmann::ordered_json;

constexpr long long kDefaultAmbientCap = 50000;

long long env_ambient_cap() {
  if (const char* s = std::getenv("TWLAB_AMBIENT_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed TWLAB_AMBIENT_CAP\n";
  }
  return kDefaultAmbientCap;
}

bool env_mutate_edge() {
  const char* s = std::getenv("TWLAB_MUTATE_EDGE");
  return s && *s && std::string(s) != "0";
}

// Writes to the file atomically when a path was given, stdout otherwise.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    atomic_write(out_path, content);
}

struct GeomOpts {
  int n = 0;
  int m = 0;
  int base = -1;  // defaults to m
  bool exploratory = false;
  bool timings = false;
  std::string out;
  std::string format = "json";
};

void add_geom_options(CLI::App* cmd, GeomOpts& g,
                      const std::vector<std::string>& formats = {"json"},
                      const std::string& format_help = "report format (json)") {
  cmd->add_option("--n", g.n, "ground-set size")->required();
  cmd->add_option("--m", g.m, "point subset size")->required();
  cmd->add_option("--base-size", g.base,
                  "size of the base vertex's subset, m or m+1 (default m)");
  cmd->add_flag("--exploratory", g.exploratory,
                "allow parameters outside the stated hypotheses; checks "
                "that depend on them report exploratory verdicts");
  cmd->add_flag("--timings", g.timings,
                "record wall-clock phase timings in the report");
  cmd->add_option("--out", g.out, "write the output to this file (atomic)");
  g.format = formats.front();
  cmd->add_option("--format", g.format, format_help)
      ->check(CLI::IsMember(formats));
}

// Vertex count of the incidence graph: all m- and (m+1)-subsets.
Int ambient_vertex_count(int n, int m) {
  return binomial(n, m) + binomial(n, m + 1);
}

bool under_ambient_cap(int n, int m) {
  const Int amb = ambient_vertex_count(n, m);
  return amb * amb <= Int(static_cast<long>(env_ambient_cap()));
}

// Shared validation; returns 0 when the run may proceed, 2 otherwise.
// theorem_level marks commands whose claims need n >= 3m and an m-base.
int validate_geom(GeomOpts& g, bool theorem_level) {
  if (g.base < 0) g.base = g.m;
  const GeometryParams p{g.n, g.m, g.base};
  if (!p.valid_construction()) {
    std::cerr << "error: need 1 <= m+1 <= n <= " << kMaxGroundSet
              << " and --base-size in {m, m+1}\n";
    return 2;
  }
  if (g.base == g.m + 1 && !g.exploratory) {
    std::cerr << "error: --base-size " << g.base
              << " is exploratory; pass --exploratory\n";
    return 2;
  }
  if (theorem_level && !p.meets_theorem_hypothesis() && !g.exploratory) {
    std::cerr << "error: the verified statements assume n >= 3m with an "
                 "m-subset base; pass --exploratory to run anyway\n";
    return 2;
  }
  if (!theorem_level && !p.meets_distance_hypothesis() && !g.exploratory) {
    std::cerr << "error: the distance structure assumes n >= 2m+1; pass "
                 "--exploratory to run anyway\n";
    return 2;
  }
  if (!under_ambient_cap(g.n, g.m)) {
    const Int amb = ambient_vertex_count(g.n, g.m);
    std::cerr << "error: ambient index space has " << amb.get_str()
              << " vertices, (" << amb.get_str() << ")^2 matrix cells is "
              << "above the cap " << env_ambient_cap()
              << "; set TWLAB_AMBIENT_CAP to raise it\n";
    return 2;
  }
  return 0;
}

int run_report(GeomOpts& g, bool theorem_level, const RunOptions& phases) {
  if (const int rc = validate_geom(g, theorem_level)) return rc;
  RunOptions opt = phases;
  opt.exploratory = g.exploratory;
  opt.timings = g.timings;
  opt.mutate_edge = env_mutate_edge();
  const AlgebraReport report =
      run_algebra(GeometryParams{g.n, g.m, g.base}, opt);
  emit(g.out, report_to_json_string(report));
  return report.all_passed() ? 0 : 1;
}

int run_identities(int v_max, const std::string& out) {
  if (v_max < 0 || v_max > 12) {
    std::cerr << "error: --v-max must be between 0 and 12\n";
    return 2;
  }
  std::ostringstream lines;
  bool all_hold = true;
  for (const IdentityResult& r : sweep_all_identities(v_max)) {
    ordered_json j;
    j["identity"] = r.identity;
    j["v"] = r.v;
    j["params"] = ordered_json::object();
    for (const auto& [key, value] : r.params) j["params"][key] = value;
    j["holds"] = r.holds;
    j["erratum_probe"] = r.erratum_probe;
    if (!r.holds && r.witness.row >= 0) {
      j["witness"] = {{"row", r.witness.row},
                      {"col", r.witness.col},
                      {"lhs", rational_to_string(r.witness.lhs)},
                      {"rhs", rational_to_string(r.witness.rhs)}};
    }
    if (!r.holds && !r.erratum_probe) all_hold = false;
    lines << j.dump() << "\n";
  }
  emit(out, lines.str());
  return all_hold ? 0 : 1;
}

int run_dims(int m_max, int n_max, const std::string& out) {
  if (m_max < 1 || n_max < 3 || n_max > kMaxGroundSet) {
    std::cerr << "error: need --m-max >= 1 and 3 <= --n-max <= "
              << kMaxGroundSet << "\n";
    return 2;
  }
  std::ostringstream csv;
  csv << "m,n,sum_gr,closed_form,closure,flag\n";
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 3 * m; n <= n_max; ++n) {
      const Index sum_gr = dim_sum_GR(n, m);
      const Index closed = dim_closed_form(n, m);
      std::string closure_s, flag;
      if (under_ambient_cap(n, m)) {
        const AlgebraInstance inst = build_instance(GeometryParams{n, m, m});
        const Index closure = compute_T(inst).space.dim();
        closure_s = std::to_string(closure);
        flag = (closure == sum_gr && sum_gr == closed) ? "ok" : "erratum?";
      } else {
        flag = sum_gr == closed ? "skipped" : "erratum?";
      }
      csv << m << "," << n << "," << sum_gr << "," << closed << ","
          << closure_s << "," << flag << "\n";
    }
  }
  emit(out, csv.str());
  return 0;
}

int run_export(GeomOpts& g) {
  if (const int rc = validate_geom(g, /*theorem_level=*/false)) return rc;
  const AlgebraInstance inst =
      build_instance(GeometryParams{g.n, g.m, g.base}, g.exploratory);
  const std::string payload = g.format == "edges"
                                  ? edge_list_string(inst.partition, inst.A)
                                  : matrix_market_string(inst.A);
  emit(g.out, payload);
  return 0;
}

int run_seed_check() {
  auto fail = [](const char* what) {
    std::cerr << "seed-check failed: " << what << "\n";
    return 1;
  };
  if (binomial(4, 2) != 6) return fail("binomial(4,2) == 6");
  for (Index r = 0; r < 10; ++r)
    if (colex_rank(colex_unrank(r, 2)) != r)
      return fail("colex rank/unrank round trip");
  const ExactMatrix& w = build_W(3, 1, 2);
  if (w.rows() != 3 || w.cols() != 3 || w.nnz() != 6)
    return fail("inclusion matrix shape at v=3");
  if (!verify_identity("w_compose", 4, {{"i", 0}, {"j", 1}, {"k", 2}}).holds)
    return fail("inclusion composition at v=4");
  const AlgebraInstance inst = build_instance(GeometryParams{3, 1, 1});
  ExactMatrix sum = ExactMatrix::zero(inst.partition.total(),
                                      inst.partition.total(),
                                      inst.partition.ambient_tag(),
                                      inst.partition.ambient_tag());
  for (const ExactMatrix& e : inst.idempotents) sum = mat_add(sum, e);
  if (!(sum == ExactMatrix::identity(inst.partition.total(),
                                     inst.partition.ambient_tag())))
    return fail("projections sum to the identity");
  if (!inst.A.is_symmetric()) return fail("adjacency symmetry");
  std::cout << "seed-check passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact checks for the algebra of the incidence graph of the "
      "(m, m+1)-subset geometry"};
  app.require_subcommand(0, 1);

  bool seed = false;
  app.add_flag("--seed-check", seed,
               "run a quick smoke check of the exact kernels and exit");

  GeomOpts g_graph, g_alg, g_basis, g_thin, g_corner, g_export;

  CLI::App* c_graph = app.add_subcommand(
      "graph", "build the incidence graph; verify block and distance "
               "structure");
  add_geom_options(c_graph, g_graph);

  CLI::App* c_ident = app.add_subcommand(
      "identities", "sweep the inclusion/intersection matrix identities; "
                    "one JSON record per line");
  int v_max = 6;
  std::string ident_out;
  std::string ident_format = "json";
  c_ident->add_option("--v-max", v_max,
                      "largest ground-set size to sweep (default 6)");
  c_ident->add_option("--out", ident_out,
                      "write the records to this file (atomic)");
  c_ident
      ->add_option("--format", ident_format,
                   "record format (json, one record per line)")
      ->check(CLI::IsMember({"json"}));

  CLI::App* c_alg = app.add_subcommand(
      "algebra", "run every structural check and report all dimensions");
  add_geom_options(c_alg, g_alg);

  CLI::App* c_basis = app.add_subcommand(
      "basis", "verify both claimed basis families against the closure");
  add_geom_options(c_basis, g_basis);

  CLI::App* c_thin = app.add_subcommand(
      "thin", "verify the pinched-symmetry criterion on the closure");
  add_geom_options(c_thin, g_thin);

  CLI::App* c_corner = app.add_subcommand(
      "corner", "compare the even corner of the algebra with the Johnson "
                "graph's algebra");
  add_geom_options(c_corner, g_corner);

  CLI::App* c_dims = app.add_subcommand(
      "dims", "tabulate the dimension formulas against the closure over a "
              "parameter grid (CSV)");
  int m_max = 0, n_max = 0;
  std::string dims_out;
  std::string dims_format = "csv";
  c_dims->add_option("--m-max", m_max, "largest m")->required();
  c_dims->add_option("--n-max", n_max, "largest n")->required();
  c_dims->add_option("--out", dims_out, "write the CSV to this file (atomic)");
  c_dims->add_option("--format", dims_format, "table format (csv)")
      ->check(CLI::IsMember({"csv"}));

  CLI::App* c_export = app.add_subcommand(
      "export", "write the adjacency matrix or the edge list");
  add_geom_options(c_export, g_export, {"matrix-market", "mm", "edges"},
                   "matrix-market (coordinate; \"mm\" for short) or "
                   "edges (hex vertex-mask pairs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (seed) return run_seed_check();

    RunOptions structure_only;
    structure_only.do_tm = structure_only.do_bases = structure_only.do_thin =
        structure_only.do_corner = false;
    RunOptions everything;
    RunOptions bases_only;
    bases_only.do_blocks = bases_only.do_distance = bases_only.do_tm =
        bases_only.do_thin = bases_only.do_corner = false;
    RunOptions thin_only;
    thin_only.do_blocks = thin_only.do_distance = thin_only.do_tm =
        thin_only.do_bases = thin_only.do_corner = false;
    RunOptions corner_only;
    corner_only.do_blocks = corner_only.do_distance = corner_only.do_tm =
        corner_only.do_bases = corner_only.do_thin = false;

    if (c_graph->parsed())
      return run_report(g_graph, /*theorem_level=*/false, structure_only);
    if (c_ident->parsed()) return run_identities(v_max, ident_out);
    if (c_alg->parsed())
      return run_report(g_alg, /*theorem_level=*/true, everything);
    if (c_basis->parsed())
      return run_report(g_basis, /*theorem_level=*/true, bases_only);
    if (c_thin->parsed())
      return run_report(g_thin, /*theorem_level=*/true, thin_only);
    if (c_corner->parsed())
      return run_report(g_corner, /*theorem_level=*/true, corner_only);
    if (c_dims->parsed()) return run_dims(m_max, n_max, dims_out);
    if (c_export->parsed()) return run_export(g_export);

    std::cerr << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
