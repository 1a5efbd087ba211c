#include "twlab/terwilliger.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "twlab/intersection.hpp"

namespace twlab {

AlgebraInstance build_instance(const GeometryParams& p, bool exploratory) {
  AlgebraInstance inst;
  inst.params = p;
  inst.partition = build_partition(p);
  inst.A = build_graph(inst.partition, exploratory);
  inst.idempotents = build_dual_idempotents(inst.partition);
  inst.generator_names.push_back("A");
  for (std::size_t i = 0; i < inst.idempotents.size(); ++i)
    inst.generator_names.push_back("E" + std::to_string(i) + "*");
  return inst;
}

Closure compute_T(const AlgebraInstance& inst) {
  std::vector<ExactMatrix> gens;
  gens.reserve(inst.idempotents.size() + 1);
  gens.push_back(inst.A);
  for (const auto& e : inst.idempotents) gens.push_back(e);
  return algebra_closure(gens, inst.generator_names);
}

namespace {

void require_pair_order(const AlgebraInstance& inst, const char* who) {
  if (inst.params.base_size != inst.params.m || !inst.partition.kron_ordered)
    throw std::invalid_argument(std::string(who) +
                                ": needs the pair-ordered partition of an "
                                "m-subset base");
}

}  // namespace

MatrixSpace compute_M(const AlgebraInstance& inst) {
  require_pair_order(inst, "compute_M");
  const auto& part = inst.partition;
  const int m = inst.params.m;
  const int nm = inst.params.n - inst.params.m;
  const Index size = part.total();
  MatrixSpace M(size, size, part.ambient_tag(), part.ambient_tag());
  for (int i = 0; i <= part.diameter; ++i) {
    for (int j = 0; j <= part.diameter; ++j) {
      const int mfi = m - i / 2, mfj = m - j / 2;
      const int cei = (i + 1) / 2, cej = (j + 1) / 2;
      for (int l = 0; l <= std::min(mfi, mfj); ++l) {
        for (int s = 0; s <= std::min(cei, cej); ++s) {
          ExactMatrix block =
              kron(build_C(m, mfi, mfj, l), build_C(nm, cei, cej, s));
          M.insert(embed_block(
              block, size, size,
              part.class_offsets[static_cast<std::size_t>(i)],
              part.class_offsets[static_cast<std::size_t>(j)],
              part.ambient_tag(), part.ambient_tag()));
        }
      }
    }
  }
  return M;
}

TMCheck verify_T_equals_M(const AlgebraInstance&, const Closure& T,
                          const MatrixSpace& M) {
  TMCheck check;
  check.dim_t = T.space.dim();
  check.dim_m = M.dim();
  check.pass = T.space.equals(M);
  if (!check.pass) {
    for (std::size_t k = 0; k < M.basis().size(); ++k)
      if (!T.space.contains(M.basis_element(k))) {
        check.witness = "candidate-span basis vector " + std::to_string(k) +
                        " lies outside the closure";
        return check;
      }
    for (std::size_t k = 0; k < T.space.basis().size(); ++k)
      if (!M.contains(T.space.basis_element(k))) {
        check.witness = "closure basis vector " + std::to_string(k) +
                        " lies outside the candidate span";
        return check;
      }
  }
  return check;
}

Index dim_sum_GR(int n, int m) {
  if (n < 3 * m)
    throw std::invalid_argument("dim_sum_GR: stated for n >= 3m");
  Index total = 0;
  for (int i = 0; i <= 2 * m + 1; ++i)
    for (int j = 0; j <= 2 * m + 1; ++j)
      total += level_count(m - i / 2, m - j / 2, m) *
               level_count((i + 1) / 2, (j + 1) / 2, n - m);
  return total;
}

Index dim_closed_form(int n, int m) {
  if (n < 3 * m)
    throw std::invalid_argument("dim_closed_form: stated for n >= 3m");
  const Index base =
      static_cast<Index>(m + 1) * (m + 2) * (m + 3) * (3 * m + 10) / 12;
  if (n == 3 * m) return base - 4;
  if (n == 3 * m + 1) return base - 1;
  return base;
}

BasisFamily build_basis_family(const AlgebraInstance& inst, BasisKind kind) {
  require_pair_order(inst, "build_basis_family");
  const auto& part = inst.partition;
  const int m = inst.params.m;
  const int nm = inst.params.n - inst.params.m;
  const Index size = part.total();

  BasisFamily fam;
  fam.kind = kind;
  for (int i = 0; i <= part.diameter; ++i) {
    for (int j = 0; j <= part.diameter; ++j) {
      const int mfi = m - i / 2, mfj = m - j / 2;
      const int cei = (i + 1) / 2, cej = (j + 1) / 2;
      const LevelRange G = level_range(mfi, mfj, m);
      const LevelRange R = level_range(cei, cej, nm);
      for (int g = G.lo; g <= G.hi; ++g) {
        for (int r = R.lo; r <= R.hi; ++r) {
          ExactMatrix block =
              kind == BasisKind::kH
                  ? kron(build_H(m, mfi, mfj, g), build_H(nm, cei, cej, r))
                  : kron(build_C(m, mfi, mfj, g), build_C(nm, cei, cej, r));
          fam.members.push_back({i, j, g, r});
          fam.matrices.push_back(embed_block(
              block, size, size,
              part.class_offsets[static_cast<std::size_t>(i)],
              part.class_offsets[static_cast<std::size_t>(j)],
              part.ambient_tag(), part.ambient_tag()));
        }
      }
    }
  }
  return fam;
}

BasisCheck verify_basis_family(const AlgebraInstance& inst, const Closure& T,
                               const BasisFamily& family) {
  BasisCheck check;
  check.cardinality = static_cast<Index>(family.matrices.size());
  const Index size = inst.partition.total();
  MatrixSpace span(size, size, inst.partition.ambient_tag(),
                   inst.partition.ambient_tag());
  Index first_dependent = -1;
  for (std::size_t k = 0; k < family.matrices.size(); ++k)
    if (!span.insert(family.matrices[k]) && first_dependent < 0)
      first_dependent = static_cast<Index>(k);
  check.independent_dim = span.dim();
  check.spans_T = span.equals(T.space);
  check.pass = first_dependent < 0 && check.spans_T &&
               check.cardinality == T.space.dim();
  if (!check.pass) {
    if (first_dependent >= 0)
      check.detail =
          "member " + std::to_string(first_dependent) + " is dependent";
    else if (!check.spans_T)
      check.detail = "members span a different space than the closure";
    else
      check.detail = "cardinality " + std::to_string(check.cardinality) +
                     " != closure dimension " + std::to_string(T.space.dim());
  }
  return check;
}

ThinCheck verify_thin(const AlgebraInstance& inst, const Closure& T) {
  ThinCheck check;
  for (std::size_t k = 0; k < T.space.basis().size(); ++k) {
    const ExactMatrix B = T.space.basis_element(k);
    for (std::size_t i = 0; i < inst.idempotents.size(); ++i) {
      ExactMatrix pinched =
          mat_mul(mat_mul(inst.idempotents[i], B), inst.idempotents[i]);
      if (!pinched.is_symmetric()) {
        check.pass = false;
        check.detail = "E" + std::to_string(i) + "* B E" + std::to_string(i) +
                       "* is asymmetric for closure basis vector " +
                       std::to_string(k);
        return check;
      }
    }
  }
  check.pass = true;
  return check;
}

CornerCheck verify_corner(const AlgebraInstance& inst, const Closure& T) {
  require_pair_order(inst, "verify_corner");
  CornerCheck check;
  const int n = inst.params.n, m = inst.params.m;
  const Index size = inst.partition.total();

  MatrixSpace corner(size, size, inst.partition.ambient_tag(),
                     inst.partition.ambient_tag());
  for (std::size_t k = 0; k < T.space.basis().size(); ++k) {
    const ExactMatrix B = T.space.basis_element(k);
    for (int i = 0; 2 * i <= inst.partition.diameter && i <= m; ++i) {
      const ExactMatrix left =
          mat_mul(inst.idempotents[static_cast<std::size_t>(2 * i)], B);
      for (int j = 0; 2 * j <= inst.partition.diameter && j <= m; ++j)
        corner.insert(mat_mul(
            left, inst.idempotents[static_cast<std::size_t>(2 * j)]));
    }
  }
  check.corner_dim = corner.dim();

  // Independent side: the Johnson graph's algebra around the same base,
  // computed by its own closure over a colex vertex order.
  ExactMatrix JA = build_johnson_graph(n, m);
  auto JE = johnson_dual_idempotents(n, m, (SubsetCode{1} << m) - 1);
  std::vector<ExactMatrix> gens;
  std::vector<std::string> names;
  gens.push_back(JA);
  names.push_back("A'");
  for (std::size_t i = 0; i < JE.size(); ++i) {
    gens.push_back(JE[i]);
    names.push_back("E" + std::to_string(i) + "'");
  }
  check.johnson_dim = algebra_closure(gens, names).space.dim();

  Index sum = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      sum += level_count(m - i, m - j, m) * level_count(i, j, n - m);
  check.sum_even_gr = sum;

  check.pass = check.corner_dim == check.johnson_dim;
  if (!check.pass)
    check.detail = "corner dimension " + std::to_string(check.corner_dim) +
                   " != Johnson-graph closure dimension " +
                   std::to_string(check.johnson_dim);
  return check;
}

bool AlgebraReport::all_passed() const {
  for (const auto& [name, verdict] : checks)
    if (verdict == "fail") return false;
  return true;
}

AlgebraReport run_algebra(const GeometryParams& p, const RunOptions& opt) {
  AlgebraReport report;
  report.params = p;

  using clock = std::chrono::steady_clock;
  auto timed = [&](const char* label, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    if (opt.timings)
      report.timings_ms.emplace_back(
          label,
          std::chrono::duration<double, std::milli>(clock::now() - t0).count());
  };

  const bool base_m = p.base_size == p.m;
  const bool theorem_ok = p.meets_theorem_hypothesis();
  auto verdict = [](bool ok, bool full_claim) {
    const std::string v = ok ? "pass" : "fail";
    return full_claim ? v : "exploratory-" + v;
  };

  AlgebraInstance inst;
  timed("build", [&] { inst = build_instance(p, opt.exploratory); });

  if (opt.mutate_edge && !inst.A.is_zero()) {
    std::vector<MatrixEntry> entries = inst.A.entries();
    entries.erase(entries.begin());
    inst.A = ExactMatrix::from_entries(inst.A.rows(), inst.A.cols(),
                                       inst.A.row_tag(), inst.A.col_tag(),
                                       std::move(entries));
  }

  std::string blocks_v = "skipped", dist_v = "skipped", tm_v = "skipped",
              bh_v = "skipped", bc_v = "skipped", thin_v = "skipped",
              corner_v = "skipped";
  const bool pair_ordered = base_m && inst.partition.kron_ordered;

  if (opt.do_blocks && pair_ordered) {
    timed("block_structure", [&] {
      const auto checks = verify_block_structure(inst.partition, inst.A);
      const bool ok = std::all_of(checks.begin(), checks.end(),
                                  [](const BlockCheck& c) { return c.pass; });
      blocks_v = verdict(ok, p.meets_distance_hypothesis());
    });
  }
  if (opt.do_distance && base_m) {
    timed("distance_partition", [&] {
      dist_v = verdict(verify_distance_partition(inst.partition, inst.A).pass,
                       p.meets_distance_hypothesis());
    });
  }

  std::optional<Closure> T;
  if (opt.do_tm || opt.do_bases || opt.do_thin || opt.do_corner) {
    timed("closure", [&] {
      T.emplace(compute_T(inst));
      report.dim_t_closure = T->space.dim();
    });
  }

  if (base_m && p.n >= 3 * p.m) {
    report.dim_sum_gr = dim_sum_GR(p.n, p.m);
    report.dim_closed_form = dim_closed_form(p.n, p.m);
  }

  if (opt.do_tm && pair_ordered) {
    timed("t_eq_m", [&] {
      MatrixSpace M = compute_M(inst);
      report.dim_m_span = M.dim();
      tm_v = verdict(verify_T_equals_M(inst, *T, M).pass, theorem_ok);
    });
  }
  if (opt.do_bases && pair_ordered) {
    timed("bases", [&] {
      const BasisFamily h = build_basis_family(inst, BasisKind::kH);
      bh_v = verdict(verify_basis_family(inst, *T, h).pass, theorem_ok);
      const BasisFamily c = build_basis_family(inst, BasisKind::kC);
      bc_v = verdict(verify_basis_family(inst, *T, c).pass, theorem_ok);
    });
  }
  if (opt.do_thin && T.has_value()) {
    timed("thin_symmetry", [&] {
      thin_v = verdict(verify_thin(inst, *T).pass, theorem_ok);
    });
  }
  if (opt.do_corner && pair_ordered) {
    timed("corner", [&] {
      corner_v = verdict(verify_corner(inst, *T).pass, theorem_ok);
    });
  }

  if (report.dim_sum_gr >= 0 && report.dim_closed_form >= 0 &&
      report.dim_sum_gr != report.dim_closed_form) {
    std::string flag = "closed_form_vs_level_count(n=" + std::to_string(p.n) +
                       ",m=" + std::to_string(p.m) +
                       "): closed_form=" + std::to_string(report.dim_closed_form) +
                       " sum_gr=" + std::to_string(report.dim_sum_gr);
    if (report.dim_t_closure >= 0)
      flag += " closure=" + std::to_string(report.dim_t_closure);
    report.erratum_flags.push_back(flag);
  }
  if (report.dim_sum_gr >= 0 && report.dim_t_closure >= 0 &&
      report.dim_t_closure != report.dim_sum_gr) {
    report.erratum_flags.push_back(
        "closure_vs_level_count(n=" + std::to_string(p.n) +
        ",m=" + std::to_string(p.m) +
        "): closure=" + std::to_string(report.dim_t_closure) +
        " sum_gr=" + std::to_string(report.dim_sum_gr));
  }

  report.checks = {
      {"t_eq_m", tm_v},
      {"basis_h", bh_v},
      {"basis_c", bc_v},
      {"thin_symmetry", thin_v},
      {"corner_dim", corner_v},
      {"block_structure", blocks_v},
      {"distance_partition", dist_v},
  };
  return report;
}

std::string report_to_json_string(const AlgebraReport& report) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json j;
  j["params"]["n"] = report.params.n;
  j["params"]["m"] = report.params.m;
  j["params"]["base_size"] = report.params.base_size;
  auto dim = [](Index d) {
    return d < 0 ? ordered_json(nullptr) : ordered_json(d);
  };
  j["dims"]["t_closure"] = dim(report.dim_t_closure);
  j["dims"]["m_span"] = dim(report.dim_m_span);
  j["dims"]["sum_gr"] = dim(report.dim_sum_gr);
  j["dims"]["closed_form"] = dim(report.dim_closed_form);
  j["checks"] = ordered_json::object();
  for (const auto& [name, verdict] : report.checks) j["checks"][name] = verdict;
  j["erratum_flags"] = ordered_json::array();
  for (const auto& flag : report.erratum_flags) j["erratum_flags"].push_back(flag);
  j["timings_ms"] = ordered_json::object();
  for (const auto& [label, ms] : report.timings_ms) j["timings_ms"][label] = ms;
  return j.dump(2) + "\n";
}

}  // namespace twlab
