#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "twlab/intersection.hpp"
#include "twlab/terwilliger.hpp"

using namespace twlab;

TEST_CASE("closure dimensions of the smallest geometries are as frozen") {
  // Values pinned by independent level-pair counting done by hand.
  CHECK(compute_T(build_instance(GeometryParams{3, 1, 1})).space.dim() == 20);
  CHECK(compute_T(build_instance(GeometryParams{4, 1, 1})).space.dim() == 25);
  CHECK(compute_T(build_instance(GeometryParams{5, 1, 1})).space.dim() == 26);
}

TEST_CASE("the closure contains its generators and the identity") {
  AlgebraInstance inst = build_instance(GeometryParams{5, 1, 1});
  Closure T = compute_T(inst);
  CHECK(T.space.contains(inst.A));
  ExactMatrix sum = ExactMatrix::zero(inst.partition.total(),
                                      inst.partition.total(),
                                      inst.partition.ambient_tag(),
                                      inst.partition.ambient_tag());
  for (const auto& e : inst.idempotents) {
    CHECK(T.space.contains(e));
    sum = mat_add(sum, e);
  }
  CHECK(sum == ExactMatrix::identity(inst.partition.total(),
                                     inst.partition.ambient_tag()));
  CHECK(T.space.contains(sum));
  // Every stored element carries a word over the generator names.
  REQUIRE(T.elements.size() == T.words.size());
  CHECK(T.words[0] == "A");
  CHECK(T.words[1] == "E0*");
}

TEST_CASE("the projections alone span only the diagonal-class algebra") {
  AlgebraInstance inst = build_instance(GeometryParams{5, 1, 1});
  std::vector<std::string> names(inst.generator_names.begin() + 1,
                                 inst.generator_names.end());
  Closure e_only = algebra_closure(inst.idempotents, names);
  CHECK(e_only.space.dim() == 2 * inst.params.m + 2);
}

TEST_CASE("candidate span matches the closure on theorem instances") {
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{
           {4, 1}, {5, 1}, {6, 2}}) {
    AlgebraInstance inst = build_instance(GeometryParams{n, m, m});
    Closure T = compute_T(inst);
    MatrixSpace M = compute_M(inst);
    TMCheck check = verify_T_equals_M(inst, T, M);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(check.pass);
    CHECK(check.dim_t == check.dim_m);
    CHECK(check.witness.empty());
  }
}

TEST_CASE("the candidate span is closed under multiplication") {
  AlgebraInstance inst = build_instance(GeometryParams{4, 1, 1});
  MatrixSpace M = compute_M(inst);
  CHECK(M.dim() == 25);
  CHECK(M.contains(inst.A));
  for (const auto& e : inst.idempotents) CHECK(M.contains(e));
  for (std::size_t a = 0; a < M.basis().size(); ++a) {
    const ExactMatrix ma = M.basis_element(a);
    for (std::size_t b = 0; b < M.basis().size(); ++b)
      CHECK(M.contains(mat_mul(ma, M.basis_element(b))));
  }
}

TEST_CASE("level-pair counting reproduces the frozen dimension table") {
  CHECK(dim_sum_GR(3, 1) == 20);
  CHECK(dim_sum_GR(4, 1) == 25);
  CHECK(dim_sum_GR(5, 1) == 26);
  CHECK(dim_sum_GR(6, 1) == 26);
  CHECK(dim_sum_GR(6, 2) == 74);
  CHECK(dim_sum_GR(7, 2) == 79);
  CHECK(dim_sum_GR(8, 2) == 80);
  CHECK(dim_sum_GR(9, 3) == 184);
  CHECK(dim_sum_GR(10, 3) == 189);
  CHECK(dim_sum_GR(11, 3) == 190);
  CHECK_THROWS_AS(dim_sum_GR(5, 2), std::invalid_argument);
}

TEST_CASE("closed-form dimension values and their boundary cases") {
  CHECK(dim_closed_form(3, 1) == 22);   // printed correction at n = 3m
  CHECK(dim_closed_form(4, 1) == 25);   // n = 3m+1
  CHECK(dim_closed_form(5, 1) == 26);
  CHECK(dim_closed_form(9, 1) == 26);   // stabilizes for n >= 3m+2
  CHECK(dim_closed_form(6, 2) == 76);
  CHECK(dim_closed_form(7, 2) == 79);
  CHECK(dim_closed_form(8, 2) == 80);
  CHECK(dim_closed_form(9, 3) == 186);
  CHECK(dim_closed_form(10, 3) == 189);
  CHECK(dim_closed_form(11, 3) == 190);
  CHECK_THROWS_AS(dim_closed_form(5, 2), std::invalid_argument);
}

TEST_CASE("both claimed families are bases of the closure") {
  AlgebraInstance inst = build_instance(GeometryParams{5, 1, 1});
  Closure T = compute_T(inst);
  for (BasisKind kind : {BasisKind::kH, BasisKind::kC}) {
    BasisFamily fam = build_basis_family(inst, kind);
    BasisCheck check = verify_basis_family(inst, T, fam);
    CHECK(check.pass);
    CHECK(check.cardinality == 26);
    CHECK(check.independent_dim == 26);
    CHECK(check.spans_T);
    CHECK(check.detail.empty());
  }
}

TEST_CASE("basis members stay within the feasible level ranges") {
  AlgebraInstance inst = build_instance(GeometryParams{6, 2, 2});
  BasisFamily fam = build_basis_family(inst, BasisKind::kH);
  CHECK(static_cast<Index>(fam.members.size()) == dim_sum_GR(6, 2));
  const int m = 2, nm = 4;
  for (const BasisMember& b : fam.members) {
    const LevelRange g = level_range(m - b.i / 2, m - b.j / 2, m);
    const LevelRange r = level_range((b.i + 1) / 2, (b.j + 1) / 2, nm);
    CHECK(b.level_x >= g.lo);
    CHECK(b.level_x <= g.hi);
    CHECK(b.level_c >= r.lo);
    CHECK(b.level_c <= r.hi);
  }
}

TEST_CASE("pinched slices of the closure are symmetric") {
  AlgebraInstance inst = build_instance(GeometryParams{5, 1, 1});
  Closure T = compute_T(inst);
  ThinCheck check = verify_thin(inst, T);
  CHECK(check.pass);
  CHECK(check.detail.empty());
}

TEST_CASE("even corner matches the independent subset-graph closure") {
  AlgebraInstance inst = build_instance(GeometryParams{5, 1, 1});
  Closure T = compute_T(inst);
  CornerCheck check = verify_corner(inst, T);
  CHECK(check.pass);
  CHECK(check.corner_dim == 5);
  CHECK(check.johnson_dim == 5);
  CHECK(check.sum_even_gr == 5);

  AlgebraInstance inst41 = build_instance(GeometryParams{4, 1, 1});
  CornerCheck check41 = verify_corner(inst41, compute_T(inst41));
  CHECK(check41.pass);
  CHECK(check41.corner_dim == 5);
  CHECK(check41.sum_even_gr == 5);
}

TEST_CASE("full run reports all-pass with empty flags away from n = 3m") {
  AlgebraReport rep = run_algebra(GeometryParams{5, 1, 1}, RunOptions{});
  CHECK(rep.all_passed());
  CHECK(rep.erratum_flags.empty());
  CHECK(rep.dim_t_closure == 26);
  CHECK(rep.dim_m_span == 26);
  CHECK(rep.dim_sum_gr == 26);
  CHECK(rep.dim_closed_form == 26);
  REQUIRE(rep.checks.size() == 7);
  for (const auto& [name, verdict] : rep.checks) {
    CAPTURE(name);
    CHECK(verdict == "pass");
  }
}

TEST_CASE("at n = 3m the two counting formulas split and get flagged") {
  AlgebraReport rep = run_algebra(GeometryParams{3, 1, 1}, RunOptions{});
  CHECK(rep.all_passed());  // structure checks still pass
  CHECK(rep.dim_t_closure == 20);
  CHECK(rep.dim_sum_gr == 20);
  CHECK(rep.dim_closed_form == 22);
  REQUIRE(rep.erratum_flags.size() == 1);
  CHECK(rep.erratum_flags[0].find("closed_form=22") != std::string::npos);
  CHECK(rep.erratum_flags[0].find("sum_gr=20") != std::string::npos);
  CHECK(rep.erratum_flags[0].find("closure=20") != std::string::npos);
}

TEST_CASE("an oversized base degrades to exploratory or skipped verdicts") {
  RunOptions opt;
  opt.exploratory = true;
  AlgebraReport rep = run_algebra(GeometryParams{5, 1, 2}, opt);
  CHECK(rep.dim_t_closure > 0);
  CHECK(rep.dim_m_span == -1);
  CHECK(rep.dim_sum_gr == -1);
  CHECK(rep.dim_closed_form == -1);
  for (const auto& [name, verdict] : rep.checks) {
    CAPTURE(name);
    if (name == "thin_symmetry")
      CHECK(verdict == "exploratory-pass");
    else
      CHECK(verdict == "skipped");
  }
  CHECK(rep.all_passed());
}

TEST_CASE("a short ground set runs exploratorily without hard failures") {
  RunOptions opt;
  opt.exploratory = true;
  AlgebraReport rep = run_algebra(GeometryParams{4, 2, 2}, opt);
  for (const auto& [name, verdict] : rep.checks) {
    CAPTURE(name);
    CHECK(verdict != "fail");  // everything is exploratory or skipped here
  }
  CHECK(rep.all_passed());
}

TEST_CASE("dropping one directed edge breaks the structural checks") {
  RunOptions opt;
  opt.mutate_edge = true;
  AlgebraReport rep = run_algebra(GeometryParams{3, 1, 1}, opt);
  CHECK(!rep.all_passed());
  bool block_fail = false, dist_fail = false;
  for (const auto& [name, verdict] : rep.checks) {
    if (name == "block_structure") block_fail = (verdict == "fail");
    if (name == "distance_partition") dist_fail = (verdict == "fail");
  }
  CHECK(block_fail);
  CHECK(dist_fail);
}

TEST_CASE("reports serialize to identical bytes across repeated runs") {
  const std::string a =
      report_to_json_string(run_algebra(GeometryParams{4, 1, 1}, RunOptions{}));
  const std::string b =
      report_to_json_string(run_algebra(GeometryParams{4, 1, 1}, RunOptions{}));
  CHECK(a == b);
  CHECK(a.find("\"t_closure\": 25") != std::string::npos);
  CHECK(a.find("\"timings_ms\": {}") != std::string::npos);
}

TEST_CASE("null dimensions serialize as JSON null") {
  RunOptions opt;
  opt.exploratory = true;
  const std::string s =
      report_to_json_string(run_algebra(GeometryParams{5, 1, 2}, opt));
  CHECK(s.find("\"m_span\": null") != std::string::npos);
  CHECK(s.find("\"sum_gr\": null") != std::string::npos);
}

TEST_CASE("timings are recorded only when requested") {
  RunOptions opt;
  opt.timings = true;
  AlgebraReport rep = run_algebra(GeometryParams{3, 1, 1}, opt);
  CHECK(!rep.timings_ms.empty());
  AlgebraReport quiet = run_algebra(GeometryParams{3, 1, 1}, RunOptions{});
  CHECK(quiet.timings_ms.empty());
}

TEST_CASE("phase selection narrows the work and the verdicts") {
  RunOptions opt;
  opt.do_blocks = opt.do_distance = opt.do_tm = opt.do_corner = false;
  opt.do_bases = true;
  opt.do_thin = false;
  AlgebraReport rep = run_algebra(GeometryParams{4, 1, 1}, opt);
  CHECK(rep.dim_t_closure == 25);  // bases need the closure
  CHECK(rep.dim_m_span == -1);
  for (const auto& [name, verdict] : rep.checks) {
    if (name == "basis_h" || name == "basis_c")
      CHECK(verdict == "pass");
    else
      CHECK(verdict == "skipped");
  }
}

TEST_CASE("candidate span construction needs the product ordering") {
  RunOptions opt;
  opt.exploratory = true;
  AlgebraInstance inst = build_instance(GeometryParams{5, 1, 2}, true);
  CHECK_THROWS_AS(compute_M(inst), std::invalid_argument);
  CHECK_THROWS_AS(build_basis_family(inst, BasisKind::kH),
                  std::invalid_argument);
}
