#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "twlab/intersection.hpp"
#include "twlab/matrix_space.hpp"
#include "twlab/subsets.hpp"

using namespace twlab;

TEST_CASE("inclusion matrix of 1-subsets into 2-subsets of a 3-set") {
  // Rows {0},{1},{2}; columns {0,1},{0,2},{1,2} (colex).
  const ExactMatrix& w = build_W(3, 1, 2);
  REQUIRE(w.rows() == 3);
  REQUIRE(w.cols() == 3);
  CHECK(w.row_tag() == subset_space_tag(3, 1));
  CHECK(w.col_tag() == subset_space_tag(3, 2));
  const int expect[3][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (Index r = 0; r < 3; ++r)
    for (Index c = 0; c < 3; ++c) CHECK(w.at(r, c) == expect[r][c]);
}

TEST_CASE("inclusion at equal sizes is the identity, from the empty set all ones") {
  CHECK(same_entries(build_W(4, 2, 2),
                     ExactMatrix::identity(6, subset_space_tag(4, 2))));
  const ExactMatrix& w = build_W(4, 0, 3);
  REQUIRE(w.rows() == 1);
  REQUIRE(w.cols() == 4);
  CHECK(w.nnz() == 4);  // every 3-subset contains the empty set
}

TEST_CASE("row sums of an inclusion matrix count supersets") {
  // Each 1-subset of a 5-set lies in C(4,1) = 4 of the 2-subsets.
  const ExactMatrix& w = build_W(5, 1, 2);
  std::vector<Int> row_sum(5, 0);
  for (const auto& e : w.entries()) row_sum[e.row] += e.value.get_num();
  for (const auto& s : row_sum) CHECK(s == 4);
}

TEST_CASE("binomial-weighted intersection matrices at the extreme levels") {
  // Level 0 weights everything by 1.
  const ExactMatrix& c0 = build_C(4, 2, 3, 0);
  CHECK(c0.nnz() == c0.rows() * c0.cols());
  for (const auto& e : c0.entries()) CHECK(e.value == 1);
  // The top level reduces to inclusion: binomial(|y n z|, i) = 1 iff y in z.
  CHECK(same_entries(build_C(4, 2, 3, 2), build_W(4, 2, 3)));
  CHECK(same_entries(build_C(5, 3, 2, 2), transpose(build_W(5, 2, 3))));
  // Out-of-range levels are zero matrices by convention.
  CHECK(build_C(4, 2, 3, -1).is_zero());
  CHECK(build_C(4, 2, 3, 3).is_zero());
  CHECK(build_H(4, 2, 3, 5).is_zero());
}

TEST_CASE("intersection entries are binomial weights of the overlap") {
  const ExactMatrix& c1 = build_C(4, 2, 2, 1);
  const auto subs = enumerate_subsets(4, 2);
  for (Index r = 0; r < 6; ++r)
    for (Index c = 0; c < 6; ++c)
      CHECK(c1.at(r, c) == intersect_size(subs[static_cast<std::size_t>(r)],
                                          subs[static_cast<std::size_t>(c)]));
}

TEST_CASE("indicator matrices partition the all-ones matrix by level") {
  const int v = 5, i = 2, j = 3;
  ExactMatrix sum = ExactMatrix::zero(build_H(v, i, j, 0).rows(),
                                      build_H(v, i, j, 0).cols(),
                                      subset_space_tag(v, i),
                                      subset_space_tag(v, j));
  for (int l = 0; l <= std::min(i, j); ++l) {
    const ExactMatrix& h = build_H(v, i, j, l);
    for (const auto& e : h.entries()) CHECK(e.value == 1);
    sum = mat_add(sum, h);
  }
  CHECK(sum.nnz() == sum.rows() * sum.cols());
  for (const auto& e : sum.entries()) CHECK(e.value == 1);
}

TEST_CASE("the weighted matrices expand over indicators with binomial coefficients") {
  const int v = 5, i = 2, j = 3;
  for (int l = 0; l <= 2; ++l) {
    ExactMatrix expect = ExactMatrix::zero(build_C(v, i, j, l).rows(),
                                           build_C(v, i, j, l).cols(),
                                           subset_space_tag(v, i),
                                           subset_space_tag(v, j));
    for (int g = l; g <= std::min(i, j); ++g)
      expect = mat_add(expect,
                       mat_scale(Rational(binomial(g, l)), build_H(v, i, j, g)));
    CHECK(same_entries(build_C(v, i, j, l), expect));
  }
}

TEST_CASE("the indicator family is linearly independent") {
  MatrixSpace sp(6, 6, subset_space_tag(4, 2), subset_space_tag(4, 2));
  for (int l = 0; l <= 2; ++l) CHECK(sp.insert(build_H(4, 2, 2, l)));
  CHECK(sp.dim() == 3);
}

TEST_CASE("level ranges enumerate the feasible intersection sizes") {
  CHECK(level_range(1, 1, 2).lo == 0);
  CHECK(level_range(1, 1, 2).hi == 1);
  CHECK(level_count(1, 1, 2) == 2);
  CHECK(level_count(3, 3, 4) == 2);  // sizes 2 and 3
  CHECK(level_count(2, 3, 4) == 2);  // sizes 1 and 2
  CHECK(level_count(0, 3, 5) == 1);  // only the empty intersection
  CHECK(level_range(5, 1, 4).empty());
  CHECK(level_count(5, 1, 4) == 0);
}

TEST_CASE("constructors reject out-of-range subset sizes") {
  CHECK_THROWS_AS(build_W(64, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_W(4, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_C(4, 5, 2, 0), std::invalid_argument);
}

TEST_CASE("composition of inclusions is a scaled inclusion") {
  // W_{0,1} W_{1,2} = binomial(2,1) W_{0,2} on a 4-set.
  CHECK(same_entries(mat_mul(build_W(4, 0, 1), build_W(4, 1, 2)),
                     mat_scale(Rational(2), build_W(4, 0, 2))));
  IdentityResult r =
      verify_identity("w_compose", 4, {{"i", 0}, {"j", 1}, {"k", 2}});
  CHECK(r.holds);
  CHECK(!r.erratum_probe);
}

TEST_CASE("gram matrix of an inclusion is a weighted intersection matrix") {
  // W_{1,2}^t W_{1,2} = C^1_{2,2} on a 4-set.
  CHECK(same_entries(mat_mul(transpose(build_W(4, 1, 2)), build_W(4, 1, 2)),
                     build_C(4, 2, 2, 1)));
  CHECK(verify_identity("wt_w", 4, {{"i", 1}, {"j", 2}, {"k", 2}}).holds);
}

TEST_CASE("single-step gram identity handles a negative coefficient exactly") {
  // At i = j = k-1 = v/segment boundary the scalar v-i-j can be negative.
  CHECK(verify_identity("w_wt_step", 3, {{"i", 2}, {"j", 2}}).holds);
  CHECK(verify_identity("w_wt_step", 6, {{"i", 1}, {"j", 2}}).holds);
}

TEST_CASE("the printed summation bound fails where the corrected one holds") {
  const std::vector<std::pair<std::string, int>> params = {
      {"i", 1}, {"j", 2}, {"k", 2}, {"l", 1}};
  IdentityResult corrected = verify_identity("w_c", 3, params);
  CHECK(corrected.holds);
  IdentityResult printed = verify_identity("w_c_printed_bound", 3, params);
  CHECK(printed.erratum_probe);
  CHECK(!printed.holds);
  // The witness pins the first cell where the printed sum loses a term.
  CHECK(printed.witness.row == 0);
  CHECK(printed.witness.lhs == 3);
  CHECK(printed.witness.rhs == 0);
}

TEST_CASE("the printed bound only diverges when i < j") {
  for (const IdentityResult& r : sweep_identity("w_c_printed_bound", 4)) {
    int i = 0, j = 0;
    for (const auto& [key, value] : r.params) {
      if (key == "i") i = value;
      if (key == "j") j = value;
    }
    if (i >= j) CHECK(r.holds);
    if (!r.holds) CHECK(i < j);
  }
}

TEST_CASE("identity sweeps hold everywhere on small ground sets") {
  int instances = 0;
  for (const IdentityResult& r : sweep_all_identities(5)) {
    ++instances;
    if (!r.erratum_probe) {
      CAPTURE(r.identity);
      CAPTURE(r.v);
      CHECK(r.holds);
    }
  }
  CHECK(instances > 1000);  // the sweep actually covers a grid
}

TEST_CASE("verify_identity rejects malformed requests") {
  CHECK_THROWS_AS(verify_identity("no_such_identity", 4, {}),
                  std::invalid_argument);
  // w_compose needs i <= j <= k.
  CHECK_THROWS_AS(verify_identity("w_compose", 4, {{"i", 2}, {"j", 1}, {"k", 3}}),
                  std::invalid_argument);
  // Missing parameter.
  CHECK_THROWS_AS(verify_identity("w_compose", 4, {{"i", 0}, {"j", 1}}),
                  std::invalid_argument);
}

TEST_CASE("identity catalog is stable and annotated") {
  const auto& names = identity_names();
  CHECK(names.size() == 10);
  CHECK(names.front() == "w_compose");
  bool has_probe = false;
  for (const auto& n : names) has_probe |= (n == "w_c_printed_bound");
  CHECK(has_probe);
}
