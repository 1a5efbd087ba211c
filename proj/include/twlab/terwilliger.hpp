#ifndef TWLAB_TERWILLIGER_HPP
#define TWLAB_TERWILLIGER_HPP

#include <string>
#include <vector>

#include "twlab/closure.hpp"
#include "twlab/exact_matrix.hpp"
#include "twlab/incidence.hpp"
#include "twlab/matrix_space.hpp"

namespace twlab {

// One geometry instance fully assembled: partition, adjacency matrix, and
// the projection generators E_0*..E_D*.
struct AlgebraInstance {
  GeometryParams params;
  DistancePartition partition;
  ExactMatrix A;
  std::vector<ExactMatrix> idempotents;
  std::vector<std::string> generator_names;  // "A", "E0*", "E1*", ...
};

AlgebraInstance build_instance(const GeometryParams& p,
                               bool exploratory = false);

// The algebra generated by A and the projections, by span closure.  This
// is the artifact's single source of truth for the algebra's dimension.
Closure compute_T(const AlgebraInstance& inst);

// The candidate span: over every class pair (i,j), the embedded products
// C^l(m) (x) C^s(n-m) for the full redundant parameter rectangle
// 0 <= l <= min of the x-side subset sizes, 0 <= s <= min of the
// complement-side subset sizes.  Requires the pair-ordered partition of
// an m-subset base.
MatrixSpace compute_M(const AlgebraInstance& inst);

struct TMCheck {
  bool pass = false;
  Index dim_t = -1;
  Index dim_m = -1;
  std::string witness;  // separating basis element, when the spaces differ
};
TMCheck verify_T_equals_M(const AlgebraInstance& inst, const Closure& T,
                          const MatrixSpace& M);

// Counting formulas for the algebra's dimension (both require n >= 3m and
// an m-subset base; the closure value is what they are tested against).
// dim_sum_GR counts feasible intersection-size pairs over all class
// pairs; dim_closed_form evaluates the closed-form polynomial with its
// printed case corrections at n = 3m and n = 3m+1.
Index dim_sum_GR(int n, int m);
Index dim_closed_form(int n, int m);

enum class BasisKind { kH, kC };

struct BasisMember {
  int i = 0;
  int j = 0;
  int level_x = 0;   // g (H-kind) or l (C-kind), on the x side
  int level_c = 0;   // r (H-kind) or s (C-kind), on the complement side
};

// The claimed basis family of the given kind: one embedded Kronecker
// product per class pair (i,j) and per feasible level pair taken from the
// nonvanishing ranges G_{i,j} and R_{i,j}.
struct BasisFamily {
  BasisKind kind = BasisKind::kH;
  std::vector<BasisMember> members;
  std::vector<ExactMatrix> matrices;
};
BasisFamily build_basis_family(const AlgebraInstance& inst, BasisKind kind);

struct BasisCheck {
  bool pass = false;
  Index cardinality = -1;
  Index independent_dim = -1;  // dimension spanned by the members
  bool spans_T = false;
  std::string detail;
};
// A family passes when its cardinality equals dim T, its members are
// independent, and their span equals T.
BasisCheck verify_basis_family(const AlgebraInstance& inst, const Closure& T,
                               const BasisFamily& family);

struct ThinCheck {
  bool pass = false;
  std::string detail;
};
// The symmetry criterion: E_i* B E_i* equals its transpose for every
// class i and every basis element B of T.
ThinCheck verify_thin(const AlgebraInstance& inst, const Closure& T);

struct CornerCheck {
  bool pass = false;
  Index corner_dim = -1;
  Index johnson_dim = -1;
  Index sum_even_gr = -1;
  std::string detail;
};
// Compares the dimension of the even corner (the span of E_{2i}* B E_{2j}*
// over basis elements B and 0 <= i,j <= m) with the dimension of the
// Johnson graph algebra on the m-subsets, computed by an independent
// closure.  Also records the even-pair counting value.
CornerCheck verify_corner(const AlgebraInstance& inst, const Closure& T);

// Names and order of the checks as serialized.
// Verdict strings: "pass", "fail", "exploratory-pass", "exploratory-fail",
// "skipped".
struct AlgebraReport {
  GeometryParams params;
  Index dim_t_closure = -1;  // -1 serializes as null (not computed)
  Index dim_m_span = -1;
  Index dim_sum_gr = -1;
  Index dim_closed_form = -1;
  std::vector<std::pair<std::string, std::string>> checks;
  std::vector<std::string> erratum_flags;
  std::vector<std::pair<std::string, double>> timings_ms;

  // A failed non-exploratory check is what drives a nonzero exit.
  bool all_passed() const;
};

struct RunOptions {
  bool exploratory = false;
  bool timings = false;
  // Fault-injection hook: drop one directed edge of the built adjacency
  // matrix before verification, so a known-bad run is reproducible.
  bool mutate_edge = false;
  // Phase selection (full report keys are emitted either way; skipped
  // phases read "skipped").
  bool do_blocks = true;
  bool do_distance = true;
  bool do_tm = true;
  bool do_bases = true;
  bool do_thin = true;
  bool do_corner = true;
};

AlgebraReport run_algebra(const GeometryParams& p, const RunOptions& opt);

// Stable serialization: field names and order are fixed, so identical
// runs produce identical bytes.
std::string report_to_json_string(const AlgebraReport& report);

}  // namespace twlab

#endif
