#ifndef TWLAB_INTERSECTION_HPP
#define TWLAB_INTERSECTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "twlab/exact_matrix.hpp"

namespace twlab {

// Index-space tag for the k-subsets of a v-set in colex order.
std::string subset_space_tag(int v, int k);

// Inclusion matrix: rows are i-subsets, columns j-subsets of a v-set
// (colex order both ways), entry 1 iff the row subset is contained in the
// column subset.
const ExactMatrix& build_W(int v, int i, int j);

// Intersection matrices: entry at (y, z) is binomial(|y intersect z|, l)
// for build_C and the indicator of |y intersect z| == l for build_H.  Any
// integer l is accepted; l outside the feasible range yields the zero
// matrix (matching the convention that C^l vanishes for l < 0 or
// l > min(i,j)).
const ExactMatrix& build_C(int v, int i, int j, int l);
const ExactMatrix& build_H(int v, int i, int j, int l);

// Feasible intersection sizes of an i-subset and a j-subset of a v-set:
// lo = max(0, i+j-v), hi = min(i,j); empty when lo > hi.
struct LevelRange {
  int lo;
  int hi;
  bool empty() const { return lo > hi; }
  Index count() const { return empty() ? 0 : hi - lo + 1; }
};
LevelRange level_range(int i, int j, int v);
Index level_count(int i, int j, int v);

// One verified instance of a named identity.  `holds` is the verdict;
// `witness` is the first mismatching cell when it fails.  Instances of
// identity "w_c_printed_bound" probe a variant whose summation bound
// appears to carry a sign typo (the erratum_probe flag marks them); they
// are reported but never counted as suite failures.
struct IdentityResult {
  std::string identity;
  int v = 0;
  std::vector<std::pair<std::string, int>> params;  // canonical key order
  bool holds = false;
  bool erratum_probe = false;
  CellWitness witness;
};

// Canonical identity order used by sweeps and reports.
const std::vector<std::string>& identity_names();

// Checks a single instance; throws std::invalid_argument when the
// parameters are outside the identity's stated range (distinct from a
// failing verdict).
IdentityResult verify_identity(const std::string& name, int v,
                               const std::vector<std::pair<std::string, int>>& params);

// All valid instances of one identity at ground size v, in deterministic
// parameter order.
std::vector<IdentityResult> sweep_identity(const std::string& name, int v);

// Every identity for every ground size 0..v_max.
std::vector<IdentityResult> sweep_all_identities(int v_max);

}  // namespace twlab

#endif
