#ifndef TWLAB_SUBSETS_HPP
#define TWLAB_SUBSETS_HPP

#include <cstdint>
#include <vector>

#include "twlab/rational.hpp"

namespace twlab {

// A subset of the ground set {0, 1, ..., v-1} packed into a 64-bit mask,
// bit i set iff element i is in the subset.  Ground sets are therefore
// limited to v <= 63, far above anything the exact solvers can afford.
using SubsetCode = std::uint64_t;

constexpr int kMaxGroundSet = 63;

// Exact binomial coefficient; 0 whenever the pair is outside 0 <= k <= n.
Int binomial(long n, long k);

// Same value as a machine integer.  Aborts if the coefficient does not
// fit, which cannot happen for the index computations it is used for.
Index binomial_index(int n, int k);

int popcount(SubsetCode s);
int intersect_size(SubsetCode a, SubsetCode b);

// Position of a k-subset in colexicographic order.  With the elements of
// the subset written b_1 < b_2 < ... < b_k, the rank is
//   sum_t binomial(b_t, t),
// and colex order on fixed-size masks coincides with numeric order of the
// masks themselves.
Index colex_rank(SubsetCode s);

// Inverse of colex_rank for subsets of size k.
SubsetCode colex_unrank(Index rank, int k);

// All k-subsets of {0,...,v-1} in colex order (equivalently: increasing
// mask value).  k = 0 yields the single empty set.
std::vector<SubsetCode> enumerate_subsets(int v, int k);

}  // namespace twlab

#endif
