#ifndef TWLAB_INCIDENCE_HPP
#define TWLAB_INCIDENCE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "twlab/exact_matrix.hpp"
#include "twlab/subsets.hpp"

namespace twlab {

// Bipartite inclusion graph on the m-subsets and (m+1)-subsets of an
// n-set, studied around a base vertex of size base_size.  Theorem-level
// results assume an m-subset base and n >= 3m; the smaller thresholds are
// tracked separately so exploratory runs can state exactly which
// hypothesis they drop.
struct GeometryParams {
  int n = 0;
  int m = 0;
  int base_size = 0;  // m or m+1

  bool valid_construction() const {
    return m >= 0 && n >= m + 1 && n <= kMaxGroundSet &&
           (base_size == m || base_size == m + 1);
  }
  // Distance formula and diameter 2m+1 need n >= 2m+1.
  bool meets_distance_hypothesis() const { return n >= 2 * m + 1; }
  // The span results need n >= 3m and an m-subset base.
  bool meets_theorem_hypothesis() const {
    return n >= 3 * m && base_size == m;
  }
};

// The vertex classes at distance 0..diameter from the base vertex,
// concatenated into one global vertex order.  When the classes follow the
// two-coordinate pattern (every vertex at distance 2t+e splits as a
// (m-t)-subset of x paired with a (t+e)-subset of the complement), each
// class is ordered with the x-part as major key and the complement part
// as minor key, both in colex order after relabeling the complement to
// 1..(n-m); that is the ordering under which the adjacency blocks equal
// Kronecker products with colex-ordered inclusion matrices.  Otherwise
// (exploratory regimes) classes fall back to (side, colex) order and
// kron_ordered is false.
struct DistancePartition {
  GeometryParams params;
  SubsetCode x = 0;
  int diameter = 0;
  bool kron_ordered = false;
  std::vector<std::vector<SubsetCode>> classes;
  std::vector<std::string> class_tags;
  std::vector<Index> class_offsets;  // class_offsets[i] = global index of
                                     // the first vertex of class i
  std::unordered_map<SubsetCode, Index> index_of;

  Index total() const;
  Index class_size(int i) const;
  std::string ambient_tag() const;
};

// Distance from the m-subset x to a vertex z per the closed-form law:
// 2(m - |x intersect z|) on the m-side, 2(m - |x intersect z|) + 1 on the
// (m+1)-side.  Throws when |z| is on neither side.
int classify_vertex(SubsetCode x, SubsetCode z);

// Builds the partition around the colex-least base of size base_size,
// classifying by breadth-first distance over the implicit inclusion
// adjacency (so it is meaningful even where the distance law is not
// claimed).
DistancePartition build_partition(const GeometryParams& p);

// Adjacency matrix in the partition's global vertex order.  Requires
// n >= 2m+1 unless exploratory is set.
ExactMatrix build_graph(const DistancePartition& part, bool exploratory = false);

// Diagonal 0/1 projections onto the distance classes; one per class,
// summing to the identity.
std::vector<ExactMatrix> build_dual_idempotents(const DistancePartition& part);

// Breadth-first distances from `source` over nonzero off-diagonal entries
// of a square matrix; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const ExactMatrix& adjacency, Index source);

struct BlockCheck {
  int i = 0;
  int j = 0;
  bool pass = false;
  std::string detail;  // first mismatch, when failing
};

// Extracts every block A_{i,j} (rows class i, columns class j) and
// compares it entrywise with its predicted shape: zero for |i-j| != 1,
// identity (x) inclusion for (2t, 2t+1), transposed-inclusion (x)
// identity for (2t+1, 2t+2), and transposes thereof below the diagonal.
std::vector<BlockCheck> verify_block_structure(const DistancePartition& part,
                                               const ExactMatrix& A);

struct DistanceCheck {
  bool pass = false;
  int observed_diameter = -1;
  std::string detail;
};

// Asserts classify_vertex == BFS distance (computed from the matrix) for
// every vertex, and that the diameter is 2m+1.
DistanceCheck verify_distance_partition(const DistancePartition& part,
                                        const ExactMatrix& A);

// Johnson graph on the m-subsets of an n-set, colex vertex order:
// adjacent iff the intersection has size m-1 (the matrix is exactly the
// indicator intersection matrix at level m-1).
ExactMatrix build_johnson_graph(int n, int m);

// Distance classes of the Johnson graph around x (distance m - |x & y|,
// valid for n >= 2m), as diagonal projections in colex vertex order.
std::vector<ExactMatrix> johnson_dual_idempotents(int n, int m, SubsetCode x);

}  // namespace twlab

#endif
