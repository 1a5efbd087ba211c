#ifndef TWLAB_MMIO_HPP
#define TWLAB_MMIO_HPP

#include <string>

#include "twlab/exact_matrix.hpp"
#include "twlab/incidence.hpp"

namespace twlab {

// Matrix Market coordinate format, 1-based indices, entries sorted
// row-major.  The field is "integer" when every denominator is 1 and the
// values are printed bare; otherwise the field is "rational" and every
// value is printed as num/den.
std::string matrix_market_string(const ExactMatrix& m);

// One line "0x<row vertex> 0x<col vertex>" per undirected edge (each edge
// once, lexicographic by global index), with vertices printed as the hex
// bitmask of the underlying subset.  Requires a symmetric 0/1 adjacency
// matrix over the partition's index space.
std::string edge_list_string(const DistancePartition& part,
                             const ExactMatrix& adjacency);

// Writes content to a sibling temporary file and renames it over path, so
// a reader never observes a half-written file.  Throws std::runtime_error
// on I/O failure.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace twlab

#endif
