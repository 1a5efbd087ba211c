#ifndef TWLAB_EXACT_MATRIX_HPP
#define TWLAB_EXACT_MATRIX_HPP

#include <string>
#include <utility>
#include <vector>

#include "twlab/rational.hpp"

namespace twlab {

struct MatrixEntry {
  Index row;
  Index col;
  Rational value;
};

inline bool operator==(const MatrixEntry& a, const MatrixEntry& b) {
  return a.row == b.row && a.col == b.col && a.value == b.value;
}

// Sparse matrix over exact rationals.  Immutable after construction;
// stored entries are nonzero and sorted row-major.  Each axis carries an
// opaque tag naming the index space it is indexed by (e.g. "C(6,2)" for
// 2-subsets of a 6-set, or "C(3,2)*C(6,1)" for a pair space); binary
// operations refuse mismatched tags so that matrices indexed by different
// vertex orderings cannot be combined silently.
class ExactMatrix {
 public:
  ExactMatrix() = default;

  static ExactMatrix zero(Index rows, Index cols, std::string row_tag,
                          std::string col_tag);
  static ExactMatrix identity(Index n, std::string tag);
  // Sorts, merges duplicates by addition, and drops zeros.
  static ExactMatrix from_entries(Index rows, Index cols, std::string row_tag,
                                  std::string col_tag,
                                  std::vector<MatrixEntry> entries);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const std::string& row_tag() const { return row_tag_; }
  const std::string& col_tag() const { return col_tag_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  Index nnz() const { return static_cast<Index>(entries_.size()); }

  Rational at(Index r, Index c) const;  // zero when absent
  bool is_zero() const { return entries_.empty(); }
  bool is_integer() const;  // every denominator is 1
  bool is_symmetric() const;

  // Dimensions, tags, and entries all equal.
  bool operator==(const ExactMatrix& o) const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::string row_tag_;
  std::string col_tag_;
  std::vector<MatrixEntry> entries_;
};

// Dimensions and entries equal; tags ignored.
bool same_entries(const ExactMatrix& a, const ExactMatrix& b);

// First cell where a and b differ, as (row, col, a-value, b-value);
// returns false when the matrices agree entrywise.
struct CellWitness {
  Index row = -1;
  Index col = -1;
  Rational lhs;
  Rational rhs;
};
bool first_difference(const ExactMatrix& a, const ExactMatrix& b,
                      CellWitness* out);

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_scale(const Rational& c, const ExactMatrix& a);
// Exact product; requires a.cols == b.rows and a.col_tag == b.row_tag.
// Throws std::invalid_argument naming both tags otherwise.
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
// Kronecker product; row (p,q) of the result is p * b.rows + q (a-major),
// and tags combine as "<a-tag>*<b-tag>".
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix transpose(const ExactMatrix& a);

ExactMatrix extract_block(const ExactMatrix& m, Index r0, Index c0,
                          Index nrows, Index ncols, std::string row_tag,
                          std::string col_tag);
// Full-size (big_rows x big_cols) matrix equal to `block` on the window
// starting at (r0, c0) and zero elsewhere.
ExactMatrix embed_block(const ExactMatrix& block, Index big_rows,
                        Index big_cols, Index r0, Index c0,
                        std::string row_tag, std::string col_tag);

// Scales a nonzero matrix to a coprime integer matrix whose first nonzero
// entry is positive (a nonzero rational scaling, so spans are unchanged).
// Zero matrices pass through.
ExactMatrix primitive_integer_scale(const ExactMatrix& m);

// Row-major linearization (row * cols + col) of the nonzero entries,
// sorted by coordinate.
using SparseVec = std::vector<std::pair<Index, Rational>>;
SparseVec vectorize(const ExactMatrix& m);
ExactMatrix devectorize(const SparseVec& v, Index rows, Index cols,
                        std::string row_tag, std::string col_tag);

}  // namespace twlab

#endif
