#ifndef TWLAB_MATRIX_SPACE_HPP
#define TWLAB_MATRIX_SPACE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "twlab/exact_matrix.hpp"

namespace twlab {

// A subspace of the space of ambient_rows x ambient_cols matrices, stored
// as a reduced-echelon basis of vectorized matrices (coordinate key =
// row * cols + col).  The basis is canonical: pivots strictly increase,
// every pivot coordinate is zero in all other basis vectors, and leading
// coefficients are 1.  Two MatrixSpaces are therefore equal as subspaces
// exactly when their basis lists are identical.
class MatrixSpace {
 public:
  MatrixSpace(Index ambient_rows, Index ambient_cols, std::string row_tag,
              std::string col_tag);

  Index ambient_rows() const { return rows_; }
  Index ambient_cols() const { return cols_; }
  const std::string& row_tag() const { return row_tag_; }
  const std::string& col_tag() const { return col_tag_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }

  // Reduces m against the basis; a nonzero residue is normalized and
  // inserted (keeping the canonical form).  Returns whether the dimension
  // grew.  insert_get additionally copies out the normalized residue that
  // was inserted (left empty when m was already in the span).
  bool insert(const ExactMatrix& m);
  bool insert_get(const ExactMatrix& m, SparseVec* residue);

  bool contains(const ExactMatrix& m) const;
  bool equals(const MatrixSpace& o) const;

  const std::vector<SparseVec>& basis() const { return basis_; }
  ExactMatrix basis_element(std::size_t k) const;

 private:
  void check_compatible(const ExactMatrix& m) const;
  // Eliminates every pivot coordinate present in v; echelon order makes a
  // single left-to-right pass sufficient.
  SparseVec reduce(SparseVec v) const;

  Index rows_;
  Index cols_;
  std::string row_tag_;
  std::string col_tag_;
  std::vector<SparseVec> basis_;             // pivot keys strictly increasing
  std::map<Index, std::size_t> pivot_row_;   // pivot key -> basis index
};

// v - c * w over sparse coordinate vectors.
SparseVec sparse_axpy(const SparseVec& v, const Rational& c,
                      const SparseVec& w);

}  // namespace twlab

#endif
