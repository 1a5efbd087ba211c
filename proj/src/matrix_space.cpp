#include "twlab/matrix_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace twlab {

SparseVec sparse_axpy(const SparseVec& v, const Rational& c,
                      const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  auto iv = v.begin(), ev = v.end();
  auto iw = w.begin(), ew = w.end();
  while (iv != ev || iw != ew) {
    if (iw == ew || (iv != ev && iv->first < iw->first)) {
      out.push_back(*iv++);
    } else if (iv == ev || iw->first < iv->first) {
      Rational val = -c * iw->second;
      if (!is_zero(val)) out.emplace_back(iw->first, std::move(val));
      ++iw;
    } else {
      Rational val = iv->second - c * iw->second;
      if (!is_zero(val)) out.emplace_back(iv->first, std::move(val));
      ++iv, ++iw;
    }
  }
  return out;
}

MatrixSpace::MatrixSpace(Index ambient_rows, Index ambient_cols,
                         std::string row_tag, std::string col_tag)
    : rows_(ambient_rows),
      cols_(ambient_cols),
      row_tag_(std::move(row_tag)),
      col_tag_(std::move(col_tag)) {}

void MatrixSpace::check_compatible(const ExactMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw std::invalid_argument(
        "MatrixSpace: ambient mismatch, expected " + std::to_string(rows_) +
        "x" + std::to_string(cols_) + ", got " + std::to_string(m.rows()) +
        "x" + std::to_string(m.cols()));
  if (m.row_tag() != row_tag_ || m.col_tag() != col_tag_)
    throw std::invalid_argument("MatrixSpace: index-space mismatch [" +
                                row_tag_ + " x " + col_tag_ + "] vs [" +
                                m.row_tag() + " x " + m.col_tag() + "]");
}

SparseVec MatrixSpace::reduce(SparseVec v) const {
  // Basis vectors have no support before their pivot, so eliminating the
  // smallest reducible coordinate never reintroduces earlier ones.
  std::size_t at = 0;
  while (at < v.size()) {
    auto it = pivot_row_.find(v[at].first);
    if (it == pivot_row_.end()) {
      ++at;
      continue;
    }
    v = sparse_axpy(v, v[at].second, basis_[it->second]);
  }
  return v;
}

bool MatrixSpace::insert(const ExactMatrix& m) {
  return insert_get(m, nullptr);
}

bool MatrixSpace::insert_get(const ExactMatrix& m, SparseVec* residue) {
  check_compatible(m);
  if (residue) residue->clear();
  SparseVec v = reduce(vectorize(m));
  if (v.empty()) return false;

  // Normalize the leading coefficient to 1.
  const Rational lead = v.front().second;
  if (!is_one(lead))
    for (auto& [key, val] : v) val /= lead;

  // Clear the new pivot from existing basis vectors, keeping the reduced
  // form canonical.
  const Index pivot = v.front().first;
  for (auto& row : basis_) {
    auto it = std::lower_bound(
        row.begin(), row.end(), pivot,
        [](const std::pair<Index, Rational>& e, Index k) { return e.first < k; });
    if (it != row.end() && it->first == pivot) row = sparse_axpy(row, it->second, v);
  }

  if (residue) *residue = v;
  auto pos = pivot_row_.lower_bound(pivot);
  std::size_t idx = basis_.size();
  if (pos != pivot_row_.end()) idx = pos->second;
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx),
                std::move(v));
  for (auto& [key, row_idx] : pivot_row_)
    if (row_idx >= idx) ++row_idx;
  pivot_row_.emplace(pivot, idx);
  return true;
}

bool MatrixSpace::contains(const ExactMatrix& m) const {
  check_compatible(m);
  return reduce(vectorize(m)).empty();
}

bool MatrixSpace::equals(const MatrixSpace& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && basis_ == o.basis_;
}

ExactMatrix MatrixSpace::basis_element(std::size_t k) const {
  return devectorize(basis_.at(k), rows_, cols_, row_tag_, col_tag_);
}

}  // namespace twlab
