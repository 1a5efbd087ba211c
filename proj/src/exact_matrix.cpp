#include "twlab/exact_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace twlab {

namespace {

void check_same_space(const ExactMatrix& a, const ExactMatrix& b,
                      const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  if (a.row_tag() != b.row_tag() || a.col_tag() != b.col_tag())
    throw std::invalid_argument(std::string(op) + ": index-space mismatch [" +
                                a.row_tag() + " x " + a.col_tag() + "] vs [" +
                                b.row_tag() + " x " + b.col_tag() + "]");
}

// Row start offsets into a sorted entry list; offsets[r]..offsets[r+1] is
// row r.
std::vector<std::size_t> row_offsets(const ExactMatrix& m) {
  std::vector<std::size_t> off(static_cast<std::size_t>(m.rows()) + 1, 0);
  for (const auto& e : m.entries()) ++off[static_cast<std::size_t>(e.row) + 1];
  for (std::size_t r = 1; r < off.size(); ++r) off[r] += off[r - 1];
  return off;
}

}  // namespace

ExactMatrix ExactMatrix::zero(Index rows, Index cols, std::string row_tag,
                              std::string col_tag) {
  assert(rows >= 0 && cols >= 0);
  ExactMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.row_tag_ = std::move(row_tag);
  m.col_tag_ = std::move(col_tag);
  return m;
}

ExactMatrix ExactMatrix::identity(Index n, std::string tag) {
  ExactMatrix m = zero(n, n, tag, tag);
  m.entries_.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) m.entries_.push_back({k, k, Rational(1)});
  return m;
}

ExactMatrix ExactMatrix::from_entries(Index rows, Index cols,
                                      std::string row_tag,
                                      std::string col_tag,
                                      std::vector<MatrixEntry> entries) {
  ExactMatrix m = zero(rows, cols, std::move(row_tag), std::move(col_tag));
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  for (auto& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw std::invalid_argument("from_entries: coordinate out of range");
    if (!m.entries_.empty() && m.entries_.back().row == e.row &&
        m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
      if (twlab::is_zero(m.entries_.back().value)) m.entries_.pop_back();
    } else if (!twlab::is_zero(e.value)) {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

Rational ExactMatrix::at(Index r, Index c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             std::make_pair(r, c),
                             [](const MatrixEntry& e, std::pair<Index, Index> k) {
                               return e.row != k.first ? e.row < k.first
                                                       : e.col < k.second;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return Rational(0);
}

bool ExactMatrix::is_integer() const {
  for (const auto& e : entries_)
    if (e.value.get_den() != 1) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (const auto& e : entries_)
    if (e.value != at(e.col, e.row)) return false;
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && row_tag_ == o.row_tag_ &&
         col_tag_ == o.col_tag_ && entries_ == o.entries_;
}

bool same_entries(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         a.entries() == b.entries();
}

bool first_difference(const ExactMatrix& a, const ExactMatrix& b,
                      CellWitness* out) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("first_difference: dimension mismatch");
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  auto key = [](const MatrixEntry& e) { return std::make_pair(e.row, e.col); };
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && key(*ia) < key(*ib))) {
      *out = {ia->row, ia->col, ia->value, Rational(0)};
      return true;
    }
    if (ia == ea || key(*ib) < key(*ia)) {
      *out = {ib->row, ib->col, Rational(0), ib->value};
      return true;
    }
    if (ia->value != ib->value) {
      *out = {ia->row, ia->col, ia->value, ib->value};
      return true;
    }
    ++ia, ++ib;
  }
  return false;
}

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) {
  check_same_space(a, b, "mat_add");
  std::vector<MatrixEntry> out;
  out.reserve(a.entries().size() + b.entries().size());
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  auto key = [](const MatrixEntry& e) { return std::make_pair(e.row, e.col); };
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && key(*ia) < key(*ib))) {
      out.push_back(*ia++);
    } else if (ia == ea || key(*ib) < key(*ia)) {
      out.push_back(*ib++);
    } else {
      Rational s = ia->value + ib->value;
      if (!is_zero(s)) out.push_back({ia->row, ia->col, std::move(s)});
      ++ia, ++ib;
    }
  }
  return ExactMatrix::from_entries(a.rows(), a.cols(), a.row_tag(),
                                   a.col_tag(), std::move(out));
}

ExactMatrix mat_scale(const Rational& c, const ExactMatrix& a) {
  if (is_zero(c))
    return ExactMatrix::zero(a.rows(), a.cols(), a.row_tag(), a.col_tag());
  std::vector<MatrixEntry> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back({e.row, e.col, c * e.value});
  return ExactMatrix::from_entries(a.rows(), a.cols(), a.row_tag(),
                                   a.col_tag(), std::move(out));
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument(
        "mat_mul: inner dimension mismatch " + std::to_string(a.cols()) +
        " vs " + std::to_string(b.rows()));
  if (a.col_tag() != b.row_tag())
    throw std::invalid_argument("mat_mul: index-space mismatch [" +
                                a.col_tag() + "] vs [" + b.row_tag() + "]");

  const auto boff = row_offsets(b);
  const auto& be = b.entries();
  std::vector<MatrixEntry> out;

  // Row-by-row sparse product with a dense accumulator over b's columns.
  // When both operands are integral the accumulation runs over plain
  // arbitrary-precision integers, which skips all gcd work.
  const bool integral = a.is_integer() && b.is_integer();
  const std::size_t width = static_cast<std::size_t>(b.cols());
  std::vector<Int> iacc(integral ? width : 0);
  std::vector<Rational> qacc(integral ? 0 : width);
  std::vector<char> used(width, 0);
  std::vector<Index> touched;

  std::size_t i = 0;
  const auto& ae = a.entries();
  while (i < ae.size()) {
    const Index r = ae[i].row;
    touched.clear();
    for (; i < ae.size() && ae[i].row == r; ++i) {
      const Index k = ae[i].col;
      for (std::size_t t = boff[static_cast<std::size_t>(k)];
           t < boff[static_cast<std::size_t>(k) + 1]; ++t) {
        const std::size_t c = static_cast<std::size_t>(be[t].col);
        if (!used[c]) {
          used[c] = 1;
          touched.push_back(be[t].col);
          if (integral)
            iacc[c] = 0;
          else
            qacc[c] = 0;
        }
        if (integral)
          iacc[c] += ae[i].value.get_num() * be[t].value.get_num();
        else
          qacc[c] += ae[i].value * be[t].value;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index c : touched) {
      const std::size_t cs = static_cast<std::size_t>(c);
      used[cs] = 0;
      if (integral) {
        if (iacc[cs] != 0) out.push_back({r, c, Rational(iacc[cs])});
      } else {
        if (!is_zero(qacc[cs])) out.push_back({r, c, qacc[cs]});
      }
    }
  }
  return ExactMatrix::from_entries(a.rows(), b.cols(), a.row_tag(),
                                   b.col_tag(), std::move(out));
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  std::vector<MatrixEntry> out;
  out.reserve(a.entries().size() * b.entries().size());
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      out.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col,
                     ea.value * eb.value});
  return ExactMatrix::from_entries(
      a.rows() * b.rows(), a.cols() * b.cols(), a.row_tag() + "*" + b.row_tag(),
      a.col_tag() + "*" + b.col_tag(), std::move(out));
}

ExactMatrix transpose(const ExactMatrix& a) {
  std::vector<MatrixEntry> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back({e.col, e.row, e.value});
  return ExactMatrix::from_entries(a.cols(), a.rows(), a.col_tag(),
                                   a.row_tag(), std::move(out));
}

ExactMatrix extract_block(const ExactMatrix& m, Index r0, Index c0,
                          Index nrows, Index ncols, std::string row_tag,
                          std::string col_tag) {
  if (r0 < 0 || c0 < 0 || r0 + nrows > m.rows() || c0 + ncols > m.cols())
    throw std::invalid_argument("extract_block: window out of range");
  std::vector<MatrixEntry> out;
  for (const auto& e : m.entries())
    if (e.row >= r0 && e.row < r0 + nrows && e.col >= c0 && e.col < c0 + ncols)
      out.push_back({e.row - r0, e.col - c0, e.value});
  return ExactMatrix::from_entries(nrows, ncols, std::move(row_tag),
                                   std::move(col_tag), std::move(out));
}

ExactMatrix embed_block(const ExactMatrix& block, Index big_rows,
                        Index big_cols, Index r0, Index c0,
                        std::string row_tag, std::string col_tag) {
  if (r0 < 0 || c0 < 0 || r0 + block.rows() > big_rows ||
      c0 + block.cols() > big_cols)
    throw std::invalid_argument("embed_block: window out of range");
  std::vector<MatrixEntry> out;
  out.reserve(block.entries().size());
  for (const auto& e : block.entries())
    out.push_back({e.row + r0, e.col + c0, e.value});
  return ExactMatrix::from_entries(big_rows, big_cols, std::move(row_tag),
                                   std::move(col_tag), std::move(out));
}

ExactMatrix primitive_integer_scale(const ExactMatrix& m) {
  if (m.is_zero()) return m;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& e : m.entries()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            e.value.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            e.value.get_num().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(m.entries().front().value) < 0) scale = -scale;
  return mat_scale(scale, m);
}

SparseVec vectorize(const ExactMatrix& m) {
  SparseVec v;
  v.reserve(m.entries().size());
  for (const auto& e : m.entries())
    v.emplace_back(e.row * m.cols() + e.col, e.value);
  return v;
}

ExactMatrix devectorize(const SparseVec& v, Index rows, Index cols,
                        std::string row_tag, std::string col_tag) {
  std::vector<MatrixEntry> out;
  out.reserve(v.size());
  for (const auto& [key, val] : v)
    out.push_back({key / cols, key % cols, val});
  return ExactMatrix::from_entries(rows, cols, std::move(row_tag),
                                   std::move(col_tag), std::move(out));
}

}  // namespace twlab
