#ifndef TWLAB_CLOSURE_HPP
#define TWLAB_CLOSURE_HPP

#include <string>
#include <vector>

#include "twlab/exact_matrix.hpp"
#include "twlab/matrix_space.hpp"

namespace twlab {

// Which side products are formed on during closure.  Either side alone
// already yields the span of all nonempty generator words (the seeds are
// the generators, and repeated one-sided multiplication reaches every
// word); computing both is redundant and exists so tests can assert the
// two agree.
enum class Side { kLeft, kRight };

struct Closure {
  MatrixSpace space;
  // One element per successful insertion, frozen at insertion time and
  // rescaled to a coprime integer matrix (a positive scaling, so the span
  // is unaffected and later products stay in fast integer arithmetic).
  std::vector<ExactMatrix> elements;
  // Generator word whose product produced each element, e.g. "A E1* A".
  std::vector<std::string> words;
  long products = 0;
};

// Span of all nonempty products of the generators, by worklist: seed with
// the generators, then repeatedly multiply each generator onto each newly
// inserted element (FIFO over elements, generators in given order),
// inserting until nothing new appears.  Generators must be square, over a
// common index space.  An empty generator list yields the zero space.
Closure algebra_closure(const std::vector<ExactMatrix>& generators,
                        const std::vector<std::string>& names,
                        Side side = Side::kLeft);

}  // namespace twlab

#endif
