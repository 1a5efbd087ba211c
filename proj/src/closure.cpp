#include "twlab/closure.hpp"

#include <deque>
#include <stdexcept>

namespace twlab {

Closure algebra_closure(const std::vector<ExactMatrix>& generators,
                        const std::vector<std::string>& names,
                        Side side) {
  if (generators.size() != names.size())
    throw std::invalid_argument("algebra_closure: one name per generator");
  if (generators.empty())
    return Closure{MatrixSpace(0, 0, "", ""), {}, {}, 0};

  const ExactMatrix& g0 = generators.front();
  if (g0.rows() != g0.cols())
    throw std::invalid_argument("algebra_closure: generators must be square");
  for (const auto& g : generators)
    if (g.rows() != g0.rows() || g.cols() != g0.cols() ||
        g.row_tag() != g0.row_tag() || g.col_tag() != g0.col_tag())
      throw std::invalid_argument(
          "algebra_closure: generators over different index spaces");

  Closure result{
      MatrixSpace(g0.rows(), g0.cols(), g0.row_tag(), g0.col_tag()),
      {},
      {},
      0};

  SparseVec residue;
  auto take = [&](const ExactMatrix& m, const std::string& word) {
    if (!result.space.insert_get(m, &residue)) return false;
    result.elements.push_back(primitive_integer_scale(
        devectorize(residue, g0.rows(), g0.cols(), g0.row_tag(), g0.col_tag())));
    result.words.push_back(word);
    return true;
  };

  std::deque<std::size_t> queue;
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (take(generators[g], names[g]))
      queue.push_back(result.elements.size() - 1);

  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    // elements[e] is a frozen copy, so growing the vector below is safe.
    for (std::size_t g = 0; g < generators.size(); ++g) {
      ExactMatrix prod = side == Side::kLeft
                             ? mat_mul(generators[g], result.elements[e])
                             : mat_mul(result.elements[e], generators[g]);
      ++result.products;
      std::string word = side == Side::kLeft
                             ? names[g] + " " + result.words[e]
                             : result.words[e] + " " + names[g];
      if (take(prod, word)) queue.push_back(result.elements.size() - 1);
    }
  }
  return result;
}

}  // namespace twlab
