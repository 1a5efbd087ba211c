#include "twlab/subsets.hpp"

#include <bit>
#include <cassert>
#include <cstdlib>

namespace twlab {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Index binomial_index(int n, int k) {
  Int b = binomial(n, k);
  if (!b.fits_slong_p()) std::abort();
  return static_cast<Index>(b.get_si());
}

int popcount(SubsetCode s) { return std::popcount(s); }

int intersect_size(SubsetCode a, SubsetCode b) { return std::popcount(a & b); }

Index colex_rank(SubsetCode s) {
  Index rank = 0;
  int t = 1;
  while (s != 0) {
    int b = std::countr_zero(s);
    rank += binomial_index(b, t);
    ++t;
    s &= s - 1;
  }
  return rank;
}

SubsetCode colex_unrank(Index rank, int k) {
  assert(rank >= 0 && k >= 0 && k <= kMaxGroundSet);
  SubsetCode s = 0;
  for (int t = k; t >= 1; --t) {
    // Largest c with binomial(c, t) <= rank; such c exists since
    // binomial(t-1, t) = 0.
    int c = t - 1;
    while (binomial_index(c + 1, t) <= rank) ++c;
    s |= SubsetCode{1} << c;
    rank -= binomial_index(c, t);
  }
  assert(rank == 0);
  return s;
}

std::vector<SubsetCode> enumerate_subsets(int v, int k) {
  assert(v >= 0 && v <= kMaxGroundSet && k >= 0);
  std::vector<SubsetCode> out;
  if (k > v) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  out.reserve(static_cast<std::size_t>(binomial_index(v, k)));
  SubsetCode limit = (v == kMaxGroundSet + 1) ? 0 : (SubsetCode{1} << v);
  SubsetCode s = (SubsetCode{1} << k) - 1;
  while (s < limit) {
    out.push_back(s);
    // Gosper's hack: next mask with the same popcount in numeric
    // (= colex) order.
    SubsetCode c = s & -s;
    SubsetCode r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace twlab
