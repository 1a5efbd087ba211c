#include "twlab/incidence.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <deque>
#include <stdexcept>

#include "twlab/intersection.hpp"

namespace twlab {

Index DistancePartition::total() const {
  Index t = 0;
  for (const auto& cl : classes) t += static_cast<Index>(cl.size());
  return t;
}

Index DistancePartition::class_size(int i) const {
  return static_cast<Index>(classes.at(static_cast<std::size_t>(i)).size());
}

std::string DistancePartition::ambient_tag() const {
  return "X(" + std::to_string(params.n) + "," + std::to_string(params.m) +
         "," + std::to_string(params.m + 1) + ";x" +
         std::to_string(params.base_size) + ")";
}

int classify_vertex(SubsetCode x, SubsetCode z) {
  const int m = popcount(x);
  const int zs = popcount(z);
  if (zs != m && zs != m + 1)
    throw std::invalid_argument(
        "classify_vertex: vertex is on neither side of the bipartition");
  const int cut = intersect_size(x, z);
  return 2 * (m - cut) + (zs == m ? 0 : 1);
}

namespace {

// Implicit breadth-first distances from x over the inclusion adjacency,
// without materializing the matrix.
std::unordered_map<SubsetCode, int> implicit_bfs(int n, int m, SubsetCode x) {
  std::unordered_map<SubsetCode, int> dist;
  dist[x] = 0;
  std::deque<SubsetCode> queue{x};
  while (!queue.empty()) {
    const SubsetCode w = queue.front();
    queue.pop_front();
    const int d = dist[w];
    std::vector<SubsetCode> nbrs;
    if (popcount(w) == m) {
      for (int e = 0; e < n; ++e)
        if (!(w >> e & 1)) nbrs.push_back(w | (SubsetCode{1} << e));
    } else {
      SubsetCode rest = w;
      while (rest != 0) {
        const SubsetCode bit = rest & (~rest + 1);
        nbrs.push_back(w ^ bit);
        rest ^= bit;
      }
    }
    for (SubsetCode z : nbrs)
      if (dist.emplace(z, d + 1).second) queue.push_back(z);
  }
  return dist;
}

}  // namespace

DistancePartition build_partition(const GeometryParams& p) {
  if (!p.valid_construction())
    throw std::invalid_argument(
        "build_partition: need 0 <= m, m+1 <= n <= " +
        std::to_string(kMaxGroundSet) + ", base size m or m+1");

  DistancePartition part;
  part.params = p;
  part.x = (SubsetCode{1} << p.base_size) - 1;  // colex-least base

  auto dist = implicit_bfs(p.n, p.m, part.x);

  int diameter = 0;
  for (const auto& [z, d] : dist) diameter = std::max(diameter, d);
  const std::size_t vertex_count = static_cast<std::size_t>(
      binomial_index(p.n, p.m) + binomial_index(p.n, p.m + 1));
  if (dist.size() != vertex_count)
    throw std::logic_error("build_partition: graph is not connected");
  part.diameter = diameter;
  part.classes.resize(static_cast<std::size_t>(diameter) + 1);

  // The two-coordinate pattern: distance 2t+e vertices are exactly those
  // with |z| = m+e and |x intersect z| = m-t.  Holds by the distance law
  // whenever n >= 2m+1 and the base is an m-subset; checked directly so
  // exploratory regimes degrade instead of mis-ordering.
  bool pattern = p.base_size == p.m;
  if (pattern)
    for (const auto& [z, d] : dist)
      if (classify_vertex(part.x, z) != d) {
        pattern = false;
        break;
      }
  part.kron_ordered = pattern;

  if (pattern) {
    const int nm = p.n - p.m;
    for (int c = 0; c <= diameter; ++c) {
      const int a_size = p.m - c / 2;
      const int b_size = (c + 1) / 2;
      auto& cl = part.classes[static_cast<std::size_t>(c)];
      // x occupies bit positions 0..m-1, so the complement relabels by a
      // plain shift; alpha is the major key, beta the minor.
      for (SubsetCode alpha : enumerate_subsets(p.m, a_size))
        for (SubsetCode beta : enumerate_subsets(nm, b_size))
          cl.push_back(alpha | (beta << p.m));
      part.class_tags.push_back(subset_space_tag(p.m, a_size) + "*" +
                                subset_space_tag(nm, b_size));
    }
    // The construction must reproduce the BFS classes exactly.
    for (int c = 0; c <= diameter; ++c)
      for (SubsetCode z : part.classes[static_cast<std::size_t>(c)])
        if (dist.at(z) != c)
          throw std::logic_error("build_partition: pair ordering broke");
  } else {
    for (const auto& [z, d] : dist)
      part.classes[static_cast<std::size_t>(d)].push_back(z);
    for (int c = 0; c <= diameter; ++c) {
      auto& cl = part.classes[static_cast<std::size_t>(c)];
      std::sort(cl.begin(), cl.end(), [](SubsetCode a, SubsetCode b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
      });
      part.class_tags.push_back("Gamma" + std::to_string(c));
    }
  }

  Index offset = 0;
  for (int c = 0; c <= diameter; ++c) {
    part.class_offsets.push_back(offset);
    for (SubsetCode z : part.classes[static_cast<std::size_t>(c)])
      part.index_of.emplace(z, offset++);
  }
  return part;
}

ExactMatrix build_graph(const DistancePartition& part, bool exploratory) {
  const GeometryParams& p = part.params;
  if (!p.meets_distance_hypothesis() && !exploratory)
    throw std::invalid_argument(
        "build_graph: n < 2m+1 is outside the distance law; pass exploratory "
        "to build anyway");

  std::vector<MatrixEntry> entries;
  for (const auto& cl : part.classes) {
    for (SubsetCode y : cl) {
      if (popcount(y) != p.m) continue;
      const Index r = part.index_of.at(y);
      for (int e = 0; e < p.n; ++e) {
        if (y >> e & 1) continue;
        const Index c = part.index_of.at(y | (SubsetCode{1} << e));
        entries.push_back({r, c, Rational(1)});
        entries.push_back({c, r, Rational(1)});
      }
    }
  }
  const Index size = part.total();
  return ExactMatrix::from_entries(size, size, part.ambient_tag(),
                                   part.ambient_tag(), std::move(entries));
}

std::vector<ExactMatrix> build_dual_idempotents(const DistancePartition& part) {
  std::vector<ExactMatrix> out;
  const Index size = part.total();
  for (int c = 0; c <= part.diameter; ++c) {
    std::vector<MatrixEntry> entries;
    const Index off = part.class_offsets[static_cast<std::size_t>(c)];
    for (Index k = 0; k < part.class_size(c); ++k)
      entries.push_back({off + k, off + k, Rational(1)});
    out.push_back(ExactMatrix::from_entries(
        size, size, part.ambient_tag(), part.ambient_tag(), std::move(entries)));
  }
  return out;
}

std::vector<int> bfs_distances(const ExactMatrix& adjacency, Index source) {
  if (adjacency.rows() != adjacency.cols())
    throw std::invalid_argument("bfs_distances: matrix must be square");
  std::vector<std::vector<Index>> nbrs(
      static_cast<std::size_t>(adjacency.rows()));
  for (const auto& e : adjacency.entries())
    if (e.row != e.col)
      nbrs[static_cast<std::size_t>(e.row)].push_back(e.col);

  std::vector<int> dist(static_cast<std::size_t>(adjacency.rows()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::deque<Index> queue{source};
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (Index w : nbrs[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] =
            dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

namespace {

// Predicted block (i, i+1) of the adjacency matrix in pair order.
ExactMatrix expected_upper_block(const GeometryParams& p, int i) {
  const int nm = p.n - p.m;
  if (i % 2 == 0) {
    const int t = i / 2;
    ExactMatrix eye = ExactMatrix::identity(binomial_index(p.m, p.m - t),
                                            subset_space_tag(p.m, p.m - t));
    return kron(eye, build_W(nm, t, t + 1));
  }
  const int t = (i - 1) / 2;
  ExactMatrix eye = ExactMatrix::identity(binomial_index(nm, t + 1),
                                          subset_space_tag(nm, t + 1));
  return kron(transpose(build_W(p.m, p.m - t - 1, p.m - t)), eye);
}

}  // namespace

std::vector<BlockCheck> verify_block_structure(const DistancePartition& part,
                                               const ExactMatrix& A) {
  std::vector<BlockCheck> out;
  if (!part.kron_ordered) {
    out.push_back({0, 0, false,
                   "partition is not in pair order; block shapes are only "
                   "claimed for m-subset bases within the distance law"});
    return out;
  }
  for (int i = 0; i <= part.diameter; ++i) {
    for (int j = 0; j <= part.diameter; ++j) {
      ExactMatrix block = extract_block(
          A, part.class_offsets[static_cast<std::size_t>(i)],
          part.class_offsets[static_cast<std::size_t>(j)], part.class_size(i),
          part.class_size(j), part.class_tags[static_cast<std::size_t>(i)],
          part.class_tags[static_cast<std::size_t>(j)]);
      ExactMatrix expected;
      if (j == i + 1)
        expected = expected_upper_block(part.params, i);
      else if (i == j + 1)
        expected = transpose(expected_upper_block(part.params, j));
      else
        expected = ExactMatrix::zero(
            block.rows(), block.cols(),
            part.class_tags[static_cast<std::size_t>(i)],
            part.class_tags[static_cast<std::size_t>(j)]);

      BlockCheck check{i, j, false, ""};
      if (block.rows() != expected.rows() || block.cols() != expected.cols() ||
          block.row_tag() != expected.row_tag() ||
          block.col_tag() != expected.col_tag()) {
        check.detail = "predicted block shape/tags do not match the class";
      } else {
        CellWitness w;
        if (!first_difference(block, expected, &w)) {
          check.pass = true;
        } else {
          check.detail = "cell (" + std::to_string(w.row) + "," +
                         std::to_string(w.col) + "): adjacency " +
                         rational_to_string(w.lhs) + ", predicted " +
                         rational_to_string(w.rhs);
        }
      }
      out.push_back(std::move(check));
    }
  }
  return out;
}

DistanceCheck verify_distance_partition(const DistancePartition& part,
                                        const ExactMatrix& A) {
  if (part.params.base_size != part.params.m)
    throw std::invalid_argument(
        "verify_distance_partition: the distance law is stated for m-subset "
        "bases");
  DistanceCheck check;
  const auto dist = bfs_distances(A, part.index_of.at(part.x));
  check.observed_diameter =
      *std::max_element(dist.begin(), dist.end());

  for (int c = 0; c <= part.diameter; ++c) {
    for (SubsetCode z : part.classes[static_cast<std::size_t>(c)]) {
      const Index g = part.index_of.at(z);
      const int law = classify_vertex(part.x, z);
      const int bfs = dist[static_cast<std::size_t>(g)];
      if (law != bfs || c != bfs) {
        check.pass = false;
        char buf[32];
        std::snprintf(buf, sizeof buf, "0x%llx",
                      static_cast<unsigned long long>(z));
        check.detail = std::string("vertex ") + buf + ": class " +
                       std::to_string(c) + ", law " + std::to_string(law) +
                       ", BFS " + std::to_string(bfs);
        return check;
      }
    }
  }
  if (check.observed_diameter != 2 * part.params.m + 1) {
    check.pass = false;
    check.detail = "diameter " + std::to_string(check.observed_diameter) +
                   ", expected " + std::to_string(2 * part.params.m + 1);
    return check;
  }
  check.pass = true;
  return check;
}

ExactMatrix build_johnson_graph(int n, int m) {
  if (m < 0 || n < m)
    throw std::invalid_argument("build_johnson_graph: need 0 <= m <= n");
  return build_H(n, m, m, m - 1);
}

std::vector<ExactMatrix> johnson_dual_idempotents(int n, int m, SubsetCode x) {
  if (popcount(x) != m)
    throw std::invalid_argument("johnson_dual_idempotents: |x| must be m");
  const auto vertices = enumerate_subsets(n, m);
  const int depth = std::min(m, n - m);
  std::vector<std::vector<MatrixEntry>> entry_lists(
      static_cast<std::size_t>(depth) + 1);
  for (Index k = 0; k < static_cast<Index>(vertices.size()); ++k) {
    const int d = m - intersect_size(x, vertices[static_cast<std::size_t>(k)]);
    entry_lists.at(static_cast<std::size_t>(d)).push_back({k, k, Rational(1)});
  }
  std::vector<ExactMatrix> out;
  const Index size = static_cast<Index>(vertices.size());
  for (auto& entries : entry_lists)
    out.push_back(ExactMatrix::from_entries(size, size, subset_space_tag(n, m),
                                            subset_space_tag(n, m),
                                            std::move(entries)));
  return out;
}

}  // namespace twlab
