#include "twlab/mmio.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace twlab {

std::string matrix_market_string(const ExactMatrix& m) {
  const bool integer = m.is_integer();
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate "
      << (integer ? "integer" : "rational") << " general\n";
  out << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
  for (const auto& e : m.entries()) {
    out << (e.row + 1) << " " << (e.col + 1) << " ";
    if (integer)
      out << e.value.get_num().get_str();
    else
      out << e.value.get_num().get_str() << "/"
          << e.value.get_den().get_str();
    out << "\n";
  }
  return out.str();
}

std::string edge_list_string(const DistancePartition& part,
                             const ExactMatrix& adjacency) {
  if (adjacency.rows() != part.total() || adjacency.cols() != part.total())
    throw std::invalid_argument("edge_list_string: adjacency does not match "
                                "the partition's index space");
  std::vector<SubsetCode> vertex(static_cast<std::size_t>(part.total()));
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    for (std::size_t k = 0; k < part.classes[c].size(); ++k)
      vertex[static_cast<std::size_t>(part.class_offsets[c]) + k] =
          part.classes[c][k];

  std::ostringstream out;
  char buf[48];
  for (const auto& e : adjacency.entries()) {
    if (e.row >= e.col) continue;  // each undirected edge once
    std::snprintf(buf, sizeof buf, "0x%llx 0x%llx",
                  static_cast<unsigned long long>(
                      vertex[static_cast<std::size_t>(e.row)]),
                  static_cast<unsigned long long>(
                      vertex[static_cast<std::size_t>(e.col)]));
    out << buf << "\n";
  }
  return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) throw std::runtime_error("atomic_write: cannot open " + tmp);
  const std::size_t written = std::fwrite(content.data(), 1, content.size(), f);
  const bool flushed = std::fflush(f) == 0;
  const bool closed = std::fclose(f) == 0;
  if (written != content.size() || !flushed || !closed) {
    std::remove(tmp.c_str());
    throw std::runtime_error("atomic_write: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("atomic_write: cannot rename " + tmp + " to " +
                             path);
  }
}

}  // namespace twlab
