#include "mandelmat/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mandelmat {

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Prefer the shortest representation that round-trips.
  for (int prec = 1; prec <= 16; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

void export_matrix_market(const SparseIntMatrix& m,
                          const std::filesystem::path& path) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << m.dim() << " " << m.dim() << " " << m.nnz() << "\n";
  for (const Entry& e : m.entries())
    os << e.row << " " << e.col << " " << e.value << "\n";
  atomic_write_text(path, os.str());
}

SparseIntMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("%%MatrixMarket matrix coordinate integer", 0) != 0)
    throw std::runtime_error("not an integer coordinate MatrixMarket file: " +
                             path.string());
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '%') break;
  std::istringstream sizes(line);
  Index rows = 0, cols = 0, nnz = 0;
  sizes >> rows >> cols >> nnz;
  if (rows != cols) throw std::runtime_error("only square matrices are expected");
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(nnz));
  for (Index k = 0; k < nnz; ++k) {
    Entry e;
    in >> e.row >> e.col >> e.value;
    if (!in) throw std::runtime_error("truncated MatrixMarket file");
    entries.push_back(e);
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row < b.row || (a.row == b.row && a.col < b.col);
  });
  return SparseIntMatrix(rows, std::move(entries));
}

void export_dot(const Digraph& g, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& [u, v] : g.edges) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  atomic_write_text(path, os.str());
}

void write_json_sidecar(const std::filesystem::path& path, int n, Index dim,
                        Index nnz, const std::string& kind) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["dim"] = dim;
  j["nnz"] = nnz;
  j["kind"] = kind;
  atomic_write_text(path, j.dump(2) + "\n");
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "");
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
  atomic_write_text(path, os.str());
}

}  // namespace mandelmat
