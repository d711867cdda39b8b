#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mandelmat/matgen.hpp"
#include "mandelmat/sparse.hpp"

namespace mandelmat {

/// Whole-file atomic text write: temp file in the target directory, then rename.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

/// Matrix Market coordinate format with the exact header
/// `%%MatrixMarket matrix coordinate integer general`, 1-based indices.
void export_matrix_market(const SparseIntMatrix& m, const std::filesystem::path& path);
SparseIntMatrix read_matrix_market(const std::filesystem::path& path);

/// DOT digraph, loops retained.
void export_dot(const Digraph& g, const std::filesystem::path& path);

/// JSON metadata sidecar {n, dim, nnz, kind}.
void write_json_sidecar(const std::filesystem::path& path, int n, Index dim,
                        Index nnz, const std::string& kind);

/// Minimal CSV writer: one header row, then the given rows. Numeric cells
/// are preformatted by the caller.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Fixed repeatable formatting used by every exporter and report
/// (shortest round-trippable form, C locale).
std::string format_double(double v);

}  // namespace mandelmat
