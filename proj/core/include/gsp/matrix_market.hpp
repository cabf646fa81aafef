#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gsp/graph.hpp"

namespace gsp {

enum class MmFormat { Coordinate, Array };
enum class MmField { Real, Integer, Pattern };
enum class MmSymmetry { General, Symmetric, SkewSymmetric };

struct MatrixMarketHeader {
  MmFormat format = MmFormat::Coordinate;
  MmField field = MmField::Real;
  MmSymmetry symmetry = MmSymmetry::General;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  /// Stored entries for coordinate files; rows*cols for array files.
  Eigen::Index entries = 0;
};

struct MatrixMarketData {
  MatrixMarketHeader header;
  /// Symmetric / skew-symmetric storage expanded to the full matrix;
  /// pattern entries carry value 1.0.
  SparseMatrixd matrix;
  /// Leading '%' comment block, verbatim, banner excluded.
  std::string comments;
  /// Count of coordinate entries that collided with an earlier (i, j)
  /// and were summed into it.
  int duplicate_entries = 0;

  bool duplicates_summed() const { return duplicate_entries > 0; }
};

/// Parses a Matrix Market document. Throws FormatError with the 1-based
/// offending line for banner mismatches, bad tokens, out-of-range indices
/// and entry counts that disagree with the size line.
MatrixMarketData parse_matrix_market(std::string_view text);

MatrixMarketData read_matrix_market_file(const std::filesystem::path& path);

/// Canonical writer: coordinate format, entries in column-major order,
/// values printed with shortest round-trip precision. Symmetric output
/// stores the lower triangle.
std::string write_matrix_market(const SparseMatrixd& m, MmSymmetry symmetry,
                                MmField field, const std::string& comments = {});

}  // namespace gsp
