#include "gsp/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) {
    return std::isspace(c);
  });
}

double parse_real(std::string_view token, int line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("expected a real number, got '" + std::string(token) + "'",
                      line_no);
  }
  return value;
}

long long parse_int(std::string_view token, int line_no) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("expected an integer, got '" + std::string(token) + "'",
                      line_no);
  }
  return value;
}

// Lines split on '\n', tolerating a trailing '\r' from CRLF input.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_no_;
    return true;
  }

  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_no_ = 0;
};

MatrixMarketHeader parse_banner(std::string_view line) {
  const auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != "%%MatrixMarket") {
    throw FormatError("missing %%MatrixMarket banner", 1);
  }
  if (tokens.size() != 5) {
    throw FormatError("banner needs 5 tokens "
                      "(%%MatrixMarket object format field symmetry)", 1);
  }
  if (lower(tokens[1]) != "matrix") {
    throw FormatError("unsupported object '" + std::string(tokens[1]) + "'", 1);
  }
  MatrixMarketHeader header;
  const std::string format = lower(tokens[2]);
  if (format == "coordinate") {
    header.format = MmFormat::Coordinate;
  } else if (format == "array") {
    header.format = MmFormat::Array;
  } else {
    throw FormatError("unsupported format '" + std::string(tokens[2]) + "'", 1);
  }
  const std::string field = lower(tokens[3]);
  if (field == "real") {
    header.field = MmField::Real;
  } else if (field == "integer") {
    header.field = MmField::Integer;
  } else if (field == "pattern") {
    header.field = MmField::Pattern;
  } else if (field == "complex") {
    throw FormatError("complex field not supported", 1);
  } else {
    throw FormatError("unsupported field '" + std::string(tokens[3]) + "'", 1);
  }
  const std::string symmetry = lower(tokens[4]);
  if (symmetry == "general") {
    header.symmetry = MmSymmetry::General;
  } else if (symmetry == "symmetric") {
    header.symmetry = MmSymmetry::Symmetric;
  } else if (symmetry == "skew-symmetric") {
    header.symmetry = MmSymmetry::SkewSymmetric;
  } else {
    throw FormatError("unsupported symmetry '" + std::string(tokens[4]) + "'", 1);
  }
  if (header.field == MmField::Pattern &&
      header.symmetry == MmSymmetry::SkewSymmetric) {
    throw FormatError("pattern field cannot be skew-symmetric", 1);
  }
  if (header.format == MmFormat::Array) {
    if (header.field == MmField::Pattern) {
      throw FormatError("array format cannot carry a pattern field", 1);
    }
    if (header.symmetry != MmSymmetry::General) {
      throw FormatError("packed symmetric array storage not supported", 1);
    }
  }
  return header;
}

}  // namespace

MatrixMarketData parse_matrix_market(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) {
    throw FormatError("empty document", 1);
  }

  MatrixMarketData data;
  data.header = parse_banner(line);

  // leading comment block, captured verbatim
  bool have_size_line = false;
  std::vector<std::string_view> size_tokens;
  while (reader.next(line)) {
    if (!line.empty() && line[0] == '%') {
      data.comments.append(line);
      data.comments.push_back('\n');
      continue;
    }
    if (is_blank(line)) continue;
    size_tokens = split_ws(line);
    have_size_line = true;
    break;
  }
  if (!have_size_line) {
    throw FormatError("missing size line", reader.line_no() + 1);
  }

  auto& header = data.header;
  const int size_line_no = reader.line_no();
  if (header.format == MmFormat::Coordinate) {
    if (size_tokens.size() != 3) {
      throw FormatError("coordinate size line needs 'rows cols entries'",
                        size_line_no);
    }
  } else if (size_tokens.size() != 2) {
    throw FormatError("array size line needs 'rows cols'", size_line_no);
  }
  header.rows = parse_int(size_tokens[0], size_line_no);
  header.cols = parse_int(size_tokens[1], size_line_no);
  if (header.rows < 0 || header.cols < 0) {
    throw FormatError("negative dimensions", size_line_no);
  }
  header.entries = header.format == MmFormat::Coordinate
                       ? parse_int(size_tokens[2], size_line_no)
                       : header.rows * header.cols;
  if (header.entries < 0) {
    throw FormatError("negative entry count", size_line_no);
  }
  if (header.symmetry != MmSymmetry::General && header.rows != header.cols) {
    throw FormatError("symmetric storage requires a square matrix",
                      size_line_no);
  }

  // (col, row) keyed so the triplet order is column-major deterministic
  std::map<std::pair<Eigen::Index, Eigen::Index>, double> cells;
  bool seen_strict_lower = false;
  bool seen_strict_upper = false;
  Eigen::Index parsed = 0;

  // Duplicates are summed per the coordinate-format convention; only the
  // file's own entries count toward the duplicate report, not the mirrors
  // added by symmetric expansion.
  auto insert_cell = [&](Eigen::Index row, Eigen::Index col, double value,
                         bool count_duplicate) {
    auto [it, fresh] = cells.try_emplace({col, row}, value);
    if (!fresh) {
      it->second += value;
      if (count_duplicate) ++data.duplicate_entries;
    }
  };

  while (reader.next(line)) {
    if (is_blank(line)) continue;
    if (!line.empty() && line[0] == '%') continue;
    const int line_no = reader.line_no();
    const auto tokens = split_ws(line);
    if (parsed >= header.entries) {
      throw FormatError("more entries than the size line declares (" +
                        std::to_string(header.entries) + ")", line_no);
    }

    if (header.format == MmFormat::Array) {
      if (tokens.size() != 1) {
        throw FormatError("array entries carry exactly one value", line_no);
      }
      const double value = header.field == MmField::Integer
                               ? static_cast<double>(parse_int(tokens[0], line_no))
                               : parse_real(tokens[0], line_no);
      // column-major fill order
      const Eigen::Index col = parsed / header.rows;
      const Eigen::Index row = parsed % header.rows;
      insert_cell(row, col, value, false);
      ++parsed;
      continue;
    }

    const size_t expected_tokens = header.field == MmField::Pattern ? 2 : 3;
    if (tokens.size() != expected_tokens) {
      throw FormatError("expected " + std::to_string(expected_tokens) +
                        " tokens per entry, got " + std::to_string(tokens.size()),
                        line_no);
    }
    const long long file_row = parse_int(tokens[0], line_no);
    const long long file_col = parse_int(tokens[1], line_no);
    if (file_row < 1 || file_row > header.rows || file_col < 1 ||
        file_col > header.cols) {
      throw FormatError("entry (" + std::to_string(file_row) + ", " +
                        std::to_string(file_col) + ") outside " +
                        std::to_string(header.rows) + " x " +
                        std::to_string(header.cols), line_no);
    }
    const Eigen::Index row = file_row - 1;
    const Eigen::Index col = file_col - 1;
    double value = 1.0;
    if (header.field == MmField::Real) {
      value = parse_real(tokens[2], line_no);
    } else if (header.field == MmField::Integer) {
      value = static_cast<double>(parse_int(tokens[2], line_no));
    }

    if (header.symmetry != MmSymmetry::General) {
      if (row > col) seen_strict_lower = true;
      if (row < col) seen_strict_upper = true;
      if (seen_strict_lower && seen_strict_upper) {
        throw FormatError("symmetric storage mixes both triangles", line_no);
      }
      if (header.symmetry == MmSymmetry::SkewSymmetric && row == col) {
        throw FormatError("skew-symmetric storage cannot hold a diagonal entry",
                          line_no);
      }
    }

    insert_cell(row, col, value, true);
    if (header.symmetry != MmSymmetry::General && row != col) {
      const double mirrored =
          header.symmetry == MmSymmetry::SkewSymmetric ? -value : value;
      insert_cell(col, row, mirrored, false);
    }
    ++parsed;
  }

  if (parsed < header.entries) {
    throw FormatError("size line declares " + std::to_string(header.entries) +
                      " entries, found " + std::to_string(parsed),
                      reader.line_no() + 1);
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(cells.size());
  for (const auto& [key, value] : cells) {
    triplets.emplace_back(key.second, key.first, value);
  }
  data.matrix.resize(header.rows, header.cols);
  data.matrix.setFromTriplets(triplets.begin(), triplets.end());
  data.matrix.makeCompressed();
  return data;
}

MatrixMarketData read_matrix_market_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_market(buffer.str());
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string write_matrix_market(const SparseMatrixd& m, MmSymmetry symmetry,
                                MmField field, const std::string& comments) {
  const char* field_name = field == MmField::Real      ? "real"
                           : field == MmField::Integer ? "integer"
                                                       : "pattern";
  const char* symmetry_name = symmetry == MmSymmetry::General ? "general"
                              : symmetry == MmSymmetry::Symmetric
                                  ? "symmetric"
                                  : "skew-symmetric";
  const bool lower_only = symmetry != MmSymmetry::General;

  std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> entries;
  entries.reserve(m.nonZeros());
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrixd::InnerIterator it(m, k); it; ++it) {
      if (lower_only && it.row() < it.col()) continue;
      entries.emplace_back(it.col(), it.row(), it.value());
    }
  }
  std::sort(entries.begin(), entries.end());

  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate " << field_name << ' '
      << symmetry_name << '\n';
  if (!comments.empty()) {
    out << comments;
    if (comments.back() != '\n') out << '\n';
  }
  out << m.rows() << ' ' << m.cols() << ' ' << entries.size() << '\n';
  for (const auto& [col, row, value] : entries) {
    out << (row + 1) << ' ' << (col + 1);
    if (field == MmField::Real) {
      out << ' ' << format_double(value);
    } else if (field == MmField::Integer) {
      out << ' ' << static_cast<long long>(value);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gsp
