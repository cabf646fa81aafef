#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gsp {

/// Decompresses a gzip stream; throws FormatError on corrupt input.
std::string gunzip(std::string_view gz);

struct TarEntry {
  std::string name;
  std::string data;
};

/// Reads the regular files of a ustar/gnu tar stream. Directory entries
/// and extended headers are skipped.
std::vector<TarEntry> untar(std::string_view tar);

}  // namespace gsp
