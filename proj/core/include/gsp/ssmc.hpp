#pragma once

#include <filesystem>
#include <string>

#include "gsp/graph.hpp"

namespace gsp {

struct BundleSource {
  std::string group;
  std::string name;
  std::string url;
};

/// A downloaded (or locally loaded) graph with its provenance and the
/// on-disk bundle directory it came from.
struct GraphBundle {
  SparseGraph graph;
  BundleSource source;
  std::filesystem::path cached_at;
};

/// Base URL of the matrix collection. GSP_SSMC_BASE_URL overrides the
/// built-in default (https://sparse.tamu.edu).
std::string default_collection_base_url();

/// Fetches <base>/MM/<group>/<name>.tar.gz, extracts <name>.mtx (weights)
/// and <name>_coord.mtx (coordinates, when present), and caches the result
/// as a bundle directory under cache_dir/<group>/<name>. Repeated calls
/// load the cached bundle without touching the network. The raw extracted
/// archive stays under cache_dir/<group>/<name>.src even when the matrix
/// fails graph validation.
GraphBundle download_graph(const std::string& group, const std::string& name,
                           const std::filesystem::path& cache_dir,
                           const std::string& base_url = default_collection_base_url());

/// Bundle directory round trip. The format (matrix.mm, coords.csv,
/// info.txt, meta.json) is lossless: matrix entries and coordinates are
/// written with shortest round-trip precision, info byte-verbatim.
GraphBundle load_bundle(const std::filesystem::path& dir);
void save_bundle(const GraphBundle& bundle, const std::filesystem::path& dir);

}  // namespace gsp
