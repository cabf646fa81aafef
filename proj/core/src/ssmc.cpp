#include "gsp/ssmc.hpp"

#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "gsp/archive.hpp"
#include "gsp/errors.hpp"
#include "gsp/matrix_market.hpp"

namespace fs = std::filesystem;

namespace gsp {

namespace {

constexpr int kBundleFormatVersion = 1;

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view token, const std::string& what, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError("bad number in " + what, line);
  }
  return value;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw Error("cannot write " + path.string());
  }
}

// One writer per bundle key within this process; the final rename keeps
// concurrent processes from observing half-written bundles.
std::mutex& bundle_lock(const std::string& key) {
  static std::mutex registry_mutex;
  static std::map<std::string, std::unique_ptr<std::mutex>> locks;
  std::lock_guard<std::mutex> guard(registry_mutex);
  auto& slot = locks[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

bool safe_entry_name(const fs::path& rel) {
  if (rel.is_absolute()) return false;
  for (const auto& part : rel) {
    if (part == "..") return false;
  }
  return true;
}

std::string fetch_archive(const std::string& base_url, const std::string& path,
                          std::string& full_url) {
  std::string base = base_url;
  while (!base.empty() && base.back() == '/') base.pop_back();
  full_url = base + path;

  httplib::Client client(base);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(120, 0);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res) {
    throw TransportError("GET " + full_url + " failed: " +
                         httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError("GET " + full_url + " returned HTTP " +
                         std::to_string(res->status), res->status);
  }
  return res->body;
}

Eigen::MatrixX2d coords_from_matrix(const SparseMatrixd& m,
                                    const std::string& where) {
  if (m.cols() != 2) {
    throw FormatError(where + ": coordinate table needs 2 columns, got " +
                      std::to_string(m.cols()));
  }
  Eigen::MatrixX2d coords = Eigen::MatrixXd(m);
  return coords;
}

}  // namespace

std::string default_collection_base_url() {
  if (const char* env = std::getenv("GSP_SSMC_BASE_URL"); env && *env) {
    return env;
  }
  return "https://sparse.tamu.edu";
}

void save_bundle(const GraphBundle& bundle, const fs::path& dir) {
  validate_graph(bundle.graph);
  fs::create_directories(dir);

  write_file(dir / "matrix.mm",
             write_matrix_market(bundle.graph.weights, MmSymmetry::Symmetric,
                                 MmField::Real));
  if (bundle.graph.coords) {
    std::ostringstream csv;
    csv << "x,y\n";
    const auto& coords = *bundle.graph.coords;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
      csv << format_double(coords(i, 0)) << ',' << format_double(coords(i, 1))
          << '\n';
    }
    write_file(dir / "coords.csv", csv.str());
  }
  write_file(dir / "info.txt", bundle.graph.info);

  nlohmann::json meta{
      {"format_version", kBundleFormatVersion},
      {"dims",
       {{"num_rows", bundle.graph.dims.num_rows},
        {"num_cols", bundle.graph.dims.num_cols},
        {"num_nonzeros", bundle.graph.dims.num_nonzeros}}},
      {"source",
       {{"group", bundle.source.group},
        {"name", bundle.source.name},
        {"url", bundle.source.url}}},
      {"has_coords", bundle.graph.coords.has_value()},
  };
  write_file(dir / "meta.json", meta.dump(2) + "\n");
}

GraphBundle load_bundle(const fs::path& dir) {
  const fs::path meta_path = dir / "meta.json";
  if (!fs::exists(meta_path)) {
    throw ValidationError("no bundle at " + dir.string() +
                          " (missing meta.json)");
  }

  nlohmann::json meta = nlohmann::json::parse(read_file(meta_path), nullptr,
                                              /*allow_exceptions=*/false);
  if (meta.is_discarded()) {
    throw FormatError("corrupt meta.json in " + dir.string(), 1);
  }
  try {
    const int version = meta.at("format_version").get<int>();
    if (version != kBundleFormatVersion) {
      throw FormatError("unsupported bundle format version " +
                        std::to_string(version));
    }

    GraphDims dims{meta.at("dims").at("num_rows").get<Eigen::Index>(),
                   meta.at("dims").at("num_cols").get<Eigen::Index>(),
                   meta.at("dims").at("num_nonzeros").get<Eigen::Index>()};
    BundleSource source{meta.at("source").at("group").get<std::string>(),
                        meta.at("source").at("name").get<std::string>(),
                        meta.at("source").at("url").get<std::string>()};

    const MatrixMarketData mm = read_matrix_market_file(dir / "matrix.mm");

    std::optional<Eigen::MatrixX2d> coords;
    if (meta.at("has_coords").get<bool>()) {
      const std::string csv = read_file(dir / "coords.csv");
      std::istringstream lines(csv);
      std::string line;
      int line_no = 0;
      std::vector<std::pair<double, double>> rows;
      while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
          if (line != "x,y") {
            throw FormatError("coords.csv header must be 'x,y'", 1);
          }
          continue;
        }
        if (line.empty()) continue;
        const size_t comma = line.find(',');
        if (comma == std::string::npos) {
          throw FormatError("coords.csv row needs two columns", line_no);
        }
        rows.emplace_back(
            parse_double(std::string_view(line).substr(0, comma), "coords.csv",
                         line_no),
            parse_double(std::string_view(line).substr(comma + 1), "coords.csv",
                         line_no));
      }
      Eigen::MatrixX2d table(static_cast<Eigen::Index>(rows.size()), 2);
      for (size_t i = 0; i < rows.size(); ++i) {
        table(static_cast<Eigen::Index>(i), 0) = rows[i].first;
        table(static_cast<Eigen::Index>(i), 1) = rows[i].second;
      }
      coords = std::move(table);
    }

    const std::string info = read_file(dir / "info.txt");
    GraphBundle bundle{
        make_sparse_graph(mm.matrix, std::move(coords), dims, info),
        std::move(source), dir};
    return bundle;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("corrupt meta.json in " + dir.string() + ": " + e.what());
  }
}

GraphBundle download_graph(const std::string& group, const std::string& name,
                           const fs::path& cache_dir,
                           const std::string& base_url) {
  if (group.empty() || name.empty()) {
    throw ValidationError("group and name must be non-empty");
  }
  const fs::path bundle_dir = cache_dir / group / name;
  std::lock_guard<std::mutex> guard(bundle_lock(bundle_dir.string()));

  if (fs::exists(bundle_dir / "meta.json")) {
    return load_bundle(bundle_dir);
  }

  std::string url;
  const std::string body =
      fetch_archive(base_url, "/MM/" + group + "/" + name + ".tar.gz", url);
  const std::vector<TarEntry> entries = untar(gunzip(body));

  // raw extraction kept for inspection regardless of what happens next
  const fs::path raw_dir = cache_dir / group / (name + ".src");
  fs::create_directories(raw_dir);
  for (const auto& entry : entries) {
    const fs::path rel(entry.name);
    if (!safe_entry_name(rel)) continue;
    const fs::path target = raw_dir / rel;
    fs::create_directories(target.parent_path());
    write_file(target, entry.data);
  }

  const TarEntry* matrix_entry = nullptr;
  const TarEntry* coord_entry = nullptr;
  std::vector<const TarEntry*> coord_candidates;
  const std::string matrix_name = name + ".mtx";
  const std::string coord_name = name + "_coord.mtx";
  for (const auto& entry : entries) {
    const std::string base = fs::path(entry.name).filename().string();
    if (base == matrix_name) matrix_entry = &entry;
    if (base == coord_name) coord_entry = &entry;
    if (base.find("_coord") != std::string::npos) coord_candidates.push_back(&entry);
  }
  if (!matrix_entry) {
    throw FormatError("archive for " + group + "/" + name +
                      " carries no " + matrix_name);
  }
  if (!coord_entry) {
    if (coord_candidates.size() == 1) {
      coord_entry = coord_candidates.front();
    } else if (coord_candidates.size() > 1) {
      throw FormatError("archive for " + group + "/" + name +
                        " carries several coordinate files");
    }
  }

  const MatrixMarketData mm = parse_matrix_market(matrix_entry->data);
  std::optional<Eigen::MatrixX2d> coords;
  if (coord_entry) {
    coords = coords_from_matrix(parse_matrix_market(coord_entry->data).matrix,
                                coord_entry->name);
  }

  GraphDims dims{mm.header.rows, mm.header.cols, mm.header.entries};
  GraphBundle bundle{
      make_sparse_graph(mm.matrix, std::move(coords), dims, mm.comments),
      BundleSource{group, name, url}, bundle_dir};

  // write-once: build aside, then rename into place
  const fs::path staging = cache_dir / group /
                           (name + ".tmp-" + std::to_string(::getpid()));
  save_bundle(bundle, staging);
  std::error_code ec;
  fs::rename(staging, bundle_dir, ec);
  if (ec) {
    if (fs::exists(bundle_dir / "meta.json")) {
      fs::remove_all(staging);  // another writer won the race
    } else {
      throw Error("cannot finalize bundle at " + bundle_dir.string() + ": " +
                  ec.message());
    }
  }
  return load_bundle(bundle_dir);
}

}  // namespace gsp
