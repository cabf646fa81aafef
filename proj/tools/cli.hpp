#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace gsp::cli {

// exit codes shared by every subcommand
inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitTransport = 2;
inline constexpr int kExitFormat = 3;
inline constexpr int kExitValidation = 4;

struct DownloadOptions {
  std::string group;
  std::string name;
  std::filesystem::path cache_dir;
  std::string base_url;  // empty -> default_collection_base_url()
};

struct InfoOptions {
  std::filesystem::path bundle_dir;
  int lines = 14;
};

struct FiltersOptions {
  double lmax = 0.0;
  double b = 2.0;
  int samples = 200;
  std::filesystem::path out_dir;
};

struct DenoiseOptions {
  // graph source: either a collection entry or a local bundle directory
  std::string group;
  std::string name;
  std::filesystem::path bundle_dir;
  std::filesystem::path cache_dir;
  std::string base_url;

  double eta = 0.01;
  int k = 3;
  double sigma = 0.01;
  std::string beta = "2";  // finite exponent or "inf" for hard thresholding
  double b = 2.0;
  std::string policy = "dependent";  // estimator highlighted in the outputs
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  bool keepwc = false;
  bool plots = false;
  bool coeffs = false;  // dump clean/noisy coefficients as CSV
  std::filesystem::path grid_file;  // optional threshold grid, one value per line
};

int run_download(const DownloadOptions& opt, std::ostream& out, std::ostream& err);
int run_info(const InfoOptions& opt, std::ostream& out, std::ostream& err);
int run_filters(const FiltersOptions& opt, std::ostream& out, std::ostream& err);
int run_denoise(const DenoiseOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace gsp::cli
