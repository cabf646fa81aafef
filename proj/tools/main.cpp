#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gsp - spectral graph wavelet toolkit"};
  app.require_subcommand(1);

  gsp::cli::DownloadOptions download;
  auto* cmd_download = app.add_subcommand(
      "download", "Fetch a graph from the sparse matrix collection");
  cmd_download->add_option("group", download.group, "collection group")
      ->required();
  cmd_download->add_option("name", download.name, "matrix name")->required();
  cmd_download->add_option("--cache-dir", download.cache_dir, "bundle cache")
      ->default_val("./cache");
  cmd_download->add_option("--base-url", download.base_url,
                           "collection base URL (default: "
                           "GSP_SSMC_BASE_URL or https://sparse.tamu.edu)");

  gsp::cli::InfoOptions info;
  auto* cmd_info =
      app.add_subcommand("info", "Show dims and description of a cached bundle");
  cmd_info->add_option("bundle", info.bundle_dir, "bundle directory")
      ->required();
  cmd_info->add_option("--lines", info.lines,
                       "description lines to print (0 = dims only)");

  gsp::cli::FiltersOptions filters;
  auto* cmd_filters = app.add_subcommand(
      "filters", "Write the filter-bank curves as CSV and SVG");
  cmd_filters->add_option("--lmax", filters.lmax, "spectrum upper end")
      ->required();
  cmd_filters->add_option("--b", filters.b, "scale parameter (> 1)");
  cmd_filters->add_option("--samples", filters.samples, "sample count");
  cmd_filters->add_option("--out", filters.out_dir, "output directory")
      ->required();

  gsp::cli::DenoiseOptions denoise;
  auto* cmd_denoise = app.add_subcommand(
      "denoise", "Run the full wavelet-threshold denoising experiment");
  cmd_denoise->add_option("--group", denoise.group, "collection group");
  cmd_denoise->add_option("--name", denoise.name, "matrix name");
  cmd_denoise->add_option("--bundle", denoise.bundle_dir,
                          "local bundle directory (instead of --group/--name)");
  cmd_denoise->add_option("--cache-dir", denoise.cache_dir, "bundle cache")
      ->default_val("./cache");
  cmd_denoise->add_option("--base-url", denoise.base_url, "collection base URL");
  cmd_denoise->add_option("--eta", denoise.eta, "signal support density");
  cmd_denoise->add_option("--k", denoise.k, "diffusion power");
  cmd_denoise->add_option("--sigma", denoise.sigma, "noise sd");
  cmd_denoise->add_option("--beta", denoise.beta,
                          "threshold exponent (>= 1, or 'inf')");
  cmd_denoise->add_option("--b", denoise.b, "scale parameter (> 1)");
  cmd_denoise->add_option("--policy", denoise.policy,
                          "estimator highlighted in the outputs "
                          "(uniform|dependent)");
  cmd_denoise->add_option("--seed", denoise.seed, "RNG seed")->required();
  cmd_denoise->add_option("--out", denoise.out_dir, "output directory")
      ->required();
  cmd_denoise->add_flag("--keepwc", denoise.keepwc,
                        "keep thresholded coefficients for every candidate");
  cmd_denoise->add_flag("--plots", denoise.plots, "emit SVG figures");
  cmd_denoise->add_flag("--coeffs", denoise.coeffs,
                        "dump clean/noisy wavelet coefficients as CSV");
  cmd_denoise->add_option("--grid-file", denoise.grid_file,
                          "threshold grid file, one value per line");

  CLI11_PARSE(app, argc, argv);

  if (cmd_download->parsed()) {
    return gsp::cli::run_download(download, std::cout, std::cerr);
  }
  if (cmd_info->parsed()) {
    return gsp::cli::run_info(info, std::cout, std::cerr);
  }
  if (cmd_filters->parsed()) {
    return gsp::cli::run_filters(filters, std::cout, std::cerr);
  }
  if (cmd_denoise->parsed()) {
    if (denoise.bundle_dir.empty() && (denoise.group.empty() || denoise.name.empty())) {
      std::cerr << "error: need --bundle or --group and --name\n";
      return gsp::cli::kExitValidation;
    }
    return gsp::cli::run_denoise(denoise, std::cout, std::cerr);
  }
  return gsp::cli::kExitOther;
}
