#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gsp/denoise.hpp"
#include "gsp/errors.hpp"
#include "gsp/frames.hpp"
#include "gsp/graph.hpp"
#include "gsp/sgwt.hpp"
#include "gsp/spectral.hpp"
#include "gsp/ssmc.hpp"
#include "gsp/viz.hpp"

namespace fs = std::filesystem;

namespace gsp::cli {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_text_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw Error("cannot write " + path.string());
  }
}

template <typename Fn>
int guarded(Fn&& fn, std::ostream& err) {
  try {
    fn();
    return kExitOk;
  } catch (const TransportError& e) {
    err << "transport error: " << e.what() << '\n';
    return kExitTransport;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  }
}

void print_dims(const GraphDims& dims, std::ostream& out) {
  out << "NumRows NumCols NonZeros\n"
      << dims.num_rows << ' ' << dims.num_cols << ' ' << dims.num_nonzeros
      << '\n';
}

std::string base_url_or_default(const std::string& base_url) {
  return base_url.empty() ? default_collection_base_url() : base_url;
}

Beta parse_beta(const std::string& text) {
  if (text == "inf" || text == "hard") {
    return Beta::hard();
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("beta must be a number >= 1 or 'inf', got '" + text +
                          "'");
  }
  return Beta(value);
}

std::string filter_curves_csv(const FilterCurves& curves) {
  std::ostringstream csv;
  csv << "x";
  for (Eigen::Index j = 0; j < curves.values.cols(); ++j) {
    csv << ",psi" << j;
  }
  csv << '\n';
  for (Eigen::Index s = 0; s < curves.x.size(); ++s) {
    csv << format_double(curves.x[s]);
    for (Eigen::Index j = 0; j < curves.values.cols(); ++j) {
      csv << ',' << format_double(curves.values(s, j));
    }
    csv << '\n';
  }
  return csv.str();
}

std::string coeffs_csv(const WaveletCoeffs& wc) {
  std::ostringstream csv;
  csv << "scale,vertex,value\n";
  for (int j = 0; j <= wc.max_scale; ++j) {
    for (Eigen::Index v = 0; v < wc.n; ++v) {
      csv << j << ',' << v << ',' << format_double(wc.values[j * wc.n + v])
          << '\n';
    }
  }
  return csv.str();
}

// MSE and shifted-SURE curves against the threshold, log-scaled x.
std::string risk_curves_svg(const Eigen::VectorXd& thresholds,
                            const std::vector<const Eigen::VectorXd*>& curves,
                            const std::vector<const char*>& colors) {
  const int width = 720, height = 560, margin = 48;
  double tmin = 0.0, tmax = 0.0;
  for (Eigen::Index i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] > 0.0) {
      tmin = tmin == 0.0 ? thresholds[i] : std::min(tmin, thresholds[i]);
      tmax = std::max(tmax, thresholds[i]);
    }
  }
  if (tmin == 0.0) {
    tmin = 1e-12;
    tmax = 1.0;
  }
  double ymin = 0.0, ymax = 0.0;
  for (const auto* c : curves) {
    ymin = std::min(ymin, c->minCoeff());
    ymax = std::max(ymax, c->maxCoeff());
  }
  if (ymax == ymin) ymax = ymin + 1.0;

  const double plot_w = width - 2.0 * margin;
  const double plot_h = height - 2.0 * margin;
  const double lmin = std::log10(tmin), lmax = std::log10(tmax);
  auto px = [&](double t) {
    return margin + (std::log10(std::max(t, tmin)) - lmin) /
                        (lmax - lmin > 0 ? lmax - lmin : 1.0) * plot_w;
  };
  auto py = [&](double y) {
    return height - margin - (y - ymin) / (ymax - ymin) * plot_h;
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
     << format_double(plot_w) << "\" height=\"" << format_double(plot_h)
     << "\" fill=\"none\" stroke=\"#404040\"/>\n";
  for (size_t c = 0; c < curves.size(); ++c) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[c]
       << "\" stroke-width=\"1.2\" points=\"";
    bool first = true;
    for (Eigen::Index i = 0; i < thresholds.size(); ++i) {
      if (thresholds[i] <= 0.0) continue;
      if (!first) os << ' ';
      first = false;
      os << format_double(px(thresholds[i])) << ','
         << format_double(py((*curves[c])[i]));
    }
    os << "\"/>\n";
  }
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
     << "\" font-size=\"12\" text-anchor=\"middle\">t (log scale)</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace

int run_download(const DownloadOptions& opt, std::ostream& out,
                 std::ostream& err) {
  return guarded(
      [&] {
        const GraphBundle bundle = download_graph(
            opt.group, opt.name, opt.cache_dir, base_url_or_default(opt.base_url));
        print_dims(bundle.graph.dims, out);
      },
      err);
}

int run_info(const InfoOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (opt.lines < 0) {
          throw ValidationError("--lines must be >= 0");
        }
        const GraphBundle bundle = load_bundle(opt.bundle_dir);
        print_dims(bundle.graph.dims, out);
        if (opt.lines == 0) return;
        std::istringstream info(bundle.graph.info);
        std::string line;
        for (int i = 0; i < opt.lines && std::getline(info, line); ++i) {
          out << line << '\n';
        }
      },
      err);
}

int run_filters(const FiltersOptions& opt, std::ostream& out,
                std::ostream& err) {
  return guarded(
      [&] {
        const FilterBank bank(opt.lmax, opt.b);
        const FilterCurves curves = filter_curves(bank, opt.samples);
        fs::create_directories(opt.out_dir);
        write_text_file(opt.out_dir / "filters.csv", filter_curves_csv(curves));
        write_text_file(opt.out_dir / "filters.svg",
                        plot_filter(bank, PlotSpec{}, opt.samples));
        out << "wrote " << (opt.out_dir / "filters.csv").string() << " and "
            << (opt.out_dir / "filters.svg").string() << " (" << bank.num_filters()
            << " filters, J = " << bank.max_scale() << ")\n";
      },
      err);
}

int run_denoise(const DenoiseOptions& opt, std::ostream& out,
                std::ostream& err) {
  return guarded(
      [&] {
        if (opt.policy != "uniform" && opt.policy != "dependent") {
          throw ValidationError("policy must be 'uniform' or 'dependent', got '" +
                                opt.policy + "'");
        }
        const Beta beta = parse_beta(opt.beta);

        GraphBundle bundle =
            !opt.bundle_dir.empty()
                ? load_bundle(opt.bundle_dir)
                : download_graph(opt.group, opt.name, opt.cache_dir,
                                 base_url_or_default(opt.base_url));
        const SparseGraph& g = bundle.graph;
        const Eigen::Index n = g.size();

        const EigenSystem es = eigensort(laplacian_mat(g));
        const TightFrame frame = tight_frame(es, opt.b);
        const Eigen::VectorXd diag_wwt = diag_frame_gram(frame);

        // the signal draw uses the seed itself, the noise draw seed+1
        const Eigen::VectorXd f = randsignal(opt.eta, opt.k, g, opt.seed);
        const Eigen::VectorXd noisy =
            add_noise(f, NoiseModel{opt.sigma}, opt.seed + 1);

        const WaveletCoeffs wc_noisy = analysis(noisy, frame);
        const WaveletCoeffs wc_clean = analysis(f, frame);

        Eigen::VectorXd grid;
        if (!opt.grid_file.empty()) {
          std::ifstream in(opt.grid_file);
          if (!in) {
            throw ValidationError("cannot open threshold grid " +
                                  opt.grid_file.string());
          }
          std::vector<double> values;
          std::string line;
          int line_no = 0;
          while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            double v = 0.0;
            auto [ptr, ec] =
                std::from_chars(line.data(), line.data() + line.size(), v);
            if (ec != std::errc() || ptr != line.data() + line.size()) {
              throw FormatError("bad threshold in " + opt.grid_file.string(),
                                line_no);
            }
            values.push_back(v);
          }
          grid = Eigen::Map<Eigen::VectorXd>(values.data(), values.size());
        } else {
          grid = donoho_johnstone_grid(wc_noisy);
        }

        const ThreshSweepResult sweep_u =
            sure_mse_thresh(wc_noisy, wc_clean, grid, diag_wwt, beta, opt.sigma,
                            ThreshPolicy::Uniform, opt.keepwc);
        const ThreshSweepResult sweep_d =
            sure_mse_thresh(wc_noisy, wc_clean, grid, diag_wwt, beta, opt.sigma,
                            ThreshPolicy::Dependent, opt.keepwc);

        auto estimate = [&](const ThreshSweepResult& sweep, Eigen::Index idx,
                            ThreshPolicy policy) {
          const Eigen::VectorXd coeffs =
              sweep.kept_coeffs
                  ? Eigen::VectorXd(sweep.kept_coeffs->col(idx))
                  : apply_threshold(wc_noisy, sweep.thresholds[idx], beta,
                                    policy, diag_wwt);
          return synthesis(coeffs, frame);
        };
        const Eigen::VectorXd hat_mse_u =
            estimate(sweep_u, sweep_u.min_mse_idx, ThreshPolicy::Uniform);
        const Eigen::VectorXd hat_sure_u =
            estimate(sweep_u, sweep_u.min_sure_idx, ThreshPolicy::Uniform);
        const Eigen::VectorXd hat_mse_d =
            estimate(sweep_d, sweep_d.min_mse_idx, ThreshPolicy::Dependent);
        const Eigen::VectorXd hat_sure_d =
            estimate(sweep_d, sweep_d.min_sure_idx, ThreshPolicy::Dependent);

        const double snr_input = snr(f, noisy);
        const double snr_mse_u = snr(f, hat_mse_u);
        const double snr_sure_u = snr(f, hat_sure_u);
        const double snr_mse_d = snr(f, hat_mse_d);
        const double snr_sure_d = snr(f, hat_sure_d);

        fs::create_directories(opt.out_dir);

        const double nsigma2 = static_cast<double>(n) * opt.sigma * opt.sigma;
        std::ostringstream risks;
        risks << "threshold,mse_uniform,sure_uniform_shifted,"
                 "mse_dependent,sure_dependent_shifted\n";
        for (Eigen::Index i = 0; i < grid.size(); ++i) {
          risks << format_double(grid[i]) << ',' << format_double(sweep_u.mse[i])
                << ',' << format_double(sweep_u.sure[i] - nsigma2) << ','
                << format_double(sweep_d.mse[i]) << ','
                << format_double(sweep_d.sure[i] - nsigma2) << '\n';
        }
        write_text_file(opt.out_dir / "risks.csv", risks.str());

        if (opt.coeffs) {
          write_text_file(opt.out_dir / "coeffs_clean.csv", coeffs_csv(wc_clean));
          write_text_file(opt.out_dir / "coeffs_noisy.csv", coeffs_csv(wc_noisy));
        }

        auto round2 = [](double v) { return std::round(v * 100.0) / 100.0; };
        nlohmann::json report{
            {"schema_version", 1},
            {"graph",
             {{"group", bundle.source.group},
              {"name", bundle.source.name},
              {"n", n},
              {"num_nonzeros", g.dims.num_nonzeros}}},
            {"params",
             {{"eta", opt.eta},
              {"k", opt.k},
              {"sigma", opt.sigma},
              {"beta", opt.beta},
              {"b", opt.b},
              {"policy", opt.policy},
              {"seed", opt.seed}}},
            {"max_scale", frame.max_scale},
            {"snr_db",
             {{"input", snr_input},
              {"mse_uniform", snr_mse_u},
              {"sure_uniform", snr_sure_u},
              {"mse_dependent", snr_mse_d},
              {"sure_dependent", snr_sure_d}}},
            {"selected_thresholds",
             {{"mse_uniform", sweep_u.thresholds[sweep_u.min_mse_idx]},
              {"sure_uniform", sweep_u.thresholds[sweep_u.min_sure_idx]},
              {"mse_dependent", sweep_d.thresholds[sweep_d.min_mse_idx]},
              {"sure_dependent", sweep_d.thresholds[sweep_d.min_sure_idx]}}},
        };
        write_text_file(opt.out_dir / "report.json", report.dump(2) + "\n");

        char table[256];
        std::snprintf(table, sizeof table,
                      "%9s %8s %8s %8s %8s\n%9.2f %8.2f %8.2f %8.2f %8.2f\n",
                      "Input_SNR", "MSE_u", "SURE_u", "MSE_d", "SURE_d",
                      round2(snr_input), round2(snr_mse_u), round2(snr_sure_u),
                      round2(snr_mse_d), round2(snr_sure_d));
        out << table;

        if (opt.plots) {
          PlotSpec spec;
          if (g.coords) {
            write_text_file(opt.out_dir / "graph.svg", plot_graph(g, spec));
            write_text_file(opt.out_dir / "signal_clean.svg",
                            plot_signal(g, f, spec));
            write_text_file(opt.out_dir / "signal_noisy.svg",
                            plot_signal(g, noisy, spec));
            const Eigen::VectorXd& selected =
                opt.policy == "uniform" ? hat_sure_u : hat_sure_d;
            write_text_file(opt.out_dir / "signal_denoised.svg",
                            plot_signal(g, selected, spec));
          }
          FilterBank bank(es.lmax, opt.b);
          write_text_file(opt.out_dir / "filters.svg",
                          plot_filter(bank, spec, 400));
          const Eigen::VectorXd sure_u_shift = sweep_u.sure.array() - nsigma2;
          const Eigen::VectorXd sure_d_shift = sweep_d.sure.array() - nsigma2;
          write_text_file(
              opt.out_dir / "risks.svg",
              risk_curves_svg(grid,
                              {&sweep_u.mse, &sure_u_shift, &sweep_d.mse,
                               &sure_d_shift},
                              {"#303030", "#d62728", "#8c8c8c", "#ff9896"}));
        }
      },
      err);
}

}  // namespace gsp::cli
