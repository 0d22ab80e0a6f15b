// catbreed: batch CLI for cat-breeding fidelity sweeps under mode-mismatch
// and photon loss. Emits deterministic CSV and optional minimal SVG plots.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "catbreed/errors.hpp"
#include "catbreed/loss.hpp"
#include "catbreed/metrics.hpp"
#include "catbreed/selftest.hpp"
#include "catbreed/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitSelftest = 4;

struct OutputTargets {
  std::string out_path;  // empty means stdout
  std::string svg_path;
};

int emit(const OutputTargets& targets, const std::string& csv,
         const std::string& svg) {
  if (targets.out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream os(targets.out_path);
    if (!os) {
      std::cerr << "error: cannot open " << targets.out_path << "\n";
      return kExitUsage;
    }
    os << csv;
  }
  if (!targets.svg_path.empty()) {
    std::ofstream os(targets.svg_path);
    if (!os) {
      std::cerr << "error: cannot open " << targets.svg_path << "\n";
      return kExitUsage;
    }
    os << svg;
  }
  return kExitOk;
}

std::string echo_breed_flags(const char* cmd, const catbreed::Range& alpha,
                             const catbreed::Range& eta,
                             const catbreed::SweepOptions& opts) {
  std::ostringstream ss;
  ss << "catbreed " << cmd << " --alpha-min " << alpha.min << " --alpha-max "
     << alpha.max << " --alpha-steps " << alpha.steps << " --eta-min "
     << eta.min << " --eta-max " << eta.max << " --eta-steps " << eta.steps
     << " --parity "
     << (opts.target_parity == catbreed::Parity::Odd ? "odd" : "even")
     << (opts.matched ? "" : " --unmatched");
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace catbreed;

  CLI::App app{"Cat-state breeding simulator: mode-mismatch and loss sweeps"};
  app.require_subcommand(1);

  Range alpha{0.5, 6.0, 23};
  Range eta_range{0.5, 1.0, 21};
  double eta_fixed = 0.99;
  double target_f = 0.9;
  std::string parity_name = "odd";
  bool unmatched = false;
  OutputTargets targets;

  auto add_common = [&](CLI::App* cmd, bool with_eta_range, bool with_eta_fixed,
                        double eta_default) {
    cmd->add_option("--alpha-min", alpha.min);
    cmd->add_option("--alpha-max", alpha.max);
    cmd->add_option("--alpha-steps", alpha.steps);
    if (with_eta_range) {
      cmd->add_option("--eta-min", eta_range.min);
      cmd->add_option("--eta-max", eta_range.max);
      cmd->add_option("--eta-steps", eta_range.steps);
    }
    if (with_eta_fixed) {
      eta_fixed = eta_default;
      cmd->add_option("--eta", eta_fixed);
    }
    cmd->add_option("--out", targets.out_path);
    cmd->add_option("--svg", targets.svg_path);
  };

  auto* breed_cmd = app.add_subcommand(
      "breed-sweep", "Fidelity / magnitude / success-probability grid");
  add_common(breed_cmd, true, false, 0.0);
  breed_cmd->add_option("--parity", parity_name)
      ->check(CLI::IsMember({"odd", "even"}));
  breed_cmd->add_flag("--unmatched", unmatched);

  auto* cross_cmd = app.add_subcommand(
      "cross-section", "Breeding fidelity vs alpha at fixed mode-overlap");
  add_common(cross_cmd, false, true, 0.99);
  cross_cmd->add_option("--target-f", target_f);
  cross_cmd->add_option("--parity", parity_name)
      ->check(CLI::IsMember({"odd", "even"}));
  cross_cmd->add_flag("--unmatched", unmatched);

  auto* loss_cmd =
      app.add_subcommand("loss-sweep", "Loss fidelity grid (approximate and exact)");
  add_common(loss_cmd, true, false, 0.0);

  auto* loss_cross_cmd = app.add_subcommand(
      "loss-cross-section", "Loss fidelity vs alpha at fixed loss rate");
  add_common(loss_cross_cmd, false, true, 0.05);
  loss_cross_cmd->add_option("--target-f", target_f);

  auto* selftest_cmd =
      app.add_subcommand("selftest", "Oracle-equivalence checks (desk scale)");
  (void)selftest_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  const SweepOptions opts{
      parity_name == "even" ? Parity::Even : Parity::Odd, !unmatched};

  try {
    if (breed_cmd->parsed()) {
      if (!(alpha.min > 0.0 && alpha.max <= 10.0 && alpha.min <= alpha.max &&
            alpha.steps >= 1 && eta_range.min >= 0.5 && eta_range.max <= 1.0 &&
            eta_range.min <= eta_range.max && eta_range.steps >= 1)) {
        std::cerr << "usage: alpha range must lie in (0,10], eta range in "
                     "[0.5,1]\n";
        return kExitUsage;
      }
      auto rows = breed_sweep(alpha, eta_range, opts);
      std::ostringstream csv;
      write_breed_csv(csv, echo_breed_flags("breed-sweep", alpha, eta_range, opts),
                      rows);
      std::ostringstream svg;
      if (!targets.svg_path.empty()) {
        std::vector<double> xs(alpha.steps), ys(eta_range.steps),
            vals(rows.size());
        for (int i = 0; i < alpha.steps; ++i) xs[i] = alpha.at(i);
        for (int j = 0; j < eta_range.steps; ++j) ys[j] = eta_range.at(j);
        for (std::size_t i = 0; i < rows.size(); ++i) vals[i] = rows[i].fidelity;
        write_svg_heatmap(svg, xs, ys, vals, "alpha", "eta");
      }
      return emit(targets, csv.str(), svg.str());
    }

    if (cross_cmd->parsed()) {
      if (!(alpha.min > 0.0 && alpha.max <= 10.0 && alpha.min <= alpha.max &&
            alpha.steps >= 1 && eta_fixed >= 0.5 && eta_fixed <= 1.0)) {
        std::cerr << "usage: alpha range must lie in (0,10], eta in [0.5,1]\n";
        return kExitUsage;
      }
      const Range eta_one{eta_fixed, eta_fixed, 1};
      auto rows = breed_sweep(alpha, eta_one, opts);
      std::vector<std::string> footers;
      try {
        const double threshold = threshold_alpha(eta_fixed, target_f);
        footers.push_back("threshold_alpha(eta=" + format_g9(eta_fixed) +
                          ", F=" + format_g9(target_f) +
                          ") = " + format_g9(threshold));
      } catch (const threshold_not_found& e) {
        footers.push_back(std::string("threshold_alpha: ") + e.what());
      }
      std::ostringstream csv;
      csv << "# catbreed cross-section --eta " << eta_fixed << "\n";
      csv << "alpha,fidelity\n";
      std::vector<double> xs, ys;
      for (const auto& r : rows) {
        csv << format_g9(r.alpha) << ',' << format_g9(r.fidelity) << "\n";
        xs.push_back(r.alpha);
        ys.push_back(r.fidelity);
      }
      for (const auto& f : footers) csv << "# " << f << "\n";
      std::ostringstream svg;
      if (!targets.svg_path.empty()) {
        write_svg_line(svg, xs, ys, "alpha", "fidelity");
      }
      return emit(targets, csv.str(), svg.str());
    }

    if (loss_cmd->parsed()) {
      if (!(alpha.min > 0.0 && alpha.min <= alpha.max && alpha.steps >= 1 &&
            eta_range.min >= 0.0 && eta_range.max <= 1.0 &&
            eta_range.min <= eta_range.max && eta_range.steps >= 1)) {
        std::cerr << "usage: alpha range must be positive, eta range in [0,1]\n";
        return kExitUsage;
      }
      auto rows = loss_sweep(alpha, eta_range);
      std::ostringstream csv;
      write_loss_csv(csv, echo_breed_flags("loss-sweep", alpha, eta_range, opts),
                     rows);
      std::ostringstream svg;
      if (!targets.svg_path.empty()) {
        std::vector<double> xs(alpha.steps), ys(eta_range.steps),
            vals(rows.size());
        for (int i = 0; i < alpha.steps; ++i) xs[i] = alpha.at(i);
        for (int j = 0; j < eta_range.steps; ++j) ys[j] = eta_range.at(j);
        for (std::size_t i = 0; i < rows.size(); ++i) vals[i] = rows[i].f_paper;
        write_svg_heatmap(svg, xs, ys, vals, "alpha", "eta");
      }
      return emit(targets, csv.str(), svg.str());
    }

    if (loss_cross_cmd->parsed()) {
      if (!(alpha.min > 0.0 && alpha.min <= alpha.max && alpha.steps >= 1 &&
            eta_fixed >= 0.0 && eta_fixed <= 1.0)) {
        std::cerr << "usage: alpha range must be positive, eta in [0,1]\n";
        return kExitUsage;
      }
      const Range eta_one{eta_fixed, eta_fixed, 1};
      auto rows = loss_sweep(alpha, eta_one);
      std::vector<std::string> footers;
      try {
        footers.push_back("max_alpha_for_fidelity(eta=" + format_g9(eta_fixed) +
                          ", F=" + format_g9(target_f) + ") = " +
                          format_g9(max_alpha_for_fidelity(eta_fixed, target_f)));
      } catch (const std::domain_error& e) {
        footers.push_back(std::string("max_alpha_for_fidelity: ") + e.what());
      }
      std::ostringstream csv;
      write_loss_csv(csv,
                     "catbreed loss-cross-section --eta " + format_g9(eta_fixed),
                     rows, footers);
      std::ostringstream svg;
      if (!targets.svg_path.empty()) {
        std::vector<double> xs, ys;
        for (const auto& r : rows) {
          xs.push_back(r.alpha);
          ys.push_back(r.f_paper);
        }
        write_svg_line(svg, xs, ys, "alpha", "fidelity");
      }
      return emit(targets, csv.str(), svg.str());
    }

    if (selftest_cmd->parsed()) {
      return run_selftest(std::cout) ? kExitOk : kExitSelftest;
    }
  } catch (const degenerate_input& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
