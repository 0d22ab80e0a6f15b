#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "catbreed/breeding.hpp"

namespace catbreed {

struct Range {
  double min;
  double max;
  int steps;  // number of grid points, >= 1

  double at(int i) const;
};

struct BreedRow {
  double alpha;
  double eta;
  double fidelity;
  double best_magnitude;
  double success_probability;
};

struct LossRow {
  double alpha;
  double eta;
  double f_paper;
  double f_exact_even;
  double f_exact_odd;
};

struct SweepOptions {
  Parity target_parity = Parity::Odd;
  bool matched = true;
};

// Alpha-major deterministic ordering; grid points evaluate in parallel.
std::vector<BreedRow> breed_sweep(const Range& alpha, const Range& eta,
                                  const SweepOptions& opts = {});
std::vector<LossRow> loss_sweep(const Range& alpha, const Range& eta);

void write_breed_csv(std::ostream& os, const std::string& flag_echo,
                     const std::vector<BreedRow>& rows,
                     const std::vector<std::string>& footers = {});
void write_loss_csv(std::ostream& os, const std::string& flag_echo,
                    const std::vector<LossRow>& rows,
                    const std::vector<std::string>& footers = {});

// Minimal hand-emitted SVG plots, no external dependencies.
void write_svg_line(std::ostream& os, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::string& xlabel,
                    const std::string& ylabel);
void write_svg_heatmap(std::ostream& os, const std::vector<double>& xs,
                       const std::vector<double>& ys,
                       const std::vector<double>& values,  // x-major
                       const std::string& xlabel, const std::string& ylabel);

std::string format_g9(double v);

}  // namespace catbreed
