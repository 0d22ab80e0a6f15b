#include "catbreed/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "catbreed/loss.hpp"
#include "catbreed/metrics.hpp"

namespace catbreed {

namespace {

// Chunked parallel map; every index writes its own output slot, so the result
// ordering is independent of scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(hw, std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

double Range::at(int i) const {
  if (steps <= 1) return min;
  return min + (max - min) * static_cast<double>(i) / (steps - 1);
}

std::vector<BreedRow> breed_sweep(const Range& alpha, const Range& eta,
                                  const SweepOptions& opts) {
  std::vector<BreedRow> rows(static_cast<std::size_t>(alpha.steps) *
                             eta.steps);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int ia = static_cast<int>(idx) / eta.steps;
    const int ie = static_cast<int>(idx) % eta.steps;
    const double a = alpha.at(ia);
    const double e = eta.at(ie);
    BreedResult result = breed(a, e, {.matched = opts.matched});
    BestCat best = best_cat_fidelity(result.effective_state, opts.target_parity);
    rows[idx] = {a, e, best.fidelity, best.magnitude,
                 result.success_probability};
  });
  return rows;
}

std::vector<LossRow> loss_sweep(const Range& alpha, const Range& eta) {
  std::vector<LossRow> rows(static_cast<std::size_t>(alpha.steps) * eta.steps);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int ia = static_cast<int>(idx) / eta.steps;
    const int ie = static_cast<int>(idx) % eta.steps;
    const double a = alpha.at(ia);
    const double e = eta.at(ie);
    rows[idx] = {a, e, loss_fidelity_paper(a, e),
                 loss_fidelity_exact({a, Parity::Even}, e),
                 loss_fidelity_exact({a, Parity::Odd}, e)};
  });
  return rows;
}

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_breed_csv(std::ostream& os, const std::string& flag_echo,
                     const std::vector<BreedRow>& rows,
                     const std::vector<std::string>& footers) {
  os << "# " << flag_echo << "\n";
  os << "alpha,eta,fidelity,best_magnitude,success_probability\n";
  for (const auto& r : rows) {
    os << format_g9(r.alpha) << ',' << format_g9(r.eta) << ','
       << format_g9(r.fidelity) << ',' << format_g9(r.best_magnitude) << ','
       << format_g9(r.success_probability) << "\n";
  }
  for (const auto& f : footers) os << "# " << f << "\n";
}

void write_loss_csv(std::ostream& os, const std::string& flag_echo,
                    const std::vector<LossRow>& rows,
                    const std::vector<std::string>& footers) {
  os << "# " << flag_echo << "\n";
  os << "alpha,eta,F_paper,F_exact_even,F_exact_odd\n";
  for (const auto& r : rows) {
    os << format_g9(r.alpha) << ',' << format_g9(r.eta) << ','
       << format_g9(r.f_paper) << ',' << format_g9(r.f_exact_even) << ','
       << format_g9(r.f_exact_odd) << "\n";
  }
  for (const auto& f : footers) os << "# " << f << "\n";
}

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 20;
constexpr int kMarginBottom = 50;

struct Scale {
  double lo, hi;
  double pixel_lo, pixel_hi;
  double to_pixel(double v) const {
    const double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    return pixel_lo + t * (pixel_hi - pixel_lo);
  }
};

void svg_header(std::ostream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_axes(std::ostream& os, const Scale& sx, const Scale& sy,
              const std::string& xlabel, const std::string& ylabel) {
  os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom
     << "\" x2=\"" << kWidth - kMarginRight << "\" y2=\""
     << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
     << kMarginLeft << "\" y2=\"" << kHeight - kMarginBottom
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\""
     << kHeight - 12 << "\" text-anchor=\"middle\" font-size=\"14\">" << xlabel
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << (kMarginTop + kHeight - kMarginBottom) / 2
     << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
     << (kMarginTop + kHeight - kMarginBottom) / 2 << ")\">" << ylabel
     << "</text>\n";
  os << "<text x=\"" << kMarginLeft << "\" y=\"" << kHeight - kMarginBottom + 18
     << "\" font-size=\"12\" text-anchor=\"middle\">" << format_g9(sx.lo)
     << "</text>\n";
  os << "<text x=\"" << kWidth - kMarginRight << "\" y=\""
     << kHeight - kMarginBottom + 18
     << "\" font-size=\"12\" text-anchor=\"middle\">" << format_g9(sx.hi)
     << "</text>\n";
  os << "<text x=\"" << kMarginLeft - 6 << "\" y=\""
     << kHeight - kMarginBottom + 4
     << "\" font-size=\"12\" text-anchor=\"end\">" << format_g9(sy.lo)
     << "</text>\n";
  os << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kMarginTop + 4
     << "\" font-size=\"12\" text-anchor=\"end\">" << format_g9(sy.hi)
     << "</text>\n";
}

}  // namespace

void write_svg_line(std::ostream& os, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::string& xlabel,
                    const std::string& ylabel) {
  const auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
  const Scale sx{*xmin_it, *xmax_it, static_cast<double>(kMarginLeft),
                 static_cast<double>(kWidth - kMarginRight)};
  const Scale sy{*ymin_it, *ymax_it, static_cast<double>(kHeight - kMarginBottom),
                 static_cast<double>(kMarginTop)};
  svg_header(os);
  svg_axes(os, sx, sy, xlabel, ylabel);
  os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << format_g9(sx.to_pixel(xs[i])) << ',' << format_g9(sy.to_pixel(ys[i]))
       << ' ';
  }
  os << "\"/>\n</svg>\n";
}

void write_svg_heatmap(std::ostream& os, const std::vector<double>& xs,
                       const std::vector<double>& ys,
                       const std::vector<double>& values,
                       const std::string& xlabel, const std::string& ylabel) {
  const auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
  const auto [vmin_it, vmax_it] =
      std::minmax_element(values.begin(), values.end());
  const double vmin = *vmin_it;
  const double vspan = std::max(*vmax_it - vmin, 1e-300);
  const Scale sx{*xmin_it, *xmax_it, static_cast<double>(kMarginLeft),
                 static_cast<double>(kWidth - kMarginRight)};
  const Scale sy{*ymin_it, *ymax_it, static_cast<double>(kHeight - kMarginBottom),
                 static_cast<double>(kMarginTop)};
  const double cw =
      (kWidth - kMarginLeft - kMarginRight) / std::max<double>(xs.size(), 1);
  const double ch =
      (kHeight - kMarginTop - kMarginBottom) / std::max<double>(ys.size(), 1);
  svg_header(os);
  svg_axes(os, sx, sy, xlabel, ylabel);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double t = (values[i * ys.size() + j] - vmin) / vspan;
      const int red = static_cast<int>(255 * t);
      const int blue = static_cast<int>(255 * (1.0 - t));
      os << "<rect x=\"" << format_g9(sx.to_pixel(xs[i]) - cw / 2) << "\" y=\""
         << format_g9(sy.to_pixel(ys[j]) - ch / 2) << "\" width=\""
         << format_g9(cw) << "\" height=\"" << format_g9(ch) << "\" fill=\"rgb("
         << red << ",0," << blue << ")\"/>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace catbreed
