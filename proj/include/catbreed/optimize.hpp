#pragma once

#include <cmath>
#include <functional>

namespace catbreed {

struct ScalarMax {
  double x;
  double value;
};

// Golden-section maximization of a unimodal function on [lo, hi] to the given
// interval tolerance in x.
template <class F>
ScalarMax golden_section_max(F&& f, double lo, double hi, double xtol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace catbreed
