#include "catbreed/fock.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "catbreed/errors.hpp"

namespace catbreed::fock {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int single_occupied_slot(const std::array<cdouble, kNumModes>& amp,
                         int current) {
  for (int s = 0; s < kNumModes; ++s) {
    if (std::abs(amp[s]) > 0.0) {
      if (current >= 0 && current != s) {
        throw std::domain_error("fock conversion: state is not single-mode");
      }
      current = s;
    }
  }
  return current;
}

}  // namespace

int cutoff_for(double max_amplitude) {
  const double mu = max_amplitude * max_amplitude;
  return static_cast<int>(std::ceil(mu + 8.0 * std::sqrt(mu) + 12.0));
}

std::size_t FockVector::stride(int mode) const {
  return ipow(static_cast<std::size_t>(dim()), mode);
}

double FockVector::squared_norm() const {
  double s = 0.0;
  for (const cdouble& a : amp) s += std::norm(a);
  return s;
}

std::size_t FockOperator::side() const {
  return ipow(static_cast<std::size_t>(cutoff + 1), num_modes);
}

FockVector coherent_to_fock(cdouble a, int cutoff) {
  FockVector v;
  v.cutoff = cutoff;
  v.num_modes = 1;
  v.amp.resize(cutoff + 1);
  cdouble c = std::exp(-0.5 * std::norm(a));
  double mass = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    v.amp[n] = c;
    mass += std::norm(c);
    c *= a / std::sqrt(static_cast<double>(n + 1));
  }
  if (1.0 - mass >= 1e-10) {
    throw std::domain_error("coherent_to_fock: cutoff " +
                            std::to_string(cutoff) +
                            " too small for |a|=" + std::to_string(std::abs(a)) +
                            "; need at least " +
                            std::to_string(cutoff_for(std::abs(a))));
  }
  return v;
}

FockVector tensor(const FockVector& u, const FockVector& v) {
  if (u.cutoff != v.cutoff) {
    throw std::domain_error("fock tensor: mismatched cutoffs");
  }
  FockVector out;
  out.cutoff = u.cutoff;
  out.num_modes = u.num_modes + v.num_modes;
  out.amp.resize(u.amp.size() * v.amp.size());
  for (std::size_t j = 0; j < v.amp.size(); ++j) {
    for (std::size_t i = 0; i < u.amp.size(); ++i) {
      out.amp[i + u.amp.size() * j] = u.amp[i] * v.amp[j];
    }
  }
  return out;
}

void add_scaled(FockVector& dst, cdouble w, const FockVector& src) {
  if (dst.amp.size() != src.amp.size()) {
    throw std::domain_error("add_scaled: shape mismatch");
  }
  for (std::size_t i = 0; i < dst.amp.size(); ++i) {
    dst.amp[i] += w * src.amp[i];
  }
}

Mixer2 mixer_5050() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s, -s};
}

Mixer2 mixer_loss(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("mixer_loss: eta must be in [0,1]");
  }
  const double t = std::sqrt(1.0 - eta);
  const double r = std::sqrt(eta);
  return {t, r, r, -t};
}

// Block n columns are built by repeated application of the transformed
// creation operators Ad = m00 a+ + m10 b+ and Bd = m01 a+ + m11 b+ to the
// vacuum; each power is divided by sqrt(step), so columns are exactly the
// normalized images U|n1, n-n1>. Intermediate stripes have unit norm, which
// keeps the construction stable at large n.
std::vector<std::vector<double>> pair_mixer_blocks(const Mixer2& mix,
                                                   int max_total) {
  std::vector<std::vector<double>> blocks(max_total + 1);
  std::vector<double> v, w;
  for (int n = 0; n <= max_total; ++n) {
    auto& block = blocks[n];
    block.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0.0);
    for (int n1 = 0; n1 <= n; ++n1) {
      v.assign(1, 1.0);
      int p = 0;
      auto apply = [&](double ca, double cb, int step) {
        w.assign(p + 2, 0.0);
        for (int k = 0; k <= p + 1; ++k) {
          double acc = 0.0;
          if (k > 0) acc += ca * std::sqrt(static_cast<double>(k)) * v[k - 1];
          if (k <= p) {
            acc += cb * std::sqrt(static_cast<double>(p + 1 - k)) * v[k];
          }
          w[k] = acc / std::sqrt(static_cast<double>(step));
        }
        v.swap(w);
        ++p;
      };
      for (int s = 1; s <= n1; ++s) apply(mix.m00, mix.m10, s);
      for (int s = 1; s <= n - n1; ++s) apply(mix.m01, mix.m11, s);
      for (int m = 0; m <= n; ++m) {
        block[static_cast<std::size_t>(m) * (n + 1) + n1] = v[m];
      }
    }
  }
  return blocks;
}

void apply_pair_mixer(FockVector& state, int mode_a, int mode_b,
                      const Mixer2& mix) {
  if (mode_a == mode_b) {
    throw std::domain_error("apply_pair_mixer: modes must be distinct");
  }
  const int N = state.cutoff;
  const int d = N + 1;
  const auto blocks = pair_mixer_blocks(mix, 2 * N);
  const std::size_t sa = state.stride(mode_a);
  const std::size_t sb = state.stride(mode_b);

  // Odometer over the remaining modes.
  std::vector<std::size_t> rest_strides;
  for (int m = 0; m < state.num_modes; ++m) {
    if (m != mode_a && m != mode_b) rest_strides.push_back(state.stride(m));
  }
  const std::size_t rest_count = ipow(d, static_cast<int>(rest_strides.size()));

  std::vector<cdouble> vin(d), vout(d);
  std::vector<int> digits(rest_strides.size(), 0);
  for (std::size_t r = 0; r < rest_count; ++r) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      base += static_cast<std::size_t>(digits[i]) * rest_strides[i];
    }
    for (int n = 0; n <= 2 * N; ++n) {
      const int lo = std::max(0, n - N);
      const int hi = std::min(n, N);
      const auto& block = blocks[n];
      for (int k = lo; k <= hi; ++k) {
        vin[k - lo] = state.amp[base + static_cast<std::size_t>(k) * sa +
                                static_cast<std::size_t>(n - k) * sb];
      }
      for (int m = lo; m <= hi; ++m) {
        cdouble acc = 0.0;
        const std::size_t row = static_cast<std::size_t>(m) * (n + 1);
        for (int k = lo; k <= hi; ++k) {
          acc += block[row + k] * vin[k - lo];
        }
        vout[m - lo] = acc;
      }
      for (int m = lo; m <= hi; ++m) {
        state.amp[base + static_cast<std::size_t>(m) * sa +
                  static_cast<std::size_t>(n - m) * sb] = vout[m - lo];
      }
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < d) break;
      digits[i] = 0;
    }
  }
}

Projected vacuum_project(const FockVector& state,
                         const std::vector<int>& modes) {
  if (modes.empty()) {
    throw std::domain_error("vacuum_project: empty mode set");
  }
  const double norm_before = state.squared_norm();
  if (norm_before < 1e-300) {
    throw degenerate_input("vacuum_project: zero-norm input");
  }
  std::vector<int> kept;
  for (int m = 0; m < state.num_modes; ++m) {
    if (std::find(modes.begin(), modes.end(), m) == modes.end()) {
      kept.push_back(m);
    }
  }
  const int d = state.dim();
  FockVector out;
  out.cutoff = state.cutoff;
  out.num_modes = static_cast<int>(kept.size());
  out.amp.resize(ipow(d, out.num_modes));
  for (std::size_t idx = 0; idx < out.amp.size(); ++idx) {
    std::size_t rem = idx;
    std::size_t old_idx = 0;
    for (int m : kept) {
      old_idx += (rem % d) * state.stride(m);
      rem /= d;
    }
    out.amp[idx] = state.amp[old_idx];
  }
  const double probability = out.squared_norm() / norm_before;
  return {std::move(out), probability};
}

FockOperator density(const FockVector& v) {
  FockOperator op;
  op.cutoff = v.cutoff;
  op.num_modes = v.num_modes;
  const std::size_t side = v.amp.size();
  op.mat.resize(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      op.mat[r * side + c] = v.amp[r] * std::conj(v.amp[c]);
    }
  }
  return op;
}

FockOperator partial_trace(const FockOperator& op, int mode) {
  const int d = op.cutoff + 1;
  const std::size_t side = op.side();
  FockOperator out;
  out.cutoff = op.cutoff;
  out.num_modes = op.num_modes - 1;
  const std::size_t oside = out.side();
  out.mat.assign(oside * oside, 0.0);
  const std::size_t mstride = ipow(d, mode);
  auto insert_digit = [&](std::size_t idx, int k) {
    const std::size_t low = idx % mstride;
    const std::size_t high = idx / mstride;
    return low + static_cast<std::size_t>(k) * mstride + high * mstride * d;
  };
  for (std::size_t r = 0; r < oside; ++r) {
    for (std::size_t c = 0; c < oside; ++c) {
      cdouble acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += op.mat[insert_digit(r, k) * side + insert_digit(c, k)];
      }
      out.mat[r * oside + c] = acc;
    }
  }
  return out;
}

double trace_real(const FockOperator& op) {
  const std::size_t side = op.side();
  double tr = 0.0;
  for (std::size_t i = 0; i < side; ++i) tr += op.mat[i * side + i].real();
  return tr;
}

cdouble fock_inner(const FockVector& u, const FockVector& v) {
  if (u.amp.size() != v.amp.size()) {
    throw std::domain_error("fock_inner: shape mismatch");
  }
  cdouble acc = 0.0;
  for (std::size_t i = 0; i < u.amp.size(); ++i) {
    acc += std::conj(u.amp[i]) * v.amp[i];
  }
  return acc;
}

double fock_fidelity(const FockOperator& rho, const FockVector& v) {
  const std::size_t side = rho.side();
  if (side != v.amp.size()) {
    throw std::domain_error("fock_fidelity: shape mismatch");
  }
  const double tr = trace_real(rho);
  const double vn = v.squared_norm();
  if (tr < 1e-300) throw degenerate_input("fock_fidelity: zero-trace state");
  if (vn < 1e-300) throw degenerate_input("fock_fidelity: zero-norm target");
  cdouble acc = 0.0;
  for (std::size_t r = 0; r < side; ++r) {
    cdouble row = 0.0;
    for (std::size_t c = 0; c < side; ++c) {
      row += rho.mat[r * side + c] * v.amp[c];
    }
    acc += std::conj(v.amp[r]) * row;
  }
  return acc.real() / (tr * vn);
}

double trace_distance(const FockOperator& a, const FockOperator& b) {
  if (a.side() != b.side()) {
    throw std::domain_error("trace_distance: shape mismatch");
  }
  const auto n = static_cast<Eigen::Index>(a.side());
  Eigen::MatrixXcd diff(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      diff(r, c) = a.mat[r * n + c] - b.mat[r * n + c];
    }
  }
  diff = 0.5 * (diff + diff.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

FockOperator normalized(const FockOperator& op) {
  const double tr = trace_real(op);
  if (std::abs(tr) < 1e-300) {
    throw degenerate_input("normalized: zero-trace operator");
  }
  FockOperator out = op;
  for (auto& x : out.mat) x /= tr;
  return out;
}

FockVector ket_to_fock(const KetSuperposition& u, int cutoff) {
  int slot = -1;
  for (const auto& t : u.terms) slot = single_occupied_slot(t.label.amp, slot);
  FockVector out;
  out.cutoff = cutoff;
  out.num_modes = 1;
  out.amp.assign(cutoff + 1, 0.0);
  for (const auto& t : u.terms) {
    const cdouble a = slot >= 0 ? t.label.amp[slot] : cdouble(0.0);
    add_scaled(out, t.weight, coherent_to_fock(a, cutoff));
  }
  return out;
}

FockOperator dyads_to_fock(const DyadMixture& rho, int cutoff) {
  int slot = -1;
  for (const auto& t : rho.terms) {
    slot = single_occupied_slot(t.ket.amp, slot);
    slot = single_occupied_slot(t.bra.amp, slot);
  }
  const int d = cutoff + 1;
  FockOperator out;
  out.cutoff = cutoff;
  out.num_modes = 1;
  out.mat.assign(static_cast<std::size_t>(d) * d, 0.0);
  for (const auto& t : rho.terms) {
    const cdouble ka = slot >= 0 ? t.ket.amp[slot] : cdouble(0.0);
    const cdouble ba = slot >= 0 ? t.bra.amp[slot] : cdouble(0.0);
    const FockVector kv = coherent_to_fock(ka, cutoff);
    const FockVector bv = coherent_to_fock(ba, cutoff);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        out.mat[static_cast<std::size_t>(r) * d + c] +=
            t.weight * kv.amp[r] * std::conj(bv.amp[c]);
      }
    }
  }
  return out;
}

OracleBreed breed_oracle(double alpha, double eta, bool matched) {
  if (!(alpha > 0.0)) {
    throw degenerate_input("breed_oracle: alpha must be > 0");
  }
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("breed_oracle: eta must be in [0,1]");
  }
  double alpha_b = alpha;
  if (matched) {
    if (eta == 0.0) {
      throw std::domain_error("breed_oracle: matched inputs require eta > 0");
    }
    alpha_b = alpha / std::sqrt(eta);
  }
  const double a_psi = std::sqrt(eta) * alpha_b;
  const double b_psibar = std::sqrt(1.0 - eta) * alpha_b;
  const double amax =
      std::max(std::sqrt(2.0) * std::max(alpha, a_psi), b_psibar);
  const int N = cutoff_for(amax);

  FockVector state;
  state.cutoff = N;
  state.num_modes = 4;
  state.amp.assign(ipow(N + 1, 4), 0.0);
  const FockVector vac = coherent_to_fock(0.0, N);
  for (double s : {1.0, -1.0}) {
    for (double t : {1.0, -1.0}) {
      FockVector term = tensor(
          tensor(tensor(coherent_to_fock(s * alpha, N),
                        coherent_to_fock(t * a_psi, N)),
                 vac),
          coherent_to_fock(t * b_psibar, N));
      add_scaled(state, s, term);  // odd cat on A: weight s; even on B: +1
    }
  }

  apply_pair_mixer(state, 0, 1, mixer_5050());
  apply_pair_mixer(state, 2, 3, mixer_5050());

  Projected proj = vacuum_project(state, {1, 3});

  FockOperator rho2 = density(proj.state);
  FockOperator rho = partial_trace(rho2, 1);
  return {std::move(rho), proj.probability, N};
}

FockOperator loss_oracle(const CatSpec& cat, double eta, int cutoff) {
  if (cat.magnitude == 0.0 && cat.parity == Parity::Odd) {
    throw degenerate_input("loss_oracle: alpha=0 odd cat is the zero vector");
  }
  const int N = cutoff > 0 ? cutoff : cutoff_for(cat.magnitude);
  const double sign = cat.parity == Parity::Even ? 1.0 : -1.0;
  FockVector state;
  state.cutoff = N;
  state.num_modes = 2;
  state.amp.assign(ipow(N + 1, 2), 0.0);
  const FockVector vac = coherent_to_fock(0.0, N);
  add_scaled(state, 1.0, tensor(coherent_to_fock(cat.magnitude, N), vac));
  add_scaled(state, sign, tensor(coherent_to_fock(-cat.magnitude, N), vac));
  apply_pair_mixer(state, 0, 1, mixer_loss(eta));
  return partial_trace(density(state), 1);
}

}  // namespace catbreed::fock
