#include "catbreed/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "catbreed/errors.hpp"

namespace catbreed {

namespace {

bool finite(cdouble z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double max_abs_weight(const DyadMixture& rho) {
  double m = 0.0;
  for (const auto& t : rho.terms) m = std::max(m, std::abs(t.weight));
  return m;
}

}  // namespace

bool mergeable(const CoherentLabel& x, const CoherentLabel& y, double tol) {
  for (int s = 0; s < kNumModes; ++s) {
    if (std::abs(x.amp[s] - y.amp[s]) >= tol) return false;
  }
  return true;
}

cdouble coherent_overlap(cdouble a, cdouble b) {
  if (!finite(a) || !finite(b)) {
    throw std::domain_error("coherent_overlap: non-finite amplitude");
  }
  return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) +
                  std::conj(a) * b);
}

cdouble multimode_overlap(const CoherentLabel& x, const CoherentLabel& y) {
  cdouble arg = 0.0;
  for (int s = 0; s < kNumModes; ++s) {
    if (!finite(x.amp[s]) || !finite(y.amp[s])) {
      throw std::domain_error("multimode_overlap: non-finite amplitude");
    }
    arg += -0.5 * std::norm(x.amp[s]) - 0.5 * std::norm(y.amp[s]) +
           std::conj(x.amp[s]) * y.amp[s];
  }
  return std::exp(arg);
}

cdouble inner_product(const KetSuperposition& u, const KetSuperposition& v) {
  cdouble acc = 0.0;
  for (const auto& tu : u.terms) {
    for (const auto& tv : v.terms) {
      acc += std::conj(tu.weight) * tv.weight *
             multimode_overlap(tu.label, tv.label);
    }
  }
  return acc;
}

double squared_norm(const KetSuperposition& u) {
  return inner_product(u, u).real();
}

cdouble bra_ket_label(const KetSuperposition& t, const CoherentLabel& k) {
  cdouble acc = 0.0;
  for (const auto& tt : t.terms) {
    acc += std::conj(tt.weight) * multimode_overlap(tt.label, k);
  }
  return acc;
}

DyadMixture dyad_from_pure(const KetSuperposition& u) {
  DyadMixture rho;
  rho.terms.reserve(u.terms.size() * u.terms.size());
  for (const auto& ti : u.terms) {
    for (const auto& tj : u.terms) {
      rho.terms.push_back({ti.weight * std::conj(tj.weight), ti.label, tj.label});
    }
  }
  return rho;
}

DyadMixture partial_trace(const DyadMixture& rho,
                          const std::vector<ModeIndex>& traced) {
  DyadMixture out;
  out.terms.reserve(rho.terms.size());
  for (const auto& t : rho.terms) {
    cdouble w = t.weight;
    CoherentLabel ket = t.ket;
    CoherentLabel bra = t.bra;
    for (ModeIndex m : traced) {
      w *= coherent_overlap(bra.at(m), ket.at(m));
      ket.set(m, 0.0);
      bra.set(m, 0.0);
    }
    out.terms.push_back({w, ket, bra});
  }
  return out;
}

KetSuperposition simplify(KetSuperposition x) {
  KetSuperposition out;
  for (const auto& t : x.terms) {
    bool merged = false;
    for (auto& o : out.terms) {
      if (mergeable(o.label, t.label)) {
        o.weight += t.weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.terms.push_back(t);
  }
  std::erase_if(out.terms,
                [](const KetTerm& t) { return std::abs(t.weight) < kDropTol; });
  return out;
}

DyadMixture simplify(DyadMixture x) {
  DyadMixture out;
  for (const auto& t : x.terms) {
    bool merged = false;
    for (auto& o : out.terms) {
      if (mergeable(o.ket, t.ket) && mergeable(o.bra, t.bra)) {
        o.weight += t.weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.terms.push_back(t);
  }
  std::erase_if(out.terms,
                [](const DyadTerm& t) { return std::abs(t.weight) < kDropTol; });
  return out;
}

cdouble trace_of(const DyadMixture& rho) {
  cdouble acc = 0.0;
  for (const auto& t : rho.terms) {
    acc += t.weight * multimode_overlap(t.bra, t.ket);
  }
  return acc;
}

DyadMixture adjoint(const DyadMixture& rho) {
  DyadMixture out;
  out.terms.reserve(rho.terms.size());
  for (const auto& t : rho.terms) {
    out.terms.push_back({std::conj(t.weight), t.bra, t.ket});
  }
  return out;
}

bool is_hermitian(const DyadMixture& rho, double tol) {
  DyadMixture diff = rho;
  for (const auto& t : adjoint(rho).terms) {
    diff.terms.push_back({-t.weight, t.ket, t.bra});
  }
  diff = simplify(std::move(diff));
  const double scale = std::max(1.0, max_abs_weight(rho));
  for (const auto& t : diff.terms) {
    if (std::abs(t.weight) > tol * scale) return false;
  }
  return true;
}

cdouble hs_inner(const DyadMixture& a, const DyadMixture& b) {
  // tr((|k><b|)^dag |k'><b'|) = <k|k'> <b'|b>
  cdouble acc = 0.0;
  for (const auto& ta : a.terms) {
    for (const auto& tb : b.terms) {
      acc += std::conj(ta.weight) * tb.weight *
             multimode_overlap(ta.ket, tb.ket) *
             multimode_overlap(tb.bra, ta.bra);
    }
  }
  return acc;
}

double hs_distance(const DyadMixture& a, const DyadMixture& b) {
  const double d2 = hs_inner(a, a).real() + hs_inner(b, b).real() -
                    2.0 * hs_inner(a, b).real();
  return std::sqrt(std::max(0.0, d2));
}

double purity_ratio(const DyadMixture& rho) {
  // tr(rho^2) = sum_{t,t'} w w' <b|k'> <b'|k>
  cdouble tr2 = 0.0;
  for (const auto& t : rho.terms) {
    for (const auto& u : rho.terms) {
      tr2 += t.weight * u.weight * multimode_overlap(t.bra, u.ket) *
             multimode_overlap(u.bra, t.ket);
    }
  }
  const double tr = trace_of(rho).real();
  if (std::abs(tr) < kDropTol) {
    throw degenerate_input("purity_ratio: zero-trace operator");
  }
  return tr2.real() / (tr * tr);
}

KetSuperposition tensor(const KetSuperposition& u, const KetSuperposition& v) {
  KetSuperposition out;
  out.terms.reserve(u.terms.size() * v.terms.size());
  for (const auto& tu : u.terms) {
    for (const auto& tv : v.terms) {
      CoherentLabel label = tu.label;
      for (int s = 0; s < kNumModes; ++s) {
        if (tv.label.amp[s] != 0.0) {
          if (label.amp[s] != 0.0) {
            throw std::domain_error("tensor: factors share a mode");
          }
          label.amp[s] = tv.label.amp[s];
        }
      }
      out.terms.push_back({tu.weight * tv.weight, label});
    }
  }
  return out;
}

}  // namespace catbreed
