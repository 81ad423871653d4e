#include "potlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "potlab/errors.hpp"

namespace potlab::quad {
namespace {

constexpr int kGlOrder = 15;

struct GlRule {
  std::array<double, kGlOrder> node;
  std::array<double, kGlOrder> weight;
};

// Gauss-Legendre nodes/weights on [-1,1], generated by Newton iteration on
// the Legendre recurrence (exact to machine precision, no typed-in tables).
GlRule make_gl_rule() {
  GlRule r{};
  const int n = kGlOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.node[i] = x;
    r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const GlRule& gl_rule() {
  static const GlRule rule = make_gl_rule();
  return rule;
}

double gl15(const std::function<double(double)>& f, double a, double b) {
  const GlRule& r = gl_rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < kGlOrder; ++i) {
    s += r.weight[i] * f(c + h * r.node[i]);
  }
  return s * h;
}

// Adaptive bisection on a panel with no endpoint singularity.
double smooth_panel(const std::function<double(double)>& f, double a, double b,
                    double tol, int depth, int max_depth, double* err_acc) {
  const double whole = gl15(f, a, b);
  const double m = 0.5 * (a + b);
  const double halves = gl15(f, a, m) + gl15(f, m, b);
  const double err = std::abs(whole - halves);
  if (err <= tol || depth >= max_depth) {
    if (!std::isfinite(halves)) {
      throw NonIntegrable("quadrature: non-finite integrand on a panel");
    }
    *err_acc += err;
    return halves;
  }
  return smooth_panel(f, a, m, 0.5 * tol, depth + 1, max_depth, err_acc) +
         smooth_panel(f, m, b, 0.5 * tol, depth + 1, max_depth, err_acc);
}

// Integrates from `from` to `to` (either orientation) with geometric panel
// grading toward `from`; the integrand is never evaluated at `from` itself.
// The returned value is positively oriented over [min,max].
double graded_half(const std::function<double(double)>& f, double from,
                   double to, double tol, const Options& opts,
                   double* err_acc) {
  double sum = 0.0;
  double prev = -1.0;       // |previous layer|
  std::vector<double> ratios;
  int small_streak = 0;
  for (int k = 0; k < opts.max_layers; ++k) {
    const double e0 = from + (to - from) * std::pow(2.0, -k);
    const double e1 = from + (to - from) * std::pow(2.0, -(k + 1));
    const double lo = std::min(e0, e1);
    const double hi = std::max(e0, e1);
    if (!(hi > lo)) break;  // layer width underflow
    const double layer_tol = tol / (4.0 * (k + 1.0) * (k + 1.0));
    const double s =
        smooth_panel(f, lo, hi, layer_tol, 0, opts.max_panel_depth, err_acc);
    sum += s;
    const double mag = std::abs(s);

    if (std::abs(sum) > opts.divergence_cap) {
      throw NonIntegrable("quadrature: partial sums exceed divergence cap");
    }
    if (mag <= 1e-3 * tol) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
    if (prev > 0.0) {
      const double r = mag / prev;
      ratios.push_back(r);
      // Self-similar layers (power-law endpoint behavior): the ratio locks to
      // a constant, so the remaining tail is an exact geometric series. This
      // also sidesteps panels so close to `from` that the integrand is no
      // longer representable there.
      if (ratios.size() >= 6 && r > 0.0 && r < 0.97) {
        bool stable = true;
        for (std::size_t i = ratios.size() - 6; i < ratios.size(); ++i) {
          if (std::abs(ratios[i] - r) > 1e-8 * (1.0 - r)) {
            stable = false;
            break;
          }
        }
        if (stable) {
          const double tail = s * r / (1.0 - r);
          *err_acc += 1e-6 * std::abs(tail);
          return sum + tail;
        }
      }
      if (k >= 3 && r < 0.95) {
        const double tail = mag * r / (1.0 - r);
        if (tail < 0.25 * tol) {
          *err_acc += tail;
          return sum;
        }
      }
      // Non-decaying increments: declare divergence.
      if (k >= 60 && ratios.size() >= 16 && mag > 1e-14 * std::max(1.0, std::abs(sum))) {
        double rmin = 2.0;
        for (size_t i = ratios.size() - 16; i < ratios.size(); ++i) {
          rmin = std::min(rmin, ratios[i]);
        }
        if (rmin >= 0.995) {
          throw NonIntegrable("quadrature: non-decaying layer contributions");
        }
      }
    }
    prev = mag;
  }
  // Layer budget exhausted with slow (but decaying) contributions: accept the
  // partial sum and fold the geometric tail estimate into the error bound.
  if (prev > 0.0 && !ratios.empty() && ratios.back() < 1.0) {
    const double r = ratios.back();
    *err_acc += prev * r / (1.0 - r);
  }
  return sum;
}

double piece(const std::function<double(double)>& f, double a, double b,
             double tol, const Options& opts, double* err_acc) {
  const double m = 0.5 * (a + b);
  return graded_half(f, a, m, 0.5 * tol, opts, err_acc) +
         graded_half(f, b, m, 0.5 * tol, opts, err_acc);
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> interior_splits, const Options& opts) {
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0};
    throw InputError("quad::integrate: require a <= b");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("quad::integrate: bounded interval required");
  }
  std::vector<double> cuts{a};
  for (double s : interior_splits) {
    if (s > a && s < b) cuts.push_back(s);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  Result out;
  const double tol_per_piece = opts.abs_tol / static_cast<double>(cuts.size() - 1);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      out.value += piece(f, cuts[i], cuts[i + 1], tol_per_piece, opts, &out.error);
    }
  }
  return out;
}

}  // namespace potlab::quad
