// SPDX-License-Identifier: MIT
#include "telegraph/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace telegraph {

namespace {

void require_nonnegative_finite(double z, const char* who) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw std::domain_error(std::string(who) + ": argument must be finite and >= 0");
  }
}

// Power series of e^{-z} I_nu(z), nu in {0,1}. All terms positive, so the
// summation carries no cancellation; converges fast for z <= 30.
double bessel_scaled_series(double z, int nu) {
  const double q = 0.25 * z * z;  // (z/2)^2
  double term = (nu == 0) ? 1.0 : 0.5 * z;
  double sum = term;
  for (int n = 1; n < 200; ++n) {
    term *= q / (static_cast<double>(n) * (n + nu));
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return std::exp(-z) * sum;
}

// Asymptotic series e^{-z} I_nu(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(nu)/z^k
// with a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k). Terms are summed
// until they drop below 1e-17 of the sum; at z = 30 that happens by k ~ 13,
// leaving a truncation error around 1e-14.
double bessel_scaled_asymptotic(double z, int nu) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 16; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * z);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * M_PI * z);
}

constexpr double kSeriesAsymptoticCrossover = 30.0;

// --------------------------------------------------------------------------
// QK15: nodes and weights from QUADPACK (Fullerton, Bell Labs, 1981).
// --------------------------------------------------------------------------

constexpr double kXgk15[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk15[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg7[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double integral;
  double error;
};

PanelResult qk15(const std::function<double(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  const double fc = f(centr);
  double resg = fc * kWg7[3];
  double resk = fc * kWgk15[7];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * kXgk15[j];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk15[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg7[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk15[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk15[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  resasc *= std::abs(hlgth);

  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  return {resk * hlgth, abserr};
}

struct Interval {
  double a, b, integral, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

// Largest-error-first adaptive scheme over finite [a, b].
double adapt(const std::function<double(double)>& f, double a, double b,
             const QuadSpec& spec) {
  std::priority_queue<Interval> queue;
  PanelResult whole = qk15(f, a, b);
  queue.push({a, b, whole.integral, whole.error});
  double total = whole.integral;
  double total_err = whole.error;

  int panels = 1;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (panels >= spec.max_subdivisions) {
      throw ConvergenceError("integrate: subdivision budget exhausted", total, total_err);
    }
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable in double precision
      throw ConvergenceError("integrate: interval collapsed below machine resolution",
                             total, total_err);
    }
    PanelResult l = qk15(f, worst.a, mid);
    PanelResult r = qk15(f, mid, worst.b);
    total += l.integral + r.integral - worst.integral;
    total_err += l.error + r.error - worst.error;
    queue.push({worst.a, mid, l.integral, l.error});
    queue.push({mid, worst.b, r.integral, r.error});
    ++panels;
  }
  return total;
}

}  // namespace

double bessel_i0_scaled(double z) {
  require_nonnegative_finite(z, "bessel_i0_scaled");
  return z <= kSeriesAsymptoticCrossover ? bessel_scaled_series(z, 0)
                                         : bessel_scaled_asymptotic(z, 0);
}

double bessel_i1_scaled(double z) {
  require_nonnegative_finite(z, "bessel_i1_scaled");
  return z <= kSeriesAsymptoticCrossover ? bessel_scaled_series(z, 1)
                                         : bessel_scaled_asymptotic(z, 1);
}

double bessel_i1_scaled_over_z(double z) {
  require_nonnegative_finite(z, "bessel_i1_scaled_over_z");
  if (z < 1e-4) {
    // e^{-z} I1(z)/z = e^{-z} (1/2)(1 + z^2/8 + z^4/192 + ...)
    const double q = 0.25 * z * z;
    return std::exp(-z) * 0.5 * (1.0 + q / 2.0 + q * q / 12.0);
  }
  return bessel_i1_scaled(z) / z;
}

double gauss_tail(double a) {
  require_nonnegative_finite(a, "gauss_tail");
  return std::erf(a / std::sqrt(2.0));
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadSpec& spec, SingularEnds ends) {
  if (!(a < b)) throw std::domain_error("integrate: requires a < b");
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1) {
    throw std::invalid_argument("integrate: invalid QuadSpec");
  }

  if (!ends.left && !ends.right) return adapt(f, a, b, spec);

  // u = a + v^2 turns f ~ (u-a)^{-1/2} into a bounded integrand; same with
  // u = b - v^2 on the right. With both ends flagged, split at the midpoint.
  auto from_left = [&](double lo, double hi) {
    auto g = [&f, lo](double v) { return 2.0 * v * f(lo + v * v); };
    return adapt(g, 0.0, std::sqrt(hi - lo), spec);
  };
  auto from_right = [&](double lo, double hi) {
    auto g = [&f, hi](double v) { return 2.0 * v * f(hi - v * v); };
    return adapt(g, 0.0, std::sqrt(hi - lo), spec);
  };

  if (ends.left && ends.right) {
    const double mid = 0.5 * (a + b);
    return from_left(a, mid) + from_right(mid, b);
  }
  return ends.left ? from_left(a, b) : from_right(a, b);
}

namespace {

// 16-point Gauss-Legendre rule on [-1, 1], positive abscissae only.
// Nodes solved once by Newton iteration on P_16 (standard gauleg scheme).
struct Gl16Table {
  double x[8];
  double w[8];
  Gl16Table() {
    constexpr int n = 16;
    for (int i = 0; i < 8; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        const double z1 = z;
        z = z1 - p1 / pp;
        if (std::abs(z - z1) < 1e-15) break;
      }
      x[7 - i] = z;  // ascending order
      w[7 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
  }
};

const Gl16Table& gl16_table() {
  static const Gl16Table table;
  return table;
}

}  // namespace

double gauss_legendre_16(const std::function<double(double)>& f, double a, double b) {
  const Gl16Table& t = gl16_table();
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  double sum = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double absc = hlgth * t.x[j];
    sum += t.w[j] * (f(centr - absc) + f(centr + absc));
  }
  return sum * hlgth;
}

}  // namespace telegraph
