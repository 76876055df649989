#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace softdec {
namespace {

void check_rate(double rate) {
  if (!(rate > 0.0 && rate < 1.0))
    throw std::domain_error("rate must lie in (0, 1)");
}

void check_stats(double p_max, double p_min, double gamma, double lambda) {
  if (!(p_max > 0.0 && p_max <= 1.0 && p_min >= 0.0))
    throw std::domain_error("channel stats out of range");
  if (!(p_max > p_min))
    throw std::domain_error("degenerate channel stats: p_max == p_min");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("gamma must lie in (0, 1]");
  if (!(lambda >= 1.0) || !std::isfinite(lambda))
    throw std::domain_error("lambda must be a finite value >= 1");
}

// lambda > 1/p_min is the standing assumption of both rate-region formulas.
void check_sharp_regime(double p_min, double lambda) {
  if (!(p_min > 0.0) || !(lambda * p_min > 1.0))
    throw std::domain_error("requires lambda > 1/p_min");
}

// Golden-section minimizer for a convex objective on [lo, hi].
template <class F>
std::pair<double, int> golden_min(F&& f, double lo, double hi, double tol) {
  const double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  int iter = 0;
  while (b - a > tol && iter < 400) {
    if (fc < fd) {
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
    ++iter;
  }
  return {0.5 * (a + b), iter};
}

double clip01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

double radius_bm(double rate) {
  check_rate(rate);
  return 0.5 * (1.0 - rate);
}

double radius_gs(double rate) {
  check_rate(rate);
  return 1.0 - std::sqrt(rate);
}

RadiusValue radius_asd(double rate, double p_max, double p_min, double gamma,
                       double lambda) {
  check_rate(rate);
  check_stats(p_max, p_min, gamma, lambda);
  double inv = 1.0 / lambda;
  double raw = (p_max - std::sqrt(rate * (gamma + inv)) - inv) / (p_max - p_min);
  return {raw, clip01(raw)};
}

RadiusValue radius_asd(double rate, const ChannelModel& ch, double lambda) {
  return radius_asd(rate, ch.p_max, ch.p_min, ch.gamma, lambda);
}

double gs_crossover_rate(double p_max, double p_min, double gamma,
                         double lambda) {
  check_stats(p_max, p_min, gamma, lambda);
  check_sharp_regime(p_min, lambda);
  double inv = 1.0 / lambda;
  double num = p_min - inv;
  double den = std::sqrt(gamma + inv) - p_max + p_min;
  double r = num / den;
  return r * r;
}

double gs_crossover_rate(const ChannelModel& ch, double lambda) {
  return gs_crossover_rate(ch.p_max, ch.p_min, ch.gamma, lambda);
}

double always_on_list_rate(double p_min, double gamma, double lambda) {
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("gamma must lie in (0, 1]");
  if (!(lambda >= 1.0)) throw std::domain_error("lambda must be >= 1");
  check_sharp_regime(p_min, lambda);
  double inv = 1.0 / lambda;
  double num = p_min - inv;
  return num * num / (gamma + inv);
}

double always_on_list_rate(const ChannelModel& ch, double lambda) {
  return always_on_list_rate(ch.p_min, ch.gamma, lambda);
}

// L is the largest integer with (k-1)L^2 + (k+1)L <= 2C; the float estimate
// is corrected by the exact integer predicate.
uint64_t list_size_bound(uint64_t cost, uint32_t k) {
  if (k < 2) throw std::invalid_argument("list size bound needs k >= 2");
  auto fits = [&](uint64_t ell) {
    unsigned __int128 lhs = (unsigned __int128)(k - 1) * ell * ell +
                            (unsigned __int128)(k + 1) * ell;
    return lhs <= (unsigned __int128)2 * cost;
  };
  double b = (k + 1) / (2.0 * k - 2.0);
  double est = std::sqrt(2.0 * (double)cost / (k - 1.0) + b * b) - b;
  uint64_t ell = est > 1.0 ? (uint64_t)(est - 1.0) : 0;
  while (fits(ell + 1)) ++ell;
  while (ell > 0 && !fits(ell)) --ell;
  return ell;
}

uint64_t list_size_bound_channel(uint32_t n, double lambda, double gamma,
                                 uint32_t k) {
  if (n == 0) throw std::invalid_argument("block length must be positive");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("gamma must lie in (0, 1]");
  if (!(lambda >= 1.0)) throw std::domain_error("lambda must be >= 1");
  if (k < 2) throw std::invalid_argument("list size bound needs k >= 2");
  long double two_c =
      (long double)n * lambda * lambda * gamma + (long double)n * lambda;
  auto fits = [&](uint64_t ell) {
    long double lhs = (long double)(k - 1) * ell * ell +
                      (long double)(k + 1) * ell;
    return lhs <= two_c;
  };
  double b = (k + 1) / (2.0 * k - 2.0);
  double est = std::sqrt((double)(two_c / (k - 1.0)) + b * b) - b;
  uint64_t ell = est > 1.0 ? (uint64_t)(est - 1.0) : 0;
  while (fits(ell + 1)) ++ell;
  while (ell > 0 && !fits(ell)) --ell;
  return ell;
}

KoetterBound koetter_radius(double rate, const std::vector<double>& delta,
                            double theta, double eps) {
  check_rate(rate);
  if (delta.empty()) throw std::invalid_argument("empty cost function");
  double dmax = 0.0;
  for (double d : delta) {
    if (!(d >= 0.0) || !std::isfinite(d))
      throw std::invalid_argument("cost function entries must be >= 0");
    dmax = std::max(dmax, d);
  }
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::domain_error("theta must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("eps must lie in (0, 1)");

  // sum_a [rho - theta*delta(a)]_+ is piecewise linear and increasing in
  // rho, 0 at rho = 0 and >= 1 at theta*dmax + 1; bisect for the root.
  auto clip_sum = [&](double rho) {
    double s = 0.0;
    for (double d : delta) s += std::max(0.0, rho - theta * d);
    return s;
  };
  double lo = 0.0, hi = theta * dmax + 1.0;
  if (clip_sum(hi) < 1.0)
    throw std::domain_error("normalization constraint is infeasible");
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + hi); ++i) {
    double mid = 0.5 * (lo + hi);
    (clip_sum(mid) < 1.0 ? lo : hi) = mid;
  }
  double rho = 0.5 * (lo + hi);

  KoetterBound out;
  out.rho = rho;
  double sq = 0.0, cost = 0.0;
  for (double d : delta) {
    double c = std::max(0.0, rho - theta * d);
    sq += c * c;
    cost += d * c;
  }
  out.rate_bound = (1.0 - eps) * sq;
  out.cost_bound = cost;
  out.rate_ok = rate <= out.rate_bound;
  return out;
}

double koetter_hamming_radius(double rate, uint32_t n, double eps) {
  if (n == 0) throw std::invalid_argument("block length must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("eps must lie in (0, 1)");
  double lo = (1.0 - eps) / (n + 1.0);
  double hi = 1.0 - eps;
  if (!(rate >= lo && rate <= hi))
    throw std::domain_error("rate outside the admissible window");
  double inner = (double)n * rate / ((n + 1.0) * (1.0 - eps)) -
                 (double)n / ((n + 1.0) * (n + 1.0));
  return (double)n / (n + 1.0) - std::sqrt(std::max(0.0, inner));
}

namespace {

// exp(-n * E_A) bounds the probability that the transmitted codeword
// misses the list; g is the convex Chernoff base.
double exponent_a_base(double rate, const ChannelModel& ch, double lambda,
                       double s) {
  double inv = 1.0 / lambda;
  double shift = std::sqrt(rate * (ch.gamma + inv)) + inv;
  double g = 0.0;
  for (double p : ch.p)
    if (p > 0.0) g += p * std::exp(-s * (p - shift));
  return g;
}

// Negated selection-error exponent: rate*ln q + s/lambda + ln A + ln B with
// A the uniform-score transform and B the channel-score transform.
double exponent_b_neg(double rate, const ChannelModel& ch, double lambda,
                      double s) {
  double q = (double)ch.p.size();
  double a = 0.0, b = 0.0;
  for (double p : ch.p) {
    a += std::exp(s * p);
    if (p > 0.0) b += p * std::exp(-s * p);
  }
  return rate * std::log(q) + s / lambda + std::log(a / q) + std::log(b);
}

void check_exponent_args(double rate, const ChannelModel& ch, double lambda) {
  check_rate(rate);
  if (ch.p.empty()) throw std::invalid_argument("channel has no pmf");
  if (!(lambda >= 1.0)) throw std::domain_error("lambda must be >= 1");
}

constexpr double kBracketScale = 200.0;  // search s in (0, 200/p_max]
constexpr double kGoldenTol = 1e-10;

}  // namespace

double exponent_A(double rate, const ChannelModel& ch, double lambda,
                  double s) {
  check_exponent_args(rate, ch, lambda);
  if (!(s > 0.0)) throw std::domain_error("Chernoff parameter must be positive");
  return -std::log(exponent_a_base(rate, ch, lambda, s));
}

double exponent_B(double rate, const ChannelModel& ch, double lambda,
                  double s) {
  check_exponent_args(rate, ch, lambda);
  if (!(s > 0.0)) throw std::domain_error("Chernoff parameter must be positive");
  return -exponent_b_neg(rate, ch, lambda, s);
}

double exponent_B_display(double rate, const ChannelModel& ch, double lambda,
                          double s) {
  check_exponent_args(rate, ch, lambda);
  if (!(s > 0.0)) throw std::domain_error("Chernoff parameter must be positive");
  double q = (double)ch.p.size();
  double inv = 1.0 / lambda;
  double inner = std::exp(s * inv);
  for (size_t i = 0; i < ch.p.size(); ++i) {
    if (ch.p[i] <= 0.0) continue;
    for (size_t j = 0; j < ch.p.size(); ++j) {
      if (j == i) continue;
      inner += 2.0 * ch.p[i] * std::exp(-s * (ch.p[i] - ch.p[j] - inv));
    }
  }
  return -((rate - 1.0) * std::log(q) + std::log(inner));
}

ExponentResult exponent_A_opt(double rate, const ChannelModel& ch,
                              double lambda) {
  check_exponent_args(rate, ch, lambda);
  ExponentResult res;
  res.rate = rate;

  // In the always-on-list region the miss probability is exactly zero and
  // the exponent is unbounded: every term of g decays with s.
  if (ch.p_min > 0.0 && lambda * ch.p_min > 1.0) {
    double inv = 1.0 / lambda;
    double region = (ch.p_min - inv) * (ch.p_min - inv) / (ch.gamma + inv);
    if (rate < region) {
      res.infinite = true;
      res.value = std::numeric_limits<double>::infinity();
      res.raw = res.value;
      return res;
    }
  }

  auto g = [&](double s) { return exponent_a_base(rate, ch, lambda, s); };
  auto [s_star, iters] = golden_min(g, 1e-12, kBracketScale / ch.p_max,
                                    kGoldenTol);
  res.s_star = s_star;
  res.iterations = iters;
  res.raw = -std::log(g(s_star));
  res.value = std::max(0.0, res.raw);
  return res;
}

ExponentResult exponent_B_opt(double rate, const ChannelModel& ch,
                              double lambda) {
  check_exponent_args(rate, ch, lambda);
  auto h = [&](double s) { return exponent_b_neg(rate, ch, lambda, s); };
  auto [s_star, iters] = golden_min(h, 1e-12, kBracketScale / ch.p_max,
                                    kGoldenTol);
  ExponentResult res;
  res.rate = rate;
  res.s_star = s_star;
  res.iterations = iters;
  res.raw = -h(s_star);
  res.value = std::max(0.0, res.raw);
  return res;
}

RadiusValue radius_pv(double rate, const ChannelModel& ch, double lambda,
                      uint32_t mvars, PVForm form) {
  check_rate(rate);
  check_stats(ch.p_max, ch.p_min, ch.gamma, lambda);
  if (mvars < 1 || mvars > 16)
    throw std::invalid_argument("variable count must lie in 1..16");

  double inv = 1.0 / lambda;
  double sumprod = 0.0;
  for (double p : ch.p) {
    if (p <= 0.0) continue;  // the l = 0 factor vanishes
    double term = 1.0;
    for (uint32_t l = 0; l <= mvars; ++l) term *= p + l * inv;
    sumprod += term;
  }

  double divisor = 1.0;
  if (form == PVForm::binomial)
    for (uint32_t l = 2; l <= mvars + 1; ++l) divisor *= l;

  double m = (double)mvars;
  double core = std::pow(rate, m) * std::pow(m, m) / divisor * sumprod;
  double raw = (ch.p_max - std::pow(core, 1.0 / (m + 1.0)) - inv) /
               (ch.p_max - ch.p_min);
  return {raw, clip01(raw)};
}

}  // namespace softdec
