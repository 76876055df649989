#pragma once

#include <cstdint>
#include <vector>

#include "channel.hpp"

namespace softdec {

// A decoding radius as a fraction of the block length. `raw` is the formula
// value, which can leave [0, 1]; `clipped` is usable as an error fraction.
struct RadiusValue {
  double raw = 0.0;
  double clipped = 0.0;
};

// Classical radii as functions of the rate, 0 < rate < 1.
double radius_bm(double rate);
double radius_gs(double rate);

// Soft-decision radius for an additive channel described by its stats:
// (p_max - sqrt(rate * (gamma + 1/lambda)) - 1/lambda) / (p_max - p_min).
RadiusValue radius_asd(double rate, double p_max, double p_min, double gamma,
                       double lambda);
RadiusValue radius_asd(double rate, const ChannelModel& ch, double lambda);

// Rate below which the soft-decision radius exceeds the hard list-decoding
// radius 1 - sqrt(rate). Requires lambda > 1/p_min.
double gs_crossover_rate(double p_max, double p_min, double gamma,
                         double lambda);
double gs_crossover_rate(const ChannelModel& ch, double lambda);

// Rate at or below which the raw soft-decision radius reaches 1, i.e. the
// transmitted codeword is listed regardless of the error pattern.
// Requires lambda > 1/p_min.
double always_on_list_rate(double p_min, double gamma, double lambda);
double always_on_list_rate(const ChannelModel& ch, double lambda);

// Largest L with (k-1)L^2 + (k+1)L <= 2C: the returned list size never
// exceeds L when the interpolation cost is C. Requires k >= 2.
uint64_t list_size_bound(uint64_t cost, uint32_t k);

// Same bound with the worst-case cost 2C <= n*lambda^2*gamma + n*lambda
// substituted for the realized cost.
uint64_t list_size_bound_channel(uint32_t n, double lambda, double gamma,
                                 uint32_t k);

// Cost-function decoding region: given a per-symbol cost delta (indexed by
// canonical symbol), a slope theta > 0 and a margin eps in (0,1), solves
//   sum_a [rho - theta*delta(a)]_+ = 1
// for rho and returns the admissible rate and the per-coordinate cost
// bound sum_a delta(a) * [rho - theta*delta(a)]_+.
struct KoetterBound {
  double rho = 0.0;
  double rate_bound = 0.0;  // (1-eps) * sum of squared clipped terms
  double cost_bound = 0.0;  // admissible average cost per coordinate
  bool rate_ok = false;     // rate <= rate_bound
};
KoetterBound koetter_radius(double rate, const std::vector<double>& delta,
                            double theta, double eps);

// Hamming specialization in closed form, valid for
// (1-eps)/(n+1) <= rate <= 1-eps:
//   tau = n/(n+1) - sqrt(n*rate/((n+1)(1-eps)) - n/(n+1)^2).
double koetter_hamming_radius(double rate, uint32_t n, double eps);

// Chernoff exponents. Pointwise evaluation at a Chernoff parameter s > 0,
// plus a golden-section optimizer over s in (0, 200/p_max].
double exponent_A(double rate, const ChannelModel& ch, double lambda,
                  double s);

// Selection-error exponent derived from the Chernoff product
//   q^(nR) * e^(sn/lambda) * ((1/q) sum_j e^(s p_j))^n * (sum_i p_i e^(-s p_i))^n.
double exponent_B(double rate, const ChannelModel& ch, double lambda,
                  double s);

// Literal evaluation of the published closed form for the selection-error
// exponent (with its doubled cross-term sum). Kept separate because it
// does not reduce to the Chernoff product above; callers compare the two.
double exponent_B_display(double rate, const ChannelModel& ch, double lambda,
                          double s);

struct ExponentResult {
  double rate = 0.0;
  double s_star = 0.0;   // optimizing Chernoff parameter, > 0 when finite
  double value = 0.0;    // max(raw, 0), or +inf when `infinite`
  double raw = 0.0;      // unclamped optimum, may be negative
  bool infinite = false;
  int iterations = 0;
};
ExponentResult exponent_A_opt(double rate, const ChannelModel& ch,
                              double lambda);
ExponentResult exponent_B_opt(double rate, const ChannelModel& ch,
                              double lambda);

// Multivariate interpolation radius. The binomial form carries the
// (M+1)! divisor of the published display; the product form drops it and
// coincides with radius_asd at M = 1.
enum class PVForm { product, binomial };

RadiusValue radius_pv(double rate, const ChannelModel& ch, double lambda,
                      uint32_t mvars, PVForm form);

}  // namespace softdec
