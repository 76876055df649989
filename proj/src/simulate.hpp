#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asd.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "rng.hpp"

namespace softdec {

enum class CampaignKind { radius, error_prob };
enum class WeightPolicy { channel_drawn, fixed_t, radius_sweep };

// One Monte Carlo configuration. `t` is the forced error weight for fixed_t
// (kAutoWeight = floor(n * tau)) and the sweep ceiling for radius_sweep,
// where trial i uses weight i mod (t + 1).
constexpr uint32_t kAutoWeight = 0xFFFFFFFFu;

struct TrialSpec {
  CampaignKind campaign = CampaignKind::radius;
  ChannelModel ch;
  uint32_t k = 2;
  uint32_t lambda = 30;
  uint64_t trials = 1000;
  uint64_t seed = 1;
  WeightPolicy policy = WeightPolicy::channel_drawn;
  uint32_t t = kAutoWeight;
  SelectPolicy select = SelectPolicy::score;
  bool grs = false;  // fresh uniform coordinate twist each trial
  uint32_t workers = 1;
};

// JSON object with keys campaign, channel (see channel_from_json), k,
// lambda, trials, seed, policy, t, select, grs, workers; all but channel
// optional. grs defaults to true for error_prob campaigns.
TrialSpec parse_trial_spec(const std::string& json_text);

struct RateEstimate {
  double phat = 0.0, lo = 0.0, hi = 0.0;
};
// Wilson score interval at 95% coverage.
RateEstimate wilson_interval(uint64_t hits, uint64_t n);

// Upper regularized incomplete gamma Q(a, x); chi-square tail probability
// for frequency-vs-pmf agreement checks.
double gammq(double a, double x);
double chi_square_pvalue(const std::vector<uint64_t>& observed,
                         const std::vector<double>& expected_p);

struct CampaignReport {
  std::string json;  // full payload, schema_version 1
  bool pass = true;  // every assertion the campaign makes holds
};

// Draw message (+ twist) (+ error), decode, tally. The radius campaign
// asserts that every trial with weight inside the Theorem-style radius
// floor keeps the transmitted codeword on the list; the error-probability
// campaign asserts empirical miss/selection rates stay within the Chernoff
// bounds plus 3 binomial sigma.
CampaignReport run_campaign(const TrialSpec& spec);
CampaignReport run_radius_campaign(const TrialSpec& spec);
CampaignReport run_error_prob_campaign(const TrialSpec& spec);

// Exhaustive oracle over every codeword (q^k guarded by enumerate_codewords):
// hamming keeps distance(cw, y) <= bound; score keeps score_of(mm, cw) >=
// bound; threshold keeps threshold_ok(mm, cw, k). Results in message-index
// order.
enum class ListCriterion { hamming, score, threshold };
std::vector<std::vector<uint32_t>> brute_force_list(const RSCode& code,
                                                    const std::vector<uint32_t>& y,
                                                    const MultMatrix* mm,
                                                    ListCriterion crit,
                                                    uint64_t bound);

}  // namespace softdec
