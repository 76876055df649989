#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "gf.hpp"
#include "rng.hpp"

namespace softdec {

// Additive memoryless channel on GF(q): y = c + e with e drawn iid from the
// pmf below, indexed by canonical element. p_max is the largest entry; p_min
// is the smallest strictly positive entry, taken as 0 for a noiseless channel
// (single positive entry).
struct ChannelModel {
  FieldPtr f;
  std::vector<double> p;
  double p_max = 0, p_min = 0, gamma = 0;  // gamma = sum p_i^2
  std::string name;                        // preset tag or "custom"
};

ChannelModel make_channel(const FieldPtr& f, std::vector<double> pmf,
                          std::string name = "custom");

// p(0) = p_correct, all remaining mass on one symbol (the field generator).
ChannelModel typewriter_channel(const FieldPtr& f, double p_correct);
// p(0) = p_correct, mass split evenly over the generator and its square.
ChannelModel two_error_channel(const FieldPtr& f, double p_correct);
// p(0) = p_correct, mass split evenly over all q-1 nonzero symbols.
ChannelModel symmetric_channel(const FieldPtr& f, double p_correct);
ChannelModel noiseless_channel(const FieldPtr& f);

// Parse {"field": {...} or "q": n, "preset": ..., "p_correct": ...} or
// {"field": ..., "pmf": [...]}; returns the model (field built as a side effect).
ChannelModel channel_from_json(const std::string& text);
std::string channel_to_json(const ChannelModel& ch);

// Row-major q x n matrix of reverse-channel probabilities given a received
// word: entry (i, j) = p(y_j - alpha_i), the chance symbol alpha_i was sent at
// position j. Columns are permutations of the pmf, so each sums to 1.
struct Posterior {
  uint32_t q = 0, n = 0;
  std::vector<double> v;
  double at(uint32_t i, uint32_t j) const { return v[(size_t)i * n + j]; }
};

Posterior posterior_matrix(const ChannelModel& ch, const std::vector<uint32_t>& y);

std::vector<uint32_t> sample_error(const ChannelModel& ch, uint32_t n, Rng& rng);
// exactly t errors: uniform support of size t, values from the conditional pmf
std::vector<uint32_t> sample_error_weight(const ChannelModel& ch, uint32_t n,
                                          uint32_t t, Rng& rng);
std::vector<uint32_t> apply_error(const ChannelModel& ch, const std::vector<uint32_t>& c,
                                  const std::vector<uint32_t>& e);

}  // namespace softdec
