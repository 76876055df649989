#pragma once
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace softdec {

// Deterministic RNG. mt19937_64 has a standard-pinned output sequence, and the
// derived draws below avoid <random> distribution objects, whose streams vary
// across standard libraries. Same seed, same results, any platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  uint64_t u64() { return g_(); }

  // uniform in [0, 1) with 53 random bits
  double unit() { return (double)(g_() >> 11) * 0x1.0p-53; }

  // uniform in [0, n), unbiased via rejection
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    uint64_t rem = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      uint64_t r = g_();
      if (r <= UINT64_MAX - rem) return r % n;
    }
  }

  uint32_t index(uint32_t n) { return (uint32_t)below(n); }

  // sample an index from a pmf by CDF scan; ties broken toward lower index
  uint32_t discrete(const std::vector<double>& pmf) {
    double u = unit(), acc = 0.0;
    uint32_t last_pos = 0;
    bool seen = false;
    for (uint32_t i = 0; i < pmf.size(); ++i) {
      if (pmf[i] <= 0.0) continue;
      acc += pmf[i];
      last_pos = i;
      seen = true;
      if (u < acc) return i;
    }
    if (!seen) throw std::invalid_argument("pmf has no positive mass");
    return last_pos;  // guards fp shortfall at u ~ 1
  }

  // splitmix64-scrambled per-trial stream seed
  static uint64_t stream_seed(uint64_t campaign_seed, uint64_t trial) {
    uint64_t z = campaign_seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 g_;
};

}  // namespace softdec
