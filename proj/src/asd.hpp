#pragma once

#include <cstdint>
#include <vector>

#include "analysis.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "interp.hpp"

namespace softdec {

// Multiplicity matrix: one row per alphabet symbol (canonical index), one
// column per codeword position.
struct MultMatrix {
  uint32_t q = 0;
  uint32_t n = 0;
  std::vector<uint32_t> m;  // row-major, q rows by n columns

  uint32_t at(uint32_t sym, uint32_t col) const {
    return m[(size_t)sym * n + col];
  }
  uint32_t& at(uint32_t sym, uint32_t col) {
    return m[(size_t)sym * n + col];
  }
};

// Proportional multiplicity assignment: entry = floor(lambda * posterior).
MultMatrix pmas(const Posterior& post, uint32_t lambda);

// Number of interpolation constraints: sum of m(m+1)/2 over all entries.
uint64_t total_cost(const MultMatrix& mm);

// Score of a word: sum over columns of the multiplicity of its symbol.
uint64_t score_of(const MultMatrix& mm, const std::vector<uint32_t>& word);

// Sufficient condition for list membership: S^2 > 2(k-1)C, exact integers.
// margin = S^2 - 2(k-1)C; the condition is sufficient, not necessary.
struct ThresholdCheck {
  bool ok = false;
  double margin = 0.0;
};
ThresholdCheck threshold_ok(const MultMatrix& mm,
                            const std::vector<uint32_t>& word, uint32_t k);

// Multivariate generalizations for M interpolation variables. The product
// form counts sum of prod_{l=0..M}(m+l); the binomial form divides each
// term by (M+1)!, i.e. counts Hasse constraints C(m+M, M+1). At M = 1 the
// product form reduces to 2C and the threshold matches threshold_ok.
uint64_t pv_constraint_count(const MultMatrix& mm, uint32_t mvars,
                             PVForm form);

// S^(M+1) > (k-1)^M * pv_constraint_count, exact integers.
ThresholdCheck pv_threshold_ok(const MultMatrix& mm,
                               const std::vector<uint32_t>& word, uint32_t k,
                               uint32_t mvars, PVForm form);

// All polynomials f with deg f < k and q(X, f(X)) = 0, found by shifted
// recursion on the constant-in-X part, each candidate verified against q.
// Sorted by canonical message order.
std::vector<UniPoly> y_roots(const WPoly& q, uint32_t k);

enum class SelectPolicy { score, posterior };

struct ListEntry {
  std::vector<uint32_t> message;
  std::vector<uint32_t> codeword;
  uint64_t score = 0;
  double log_post = 0.0;  // sum of ln(posterior) over positions; 0 if none
};

struct DecodeDiag {
  uint64_t cost = 0;        // interpolation constraint count C
  uint64_t list_bound = 0;  // Y-degree cap fed to the interpolator
  uint32_t wdeg = 0;        // weighted degree of the interpolated Q
  uint32_t ydeg = 0;
  uint32_t dstar = 0;       // smallest wdeg with more monomials than C
  uint64_t constraints = 0; // constraints actually processed
};

struct DecodeResult {
  std::vector<ListEntry> list;  // best candidate first
  int selected = -1;            // index into list, -1 when list is empty
  DecodeDiag diag;
};

// Core pipeline: interpolate against an arbitrary multiplicity matrix,
// extract Y-roots, re-encode, rank. The posterior, when provided, supplies
// the log_post entries and the tie-break (or primary, per policy) key.
// Requires k >= 2.
DecodeResult decode_matrix(const RSCode& code, const MultMatrix& mm,
                           SelectPolicy policy, const Posterior* post);

// Soft-decision decode: posteriors from the channel model, multiplicities
// by proportional assignment.
DecodeResult asd_decode(const RSCode& code, const ChannelModel& ch,
                        const std::vector<uint32_t>& received,
                        uint32_t lambda, SelectPolicy policy);

// Hard-decision list decode: uniform multiplicity `mult` on the received
// symbols only.
DecodeResult gs_decode(const RSCode& code,
                       const std::vector<uint32_t>& received, uint32_t mult);

// Classical unique decoding up to floor((n-k)/2) errors via syndromes,
// the linear-feedback synthesis of the error locator, locator root search
// and a linear solve for magnitudes. ok = false when no codeword lies
// within the packing radius.
struct BMResult {
  bool ok = false;
  std::vector<uint32_t> message;
  std::vector<uint32_t> codeword;
  uint32_t distance = 0;
};
BMResult bm_decode(const RSCode& code, const std::vector<uint32_t>& received);

}  // namespace softdec
