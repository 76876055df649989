#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "asd.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "doctest.h"
#include "gf.hpp"
#include "interp.hpp"
#include "poly.hpp"
#include "rng.hpp"

using namespace softdec;

TEST_SUITE_BEGIN("asd");

namespace {

MultMatrix random_matrix(uint32_t q, uint32_t n, uint32_t mmax, Rng& rng) {
  MultMatrix mm;
  mm.q = q;
  mm.n = n;
  mm.m.resize((size_t)q * n);
  for (auto& v : mm.m) v = (uint32_t)rng.below(mmax + 1);
  return mm;
}

// all degree-< k polynomials whose substitution kills q, by exhaustion
std::vector<UniPoly> brute_roots(const WPoly& q, uint32_t k) {
  const auto& f = q.field();
  uint64_t total = 1;
  for (uint32_t i = 0; i < k; ++i) total *= f->q();
  std::vector<UniPoly> out;
  for (uint64_t idx = 0; idx < total; ++idx) {
    std::vector<uint32_t> msg(k);
    uint64_t r = idx;
    for (uint32_t i = 0; i < k; ++i) {
      msg[i] = (uint32_t)(r % f->q());
      r /= f->q();
    }
    auto cand = UniPoly::from_message(f, msg);
    if (q.substitute({cand}).zero()) out.push_back(cand);
  }
  return out;  // enumeration order is canonical message order
}

}  // namespace

TEST_CASE("proportional assignment floors the scaled posterior") {
  auto f = Field::make(2, 4);
  auto ch = typewriter_channel(f, 0.8);
  std::vector<uint32_t> y(15, 0);
  auto post = posterior_matrix(ch, y);
  auto mm = pmas(post, 30);
  REQUIRE(mm.q == 16);
  REQUIRE(mm.n == 15);
  uint32_t g = f->generator();
  for (uint32_t j = 0; j < 15; ++j) {
    CHECK(mm.at(0, j) == 24);  // 30 * 0.8 exactly
    // 1 - 0.8 is slightly below 0.2 in binary, so 30x of it floors to 5
    CHECK(mm.at(f->sub(0, g), j) == 5);
    for (uint32_t i = 0; i < 16; ++i)
      if (i != 0 && i != f->sub(0, g)) CHECK(mm.at(i, j) == 0);
  }
  CHECK(total_cost(mm) == 15 * (24ull * 25 / 2 + 5ull * 6 / 2));

  // zero lambda is rejected, the matrix shapes follow the posterior
  CHECK_THROWS_AS((void)pmas(post, 0), std::invalid_argument);
}

TEST_CASE("score, cost, and the membership threshold are exact integers") {
  auto f = Field::make(2, 2);
  MultMatrix mm;
  mm.q = 4;
  mm.n = 3;
  mm.m = {3, 1, 0,   // row 0: symbol 0 at positions 0..2
          0, 2, 1,   // row 1
          1, 0, 4,   // row 2
          0, 0, 0};  // row 3
  CHECK(total_cost(mm) == 6 + 1 + 3 + 1 + 1 + 10);
  CHECK(score_of(mm, {0, 1, 2}) == 3 + 2 + 4);
  CHECK(score_of(mm, {3, 3, 3}) == 0);

  // S = 9, C = 22, k = 2: 81 > 44
  auto thr = threshold_ok(mm, {0, 1, 2}, 2);
  CHECK(thr.ok);
  CHECK(thr.margin == 81.0 - 44.0);
  // k = 3 doubles the right side: 81 < 88
  auto thr3 = threshold_ok(mm, {0, 1, 2}, 3);
  CHECK_FALSE(thr3.ok);
  CHECK(thr3.margin == 81.0 - 88.0);
  // boundary is strict: S^2 == 2(k-1)C is not enough
  MultMatrix eq;
  eq.q = 2;
  eq.n = 2;
  eq.m = {2, 1, 0, 0};  // C = 4, S(00) = 3; 9 > 8 ok. S(01) = 2; 4 < 8.
  CHECK(threshold_ok(eq, {0, 0}, 2).ok);
  CHECK_FALSE(threshold_ok(eq, {0, 1}, 2).ok);
}

TEST_CASE("root extraction agrees with exhaustion") {
  Rng rng(51);
  auto f = Field::make(2, 4);
  int nontrivial = 0;
  for (int it = 0; it < 100; ++it) {
    // plant two roots so the list is rarely empty, then add junk terms
    auto f1 = UniPoly::from_message(f, {(uint32_t)rng.below(16), (uint32_t)rng.below(16)});
    auto f2 = UniPoly::from_message(f, {(uint32_t)rng.below(16), (uint32_t)rng.below(16)});
    WPoly y1(f, 1, 1), y2(f, 1, 1);
    y1.set_coeff({0, {1}}, 1);
    for (uint32_t i = 0; i <= (uint32_t)f1.deg() && !f1.zero(); ++i)
      if (f1.coeff(i)) y1.add_term({i, {0}}, f1.coeff(i));
    y2.set_coeff({0, {1}}, 1);
    for (uint32_t i = 0; i <= (uint32_t)f2.deg() && !f2.zero(); ++i)
      if (f2.coeff(i)) y2.add_term({i, {0}}, f2.coeff(i));
    auto q = y1 * y2;
    if (rng.below(2)) {
      WPoly xf(f, 1, 1);
      xf.set_coeff({1 + (uint32_t)rng.below(2), {0}}, 1 + (uint32_t)rng.below(15));
      q = q * xf;
    }
    auto got = y_roots(q, 2);
    auto want = brute_roots(q, 2);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
    if (got.size() >= 2) ++nontrivial;
  }
  CHECK(nontrivial > 50);

  // fully random low-degree polynomials, root set usually empty or tiny
  for (int it = 0; it < 40; ++it) {
    WPoly q(f, 1, 1);
    for (int t = 0; t < 6; ++t)
      q.add_term({(uint32_t)rng.below(4), {(uint32_t)rng.below(3)}},
                 (uint32_t)rng.below(16));
    if (q.zero()) continue;
    auto got = y_roots(q, 2);
    auto want = brute_roots(q, 2);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
  }
}

TEST_CASE("hard-decision list decode covers the whole guaranteed ball") {
  Rng rng(52);
  auto f = Field::make(2, 4);
  auto code = make_rs(f, 2);
  for (uint32_t mult : {1u, 2u, 3u}) {
    for (int it = 0; it < 12; ++it) {
      std::vector<uint32_t> y(code.n);
      for (auto& v : y) v = (uint32_t)rng.below(16);
      auto res = gs_decode(code, y, mult);
      // guaranteed radius from the interpolated weighted degree:
      // score mult*(n-t) > wdeg forces membership
      uint32_t t_ok = code.n - 1 - (uint32_t)(res.diag.wdeg / mult);
      std::vector<uint64_t> listed;
      for (const auto& e : res.list) {
        // every listed entry is a consistent re-encoding
        CHECK(rs_encode(code, e.message) == e.codeword);
      }
      enumerate_codewords(code, [&](uint64_t, const std::vector<uint32_t>& msg,
                                    const std::vector<uint32_t>& cw) {
        if (hamming_distance(cw, y) <= t_ok) {
          bool found = false;
          for (const auto& e : res.list)
            if (e.codeword == cw) found = true;
          CHECK(found);
          (void)msg;
        }
      });
    }
  }
}

TEST_CASE("unique decoding: exhaustive against nearest-codeword search") {
  auto f = Field::make(5, 1);
  auto code = make_rs(f, 2);  // n = 4, distance 3, corrects 1 error
  // every received word in GF(5)^4
  std::vector<uint32_t> y(4);
  for (uint32_t a = 0; a < 5; ++a)
    for (uint32_t b = 0; b < 5; ++b)
      for (uint32_t c = 0; c < 5; ++c)
        for (uint32_t d = 0; d < 5; ++d) {
          y = {a, b, c, d};
          // brute nearest codeword within radius 1
          bool exists = false;
          std::vector<uint32_t> best_cw, best_msg;
          enumerate_codewords(code, [&](uint64_t, const std::vector<uint32_t>& msg,
                                        const std::vector<uint32_t>& cw) {
            if (hamming_distance(cw, y) <= 1) {
              exists = true;
              best_cw = cw;
              best_msg = msg;
            }
          });
          auto res = bm_decode(code, y);
          CHECK(res.ok == exists);
          if (exists) {
            CHECK(res.codeword == best_cw);
            CHECK(res.message == best_msg);
            CHECK(res.distance == hamming_distance(best_cw, y));
          }
        }
}

TEST_CASE("unique decoding at a larger size: random correctable errors") {
  Rng rng(53);
  auto f = Field::make(2, 4);
  auto code = make_rs(f, 4);  // corrects up to 5 errors
  const uint32_t tmax = (code.n - code.k) / 2;
  for (int it = 0; it < 200; ++it) {
    std::vector<uint32_t> msg(4);
    for (auto& v : msg) v = (uint32_t)rng.below(16);
    auto cw = rs_encode(code, msg);
    uint32_t t = (uint32_t)rng.below(tmax + 1);
    auto y = cw;
    // distinct positions, nonzero flips
    std::vector<uint32_t> idx(code.n);
    for (uint32_t i = 0; i < code.n; ++i) idx[i] = i;
    for (uint32_t i = 0; i < t; ++i) {
      uint32_t j = i + (uint32_t)rng.below(code.n - i);
      std::swap(idx[i], idx[j]);
      y[idx[i]] = f->add(y[idx[i]], 1 + (uint32_t)rng.below(15));
    }
    auto res = bm_decode(code, y);
    REQUIRE(res.ok);
    CHECK(res.message == msg);
    CHECK(res.codeword == cw);
    CHECK(res.distance == t);
  }
  // beyond the packing radius the decoder must not hallucinate: whenever it
  // does answer, the answer is a codeword within tmax of the received word
  for (int it = 0; it < 100; ++it) {
    std::vector<uint32_t> y(code.n);
    for (auto& v : y) v = (uint32_t)rng.below(16);
    auto res = bm_decode(code, y);
    if (res.ok) {
      CHECK(rs_encode(code, res.message) == res.codeword);
      CHECK(hamming_distance(res.codeword, y) <= tmax);
      CHECK(res.distance == hamming_distance(res.codeword, y));
    }
  }
}

TEST_CASE("matrix decoding: membership theorem and list-size cap") {
  Rng rng(54);
  auto f = Field::make(2, 4);
  auto code = make_rs(f, 2);
  uint32_t above_threshold = 0;
  for (int it = 0; it < 20; ++it) {
    auto mm = random_matrix(16, 15, 3, rng);
    if (it % 4 == 0) {
      // bias toward a real codeword so the membership theorem gets exercised
      std::vector<uint32_t> msg = {(uint32_t)rng.below(16),
                                   (uint32_t)rng.below(16)};
      auto cw = rs_encode(code, msg);
      for (uint32_t j = 0; j < code.n; ++j) mm.at(cw[j], j) += 3;
    }
    auto res = decode_matrix(code, mm, SelectPolicy::score, nullptr);
    CHECK(res.list.size() <= res.diag.list_bound);
    enumerate_codewords(code, [&](uint64_t, const std::vector<uint32_t>&,
                                  const std::vector<uint32_t>& cw) {
      if (threshold_ok(mm, cw, code.k).ok) {
        ++above_threshold;
        bool found = false;
        for (const auto& e : res.list)
          if (e.codeword == cw) found = true;
        CHECK(found);
      }
    });
    // scores are reported faithfully and sorted under the score policy
    for (size_t i = 0; i < res.list.size(); ++i) {
      CHECK(res.list[i].score == score_of(mm, res.list[i].codeword));
      if (i + 1 < res.list.size())
        CHECK(res.list[i].score >= res.list[i + 1].score);
    }
    if (!res.list.empty()) CHECK(res.selected == 0);
  }
  // the theorem must actually have been exercised
  CHECK(above_threshold > 0);
}

TEST_CASE("selection policies rank the same list differently") {
  auto f = Field::make(2, 4);
  auto code = make_rs(f, 2);
  auto ch = typewriter_channel(f, 0.8);
  Rng rng(55);
  int both_seen = 0;
  for (int it = 0; it < 60 && both_seen < 5; ++it) {
    std::vector<uint32_t> msg = {(uint32_t)rng.below(16), (uint32_t)rng.below(16)};
    auto cw = rs_encode(code, msg);
    auto e = sample_error_weight(ch, code.n, 11, rng);
    auto y = apply_error(ch, cw, e);
    auto by_score = asd_decode(code, ch, y, 30, SelectPolicy::score);
    auto by_post = asd_decode(code, ch, y, 30, SelectPolicy::posterior);
    REQUIRE(by_score.list.size() == by_post.list.size());
    if (by_score.list.size() >= 2) {
      ++both_seen;
      // same candidate set either way
      for (const auto& a : by_score.list) {
        bool found = false;
        for (const auto& b : by_post.list)
          if (a.codeword == b.codeword) found = true;
        CHECK(found);
      }
      for (size_t i = 0; i + 1 < by_score.list.size(); ++i)
        CHECK(by_score.list[i].score >= by_score.list[i + 1].score);
      for (size_t i = 0; i + 1 < by_post.list.size(); ++i)
        CHECK(by_post.list[i].log_post >= by_post.list[i + 1].log_post);
    }
  }
  CHECK(both_seen == 5);
}

TEST_CASE("bivariate and multivariate thresholds coincide at one variable") {
  Rng rng(56);
  for (int it = 0; it < 100; ++it) {
    auto mm = random_matrix(16, 15, 3, rng);
    std::vector<uint32_t> word(15);
    for (auto& v : word) v = (uint32_t)rng.below(16);
    uint32_t k = 2 + (uint32_t)rng.below(3);
    auto a = threshold_ok(mm, word, k);
    auto b = pv_threshold_ok(mm, word, k, 1, PVForm::product);
    CHECK(a.ok == b.ok);
    CHECK(a.margin == b.margin);
  }
}

TEST_CASE("constraint counts: the product form is the scaled binomial form") {
  Rng rng(57);
  for (uint32_t mvars : {1u, 2u, 3u}) {
    uint64_t fact = 1;  // (M+1)!
    for (uint32_t i = 2; i <= mvars + 1; ++i) fact *= i;
    for (int it = 0; it < 20; ++it) {
      auto mm = random_matrix(8, 7, 4, rng);
      uint64_t prod = pv_constraint_count(mm, mvars, PVForm::product);
      uint64_t bino = pv_constraint_count(mm, mvars, PVForm::binomial);
      CHECK(prod == fact * bino);
    }
  }
  // at one variable the product form is twice the interpolation cost
  auto mm = random_matrix(8, 7, 4, rng);
  CHECK(pv_constraint_count(mm, 1, PVForm::product) == 2 * total_cost(mm));
}

TEST_CASE("correlated trivariate pipeline: threshold forces a root") {
  Rng rng(58);
  auto f = Field::make(2, 2);
  auto pv = make_pv(f, 2, 2);  // ext alphabet GF(16), n = 3
  const uint32_t extq = pv.ext->q();

  // check every message against matrices biased toward its own codeword
  uint32_t forced = 0;
  for (uint64_t idx = 0; idx < 16; ++idx) {
    std::vector<uint32_t> msg = {(uint32_t)(idx % 4), (uint32_t)(idx / 4)};
    auto cw = pv_encode(pv, msg);
    auto polys = pv_message_polys(pv, msg);

    MultMatrix mm;
    mm.q = extq;
    mm.n = pv.n;
    mm.m.assign((size_t)extq * pv.n, 0);
    for (uint32_t j = 0; j < pv.n; ++j) {
      mm.at(cw[j], j) = 2 + (uint32_t)rng.below(3);
      mm.at((uint32_t)rng.below(extq), j) += 1;  // some interference
    }

    // interpolate with the true multivariate constraint counts
    std::vector<MultiPoint> pts;
    for (uint32_t j = 0; j < pv.n; ++j)
      for (uint32_t sym = 0; sym < extq; ++sym)
        if (mm.at(sym, j) > 0)
          pts.push_back({pv.points[j], pv_decompose(pv, sym), mm.at(sym, j)});
    auto q = interpolate_multi(pv.base, pts, pv.k, pv.mvars);
    REQUIRE_FALSE(q.zero());
    for (const auto& p : pts) CHECK(q.has_multiplicity(p.mult, p.x, p.ys));

    auto thr = pv_threshold_ok(mm, cw, pv.k, pv.mvars, PVForm::product);
    if (thr.ok) {
      ++forced;
      CHECK(q.substitute(polys).zero());
    }
  }
  // the biased matrices must trip the threshold most of the time
  CHECK(forced >= 12);
}

TEST_SUITE_END();
