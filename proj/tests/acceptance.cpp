// Release gate. Each numbered check prints one [PASS]/[FAIL] line and the
// binary exits nonzero if any line failed. Tolerances are pinned here, next
// to the value they guard, so a red line always names the number that moved.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "asd.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "curves.hpp"
#include "gf.hpp"
#include "interp.hpp"
#include "json.hpp"
#include "poly.hpp"
#include "rng.hpp"
#include "simulate.hpp"

using namespace softdec;
using nlohmann::json;

namespace {

int g_failures = 0;
std::string g_note;  // printed under the current criterion's line

std::string strf(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

void line(int num, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %02d %s%s%s\n", pass ? "PASS" : "FAIL", num, name,
              detail.empty() ? "" : " :: ", detail.c_str());
  if (!g_note.empty()) {
    std::printf("   note: %s\n", g_note.c_str());
    g_note.clear();
  }
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

json run(const TrialSpec& s) { return json::parse(run_campaign(s).json); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- 01
// The three stock channels reproduce their published (p_max, p_min, gamma)
// triples. The 16-ary symmetric channel's gamma is exactly 0.65056; the
// commonly quoted 0.6506 is its 4-decimal rounding, checked as such.
bool c01(std::string& d) {
  auto tw = typewriter_channel(Field::of_order(256), 0.8);
  auto te = two_error_channel(Field::of_order(256), 0.8);
  auto qs = symmetric_channel(Field::of_order(16), 0.805);
  const double tol = 1e-12;
  bool ok = near(tw.p_max, 0.8, tol) && near(tw.p_min, 0.2, tol) &&
            near(tw.gamma, 0.68, tol);
  ok = ok && near(te.p_max, 0.8, tol) && near(te.p_min, 0.1, tol) &&
       near(te.gamma, 0.66, tol);
  ok = ok && near(qs.p_max, 0.805, tol) && near(qs.p_min, 0.013, tol) &&
       near(qs.gamma, 0.65056, tol) && near(qs.gamma, 0.6506, 5e-5);
  d = strf("typewriter(%.2g,%.2g,%.2g) two_error(%.2g,%.2g,%.2g) "
           "qsym16(%.3g,%.3g,%.5g)",
           tw.p_max, tw.p_min, tw.gamma, te.p_max, te.p_min, te.gamma,
           qs.p_max, qs.p_min, qs.gamma);
  return ok;
}

// ---------------------------------------------------------------- 02
// With a noiseless channel and a huge multiplicity budget the soft radius
// collapses to the hard list-decoding radius 1 - sqrt(R).
bool c02(std::string& d) {
  auto ch = noiseless_channel(Field::of_order(256));
  double worst = 0.0;
  for (int i = 1; i <= 99; ++i) {
    const double r = i / 100.0;
    worst = std::max(
        worst, std::fabs(radius_asd(r, ch, 1e9).raw - (1.0 - std::sqrt(r))));
  }
  d = strf("max |tau_raw - (1-sqrt R)| = %.3g over 99 rates, lambda = 1e9",
           worst);
  return worst <= 1e-6;
}

// ---------------------------------------------------------------- 03
// Rate-region algebra on the typewriter channel at lambda = 100: the
// always-listed rate and the rate where the soft radius meets 1 - sqrt(R),
// each cross-checked against a bisection of the radius formula itself.
bool c03(std::string& d) {
  auto ch = typewriter_channel(Field::of_order(256), 0.8);
  const double r_on = always_on_list_rate(ch, 100.0);
  const double r_x = gs_crossover_rate(ch, 100.0);

  bool ok = near(r_on, 0.052319, 1e-5);
  // 0.67852 is the commonly quoted value; direct evaluation gives
  // 0.6785059..., which rounds to 0.67851, so the quote carries one ulp of
  // display rounding. Admit it at 2e-5 and print the computed number.
  ok = ok && near(r_x, 0.67852, 2e-5);

  // the defining identities, at 1e-9
  ok = ok && near(radius_asd(r_x, ch, 100.0).raw, radius_gs(r_x), 1e-9);
  ok = ok && near(radius_asd(r_on, ch, 100.0).raw, 1.0, 1e-9);

  // independent bisection oracles for both rates
  double lo = 0.5, hi = 0.8;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (radius_asd(mid, ch, 100.0).raw - radius_gs(mid) > 0.0 ? lo : hi) = mid;
  }
  ok = ok && near(r_x, 0.5 * (lo + hi), 1e-9);
  lo = 1e-6, hi = 0.5;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (radius_asd(mid, ch, 100.0).raw >= 1.0 ? lo : hi) = mid;
  }
  ok = ok && near(r_on, 0.5 * (lo + hi), 1e-9);

  // grid form of the always-listed equivalence: raw radius >= 1 iff the
  // rate sits at or below the always-listed rate
  for (int i = 1; i <= 99; ++i) {
    const double r = i / 100.0;
    ok = ok && ((radius_asd(r, ch, 100.0).raw >= 1.0) == (r <= r_on));
  }

  d = strf("always-listed rate %.9g, crossover %.9g (quoted 0.67852)", r_on,
           r_x);
  return ok;
}

// ---------------------------------------------------------------- 04  05
// Monte Carlo certification of the guaranteed radius on GF(16): at the
// forced weight t = floor(n * tau) the transmitted codeword must appear on
// the list in every single trial. The same reports feed check 05: the
// integer score threshold implies membership and no list exceeds its cap.
// A fourth campaign at lambda = 29, t = 14 pins the score (93) between the
// realized weighted degree (<= 92) and the threshold (sqrt(8730) = 93.4),
// so every trial lists the codeword with a negative margin; that count is
// recorded, not asserted, because the threshold is sufficient only.
struct Campaigns {
  bool ok4 = false, ok5 = false;
  std::string d4, d5;
};

Campaigns c04_c05() {
  Campaigns out;
  TrialSpec base;
  base.campaign = CampaignKind::radius;
  base.ch = typewriter_channel(Field::of_order(16), 0.8);
  base.lambda = 30;
  base.trials = 1000;
  base.policy = WeightPolicy::fixed_t;
  base.t = kAutoWeight;
  base.select = SelectPolicy::score;
  base.grs = false;
  base.workers = 1;

  bool ok4 = true;
  uint64_t thr_viol = 0, bound_viol = 0, trials = 0;
  std::string d4;
  for (uint32_t k : {2u, 3u, 4u}) {
    TrialSpec s = base;
    s.k = k;
    s.seed = 40 + k;
    json rep = run(s);
    const auto& c = rep["counts"];
    const uint64_t onl = c["on_list"].get<uint64_t>();
    ok4 = ok4 && onl == s.trials && c["guarantee_violations"] == 0 &&
          rep["pass"].get<bool>();
    thr_viol += c["threshold_violations"].get<uint64_t>();
    bound_viol += c["list_bound_violations"].get<uint64_t>();
    trials += s.trials;
    d4 += strf("%sk=%u: %llu/%llu at t=%u", k == 2 ? "" : ", ", k,
               (unsigned long long)onl, (unsigned long long)s.trials,
               rep["t"].get<uint32_t>());
  }
  out.ok4 = ok4;
  out.d4 = d4;

  TrialSpec ex = base;
  ex.k = 2;
  ex.lambda = 29;
  ex.trials = 50;
  ex.seed = 45;
  ex.t = 14;
  json rep = run(ex);
  const auto& c = rep["counts"];
  thr_viol += c["threshold_violations"].get<uint64_t>();
  bound_viol += c["list_bound_violations"].get<uint64_t>();
  trials += ex.trials;
  const uint64_t exhibits = c["margin_nonpositive_on_list"].get<uint64_t>();

  out.ok5 = thr_viol == 0 && bound_viol == 0;
  out.d5 = strf("%llu threshold violations, %llu list-bound violations over "
                "%llu trials; %llu/%llu listed with margin <= 0 (recorded)",
                (unsigned long long)thr_viol, (unsigned long long)bound_viol,
                (unsigned long long)trials, (unsigned long long)exhibits,
                (unsigned long long)ex.trials);
  return out;
}

// ---------------------------------------------------------------- 06
// Decoder-vs-oracle equivalences: (a) the uniform-multiplicity list covers
// the full Hamming ball its weighted degree guarantees, (b) Y-root
// extraction matches exhaustion over all degree-<2 polynomials, (c) the
// syndrome decoder matches brute-force nearest-codeword over all of GF(5)^4.
bool c06(std::string& d) {
  auto f = Field::of_order(16);
  auto code = make_rs(f, 2);
  Rng rng(61);

  bool ok = true;
  uint64_t ball_total = 0;
  for (int it = 0; it < 200 && ok; ++it) {
    std::vector<uint32_t> y(code.n);
    if (it % 2 == 0) {
      std::vector<uint32_t> msg{(uint32_t)rng.below(16),
                                (uint32_t)rng.below(16)};
      y = rs_encode(code, msg);
      const uint32_t w = (uint32_t)rng.below(5);
      for (uint32_t i = 0; i < w; ++i)
        y[rng.below(code.n)] = (uint32_t)rng.below(16);
    } else {
      for (auto& v : y) v = (uint32_t)rng.below(16);
    }
    const uint32_t mult = 1 + (uint32_t)(it % 3);
    auto res = gs_decode(code, y, mult);
    // score mult*(n - t) > wdeg forces membership
    const uint32_t t_ok = code.n - 1 - (uint32_t)(res.diag.wdeg / mult);
    auto ball =
        brute_force_list(code, y, nullptr, ListCriterion::hamming, t_ok);
    ball_total += ball.size();
    for (const auto& cw : ball) {
      bool found = false;
      for (const auto& e : res.list) found = found || e.codeword == cw;
      ok = ok && found;
    }
  }
  const bool ok_a = ok && ball_total > 0;

  ok = true;
  uint64_t roots_total = 0;
  for (int it = 0; it < 100 && ok; ++it) {
    auto lift = [&](const UniPoly& p) {
      // the factor Y - p(X)
      WPoly w(f, 1, 1);
      w.set_coeff({0, {1}}, 1);
      for (uint32_t i = 0; i <= (uint32_t)p.deg() && !p.zero(); ++i)
        if (p.coeff(i)) w.add_term({i, {0}}, f->neg(p.coeff(i)));
      return w;
    };
    auto f1 = UniPoly::from_message(
        f, {(uint32_t)rng.below(16), (uint32_t)rng.below(16)});
    auto f2 = UniPoly::from_message(
        f, {(uint32_t)rng.below(16), (uint32_t)rng.below(16)});
    WPoly q = lift(f1) * lift(f2);
    if (rng.below(2)) {
      WPoly junk(f, 1, 1);
      junk.set_coeff({1 + (uint32_t)rng.below(2), {0}},
                     1 + (uint32_t)rng.below(15));
      q = q * junk;
    }
    auto got = y_roots(q, 2);
    std::vector<UniPoly> want;
    for (uint32_t idx = 0; idx < 256; ++idx) {
      // canonical message order: the constant coefficient is the fast digit
      auto cand = UniPoly::from_message(f, {idx % 16, idx / 16});
      if (q.substitute({cand}).zero()) want.push_back(cand);
    }
    ok = ok && got.size() == want.size();
    for (size_t i = 0; ok && i < got.size(); ++i) ok = got[i] == want[i];
    roots_total += want.size();
  }
  const bool ok_b = ok && roots_total >= 100;

  auto f5 = Field::of_order(5);
  auto c5 = make_rs(f5, 2);
  std::vector<std::vector<uint32_t>> cws;
  enumerate_codewords(c5, [&](uint64_t, const std::vector<uint32_t>&,
                              const std::vector<uint32_t>& cw) {
    cws.push_back(cw);
  });
  ok = true;
  const uint32_t packing = (c5.n - c5.k) / 2;
  for (uint32_t w = 0; w < 625 && ok; ++w) {
    std::vector<uint32_t> y(4);
    uint32_t v = w;
    for (auto& s : y) s = v % 5, v /= 5;
    uint32_t best = UINT32_MAX;
    size_t arg = 0;
    for (size_t i = 0; i < cws.size(); ++i) {
      const uint32_t dist = hamming_distance(y, cws[i]);
      if (dist < best) best = dist, arg = i;
    }
    auto r = bm_decode(c5, y);
    if (best <= packing)
      ok = r.ok && r.codeword == cws[arg] && r.distance == best;
    else
      ok = !r.ok;
  }
  const bool ok_c = ok;

  d = strf("ball coverage %s (%llu members), roots %s (%llu found), "
           "syndrome-vs-brute %s (625 words)",
           ok_a ? "ok" : "FAIL", (unsigned long long)ball_total,
           ok_b ? "ok" : "FAIL", (unsigned long long)roots_total,
           ok_c ? "ok" : "FAIL");
  return ok_a && ok_b && ok_c;
}

// ---------------------------------------------------------------- 07
// Interpolation contract on random multiplicity matrices: the returned
// polynomial is nonzero, satisfies every Hasse constraint individually, and
// its weighted degree is minimal against the processed constraint count.
bool c07(std::string& d) {
  Rng rng(71);
  auto f = Field::of_order(16);
  bool ok = true;
  uint64_t checked = 0;
  for (int it = 0; it < 100 && ok; ++it) {
    const uint32_t k = 2 + (uint32_t)(it % 3);
    std::vector<InterpPoint> pts;
    uint64_t cost = 0;
    for (uint32_t j = 0; j < 15; ++j) {
      const uint32_t picks = 1 + (uint32_t)rng.below(3);
      std::set<uint32_t> used;
      for (uint32_t s = 0; s < picks; ++s) {
        const uint32_t sym = (uint32_t)rng.below(16);
        if (!used.insert(sym).second) continue;
        const uint32_t m = 1 + (uint32_t)rng.below(4);
        pts.push_back({j + 1, sym, m});
        cost += (uint64_t)m * (m + 1) / 2;
      }
    }
    uint64_t ymax = list_size_bound(cost, k);
    if (ymax == 0) ymax = 1;
    InterpDiag dg;
    WPoly q = interpolate_bivariate(f, pts, k, (uint32_t)ymax, &dg);
    ok = ok && !q.zero() && dg.constraints == cost && dg.wdeg <= dg.dstar;
    if (dg.wdeg > 0)
      ok = ok && monomial_count(dg.wdeg - 1, k - 1, dg.ymax) <= dg.constraints;
    for (const auto& p : pts)
      for (uint32_t a = 0; a < p.mult; ++a)
        for (uint32_t b = 0; a + b < p.mult; ++b) {
          ok = ok && q.hasse_at(a, {b}, p.x, {p.y}) == 0;
          ++checked;
        }
  }
  d = strf("100 random matrices, %llu Hasse constraints verified one by one",
           (unsigned long long)checked);
  return ok;
}

// ---------------------------------------------------------------- 08
// Error exponents on the typewriter channel. (a) the list-miss exponent is
// infinite exactly on the always-listed rate region and positive up to its
// zero crossing, located by bisection; (b) the selection-error exponent
// crosses zero in [0.30, 0.50]; (c) two 10^4-trial campaigns keep the
// empirical miss and selection rates within the Chernoff bounds + 3 sigma.
bool c08(std::string& d) {
  auto ch = typewriter_channel(Field::of_order(256), 0.8);
  const double region = always_on_list_rate(ch, 100.0);

  bool ok_a = true;
  for (int i = 1; i <= 99; ++i) {
    const double r = i / 100.0;
    auto ea = exponent_A_opt(r, ch, 100.0);
    ok_a = ok_a && ea.infinite == (r < region);
    if (r <= 0.65) ok_a = ok_a && (ea.infinite || ea.value > 0.0);
  }
  double lo = 0.55, hi = 0.75;
  ok_a = ok_a && exponent_A_opt(lo, ch, 100.0).raw > 0.0 &&
         exponent_A_opt(hi, ch, 100.0).raw < 0.0;
  for (int it = 0; it < 60 && ok_a; ++it) {
    const double mid = 0.5 * (lo + hi);
    (exponent_A_opt(mid, ch, 100.0).raw > 0.0 ? lo : hi) = mid;
  }
  const double cross_a = 0.5 * (lo + hi);
  // quoted positivity limit 0.6506 is the 4-decimal rounding of this root
  ok_a = ok_a && cross_a >= 0.64 && cross_a <= 0.69 &&
         near(cross_a, 0.6506, 1e-4);

  lo = 0.2, hi = 0.6;
  bool ok_b = exponent_B_opt(lo, ch, 100.0).raw > 0.0 &&
              exponent_B_opt(hi, ch, 100.0).raw < 0.0;
  for (int it = 0; it < 60 && ok_b; ++it) {
    const double mid = 0.5 * (lo + hi);
    (exponent_B_opt(mid, ch, 100.0).raw > 0.0 ? lo : hi) = mid;
  }
  const double cross_b = 0.5 * (lo + hi);
  ok_b = ok_b && cross_b >= 0.30 && cross_b <= 0.50;

  double disp_gap = 0.0;
  for (double r : {0.2, 0.3, 0.4}) {
    const double s = exponent_B_opt(r, ch, 100.0).s_star;
    disp_gap = std::max(disp_gap, std::fabs(exponent_B(r, ch, 100.0, s) -
                                            exponent_B_display(r, ch, 100.0, s)));
  }

  TrialSpec e1;
  e1.campaign = CampaignKind::error_prob;
  e1.ch = typewriter_channel(Field::of_order(16), 0.8);
  e1.k = 2;
  e1.lambda = 10;
  e1.trials = 10000;
  e1.seed = 46;
  e1.policy = WeightPolicy::channel_drawn;
  e1.t = kAutoWeight;
  e1.select = SelectPolicy::posterior;
  e1.grs = true;
  e1.workers = 1;
  json r1 = run(e1);

  TrialSpec e2 = e1;
  e2.ch = typewriter_channel(Field::of_order(16), 0.55);
  e2.seed = 47;
  json r2 = run(e2);

  const bool ok_c1 = r1["pass"].get<bool>() &&
                     r1["bounds"]["p_a_ok"].get<bool>() &&
                     r1["bounds"]["p_b_ok"].get<bool>();
  const double miss2 = r2["estimates"]["miss"]["phat"].get<double>();
  const bool ok_c2 = r2["pass"].get<bool>() &&
                     r2["bounds"]["exp_a"]["infinite"].get<bool>() &&
                     miss2 == 0.0;

  d = strf("miss-exponent root %.5g (quoted 0.6506), selection root %.4g "
           "(quoted 0.41); campaigns: miss %.2g <= %.2g, selection %.2g <= "
           "%.2g; zero-region miss 0/10000",
           cross_a, cross_b, r1["estimates"]["miss"]["phat"].get<double>(),
           r1["bounds"]["p_a_bound"].get<double>(),
           r1["estimates"]["selection_error"]["phat"].get<double>(),
           r1["bounds"]["p_b_bound"].get<double>());
  g_note = strf("closed-form vs Chernoff-product selection exponent differ by "
                "up to %.3g at the optimizing parameter (reported, not gated)",
                disp_gap);
  return ok_a && ok_b && ok_c1 && ok_c2;
}

// ---------------------------------------------------------------- 09
// Trivariate machinery is consistent with the bivariate one: at one Y
// variable the product-form radius and threshold reduce exactly to their
// bivariate counterparts, and the fig4 preset emits both trivariate forms.
bool c09(std::string& d) {
  Rng rng(91);
  bool ok = true;
  double worst = 0.0;
  const uint32_t qs[] = {4, 5, 7, 8, 9, 16, 25, 27, 32};
  for (int it = 0; it < 100; ++it) {
    auto f = Field::of_order(qs[rng.below(9)]);
    const double pc = 0.4 + 0.55 * rng.unit();
    auto ch = (it % 2) ? typewriter_channel(f, pc) : symmetric_channel(f, pc);
    const double lam = 5.0 + (double)rng.below(200);
    const double r = 0.01 + 0.97 * rng.unit();
    auto a = radius_asd(r, ch, lam);
    auto b = radius_pv(r, ch, lam, 1, PVForm::product);
    worst = std::max({worst, std::fabs(a.raw - b.raw),
                      std::fabs(a.clipped - b.clipped)});
  }
  ok = ok && worst <= 1e-12;

  for (int it = 0; it < 100 && ok; ++it) {
    MultMatrix mm;
    mm.q = 16;
    mm.n = 15;
    mm.m.assign((size_t)16 * 15, 0);
    for (uint32_t j = 0; j < mm.n; ++j) {
      const uint32_t picks = 1 + (uint32_t)rng.below(3);
      for (uint32_t s = 0; s < picks; ++s)
        mm.at((uint32_t)rng.below(16), j) = 1 + (uint32_t)rng.below(5);
    }
    std::vector<uint32_t> w(mm.n);
    for (auto& v : w) v = (uint32_t)rng.below(16);
    const uint32_t k = 2 + (uint32_t)rng.below(4);
    auto t1 = threshold_ok(mm, w, k);
    auto t2 = pv_threshold_ok(mm, w, k, 1, PVForm::product);
    ok = ok && t1.ok == t2.ok && t1.margin == t2.margin;
  }

  auto tab = preset_table("fig4");
  ok = ok && tab.columns.size() == 4 && tab.columns[2] == "tau_pv_product" &&
       tab.columns[3] == "tau_pv_binomial" && tab.rows.size() == 99;
  for (const auto& row : tab.rows)
    ok = ok && row[3] >= row[2] - 1e-12;  // dropping the factorial only helps

  d = strf("max radius gap %.3g over 100 tuples; thresholds identical on 100 "
           "instances; fig4 emits %zu rows x %zu columns",
           worst, tab.rows.size(), tab.columns.size());
  return ok;
}

// ---------------------------------------------------------------- 10
// The worst-case list-size bound at its published operating point and the
// shape of the fig2 curve: 187 at (n=255, lambda=100, gamma=0.68, k=51),
// and the bound never increases with the dimension.
bool c10(std::string& d) {
  const uint64_t at51 = list_size_bound_channel(255, 100.0, 0.68, 51);
  bool ok = at51 == 187;
  auto tab = preset_table("fig2");
  ok = ok && tab.columns.size() == 2 && tab.rows.size() == 253;
  for (size_t i = 0; ok && i + 1 < tab.rows.size(); ++i)
    ok = tab.rows[i + 1][1] <= tab.rows[i][1];
  ok = ok && tab.rows.front()[1] > tab.rows.back()[1];
  d = strf("bound(k=51) = %llu; curve spans %g down to %g over %zu dimensions",
           (unsigned long long)at51, tab.rows.front()[1], tab.rows.back()[1],
           tab.rows.size());
  return ok;
}

// ---------------------------------------------------------------- 11
// CLI determinism: rerunning the same command with the same seed gives the
// same bytes (the simulate report is compared after dropping its wall-clock
// field, the only timing metadata in any payload).
bool c11(std::string& d) {
  const std::string cli = SOFTDEC_CLI_PATH;
  auto sh = [&](const std::string& args) {
    return std::system(("\"" + cli + "\" " + args).c_str()) == 0;
  };

  bool ok = true;
  for (const char* preset : {"fig1a", "fig2"}) {
    const std::string base = std::string("acc_") + preset;
    ok = ok && sh("curves --preset " + std::string(preset) + " --out " +
                  base + "_1.csv");
    ok = ok && sh("curves --preset " + std::string(preset) + " --out " +
                  base + "_2.csv");
    const std::string a = slurp(base + "_1.csv");
    ok = ok && !a.empty() && a == slurp(base + "_2.csv") &&
         a.rfind("# version: softdec", 0) == 0;
  }

  const char* specs[2] = {
      R"({"campaign":"radius","channel":{"q":16,"preset":"typewriter","p_correct":0.8},"k":2,"lambda":8,"trials":30,"seed":7})",
      R"({"campaign":"error_prob","channel":{"q":16,"preset":"typewriter","p_correct":0.55},"k":2,"lambda":10,"trials":50,"seed":9})"};
  for (int i = 0; i < 2 && ok; ++i) {
    const std::string spec_path = strf("acc_spec_%d.json", i);
    std::ofstream(spec_path) << specs[i];
    const std::string o1 = strf("acc_sim_%d_1.json", i);
    const std::string o2 = strf("acc_sim_%d_2.json", i);
    ok = ok && sh("simulate --spec " + spec_path + " --out " + o1);
    ok = ok && sh("simulate --spec " + spec_path + " --out " + o2);
    if (!ok) break;
    json a = json::parse(slurp(o1));
    json b = json::parse(slurp(o2));
    a.erase("wall_clock_seconds");
    b.erase("wall_clock_seconds");
    ok = a == b && a["pass"].get<bool>();
  }

  d = "two curve presets byte-identical, two campaign reports identical "
      "after dropping wall_clock_seconds";
  return ok;
}

}  // namespace

int main() {
  struct Step {
    int num;
    const char* name;
    bool (*fn)(std::string&);
  };
  const Step steps[] = {
      {1, "stock channel statistics", c01},
      {2, "noiseless limit of the soft radius", c02},
      {3, "rate-region algebra", c03},
  };
  for (const auto& s : steps) {
    auto t0 = std::chrono::steady_clock::now();
    std::string d;
    bool ok = false;
    try {
      ok = s.fn(d);
    } catch (const std::exception& e) {
      d = strf("exception: %s", e.what());
    }
    line(s.num, s.name, ok, d + strf(" [%.1fs]", secs_since(t0)));
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    Campaigns c;
    std::string err;
    try {
      c = c04_c05();
    } catch (const std::exception& e) {
      err = strf("exception: %s", e.what());
    }
    const double dt = secs_since(t0);
    line(4, "guaranteed-radius certification",
         err.empty() && c.ok4, (err.empty() ? c.d4 : err) + strf(" [%.1fs]", dt));
    line(5, "score threshold and list-cap invariants",
         err.empty() && c.ok5, err.empty() ? c.d5 : err);
  }

  const Step tail[] = {
      {6, "decoder oracle equivalences", c06},
      {7, "interpolation contract", c07},
      {8, "error exponents and Chernoff bounds", c08},
      {9, "trivariate-bivariate consistency", c09},
      {10, "worst-case list-size figure", c10},
      {11, "CLI determinism", c11},
  };
  for (const auto& s : tail) {
    auto t0 = std::chrono::steady_clock::now();
    std::string d;
    bool ok = false;
    try {
      ok = s.fn(d);
    } catch (const std::exception& e) {
      d = strf("exception: %s", e.what());
    }
    line(s.num, s.name, ok, d + strf(" [%.1fs]", secs_since(t0)));
  }

  if (g_failures == 0) {
    std::printf("acceptance: 11/11 criteria green\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
