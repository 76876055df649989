#include "curves.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace softdec {

std::vector<double> expand_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (!(start > 0.0 && stop < 1.0 && start <= stop))
    throw std::invalid_argument("grid must lie in (0, 1)");
  std::vector<double> rates;
  size_t count = (size_t)std::floor((stop - start) / step + 1e-9) + 1;
  rates.reserve(count);
  for (size_t i = 0; i < count; ++i) rates.push_back(start + (double)i * step);
  return rates;
}

BoundCurve sample_curve(const std::string& bound_id, const CurveParams& p,
                        const std::vector<double>& rates) {
  BoundCurve curve;
  curve.label = bound_id;
  for (size_t i = 1; i < rates.size(); ++i)
    if (!(rates[i] > rates[i - 1]))
      throw std::invalid_argument("rates must be strictly increasing");

  for (double r : rates) {
    CurvePoint pt;
    pt.rate = r;
    if (bound_id == "bm") {
      pt.raw = pt.value = radius_bm(r);
    } else if (bound_id == "gs") {
      pt.raw = pt.value = radius_gs(r);
    } else if (bound_id == "asd") {
      RadiusValue v = radius_asd(r, p.ch, p.lambda);
      pt.raw = v.raw;
      pt.value = v.clipped;
    } else if (bound_id == "pv") {
      RadiusValue v = radius_pv(r, p.ch, p.lambda, p.mvars, p.form);
      pt.raw = v.raw;
      pt.value = v.clipped;
    } else if (bound_id == "exp_a") {
      ExponentResult e = exponent_A_opt(r, p.ch, p.lambda);
      pt.raw = e.raw;
      pt.value = e.value;
    } else if (bound_id == "exp_b") {
      ExponentResult e = exponent_B_opt(r, p.ch, p.lambda);
      pt.raw = e.raw;
      pt.value = e.value;
    } else if (bound_id == "hamming_cost") {
      double lo = (1.0 - p.eps) / (p.n + 1.0), hi = 1.0 - p.eps;
      if (r < lo || r > hi) continue;
      pt.raw = pt.value = koetter_hamming_radius(r, p.n, p.eps);
    } else {
      throw std::invalid_argument("unknown bound id: " + bound_id);
    }
    curve.pts.push_back(pt);
  }
  return curve;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string stat_string(const ChannelModel& ch) {
  return ch.name + " p_max=" + fmt(ch.p_max) + " p_min=" + fmt(ch.p_min) +
         " gamma=" + fmt(ch.gamma) + " q=" + fmt((double)ch.p.size());
}

CurveTable radius_bundle(const char* name, const ChannelModel& ch,
                         double lambda) {
  CurveParams p;
  p.ch = ch;
  p.lambda = lambda;
  auto rates = expand_grid(0.01, 0.99, 0.01);
  BoundCurve bm = sample_curve("bm", p, rates);
  BoundCurve gs = sample_curve("gs", p, rates);
  BoundCurve asd = sample_curve("asd", p, rates);

  CurveTable t;
  t.meta = {{"preset", name},
            {"channel", stat_string(ch)},
            {"lambda", fmt(lambda)}};
  t.columns = {"rate", "tau_bm", "tau_gs", "tau_asd", "tau_asd_raw"};
  for (size_t i = 0; i < rates.size(); ++i)
    t.rows.push_back({rates[i], bm.pts[i].value, gs.pts[i].value,
                      asd.pts[i].value, asd.pts[i].raw});
  return t;
}

}  // namespace

const char* tool_version() { return "softdec 1.0.0"; }

std::string CurveTable::csv() const {
  std::string out = std::string("# version: ") + tool_version() + "\n";
  for (const auto& [key, val] : meta) out += "# " + key + ": " + val + "\n";
  for (size_t i = 0; i < columns.size(); ++i)
    out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out += (i ? "," : "") + fmt(row[i]);
    out += "\n";
  }
  return out;
}

CurveTable preset_table(const std::string& name) {
  if (name == "fig1a") {
    auto f = Field::make(2, 8);
    return radius_bundle("fig1a", typewriter_channel(f, 0.8), 100.0);
  }
  if (name == "fig1b") {
    auto f = Field::make(2, 8);
    return radius_bundle("fig1b", two_error_channel(f, 0.8), 100.0);
  }
  if (name == "fig1c") {
    auto f = Field::make(2, 4);
    return radius_bundle("fig1c", symmetric_channel(f, 0.805), 100.0);
  }
  if (name == "fig2") {
    const uint32_t n = 255;
    const double lambda = 100.0, gamma = 0.68;
    CurveTable t;
    t.meta = {{"preset", "fig2"},
              {"n", fmt(n)},
              {"lambda", fmt(lambda)},
              {"gamma", fmt(gamma)}};
    t.columns = {"k", "list_bound"};
    for (uint32_t k = 2; k < n; ++k)
      t.rows.push_back(
          {(double)k, (double)list_size_bound_channel(n, lambda, gamma, k)});
    return t;
  }
  if (name == "fig3") {
    auto f = Field::make(2, 8);
    CurveParams p;
    p.ch = typewriter_channel(f, 0.8);
    p.lambda = 100.0;
    auto rates = expand_grid(0.01, 0.99, 0.01);
    BoundCurve ea = sample_curve("exp_a", p, rates);
    BoundCurve eb = sample_curve("exp_b", p, rates);
    CurveTable t;
    t.meta = {{"preset", "fig3"},
              {"channel", stat_string(p.ch)},
              {"lambda", fmt(p.lambda)}};
    t.columns = {"rate", "e_a", "e_b", "e_a_raw", "e_b_raw"};
    for (size_t i = 0; i < rates.size(); ++i)
      t.rows.push_back({rates[i], ea.pts[i].value, eb.pts[i].value,
                        ea.pts[i].raw, eb.pts[i].raw});
    return t;
  }
  if (name == "fig4") {
    auto f = Field::make(2, 8);
    CurveParams p;
    p.ch = typewriter_channel(f, 0.8);
    p.lambda = 100.0;
    p.mvars = 2;
    auto rates = expand_grid(0.01, 0.99, 0.01);
    BoundCurve asd = sample_curve("asd", p, rates);
    p.form = PVForm::product;
    BoundCurve pvp = sample_curve("pv", p, rates);
    p.form = PVForm::binomial;
    BoundCurve pvb = sample_curve("pv", p, rates);
    CurveTable t;
    t.meta = {{"preset", "fig4"},
              {"channel", stat_string(p.ch)},
              {"lambda", fmt(p.lambda)},
              {"mvars", "2"}};
    t.columns = {"rate", "tau_asd", "tau_pv_product", "tau_pv_binomial"};
    for (size_t i = 0; i < rates.size(); ++i)
      t.rows.push_back({rates[i], asd.pts[i].value, pvp.pts[i].value,
                        pvb.pts[i].value});
    return t;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace softdec
