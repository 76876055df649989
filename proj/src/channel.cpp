#include "channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace softdec {

ChannelModel make_channel(const FieldPtr& f, std::vector<double> pmf, std::string name) {
  if (pmf.size() != f->q()) throw std::invalid_argument("pmf size must equal field order");
  double sum = 0;
  for (double x : pmf) {
    if (!(x >= 0.0)) throw std::invalid_argument("pmf entries must be >= 0");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("pmf must sum to 1");

  ChannelModel ch;
  ch.f = f;
  ch.p = std::move(pmf);
  ch.name = std::move(name);
  uint32_t positives = 0;
  double pmin_pos = 1.0;
  for (double x : ch.p) {
    ch.p_max = std::max(ch.p_max, x);
    ch.gamma += x * x;
    if (x > 0.0) {
      ++positives;
      pmin_pos = std::min(pmin_pos, x);
    }
  }
  ch.p_min = positives <= 1 ? 0.0 : pmin_pos;
  if (!(ch.p_max > ch.p_min))
    throw std::invalid_argument("channel needs p_max strictly above p_min");
  return ch;
}

ChannelModel typewriter_channel(const FieldPtr& f, double p_correct) {
  if (!(p_correct > 0.0 && p_correct < 1.0))
    throw std::invalid_argument("p_correct must lie in (0, 1)");
  std::vector<double> p(f->q(), 0.0);
  p[0] = p_correct;
  p[f->generator()] = 1.0 - p_correct;
  return make_channel(f, std::move(p), "typewriter");
}

ChannelModel two_error_channel(const FieldPtr& f, double p_correct) {
  if (!(p_correct > 0.0 && p_correct < 1.0))
    throw std::invalid_argument("p_correct must lie in (0, 1)");
  if (f->q() < 4) throw std::invalid_argument("needs q >= 4");
  std::vector<double> p(f->q(), 0.0);
  p[0] = p_correct;
  uint32_t g = f->generator();
  p[g] = (1.0 - p_correct) / 2.0;
  p[f->mul(g, g)] = (1.0 - p_correct) / 2.0;
  return make_channel(f, std::move(p), "two_error");
}

ChannelModel symmetric_channel(const FieldPtr& f, double p_correct) {
  if (!(p_correct > 0.0 && p_correct < 1.0))
    throw std::invalid_argument("p_correct must lie in (0, 1)");
  if (f->q() < 2) throw std::invalid_argument("needs q >= 2");
  std::vector<double> p(f->q(), (1.0 - p_correct) / (f->q() - 1));
  p[0] = p_correct;
  return make_channel(f, std::move(p), "qsym");
}

ChannelModel noiseless_channel(const FieldPtr& f) {
  std::vector<double> p(f->q(), 0.0);
  p[0] = 1.0;
  return make_channel(f, std::move(p), "noiseless");
}

ChannelModel channel_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FieldPtr f;
  if (j.contains("q"))
    f = Field::of_order(j.at("q").get<uint32_t>());
  else if (j.contains("field"))
    f = Field::make(j.at("field").at("p").get<uint32_t>(),
                    j.at("field").at("m").get<uint32_t>());
  else
    throw std::invalid_argument("channel config needs \"q\" or \"field\"");

  if (j.contains("pmf")) {
    auto pmf = j.at("pmf").get<std::vector<double>>();
    // keep the label when reparsing our own serialized form
    return make_channel(f, std::move(pmf), j.value("name", std::string("custom")));
  }
  std::string preset = j.at("preset").get<std::string>();
  if (preset == "noiseless") return noiseless_channel(f);
  if (preset != "typewriter" && preset != "two_error" && preset != "qsym")
    throw std::invalid_argument("unknown channel preset: " + preset);
  double pc = j.at("p_correct").get<double>();
  if (preset == "typewriter") return typewriter_channel(f, pc);
  if (preset == "two_error") return two_error_channel(f, pc);
  return symmetric_channel(f, pc);
}

std::string channel_to_json(const ChannelModel& ch) {
  nlohmann::ordered_json j;
  j["field"] = {{"p", ch.f->p()}, {"m", ch.f->m()}};
  j["name"] = ch.name;
  j["pmf"] = ch.p;
  j["p_max"] = ch.p_max;
  j["p_min"] = ch.p_min;
  j["gamma"] = ch.gamma;
  return j.dump();
}

Posterior posterior_matrix(const ChannelModel& ch, const std::vector<uint32_t>& y) {
  const uint32_t q = ch.f->q(), n = (uint32_t)y.size();
  Posterior out;
  out.q = q;
  out.n = n;
  out.v.resize((size_t)q * n);
  for (uint32_t j = 0; j < n; ++j) {
    if (y[j] >= q) throw std::invalid_argument("received symbol out of range");
    for (uint32_t i = 0; i < q; ++i)
      out.v[(size_t)i * n + j] = ch.p[ch.f->sub(y[j], i)];
  }
  return out;
}

std::vector<uint32_t> sample_error(const ChannelModel& ch, uint32_t n, Rng& rng) {
  std::vector<uint32_t> e(n);
  for (uint32_t j = 0; j < n; ++j) e[j] = rng.discrete(ch.p);
  return e;
}

std::vector<uint32_t> sample_error_weight(const ChannelModel& ch, uint32_t n,
                                          uint32_t t, Rng& rng) {
  if (t > n) throw std::invalid_argument("weight exceeds length");
  std::vector<double> cond(ch.p);
  cond[0] = 0.0;
  double mass = 0;
  for (double x : cond) mass += x;
  if (t > 0) {
    if (mass <= 0.0) throw std::invalid_argument("channel has no error mass");
    for (double& x : cond) x /= mass;
  }

  // choose t distinct positions by partial Fisher-Yates
  std::vector<uint32_t> idx(n);
  for (uint32_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<uint32_t> e(n, 0);
  for (uint32_t i = 0; i < t; ++i) {
    uint32_t r = i + rng.index(n - i);
    std::swap(idx[i], idx[r]);
    e[idx[i]] = rng.discrete(cond);
  }
  return e;
}

std::vector<uint32_t> apply_error(const ChannelModel& ch, const std::vector<uint32_t>& c,
                                  const std::vector<uint32_t>& e) {
  if (c.size() != e.size()) throw std::invalid_argument("length mismatch");
  std::vector<uint32_t> y(c.size());
  for (size_t j = 0; j < c.size(); ++j) y[j] = ch.f->add(c[j], e[j]);
  return y;
}

}  // namespace softdec
