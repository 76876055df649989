#include "softdec/softdec.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "asd.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "curves.hpp"
#include "gf.hpp"
#include "json.hpp"
#include "simulate.hpp"

struct sd_field {
  softdec::FieldPtr f;
};
struct sd_channel {
  softdec::ChannelModel ch;
};
struct sd_code {
  softdec::RSCode code;
};
struct sd_list {
  softdec::DecodeResult res;
};

namespace {

thread_local std::string g_error;

template <typename Fn>
sd_status guard(Fn&& fn) {
  try {
    fn();
    return SD_OK;
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    return SD_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return SD_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_error = e.what();
    return SD_ERR_DOMAIN;
  } catch (const std::overflow_error& e) {
    g_error = e.what();
    return SD_ERR_OVERFLOW;
  } catch (const std::range_error& e) {
    g_error = e.what();
    return SD_ERR_OVERFLOW;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return SD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return SD_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return SD_ERR_INTERNAL;
  }
}

sd_status fail_arg(const char* msg) {
  g_error = msg;
  return SD_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

softdec::SelectPolicy parse_select(const char* select) {
  const std::string s = select ? select : "score";
  if (s == "score") return softdec::SelectPolicy::score;
  if (s == "posterior") return softdec::SelectPolicy::posterior;
  throw std::invalid_argument("select must be score or posterior");
}

}  // namespace

extern "C" {

const char* sd_version(void) { return softdec::tool_version(); }

const char* sd_last_error(void) { return g_error.c_str(); }

void sd_string_free(char* s) { std::free(s); }

/* ---- fields ----------------------------------------------------------- */

sd_status sd_field_new(uint32_t p, uint32_t m, sd_field** out) {
  if (!out) return fail_arg("field output pointer is null");
  return guard([&] {
    auto f = softdec::Field::make(p, m);
    *out = new sd_field{std::move(f)};
  });
}

sd_status sd_field_of_order(uint32_t q, sd_field** out) {
  if (!out) return fail_arg("field output pointer is null");
  return guard([&] {
    auto f = softdec::Field::of_order(q);
    *out = new sd_field{std::move(f)};
  });
}

void sd_field_free(sd_field* f) { delete f; }

uint32_t sd_field_order(const sd_field* f) { return f ? f->f->q() : 0; }

sd_status sd_field_describe(const sd_field* f, char** out) {
  if (!f || !out) return fail_arg("field describe needs a field and output");
  return guard([&] { *out = dup_string(f->f->describe()); });
}

/* ---- channels ---------------------------------------------------------- */

sd_status sd_channel_from_json(const char* json, sd_channel** out) {
  if (!json || !out) return fail_arg("channel parse needs text and output");
  return guard([&] {
    auto ch = softdec::channel_from_json(json);
    *out = new sd_channel{std::move(ch)};
  });
}

void sd_channel_free(sd_channel* ch) { delete ch; }

sd_status sd_channel_stats(const sd_channel* ch, double* p_max, double* p_min,
                           double* gamma) {
  if (!ch) return fail_arg("channel stats needs a channel");
  if (p_max) *p_max = ch->ch.p_max;
  if (p_min) *p_min = ch->ch.p_min;
  if (gamma) *gamma = ch->ch.gamma;
  return SD_OK;
}

sd_status sd_channel_to_json(const sd_channel* ch, char** out) {
  if (!ch || !out) return fail_arg("channel dump needs a channel and output");
  return guard([&] { *out = dup_string(softdec::channel_to_json(ch->ch)); });
}

/* ---- codes -------------------------------------------------------------- */

sd_status sd_code_new(const sd_field* f, uint32_t k, sd_code** out) {
  if (!f || !out) return fail_arg("code construction needs a field and output");
  return guard([&] {
    auto code = softdec::make_rs(f->f, k);
    *out = new sd_code{std::move(code)};
  });
}

void sd_code_free(sd_code* c) { delete c; }

uint32_t sd_code_length(const sd_code* c) { return c ? c->code.n : 0; }

uint32_t sd_code_dimension(const sd_code* c) { return c ? c->code.k : 0; }

sd_status sd_encode(const sd_code* c, const uint32_t* msg, size_t msg_len,
                    uint32_t* cw) {
  if (!c || !msg || !cw) return fail_arg("encode needs a code, message, output");
  if (msg_len != c->code.k) return fail_arg("message length must equal k");
  return guard([&] {
    std::vector<uint32_t> m(msg, msg + msg_len);
    auto word = softdec::rs_encode(c->code, m);
    std::memcpy(cw, word.data(), word.size() * sizeof(uint32_t));
  });
}

sd_status sd_bm_decode(const sd_code* c, const uint32_t* received, size_t len,
                       uint32_t* msg, uint32_t* cw, int* ok) {
  if (!c || !received || !ok)
    return fail_arg("decode needs a code, received word and ok flag");
  if (len != c->code.n) return fail_arg("received length must equal n");
  return guard([&] {
    std::vector<uint32_t> y(received, received + len);
    auto res = softdec::bm_decode(c->code, y);
    *ok = res.ok ? 1 : 0;
    if (res.ok) {
      if (msg)
        std::memcpy(msg, res.message.data(),
                    res.message.size() * sizeof(uint32_t));
      if (cw)
        std::memcpy(cw, res.codeword.data(),
                    res.codeword.size() * sizeof(uint32_t));
    }
  });
}

sd_status sd_gs_decode(const sd_code* c, const uint32_t* received, size_t len,
                       uint32_t mult, sd_list** out) {
  if (!c || !received || !out)
    return fail_arg("decode needs a code, received word and output");
  if (len != c->code.n) return fail_arg("received length must equal n");
  return guard([&] {
    std::vector<uint32_t> y(received, received + len);
    auto res = softdec::gs_decode(c->code, y, mult);
    *out = new sd_list{std::move(res)};
  });
}

sd_status sd_asd_decode(const sd_code* c, const sd_channel* ch,
                        const uint32_t* received, size_t len, uint32_t lambda,
                        const char* select, sd_list** out) {
  if (!c || !ch || !received || !out)
    return fail_arg("decode needs a code, channel, received word and output");
  if (len != c->code.n) return fail_arg("received length must equal n");
  return guard([&] {
    std::vector<uint32_t> y(received, received + len);
    auto res = softdec::asd_decode(c->code, ch->ch, y, lambda,
                                   parse_select(select));
    *out = new sd_list{std::move(res)};
  });
}

size_t sd_list_size(const sd_list* l) { return l ? l->res.list.size() : 0; }

int sd_list_selected(const sd_list* l) { return l ? l->res.selected : -1; }

sd_status sd_list_message(const sd_list* l, size_t i, uint32_t* msg, size_t k) {
  if (!l || !msg) return fail_arg("list access needs a list and output");
  if (i >= l->res.list.size()) return fail_arg("list index out of range");
  const auto& m = l->res.list[i].message;
  if (k != m.size()) return fail_arg("message buffer must hold k symbols");
  std::memcpy(msg, m.data(), m.size() * sizeof(uint32_t));
  return SD_OK;
}

sd_status sd_list_codeword(const sd_list* l, size_t i, uint32_t* cw, size_t n) {
  if (!l || !cw) return fail_arg("list access needs a list and output");
  if (i >= l->res.list.size()) return fail_arg("list index out of range");
  const auto& c = l->res.list[i].codeword;
  if (n != c.size()) return fail_arg("codeword buffer must hold n symbols");
  std::memcpy(cw, c.data(), c.size() * sizeof(uint32_t));
  return SD_OK;
}

sd_status sd_list_score(const sd_list* l, size_t i, uint64_t* score) {
  if (!l || !score) return fail_arg("list access needs a list and output");
  if (i >= l->res.list.size()) return fail_arg("list index out of range");
  *score = l->res.list[i].score;
  return SD_OK;
}

void sd_list_free(sd_list* l) { delete l; }

/* ---- bounds ------------------------------------------------------------- */

sd_status sd_radius_bm(double rate, double* out) {
  if (!out) return fail_arg("radius output pointer is null");
  return guard([&] { *out = softdec::radius_bm(rate); });
}

sd_status sd_radius_gs(double rate, double* out) {
  if (!out) return fail_arg("radius output pointer is null");
  return guard([&] { *out = softdec::radius_gs(rate); });
}

sd_status sd_radius_asd(double rate, double p_max, double p_min, double gamma,
                        double lambda, double* raw, double* clipped) {
  if (!raw && !clipped) return fail_arg("radius needs an output pointer");
  return guard([&] {
    auto r = softdec::radius_asd(rate, p_max, p_min, gamma, lambda);
    if (raw) *raw = r.raw;
    if (clipped) *clipped = r.clipped;
  });
}

sd_status sd_gs_crossover_rate(const sd_channel* ch, double lambda,
                               double* out) {
  if (!ch || !out) return fail_arg("crossover needs a channel and output");
  return guard([&] { *out = softdec::gs_crossover_rate(ch->ch, lambda); });
}

sd_status sd_always_on_list_rate(const sd_channel* ch, double lambda,
                                 double* out) {
  if (!ch || !out) return fail_arg("rate bound needs a channel and output");
  return guard([&] { *out = softdec::always_on_list_rate(ch->ch, lambda); });
}

sd_status sd_list_size_bound(uint64_t cost, uint32_t k, uint64_t* out) {
  if (!out) return fail_arg("bound output pointer is null");
  return guard([&] { *out = softdec::list_size_bound(cost, k); });
}

sd_status sd_list_size_bound_channel(uint32_t n, double lambda, double gamma,
                                     uint32_t k, uint64_t* out) {
  if (!out) return fail_arg("bound output pointer is null");
  return guard(
      [&] { *out = softdec::list_size_bound_channel(n, lambda, gamma, k); });
}

sd_status sd_exponent_a(const sd_channel* ch, double rate, double lambda,
                        double* value, double* s_star, int* infinite) {
  if (!ch || !value) return fail_arg("exponent needs a channel and output");
  return guard([&] {
    auto r = softdec::exponent_A_opt(rate, ch->ch, lambda);
    *value = r.infinite ? HUGE_VAL : r.value;
    if (s_star) *s_star = r.s_star;
    if (infinite) *infinite = r.infinite ? 1 : 0;
  });
}

sd_status sd_exponent_b(const sd_channel* ch, double rate, double lambda,
                        double* value, double* s_star) {
  if (!ch || !value) return fail_arg("exponent needs a channel and output");
  return guard([&] {
    auto r = softdec::exponent_B_opt(rate, ch->ch, lambda);
    *value = r.value;
    if (s_star) *s_star = r.s_star;
  });
}

sd_status sd_radius_pv(const sd_channel* ch, double rate, double lambda,
                       uint32_t mvars, const char* form, double* raw,
                       double* clipped) {
  if (!ch || (!raw && !clipped))
    return fail_arg("radius needs a channel and an output pointer");
  return guard([&] {
    const std::string f = form ? form : "product";
    softdec::PVForm pf;
    if (f == "product") {
      pf = softdec::PVForm::product;
    } else if (f == "binomial") {
      pf = softdec::PVForm::binomial;
    } else {
      throw std::invalid_argument("form must be product or binomial");
    }
    auto r = softdec::radius_pv(rate, ch->ch, lambda, mvars, pf);
    if (raw) *raw = r.raw;
    if (clipped) *clipped = r.clipped;
  });
}

/* ---- tables and campaigns ------------------------------------------------ */

sd_status sd_curves_preset(const char* name, char** out_csv) {
  if (!name || !out_csv) return fail_arg("table needs a name and output");
  return guard([&] { *out_csv = dup_string(softdec::preset_table(name).csv()); });
}

sd_status sd_curves_custom(const char* channel_json, double lambda,
                           double start, double stop, double step,
                           uint32_t mvars, const char* pv_form,
                           char** out_csv) {
  if (!channel_json || !out_csv)
    return fail_arg("table needs a channel and output");
  return guard([&] {
    softdec::CurveParams p;
    p.ch = softdec::channel_from_json(channel_json);
    p.lambda = lambda;
    p.mvars = mvars == 0 ? 2 : mvars;
    const std::string form = pv_form ? pv_form : "product";
    if (form == "product") {
      p.form = softdec::PVForm::product;
    } else if (form == "binomial") {
      p.form = softdec::PVForm::binomial;
    } else {
      throw std::invalid_argument("pv form must be product or binomial");
    }

    const auto rates = softdec::expand_grid(start, stop, step);
    const auto bm = softdec::sample_curve("bm", p, rates);
    const auto gs = softdec::sample_curve("gs", p, rates);
    const auto asd = softdec::sample_curve("asd", p, rates);
    const auto pv = softdec::sample_curve("pv", p, rates);
    const auto ea = softdec::sample_curve("exp_a", p, rates);
    const auto eb = softdec::sample_curve("exp_b", p, rates);

    softdec::CurveTable t;
    t.meta = {{"table", "custom"},
              {"channel", p.ch.name},
              {"field", p.ch.f->describe()},
              {"lambda", fmt_g(lambda)},
              {"mvars", std::to_string(p.mvars)},
              {"pv_form", form},
              {"grid", fmt_g(start) + ":" + fmt_g(stop) + ":" + fmt_g(step)}};
    t.columns = {"rate",        "tau_bm", "tau_gs", "tau_asd",
                 "tau_asd_raw", "tau_pv", "e_a",    "e_b"};
    for (size_t i = 0; i < rates.size(); ++i) {
      t.rows.push_back({rates[i], bm.pts[i].value, gs.pts[i].value,
                        asd.pts[i].value, asd.pts[i].raw, pv.pts[i].value,
                        ea.pts[i].value, eb.pts[i].value});
    }
    *out_csv = dup_string(t.csv());
  });
}

sd_status sd_simulate(const char* trial_spec_json, char** out_report_json,
                      int* pass) {
  if (!trial_spec_json || !out_report_json)
    return fail_arg("campaign needs a trial spec and output");
  return guard([&] {
    auto spec = softdec::parse_trial_spec(trial_spec_json);
    auto rep = softdec::run_campaign(spec);
    *out_report_json = dup_string(rep.json);
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

}  /* extern "C" */
