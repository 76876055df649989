// Command-line front end. Talks to the library exclusively through the
// public C interface; JSON/argument handling here is tool plumbing.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "softdec/softdec.h"

namespace {

struct FieldDel {
  void operator()(sd_field* p) const { sd_field_free(p); }
};
struct ChannelDel {
  void operator()(sd_channel* p) const { sd_channel_free(p); }
};
struct CodeDel {
  void operator()(sd_code* p) const { sd_code_free(p); }
};
struct ListDel {
  void operator()(sd_list* p) const { sd_list_free(p); }
};
using FieldPtr = std::unique_ptr<sd_field, FieldDel>;
using ChannelPtr = std::unique_ptr<sd_channel, ChannelDel>;
using CodePtr = std::unique_ptr<sd_code, CodeDel>;
using ListPtr = std::unique_ptr<sd_list, ListDel>;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(sd_status st, const char* what) {
  if (st != SD_OK)
    throw CliError(std::string(what) + ": " + sd_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read " + path);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write " + path);
  out << text;
  if (!out) throw CliError("write failed on " + path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Inline JSON, a file path, or preset shorthand "name:q[:p_correct]"
// (presets: noiseless, typewriter, two_error, qsym).
std::string channel_arg_to_json(const std::string& arg) {
  if (arg.empty()) throw CliError("empty channel argument");
  if (arg.front() == '{') return arg;
  {
    std::ifstream probe(arg);
    if (probe.good()) return read_file(arg);
  }
  const auto parts = split(arg, ':');
  if (parts.size() < 2)
    throw CliError("channel must be JSON, a readable file, or shorthand "
                   "name:q[:p_correct], e.g. typewriter:16:0.8");
  nlohmann::json j;
  j["preset"] = parts[0];
  j["q"] = (uint32_t)std::stoul(parts[1]);
  if (parts.size() > 2) j["p_correct"] = std::stod(parts[2]);
  return j.dump();
}

uint32_t parse_hex_symbol(const std::string& tok, uint32_t q) {
  size_t used = 0;
  unsigned long v;
  try {
    v = std::stoul(tok, &used, 16);
  } catch (const std::exception&) {
    throw CliError("bad symbol token: " + tok);
  }
  if (used != tok.size()) throw CliError("bad symbol token: " + tok);
  if (v >= q) throw CliError("symbol " + tok + " exceeds the field order");
  return (uint32_t)v;
}

std::vector<uint32_t> parse_symbols(const std::vector<std::string>& toks,
                                    uint32_t q) {
  std::vector<uint32_t> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_hex_symbol(t, q));
  return out;
}

std::string format_symbols(const std::vector<uint32_t>& v) {
  std::string out;
  char buf[16];
  for (size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%x", v[i]);
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

std::vector<std::string> tokens_from(const std::vector<std::string>& args,
                                     const std::string& in_path) {
  if (!in_path.empty()) {
    std::istringstream ss(read_file(in_path));
    return {std::istream_iterator<std::string>(ss),
            std::istream_iterator<std::string>()};
  }
  return args;
}

nlohmann::ordered_json list_to_json(const sd_list* list, uint32_t k,
                                    uint32_t n) {
  nlohmann::ordered_json out;
  const size_t sz = sd_list_size(list);
  out["list_size"] = sz;
  out["selected"] = sd_list_selected(list);
  nlohmann::ordered_json cands = nlohmann::ordered_json::array();
  std::vector<uint32_t> msg(k), cw(n);
  for (size_t i = 0; i < sz; ++i) {
    check(sd_list_message(list, i, msg.data(), k), "list access");
    check(sd_list_codeword(list, i, cw.data(), n), "list access");
    uint64_t score = 0;
    check(sd_list_score(list, i, &score), "list access");
    nlohmann::ordered_json c;
    c["message"] = format_symbols(msg);
    c["codeword"] = format_symbols(cw);
    c["score"] = score;
    cands.push_back(std::move(c));
  }
  out["candidates"] = std::move(cands);
  return out;
}

struct CurvesArgs {
  std::string preset, channel, grid = "0.01:0.99:0.01";
  std::string form = "product", out;
  int64_t lambda = 100;
  uint32_t mvars = 2;
};

int run_curves(const CurvesArgs& a) {
  char* csv = nullptr;
  if (!a.preset.empty()) {
    check(sd_curves_preset(a.preset.c_str(), &csv), "curves");
  } else {
    if (a.channel.empty())
      throw CliError("curves needs --preset or --channel");
    const auto parts = split(a.grid, ':');
    if (parts.size() != 3)
      throw CliError("--rate-grid must be start:stop:step");
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const double step = std::stod(parts[2]);
    const std::string cj = channel_arg_to_json(a.channel);
    check(sd_curves_custom(cj.c_str(), (double)a.lambda, start, stop, step,
                           a.mvars, a.form.c_str(), &csv),
          "curves");
  }
  std::string text = csv;
  sd_string_free(csv);
  write_output(a.out, text);
  return 0;
}

struct SimulateArgs {
  std::string spec, out;
  uint64_t seed = 0;
  bool seed_given = false;
  uint32_t workers = 0;
};

int run_simulate(const SimulateArgs& a) {
  const std::string text =
      (!a.spec.empty() && a.spec.front() == '{') ? a.spec : read_file(a.spec);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError(std::string("trial spec is not valid JSON: ") + e.what());
  }
  if (a.seed_given) {
    j["seed"] = a.seed;
  } else if (!j.contains("seed")) {
    if (const char* env = std::getenv("SOFTDEC_SEED"))
      j["seed"] = (uint64_t)std::strtoull(env, nullptr, 0);
  }
  if (a.workers > 0) j["workers"] = a.workers;

  char* rep = nullptr;
  int pass = 0;
  check(sd_simulate(j.dump().c_str(), &rep, &pass), "simulate");
  std::string out = rep;
  sd_string_free(rep);
  write_output(a.out, out);
  std::fprintf(stderr, "campaign assertions: %s\n", pass ? "pass" : "FAIL");
  return pass ? 0 : 1;
}

struct CodecArgs {
  uint32_t q = 0, k = 0;
  std::string in, out;
  std::vector<std::string> symbols;
  // decode only
  std::string algo = "bm", channel, select = "score";
  uint32_t lambda = 30, mult = 1;
};

CodePtr make_code(const CodecArgs& a, FieldPtr& field) {
  sd_field* f = nullptr;
  check(sd_field_of_order(a.q, &f), "field");
  field.reset(f);
  sd_code* c = nullptr;
  check(sd_code_new(field.get(), a.k, &c), "code");
  return CodePtr(c);
}

int run_encode(const CodecArgs& a) {
  FieldPtr field;
  CodePtr code = make_code(a, field);
  const uint32_t n = sd_code_length(code.get());
  const auto toks = tokens_from(a.symbols, a.in);
  const auto msg = parse_symbols(toks, a.q);
  if (msg.size() != a.k)
    throw CliError("encode expects exactly k = " + std::to_string(a.k) +
                   " symbols, got " + std::to_string(msg.size()));
  std::vector<uint32_t> cw(n);
  check(sd_encode(code.get(), msg.data(), msg.size(), cw.data()), "encode");
  write_output(a.out, format_symbols(cw) + "\n");
  return 0;
}

int run_decode(const CodecArgs& a) {
  FieldPtr field;
  CodePtr code = make_code(a, field);
  const uint32_t n = sd_code_length(code.get());
  const auto toks = tokens_from(a.symbols, a.in);
  const auto y = parse_symbols(toks, a.q);
  if (y.size() != n)
    throw CliError("decode expects exactly n = " + std::to_string(n) +
                   " symbols, got " + std::to_string(y.size()));

  nlohmann::ordered_json out;
  out["algo"] = a.algo;
  if (a.algo == "bm") {
    std::vector<uint32_t> msg(a.k), cw(n);
    int ok = 0;
    check(sd_bm_decode(code.get(), y.data(), y.size(), msg.data(), cw.data(),
                       &ok),
          "decode");
    out["ok"] = ok != 0;
    if (ok) {
      out["message"] = format_symbols(msg);
      out["codeword"] = format_symbols(cw);
    }
  } else if (a.algo == "gs") {
    sd_list* raw = nullptr;
    check(sd_gs_decode(code.get(), y.data(), y.size(), a.mult, &raw),
          "decode");
    ListPtr list(raw);
    out.update(list_to_json(list.get(), a.k, n));
  } else if (a.algo == "asd") {
    if (a.channel.empty()) throw CliError("asd decoding needs --channel");
    const std::string cj = channel_arg_to_json(a.channel);
    sd_channel* chraw = nullptr;
    check(sd_channel_from_json(cj.c_str(), &chraw), "channel");
    ChannelPtr ch(chraw);
    sd_list* raw = nullptr;
    check(sd_asd_decode(code.get(), ch.get(), y.data(), y.size(), a.lambda,
                        a.select.c_str(), &raw),
          "decode");
    ListPtr list(raw);
    out.update(list_to_json(list.get(), a.k, n));
  } else {
    throw CliError("unknown decoder: " + a.algo + " (bm, gs or asd)");
  }
  write_output(a.out, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft-decision list decoding of Reed-Solomon codes: closed-"
               "form bound tables, Monte Carlo campaigns, one-shot codecs"};
  app.set_version_flag("--version", sd_version());
  app.require_subcommand(1);

  CurvesArgs ca;
  CLI::App* curves =
      app.add_subcommand("curves", "emit bound curves as deterministic CSV");
  curves->add_option("--preset", ca.preset,
                     "named table: fig1a|fig1b|fig1c|fig2|fig3|fig4");
  curves->add_option("--channel", ca.channel,
                     "channel JSON file, inline JSON, or name:q[:p_correct]");
  curves->add_option("--lambda", ca.lambda, "multiplicity budget")
      ->capture_default_str();
  curves->add_option("--rate-grid", ca.grid, "start:stop:step")
      ->capture_default_str();
  curves->add_option("--mvars", ca.mvars, "variables in the multivariate bound")
      ->capture_default_str();
  curves->add_option("--form", ca.form, "multivariate form: product|binomial")
      ->capture_default_str();
  curves->add_option("--out", ca.out, "output path (default stdout)");

  SimulateArgs sa;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run a Monte Carlo campaign from a JSON trial spec");
  simulate->add_option("--spec", sa.spec, "trial spec file or inline JSON")
      ->required();
  simulate->add_option("--seed", sa.seed,
                       "override the spec seed (env SOFTDEC_SEED is the "
                       "fallback when neither is given)");
  simulate->add_option("--workers", sa.workers, "override the spec workers");
  simulate->add_option("--out", sa.out, "report path (default stdout)");

  CLI::App* codec =
      app.add_subcommand("codec", "encode or decode single words");
  codec->require_subcommand(1);
  CodecArgs ea, da;
  CLI::App* enc = codec->add_subcommand("encode", "message -> codeword");
  enc->add_option("--q", ea.q, "field order")->required();
  enc->add_option("--k", ea.k, "code dimension")->required();
  enc->add_option("--in", ea.in, "read symbols from a file");
  enc->add_option("--out", ea.out, "output path (default stdout)");
  enc->add_option("symbols", ea.symbols, "k hex symbols (canonical indices)");

  CLI::App* dec = codec->add_subcommand(
      "decode", "received word -> decoder output as JSON");
  dec->add_option("--q", da.q, "field order")->required();
  dec->add_option("--k", da.k, "code dimension")->required();
  dec->add_option("--algo", da.algo, "bm|gs|asd")->capture_default_str();
  dec->add_option("--channel", da.channel,
                  "channel (required for asd): JSON file, inline JSON, or "
                  "name:q[:p_correct]");
  dec->add_option("--lambda", da.lambda, "multiplicity budget for asd")
      ->capture_default_str();
  dec->add_option("--mult", da.mult, "uniform multiplicity for gs")
      ->capture_default_str();
  dec->add_option("--select", da.select, "asd ranking: score|posterior")
      ->capture_default_str();
  dec->add_option("--in", da.in, "read symbols from a file");
  dec->add_option("--out", da.out, "output path (default stdout)");
  dec->add_option("symbols", da.symbols, "n hex symbols (canonical indices)");

  CLI11_PARSE(app, argc, argv);
  sa.seed_given = simulate->count("--seed") > 0;

  try {
    if (curves->parsed()) return run_curves(ca);
    if (simulate->parsed()) return run_simulate(sa);
    if (codec->parsed()) {
      if (enc->parsed()) return run_encode(ea);
      if (dec->parsed()) return run_decode(da);
    }
    throw CliError("no subcommand given");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "softdec: %s\n", e.what());
    return 2;
  }
}
