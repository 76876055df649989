#include "asd.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace softdec {
namespace {

using u128 = unsigned __int128;

u128 checked_mul(u128 a, u128 b) {
  if (b != 0 && a > ~(u128)0 / b) throw std::overflow_error("count overflow");
  return a * b;
}

// canonical message order: index sum u_i q^(i-1), so high coefficients weigh most
bool message_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void check_word(const MultMatrix& mm, const std::vector<uint32_t>& word) {
  if (word.size() != mm.n)
    throw std::invalid_argument("word length does not match the matrix");
  for (uint32_t s : word)
    if (s >= mm.q) throw std::invalid_argument("symbol out of range");
}

std::vector<uint32_t> gauss_solve(const Field& f, std::vector<uint32_t> a,
                                  std::vector<uint32_t> rhs, uint32_t n) {
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t piv = col;
    while (piv < n && a[(size_t)piv * n + col] == 0) ++piv;
    if (piv == n) return {};
    if (piv != col) {
      for (uint32_t j = 0; j < n; ++j)
        std::swap(a[(size_t)piv * n + j], a[(size_t)col * n + j]);
      std::swap(rhs[piv], rhs[col]);
    }
    uint32_t s = f.inv(a[(size_t)col * n + col]);
    for (uint32_t j = col; j < n; ++j)
      a[(size_t)col * n + j] = f.mul(s, a[(size_t)col * n + j]);
    rhs[col] = f.mul(s, rhs[col]);
    for (uint32_t r = 0; r < n; ++r) {
      if (r == col) continue;
      uint32_t c = a[(size_t)r * n + col];
      if (c == 0) continue;
      for (uint32_t j = col; j < n; ++j)
        a[(size_t)r * n + j] =
            f.sub(a[(size_t)r * n + j], f.mul(c, a[(size_t)col * n + j]));
      rhs[r] = f.sub(rhs[r], f.mul(c, rhs[col]));
    }
  }
  return rhs;
}

}  // namespace

MultMatrix pmas(const Posterior& post, uint32_t lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  MultMatrix mm;
  mm.q = post.q;
  mm.n = post.n;
  mm.m.resize(post.v.size());
  for (size_t i = 0; i < post.v.size(); ++i)
    mm.m[i] = (uint32_t)std::floor((double)lambda * post.v[i]);
  return mm;
}

uint64_t total_cost(const MultMatrix& mm) {
  uint64_t c = 0;
  for (uint32_t v : mm.m) c += (uint64_t)v * (v + 1) / 2;
  return c;
}

uint64_t score_of(const MultMatrix& mm, const std::vector<uint32_t>& word) {
  check_word(mm, word);
  uint64_t s = 0;
  for (uint32_t j = 0; j < mm.n; ++j) s += mm.at(word[j], j);
  return s;
}

ThresholdCheck threshold_ok(const MultMatrix& mm,
                            const std::vector<uint32_t>& word, uint32_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  uint64_t s = score_of(mm, word);
  uint64_t c = total_cost(mm);
  u128 lhs = (u128)s * s;
  u128 rhs = (u128)2 * (k - 1) * c;
  return {lhs > rhs, (double)lhs - (double)rhs};
}

uint64_t pv_constraint_count(const MultMatrix& mm, uint32_t mvars,
                             PVForm form) {
  if (mvars < 1 || mvars > 16)
    throw std::invalid_argument("variable count must lie in 1..16");
  u128 fact = 1;
  for (uint32_t l = 2; l <= mvars + 1; ++l) fact *= l;
  u128 acc = 0;
  for (uint32_t v : mm.m) {
    if (v == 0) continue;
    u128 term = 1;
    for (uint32_t l = 0; l <= mvars; ++l) term = checked_mul(term, v + (u128)l);
    if (form == PVForm::binomial) term /= fact;  // M+1 consecutive factors
    if (term > (u128)UINT64_MAX - acc)
      throw std::overflow_error("count overflow");
    acc += term;
  }
  return (uint64_t)acc;
}

ThresholdCheck pv_threshold_ok(const MultMatrix& mm,
                               const std::vector<uint32_t>& word, uint32_t k,
                               uint32_t mvars, PVForm form) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  uint64_t s = score_of(mm, word);
  uint64_t cnt = pv_constraint_count(mm, mvars, form);
  u128 lhs = 1;
  for (uint32_t i = 0; i <= mvars; ++i) lhs = checked_mul(lhs, s);
  u128 rhs = cnt;
  for (uint32_t i = 0; i < mvars; ++i) rhs = checked_mul(rhs, k - 1);
  return {lhs > rhs, (double)lhs - (double)rhs};
}

namespace {

// Dense view of a bivariate polynomial: rows[b] holds the X-coefficients of
// the Y^b part.
using Rows = std::vector<std::vector<uint32_t>>;

Rows wpoly_rows(const WPoly& q) {
  Rows rows;
  for (const auto& [mono, coef] : q.term_map()) {
    uint32_t b = mono.y[0];
    if (rows.size() <= b) rows.resize(b + 1);
    auto& r = rows[b];
    if (r.size() <= mono.x) r.resize(mono.x + 1, 0);
    r[mono.x] = coef;
  }
  return rows;
}

// Divide out the largest power of X dividing every row; afterwards the
// constant-in-X part is a nonzero polynomial in Y.
void strip_x(Rows& rows) {
  size_t s = SIZE_MAX;
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size() && i < s; ++i)
      if (r[i] != 0) {
        s = i;
        break;
      }
  if (s == SIZE_MAX || s == 0) return;
  for (auto& r : rows) r.erase(r.begin(), r.begin() + std::min(s, r.size()));
}

// q(X, XY + gamma), expressed again as rows. Row b' collects binomial
// contributions from all rows y >= b', then picks up the factor X^b'.
Rows shift_sub(const Field& f, const Rows& rows, uint32_t gamma) {
  size_t ny = rows.size();
  Rows out(ny);
  for (size_t bp = 0; bp < ny; ++bp) {
    std::vector<uint32_t> acc;
    for (size_t y = bp; y < ny; ++y) {
      if (rows[y].empty()) continue;
      uint32_t bc = binom_mod_p(y, bp, f.p());
      if (bc == 0) continue;
      uint32_t scale = f.mul(bc, f.pow(gamma, (uint64_t)(y - bp)));
      if (scale == 0) continue;
      const auto& src = rows[y];
      if (acc.size() < src.size()) acc.resize(src.size(), 0);
      for (size_t i = 0; i < src.size(); ++i)
        if (src[i]) acc[i] = f.add(acc[i], f.mul(scale, src[i]));
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    if (!acc.empty()) acc.insert(acc.begin(), bp, 0);
    out[bp] = std::move(acc);
  }
  return out;
}

void rr_recurse(const Field& f, Rows rows, uint32_t k, uint32_t depth,
                std::vector<uint32_t>& coeffs,
                std::vector<std::vector<uint32_t>>& out) {
  strip_x(rows);
  // the Y-polynomial at X = 0; nonzero after the strip
  std::vector<uint32_t> py(rows.size(), 0);
  for (size_t b = 0; b < rows.size(); ++b)
    if (!rows[b].empty()) py[b] = rows[b][0];
  for (uint32_t g = 0; g < f.q(); ++g) {
    uint32_t v = 0;
    for (size_t b = py.size(); b-- > 0;) v = f.add(f.mul(v, g), py[b]);
    if (v != 0) continue;
    coeffs[depth] = g;
    if (depth + 1 == k) {
      out.push_back(coeffs);
    } else {
      rr_recurse(f, shift_sub(f, rows, g), k, depth + 1, coeffs, out);
    }
  }
}

}  // namespace

std::vector<UniPoly> y_roots(const WPoly& q, uint32_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (q.zero()) return {};
  if (q.vars_y() != 1)
    throw std::invalid_argument("root extraction needs a bivariate polynomial");
  const Field& f = *q.field();

  std::vector<std::vector<uint32_t>> found;
  std::vector<uint32_t> coeffs(k, 0);
  rr_recurse(f, wpoly_rows(q), k, 0, coeffs, found);

  std::sort(found.begin(), found.end(), message_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<UniPoly> roots;
  for (const auto& c : found) {
    UniPoly cand = UniPoly::from_message(q.field(), c);
    if (q.substitute({cand}).zero()) roots.push_back(std::move(cand));
  }
  return roots;
}

DecodeResult decode_matrix(const RSCode& code, const MultMatrix& mm,
                           SelectPolicy policy, const Posterior* post) {
  if (code.k < 2) throw std::invalid_argument("list decoding needs k >= 2");
  if (mm.q != code.f->q() || mm.n != code.n)
    throw std::invalid_argument("matrix shape does not match the code");
  if (post && (post->q != mm.q || post->n != mm.n))
    throw std::invalid_argument("posterior shape does not match the matrix");

  DecodeResult res;
  res.diag.cost = total_cost(mm);
  if (res.diag.cost == 0) return res;  // nothing to interpolate against

  uint64_t bound = list_size_bound(res.diag.cost, code.k);
  if (bound > 2048)
    throw std::overflow_error("list bound exceeds the interpolation cap");
  res.diag.list_bound = bound;

  std::vector<InterpPoint> pts;
  for (uint32_t j = 0; j < mm.n; ++j)
    for (uint32_t i = 0; i < mm.q; ++i)
      if (uint32_t mv = mm.at(i, j)) pts.push_back({code.points[j], i, mv});

  InterpDiag idiag;
  WPoly q = interpolate_bivariate(code.f, pts, code.k, (uint32_t)bound, &idiag);
  res.diag.wdeg = (uint32_t)idiag.wdeg;
  res.diag.ydeg = idiag.ydeg;
  res.diag.dstar = (uint32_t)idiag.dstar;
  res.diag.constraints = idiag.constraints;

  for (const UniPoly& root : y_roots(q, code.k)) {
    ListEntry e;
    e.message = root.to_message(code.k);
    e.codeword = rs_encode(code, e.message);
    e.score = score_of(mm, e.codeword);
    if (post) {
      double lp = 0.0;
      for (uint32_t j = 0; j < mm.n; ++j)
        lp += std::log(post->at(e.codeword[j], j));
      e.log_post = lp;
    }
    res.list.push_back(std::move(e));
  }

  auto better = [&](const ListEntry& a, const ListEntry& b) {
    if (policy == SelectPolicy::posterior) {
      if (a.log_post != b.log_post) return a.log_post > b.log_post;
      if (a.score != b.score) return a.score > b.score;
    } else {
      if (a.score != b.score) return a.score > b.score;
      if (a.log_post != b.log_post) return a.log_post > b.log_post;
    }
    return message_less(a.message, b.message);
  };
  std::sort(res.list.begin(), res.list.end(), better);
  res.selected = res.list.empty() ? -1 : 0;
  return res;
}

DecodeResult asd_decode(const RSCode& code, const ChannelModel& ch,
                        const std::vector<uint32_t>& received, uint32_t lambda,
                        SelectPolicy policy) {
  Posterior post = posterior_matrix(ch, received);
  MultMatrix mm = pmas(post, lambda);
  return decode_matrix(code, mm, policy, &post);
}

DecodeResult gs_decode(const RSCode& code,
                       const std::vector<uint32_t>& received, uint32_t mult) {
  if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
  if (received.size() != code.n)
    throw std::invalid_argument("received length does not match the code");
  MultMatrix mm;
  mm.q = code.f->q();
  mm.n = code.n;
  mm.m.assign((size_t)mm.q * mm.n, 0);
  for (uint32_t j = 0; j < code.n; ++j) {
    if (received[j] >= mm.q) throw std::invalid_argument("symbol out of range");
    mm.at(received[j], j) = mult;
  }
  return decode_matrix(code, mm, SelectPolicy::score, nullptr);
}

namespace {

// Linear-feedback shift register synthesis: shortest connection polynomial
// generating the syndrome sequence.
std::vector<uint32_t> massey(const Field& f, const std::vector<uint32_t>& syn) {
  std::vector<uint32_t> cur{1}, prev{1};
  uint32_t len = 0, gap = 1, last = 1;
  for (size_t i = 0; i < syn.size(); ++i) {
    uint32_t d = syn[i];
    for (uint32_t j = 1; j <= len && j < cur.size(); ++j)
      if (cur[j]) d = f.add(d, f.mul(cur[j], syn[i - j]));
    if (d == 0) {
      ++gap;
      continue;
    }
    uint32_t coef = f.div(d, last);
    if (2 * len <= i) {
      auto keep = cur;
      if (cur.size() < prev.size() + gap) cur.resize(prev.size() + gap, 0);
      for (size_t j = 0; j < prev.size(); ++j)
        cur[j + gap] = f.sub(cur[j + gap], f.mul(coef, prev[j]));
      len = (uint32_t)(i + 1 - len);
      prev = std::move(keep);
      last = d;
      gap = 1;
    } else {
      if (cur.size() < prev.size() + gap) cur.resize(prev.size() + gap, 0);
      for (size_t j = 0; j < prev.size(); ++j)
        cur[j + gap] = f.sub(cur[j + gap], f.mul(coef, prev[j]));
      ++gap;
    }
  }
  while (!cur.empty() && cur.back() == 0) cur.pop_back();
  return cur;
}

}  // namespace

BMResult bm_decode(const RSCode& code, const std::vector<uint32_t>& received) {
  const Field& f = *code.f;
  uint32_t n = code.n, k = code.k;
  if (received.size() != n)
    throw std::invalid_argument("received length does not match the code");
  for (uint32_t s : received)
    if (s >= f.q()) throw std::invalid_argument("symbol out of range");

  BMResult res;
  uint32_t tmax = (n - k) / 2;

  // reorder positions by generator power: slot l holds the value at g^l
  std::vector<uint32_t> yhat(n);
  for (uint32_t l = 0; l < n; ++l) yhat[l] = received[f.exp_at(l) - 1];

  // S_j = sum_l yhat_l g^(jl), zero on codewords for j = 1..n-k
  std::vector<uint32_t> syn(n - k, 0);
  for (uint32_t j = 1; j <= n - k; ++j) {
    uint32_t acc = 0;
    for (uint32_t l = 0; l < n; ++l)
      if (yhat[l]) acc = f.add(acc, f.mul(yhat[l], f.exp_at((uint64_t)j * l)));
    syn[j - 1] = acc;
  }

  std::vector<uint32_t> chat = yhat;
  bool clean = std::all_of(syn.begin(), syn.end(),
                           [](uint32_t s) { return s == 0; });
  if (!clean) {
    std::vector<uint32_t> loc = massey(f, syn);
    uint32_t t = (uint32_t)(loc.size() - 1);
    if (t == 0 || t > tmax) return res;

    // roots of the locator are inverse error positions
    std::vector<uint32_t> pos;
    for (uint32_t v = 1; v < f.q(); ++v) {
      uint32_t acc = 0;
      for (size_t b = loc.size(); b-- > 0;) acc = f.add(f.mul(acc, v), loc[b]);
      if (acc == 0) pos.push_back(f.log_of(f.inv(v)));
    }
    if (pos.size() != t) return res;

    // magnitudes from the first t syndromes: sum_i e_i X_i^j = S_j
    std::vector<uint32_t> a((size_t)t * t), rhs(t);
    for (uint32_t r = 0; r < t; ++r) {
      for (uint32_t c = 0; c < t; ++c)
        a[(size_t)r * t + c] = f.exp_at((uint64_t)pos[c] * (r + 1));
      rhs[r] = syn[r];
    }
    std::vector<uint32_t> mag = gauss_solve(f, a, rhs, t);
    if (mag.empty()) return res;
    for (uint32_t i = 0; i < t; ++i)
      chat[pos[i]] = f.sub(chat[pos[i]], mag[i]);
  }

  // message from the first k generator-order evaluations, then verify fully
  std::vector<uint32_t> a((size_t)k * k), rhs(k);
  for (uint32_t r = 0; r < k; ++r) {
    for (uint32_t c = 0; c < k; ++c) a[(size_t)r * k + c] = f.exp_at((uint64_t)r * c);
    rhs[r] = chat[r];
  }
  std::vector<uint32_t> msg = gauss_solve(f, a, rhs, k);
  if (msg.empty()) return res;

  std::vector<uint32_t> cw = rs_encode(code, msg);
  for (uint32_t l = 0; l < n; ++l)
    if (cw[f.exp_at(l) - 1] != chat[l]) return res;

  uint32_t dist = hamming_distance(received, cw);
  if (dist > tmax) return res;

  res.ok = true;
  res.message = std::move(msg);
  res.codeword = std::move(cw);
  res.distance = dist;
  return res;
}

}  // namespace softdec
