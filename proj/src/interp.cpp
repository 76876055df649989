#include "interp.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SOFTDEC_X86 1
#endif

namespace softdec {

uint64_t monomial_count(uint64_t d, uint64_t w, uint64_t ymax) {
  if (w == 0) return (ymax + 1) * (d + 1);
  uint64_t total = 0;
  for (uint64_t b = 0; b <= ymax && w * b <= d; ++b) total += d - w * b + 1;
  return total;
}

namespace {

// ----- coefficient kernels -----
//
// All inner loops funnel into axpy: dst[i] += s * src[i]. For char-2 fields of
// order <= 256 that is an XOR with a fixed-scalar multiply done through split
// nibble tables (mul is GF(2)-linear, so s*(lo + 16*hi) = s*lo + s*(16*hi)),
// which SSSE3 pshufb evaluates 16 bytes at a time.

struct ScaleTab {
  alignas(16) uint8_t lo[16];
  alignas(16) uint8_t hi[16];
};

#ifdef SOFTDEC_X86
__attribute__((target("ssse3"))) void axpy_ssse3(uint8_t* dst, const uint8_t* src,
                                                 size_t n, const ScaleTab& t) {
  const __m128i lo = _mm_load_si128((const __m128i*)t.lo);
  const __m128i hi = _mm_load_si128((const __m128i*)t.hi);
  const __m128i mask = _mm_set1_epi8(0x0f);
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m128i v = _mm_loadu_si128((const __m128i*)(src + i));
    __m128i r = _mm_xor_si128(
        _mm_shuffle_epi8(lo, _mm_and_si128(v, mask)),
        _mm_shuffle_epi8(hi, _mm_and_si128(_mm_srli_epi16(v, 4), mask)));
    __m128i d = _mm_loadu_si128((const __m128i*)(dst + i));
    _mm_storeu_si128((__m128i*)(dst + i), _mm_xor_si128(d, r));
  }
  for (; i < n; ++i) dst[i] ^= (uint8_t)(t.lo[src[i] & 15] ^ t.hi[src[i] >> 4]);
}

bool have_ssse3() {
  static const bool ok = __builtin_cpu_supports("ssse3");
  return ok;
}
#endif

struct Char2Ops {
  using Elem = uint8_t;
  using Tab = ScaleTab;
  static constexpr bool kChar2 = true;
  const Field* f;

  explicit Char2Ops(const Field* field) : f(field) {}

  Tab make_tab(uint32_t s) const {
    Tab t;
    for (uint32_t v = 0; v < 16; ++v) {
      t.lo[v] = (uint8_t)(v < f->q() ? f->mul(s, v) : 0);
      t.hi[v] = (uint8_t)(16 * v < f->q() ? f->mul(s, 16 * v) : 0);
    }
    return t;
  }

  void axpy(Elem* dst, const Elem* src, size_t n, const Tab& t) const {
#ifdef SOFTDEC_X86
    if (have_ssse3()) {
      axpy_ssse3(dst, src, n, t);
      return;
    }
#endif
    for (size_t i = 0; i < n; ++i)
      dst[i] ^= (uint8_t)(t.lo[src[i] & 15] ^ t.hi[src[i] >> 4]);
  }
};

// fallback for every other field: plain table multiplies, two-byte elements
struct GenOps {
  using Elem = uint16_t;
  struct Tab {
    uint32_t s;
  };
  static constexpr bool kChar2 = false;
  const Field* f;

  explicit GenOps(const Field* field) : f(field) {}

  Tab make_tab(uint32_t s) const { return {s}; }

  void axpy(Elem* dst, const Elem* src, size_t n, const Tab& t) const {
    for (size_t i = 0; i < n; ++i)
      dst[i] = (Elem)f->add(dst[i], f->mul(t.s, src[i]));
  }
};

// ----- the pointwise interpolation engine -----
//
// L+1 candidate polynomials are maintained, the one with leading Y-degree j in
// slot j; each constraint either leaves a candidate alone, folds the pivot
// into it, or multiplies the pivot by (X - x0). Candidates are stored
// translated to the active point, so the Hasse discrepancy of order (a, b) is
// literally the stored coefficient at (a, b); moving to the next point is a
// two-variable Taylor shift. Translation only adds terms below the leading
// monomial, so leading-term bookkeeping is representation-independent.
template <class Ops>
class Koetter {
  using Elem = typename Ops::Elem;
  using Tab = typename Ops::Tab;

  struct Track {
    std::vector<std::vector<Elem>> rows;  // rows[b][a], X-coefficients per Y-degree
    uint32_t hi = 0;                      // 1 + highest possibly-nonzero row
    uint32_t lm_x = 0, lm_y = 0;
  };

 public:
  Koetter(const FieldPtr& f, uint32_t k, uint32_t ymax)
      : fp_(f), ops_(f.get()), w_(k - 1), L_(ymax) {}

  WPoly run(const std::vector<InterpPoint>& pts, InterpDiag* diag) {
    const Field& f = *fp_;
    uint64_t C = 0;
    for (const auto& pt : pts) {
      if (pt.x >= f.q() || pt.y >= f.q())
        throw std::invalid_argument("interpolation point out of range");
      if (pt.mult == 0) throw std::invalid_argument("zero multiplicity point");
      C += (uint64_t)pt.mult * (pt.mult + 1) / 2;
    }
    if (pts.empty()) throw std::invalid_argument("no interpolation points");

    tracks_.resize(L_ + 1);
    uint32_t cx = pts[0].x, cy = pts[0].y;
    for (uint32_t j = 0; j <= L_; ++j) {
      Track& t = tracks_[j];
      t.rows.assign(L_ + 1, {});
      t.hi = j + 1;
      t.lm_x = 0;
      t.lm_y = j;
      // Y^j translated to the first point: (Y + cy)^j
      for (uint32_t b = 0; b <= j; ++b) {
        uint32_t c = f.mul(binom_mod_p(j, b, f.p()), f.pow(cy, j - b));
        if (c != 0) t.rows[b].push_back((Elem)c);
      }
    }

    std::vector<uint32_t> disc(L_ + 1);
    for (const auto& pt : pts) {
      if (pt.x != cx || pt.y != cy) {
        translate(f.sub(pt.x, cx), f.sub(pt.y, cy));
        cx = pt.x;
        cy = pt.y;
      }
      for (uint32_t b = 0; b < pt.mult; ++b) {
        for (uint32_t a = 0; a + b < pt.mult; ++a) {
          int piv = -1;
          for (uint32_t j = 0; j <= L_; ++j) {
            const Track& t = tracks_[j];
            disc[j] = (b < t.hi && a < t.rows[b].size()) ? (uint32_t)t.rows[b][a] : 0;
            if (disc[j] != 0 && (piv < 0 || lm_less(t, tracks_[piv]))) piv = (int)j;
          }
          if (piv < 0) continue;
          const uint32_t dp = disc[piv];
          for (uint32_t j = 0; j <= L_; ++j) {
            if ((int)j == piv || disc[j] == 0) continue;
            fold(tracks_[j], tracks_[piv], f.neg(f.div(disc[j], dp)));
          }
          shift_up(tracks_[piv]);
        }
      }
    }

    // back to plain coordinates
    translate(f.neg(cx), f.neg(cy));

    int best = 0;
    for (uint32_t j = 1; j <= L_; ++j)
      if (lm_less(tracks_[j], tracks_[best])) best = (int)j;

    WPoly out(fp_, 1, w_);
    const Track& t = tracks_[best];
    for (uint32_t b = 0; b < t.hi; ++b)
      for (uint32_t a = 0; a < t.rows[b].size(); ++a) {
        uint32_t c = (uint32_t)t.rows[b][a];
        if (c != 0) out.set_coeff({a, {b}}, c);
      }
    if (out.zero()) throw std::logic_error("interpolation produced zero polynomial");

    Monomial lm = out.leading_monomial();
    if (lm.y[0] != t.lm_y || lm.x != t.lm_x)
      throw std::logic_error("leading-term bookkeeping out of sync");
    out = out.scale(f.inv(out.coeff(lm)));

    uint64_t W = lm.x + (uint64_t)w_ * lm.y[0];
    if (W > 0 && monomial_count(W - 1, w_, L_) > C)
      throw std::logic_error("interpolation result is not minimal");

    if (diag) {
      diag->constraints = C;
      diag->wdeg = W;
      diag->ydeg = (uint32_t)out.degree_y(0);
      diag->ymax = L_;
      uint64_t d = 0;
      while (monomial_count(d, w_, L_) <= C) ++d;
      diag->dstar = d;
    }
    return out;
  }

 private:
  uint64_t lm_wdeg(const Track& t) const { return t.lm_x + (uint64_t)w_ * t.lm_y; }

  bool lm_less(const Track& a, const Track& b) const {
    uint64_t wa = lm_wdeg(a), wb = lm_wdeg(b);
    if (wa != wb) return wa < wb;
    if (a.lm_y != b.lm_y) return a.lm_y < b.lm_y;
    return a.lm_x < b.lm_x;
  }

  // dst += s * src (s != 0), preserving dst's leading monomial
  void fold(Track& dst, const Track& src, uint32_t s) {
    Tab tab = ops_.make_tab(s);
    for (uint32_t b = 0; b < src.hi; ++b) {
      const auto& srow = src.rows[b];
      if (srow.empty()) continue;
      auto& drow = dst.rows[b];
      if (drow.size() < srow.size()) drow.resize(srow.size(), 0);
      ops_.axpy(drow.data(), srow.data(), srow.size(), tab);
    }
    dst.hi = std::max(dst.hi, src.hi);
  }

  // multiply by (X - x0), which is plain X in point-translated coordinates
  void shift_up(Track& t) {
    for (uint32_t b = 0; b < t.hi; ++b) {
      auto& row = t.rows[b];
      if (!row.empty()) row.insert(row.begin(), 0);
    }
    t.lm_x += 1;
  }

  void translate(uint32_t dx, uint32_t dy) {
    if (dx) shift_x(dx);
    if (dy) shift_y(dy);
  }

  // rows[b] <- rows[b](X + dx) for every track
  void shift_x(uint32_t dx) {
    size_t maxlen = 0;
    for (const auto& t : tracks_)
      for (uint32_t b = 0; b < t.hi; ++b) maxlen = std::max(maxlen, t.rows[b].size());
    if (maxlen <= 1) return;

    if constexpr (Ops::kChar2) {
      // butterfly factorization: c[a] += dx^(2^t) * c[a + 2^t] per clear bit t
      std::vector<Tab> tabs;
      uint32_t sq = dx;
      for (size_t half = 1; half < maxlen; half <<= 1) {
        tabs.push_back(ops_.make_tab(sq));
        sq = ops_.f->mul(sq, sq);
      }
      for (auto& t : tracks_)
        for (uint32_t b = 0; b < t.hi; ++b) {
          auto& row = t.rows[b];
          const size_t len = row.size();
          uint32_t bit = 0;
          for (size_t half = 1; half < len; half <<= 1, ++bit) {
            for (size_t base = 0; base + half < len; base += half << 1) {
              size_t cnt = std::min(half, len - base - half);
              ops_.axpy(row.data() + base, row.data() + base + half, cnt, tabs[bit]);
            }
          }
        }
    } else {
      // Horner-style shift, one coefficient finalized per pass
      const Field& f = *ops_.f;
      for (auto& t : tracks_)
        for (uint32_t b = 0; b < t.hi; ++b) {
          auto& row = t.rows[b];
          if (row.size() <= 1) continue;
          for (size_t i = 0; i + 1 < row.size(); ++i)
            for (size_t j = row.size() - 1; j-- > i;)
              row[j] = (Elem)f.add(row[j], f.mul(dx, row[j + 1]));
        }
    }
  }

  // rows <- translate Y by dy: same factorizations across the row axis
  void shift_y(uint32_t dy) {
    if constexpr (Ops::kChar2) {
      std::vector<Tab> tabs;
      uint32_t sq = dy;
      for (uint32_t half = 1; half <= L_; half <<= 1) {
        tabs.push_back(ops_.make_tab(sq));
        sq = ops_.f->mul(sq, sq);
      }
      for (auto& t : tracks_) {
        uint32_t bit = 0;
        for (uint32_t half = 1; half < t.hi; half <<= 1, ++bit)
          for (uint32_t b = 0; b + half < t.hi; b += half << 1)
            for (uint32_t off = 0; off < half && b + off + half < t.hi; ++off)
              row_axpy(t.rows[b + off], t.rows[b + off + half], tabs[bit]);
      }
    } else {
      Tab tab = ops_.make_tab(dy);
      for (auto& t : tracks_) {
        if (t.hi <= 1) continue;
        for (uint32_t i = 0; i + 1 < t.hi; ++i)
          for (uint32_t j = t.hi - 1; j-- > i;)
            row_axpy(t.rows[j], t.rows[j + 1], tab);
      }
    }
  }

  void row_axpy(std::vector<Elem>& dst, const std::vector<Elem>& src, const Tab& tab) {
    if (src.empty()) return;
    if (dst.size() < src.size()) dst.resize(src.size(), 0);
    ops_.axpy(dst.data(), src.data(), src.size(), tab);
  }

  FieldPtr fp_;
  Ops ops_;
  uint32_t w_, L_;
  std::vector<Track> tracks_;
};

// visit every split of `total` across buf[pos..]; fn takes the filled buffer
template <class F>
void each_split(std::vector<uint32_t>& buf, uint32_t pos, uint32_t total, F&& fn) {
  if (pos + 1 == buf.size()) {
    buf[pos] = total;
    fn(buf);
    return;
  }
  for (uint32_t v = 0; v <= total; ++v) {
    buf[pos] = v;
    each_split(buf, pos + 1, total - v, fn);
  }
}

}  // namespace

WPoly interpolate_bivariate(const FieldPtr& f, const std::vector<InterpPoint>& pts,
                            uint32_t k, uint32_t ymax, InterpDiag* diag) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (ymax > 2048) throw std::invalid_argument("Y-degree cap too large");
  if (f->p() == 2 && f->q() <= 256) {
    Koetter<Char2Ops> eng(f, k, ymax);
    return eng.run(pts, diag);
  }
  Koetter<GenOps> eng(f, k, ymax);
  return eng.run(pts, diag);
}

WPoly interpolate_multi(const FieldPtr& f, const std::vector<MultiPoint>& pts,
                        uint32_t k, uint32_t mvars, InterpDiag* diag) {
  if (k < 2) throw std::invalid_argument("dense solver needs k >= 2");
  if (mvars < 1) throw std::invalid_argument("needs at least one Y variable");
  const uint32_t w = k - 1;
  const Field& ff = *f;

  // count constraints: one per Hasse order (a, b_1..b_M) with a + sum b < mult
  uint64_t C = 0;
  for (const auto& pt : pts) {
    if (pt.ys.size() != mvars) throw std::invalid_argument("point arity mismatch");
    if (pt.mult == 0) throw std::invalid_argument("zero multiplicity point");
    // C(mult + M, M + 1)
    uint64_t c = 1;
    for (uint32_t i = 1; i <= mvars + 1; ++i) c = c * (pt.mult - 1 + i) / i;
    C += c;
  }
  if (pts.empty() || C == 0) throw std::invalid_argument("no interpolation points");
  if (C > 2048) throw std::invalid_argument("instance too large for dense solve");

  // first C+1 monomials in the weighted order
  MonomialOrder ord{w};
  std::vector<Monomial> basis;
  for (uint64_t dcap = w;; dcap *= 2) {
    basis.clear();
    std::vector<uint32_t> ybuf(mvars, 0);
    // enumerate all y-tuples with w*sum(y) <= dcap, then x up to the remainder
    std::function<void(uint32_t, uint64_t)> rec = [&](uint32_t pos, uint64_t left) {
      if (pos == mvars) {
        for (uint64_t x = 0; x <= left; ++x) basis.push_back({(uint32_t)x, ybuf});
        return;
      }
      for (uint64_t v = 0; (uint64_t)w * v <= left; ++v) {
        ybuf[pos] = (uint32_t)v;
        rec(pos + 1, left - (uint64_t)w * v);
      }
    };
    rec(0, dcap);
    if (basis.size() >= C + 1) break;
    if (dcap > (uint64_t)1 << 24) throw std::logic_error("basis enumeration overflow");
  }
  std::sort(basis.begin(), basis.end(), ord);
  basis.resize(C + 1);

  // constraint rows over the basis
  const size_t N = basis.size();
  std::vector<std::vector<uint32_t>> A;
  A.reserve(C);
  for (const auto& pt : pts) {
    std::vector<uint32_t> comp(mvars + 1);
    for (uint32_t total = 0; total < pt.mult; ++total) {
      each_split(comp, 0, total, [&](const std::vector<uint32_t>& ab) {
        std::vector<uint32_t> row(N, 0);
        for (size_t c = 0; c < N; ++c) {
          const Monomial& mono = basis[c];
          if (mono.x < ab[0]) continue;
          uint32_t val = binom_mod_p(mono.x, ab[0], ff.p());
          if (val == 0) continue;
          val = ff.mul(val, ff.pow(pt.x, mono.x - ab[0]));
          bool dead = false;
          for (uint32_t l = 0; l < mvars && !dead; ++l) {
            uint32_t bl = ab[l + 1];
            if (mono.y[l] < bl) {
              dead = true;
              break;
            }
            uint32_t bb = binom_mod_p(mono.y[l], bl, ff.p());
            if (bb == 0) {
              dead = true;
              break;
            }
            val = ff.mul(val, bb);
            val = ff.mul(val, ff.pow(pt.ys[l], mono.y[l] - bl));
          }
          if (!dead) row[c] = val;
        }
        A.push_back(std::move(row));
      });
    }
  }

  // column-ordered elimination; the first pivotless column yields the minimal
  // leading-monomial kernel vector
  const size_t R = A.size();
  std::vector<int> pivot_of(N, -1);
  std::vector<bool> used(R, false);
  for (size_t col = 0; col < N; ++col) {
    size_t r = R;
    for (size_t i = 0; i < R; ++i)
      if (!used[i] && A[i][col] != 0) {
        r = i;
        break;
      }
    if (r == R) {
      // free column: kernel vector supported on pivot columns plus this one
      WPoly out(f, mvars, w);
      out.set_coeff(basis[col], 1);
      for (size_t c = 0; c < col; ++c)
        if (pivot_of[c] >= 0 && A[pivot_of[c]][col] != 0)
          out.set_coeff(basis[c], ff.neg(A[pivot_of[c]][col]));
      Monomial lm = out.leading_monomial();
      out = out.scale(ff.inv(out.coeff(lm)));
      if (diag) {
        diag->constraints = C;
        diag->wdeg = ord.wdeg(lm);
        diag->ydeg = (uint32_t)out.degree_y_total();
        diag->ymax = 0;
        diag->dstar = 0;
      }
      return out;
    }
    used[r] = true;
    pivot_of[col] = (int)r;
    uint32_t s = ff.inv(A[r][col]);
    for (size_t c = col; c < N; ++c) A[r][c] = ff.mul(A[r][c], s);
    for (size_t i = 0; i < R; ++i) {
      if (i == r || A[i][col] == 0) continue;
      uint32_t m = A[i][col];
      for (size_t c = col; c < N; ++c)
        A[i][c] = ff.sub(A[i][c], ff.mul(m, A[r][c]));
    }
  }
  throw std::logic_error("no kernel vector found");
}

}  // namespace softdec
