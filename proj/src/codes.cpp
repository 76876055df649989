#include "codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace softdec {
namespace {

constexpr uint64_t kEnumCap = 1ull << 20;

// monic polynomial of degree d over f with index-encoded lower coefficients
UniPoly monic_at(const FieldPtr& f, uint32_t d, uint64_t idx) {
  std::vector<uint32_t> c(d + 1, 0);
  for (uint32_t i = 0; i < d && idx; ++i) {
    c[i] = (uint32_t)(idx % f->q());
    idx /= f->q();
  }
  c[d] = 1;
  return UniPoly(f, std::move(c));
}

bool irreducible_over(const FieldPtr& f, const UniPoly& cand) {
  uint32_t deg = (uint32_t)cand.deg();
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= f->q();
    for (uint64_t idx = 0; idx < count; ++idx) {
      if (UniPoly::divrem(cand, monic_at(f, d, idx)).second.zero()) return false;
    }
  }
  return true;
}

// Gauss-Jordan inverse of a over Z_p; a is row-major dim x dim
std::vector<uint32_t> invert_mod_p(std::vector<uint32_t> a, uint32_t dim, uint32_t p) {
  auto modpow = [p](uint64_t b, uint64_t e) {
    uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return (uint32_t)r;
  };
  std::vector<uint32_t> inv(dim * dim, 0);
  for (uint32_t i = 0; i < dim; ++i) inv[i * dim + i] = 1;
  for (uint32_t col = 0; col < dim; ++col) {
    uint32_t piv = col;
    while (piv < dim && a[piv * dim + col] == 0) ++piv;
    if (piv == dim) throw std::logic_error("symbol basis is singular");
    if (piv != col) {
      for (uint32_t j = 0; j < dim; ++j) {
        std::swap(a[piv * dim + j], a[col * dim + j]);
        std::swap(inv[piv * dim + j], inv[col * dim + j]);
      }
    }
    uint32_t s = modpow(a[col * dim + col], p - 2);
    for (uint32_t j = 0; j < dim; ++j) {
      a[col * dim + j] = (uint32_t)((uint64_t)a[col * dim + j] * s % p);
      inv[col * dim + j] = (uint32_t)((uint64_t)inv[col * dim + j] * s % p);
    }
    for (uint32_t r = 0; r < dim; ++r) {
      if (r == col) continue;
      uint32_t c = a[r * dim + col];
      if (c == 0) continue;
      for (uint32_t j = 0; j < dim; ++j) {
        a[r * dim + j] =
            (uint32_t)((a[r * dim + j] + (uint64_t)(p - c) * a[col * dim + j]) % p);
        inv[r * dim + j] =
            (uint32_t)((inv[r * dim + j] + (uint64_t)(p - c) * inv[col * dim + j]) % p);
      }
    }
  }
  return inv;
}

}  // namespace

RSCode make_rs(const FieldPtr& f, uint32_t k) {
  uint32_t n = f->q() - 1;
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= q-1");
  RSCode c;
  c.f = f;
  c.n = n;
  c.k = k;
  c.points.resize(n);
  for (uint32_t j = 0; j < n; ++j) c.points[j] = j + 1;
  return c;
}

std::vector<uint32_t> rs_encode(const RSCode& c, const std::vector<uint32_t>& msg) {
  if (msg.size() != c.k) throw std::invalid_argument("message length mismatch");
  for (uint32_t u : msg)
    if (u >= c.f->q()) throw std::invalid_argument("message symbol out of range");
  UniPoly fpoly = UniPoly::from_message(c.f, msg);
  std::vector<uint32_t> cw(c.n);
  for (uint32_t j = 0; j < c.n; ++j) cw[j] = fpoly.eval(c.points[j]);
  return cw;
}

std::vector<uint32_t> grs_encode(const RSCode& c, const std::vector<uint32_t>& w,
                                 const std::vector<uint32_t>& msg) {
  if (w.size() != c.n) throw std::invalid_argument("twist length mismatch");
  std::vector<uint32_t> cw = rs_encode(c, msg);
  for (uint32_t j = 0; j < c.n; ++j) {
    if (w[j] == 0 || w[j] >= c.f->q()) throw std::invalid_argument("twist must be nonzero");
    cw[j] = c.f->mul(w[j], cw[j]);
  }
  return cw;
}

uint32_t hamming_distance(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  uint32_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

uint64_t codeword_count(const RSCode& c) {
  uint64_t count = 1;
  for (uint32_t i = 0; i < c.k; ++i) {
    count *= c.f->q();
    if (count > kEnumCap)
      throw std::domain_error("codebook too large to enumerate (cap 2^20)");
  }
  return count;
}

std::vector<uint32_t> message_at(const RSCode& c, uint64_t index) {
  std::vector<uint32_t> msg(c.k, 0);
  for (uint32_t i = 0; i < c.k; ++i) {
    msg[i] = (uint32_t)(index % c.f->q());
    index /= c.f->q();
  }
  return msg;
}

void enumerate_codewords(
    const RSCode& c,
    const std::function<void(uint64_t, const std::vector<uint32_t>&,
                             const std::vector<uint32_t>&)>& visit) {
  uint64_t count = codeword_count(c);
  std::vector<uint32_t> msg(c.k, 0);
  for (uint64_t idx = 0; idx < count; ++idx) {
    visit(idx, msg, rs_encode(c, msg));
    // odometer increment in base q
    for (uint32_t i = 0; i < c.k; ++i) {
      if (++msg[i] < c.f->q()) break;
      msg[i] = 0;
    }
  }
}

PVCode make_pv(const FieldPtr& base, uint32_t mvars, uint32_t k) {
  std::vector<uint64_t> exps;
  for (uint32_t i = 1; i < mvars; ++i) exps.push_back(i + 1);
  return make_pv(base, mvars, k, std::move(exps));
}

PVCode make_pv(const FieldPtr& base, uint32_t mvars, uint32_t k,
               std::vector<uint64_t> exps) {
  if (mvars < 2) throw std::invalid_argument("needs at least two correlated polynomials");
  if (exps.size() != mvars - 1) throw std::invalid_argument("exponent count mismatch");
  if (k < 1 || k > base->q() - 1) throw std::invalid_argument("need 1 <= k <= q-1");

  PVCode c;
  c.base = base;
  c.mvars = mvars;
  c.n = base->q() - 1;
  c.k = k;
  c.exps = std::move(exps);

  uint64_t ext_q = 1;
  for (uint32_t i = 0; i < mvars; ++i) {
    ext_q *= base->q();
    if (ext_q > 65536) throw std::invalid_argument("extension order exceeds 2^16");
  }
  c.ext = Field::of_order((uint32_t)ext_q);
  if (c.ext->p() != base->p()) throw std::logic_error("characteristic mismatch");

  c.points.resize(c.n);
  for (uint32_t j = 0; j < c.n; ++j) c.points[j] = j + 1;

  // first monic irreducible of degree k over the base field, index order
  uint64_t cands = 1;
  for (uint32_t i = 0; i < k; ++i) cands *= base->q();
  for (uint64_t idx = 0; idx < cands; ++idx) {
    UniPoly cand = monic_at(base, k, idx);
    if (irreducible_over(base, cand)) {
      c.e = cand;
      break;
    }
  }
  if (c.e.zero()) throw std::logic_error("no irreducible modulus found");

  // embedding phi: base -> ext through the first root of the base modulus
  const uint32_t p = base->p(), mb = base->m();
  c.embed.assign(base->q(), 0);
  if (mb == 1) {
    for (uint32_t v = 0; v < base->q(); ++v) c.embed[v] = v;
  } else {
    uint32_t root = 0;
    bool found = false;
    for (uint32_t v = 0; v < c.ext->q() && !found; ++v) {
      uint32_t acc = 0;
      const auto& mod = base->modulus();
      for (size_t i = mod.size(); i-- > 0;)
        acc = c.ext->add(c.ext->mul(acc, v), mod[i]);  // coeffs < p embed as-is
      if (acc == 0) {
        root = v;
        found = true;
      }
    }
    if (!found) throw std::logic_error("base modulus has no root in extension");
    for (uint32_t v = 0; v < base->q(); ++v) {
      // Horner over the base-p digits of v
      uint32_t digits[32], nd = 0, t = v;
      while (t) {
        digits[nd++] = t % p;
        t /= p;
      }
      uint32_t acc = 0;
      for (uint32_t i = nd; i-- > 0;) acc = c.ext->add(c.ext->mul(acc, root), digits[i]);
      c.embed[v] = acc;
    }
  }

  c.basis.resize(mvars);
  for (uint32_t j = 0; j < mvars; ++j) c.basis[j] = c.ext->pow(c.ext->generator(), j);

  // spot-check phi is a ring homomorphism
  for (uint32_t a = 1; a < std::min<uint32_t>(base->q(), 64); ++a)
    for (uint32_t b = a; b < std::min<uint32_t>(base->q(), 64); ++b) {
      if (c.embed[base->mul(a, b)] != c.ext->mul(c.embed[a], c.embed[b]))
        throw std::logic_error("embedding is not multiplicative");
      if (c.embed[base->add(a, b)] != c.ext->add(c.embed[a], c.embed[b]))
        throw std::logic_error("embedding is not additive");
    }

  // invert the packing map (c_0..c_(M-1)) -> sum_j basis[j]*phi(c_j) over Z_p
  const uint32_t dim = mb * mvars;
  std::vector<uint32_t> a(dim * dim, 0);
  for (uint32_t j = 0; j < mvars; ++j)
    for (uint32_t t = 0; t < mb; ++t) {
      uint32_t unit = 1;
      for (uint32_t s = 0; s < t; ++s) unit *= p;  // base element x^t
      uint32_t img = c.ext->mul(c.basis[j], c.embed[unit]);
      for (uint32_t r = 0; r < dim; ++r) {
        a[r * dim + (j * mb + t)] = img % p;
        img /= p;
      }
    }
  c.dec_matrix = invert_mod_p(std::move(a), dim, p);
  return c;
}

std::vector<UniPoly> pv_message_polys(const PVCode& c, const std::vector<uint32_t>& msg) {
  if (msg.size() != c.k) throw std::invalid_argument("message length mismatch");
  std::vector<UniPoly> out;
  UniPoly fpoly = UniPoly::from_message(c.base, msg);
  out.push_back(fpoly);
  for (uint64_t a : c.exps) out.push_back(fpoly.powmod(a, c.e));
  return out;
}

std::vector<uint32_t> pv_encode(const PVCode& c, const std::vector<uint32_t>& msg) {
  auto polys = pv_message_polys(c, msg);
  std::vector<uint32_t> cw(c.n);
  for (uint32_t j = 0; j < c.n; ++j) {
    std::vector<uint32_t> parts(c.mvars);
    for (uint32_t l = 0; l < c.mvars; ++l) parts[l] = polys[l].eval(c.points[j]);
    cw[j] = pv_compose(c, parts);
  }
  return cw;
}

uint32_t pv_compose(const PVCode& c, const std::vector<uint32_t>& parts) {
  if (parts.size() != c.mvars) throw std::invalid_argument("component count mismatch");
  uint32_t acc = 0;
  for (uint32_t l = 0; l < c.mvars; ++l)
    acc = c.ext->add(acc, c.ext->mul(c.basis[l], c.embed[parts[l]]));
  return acc;
}

std::vector<uint32_t> pv_decompose(const PVCode& c, uint32_t symbol) {
  const uint32_t p = c.base->p(), mb = c.base->m(), dim = mb * c.mvars;
  std::vector<uint32_t> d(dim, 0);
  for (uint32_t r = 0; r < dim; ++r) {
    d[r] = symbol % p;
    symbol /= p;
  }
  std::vector<uint32_t> parts(c.mvars, 0);
  for (uint32_t j = 0; j < c.mvars; ++j) {
    uint32_t val = 0, pw = 1;
    for (uint32_t t = 0; t < mb; ++t, pw *= p) {
      uint64_t acc = 0;
      uint32_t row = j * mb + t;
      for (uint32_t s = 0; s < dim; ++s) acc += (uint64_t)c.dec_matrix[row * dim + s] * d[s];
      val += (uint32_t)(acc % p) * pw;
    }
    parts[j] = val;
  }
  return parts;
}

}  // namespace softdec
