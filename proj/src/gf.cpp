#include "gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace softdec {
namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primitive polynomials over GF(2), degree 1..16, as bitmasks including the
// leading bit. Generator is x (index 2) for every entry.
constexpr uint32_t kBinaryModulus[17] = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,    0x43,   0x89, 0x11D,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443,  0x8003, 0x1100B};

// --- dense polynomial helpers over Z_p, used only during construction ---

using ZPoly = std::vector<uint32_t>;  // low-order first, no trailing zeros

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic b over Z_p.
ZPoly zp_rem(ZPoly a, const ZPoly& b, uint32_t p) {
  zp_trim(a);
  while (a.size() >= b.size()) {
    uint32_t c = a.back();
    size_t shift = a.size() - b.size();
    if (c != 0) {
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t t = (uint64_t)c * b[j] % p;
        a[shift + j] = (a[shift + j] + p - (uint32_t)t) % p;
      }
    }
    a.pop_back();
    zp_trim(a);
  }
  return a;
}

ZPoly zp_mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& mod, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZPoly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (uint32_t)((prod[i + j] + (uint64_t)a[i] * b[j]) % p);
  return zp_rem(std::move(prod), mod, p);
}

ZPoly zp_from_index(uint64_t idx, uint32_t p) {
  ZPoly out;
  while (idx) {
    out.push_back((uint32_t)(idx % p));
    idx /= p;
  }
  return out;
}

bool zp_irreducible(const ZPoly& f, uint32_t p) {
  uint32_t deg = (uint32_t)f.size() - 1;
  // trial division by every monic polynomial of degree 1..deg/2
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      ZPoly g = zp_from_index(idx, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (zp_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

uint32_t smallest_primitive_root(uint32_t p) {
  for (uint32_t g = 2; g < p; ++g) {
    uint64_t v = g;
    uint32_t ord = 1;
    while (v != 1) {
      v = v * g % p;
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

uint32_t Field::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t out = 0, pw = 1;
  for (uint32_t i = 0; i < m_; ++i, pw *= p_) {
    uint32_t d = (a / pw) % p_;
    out += ((p_ - d) % p_) * pw;
  }
  return out;
}

uint32_t Field::add_general(uint32_t a, uint32_t b) const {
  uint32_t out = 0, pw = 1;
  for (uint32_t i = 0; i < m_; ++i, pw *= p_) {
    uint32_t da = (a / pw) % p_, db = (b / pw) % p_;
    out += ((da + db) % p_) * pw;
  }
  return out;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[q_ - 1 - log_[a]];
}

uint32_t Field::div(uint32_t a, uint32_t b) const {
  if (b == 0) throw std::domain_error("division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + (q_ - 1) - log_[b]];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  uint64_t r = (uint64_t)log_[a] * (e % (q_ - 1)) % (q_ - 1);
  return exp_[r];
}

uint32_t Field::pow_signed(uint32_t a, int64_t e) const {
  if (e >= 0) return pow(a, (uint64_t)e);
  return inv(pow(a, (uint64_t)(-e)));
}

uint32_t Field::log_of(uint32_t a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

void Field::build_tables_from_generator() {
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  uint32_t v = 1;
  for (uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = v;
    exp_[i + (q_ - 1)] = v;
    if (v != 1 && log_[v] != 0)
      throw std::logic_error("generator order too small");
    log_[v] = i;
    // multiply by the generator using polynomial arithmetic over Z_p
    if (p_ == 2) {
      v <<= 1;
      if (v & q_) v ^= kBinaryModulus[m_];
    } else if (m_ == 1) {
      v = (uint32_t)((uint64_t)v * gen_ % p_);
    } else {
      ZPoly a = zp_from_index(v, p_), g = zp_from_index(gen_, p_);
      ZPoly mod(modulus_.begin(), modulus_.end());
      ZPoly r = zp_mulmod(a, g, mod, p_);
      v = 0;
      uint32_t pw = 1;
      for (uint32_t c : r) {
        v += c * pw;
        pw *= p_;
      }
    }
  }
  if (v != 1) throw std::logic_error("generator order mismatch");
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m == 0) throw std::invalid_argument("field extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("field order exceeds 2^16");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = (uint32_t)q;

  if (m == 1) {
    f->gen_ = p == 2 ? 1 : smallest_primitive_root(p);
    if (p == 2) {
      // GF(2): trivial tables
      f->exp_ = {1, 1};
      f->log_ = {0, 0};
      return f;
    }
    f->build_tables_from_generator();
    return f;
  }

  if (p == 2) {
    uint32_t mask = kBinaryModulus[m];
    f->modulus_.assign(m + 1, 0);
    for (uint32_t i = 0; i <= m; ++i) f->modulus_[i] = (mask >> i) & 1;
    f->gen_ = 2;  // x is primitive for every tabled modulus
    f->build_tables_from_generator();
    return f;
  }

  // odd p, m > 1: first monic irreducible of degree m in index order
  uint64_t count = 1;
  for (uint32_t i = 0; i < m; ++i) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    ZPoly cand = zp_from_index(idx, p);
    cand.resize(m + 1, 0);
    cand[m] = 1;
    if (zp_irreducible(cand, p)) {
      f->modulus_.assign(cand.begin(), cand.end());
      break;
    }
  }
  if (f->modulus_.empty()) throw std::logic_error("no irreducible modulus found");

  // generator: smallest element of multiplicative order q-1
  ZPoly mod(f->modulus_.begin(), f->modulus_.end());
  for (uint32_t g = 2; g < f->q_; ++g) {
    ZPoly v = zp_from_index(g, p);
    uint32_t ord = 1;
    ZPoly w = v;
    while (!(w.size() == 1 && w[0] == 1)) {
      w = zp_mulmod(w, v, mod, p);
      ++ord;
      if (ord > f->q_) break;
    }
    if (ord == f->q_ - 1) {
      f->gen_ = g;
      break;
    }
  }
  if (f->gen_ == 0) throw std::logic_error("no generator found");
  f->build_tables_from_generator();
  return f;
}

std::shared_ptr<const Field> Field::of_order(uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  uint32_t p = 0;
  for (uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return make(q, 1);  // q prime
  uint32_t m = 0;
  uint64_t v = 1;
  while (v < q) {
    v *= p;
    ++m;
  }
  if (v != q) throw std::invalid_argument("field order is not a prime power");
  return make(p, m);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (m_ > 1) {
    os << " = GF(" << p_ << "^" << m_ << "), modulus";
    bool first = true;
    for (uint32_t i = m_ + 1; i-- > 0;) {
      if (modulus_[i] == 0) continue;
      os << (first ? " " : " + ");
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  os << ", generator " << gen_;
  return os.str();
}

}  // namespace softdec
