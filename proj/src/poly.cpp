#include "poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace softdec {

uint32_t binom_mod_p(uint64_t n, uint64_t k, uint32_t p) {
  if (k > n) return 0;
  if (p == 2) return ((n & k) == k) ? 1 : 0;
  uint64_t r = 1;
  while (k > 0 || n > 0) {
    uint64_t nd = n % p, kd = k % p;
    n /= p;
    k /= p;
    if (kd > nd) return 0;
    // C(nd, kd) mod p via the multiplicative formula with Fermat inverses
    uint64_t num = 1, den = 1;
    for (uint64_t t = 1; t <= kd; ++t) {
      num = num * ((nd - kd + t) % p) % p;
      den = den * (t % p) % p;
    }
    // den^(p-2) mod p
    uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    r = r * (num % p) % p * inv % p;
  }
  return (uint32_t)r;
}

// --- UniPoly ---

UniPoly::UniPoly(FieldPtr f, std::vector<uint32_t> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(FieldPtr f, uint32_t c) {
  return UniPoly(std::move(f), {c});
}

UniPoly UniPoly::monomial(FieldPtr f, uint32_t deg, uint32_t c) {
  std::vector<uint32_t> v(deg + 1, 0);
  v[deg] = c;
  return UniPoly(std::move(f), std::move(v));
}

UniPoly UniPoly::from_message(FieldPtr f, const std::vector<uint32_t>& u) {
  return UniPoly(std::move(f), u);
}

uint32_t UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

std::vector<uint32_t> UniPoly::to_message(uint32_t k) const {
  if (c_.size() > k) throw std::domain_error("polynomial degree exceeds message length");
  std::vector<uint32_t> u(c_);
  u.resize(k, 0);
  return u;
}

uint32_t UniPoly::eval(uint32_t x) const {
  uint32_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = f_->add(coeff((uint32_t)i), o.coeff((uint32_t)i));
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = f_->sub(coeff((uint32_t)i), o.coeff((uint32_t)i));
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (zero() || o.zero()) return UniPoly(f_);
  std::vector<uint32_t> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] = f_->add(v[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::scale(uint32_t c) const {
  std::vector<uint32_t> v(c_);
  for (auto& x : v) x = f_->mul(x, c);
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::monic() const {
  if (zero()) return *this;
  return scale(f_->inv(leading()));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& num, const UniPoly& den) {
  if (den.zero()) throw std::domain_error("polynomial division by zero");
  const auto& f = den.f_;
  std::vector<uint32_t> r(num.c_);
  if (r.size() < den.c_.size()) return {UniPoly(f), num};
  std::vector<uint32_t> q(r.size() - den.c_.size() + 1, 0);
  uint32_t dinv = f->inv(den.leading());
  for (size_t i = r.size(); i-- >= den.c_.size();) {
    uint32_t c = f->mul(r[i], dinv);
    if (c != 0) {
      size_t shift = i + 1 - den.c_.size();
      q[shift] = c;
      for (size_t j = 0; j < den.c_.size(); ++j)
        r[shift + j] = f->sub(r[shift + j], f->mul(c, den.c_[j]));
    }
    if (i + 1 == den.c_.size()) break;
  }
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly UniPoly::powmod(uint64_t e, const UniPoly& den) const {
  UniPoly base = this->mod(den);
  UniPoly acc = UniPoly::constant(f_, 1).mod(den);
  while (e) {
    if (e & 1) acc = (acc * base).mod(den);
    base = (base * base).mod(den);
    e >>= 1;
  }
  return acc;
}

std::string UniPoly::str(const char* var) const {
  if (zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) {
      if (c_[i] != 1) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

// --- monomials ---

uint64_t Monomial::ysum() const {
  uint64_t s = 0;
  for (uint32_t v : y) s += v;
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  uint64_t wa = wdeg(a), wb = wdeg(b);
  if (wa != wb) return wa < wb;
  uint64_t sa = a.ysum(), sb = b.ysum();
  if (sa != sb) return sa < sb;
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

// --- WPoly ---

WPoly::WPoly(FieldPtr f, uint32_t nvars_y, uint64_t yweight)
    : f_(std::move(f)), my_(nvars_y), ord_{yweight}, t_(ord_) {
  if (nvars_y == 0) throw std::invalid_argument("needs at least one Y variable");
}

uint32_t WPoly::coeff(const Monomial& mono) const {
  auto it = t_.find(mono);
  return it == t_.end() ? 0 : it->second;
}

void WPoly::set_coeff(const Monomial& mono, uint32_t c) {
  if (mono.y.size() != my_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0)
    t_.erase(mono);
  else
    t_[mono] = c;
}

void WPoly::add_term(const Monomial& mono, uint32_t c) {
  set_coeff(mono, f_->add(coeff(mono), c));
}

Monomial WPoly::leading_monomial() const {
  if (t_.empty()) throw std::domain_error("leading monomial of zero polynomial");
  return t_.rbegin()->first;
}

uint64_t WPoly::weighted_degree() const { return ord_.wdeg(leading_monomial()); }

uint32_t WPoly::degree_x() const {
  uint32_t d = 0;
  for (const auto& [mono, c] : t_) d = std::max(d, mono.x);
  return d;
}

uint32_t WPoly::degree_y(uint32_t l) const {
  uint32_t d = 0;
  for (const auto& [mono, c] : t_) d = std::max(d, mono.y.at(l));
  return d;
}

uint64_t WPoly::degree_y_total() const {
  uint64_t d = 0;
  for (const auto& [mono, c] : t_) d = std::max(d, mono.ysum());
  return d;
}

WPoly WPoly::operator+(const WPoly& o) const {
  WPoly out(*this);
  for (const auto& [mono, c] : o.t_) out.add_term(mono, c);
  return out;
}

WPoly WPoly::operator-(const WPoly& o) const {
  WPoly out(*this);
  for (const auto& [mono, c] : o.t_) out.add_term(mono, f_->neg(c));
  return out;
}

WPoly WPoly::scale(uint32_t c) const {
  WPoly out(f_, my_, ord_.yweight);
  if (c == 0) return out;
  for (const auto& [mono, v] : t_) out.t_[mono] = f_->mul(v, c);
  return out;
}

WPoly WPoly::mul_monomial(const Monomial& mono, uint32_t c) const {
  WPoly out(f_, my_, ord_.yweight);
  if (c == 0) return out;
  for (const auto& [m0, v] : t_) {
    Monomial m = m0;
    m.x += mono.x;
    for (uint32_t l = 0; l < my_; ++l) m.y[l] += mono.y[l];
    out.t_[m] = f_->mul(v, c);
  }
  return out;
}

WPoly WPoly::operator*(const WPoly& o) const {
  WPoly out(f_, my_, ord_.yweight);
  for (const auto& [mono, c] : o.t_) out = out + mul_monomial(mono, c);
  return out;
}

uint32_t WPoly::eval(uint32_t x, const std::vector<uint32_t>& ys) const {
  uint32_t acc = 0;
  for (const auto& [mono, c] : t_) {
    uint32_t t = f_->mul(c, f_->pow(x, mono.x));
    for (uint32_t l = 0; l < my_; ++l) t = f_->mul(t, f_->pow(ys[l], mono.y[l]));
    acc = f_->add(acc, t);
  }
  return acc;
}

uint32_t WPoly::hasse_at(uint32_t a, const std::vector<uint32_t>& b, uint32_t px,
                         const std::vector<uint32_t>& py) const {
  // D_{(a,b)} Q (px, py) = sum_{i>=a, j>=b} C(i,a) prod C(j_l,b_l) c_{i,j} px^{i-a} py^{j-b}
  const uint32_t p = f_->p();
  uint32_t acc = 0;
  for (const auto& [mono, c] : t_) {
    if (mono.x < a) continue;
    uint32_t bin = binom_mod_p(mono.x, a, p);
    if (bin == 0) continue;
    uint32_t t = f_->mul(c, bin);  // bin < p is a prime-subfield element
    t = f_->mul(t, f_->pow(px, mono.x - a));
    bool dead = false;
    for (uint32_t l = 0; l < my_; ++l) {
      if (mono.y[l] < b[l]) {
        dead = true;
        break;
      }
      uint32_t bl = binom_mod_p(mono.y[l], b[l], p);
      if (bl == 0) {
        dead = true;
        break;
      }
      t = f_->mul(t, bl);
      t = f_->mul(t, f_->pow(py[l], mono.y[l] - b[l]));
    }
    if (dead) continue;
    acc = f_->add(acc, t);
  }
  return acc;
}

namespace {
// Visit every way to split `total` across buf[pos..parts-1]; f returns false to abort.
template <class F>
bool each_composition(uint32_t parts, uint32_t total, std::vector<uint32_t>& buf,
                      uint32_t pos, F&& f) {
  if (pos + 1 == parts) {
    buf[pos] = total;
    return f(buf);
  }
  for (uint32_t v = 0; v <= total; ++v) {
    buf[pos] = v;
    if (!each_composition(parts, total - v, buf, pos + 1, f)) return false;
  }
  return true;
}
}  // namespace

bool WPoly::has_multiplicity(uint32_t mult, uint32_t px,
                             const std::vector<uint32_t>& py) const {
  // every Hasse coefficient of total order < mult must vanish
  std::vector<uint32_t> buf(my_ + 1);
  for (uint32_t total = 0; total < mult; ++total) {
    bool ok = each_composition(my_ + 1, total, buf, 0, [&](const std::vector<uint32_t>& ab) {
      std::vector<uint32_t> b(ab.begin() + 1, ab.end());
      return hasse_at(ab[0], b, px, py) == 0;
    });
    if (!ok) return false;
  }
  return true;
}

UniPoly WPoly::substitute(const std::vector<UniPoly>& fs) const {
  if (fs.size() != my_) throw std::invalid_argument("substitution arity mismatch");
  // memoize powers of each fs[l]
  std::vector<std::vector<UniPoly>> pw(my_);
  for (uint32_t l = 0; l < my_; ++l) pw[l].push_back(UniPoly::constant(f_, 1));
  auto power = [&](uint32_t l, uint32_t e) -> const UniPoly& {
    while (pw[l].size() <= e) pw[l].push_back(pw[l].back() * fs[l]);
    return pw[l][e];
  };
  UniPoly acc(f_);
  for (const auto& [mono, c] : t_) {
    UniPoly t = UniPoly::monomial(f_, mono.x, c);
    for (uint32_t l = 0; l < my_; ++l) t = t * power(l, mono.y[l]);
    acc = acc + t;
  }
  return acc;
}

std::string WPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : t_) {
    if (!first) os << " + ";
    first = false;
    bool unit = (c == 1) && (mono.x > 0 || mono.ysum() > 0);
    if (!unit) os << c;
    bool any = !unit;
    if (mono.x > 0) {
      if (any) os << "*";
      os << "X";
      if (mono.x > 1) os << "^" << mono.x;
      any = true;
    }
    for (uint32_t l = 0; l < my_; ++l) {
      if (mono.y[l] == 0) continue;
      if (any) os << "*";
      os << "Y";
      if (my_ > 1) os << (l + 1);
      if (mono.y[l] > 1) os << "^" << mono.y[l];
      any = true;
    }
  }
  return os.str();
}

}  // namespace softdec
