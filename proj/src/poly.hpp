#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gf.hpp"

namespace softdec {

// C(n, k) mod p by Lucas: product of digit binomials in base p.
uint32_t binom_mod_p(uint64_t n, uint64_t k, uint32_t p);

// Dense univariate polynomial, coefficients low-order first, no trailing zero.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}
  UniPoly(FieldPtr f, std::vector<uint32_t> coeffs);

  static UniPoly constant(FieldPtr f, uint32_t c);
  static UniPoly monomial(FieldPtr f, uint32_t deg, uint32_t c = 1);
  // message (u_1, ..., u_k) -> u_1 + u_2 X + ... + u_k X^(k-1)
  static UniPoly from_message(FieldPtr f, const std::vector<uint32_t>& u);

  const FieldPtr& field() const { return f_; }
  bool zero() const { return c_.empty(); }
  int deg() const { return (int)c_.size() - 1; }
  uint32_t coeff(uint32_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  uint32_t leading() const;
  std::vector<uint32_t> to_message(uint32_t k) const;  // zero-padded to k

  uint32_t eval(uint32_t x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scale(uint32_t c) const;
  UniPoly monic() const;
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& num, const UniPoly& den);
  UniPoly mod(const UniPoly& den) const { return divrem(*this, den).second; }
  UniPoly powmod(uint64_t e, const UniPoly& den) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }
  std::string str(const char* var = "X") const;

private:
  void trim();
  FieldPtr f_;
  std::vector<uint32_t> c_;
};

// Monomial X^x * Y1^y[0] * ... * YM^y[M-1].
struct Monomial {
  uint32_t x = 0;
  std::vector<uint32_t> y;
  uint64_t ysum() const;
  bool operator==(const Monomial& o) const { return x == o.x && y == o.y; }
};

// (1, w, ..., w)-weighted order: weighted degree, then total Y-degree, then
// the exponent tuple (y_1, ..., y_M, x) lexicographically.
struct MonomialOrder {
  uint64_t yweight = 1;
  uint64_t wdeg(const Monomial& a) const { return a.x + yweight * a.ysum(); }
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial in X, Y1..YM with a fixed Y-weight. Terms are
// kept in increasing monomial order, so iteration and printing are canonical.
class WPoly {
public:
  WPoly() = default;
  WPoly(FieldPtr f, uint32_t nvars_y, uint64_t yweight);

  const FieldPtr& field() const { return f_; }
  uint32_t vars_y() const { return my_; }
  uint64_t yweight() const { return ord_.yweight; }
  bool zero() const { return t_.empty(); }
  size_t terms() const { return t_.size(); }

  uint32_t coeff(const Monomial& mono) const;
  void set_coeff(const Monomial& mono, uint32_t c);
  void add_term(const Monomial& mono, uint32_t c);

  Monomial leading_monomial() const;  // largest in order; poly must be nonzero
  uint64_t weighted_degree() const;   // of the leading monomial
  uint32_t degree_x() const;
  uint32_t degree_y(uint32_t l) const;
  uint64_t degree_y_total() const;

  WPoly operator+(const WPoly& o) const;
  WPoly operator-(const WPoly& o) const;
  WPoly scale(uint32_t c) const;
  WPoly mul_monomial(const Monomial& mono, uint32_t c) const;
  WPoly operator*(const WPoly& o) const;

  uint32_t eval(uint32_t x, const std::vector<uint32_t>& ys) const;

  // Hasse derivative coefficient D_{(a,b)} at a point: the (a,b) coefficient
  // of the polynomial translated so the point is the origin.
  uint32_t hasse_at(uint32_t a, const std::vector<uint32_t>& b, uint32_t px,
                    const std::vector<uint32_t>& py) const;
  bool has_multiplicity(uint32_t mult, uint32_t px,
                        const std::vector<uint32_t>& py) const;

  // Substitute Y_l = fs[l](X); result is univariate.
  UniPoly substitute(const std::vector<UniPoly>& fs) const;

  const std::map<Monomial, uint32_t, MonomialOrder>& term_map() const { return t_; }
  std::string str() const;

private:
  FieldPtr f_;
  uint32_t my_ = 1;
  MonomialOrder ord_;
  std::map<Monomial, uint32_t, MonomialOrder> t_;
};

}  // namespace softdec
