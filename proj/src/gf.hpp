#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace softdec {

// GF(p^m), p^m <= 2^16. An element is named by its canonical index: index v
// stands for the polynomial sum_i v_i x^i where v_i are the base-p digits of
// v (least significant digit = constant term). Index 0 is the zero element.
// Arithmetic runs on log/antilog tables built from a fixed generator, so the
// same (p, m) always yields the same tables.
class Field {
public:
  static std::shared_ptr<const Field> make(uint32_t p, uint32_t m);
  static std::shared_ptr<const Field> of_order(uint32_t q);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  bool binary() const { return p_ == 2; }

  uint32_t add(uint32_t a, uint32_t b) const {
    return p_ == 2 ? (a ^ b) : add_general(a, b);
  }
  uint32_t neg(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const {
    return p_ == 2 ? (a ^ b) : add_general(a, neg(b));
  }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const;  // requires a != 0
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;  // 0^0 = 1
  uint32_t pow_signed(uint32_t a, int64_t e) const;

  // Generator g with order q-1; exp_at(i) = g^(i mod (q-1)), log_of(a) in [0, q-2].
  uint32_t generator() const { return gen_; }
  uint32_t exp_at(uint64_t i) const { return exp_[i % (q_ - 1)]; }
  uint32_t log_of(uint32_t a) const;  // requires a != 0

  // Monic modulus, coefficients low-order first, size m+1. Empty when m == 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  std::string describe() const;

private:
  Field() = default;
  uint32_t add_general(uint32_t a, uint32_t b) const;
  void build_tables_from_generator();

  uint32_t p_ = 0, m_ = 0, q_ = 0, gen_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;  // size 2(q-1): wrap-free products of two logs
  std::vector<uint32_t> log_;  // size q; log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace softdec
