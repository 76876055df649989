#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "gf.hpp"
#include "poly.hpp"

namespace softdec {

// Reed-Solomon code of full length n = q-1: messages are polynomials of degree
// < k, codewords their evaluations at every nonzero field element in canonical
// index order.
struct RSCode {
  FieldPtr f;
  uint32_t n = 0, k = 0;
  std::vector<uint32_t> points;  // alpha values, canonical indices 1..q-1
  double rate() const { return (double)k / (double)n; }
};

RSCode make_rs(const FieldPtr& f, uint32_t k);

std::vector<uint32_t> rs_encode(const RSCode& c, const std::vector<uint32_t>& msg);

// Generalized twist: coordinate j is scaled by w[j] (all w[j] != 0).
std::vector<uint32_t> grs_encode(const RSCode& c, const std::vector<uint32_t>& w,
                                 const std::vector<uint32_t>& msg);

uint32_t hamming_distance(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

// Exhaustive enumeration, message index = sum u_i q^(i-1). Guarded to q^k <= 2^20.
uint64_t codeword_count(const RSCode& c);
std::vector<uint32_t> message_at(const RSCode& c, uint64_t index);
void enumerate_codewords(
    const RSCode& c,
    const std::function<void(uint64_t, const std::vector<uint32_t>&,
                             const std::vector<uint32_t>&)>& visit);

// Correlated-evaluation code: a message f (degree < k over GF(q)) is sent
// together with its companions g_i = f^(a_i) mod e, all evaluated at the
// nonzero base-field points; the M values at each point are packed into one
// symbol of GF(q^M) on the basis (1, g, ..., g^(M-1)) of the extension
// generator, after embedding each through the subfield map phi.
struct PVCode {
  FieldPtr base;   // GF(q)
  FieldPtr ext;    // GF(q^M)
  uint32_t mvars = 0;  // M: number of correlated polynomials including f
  uint32_t n = 0, k = 0;
  UniPoly e;                     // monic irreducible over base, degree k
  std::vector<uint64_t> exps;    // a_1..a_(M-1)
  std::vector<uint32_t> points;  // base-field evaluation points, 1..q-1
  std::vector<uint32_t> embed;   // phi: base index -> ext index
  std::vector<uint32_t> basis;   // (1, g, ..., g^(M-1)) in the extension
  std::vector<uint32_t> dec_matrix;  // inverse of the packing map over Z_p
  double rate() const { return (double)k / ((double)mvars * (double)n); }
};

PVCode make_pv(const FieldPtr& base, uint32_t mvars, uint32_t k);
PVCode make_pv(const FieldPtr& base, uint32_t mvars, uint32_t k,
               std::vector<uint64_t> exps);

// {f, g_1, ..., g_(M-1)} for a message
std::vector<UniPoly> pv_message_polys(const PVCode& c, const std::vector<uint32_t>& msg);
std::vector<uint32_t> pv_encode(const PVCode& c, const std::vector<uint32_t>& msg);
// split one extension symbol back into M base-field values
std::vector<uint32_t> pv_decompose(const PVCode& c, uint32_t symbol);
uint32_t pv_compose(const PVCode& c, const std::vector<uint32_t>& parts);

}  // namespace softdec
