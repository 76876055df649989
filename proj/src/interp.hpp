#pragma once
#include <cstdint>
#include <vector>

#include "gf.hpp"
#include "poly.hpp"

namespace softdec {

// Interpolation constraint: a zero of the stated multiplicity at (x, y).
struct InterpPoint {
  uint32_t x = 0, y = 0;
  uint32_t mult = 0;
};

struct InterpDiag {
  uint64_t constraints = 0;  // sum of mult*(mult+1)/2
  uint64_t wdeg = 0;         // weighted degree of the returned polynomial
  uint32_t ydeg = 0;         // its actual Y-degree
  uint32_t ymax = 0;         // Y-degree cap searched
  uint64_t dstar = 0;        // least d whose monomial count beats the constraints
};

// Count of monomials X^a Y^b with a + w*b <= d and b <= ymax.
uint64_t monomial_count(uint64_t d, uint64_t w, uint64_t ymax);

// Minimal (1, k-1)-weighted polynomial vanishing to the required multiplicity
// at every point, Y-degree at most ymax. Points are processed in the given
// order; callers pass them grouped by column so same-x points are adjacent.
// The leading coefficient is normalized to 1.
WPoly interpolate_bivariate(const FieldPtr& f, const std::vector<InterpPoint>& pts,
                            uint32_t k, uint32_t ymax, InterpDiag* diag = nullptr);

// Multivariate constraint: zero of multiplicity mult at (x, ys[0], ..., ys[M-1]).
struct MultiPoint {
  uint32_t x = 0;
  std::vector<uint32_t> ys;
  uint32_t mult = 0;
};

// Dense linear-algebra interpolation over the first C+1 monomials in the
// (1, k-1, ..., k-1) order: returns a kernel element with minimal leading
// monomial. Small instances only (the basis is materialized in full).
WPoly interpolate_multi(const FieldPtr& f, const std::vector<MultiPoint>& pts,
                        uint32_t k, uint32_t mvars, InterpDiag* diag = nullptr);

}  // namespace softdec
