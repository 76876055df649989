#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "codes.hpp"
#include "doctest.h"
#include "gf.hpp"
#include "poly.hpp"
#include "rng.hpp"

using namespace softdec;

TEST_SUITE_BEGIN("codes");

TEST_CASE("encoding is evaluation at the canonical nonzero points") {
  auto f = Field::make(5, 1);
  auto c = make_rs(f, 2);
  CHECK(c.n == 4);
  CHECK(c.points == std::vector<uint32_t>{1, 2, 3, 4});
  CHECK(rs_encode(c, {1, 2}) == std::vector<uint32_t>{3, 0, 2, 4});
  CHECK(rs_encode(c, {0, 0}) == std::vector<uint32_t>{0, 0, 0, 0});
  CHECK(c.rate() == doctest::Approx(0.5));

  auto g16 = Field::make(2, 4);
  auto c16 = make_rs(g16, 3);
  auto p = UniPoly::from_message(g16, {7, 1, 9});
  auto cw = rs_encode(c16, {7, 1, 9});
  for (uint32_t j = 0; j < c16.n; ++j) CHECK(cw[j] == p.eval(j + 1));

  CHECK_THROWS_AS((void)make_rs(f, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)make_rs(f, 5), std::invalid_argument);  // k > n
  CHECK_THROWS_AS((void)rs_encode(c, {1}), std::invalid_argument);
  CHECK_THROWS_AS((void)rs_encode(c, {1, 9}), std::invalid_argument);
}

TEST_CASE("twisted encoding scales coordinates") {
  auto f = Field::make(2, 4);
  auto c = make_rs(f, 2);
  Rng rng(21);
  std::vector<uint32_t> w(c.n), ones(c.n, 1);
  for (auto& v : w) v = 1 + (uint32_t)rng.below(15);
  std::vector<uint32_t> msg = {5, 11};
  auto plain = rs_encode(c, msg);
  auto twisted = grs_encode(c, w, msg);
  for (uint32_t j = 0; j < c.n; ++j) CHECK(twisted[j] == f->mul(w[j], plain[j]));
  CHECK(grs_encode(c, ones, msg) == plain);

  auto bad = w;
  bad[3] = 0;
  CHECK_THROWS_AS((void)grs_encode(c, bad, msg), std::invalid_argument);
  CHECK_THROWS_AS((void)grs_encode(c, {1, 1}, msg), std::invalid_argument);
}

TEST_CASE("hamming distance counts disagreements") {
  CHECK(hamming_distance({1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(hamming_distance({1, 2, 3}, {1, 0, 4}) == 2);
  CHECK_THROWS_AS((void)hamming_distance({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("enumeration covers every message exactly once, in index order") {
  auto f = Field::make(2, 2);
  auto c = make_rs(f, 2);
  CHECK(codeword_count(c) == 16);
  CHECK(message_at(c, 0) == std::vector<uint32_t>{0, 0});
  CHECK(message_at(c, 1) == std::vector<uint32_t>{1, 0});
  CHECK(message_at(c, 4) == std::vector<uint32_t>{0, 1});
  CHECK(message_at(c, 7) == std::vector<uint32_t>{3, 1});

  uint64_t expect = 0;
  std::set<std::vector<uint32_t>> seen;
  enumerate_codewords(c, [&](uint64_t idx, const std::vector<uint32_t>& msg,
                             const std::vector<uint32_t>& cw) {
    CHECK(idx == expect);
    CHECK(msg == message_at(c, idx));
    CHECK(cw == rs_encode(c, msg));
    seen.insert(cw);
    ++expect;
  });
  CHECK(expect == 16);
  CHECK(seen.size() == 16);  // the map msg -> codeword is injective

  // enumeration is guarded, not an invitation to loop 2^24 times
  auto big = make_rs(Field::make(2, 8), 3);
  CHECK_THROWS_AS((void)codeword_count(big), std::domain_error);
}

TEST_CASE("correlated-code construction: modulus and companions") {
  auto f = Field::make(2, 2);
  auto c = make_pv(f, 2, 2);
  CHECK(c.n == 3);
  CHECK(c.ext->q() == 16);
  CHECK(c.e.deg() == 2);
  CHECK(c.e.leading() == 1);
  for (uint32_t x = 0; x < 4; ++x) CHECK(c.e.eval(x) != 0);  // irreducible deg 2
  CHECK(c.rate() == doctest::Approx(2.0 / 6.0));

  Rng rng(22);
  for (int it = 0; it < 10; ++it) {
    std::vector<uint32_t> msg = {(uint32_t)rng.below(4), (uint32_t)rng.below(4)};
    auto polys = pv_message_polys(c, msg);
    REQUIRE(polys.size() == 2);
    CHECK(polys[0] == UniPoly::from_message(f, msg));
    CHECK(polys[1] == polys[0].powmod(c.exps[0], c.e));
    auto cw = pv_encode(c, msg);
    REQUIRE(cw.size() == c.n);
    for (uint32_t j = 0; j < c.n; ++j) {
      auto parts = pv_decompose(c, cw[j]);
      REQUIRE(parts.size() == 2);
      CHECK(parts[0] == polys[0].eval(c.points[j]));
      CHECK(parts[1] == polys[1].eval(c.points[j]));
    }
  }
}

TEST_CASE("symbol packing is a bijection") {
  auto f = Field::make(2, 2);
  for (uint32_t m : {2u, 3u}) {
    auto c = make_pv(f, m, 2);
    std::set<uint32_t> seen;
    std::vector<uint32_t> parts(m);
    // walk all q^M part tuples through compose, then back
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= 4;
    for (uint64_t idx = 0; idx < total; ++idx) {
      uint64_t r = idx;
      for (uint32_t i = 0; i < m; ++i) {
        parts[i] = (uint32_t)(r % 4);
        r /= 4;
      }
      uint32_t sym = pv_compose(c, parts);
      CHECK(pv_decompose(c, sym) == parts);
      seen.insert(sym);
    }
    CHECK(seen.size() == total);
  }

  // prime base field takes the identity-embedding path
  auto f5 = Field::make(5, 1);
  auto c5 = make_pv(f5, 2, 2);
  CHECK(c5.ext->q() == 25);
  for (uint32_t a = 0; a < 5; ++a)
    for (uint32_t b = 0; b < 5; ++b)
      CHECK(pv_decompose(c5, pv_compose(c5, {a, b})) == std::vector<uint32_t>{a, b});
}

TEST_CASE("explicit companion exponents are honored") {
  auto f = Field::make(2, 2);
  auto c = make_pv(f, 2, 2, {3});
  CHECK(c.exps == std::vector<uint64_t>{3});
  std::vector<uint32_t> msg = {2, 1};
  auto polys = pv_message_polys(c, msg);
  CHECK(polys[1] == UniPoly::from_message(f, msg).powmod(3, c.e));
}

TEST_CASE("correlated-code construction rejects bad shapes") {
  auto f = Field::make(2, 2);
  CHECK_THROWS_AS((void)make_pv(f, 1, 2), std::invalid_argument);   // M >= 2
  CHECK_THROWS_AS((void)make_pv(f, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)make_pv(f, 2, 4), std::invalid_argument);   // k > n
  CHECK_THROWS_AS((void)make_pv(f, 3, 2, {2}), std::invalid_argument);  // wrong count
  auto big = Field::make(2, 8);
  CHECK_THROWS_AS((void)make_pv(big, 3, 2), std::invalid_argument);  // q^M > 2^16
}

TEST_SUITE_END();
