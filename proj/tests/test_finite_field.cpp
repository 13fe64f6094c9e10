#include <doctest.h>

#include <set>

#include "fpppart/errors.hpp"
#include "fpppart/finite_field.hpp"
#include "oracles.hpp"

using fpp::GaloisField;
using fpp::Poly;

TEST_SUITE_BEGIN("finite_field");

TEST_CASE("prime and prime power detection") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 251u, 65521u}) CHECK(fpp::is_prime(p));
  for (uint32_t x : {0u, 1u, 4u, 9u, 15u, 91u, 65535u}) CHECK_FALSE(fpp::is_prime(x));

  uint32_t p = 0;
  uint32_t k = 0;
  CHECK(fpp::is_prime_power(8, &p, &k));
  CHECK(p == 2);
  CHECK(k == 3);
  CHECK(fpp::is_prime_power(9, &p, &k));
  CHECK(p == 3);
  CHECK(k == 2);
  CHECK(fpp::is_prime_power(25, &p, &k));
  CHECK(p == 5);
  CHECK(fpp::is_prime_power(19, &p, &k));
  CHECK(k == 1);
  CHECK(fpp::is_prime_power(65536));

  for (uint32_t x : {0u, 1u, 6u, 10u, 12u, 100u, 1000u, 65535u}) {
    CHECK_FALSE(fpp::is_prime_power(x));
  }
}

TEST_CASE("find_irreducible picks the canonical modulus") {
  CHECK(fpp::find_irreducible(2, 2) == Poly{1, 1, 1});  // x^2+x+1
  CHECK(fpp::find_irreducible(3, 2) == Poly{1, 0, 1});  // x^2+1
  CHECK(fpp::find_irreducible(5, 1) == Poly{0, 1});     // sentinel x
  CHECK(fpp::find_irreducible(2, 3) == Poly{1, 1, 0, 1});

  CHECK_THROWS_AS(fpp::find_irreducible(6, 2), fpp::ConfigError);
  CHECK_THROWS_AS(fpp::find_irreducible(2, 0), fpp::ConfigError);
  CHECK_THROWS_AS(fpp::find_irreducible(2, 17), fpp::ConfigError);  // 2^17 > 2^16
}

TEST_CASE("find_irreducible is minimal and correct per brute-force factoring") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const Poly chosen = fpp::find_irreducible(p, k);
    REQUIRE(chosen.size() == k + 1);
    CHECK(chosen.back() == 1);
    CHECK_FALSE(oracle::reducible(chosen, p));

    // Every candidate with a lexicographically smaller (c_{k-1},...,c_0)
    // tuple must factor. Tuple order equals numeric order of sum c_i * p^i.
    uint64_t chosen_rank = 0;
    for (uint32_t i = k; i-- > 0;) chosen_rank = chosen_rank * p + chosen[i];
    for (uint64_t m = 0; m < chosen_rank; ++m) {
      Poly f(k + 1, 0);
      uint64_t rest = m;
      for (uint32_t i = 0; i < k; ++i) {
        f[i] = static_cast<uint32_t>(rest % p);
        rest /= p;
      }
      f[k] = 1;
      CHECK(oracle::reducible(f, p));
    }
  }
}

TEST_CASE("arithmetic examples") {
  const GaloisField gf2 = GaloisField::make(2, 1);
  CHECK(gf2.add(1, 1) == 0);

  const GaloisField gf3 = GaloisField::make(3, 1);
  CHECK(gf3.add(2, 2) == 1);
  CHECK(gf3.mul(2, 2) == 1);

  const GaloisField gf4 = GaloisField::make(2, 2);
  const uint32_t x = gf4.encode({0, 1});
  const uint32_t x1 = gf4.encode({1, 1});
  CHECK(gf4.add(x, x1) == 1);
  CHECK(gf4.mul(x, x) == x1);  // x^2 reduces to x+1 mod x^2+x+1
  CHECK(gf4.inv(x) == x1);

  const GaloisField gf5 = GaloisField::make(5, 1);
  CHECK(gf5.mul(0, 4) == 0);
  CHECK(gf5.inv(2) == 3);
  CHECK(gf5.inv(1) == 1);

  CHECK_THROWS_AS(gf5.inv(0), fpp::DomainError);
  CHECK_THROWS_AS(gf5.add(5, 1), fpp::DomainError);  // out of range
}

TEST_CASE("GF(4) multiplication table matches brute-force reduction") {
  const GaloisField gf4 = GaloisField::make(2, 2);
  const Poly modulus = gf4.spec().modulus;
  for (uint32_t a = 0; a < 4; ++a) {
    for (uint32_t b = 0; b < 4; ++b) {
      const auto prod = oracle::poly_mul(gf4.decode(a), gf4.decode(b), 2);
      const auto reduced = prod.empty() ? Poly{0, 0} : oracle::poly_reduce(prod, modulus, 2);
      CHECK(gf4.mul(a, b) == gf4.encode(reduced));
    }
  }
  // inverse of x by exhaustive scan of the three nonzero elements
  const uint32_t x = gf4.encode({0, 1});
  uint32_t found = 0;
  for (uint32_t b = 1; b < 4; ++b) {
    if (gf4.mul(x, b) == 1) found = b;
  }
  CHECK(found == gf4.inv(x));
}

TEST_CASE("field axioms hold exhaustively for q in {2,3,4,5,7,8,9}") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    uint32_t p = 0;
    uint32_t k = 0;
    REQUIRE(fpp::is_prime_power(q, &p, &k));
    const GaloisField gf = GaloisField::make(p, k);
    REQUIRE(gf.q() == q);

    for (uint32_t a = 0; a < q; ++a) {
      CHECK(gf.encode(gf.decode(a)) == a);
      CHECK(gf.add(a, 0) == a);
      CHECK(gf.mul(a, 1) == a);
      CHECK(gf.mul(a, 0) == 0);
      CHECK(gf.add(a, gf.neg(a)) == 0);
      if (a != 0) {
        CHECK(gf.mul(a, gf.inv(a)) == 1);
        CHECK(gf.inv(gf.inv(a)) == a);
      }
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(gf.add(a, b) == gf.add(b, a));
        CHECK(gf.mul(a, b) == gf.mul(b, a));
        for (uint32_t c = 0; c < q; ++c) {
          CHECK(gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c)));
          CHECK(gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c)));
          CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
        }
      }
    }

    // additive and multiplicative inverses are unique
    for (uint32_t a = 0; a < q; ++a) {
      uint32_t add_invs = 0;
      uint32_t mul_invs = 0;
      for (uint32_t b = 0; b < q; ++b) {
        if (gf.add(a, b) == 0) ++add_invs;
        if (gf.mul(a, b) == 1) ++mul_invs;
      }
      CHECK(add_invs == 1);
      CHECK(mul_invs == (a == 0 ? 0 : 1));
    }
  }
}

TEST_CASE("large fields stay consistent without tables") {
  // 2^16 and 251^2 both exceed the table threshold.
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 16}, {251, 2}}) {
    const GaloisField gf = GaloisField::make(p, k);
    CHECK(gf.q() > GaloisField::kTableMaxOrder);
    for (uint32_t a : {1u, 2u, 17u, 1000u, gf.q() - 1}) {
      CHECK(gf.mul(a, gf.inv(a)) == 1);
      CHECK(gf.encode(gf.decode(a)) == a);
      CHECK(gf.add(a, gf.neg(a)) == 0);
    }
  }
}

TEST_CASE("from_spec validates invariants") {
  fpp::FieldSpec good = GaloisField::make(2, 2).spec();
  CHECK_NOTHROW(GaloisField::from_spec(good));

  fpp::FieldSpec bad = good;
  bad.modulus = {0, 0, 1};  // x^2, reducible
  CHECK_THROWS_AS(GaloisField::from_spec(bad), fpp::ConfigError);

  bad = good;
  bad.q = 5;
  CHECK_THROWS_AS(GaloisField::from_spec(bad), fpp::ConfigError);
}

TEST_SUITE_END();
