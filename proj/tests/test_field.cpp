#include "doctest.h"
#include "rigid/field.hpp"
#include "rigid/rigidity.hpp"
#include "test_support.hpp"

using namespace rigid;
using rigid::testing::throws_code;

TEST_CASE("make_field accepts prime powers and rejects the rest") {
  CHECK(Field::make(2).q() == 2);
  CHECK(Field::make(4).p() == 2);
  CHECK(Field::make(4).k() == 2);
  CHECK(Field::make(243).k() == 5);
  CHECK(throws_code([] { Field::make(6); }, ErrorCode::NotPrimePower));
  CHECK(throws_code([] { Field::make(12); }, ErrorCode::NotPrimePower));
  CHECK(throws_code([] { Field::make(1); }, ErrorCode::NotPrimePower));
  CHECK(throws_code([] { Field::make(0); }, ErrorCode::NotPrimePower));
  CHECK(throws_code([] { Field::make(257); }, ErrorCode::NotPrimePower));
  CHECK(throws_code([] { Field::make(512); }, ErrorCode::NotPrimePower));
}

TEST_CASE("element arithmetic examples") {
  CHECK(Field::make(2).add(1, 1) == 0);
  CHECK(Field::make(5).mul(3, 4) == 2);
  // GF(4) = F_2[x]/(x^2+x+1), 2 = x, 3 = x+1: x(x+1) = x^2+x = 1
  const Field gf4 = Field::make(4);
  CHECK(gf4.mul(2, 3) == 1);
  CHECK(gf4.mul(2, 2) == 3);
  // GF(8): x^3 = x + 1
  const Field gf8 = Field::make(8);
  CHECK(gf8.mul(2, gf8.mul(2, 2)) == 3);
  // GF(9) = F_3[x]/(x^2+1): x^2 = -1 = 2
  const Field gf9 = Field::make(9);
  CHECK(gf9.mul(3, 3) == 2);
  CHECK(gf9.add(3, 3) == 6);
  CHECK(gf9.neg(4) == 8);  // -(1 + x) = 2 + 2x
}

TEST_CASE("moduli are monic and documented degree") {
  for (unsigned q : prime_powers_up_to(kMaxFieldOrder)) {
    const Field f = Field::make(q);
    if (f.k() == 1) {
      CHECK(f.modulus().empty());
      continue;
    }
    REQUIRE(f.modulus().size() == f.k() + 1);
    CHECK(f.modulus().back() == 1);
  }
}

TEST_CASE("inverse of zero throws") {
  for (unsigned q : {2u, 3u, 4u, 256u})
    CHECK(throws_code([q] { Field::make(q).inv(0); }, ErrorCode::DivideByZero));
}

TEST_CASE("exhaustive field axioms for every q <= 16") {
  for (unsigned q : prime_powers_up_to(16)) {
    CAPTURE(q);
    CHECK(check_field_axioms(Field::make(q)));
  }
}

TEST_CASE("sampled axioms, inverses and characteristic for 16 < q <= 256") {
  SplitMix64 rng(7);
  for (unsigned q : prime_powers_up_to(kMaxFieldOrder)) {
    if (q <= 16) continue;
    CAPTURE(q);
    const Field f = Field::make(q);
    for (unsigned a = 1; a < q; ++a) {
      const Elem e = static_cast<Elem>(a);
      REQUIRE(f.mul(e, f.inv(e)) == 1);
      REQUIRE(f.inv(f.inv(e)) == e);
    }
    for (int i = 0; i < 20000; ++i) {
      const auto a = static_cast<Elem>(rng.below(q));
      const auto b = static_cast<Elem>(rng.below(q));
      const auto c = static_cast<Elem>(rng.below(q));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    }
    Elem acc = 0;
    for (unsigned i = 0; i < f.p(); ++i) acc = f.add(acc, 1);
    CHECK(acc == 0);
    // The multiplicative group has order q - 1.
    for (unsigned a = 1; a < q; ++a) REQUIRE(f.pow(static_cast<Elem>(a), q - 1) == 1);
  }
}

TEST_CASE("from_integer embeds through the prime subfield") {
  const Field gf9 = Field::make(9);
  CHECK(gf9.from_integer(4) == 1);
  CHECK(gf9.from_integer(-1) == 2);
  CHECK(Field::make(256).from_integer(3) == 1);
}
