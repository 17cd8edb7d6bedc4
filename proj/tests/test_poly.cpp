#include "doctest.h"
#include "rigid/poly.hpp"
#include "rigid/rigidity.hpp"
#include "test_support.hpp"

using namespace rigid;
using rigid::testing::mono;
using rigid::testing::pt;
using rigid::testing::random_polynomial;
using rigid::testing::throws_code;

TEST_CASE("polynomial term bookkeeping") {
  const Field gf3 = Field::make(3);
  Polynomial p(gf3, 2);
  CHECK(p.is_zero());
  CHECK(p.degree() == 0);
  p.add_term(mono({1, 1}), 2);
  p.add_term(mono({1, 1}), 1);  // cancels
  CHECK(p.is_zero());
  p.add_term(mono({2, 0}), 1);
  p.add_term(mono({0, 1}), 0);  // zero coefficients are never stored
  CHECK(p.terms().size() == 1);
  CHECK(p.degree() == 2);
  CHECK(throws_code([&] { p.add_term(mono({3, 0}), 1); }, ErrorCode::DegreeOutOfRange));
  CHECK(throws_code([&] { p.add_term(mono({1}), 1); }, ErrorCode::DimensionMismatch));
  CHECK(throws_code([&] { p.add_term(mono({1, 0}), 3); }, ErrorCode::IndexOutOfRange));
}

TEST_CASE("eval examples") {
  const Field gf2 = Field::make(2);
  const Polynomial x1x2 = Polynomial::term(gf2, mono({1, 1}));
  CHECK(eval(x1x2, pt({1, 1})) == 1);
  CHECK(eval(x1x2, pt({1, 0})) == 0);

  const Field gf3 = Field::make(3);
  Polynomial p(gf3, 2);
  p.add_term(mono({2, 0}), 1);
  p.add_term(mono({0, 1}), 2);
  CHECK(eval(p, pt({2, 2})) == 2);
  // 0^0 = 1
  CHECK(eval(Polynomial::constant(gf3, 2, 2), pt({0, 0})) == 2);
  CHECK(throws_code([&] { eval(p, pt({1})); }, ErrorCode::DimensionMismatch));
}

TEST_CASE("interpolating the delta function at 0 over GF(2)^2") {
  const Field gf2 = Field::make(2);
  const FunctionTable delta(gf2, 2, {1, 0, 0, 0});
  const Polynomial p = interpolate_full(delta);
  Polynomial expected(gf2, 2);
  for (auto m : {mono({0, 0}), mono({1, 0}), mono({0, 1}), mono({1, 1})}) expected.add_term(m, 1);
  CHECK(p == expected);
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(eval(p, decode_point(i, 2, 2)) == delta[i]);
}

TEST_CASE("constant polynomial tabulates to a constant table") {
  for (unsigned q : {2u, 5u, 9u}) {
    const Field f = Field::make(q);
    const Elem c = static_cast<Elem>(q - 1);
    CHECK(to_table(Polynomial::constant(f, 3, c)) == FunctionTable::constant(f, 3, c));
  }
}

TEST_CASE("to_table matches pointwise eval and interpolate_full inverts it") {
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Field gf3 = Field::make(3);
    const Polynomial p = random_polynomial(gf3, 3, 6, rng);
    const FunctionTable t = to_table(p);
    for (std::uint64_t x = 0; x < t.size(); ++x) REQUIRE(t[x] == eval(p, decode_point(x, 3, 3)));
    CHECK(interpolate_full(t) == p);
  }
  for (unsigned q : {4u, 5u, 7u, 8u, 16u}) {
    const Field f = Field::make(q);
    const Polynomial p = random_polynomial(f, 2, 2 * (q - 1), rng);
    CHECK(interpolate_full(to_table(p)) == p);
  }
}

TEST_CASE("vandermonde inverse for every supported q") {
  for (unsigned q : prime_powers_up_to(kMaxFieldOrder)) {
    const Field f = Field::make(q);
    CAPTURE(q);
    CHECK(matmul(univariate_vandermonde_inverse(f), univariate_vandermonde(f)) ==
          DenseMatrix::identity(f, q));
  }
}

TEST_CASE("tensorized interpolation agrees with the full linear-solve oracle") {
  SplitMix64 rng(8);
  struct Case {
    unsigned q, n;
  };
  for (Case c : {Case{2, 8}, Case{3, 5}, Case{4, 4}, Case{5, 3}, Case{16, 2}, Case{7, 2}}) {
    const Field f = Field::make(c.q);
    const std::uint64_t size = checked_pow(c.q, c.n);
    std::vector<Monomial> all;
    for (std::uint64_t i = 0; i < size; ++i) all.push_back(decode_monomial(i, c.q, c.n));
    const DenseMatrix e = evaluation_matrix(f, c.n, all);
    for (int trial = 0; trial < 3; ++trial) {
      const FunctionTable t = random_function(c.q, c.n, rng.next());
      const auto via_solve = solve(e, t.values());
      CHECK(dense_coefficients(interpolate_full(t)) == via_solve);
    }
  }
}

TEST_CASE("approximate examples") {
  const Field gf2 = Field::make(2);
  const FunctionTable x1x2 = to_table(Polynomial::term(gf2, mono({1, 1})));
  const Approximation exact = approximate(x1x2, 2);
  CHECK(exact.bad.empty());
  CHECK(exact.poly == Polynomial::term(gf2, mono({1, 1})));

  const Approximation lin = approximate(x1x2, 1);
  CHECK(lin.bad.size() <= 1);
  CHECK(lin.poly.degree() <= 1);

  const FunctionTable f = random_function(2, 8, 17);
  const Approximation a5 = approximate(f, 5);
  CHECK(a5.bad.size() <= 256 - 219);
  CHECK(a5.poly.degree() <= 5);
  CHECK(approximate(f, 8).bad.empty());

  CHECK(throws_code([&] { approximate(f, 9); }, ErrorCode::DegreeOutOfRange));
}

TEST_CASE("approximate is deterministic and agrees with f off the bad set") {
  SplitMix64 rng(12);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const unsigned n = q == 2 ? 6 : 3;
    const FunctionTable f = random_function(q, n, rng.next());
    for (unsigned d = 0; d <= (q - 1) * n; ++d) {
      const Approximation a = approximate(f, d);
      const Approximation b = approximate(f, d);
      REQUIRE(a.poly == b.poly);
      REQUIRE(a.bad == b.bad);
      REQUIRE(a.poly.degree() <= d);
      REQUIRE(a.pivots.size() == count_monomials(q, n, d));
      REQUIRE(a.bad.size() <= f.size() - count_monomials(q, n, d));
      std::size_t k = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        const bool listed = k < a.bad.size() && a.bad[k] == x;
        if (listed) ++k;
        REQUIRE((eval(a.poly, decode_point(x, q, n)) != f[x]) == listed);
      }
      // f agrees with P on the pivot points
      for (auto x : a.pivots) REQUIRE(eval(a.poly, decode_point(x, q, n)) == f[x]);
    }
  }
}

TEST_CASE("approximation bound holds for every function on tiny spaces") {
  struct Case {
    unsigned q, n;
  };
  for (Case c : {Case{2, 2}, Case{2, 3}, Case{3, 1}, Case{3, 2}}) {
    const Field f = Field::make(c.q);
    const std::uint64_t size = checked_pow(c.q, c.n);
    const std::uint64_t count = checked_pow(c.q, static_cast<unsigned>(size));
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> values(size);
      std::uint64_t v = code;
      for (auto& e : values) {
        e = static_cast<Elem>(v % c.q);
        v /= c.q;
      }
      const FunctionTable t(f, c.n, values);
      for (unsigned d = 0; d <= (c.q - 1) * c.n; ++d)
        REQUIRE(approximate(t, d).bad.size() <= size - count_monomials(c.q, c.n, d));
    }
  }
}

TEST_CASE("evaluation matrix of M_d has full column rank") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const unsigned n = q == 2 ? 6 : 3;
    const Field f = Field::make(q);
    for (unsigned d = 0; d <= (q - 1) * n; ++d) {
      const auto monomials = enumerate_monomials(q, n, d);
      CHECK(rank(evaluation_matrix(f, n, monomials)) == monomials.size());
    }
  }
}

TEST_CASE("function table validation") {
  const Field gf3 = Field::make(3);
  CHECK(throws_code([&] { FunctionTable(gf3, 2, std::vector<Elem>(8, 0)); }, ErrorCode::DimensionMismatch));
  CHECK(throws_code([&] { FunctionTable(gf3, 1, {0, 1, 3}); }, ErrorCode::IndexOutOfRange));
}
