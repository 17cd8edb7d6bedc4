#include "doctest.h"
#include "rigid/clp.hpp"
#include "rigid/rigidity.hpp"
#include "test_support.hpp"

using namespace rigid;
using rigid::testing::mono;
using rigid::testing::pt;
using rigid::testing::random_polynomial;
using rigid::testing::throws_code;

namespace {

bool pointwise_exact(const RankFactorization& fac, const Polynomial& p) {
  const unsigned q = p.field().q();
  const std::uint64_t size = checked_pow(q, p.n());
  for (std::uint64_t xi = 0; xi < size; ++xi) {
    const Point x = decode_point(xi, q, p.n());
    for (std::uint64_t yi = 0; yi < size; ++yi) {
      const Point y = decode_point(yi, q, p.n());
      if (eval_factorization(fac, x, y) != eval(p, add_points(p.field(), x, y))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("constant polynomial gives a single pair") {
  const Field gf5 = Field::make(5);
  const Polynomial c = Polynomial::constant(gf5, 2, 3);
  const RankFactorization fac = clp_decompose(c, 0);
  REQUIRE(fac.width() == 1);
  CHECK(fac.x_group == 1);
  CHECK(fac.pairs[0].first == Polynomial::constant(gf5, 2, 1));
  CHECK(fac.pairs[0].second == c);
  CHECK(pointwise_exact(fac, c));
}

TEST_CASE("P = x1 over GF(2)^2, d = 1") {
  const Field gf2 = Field::make(2);
  const Polynomial x1 = Polynomial::term(gf2, mono({1, 0}));
  const RankFactorization fac = clp_decompose(x1, 1);
  REQUIRE(fac.width() == 2);
  CHECK(fac.width() == 2 * count_monomials(2, 2, 0));
  // (1, y1) then (x1, 1)
  CHECK(fac.pairs[0].first == Polynomial::constant(gf2, 2, 1));
  CHECK(fac.pairs[0].second == x1);
  CHECK(fac.pairs[1].first == x1);
  CHECK(fac.pairs[1].second == Polynomial::constant(gf2, 2, 1));
  CHECK(pointwise_exact(fac, x1));
}

TEST_CASE("P = x1 x2 over GF(2)^2, d = 2") {
  const Field gf2 = Field::make(2);
  const Polynomial p = Polynomial::term(gf2, mono({1, 1}));
  const RankFactorization fac = clp_decompose(p, 2);
  CHECK(fac.width() == 4);
  CHECK(fac.width() <= clp_width_bound(2, 2, 2));
  CHECK(clp_width_bound(2, 2, 2) == 6);
  CHECK(pointwise_exact(fac, p));
  CHECK(eval_factorization(fac, pt({1, 0}), pt({0, 1})) == 1);
}

TEST_CASE("zero polynomial has width zero") {
  const Field gf3 = Field::make(3);
  const RankFactorization fac = clp_decompose(Polynomial(gf3, 2), 3);
  CHECK(fac.width() == 0);
  CHECK(eval_factorization(fac, pt({1, 2}), pt({2, 2})) == 0);
  CHECK(throws_code([&] { eval_factorization(fac, pt({1}), pt({2, 2})); }, ErrorCode::DimensionMismatch));
}

TEST_CASE("degree preconditions") {
  const Field gf3 = Field::make(3);
  const Polynomial p = Polynomial::term(gf3, mono({2, 1}));
  CHECK(throws_code([&] { clp_decompose(p, 2); }, ErrorCode::DegreeExceedsD));
  CHECK(throws_code([&] { clp_decompose(p, 5); }, ErrorCode::DegreeOutOfRange));
}

TEST_CASE("binomial rows match repeated multiplication by (x + y)") {
  for (unsigned q : prime_powers_up_to(kMaxFieldOrder)) {
    const Field f = Field::make(q);
    // coefficients of (x + y)^a, index b for x^b y^(a-b), built with field ops
    std::vector<Elem> poly{1};
    for (unsigned a = 0; a < q; ++a) {
      REQUIRE(binomial_row(f, a) == poly);
      std::vector<Elem> next(poly.size() + 1, 0);
      for (std::size_t b = 0; b < poly.size(); ++b) {
        next[b] = f.add(next[b], poly[b]);          // times y
        next[b + 1] = f.add(next[b + 1], poly[b]);  // times x
      }
      poly = std::move(next);
    }
  }
  // small rows against exact integer binomials
  const Field gf7 = Field::make(7);
  CHECK(binomial_row(gf7, 6) == std::vector<Elem>{1, 6, 1, 6, 1, 6, 1});  // 1 6 15 20 15 6 1 mod 7
}

TEST_CASE("exactness, width bound and routing on random polynomials") {
  SplitMix64 rng(41);
  struct Case {
    unsigned q, n;
  };
  for (Case c : {Case{2, 4}, Case{3, 2}, Case{4, 2}, Case{5, 2}, Case{9, 1}}) {
    const Field f = Field::make(c.q);
    for (unsigned d = 0; d <= (c.q - 1) * c.n; ++d) {
      for (int i = 0; i < 4; ++i) {
        const Polynomial p = random_polynomial(f, c.n, d, rng);
        const RankFactorization fac = clp_decompose(p, d);
        REQUIRE(fac.width() <= clp_width_bound(c.q, c.n, d));
        REQUIRE(pointwise_exact(fac, p));
        for (std::size_t k = 0; k < fac.width(); ++k) {
          const auto& [g, h] = fac.pairs[k];
          REQUIRE_FALSE(g.is_zero());
          REQUIRE_FALSE(h.is_zero());
          const Polynomial& keyed = k < fac.x_group ? g : h;
          REQUIRE(keyed.terms().size() == 1);
          REQUIRE(keyed.degree() <= d / 2);
        }
      }
    }
  }
}

TEST_CASE("factorization matches direct evaluation on 10^4 random pairs") {
  SplitMix64 rng(4);
  const Field gf3 = Field::make(3);
  const Polynomial p = random_polynomial(gf3, 4, 4, rng);
  const RankFactorization fac = clp_decompose(p, 4);
  for (int i = 0; i < 10000; ++i) {
    const Point x = decode_point(rng.below(81), 3, 4);
    const Point y = decode_point(rng.below(81), 3, 4);
    REQUIRE(eval_factorization(fac, x, y) == eval(p, add_points(gf3, x, y)));
  }
}

TEST_CASE("materialize") {
  const Field gf2 = Field::make(2);
  {
    const RankFactorization fac = clp_decompose(Polynomial::constant(gf2, 2, 1), 0);
    const auto m = materialize(fac, 1 << 20);
    CHECK(m.left == DenseMatrix::from_rows(gf2, {{1}, {1}, {1}, {1}}));
    CHECK(m.right == DenseMatrix::from_rows(gf2, {{1, 1, 1, 1}}));
  }
  {
    const RankFactorization fac = clp_decompose(Polynomial::term(gf2, mono({1})), 1);
    const auto m = materialize(fac, 1 << 20);
    CHECK(matmul(m.left, m.right) == DenseMatrix::from_rows(gf2, {{0, 1}, {1, 0}}));
  }
  SplitMix64 rng(9);
  for (unsigned q : {2u, 3u, 4u}) {
    const Field f = Field::make(q);
    const unsigned n = q == 2 ? 5 : 3;
    for (unsigned d = 0; d <= (q - 1) * n; d += 2) {
      const Polynomial p = random_polynomial(f, n, d, rng);
      const RankFactorization fac = clp_decompose(p, d);
      const auto m = materialize(fac, 1 << 20);
      const DenseMatrix product = fac.width() == 0 ? DenseMatrix(f, checked_pow(q, n), checked_pow(q, n))
                                                   : matmul(m.left, m.right);
      CHECK(rank(product) <= fac.width());
      CHECK(product == build_matrix(to_table(p)));
    }
  }
  const RankFactorization big = clp_decompose(random_polynomial(gf2, 6, 6, rng), 6);
  CHECK(throws_code([&] { materialize(big, 64); }, ErrorCode::BudgetExceeded));
}
