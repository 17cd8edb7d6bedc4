#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rigid/linalg.hpp"
#include "rigid/poly.hpp"

namespace rigid {

/// entry(x, y) = sum_i left_i(x) * right_i(y). The width certifies that the
/// induced q^n x q^n matrix has rank at most width().
struct RankFactorization {
  Field field;
  unsigned n = 0;
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  /// pairs[0 .. x_group) are (x^b, F_b(y)); the rest are (G_c(x), y^c).
  std::size_t x_group = 0;

  std::size_t width() const noexcept { return pairs.size(); }
};

/// 2 * m_{floor(d/2)}(q, n).
std::uint64_t clp_width_bound(unsigned q, unsigned n, unsigned d);

/// C(a, b) reduced into the prime subfield, b = 0 .. a.
std::vector<Elem> binomial_row(const Field& field, unsigned a);

/// Expands P(x + y) monomial by monomial and groups every term x^b y^{a-b}
/// by its low-degree side: |b| <= floor(d/2) goes to the pair keyed by x^b,
/// otherwise the pair keyed by y^{a-b}. Zero pairs are dropped.
///
/// Throws DegreeExceedsD if degree(P) > d, DegreeOutOfRange if d > (q-1)n.
RankFactorization clp_decompose(const Polynomial& p, unsigned d);

/// Throws DimensionMismatch on wrong point lengths.
Elem eval_factorization(const RankFactorization& f, const Point& x, const Point& y);

struct MaterializedFactorization {
  DenseMatrix left;   // N x R, left(x, i) = g_i(x)
  DenseMatrix right;  // R x N, right(i, y) = h_i(y)
};

/// Throws BudgetExceeded if N * R > max_entries.
MaterializedFactorization materialize(const RankFactorization& f, std::uint64_t max_entries);

}  // namespace rigid
