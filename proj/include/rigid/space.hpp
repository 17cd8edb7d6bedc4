#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rigid/field.hpp"

namespace rigid {

/// A point of F_q^n. Canonical index is little-endian base q.
struct Point {
  std::vector<Elem> coords;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Reduced monomial x_1^{a_1} ... x_n^{a_n} with every a_i <= q - 1.
struct Monomial {
  std::vector<std::uint8_t> exponents;

  unsigned degree() const noexcept;
  std::size_t n() const noexcept { return exponents.size(); }
  bool is_constant() const noexcept { return degree() == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: lower total degree first; equal degrees compare
/// lexicographically with x_1 largest, so for n = 2: 1, x1, x2, x1^2, x1 x2, x2^2.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Exact q^n; throws Overflow if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t q, unsigned n);

std::uint64_t encode_point(const Point& p, unsigned q);
/// Throws IndexOutOfRange unless index < q^n.
Point decode_point(std::uint64_t index, unsigned q, unsigned n);
/// Throws DimensionMismatch on differing lengths.
Point add_points(const Field& f, const Point& a, const Point& b);

/// Monomials share the base-q encoding of their exponent vectors.
std::uint64_t encode_monomial(const Monomial& m, unsigned q);
Monomial decode_monomial(std::uint64_t index, unsigned q, unsigned n);

/// counts[d] = m_d(q, n) for d = 0 .. (q-1)n.
struct DegreeProfile {
  unsigned q = 0;
  unsigned n = 0;
  std::vector<std::uint64_t> counts;

  unsigned max_degree() const noexcept { return (q - 1) * n; }
  std::uint64_t total() const noexcept { return counts.back(); }
};

/// Prefix sums of the coefficients of (1 + t + ... + t^{q-1})^n, exact.
/// Throws Overflow if q^n exceeds 64 bits.
DegreeProfile degree_profile(unsigned q, unsigned n);

/// m_d(q, n). Throws DegreeOutOfRange if d > (q-1)n.
std::uint64_t count_monomials(unsigned q, unsigned n, unsigned d);

/// All reduced monomials of degree <= d in GradedLexLess order.
std::vector<Monomial> enumerate_monomials(unsigned q, unsigned n, unsigned d);

/// Smallest d with q^n - m_d(q, n) <= t.
unsigned min_degree_for_agreement(unsigned q, unsigned n, std::uint64_t t);

double binary_entropy(double x);

/// Largest delta in (0, 1/2] with H(delta) * (q - 1) <= eps * log2(q), found
/// by bisection; the returned delta always satisfies the inequality.
double entropy_delta(unsigned q, double eps);

/// x_i^{a} -> x_{i,1} x_{i,2} ... x_{i,a}: a degree-preserving injection of
/// M(q, n) into the multilinear monomials M(2, n(q-1)).
Monomial binary_embedding(const Monomial& m, unsigned q);

/// m_d(q, n) <= m_d(2, n(q-1)).
bool binary_embedding_holds(unsigned q, unsigned n, unsigned d);

std::string to_string(const Monomial& m);

}  // namespace rigid
