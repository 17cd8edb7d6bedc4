#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rigid/field.hpp"
#include "rigid/linalg.hpp"
#include "rigid/space.hpp"

namespace rigid {

/// Element of the reduced function space F(q, n): a sparse map from monomials
/// (every exponent <= q - 1) to nonzero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Elem, GradedLexLess>;

  Polynomial(Field field, unsigned n) : field_(std::move(field)), n_(n) {}

  static Polynomial constant(Field field, unsigned n, Elem c);
  static Polynomial term(Field field, Monomial m, Elem c = 1);

  const Field& field() const noexcept { return field_; }
  unsigned n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest total degree among the terms; 0 for the zero polynomial.
  unsigned degree() const noexcept;

  Elem coeff(const Monomial& m) const;
  /// Adds c * m. Throws DimensionMismatch on wrong length, DegreeOutOfRange if
  /// some exponent exceeds q - 1.
  void add_term(const Monomial& m, Elem c);
  void set_term(const Monomial& m, Elem c);

  Polynomial& operator+=(const Polynomial& other);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Monomial& m) const;

  Field field_;
  unsigned n_;
  Terms terms_;
};

/// Values of a function F_q^n -> F_q, indexed by encode_point.
class FunctionTable {
 public:
  /// Throws DimensionMismatch unless values.size() == q^n, IndexOutOfRange
  /// for values outside [0, q).
  FunctionTable(Field field, unsigned n, std::vector<Elem> values);

  static FunctionTable constant(Field field, unsigned n, Elem c);

  const Field& field() const noexcept { return field_; }
  unsigned q() const noexcept { return field_.q(); }
  unsigned n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return values_.size(); }
  const std::vector<Elem>& values() const noexcept { return values_; }
  Elem operator[](std::uint64_t index) const noexcept { return values_[index]; }
  Elem at(const Point& x) const { return values_[encode_point(x, q())]; }

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  Field field_;
  unsigned n_;
  std::vector<Elem> values_;
};

/// Sum of coeff * prod x_i^{a_i}, with 0^0 = 1.
Elem eval(const Polynomial& p, const Point& x);

/// Dense coefficient vector indexed by encode_monomial.
std::vector<Elem> dense_coefficients(const Polynomial& p);
Polynomial from_dense_coefficients(const Field& field, unsigned n, const std::vector<Elem>& coeffs);

/// Evaluation at every point via n rounds of q-point univariate evaluation.
FunctionTable to_table(const Polynomial& p);

/// Inverse of to_table: n rounds of q-point univariate interpolation.
Polynomial interpolate_full(const FunctionTable& f);

/// V[x][a] = x^a and its inverse over GF(q); the building blocks of the
/// tensorized transforms.
DenseMatrix univariate_vandermonde(const Field& field);
DenseMatrix univariate_vandermonde_inverse(const Field& field);

/// E[x][j] = monomials[j](x) for every point x in index order.
DenseMatrix evaluation_matrix(const Field& field, unsigned n, const std::vector<Monomial>& monomials);

struct Approximation {
  Polynomial poly;
  /// Point indices, increasing, where poly disagrees with the input.
  std::vector<std::uint64_t> bad;
  /// Point indices at which poly was forced to agree with the input.
  std::vector<std::uint64_t> pivots;
};

/// Degree-d polynomial agreeing with f on a greedily chosen set of m_d(q, n)
/// points, so |bad| <= q^n - m_d(q, n).
///
/// The rows of the evaluation matrix of M_d(q, n) are generated one point at
/// a time in index order and fed to a RowSpanner; only the m_d x m_d pivot
/// system is kept. Throws DegreeOutOfRange if d > (q-1)n.
Approximation approximate(const FunctionTable& f, unsigned d);

}  // namespace rigid
