#include "rigid/poly.hpp"

#include <stdexcept>
#include <string>

namespace rigid {

Polynomial Polynomial::constant(Field field, unsigned n, Elem c) {
  Polynomial p(std::move(field), n);
  p.add_term(Monomial{std::vector<std::uint8_t>(n, 0)}, c);
  return p;
}

Polynomial Polynomial::term(Field field, Monomial m, Elem c) {
  Polynomial p(std::move(field), static_cast<unsigned>(m.n()));
  p.add_term(m, c);
  return p;
}

unsigned Polynomial::degree() const noexcept {
  // GradedLexLess puts the highest degree last.
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void Polynomial::check(const Monomial& m) const {
  if (m.n() != n_) throw Error(ErrorCode::DimensionMismatch, "monomial has wrong length");
  for (auto a : m.exponents)
    if (a >= field_.q()) throw Error(ErrorCode::DegreeOutOfRange, "exponent exceeds q-1");
}

Elem Polynomial::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Elem{0} : it->second;
}

void Polynomial::add_term(const Monomial& m, Elem c) {
  check(m);
  if (!field_.contains(c)) throw Error(ErrorCode::IndexOutOfRange, "coefficient");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::set_term(const Monomial& m, Elem c) {
  check(m);
  if (!field_.contains(c)) throw Error(ErrorCode::IndexOutOfRange, "coefficient");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!(field_ == other.field_) || n_ != other.n_)
    throw Error(ErrorCode::DimensionMismatch, "polynomials over different spaces");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

FunctionTable::FunctionTable(Field field, unsigned n, std::vector<Elem> values)
    : field_(std::move(field)), n_(n), values_(std::move(values)) {
  if (values_.size() != checked_pow(field_.q(), n_))
    throw Error(ErrorCode::DimensionMismatch, "table length must be q^n");
  for (Elem v : values_)
    if (!field_.contains(v)) throw Error(ErrorCode::IndexOutOfRange, "table value");
}

FunctionTable FunctionTable::constant(Field field, unsigned n, Elem c) {
  const std::uint64_t size = checked_pow(field.q(), n);
  return FunctionTable(std::move(field), n, std::vector<Elem>(size, c));
}

Elem eval(const Polynomial& p, const Point& x) {
  if (x.coords.size() != p.n()) throw Error(ErrorCode::DimensionMismatch, "point length");
  const Field& f = p.field();
  Elem sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Elem v = c;
    for (std::size_t i = 0; i < m.n() && v != 0; ++i)
      if (m.exponents[i] != 0) v = f.mul(v, f.pow(x.coords[i], m.exponents[i]));
    sum = f.add(sum, v);
  }
  return sum;
}

std::vector<Elem> dense_coefficients(const Polynomial& p) {
  std::vector<Elem> out(checked_pow(p.field().q(), p.n()), 0);
  for (const auto& [m, c] : p.terms()) out[encode_monomial(m, p.field().q())] = c;
  return out;
}

Polynomial from_dense_coefficients(const Field& field, unsigned n, const std::vector<Elem>& coeffs) {
  if (coeffs.size() != checked_pow(field.q(), n))
    throw Error(ErrorCode::DimensionMismatch, "coefficient vector length must be q^n");
  Polynomial p(field, n);
  for (std::uint64_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.set_term(decode_monomial(i, field.q(), n), coeffs[i]);
  return p;
}

DenseMatrix univariate_vandermonde(const Field& field) {
  const unsigned q = field.q();
  DenseMatrix v(field, q, q);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned a = 0; a < q; ++a) v(x, a) = field.pow(static_cast<Elem>(x), a);
  return v;
}

DenseMatrix univariate_vandermonde_inverse(const Field& field) {
  // Lagrange over F_q: g(t) = sum_x g(x) (1 - (t - x)^{q-1}) and
  // (t - x)^{q-1} = sum_a t^a x^{q-1-a}, so c_0 = g(0) and
  // c_a = -sum_x g(x) x^{q-1-a} for a >= 1.
  const unsigned q = field.q();
  DenseMatrix inv(field, q, q);
  inv(0, 0) = 1;
  for (unsigned a = 1; a < q; ++a)
    for (unsigned x = 0; x < q; ++x)
      inv(a, x) = field.neg(field.pow(static_cast<Elem>(x), q - 1 - a));
  return inv;
}

namespace {

// Applies `t` along every coordinate axis of a length-q^n array.
std::vector<Elem> tensor_transform(const Field& field, unsigned n, const DenseMatrix& t,
                                   std::vector<Elem> v) {
  const unsigned q = field.q();
  std::vector<Elem> in(q), out(q);
  std::uint64_t stride = 1;
  for (unsigned axis = 0; axis < n; ++axis) {
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < v.size(); base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (unsigned x = 0; x < q; ++x) in[x] = v[base + off + x * stride];
        for (unsigned a = 0; a < q; ++a) {
          Elem acc = 0;
          const auto row = t.row(a);
          for (unsigned x = 0; x < q; ++x)
            if (row[x] != 0 && in[x] != 0) acc = field.add(acc, field.mul(row[x], in[x]));
          out[a] = acc;
        }
        for (unsigned a = 0; a < q; ++a) v[base + off + a * stride] = out[a];
      }
    }
    stride = block;
  }
  return v;
}

}  // namespace

FunctionTable to_table(const Polynomial& p) {
  const Field& f = p.field();
  return FunctionTable(f, p.n(),
                       tensor_transform(f, p.n(), univariate_vandermonde(f), dense_coefficients(p)));
}

Polynomial interpolate_full(const FunctionTable& table) {
  const Field& f = table.field();
  auto coeffs = tensor_transform(f, table.n(), univariate_vandermonde_inverse(f), table.values());
  return from_dense_coefficients(f, table.n(), coeffs);
}

namespace {

// powers[x * q + a] = x^a
std::vector<Elem> power_table(const Field& f) {
  const unsigned q = f.q();
  std::vector<Elem> pw(q * q);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned a = 0; a < q; ++a) pw[x * q + a] = f.pow(static_cast<Elem>(x), a);
  return pw;
}

void fill_evaluation_row(const Field& f, const std::vector<Elem>& pw, const std::vector<Elem>& point,
                         const std::vector<Monomial>& monomials, std::span<Elem> row) {
  const unsigned q = f.q();
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    const auto& e = monomials[j].exponents;
    Elem v = 1;
    for (std::size_t i = 0; i < e.size() && v != 0; ++i)
      if (e[i] != 0) v = f.mul(v, pw[point[i] * q + e[i]]);
    row[j] = v;
  }
}

void increment_point(std::vector<Elem>& digits, unsigned q) {
  for (auto& d : digits) {
    if (++d < q) return;
    d = 0;
  }
}

}  // namespace

DenseMatrix evaluation_matrix(const Field& field, unsigned n, const std::vector<Monomial>& monomials) {
  const std::uint64_t points = checked_pow(field.q(), n);
  DenseMatrix e(field, points, monomials.size());
  const auto pw = power_table(field);
  std::vector<Elem> digits(n, 0);
  for (std::uint64_t x = 0; x < points; ++x) {
    fill_evaluation_row(field, pw, digits, monomials, e.row(x));
    increment_point(digits, field.q());
  }
  return e;
}

Approximation approximate(const FunctionTable& f, unsigned d) {
  const Field& field = f.field();
  const unsigned q = f.q();
  const unsigned n = f.n();
  if (d > (q - 1) * n)
    throw Error(ErrorCode::DegreeOutOfRange, "d = " + std::to_string(d) + " > (q-1)n");

  const auto monomials = enumerate_monomials(q, n, d);
  const std::size_t m = monomials.size();
  const auto pw = power_table(field);

  RowSpanner spanner(field, m);
  DenseMatrix pivot_system(field, m, m);
  std::vector<Elem> rhs;
  std::vector<std::uint64_t> pivots;
  rhs.reserve(m);
  pivots.reserve(m);

  std::vector<Elem> row(m);
  std::vector<Elem> digits(n, 0);
  for (std::uint64_t x = 0; x < f.size() && pivots.size() < m; ++x) {
    fill_evaluation_row(field, pw, digits, monomials, row);
    if (spanner.offer(row)) {
      std::copy(row.begin(), row.end(), pivot_system.row(pivots.size()).begin());
      rhs.push_back(f[x]);
      pivots.push_back(x);
    }
    increment_point(digits, q);
  }
  // Reduced monomials are linearly independent as functions.
  if (pivots.size() != m)
    throw std::logic_error("evaluation matrix rank " + std::to_string(pivots.size()) +
                           " != m_d = " + std::to_string(m));

  const auto coeffs = solve(pivot_system, rhs);
  Polynomial p(field, n);
  for (std::size_t j = 0; j < m; ++j) p.add_term(monomials[j], coeffs[j]);

  const FunctionTable fitted = to_table(p);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (fitted[x] != f[x]) bad.push_back(x);
  return Approximation{std::move(p), std::move(bad), std::move(pivots)};
}

}  // namespace rigid
