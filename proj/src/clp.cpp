#include "rigid/clp.hpp"

#include <map>
#include <string>

namespace rigid {

std::uint64_t clp_width_bound(unsigned q, unsigned n, unsigned d) {
  return 2 * count_monomials(q, n, d / 2);
}

std::vector<Elem> binomial_row(const Field& field, unsigned a) {
  // Pascal's rule mod p; the integer values themselves overflow for a > 66.
  const unsigned p = field.p();
  std::vector<unsigned> row{1};
  for (unsigned i = 1; i <= a; ++i) {
    std::vector<unsigned> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
    row = std::move(next);
  }
  std::vector<Elem> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = field.from_integer(row[j]);
  return out;
}

RankFactorization clp_decompose(const Polynomial& p, unsigned d) {
  const Field& field = p.field();
  const unsigned q = field.q();
  const unsigned n = p.n();
  if (d > (q - 1) * n) throw Error(ErrorCode::DegreeOutOfRange, "d = " + std::to_string(d));
  if (p.degree() > d)
    throw Error(ErrorCode::DegreeExceedsD,
                "degree " + std::to_string(p.degree()) + " > d = " + std::to_string(d));
  const unsigned half = d / 2;

  std::vector<std::vector<Elem>> binom(q);
  for (unsigned a = 0; a < q; ++a) binom[a] = binomial_row(field, a);

  std::map<Monomial, Polynomial, GradedLexLess> x_group;  // x^b -> F_b(y)
  std::map<Monomial, Polynomial, GradedLexLess> y_group;  // y^c -> G_c(x)
  auto slot = [&](auto& group, const Monomial& key) -> Polynomial& {
    return group.try_emplace(key, field, n).first->second;
  };

  Monomial b{std::vector<std::uint8_t>(n, 0)};
  Monomial c{std::vector<std::uint8_t>(n, 0)};
  for (const auto& [a, coeff] : p.terms()) {
    std::fill(b.exponents.begin(), b.exponents.end(), 0);
    while (true) {
      Elem term = coeff;
      unsigned deg_b = 0;
      for (unsigned i = 0; i < n && term != 0; ++i) {
        term = field.mul(term, binom[a.exponents[i]][b.exponents[i]]);
        c.exponents[i] = static_cast<std::uint8_t>(a.exponents[i] - b.exponents[i]);
        deg_b += b.exponents[i];
      }
      if (term != 0) {
        if (deg_b <= half)
          slot(x_group, b).add_term(c, term);
        else
          slot(y_group, c).add_term(b, term);
      }
      // next b <= a, componentwise odometer
      unsigned i = 0;
      while (i < n && b.exponents[i] == a.exponents[i]) b.exponents[i++] = 0;
      if (i == n) break;
      ++b.exponents[i];
    }
  }

  RankFactorization out{field, n, {}, 0};
  for (auto& [key, poly] : x_group)
    if (!poly.is_zero()) out.pairs.emplace_back(Polynomial::term(field, key), std::move(poly));
  out.x_group = out.pairs.size();
  for (auto& [key, poly] : y_group)
    if (!poly.is_zero()) out.pairs.emplace_back(std::move(poly), Polynomial::term(field, key));
  return out;
}

Elem eval_factorization(const RankFactorization& f, const Point& x, const Point& y) {
  if (x.coords.size() != f.n || y.coords.size() != f.n)
    throw Error(ErrorCode::DimensionMismatch, "point length");
  Elem sum = 0;
  for (const auto& [g, h] : f.pairs) {
    const Elem gx = eval(g, x);
    if (gx != 0) sum = f.field.add(sum, f.field.mul(gx, eval(h, y)));
  }
  return sum;
}

MaterializedFactorization materialize(const RankFactorization& f, std::uint64_t max_entries) {
  const std::uint64_t points = checked_pow(f.field.q(), f.n);
  const std::uint64_t width = f.width();
  if (width != 0 && points > max_entries / width)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(points) + " x " + std::to_string(width) +
                                               " exceeds " + std::to_string(max_entries) + " entries");
  MaterializedFactorization out{DenseMatrix(f.field, points, width),
                                DenseMatrix(f.field, width, points)};
  for (std::size_t i = 0; i < width; ++i) {
    const FunctionTable g = to_table(f.pairs[i].first);
    const FunctionTable h = to_table(f.pairs[i].second);
    for (std::uint64_t x = 0; x < points; ++x) {
      out.left(x, i) = g[x];
      out.right(i, x) = h[x];
    }
  }
  return out;
}

}  // namespace rigid
