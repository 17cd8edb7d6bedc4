#include "rigid/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace rigid {

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                      a.exponents.begin(), a.exponents.end());
}

std::uint64_t checked_pow(std::uint64_t q, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q)
      throw Error(ErrorCode::Overflow, std::to_string(q) + "^" + std::to_string(n));
    r *= q;
  }
  return r;
}

namespace {

template <typename Digits>
std::uint64_t encode_digits(const Digits& digits, unsigned q) {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= q) throw Error(ErrorCode::IndexOutOfRange, "digit out of range");
    v = v * q + *it;
  }
  return v;
}

template <typename T>
std::vector<T> decode_digits(std::uint64_t index, unsigned q, unsigned n) {
  if (index >= checked_pow(q, n))
    throw Error(ErrorCode::IndexOutOfRange, std::to_string(index) + " >= q^n");
  std::vector<T> out(n);
  for (unsigned i = 0; i < n; ++i) {
    out[i] = static_cast<T>(index % q);
    index /= q;
  }
  return out;
}

void enumerate_exact(unsigned q, unsigned remaining, std::size_t pos, Monomial& cur,
                     std::vector<Monomial>& out) {
  const std::size_t n = cur.exponents.size();
  if (pos + 1 == n) {
    if (remaining <= q - 1) {
      cur.exponents[pos] = static_cast<std::uint8_t>(remaining);
      out.push_back(cur);
    }
    return;
  }
  const unsigned tail_cap = (q - 1) * static_cast<unsigned>(n - pos - 1);
  const unsigned hi = std::min(q - 1, remaining);
  const unsigned lo = remaining > tail_cap ? remaining - tail_cap : 0;
  for (unsigned a = hi + 1; a-- > lo;) {
    cur.exponents[pos] = static_cast<std::uint8_t>(a);
    enumerate_exact(q, remaining - a, pos + 1, cur, out);
  }
  cur.exponents[pos] = 0;
}

}  // namespace

std::uint64_t encode_point(const Point& p, unsigned q) { return encode_digits(p.coords, q); }

Point decode_point(std::uint64_t index, unsigned q, unsigned n) {
  return Point{decode_digits<Elem>(index, q, n)};
}

Point add_points(const Field& f, const Point& a, const Point& b) {
  if (a.coords.size() != b.coords.size())
    throw Error(ErrorCode::DimensionMismatch, "points of different length");
  Point out{std::vector<Elem>(a.coords.size())};
  for (std::size_t i = 0; i < a.coords.size(); ++i) out.coords[i] = f.add(a.coords[i], b.coords[i]);
  return out;
}

std::uint64_t encode_monomial(const Monomial& m, unsigned q) { return encode_digits(m.exponents, q); }

Monomial decode_monomial(std::uint64_t index, unsigned q, unsigned n) {
  return Monomial{decode_digits<std::uint8_t>(index, q, n)};
}

DegreeProfile degree_profile(unsigned q, unsigned n) {
  checked_pow(q, n);
  DegreeProfile prof{q, n, {}};
  // exact[d] = number of exponent vectors of total degree exactly d; every
  // partial sum is bounded by q^n, which fits.
  std::vector<std::uint64_t> exact{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(exact.size() + q - 1, 0);
    for (std::size_t d = 0; d < exact.size(); ++d)
      for (unsigned a = 0; a < q; ++a) next[d + a] += exact[d];
    exact = std::move(next);
  }
  prof.counts.resize(exact.size());
  std::partial_sum(exact.begin(), exact.end(), prof.counts.begin());
  return prof;
}

std::uint64_t count_monomials(unsigned q, unsigned n, unsigned d) {
  if (d > (q - 1) * n)
    throw Error(ErrorCode::DegreeOutOfRange, "d = " + std::to_string(d) + " > (q-1)n");
  return degree_profile(q, n).counts[d];
}

std::vector<Monomial> enumerate_monomials(unsigned q, unsigned n, unsigned d) {
  const std::uint64_t count = count_monomials(q, n, d);
  std::vector<Monomial> out;
  out.reserve(count);
  if (n == 0) {
    out.push_back(Monomial{});
    return out;
  }
  Monomial cur{std::vector<std::uint8_t>(n, 0)};
  for (unsigned deg = 0; deg <= d; ++deg) enumerate_exact(q, deg, 0, cur, out);
  return out;
}

unsigned min_degree_for_agreement(unsigned q, unsigned n, std::uint64_t t) {
  const DegreeProfile prof = degree_profile(q, n);
  for (unsigned d = 0; d <= prof.max_degree(); ++d)
    if (prof.total() - prof.counts[d] <= t) return d;
  return prof.max_degree();
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_delta(unsigned q, double eps) {
  const double target = eps * std::log2(static_cast<double>(q)) / static_cast<double>(q - 1);
  if (binary_entropy(0.5) <= target) return 0.5;
  double lo = 0.0;  // H(lo) <= target
  double hi = 0.5;  // H(hi) > target
  while (true) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (binary_entropy(mid) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

Monomial binary_embedding(const Monomial& m, unsigned q) {
  Monomial out{std::vector<std::uint8_t>(m.n() * (q - 1), 0)};
  for (std::size_t i = 0; i < m.n(); ++i)
    for (unsigned j = 0; j < m.exponents[i]; ++j) out.exponents[i * (q - 1) + j] = 1;
  return out;
}

bool binary_embedding_holds(unsigned q, unsigned n, unsigned d) {
  const std::uint64_t lhs = count_monomials(q, n, d);
  const unsigned bn = n * (q - 1);
  const std::uint64_t rhs = count_monomials(2, bn, std::min(d, bn));
  return lhs <= rhs;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace rigid
