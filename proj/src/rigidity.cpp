#include "rigid/rigidity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

namespace rigid {

FunctionTable random_function(unsigned q, unsigned n, std::uint64_t seed) {
  const Field field = Field::make(q);
  SplitMix64 rng(seed);
  std::vector<Elem> values(checked_pow(q, n));
  for (auto& v : values) v = static_cast<Elem>(rng.below(q));
  return FunctionTable(field, n, std::move(values));
}

namespace {

std::vector<std::vector<Elem>> all_point_digits(unsigned q, unsigned n) {
  const std::uint64_t size = checked_pow(q, n);
  std::vector<std::vector<Elem>> out;
  out.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) out.push_back(decode_point(i, q, n).coords);
  return out;
}

// sum_index[x][y] = encode(x + y), computed row by row.
class PointAdder {
 public:
  PointAdder(const Field& f, unsigned n) : f_(f), n_(n), digits_(all_point_digits(f.q(), n)) {}

  std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const {
    if (f_.q() == 2) return x ^ y;
    const auto& dx = digits_[x];
    const auto& dy = digits_[y];
    std::uint64_t idx = 0;
    for (unsigned i = n_; i-- > 0;) idx = idx * f_.q() + f_.add(dx[i], dy[i]);
    return idx;
  }

  Point point(std::uint64_t x) const { return Point{digits_[x]}; }

 private:
  Field f_;
  unsigned n_;
  std::vector<std::vector<Elem>> digits_;
};

void require_matrix_budget(std::uint64_t size, std::uint64_t max_dim) {
  if (size > max_dim)
    throw Error(ErrorCode::BudgetExceeded,
                "N = " + std::to_string(size) + " exceeds matrix budget " + std::to_string(max_dim));
}

}  // namespace

DenseMatrix build_matrix(const FunctionTable& f, std::uint64_t max_dim) {
  const std::uint64_t size = f.size();
  require_matrix_budget(size, max_dim);
  const PointAdder add(f.field(), f.n());
  DenseMatrix m(f.field(), size, size);
  for (std::uint64_t x = 0; x < size; ++x) {
    auto row = m.row(x);
    for (std::uint64_t y = 0; y < size; ++y) row[y] = f[add(x, y)];
  }
  return m;
}

Witness complete_witness(unsigned q, unsigned n, Rational eps, unsigned d, Polynomial poly,
                         std::uint64_t bad_count) {
  if (eps.num() <= 0 || eps.num() >= eps.den())
    throw Error(ErrorCode::InvalidParameter, "eps must lie in (0, 1), got " + eps.to_string());
  if (poly.field().q() != q || poly.n() != n)
    throw Error(ErrorCode::MismatchedParameters, "polynomial space differs from (q, n)");
  if (d > (q - 1) * n) throw Error(ErrorCode::InvalidParameter, "d exceeds (q-1)n");
  if (poly.degree() > d) throw Error(ErrorCode::DegreeExceedsD, "polynomial degree exceeds d");

  Witness w{q, n, eps, d, std::move(poly), bad_count};
  w.size = checked_pow(q, n);
  w.agreement = floor_rational_power(q, n, eps);
  w.threshold = floor_rational_power(q, n, Rational(eps.num() + eps.den(), eps.den()));
  w.rank_bound = clp_width_bound(q, n, d);
  if (bad_count > w.size) throw Error(ErrorCode::InvalidParameter, "bad_count exceeds q^n");
  w.distance = w.size * bad_count;
  w.achieved_eps_prime =
      (std::log(static_cast<double>(w.size)) - std::log(static_cast<double>(w.rank_bound))) /
      (static_cast<double>(n) * std::log(static_cast<double>(q)));
  return w;
}

Witness build_witness(const FunctionTable& f, const Rational& eps) {
  if (eps.num() <= 0 || eps.num() >= eps.den())
    throw Error(ErrorCode::InvalidParameter, "eps must lie in (0, 1), got " + eps.to_string());
  const std::uint64_t allowance = floor_rational_power(f.q(), f.n(), eps);
  const unsigned d = min_degree_for_agreement(f.q(), f.n(), allowance);
  Approximation approx = approximate(f, d);
  const std::uint64_t bad = approx.bad.size();
  return complete_witness(f.q(), f.n(), eps, d, std::move(approx.poly), bad);
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!out.empty()) out += ',';
    out += c.name;
  }
  return out;
}

namespace {

DenseMatrix factorized_matrix(const RankFactorization& fac, std::uint64_t size, const Budget& budget) {
  const auto parts = materialize(fac, budget.max_matrix_dim * budget.max_matrix_dim);
  if (fac.width() == 0) return DenseMatrix(fac.field, size, size);
  return matmul(parts.left, parts.right);
}

}  // namespace

VerificationReport verify_witness(const FunctionTable& f, const Witness& w, const Budget& budget,
                                  std::uint64_t entry_samples) {
  if (f.q() != w.q || f.n() != w.n || w.poly.field().q() != w.q || w.poly.n() != w.n)
    throw Error(ErrorCode::MismatchedParameters,
                "table (q=" + std::to_string(f.q()) + ", n=" + std::to_string(f.n()) +
                    ") vs witness (q=" + std::to_string(w.q) + ", n=" + std::to_string(w.n) + ")");
  const std::uint64_t size = f.size();
  require_matrix_budget(size, budget.max_matrix_dim);

  const RankFactorization fac = clp_decompose(w.poly, w.d);
  const DenseMatrix low_rank = factorized_matrix(fac, size, budget);
  const DenseMatrix m = build_matrix(f, budget.max_matrix_dim);

  VerificationReport report;
  report.rank_bound = clp_width_bound(w.q, w.n, w.d);
  report.width = fac.width();
  report.exact_rank = rank(low_rank);
  report.distance = hamming_distance(m, low_rank);

  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("rank", report.exact_rank <= report.rank_bound,
      std::to_string(report.exact_rank) + " <= " + std::to_string(report.rank_bound));
  add("distance", report.distance == size * w.bad_count,
      std::to_string(report.distance) + " == " + std::to_string(size) + " * " +
          std::to_string(w.bad_count));

  std::uint64_t bad_rows = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    const auto rm = m.row(x);
    const auto rl = low_rank.row(x);
    std::uint64_t diff = 0;
    for (std::uint64_t y = 0; y < size; ++y) diff += rm[y] != rl[y];
    bad_rows += diff != w.bad_count;
  }
  add("rows", bad_rows == 0,
      std::to_string(bad_rows) + " rows differ from bad_count " + std::to_string(w.bad_count));
  add("width", report.width <= report.rank_bound,
      std::to_string(report.width) + " <= " + std::to_string(report.rank_bound));

  const PointAdder adder(f.field(), f.n());
  SplitMix64 rng(0x5EEDC0DEull);
  const bool exhaustive = size * size <= entry_samples;
  const std::uint64_t samples = exhaustive ? size * size : entry_samples;
  std::uint64_t mismatched = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t x = exhaustive ? s / size : rng.below(size);
    const std::uint64_t y = exhaustive ? s % size : rng.below(size);
    mismatched += low_rank(x, y) != eval(w.poly, adder.point(adder(x, y)));
  }
  add("entries", mismatched == 0,
      std::to_string(mismatched) + " of " + std::to_string(samples) + " sampled entries differ");
  return report;
}

namespace {

constexpr std::size_t kMaxOracleEntries = 32;

std::size_t small_rank_gf2(const std::array<std::uint32_t, kMaxOracleEntries>& rows, std::size_t count) {
  std::array<std::uint32_t, 32> basis{};  // basis[b] has top bit b
  std::size_t r = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t v = rows[i];
    while (v != 0) {
      const int top = 31 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        ++r;
        break;
      }
      v ^= basis[top];
    }
  }
  return r;
}

std::size_t small_rank_generic(const Field& f, std::array<Elem, kMaxOracleEntries> a, std::size_t rows,
                               std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[r * cols + j]);
    const Elem inv = f.inv(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Elem factor = f.neg(f.mul(a[i * cols + c], inv));
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = f.add(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

RigidityProfile brute_force_rigidity(const DenseMatrix& m, std::uint64_t max_space) {
  const Field& f = m.field();
  const unsigned q = f.q();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t entries = rows * cols;

  if (entries > kMaxOracleEntries)
    throw Error(ErrorCode::BudgetExceeded, "oracle supports at most 32 entries");
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < entries; ++i) {
    if (space > max_space / q)
      throw Error(ErrorCode::BudgetExceeded, "q^(rows*cols) exceeds oracle budget " +
                                                 std::to_string(max_space));
    space *= q;
  }

  std::array<Elem, kMaxOracleEntries> target{};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) target[r * cols + c] = m(r, c);

  const std::size_t max_rank = std::min(rows, cols);
  std::vector<std::uint64_t> best(max_rank + 1, std::numeric_limits<std::uint64_t>::max());

  // Base-q counter over entries (entry 0 fastest) with incremental distance.
  std::array<Elem, kMaxOracleEntries> cur{};
  std::array<std::uint32_t, kMaxOracleEntries> masks{};
  std::uint64_t dist = 0;
  for (std::size_t j = 0; j < entries; ++j) dist += target[j] != 0;
  while (true) {
    const std::size_t rk =
        q == 2 ? small_rank_gf2(masks, rows) : small_rank_generic(f, cur, rows, cols);
    best[rk] = std::min(best[rk], dist);

    std::size_t j = 0;
    for (; j < entries; ++j) {
      const Elem old = cur[j];
      const Elem next = old + 1u == q ? Elem{0} : static_cast<Elem>(old + 1);
      dist = dist - (old != target[j]) + (next != target[j]);
      cur[j] = next;
      if (q == 2) masks[j / cols] ^= std::uint32_t{1} << (j % cols);
      if (next != 0) break;
    }
    if (j == entries) break;
  }

  RigidityProfile prof{rows, cols, q, rank(m), std::vector<std::uint64_t>(max_rank + 1)};
  std::uint64_t running = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t r = 0; r <= max_rank; ++r) {
    running = std::min(running, best[r]);
    prof.values[r] = running;
  }
  return prof;
}

std::uint64_t factorized_rank(const Polynomial& p, unsigned d, const Budget& budget) {
  const std::uint64_t size = checked_pow(p.field().q(), p.n());
  require_matrix_budget(size, budget.max_matrix_dim);
  return rank(factorized_matrix(clp_decompose(p, d), size, budget));
}

std::vector<SweepRow> tradeoff_sweep(const FunctionTable& f, const std::vector<unsigned>& degrees,
                                     const Budget& budget) {
  const DegreeProfile prof = degree_profile(f.q(), f.n());
  for (unsigned d : degrees)
    if (d > prof.max_degree())
      throw Error(ErrorCode::DegreeOutOfRange, "d = " + std::to_string(d) + " > (q-1)n");
  std::vector<SweepRow> out;
  out.reserve(degrees.size());
  for (unsigned d : degrees) {
    const Approximation approx = approximate(f, d);
    SweepRow row;
    row.d = d;
    row.m_d = prof.counts[d];
    row.deficit = prof.total() - row.m_d;
    row.half_d = d / 2;
    row.rank_bound = 2 * prof.counts[d / 2];
    row.bad_count = approx.bad.size();
    row.distance = f.size() * row.bad_count;
    if (f.size() <= budget.max_matrix_dim) row.exact_rank = factorized_rank(approx.poly, d, budget);
    out.push_back(row);
  }
  return out;
}

}  // namespace rigid
