#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigid/clp.hpp"
#include "rigid/linalg.hpp"
#include "rigid/poly.hpp"
#include "rigid/rational.hpp"

namespace rigid {

struct Budget {
  /// Largest N = q^n for which N x N matrices are materialized.
  std::uint64_t max_matrix_dim = 4096;
  /// Largest q^(rows*cols) the exhaustive oracle will enumerate.
  std::uint64_t max_oracle_space = std::uint64_t{1} << 26;
};

/// splitmix64 (Steele, Lea, Flood). Fixed constants, so a seed yields the same
/// sequence on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// next() mod bound.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// values[i] = SplitMix64(seed) draw i, reduced mod q.
FunctionTable random_function(unsigned q, unsigned n, std::uint64_t seed);

/// M(x, y) = f(x + y), rows and columns in point-index order.
/// Throws BudgetExceeded if q^n > max_dim.
DenseMatrix build_matrix(const FunctionTable& f, std::uint64_t max_dim = Budget{}.max_matrix_dim);

/// Non-rigidity certificate for M(x, y) = f(x + y): L(x, y) = P(x + y) has
/// rank at most rank_bound and differs from M in exactly N * bad_count entries.
struct Witness {
  unsigned q = 0;
  unsigned n = 0;
  Rational eps;
  unsigned d = 0;
  Polynomial poly;
  std::uint64_t bad_count = 0;

  // Derived from the fields above by complete_witness().
  std::uint64_t size = 0;        // N = q^n
  std::uint64_t agreement = 0;   // floor(q^(eps n)), the per-row change allowance
  std::uint64_t threshold = 0;   // floor(N^(1+eps))
  std::uint64_t rank_bound = 0;  // 2 m_{floor(d/2)}(q, n)
  std::uint64_t distance = 0;    // N * bad_count
  double achieved_eps_prime = 0; // log_q(N / rank_bound) / n

  /// rank_bound < N: the certificate actually reduces rank.
  bool useful() const noexcept { return rank_bound < size; }
  bool within_threshold() const noexcept { return distance <= threshold; }
};

/// Fills the derived fields. Throws InvalidParameter if eps is not in (0, 1)
/// or d > (q-1)n, DegreeExceedsD if degree(poly) > d.
Witness complete_witness(unsigned q, unsigned n, Rational eps, unsigned d, Polynomial poly,
                         std::uint64_t bad_count);

/// Picks the smallest d with q^n - m_d <= floor(q^(eps n)) and fits P by
/// approximate(). Throws InvalidParameter unless 0 < eps < 1.
Witness build_witness(const FunctionTable& f, const Rational& eps);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t exact_rank = 0;
  std::uint64_t distance = 0;
  std::uint64_t width = 0;
  std::uint64_t rank_bound = 0;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  /// Names of failed checks, comma separated.
  std::string failures() const;
};

/// Materializes L from the CLP factorization of the witness polynomial and
/// recomputes everything the witness claims. Checks, in order:
///   rank       exact rank(L) <= rank_bound
///   distance   hamming(M, L) == N * bad_count
///   rows       every row of M - L has exactly bad_count nonzeros
///   width      factorization width <= rank_bound
///   entries    sampled L(x, y) == P(x + y)
/// Throws MismatchedParameters if (q, n) differ, BudgetExceeded if N is too large.
VerificationReport verify_witness(const FunctionTable& f, const Witness& w, const Budget& budget = {},
                                  std::uint64_t entry_samples = 10000);

/// values[r] = minimum number of entry changes bringing M to rank <= r.
struct RigidityProfile {
  std::size_t rows = 0;
  std::size_t cols = 0;
  unsigned q = 0;
  std::size_t rank = 0;
  std::vector<std::uint64_t> values;  // r = 0 .. min(rows, cols)
};

/// Exhaustive: every rows x cols matrix over GF(q) is visited once.
/// Throws BudgetExceeded if q^(rows*cols) > max_space.
RigidityProfile brute_force_rigidity(const DenseMatrix& m,
                                     std::uint64_t max_space = Budget{}.max_oracle_space);

struct SweepRow {
  unsigned d = 0;
  std::uint64_t m_d = 0;
  std::uint64_t deficit = 0;  // q^n - m_d
  unsigned half_d = 0;
  std::uint64_t rank_bound = 0;
  std::uint64_t bad_count = 0;
  std::uint64_t distance = 0;
  std::optional<std::uint64_t> exact_rank;  // only when N <= budget.max_matrix_dim
};

/// Throws DegreeOutOfRange if some d > (q-1)n.
std::vector<SweepRow> tradeoff_sweep(const FunctionTable& f, const std::vector<unsigned>& degrees,
                                     const Budget& budget = {});

/// Exact rank of the matrix P(x + y), via the materialized CLP factorization.
std::uint64_t factorized_rank(const Polynomial& p, unsigned d, const Budget& budget = {});

}  // namespace rigid
