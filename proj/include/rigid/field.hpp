#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rigid/error.hpp"

namespace rigid {

/// Field elements are plain integers in [0, q). For q = p^k with k > 1 the
/// integer sum c_0 + c_1 p + ... + c_{k-1} p^{k-1} encodes the residue class
/// c_0 + c_1 x + ... + c_{k-1} x^{k-1} modulo the field's irreducible polynomial.
using Elem = std::uint8_t;

inline constexpr unsigned kMaxFieldOrder = 256;

/// Finite field GF(q), q <= 256, backed by full addition/multiplication tables.
///
/// Copies share the same immutable tables, so a Field is cheap to pass by
/// value. Two Field objects compare equal iff they have the same order.
///
/// Irreducible polynomials used for k > 1 (coefficients listed high to low):
///   GF(4)   x^2+x+1          GF(8)   x^3+x+1          GF(16)  x^4+x+1
///   GF(32)  x^5+x^2+1        GF(64)  x^6+x+1          GF(128) x^7+x+1
///   GF(256) x^8+x^4+x^3+x+1  GF(9)   x^2+1            GF(27)  x^3+2x+1
///   GF(81)  x^4+x+2          GF(243) x^5+2x+1         GF(25)  x^2+2
///   GF(125) x^3+x+1          GF(49)  x^2+1            GF(121) x^2+1
///   GF(169) x^2+2
class Field {
 public:
  /// Throws NotPrimePower if q is not a prime power, or q is outside [2, 256].
  static Field make(unsigned q);

  unsigned q() const noexcept { return t_->q; }
  unsigned p() const noexcept { return t_->p; }
  unsigned k() const noexcept { return t_->k; }

  Elem add(Elem a, Elem b) const noexcept { return t_->add[index(a, b)]; }
  Elem sub(Elem a, Elem b) const noexcept { return t_->add[index(a, t_->neg[b])]; }
  Elem mul(Elem a, Elem b) const noexcept { return t_->mul[index(a, b)]; }
  Elem neg(Elem a) const noexcept { return t_->neg[a]; }
  /// Throws DivideByZero on a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, unsigned e) const noexcept;

  /// Image of an integer under Z -> F_p -> GF(q).
  Elem from_integer(long long v) const noexcept;

  bool contains(long long v) const noexcept { return v >= 0 && v < static_cast<long long>(q()); }

  /// Row a of the multiplication table: mul_row(a)[b] == mul(a, b).
  const Elem* mul_row(Elem a) const noexcept { return t_->mul.data() + index(a, 0); }
  const Elem* add_row(Elem a) const noexcept { return t_->add.data() + index(a, 0); }

  /// Irreducible modulus coefficients, low degree first, monic; empty when k == 1.
  std::span<const Elem> modulus() const noexcept { return t_->modulus; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.q() == b.q(); }

 private:
  struct Tables {
    unsigned q = 0, p = 0, k = 0;
    std::vector<Elem> add, mul, neg, inv, modulus;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  static std::shared_ptr<const Tables> build(unsigned q);

  std::size_t index(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * t_->q + b;
  }

  std::shared_ptr<const Tables> t_;
};

/// Returns (p, k) with q = p^k, or throws NotPrimePower.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q);

bool is_prime_power(unsigned q);

/// Every prime power in [2, limit].
std::vector<unsigned> prime_powers_up_to(unsigned limit);

/// Exhaustive axiom check (commutativity, associativity, distributivity,
/// identities, inverses, characteristic). Cubic in q.
bool check_field_axioms(const Field& f);

}  // namespace rigid
