#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rigid {

/// Nonnegative rational num/den kept in lowest terms.
class Rational {
 public:
  Rational() = default;
  /// Throws InvalidParameter if den == 0 or the value is negative.
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "a/b" or a bare integer "a". Throws ParseError.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// floor(base^(exponent * e)) in exact integer arithmetic. Throws Overflow if
/// the result does not fit in 64 bits.
std::uint64_t floor_rational_power(std::uint64_t base, unsigned exponent, const Rational& e);

}  // namespace rigid
