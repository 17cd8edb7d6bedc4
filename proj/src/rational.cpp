#include "rigid/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <limits>
#include <numeric>

#include "rigid/error.hpp"

namespace rigid {

using boost::multiprecision::cpp_int;

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidParameter, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw Error(ErrorCode::InvalidParameter, "negative rational");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
      throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::uint64_t floor_rational_power(std::uint64_t base, unsigned exponent, const Rational& e) {
  // floor(base^(exponent*num/den)) = largest r with r^den <= base^(exponent*num)
  const cpp_int target = boost::multiprecision::pow(cpp_int(base),
                                                    exponent * static_cast<unsigned>(e.num()));
  const auto den = static_cast<unsigned>(e.den());
  cpp_int lo = 0;
  cpp_int hi = 1;
  while (boost::multiprecision::pow(hi, den) <= target) hi *= 2;
  // invariant: lo^den <= target < hi^den
  while (hi - lo > 1) {
    const cpp_int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, den) <= target)
      lo = mid;
    else
      hi = mid;
  }
  if (lo > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorCode::Overflow, "rational power exceeds 64 bits");
  return lo.convert_to<std::uint64_t>();
}

}  // namespace rigid
