#include "rigid/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace rigid {

namespace {

constexpr std::size_t kValuesPerLine = 64;

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  std::string next(const char* what) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return line;
    }
    fail(std::string("unexpected end of input, expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no_) + ": " + msg);
  }

  std::vector<std::string> words(const std::string& line) const {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string w; ss >> w;) out.push_back(w);
    return out;
  }

  std::uint64_t integer(const std::string& s) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) fail("bad integer '" + s + "'");
    return v;
  }

  /// "<key> <value>" line.
  std::string keyed(const char* key) {
    const auto w = words(next(key));
    if (w.size() != 2 || w[0] != key) fail(std::string("expected '") + key + " <value>'");
    return w[1];
  }

  std::uint64_t keyed_int(const char* key) { return integer(keyed(key)); }

  void header(const char* expected) {
    if (next(expected) != expected) fail(std::string("expected header '") + expected + "'");
  }

  void expect_end() {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) fail("trailing content");
    }
  }

  std::istream& stream() { return is_; }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

Field parse_field(LineReader& in, std::uint64_t q) {
  if (q < 2 || q > kMaxFieldOrder || !is_prime_power(static_cast<unsigned>(q)))
    in.fail("q = " + std::to_string(q) + " is not a supported prime power");
  return Field::make(static_cast<unsigned>(q));
}

}  // namespace

void write_table(std::ostream& os, const FunctionTable& f) {
  os << "fqn-table v1\n" << "q " << f.q() << "\n" << "n " << f.n() << "\n";
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    os << static_cast<unsigned>(f[i]);
    os << ((i + 1) % kValuesPerLine == 0 || i + 1 == f.size() ? '\n' : ' ');
  }
}

FunctionTable read_table(std::istream& is) {
  LineReader in(is);
  in.header("fqn-table v1");
  const Field field = parse_field(in, in.keyed_int("q"));
  const std::uint64_t n = in.keyed_int("n");
  if (n > 64) in.fail("n too large");
  std::uint64_t size = 0;
  try {
    size = checked_pow(field.q(), static_cast<unsigned>(n));
  } catch (const Error&) {
    in.fail("q^n overflows");
  }
  std::vector<Elem> values;
  values.reserve(size);
  for (std::string tok; values.size() < size && in.stream() >> tok;) {
    const std::uint64_t v = in.integer(tok);
    if (v >= field.q()) in.fail("value " + tok + " not in [0, q)");
    values.push_back(static_cast<Elem>(v));
  }
  if (values.size() != size)
    in.fail("expected " + std::to_string(size) + " values, got " + std::to_string(values.size()));
  in.expect_end();
  return FunctionTable(field, static_cast<unsigned>(n), std::move(values));
}

void write_witness(std::ostream& os, const Witness& w) {
  os << "rigidity-witness v1\n"
     << "q " << w.q << "\n"
     << "n " << w.n << "\n"
     << "eps " << w.eps.to_string() << "\n"
     << "d " << w.d << "\n"
     << "terms " << w.poly.terms().size() << "\n";
  for (const auto& [m, c] : w.poly.terms()) {
    for (auto e : m.exponents) os << static_cast<unsigned>(e) << ' ';
    os << static_cast<unsigned>(c) << "\n";
  }
  os << "bad_count " << w.bad_count << "\n";
}

Witness read_witness(std::istream& is) {
  LineReader in(is);
  in.header("rigidity-witness v1");
  const Field field = parse_field(in, in.keyed_int("q"));
  const std::uint64_t n = in.keyed_int("n");
  if (n > 64) in.fail("n too large");
  Rational eps;
  try {
    eps = Rational::parse(in.keyed("eps"));
  } catch (const Error& e) {
    in.fail(e.what());
  }
  const std::uint64_t d = in.keyed_int("d");
  const std::uint64_t terms = in.keyed_int("terms");

  Polynomial poly(field, static_cast<unsigned>(n));
  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint64_t t = 0; t < terms; ++t) {
    const auto w = in.words(in.next("term"));
    if (w.size() != n + 1) in.fail("term needs " + std::to_string(n + 1) + " integers");
    Monomial m{std::vector<std::uint8_t>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t e = in.integer(w[i]);
      if (e >= field.q()) in.fail("exponent " + w[i] + " exceeds q-1");
      m.exponents[i] = static_cast<std::uint8_t>(e);
    }
    const std::uint64_t c = in.integer(w[n]);
    if (c >= field.q()) in.fail("coefficient " + w[n] + " not in [0, q)");
    if (!seen.insert(m.exponents).second) in.fail("repeated monomial " + to_string(m));
    poly.add_term(m, static_cast<Elem>(c));
  }
  const std::uint64_t bad = in.keyed_int("bad_count");
  in.expect_end();
  if (d > (field.q() - 1) * n) in.fail("d exceeds (q-1)n");
  try {
    return complete_witness(field.q(), static_cast<unsigned>(n), eps, static_cast<unsigned>(d),
                            std::move(poly), bad);
  } catch (const Error& e) {
    in.fail(e.what());
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepHeader << "\n";
  for (const auto& r : rows) {
    os << r.d << ',' << r.m_d << ',' << r.deficit << ',' << r.half_d << ',' << r.rank_bound << ','
       << r.bad_count << ',' << r.distance << ',';
    if (r.exact_rank)
      os << *r.exact_rank;
    else
      os << "NA";
    os << "\n";
  }
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return is;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::ParseError, "cannot write " + path);
  return os;
}

}  // namespace

FunctionTable load_table(const std::string& path) {
  auto is = open_in(path);
  return read_table(is);
}

Witness load_witness(const std::string& path) {
  auto is = open_in(path);
  return read_witness(is);
}

void save_table(const std::string& path, const FunctionTable& f) {
  auto os = open_out(path);
  write_table(os, f);
}

void save_witness(const std::string& path, const Witness& w) {
  auto os = open_out(path);
  write_witness(os, w);
}

}  // namespace rigid
