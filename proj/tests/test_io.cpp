#include <sstream>

#include "doctest.h"
#include "rigid/io.hpp"
#include "test_support.hpp"

using namespace rigid;
using rigid::testing::mono;
using rigid::testing::throws_code;

namespace {

template <typename T, typename W>
std::string render(const T& value, W writer) {
  std::ostringstream os;
  writer(os, value);
  return os.str();
}

FunctionTable parse_table(const std::string& s) {
  std::istringstream is(s);
  return read_table(is);
}

Witness parse_witness(const std::string& s) {
  std::istringstream is(s);
  return read_witness(is);
}

}  // namespace

TEST_CASE("table format") {
  const Field gf3 = Field::make(3);
  const FunctionTable f(gf3, 2, {0, 1, 2, 2, 1, 0, 1, 1, 1});
  const std::string text = render(f, write_table);
  CHECK(text == "fqn-table v1\nq 3\nn 2\n0 1 2 2 1 0 1 1 1\n");
  CHECK(parse_table(text) == f);
  // any whitespace layout is accepted on input
  CHECK(parse_table("fqn-table v1\nq 3\nn 2\n0 1 2\n2 1 0\n\n1 1 1\n") == f);
}

TEST_CASE("table and witness files round-trip byte for byte") {
  for (auto [q, n] : {std::pair{2u, 10u}, std::pair{3u, 5u}, std::pair{16u, 2u}}) {
    const FunctionTable f = random_function(q, n, 99);
    const std::string once = render(f, write_table);
    CHECK(render(parse_table(once), write_table) == once);

    const Witness w = build_witness(f, Rational(1, 2));
    const std::string wt = render(w, write_witness);
    const Witness back = parse_witness(wt);
    CHECK(back.poly == w.poly);
    CHECK(back.rank_bound == w.rank_bound);
    CHECK(back.bad_count == w.bad_count);
    CHECK(render(back, write_witness) == wt);
  }
}

TEST_CASE("witness layout") {
  const Field gf2 = Field::make(2);
  Polynomial p(gf2, 2);
  p.add_term(mono({1, 0}), 1);
  p.add_term(mono({0, 0}), 1);
  const Witness w = complete_witness(2, 2, Rational(1, 2), 1, p, 1);
  CHECK(render(w, write_witness) ==
        "rigidity-witness v1\nq 2\nn 2\neps 1/2\nd 1\nterms 2\n0 0 1\n1 0 1\nbad_count 1\n");
}

TEST_CASE("malformed tables are rejected") {
  const char* cases[] = {
      "fqn-table v2\nq 2\nn 1\n0 1\n",
      "fqn-table v1\nq 6\nn 1\n0 1 0 1 0 1\n",
      "fqn-table v1\nq 2\nn 2\n0 1 1\n",
      "fqn-table v1\nq 2\nn 1\n0 2\n",
      "fqn-table v1\nq 2\nn 1\n0 1 1\n",
      "fqn-table v1\nn 1\nq 2\n0 1\n",
      "fqn-table v1\nq 2\nn x\n0 1\n",
  };
  for (const char* c : cases) {
    CAPTURE(c);
    CHECK(throws_code([c] { parse_table(c); }, ErrorCode::ParseError));
  }
}

TEST_CASE("malformed witnesses are rejected") {
  const std::string head = "rigidity-witness v1\nq 3\nn 2\neps 1/2\nd 2\n";
  const std::string cases[] = {
      head + "terms 1\n1 1 2\n",                       // missing bad_count
      head + "terms 2\n1 1 2\n1 1 1\nbad_count 0\n",   // repeated monomial
      head + "terms 1\n3 0 1\nbad_count 0\n",          // exponent >= q
      head + "terms 1\n2 1 1\nbad_count 0\n",          // degree > d
      head + "terms 1\n1 1\nbad_count 0\n",            // short term line
      head + "terms 1\n1 1 5\nbad_count 0\n",          // coefficient >= q
      head + "terms 0\nbad_count 0\nextra\n",          // trailing content
      "rigidity-witness v1\nq 3\nn 2\neps 0/1\nd 2\nterms 0\nbad_count 0\n",
      "rigidity-witness v1\nq 3\nn 2\neps 1/2\nd 5\nterms 0\nbad_count 0\n",
      "rigidity-witness v1\nq 3\nn 2\neps 1/2\nd 2\nterms 0\nbad_count 10\n",
  };
  for (const auto& c : cases) {
    CAPTURE(c);
    CHECK(throws_code([&] { parse_witness(c); }, ErrorCode::ParseError));
  }
}

TEST_CASE("zero coefficients in witness files are dropped") {
  const Witness w =
      parse_witness("rigidity-witness v1\nq 3\nn 2\neps 1/2\nd 2\nterms 2\n1 0 0\n0 1 2\nbad_count 0\n");
  CHECK(w.poly.terms().size() == 1);
  CHECK(w.poly.coeff(mono({0, 1})) == 2);
}

TEST_CASE("sweep csv") {
  SweepRow a;
  a.d = 2;
  a.m_d = 3;
  a.deficit = 1;
  a.half_d = 1;
  a.rank_bound = 6;
  a.bad_count = 1;
  a.distance = 4;
  a.exact_rank = 2;
  SweepRow b = a;
  b.exact_rank.reset();
  CHECK(render(std::vector<SweepRow>{a, b}, write_sweep_csv) ==
        "d,m_d,deficit,half_d,rank_bound,bad_count,distance,exact_rank\n2,3,1,1,6,1,4,2\n2,3,1,1,6,1,4,NA\n");
}
