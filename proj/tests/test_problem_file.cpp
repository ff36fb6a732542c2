#include <doctest.h>

#include "orbitadm/errors.hpp"
#include "orbitadm/problem_file.hpp"
#include "test_support.hpp"

using namespace orbitadm;
using namespace orbitadm::testing;

namespace {

ParseError parse_error(const std::string& source) {
  try {
    parse_problem(source);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for:\n" << source);
  return ParseError(0, 0, "", "");
}

const std::string kHeader = "algebra h3\ndim 3\nbasis X Y Z\n";

}  // namespace

TEST_CASE("parse examples") {
  SUBCASE("h3 with span{Y,Z}") {
    const ProblemFile p = parse_problem(kHeader + "bracket X Y = Z\nsubalgebra Y; Z\nfunctional 0, 1\n");
    CHECK(p.algebra->name() == "h3");
    CHECK(p.algebra->basis_names() == std::vector<std::string>{"X", "Y", "Z"});
    CHECK(p.algebra->c(0, 1, 2) == 1);
    CHECK(p.algebra->c(1, 0, 2) == -1);
    CHECK(p.algebra->c(0, 2, 1) == 0);
    CHECK(p.generators == std::vector<VectorQ>{vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(p.functional == vec({0, 1}));
    CHECK(p == problem("h3_yz"));
  }
  SUBCASE("rational functional values") {
    const ProblemFile p = parse_problem(kHeader + "bracket X Y = Z\nsubalgebra Y; Z\nfunctional 1/2, 3\n");
    CHECK(p.functional == VectorQ{q(1, 2), q(3)});
  }
  SUBCASE("coefficients, comments and blank lines") {
    const ProblemFile p = parse_problem(
        "# leading comment\n\nalgebra t  # trailing\ndim 3\nbasis A X Y\n"
        "bracket X A = -1*X + 2/3*Y + Y\nsubalgebra X + -2*Y\nconfig trials = 5\nconfig seed = 9\n");
    CHECK(p.algebra->c(0, 1, 1) == 1);  // [A, X] = X - 5/3 Y
    CHECK(p.algebra->c(0, 1, 2) == q(-5, 3));
    CHECK(p.generators == std::vector<VectorQ>{vec({0, 1, -2})});
    CHECK_FALSE(p.functional.has_value());
    CHECK(p.functional_values() == vec({0}));
    CHECK(p.config.trials == 5u);
    CHECK(p.config.seed == 9u);
    CHECK_FALSE(p.config.bound.has_value());
  }
  SUBCASE("algebra block only") {
    const ProblemFile p = parse_problem("algebra r1\ndim 1\nbasis E\n");
    CHECK(p.generators.empty());
    CHECK(p.generator_matrix().rows() == 0);
  }
}

TEST_CASE("positioned parse errors") {
  SUBCASE("bracket of an element with itself") {
    const ParseError e = parse_error(kHeader + "bracket X X = Z\n");
    CHECK(e.line == 4);
    CHECK(e.column == 11);
    CHECK(std::string(e.what()).find("itself") != std::string::npos);
  }
  SUBCASE("duplicate pair, either order") {
    const ParseError e = parse_error(kHeader + "bracket X Y = Z\nbracket Y X = -1*Z\n");
    CHECK(e.line == 5);
    CHECK(e.column == 9);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  SUBCASE("unknown identifier") {
    const ParseError e = parse_error(kHeader + "bracket X Y = W\n");
    CHECK(e.line == 4);
    CHECK(e.column == 15);
    CHECK(std::string(e.what()).find("unknown identifier 'W'") != std::string::npos);
    CHECK(parse_error(kHeader + "subalgebra Y; Q\n").column == 15);
  }
  SUBCASE("structure errors") {
    CHECK(parse_error("dim 3\n").line == 1);
    CHECK(parse_error("algebra h3\ndim 3\nbasis X Y\n").line == 3);
    CHECK(parse_error("algebra h3\ndim 0\nbasis\n").line == 2);
    CHECK(parse_error("algebra h3\ndim 2/3\nbasis X Y\n").expected == "non-negative integer");
    CHECK(parse_error("algebra h3\ndim 3\nbasis X Y X\n").column == 11);
    CHECK(parse_error(kHeader + "functional 1\n").line == 4);
    CHECK(parse_error(kHeader + "subalgebra Y; Z\nfunctional 1\n").line == 5);
    CHECK(parse_error(kHeader + "subalgebra Y\nbracket X Y = Z\n").line == 5);
    CHECK(parse_error(kHeader + "bracket X Y = 1/0*Z\n").line == 4);
    CHECK(parse_error(kHeader + "bracket X Y Z\n").expected == "'='");
    CHECK(parse_error(kHeader + "config speed = 3\n").line == 4);
    CHECK(parse_error("algebra h3\ndim 3\n").line == 3);
    CHECK(parse_error(kHeader + "bracket X Y = Z $\n").column == 17);
  }
}

TEST_CASE("property: parse after serialize is the identity on the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const ProblemFile p = parse_problem(entry.source);
    const std::string text = serialize(p);
    const ProblemFile back = parse_problem(text);
    CHECK(back == p);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("property: round trip on random syntactic inputs") {
  Rng rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("B" + std::to_string(i));
    std::vector<LieAlgebra::Bracket> brackets;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.uniform_int(0, 1) == 1) brackets.push_back({i, j, random_vector(rng, n, 3, 3)});
    ProblemFile p;
    p.algebra = std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets("r" + std::to_string(trial), names, brackets));
    const auto m = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n)));
    for (std::size_t j = 0; j < m; ++j) {
      VectorQ g = random_vector(rng, n, 3, 2);
      g[j % n] += 1;  // no zero generators: an empty combination does not parse
      if (is_zero(g)) g[0] = 1;
      p.generators.push_back(g);
    }
    if (m > 0 && rng.uniform_int(0, 1) == 1) p.functional = random_vector(rng, m, 9, 7);
    if (rng.uniform_int(0, 1) == 1) p.config.seed = static_cast<std::uint64_t>(rng.uniform_int(0, 1000000));
    if (rng.uniform_int(0, 1) == 1) p.config.trials = static_cast<std::size_t>(rng.uniform_int(1, 50));
    CAPTURE(serialize(p));
    CHECK(parse_problem(serialize(p)) == p);
  }
}

TEST_CASE("format_combination") {
  const auto h3 = heisenberg3();
  CHECK(format_combination(*h3, vec({1, 0, 0})) == "X");
  CHECK(format_combination(*h3, VectorQ{q(0), q(-1), q(3, 2)}) == "-1*Y + 3/2*Z");
  CHECK(format_combination(*h3, vec({0, 0, 0})) == "0*X");  // still parses
}
