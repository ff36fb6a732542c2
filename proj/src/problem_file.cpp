#include "orbitadm/problem_file.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "orbitadm/errors.hpp"

namespace orbitadm {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < line.size() && ident_char(line[i])) ++i;
      out.push_back({Token::Kind::Ident, std::string(line.substr(start, i - start)), start + 1});
    } else if (digit(c) || (c == '-' && i + 1 < line.size() && digit(line[i + 1]))) {
      ++i;
      while (i < line.size() && digit(line[i])) ++i;
      if (i < line.size() && line[i] == '/') {
        ++i;
        if (i >= line.size() || !digit(line[i]))
          throw ParseError(line_no, i + 1, "positive integer denominator", "malformed rational");
        while (i < line.size() && digit(line[i])) ++i;
      }
      out.push_back({Token::Kind::Number, std::string(line.substr(start, i - start)), start + 1});
    } else if (c == '=' || c == '+' || c == '*' || c == ';' || c == ',') {
      ++i;
      out.push_back({Token::Kind::Symbol, std::string(1, c), start + 1});
    } else {
      throw ParseError(line_no, start + 1, "", std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line.size() + 1});
  return out;
}

class LineCursor {
 public:
  LineCursor(std::vector<Token> tokens, std::size_t line_no) : tokens_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool peek_symbol(char s) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == s; }

  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    throw ParseError(line_, peek().column, expected, message);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& expected, const std::string& message) const {
    throw ParseError(line_, t.column, expected, message);
  }

  Token expect_ident(const std::string& what) {
    if (peek().kind != Token::Kind::Ident) fail(what, "unexpected " + describe(peek()));
    return tokens_[pos_++];
  }
  void expect_keyword(const std::string& kw) {
    if (peek().kind != Token::Kind::Ident || peek().text != kw) fail("'" + kw + "'", "unexpected " + describe(peek()));
    ++pos_;
  }
  Token expect_number(const std::string& what) {
    if (peek().kind != Token::Kind::Number) fail(what, "unexpected " + describe(peek()));
    return tokens_[pos_++];
  }
  void expect_symbol(char s) {
    if (!peek_symbol(s)) fail(std::string("'") + s + "'", "unexpected " + describe(peek()));
    ++pos_;
  }
  void expect_end() {
    if (!at_end()) fail("end of line", "unexpected " + describe(peek()));
  }
  Token next() { return tokens_[pos_++]; }

  std::size_t line() const { return line_; }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::Ident: return "identifier '" + t.text + "'";
      case Token::Kind::Number: return "number '" + t.text + "'";
      case Token::Kind::Symbol: return "'" + t.text + "'";
      case Token::Kind::End: return "end of line";
    }
    return "token";
  }

 private:
  std::vector<Token> tokens_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Rational number_value(const LineCursor& cur, const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const std::invalid_argument& e) {
    cur.fail_at(t, "rational", e.what());
  }
}

std::uint64_t integer_value(const LineCursor& cur, const Token& t) {
  if (t.text.find('/') != std::string::npos || t.text[0] == '-' || t.text[0] == '+')
    cur.fail_at(t, "non-negative integer", "expected a plain integer");
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(t.text, &used);
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    cur.fail_at(t, "non-negative integer", "integer out of range");
  }
}

// term ("+" term)*, term := RATIONAL "*" ID | ID
VectorQ parse_combination(LineCursor& cur, const std::vector<std::string>& names,
                          const std::map<std::string, std::size_t>& index) {
  VectorQ v = zero_vector(names.size());
  while (true) {
    Rational coeff = 1;
    if (cur.peek().kind == Token::Kind::Number) {
      coeff = number_value(cur, cur.next());
      cur.expect_symbol('*');
    }
    const Token id = cur.expect_ident("basis element");
    auto it = index.find(id.text);
    if (it == index.end()) cur.fail_at(id, "basis element", "unknown identifier '" + id.text + "'");
    v[it->second] += coeff;
    if (!cur.peek_symbol('+')) break;
    cur.next();
  }
  return v;
}

std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view source) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line_no++, line);
    if (end == source.size()) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace

QMatrix ProblemFile::generator_matrix() const {
  return QMatrix::from_rows(generators, algebra->dim());
}

VectorQ ProblemFile::functional_values() const {
  return functional ? *functional : zero_vector(generators.size());
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (!a.algebra || !b.algebra) return a.algebra == b.algebra;
  return a.algebra->name() == b.algebra->name() && a.algebra->basis_names() == b.algebra->basis_names() &&
         a.algebra->constants() == b.algebra->constants() && a.generators == b.generators &&
         a.functional == b.functional && a.config == b.config;
}

ProblemFile parse_problem(std::string_view source) {
  std::vector<LineCursor> statements;
  std::size_t last_line = 1;
  for (const auto& [line_no, text] : split_lines(source)) {
    last_line = line_no;
    auto tokens = tokenize(text, line_no);
    if (tokens.size() == 1) continue;  // blank or comment
    statements.emplace_back(std::move(tokens), line_no);
  }
  std::size_t s = 0;
  auto eof_error = [&](const std::string& expected) -> ParseError {
    return ParseError(last_line, 1, expected, "unexpected end of input");
  };

  // algebra NAME
  if (s == statements.size()) throw eof_error("'algebra'");
  LineCursor* cur = &statements[s++];
  cur->expect_keyword("algebra");
  std::string name = cur->expect_ident("algebra name").text;
  cur->expect_end();

  // dim INT
  if (s == statements.size()) throw eof_error("'dim'");
  cur = &statements[s++];
  cur->expect_keyword("dim");
  const Token dim_tok = cur->expect_number("dimension");
  const std::uint64_t dim = integer_value(*cur, dim_tok);
  if (dim == 0) cur->fail_at(dim_tok, "positive integer", "dimension must be positive");
  cur->expect_end();

  // basis ID+
  if (s == statements.size()) throw eof_error("'basis'");
  cur = &statements[s++];
  cur->expect_keyword("basis");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  while (!cur->at_end()) {
    const Token id = cur->expect_ident("basis name");
    if (!index.emplace(id.text, names.size()).second)
      cur->fail_at(id, "distinct basis name", "duplicate basis name '" + id.text + "'");
    names.push_back(id.text);
  }
  if (names.size() != dim)
    cur->fail("basis of " + std::to_string(dim) + " names",
              "basis lists " + std::to_string(names.size()) + " names but dim is " + std::to_string(dim));

  // bracket lines
  std::vector<LieAlgebra::Bracket> brackets;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (s < statements.size() && statements[s].peek().text == "bracket") {
    cur = &statements[s++];
    cur->next();
    const Token a = cur->expect_ident("basis element");
    const Token b = cur->expect_ident("basis element");
    auto ia = index.find(a.text);
    if (ia == index.end()) cur->fail_at(a, "basis element", "unknown identifier '" + a.text + "'");
    auto ib = index.find(b.text);
    if (ib == index.end()) cur->fail_at(b, "basis element", "unknown identifier '" + b.text + "'");
    if (ia->second == ib->second)
      cur->fail_at(b, "distinct basis element", "bracket of '" + a.text + "' with itself is zero and must be omitted");
    const auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second)
      cur->fail_at(a, "", "duplicate bracket line for pair (" + a.text + ", " + b.text + ")");
    cur->expect_symbol('=');
    VectorQ value = parse_combination(*cur, names, index);
    cur->expect_end();
    brackets.push_back({ia->second, ib->second, std::move(value)});
  }

  ProblemFile out;
  out.algebra = std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets(name, names, brackets));

  if (s < statements.size() && statements[s].peek().text == "subalgebra") {
    cur = &statements[s++];
    cur->next();
    while (true) {
      out.generators.push_back(parse_combination(*cur, names, index));
      if (!cur->peek_symbol(';')) break;
      cur->next();
    }
    cur->expect_end();
  }

  if (s < statements.size() && statements[s].peek().text == "functional") {
    cur = &statements[s++];
    if (out.generators.empty()) cur->fail("'subalgebra' before 'functional'", "functional given without a subalgebra");
    cur->next();
    VectorQ values;
    while (true) {
      values.push_back(number_value(*cur, cur->expect_number("rational")));
      if (!cur->peek_symbol(',')) break;
      cur->next();
    }
    if (values.size() != out.generators.size())
      cur->fail(std::to_string(out.generators.size()) + " values",
                "functional has " + std::to_string(values.size()) + " values for " +
                    std::to_string(out.generators.size()) + " generators");
    cur->expect_end();
    out.functional = std::move(values);
  }

  while (s < statements.size() && statements[s].peek().text == "config") {
    cur = &statements[s++];
    cur->next();
    const Token key = cur->expect_ident("config key");
    cur->expect_symbol('=');
    const std::uint64_t value = integer_value(*cur, cur->expect_number("integer"));
    cur->expect_end();
    if (key.text == "trials") {
      if (value == 0) cur->fail_at(key, "trials >= 1", "trials must be positive");
      out.config.trials = value;
    } else if (key.text == "bound") {
      if (value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        cur->fail_at(key, "bound below 2^63", "bound out of range");
      out.config.bound = static_cast<std::int64_t>(value);
    } else if (key.text == "seed") {
      out.config.seed = value;
    } else if (key.text == "symbolic_threshold") {
      out.config.symbolic_threshold = value;
    } else {
      cur->fail_at(key, "trials, bound, seed or symbolic_threshold", "unknown config key '" + key.text + "'");
    }
  }

  if (s < statements.size()) {
    const auto& extra = statements[s];
    const Token& t = extra.peek();
    static const std::set<std::string> keywords{"algebra", "dim", "basis", "bracket", "subalgebra", "functional", "config"};
    if (t.kind == Token::Kind::Ident && keywords.count(t.text) != 0)
      extra.fail_at(t, "", "'" + t.text + "' is out of order");
    extra.fail_at(t, "statement keyword", "unexpected " + LineCursor::describe(t));
  }
  return out;
}

std::string format_combination(const LieAlgebra& algebra, const VectorQ& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[k] != 1) out += v[k].get_str() + "*";
    out += algebra.basis_names()[k];
  }
  if (out.empty()) out = "0*" + algebra.basis_names().front();
  return out;
}

std::string serialize(const ProblemFile& problem) {
  const LieAlgebra& alg = *problem.algebra;
  std::ostringstream os;
  os << "algebra " << alg.name() << "\n";
  os << "dim " << alg.dim() << "\n";
  os << "basis";
  for (const auto& nm : alg.basis_names()) os << ' ' << nm;
  os << "\n";
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const VectorQ v = alg.basis_bracket(i, j);
      if (is_zero(v)) continue;
      os << "bracket " << alg.basis_names()[i] << ' ' << alg.basis_names()[j] << " = " << format_combination(alg, v)
         << "\n";
    }
  if (!problem.generators.empty()) {
    os << "subalgebra ";
    for (std::size_t g = 0; g < problem.generators.size(); ++g) {
      if (g > 0) os << "; ";
      os << format_combination(alg, problem.generators[g]);
    }
    os << "\n";
  }
  if (problem.functional) {
    os << "functional ";
    for (std::size_t j = 0; j < problem.functional->size(); ++j) {
      if (j > 0) os << ", ";
      os << (*problem.functional)[j].get_str();
    }
    os << "\n";
  }
  const auto& c = problem.config;
  if (c.trials) os << "config trials = " << *c.trials << "\n";
  if (c.bound) os << "config bound = " << *c.bound << "\n";
  if (c.seed) os << "config seed = " << *c.seed << "\n";
  if (c.symbolic_threshold) os << "config symbolic_threshold = " << *c.symbolic_threshold << "\n";
  return os.str();
}

}  // namespace orbitadm
