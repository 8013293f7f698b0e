#include "stg/expr.hpp"

#include <cctype>
#include <sstream>

#include "stg/errors.hpp"

namespace stg {

namespace {

struct Parser {
  const Graph& g;
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    throw ValidationError("expression, position " + std::to_string(pos) + ": " + msg);
  }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }

  bool starts_factor() {
    skip();
    if (pos >= s.size()) return false;
    unsigned char c = s[pos];
    return std::isalnum(c) || c == '_' || c == '(';
  }

  LpaElement<long long> scalar(long long n) {
    // n times the sum of all vertices: the multiplicative identity times n
    LpaElement<long long> e;
    for (const auto& v : g.vertices) e.add_term(vertex_monomial(g, v), n);
    return e;
  }

  LpaElement<long long> factor() {
    skip();
    if (pos >= s.size()) err("expected a factor");
    if (s[pos] == '(') {
      ++pos;
      LpaElement<long long> e = expr();
      if (!peek(')')) err("expected ')'");
      ++pos;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return scalar(std::stoll(s.substr(start, pos - start)));
    }
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) err("expected a name");
    std::string name = s.substr(start, pos - start);
    bool ghost = pos < s.size() && s[pos] == '*';
    if (ghost) ++pos;
    LpaElement<long long> e;
    if (g.has_vertex(name)) {
      if (ghost) err("vertices take no ghost star");
      e.add_term(vertex_monomial(g, name), 1);
      return e;
    }
    const Edge& edge = g.edge(name);  // throws on unknown names
    Path ep{edge.src, {edge.id}};
    Path rv{edge.rng, {}};
    if (ghost)
      e.add_term(make_monomial(g, rv, ep), 1);
    else
      e.add_term(make_monomial(g, ep, rv), 1);
    return e;
  }

  LpaElement<long long> term() {
    LpaElement<long long> e = factor();
    while (starts_factor()) e = multiply(g, e, factor());
    return e;
  }

  LpaElement<long long> expr() {
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos;
    }
    LpaElement<long long> e = term();
    if (neg) e = LpaElement<long long>{} - e;
    while (true) {
      if (peek('+')) {
        ++pos;
        e = e + term();
      } else if (peek('-')) {
        ++pos;
        e = e - term();
      } else {
        return e;
      }
    }
  }
};

}  // namespace

LpaElement<long long> parse_lpa_expression(const Graph& g, const std::string& text) {
  Parser p{g, text};
  LpaElement<long long> e;
  try {
    e = p.expr();
  } catch (const DomainError& ex) {
    throw ValidationError(std::string("expression: ") + ex.what());
  }
  p.skip();
  if (p.pos != text.size()) p.err("trailing input");
  return e;
}

std::string show_element(const LpaElement<long long>& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    if (c >= 0 && !first) os << " + ";
    if (c < 0) os << (first ? "-" : " - ");
    long long a = c < 0 ? -c : c;
    if (a != 1) os << a << " ";
    os << m.show();
    first = false;
  }
  return os.str();
}

}  // namespace stg
