#include <cctype>
#include <sstream>
#include <utility>

#include "qseries/qexpr.hpp"

namespace qseries::qexpr {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

bool known_identifier(std::string_view word) {
  if (word == "q" || word == "a" || word == "A" || word == "B" ||
      word == "C" || word == "theta") {
    return true;
  }
  if (word.size() < 2 || word[0] != 'f') return false;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(word[i]))) return false;
  }
  return true;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "at offset " << offset << ": " << message;
        if (!expected.empty()) os << " (expected " << join_expected(expected) << ")";
        return os.str();
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      tokens.push_back({TokenKind::Integer,
                        std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c)) {
      // Maximal alphanumeric run: "f18" is f_18, never f_1 times 8.
      while (i < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::string word(text.substr(start, i - start));
      if (!known_identifier(word)) {
        throw ParseError(start, "unknown identifier '" + word + "'",
                         {"f<k>", "q", "a", "A", "B", "C", "theta"});
      }
      tokens.push_back({TokenKind::Identifier, std::move(word), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      default:
        throw ParseError(start, std::string("illegal character '") +
                                    static_cast<char>(c) + "'");
    }
    tokens.push_back({kind, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  return tokens;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    const std::size_t end =
        tokens.empty() ? 0 : tokens.back().offset + tokens.back().text.size();
    end_ = Token{TokenKind::End, "", end};
  }

  Expr parse_all() {
    Expr e = expression();
    if (peek().kind != TokenKind::End) {
      throw ParseError(peek().offset, "unexpected '" + peek().text + "'",
                       {"operator", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const {
    return pos_ < tokens_.size() ? tokens_[pos_] : end_;
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }
  bool accept_identifier(std::string_view name) {
    if (peek().kind != TokenKind::Identifier || peek().text != name) {
      return false;
    }
    advance();
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found =
        t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.offset, "unexpected " + found, std::move(expected));
  }

  void expect(TokenKind kind, const char* what) {
    if (!accept(kind)) fail({what});
  }

  std::size_t positive_integer(const char* what) {
    if (peek().kind != TokenKind::Integer) fail({what});
    const Token& t = advance();
    mpz_class v(t.text);
    if (v < 1 || !v.fits_ulong_p()) {
      throw ParseError(t.offset, std::string(what) + " must be a positive "
                                                     "machine-size integer");
    }
    return v.get_ui();
  }

  // expr := term { ('+' | '-') term }
  Expr expression() {
    Expr lhs = term();
    for (;;) {
      if (accept(TokenKind::Plus)) {
        lhs = make_binary(NodeKind::Add, lhs, term());
      } else if (accept(TokenKind::Minus)) {
        lhs = make_binary(NodeKind::Subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  // term := unary { ('*' | '/') unary }
  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept(TokenKind::Star)) {
        lhs = make_binary(NodeKind::Multiply, lhs, unary());
      } else if (accept(TokenKind::Slash)) {
        lhs = make_binary(NodeKind::Divide, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  // unary := '-' unary | power
  Expr unary() {
    if (accept(TokenKind::Minus)) return make_negate(unary());
    return power();
  }

  // power := primary [ '^' ['-'] integer ]
  Expr power() {
    Expr base = primary();
    if (!accept(TokenKind::Caret)) return base;
    const bool negative = accept(TokenKind::Minus);
    if (peek().kind != TokenKind::Integer) fail({"integer exponent"});
    const Token& t = advance();
    mpz_class v(t.text);
    if (!v.fits_slong_p()) {
      throw ParseError(t.offset, "exponent out of range");
    }
    const long e = v.get_si();
    return make_power(base, negative ? -e : e);
  }

  // qarg := 'q' [ '^' integer ], returns the power of q
  std::size_t q_argument() {
    expect(TokenKind::LParen, "'('");
    if (!accept_identifier("q")) fail({"'q'"});
    std::size_t k = 1;
    if (accept(TokenKind::Caret)) k = positive_integer("power of q");
    expect(TokenKind::RParen, "')'");
    return k;
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer:
        advance();
        return make_integer(mpz_class(t.text));
      case TokenKind::LParen: {
        advance();
        Expr inner = expression();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::Identifier:
        return identifier();
      default:
        fail({"integer", "identifier", "'('"});
    }
  }

  Expr identifier() {
    const Token t = advance();
    const std::string& w = t.text;
    if (w == "q") return make_qpower(1);
    if (w == "a") {
      if (peek().kind != TokenKind::LParen) fail({"'(' after a"});
      return make_cubic_theta(q_argument());
    }
    if (w == "A" || w == "B" || w == "C") {
      Expr atom = make_septic(w[0]);
      if (peek().kind != TokenKind::LParen) return atom;
      const std::size_t k = q_argument();
      return k == 1 ? atom : make_substitute(atom, k);
    }
    if (w == "theta") {
      expect(TokenKind::LParen, "'('");
      const std::size_t a = positive_integer("theta exponent");
      expect(TokenKind::Comma, "','");
      const std::size_t b = positive_integer("theta exponent");
      expect(TokenKind::RParen, "')'");
      return make_theta(a, b);
    }
    // f<k>
    mpz_class k(w.substr(1));
    if (k < 1 || !k.fits_ulong_p()) {
      throw ParseError(t.offset, "Euler product index must be positive");
    }
    return make_euler(k.get_ui());
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  Token end_;
};

}  // namespace

Expr parse(const std::vector<Token>& tokens) {
  return Parser(tokens).parse_all();
}

Expr parse(std::string_view text) { return parse(tokenize(text)); }

}  // namespace qseries::qexpr
