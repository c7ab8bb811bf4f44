#include "cinf/sexpr.hpp"

#include <cctype>

namespace cinf {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, column = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    return c;
  }

  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool atom_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ';';
  }

  Sexpr read(int depth = 0) {
    if (depth > 512) throw SyntaxError(line, column, "nesting too deep");
    skip_space();
    if (eof()) throw SyntaxError(line, column, "unexpected end of input");
    int l = line, col = column;
    char c = peek();
    if (c == '(') {
      advance();
      Sexpr node;
      node.line = l;
      node.column = col;
      for (;;) {
        skip_space();
        if (eof()) throw SyntaxError(line, column, "missing ')'");
        if (peek() == ')') {
          advance();
          return node;
        }
        node.items.push_back(read(depth + 1));
      }
    }
    if (c == ')') throw SyntaxError(l, col, "unexpected ')'");
    Sexpr node;
    node.is_atom = true;
    node.line = l;
    node.column = col;
    while (!eof() && atom_char(peek())) node.atom.push_back(advance());
    return node;
  }
};

}  // namespace

std::vector<Sexpr> parse_sexpr_document(const std::string& text) {
  Lexer lex(text);
  std::vector<Sexpr> out;
  for (;;) {
    lex.skip_space();
    if (lex.eof()) return out;
    out.push_back(lex.read());
  }
}

Sexpr parse_sexpr(const std::string& text) {
  Lexer lex(text);
  Sexpr node = lex.read();
  lex.skip_space();
  if (!lex.eof()) throw SyntaxError(lex.line, lex.column, "trailing input after expression");
  return node;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace cinf
