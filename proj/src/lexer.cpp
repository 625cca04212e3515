#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "integdistill/parser.hpp"

namespace integdistill {
namespace {

constexpr std::array<std::string_view, 12> kKeywords = {
    "class", "public", "private", "new",  "return", "if",
    "else",  "while",  "this",    "int",  "void",   "string",
};

// Longest match first.
constexpr std::array<std::string_view, 21> kOperators = {
    "++", "--", "+=", "-=", "*=", "/=", "==", "!=", "<=", ">=", "&&",
    "||", "+",  "-",  "*",  "/",  "%",  "=",  "<",  ">",  "!",
};

constexpr std::string_view kPunctuation = "{}();,:.";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view source, std::string_view path) : src_(source), path_(path) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      std::string trivia = scan_trivia();
      Token tok;
      tok.leading_trivia = std::move(trivia);
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= src_.size()) {
        tok.kind = TokenKind::end_of_file;
        out.push_back(std::move(tok));
        return out;
      }
      scan_token(tok);
      out.push_back(std::move(tok));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::string& sink) {
    char c = src_[pos_++];
    sink.push_back(c);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
  }

  std::string scan_trivia() {
    std::string trivia;
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance(trivia);
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance(trivia);
      } else if (c == '/' && peek(1) == '*') {
        int start_line = line_;
        int start_col = column_;
        advance(trivia);
        advance(trivia);
        while (!(peek() == '*' && peek(1) == '/')) {
          if (pos_ >= src_.size()) {
            throw LexError("unterminated block comment", std::string(path_), start_line,
                           start_col);
          }
          advance(trivia);
        }
        advance(trivia);
        advance(trivia);
      } else {
        break;
      }
    }
    return trivia;
  }

  void scan_token(Token& tok) {
    char c = peek();
    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_char(peek())) advance(tok.lexeme);
      tok.kind = TokenKind::identifier;
      for (auto kw : kKeywords) {
        if (tok.lexeme == kw) tok.kind = TokenKind::keyword;
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
        advance(tok.lexeme);
      }
      if (is_ident_start(peek())) {
        throw LexError("malformed number", std::string(path_), tok.line, tok.column);
      }
      tok.kind = TokenKind::integer_literal;
      return;
    }
    if (c == '"') {
      advance(tok.lexeme);
      while (true) {
        if (pos_ >= src_.size() || peek() == '\n' || peek() == '\r') {
          throw LexError("unterminated string literal", std::string(path_), tok.line,
                         tok.column);
        }
        if (peek() == '\\') {
          advance(tok.lexeme);
          if (pos_ >= src_.size() || peek() == '\n') continue;
          advance(tok.lexeme);
          continue;
        }
        if (peek() == '"') {
          advance(tok.lexeme);
          break;
        }
        advance(tok.lexeme);
      }
      tok.kind = TokenKind::string_literal;
      return;
    }
    for (auto op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) advance(tok.lexeme);
        tok.kind = TokenKind::op;
        return;
      }
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      advance(tok.lexeme);
      tok.kind = TokenKind::punctuation;
      return;
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                            ? "\\x" + to_hex(static_cast<unsigned char>(c))
                            : std::string(1, c);
    throw LexError("illegal character '" + shown + "'", std::string(path_), line_, column_);
  }

  static std::string to_hex(unsigned char c) {
    constexpr std::string_view digits = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 0xf]};
  }

  std::string_view src_;
  std::string_view path_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, std::string_view path) {
  return Lexer(source, path).run();
}

}  // namespace integdistill
