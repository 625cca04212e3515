#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace integdistill {

enum class TokenKind {
  keyword,
  identifier,
  integer_literal,
  string_literal,
  op,
  punctuation,
  end_of_file,
};

/// A lexeme plus the whitespace/comments that precede it. Concatenating
/// `leading_trivia + lexeme` over the whole stream (end-of-file token
/// included) reproduces the source byte for byte.
struct Token {
  TokenKind kind = TokenKind::end_of_file;
  std::string lexeme;
  int line = 1;
  int column = 1;
  std::string leading_trivia;
};

/// Inclusive range of indices into SyntaxTree::tokens.
struct TokenRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct SourceSpan {
  int start_line = 0;
  int end_line = 0;
};

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

struct IdentifierExpr {
  std::string name;
};
struct ThisExpr {};
struct LiteralExpr {
  bool is_string = false;
  std::string text;
};
struct MemberAccessExpr {
  ExprPtr object;
  std::string member;
};
/// `receiver` is null for an implicit-`this` call such as `CM5()`.
struct CallExpr {
  ExprPtr receiver;
  std::string callee;
  std::vector<ExprPtr> args;
  std::string text;           // call as written, e.g. "b1.Add(2)"
  std::string receiver_text;  // "this" when implicit
};
struct NewExpr {
  std::string class_name;
  std::vector<ExprPtr> args;
};
struct UnaryExpr {
  std::string op;
  ExprPtr operand;
};
struct BinaryExpr {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<IdentifierExpr, ThisExpr, LiteralExpr, MemberAccessExpr, CallExpr,
               NewExpr, UnaryExpr, BinaryExpr>
      node;
  TokenRange tokens;
  int line = 0;
  int column = 0;
};

struct Declarator {
  std::string name;
  ExprPtr init;
  int line = 0;
};
struct LocalDeclStmt {
  std::string type_name;
  std::vector<Declarator> declarators;
};
/// `op` is "=" or a compound form such as "+=".
struct AssignStmt {
  ExprPtr target;
  std::string op;
  ExprPtr value;
};
struct IncDecStmt {
  ExprPtr target;
  std::string op;  // "++" or "--"
  bool prefix = true;
};
struct ExprStmt {
  ExprPtr expr;
};
struct ReturnStmt {
  ExprPtr value;
};
struct BlockStmt {
  std::vector<StmtPtr> statements;
};
struct IfStmt {
  ExprPtr condition;
  StmtPtr then_branch;
  StmtPtr else_branch;
};
struct WhileStmt {
  ExprPtr condition;
  StmtPtr body;
};

struct Stmt {
  std::variant<LocalDeclStmt, AssignStmt, IncDecStmt, ExprStmt, ReturnStmt, BlockStmt,
               IfStmt, WhileStmt>
      node;
  TokenRange tokens;
  SourceSpan span;
};

struct Param {
  std::string type_name;
  std::string name;
};

/// One entry per declarator: `private int var1, var2;` yields two.
struct FieldDecl {
  std::vector<std::string> modifiers;
  std::string type_name;
  std::string name;
  ExprPtr init;
  int line = 0;
};

struct MethodDecl {
  std::vector<std::string> modifiers;
  std::string return_type;  // empty for constructors
  std::string name;
  std::vector<Param> params;
  std::string param_text;  // "(int test,A a)" exactly as written
  std::vector<StmtPtr> body;
  bool is_constructor = false;
  SourceSpan span;
  TokenRange tokens;

  std::string signature() const { return name + param_text; }
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> base_names;
  std::vector<FieldDecl> field_decls;
  std::vector<MethodDecl> constructors;
  std::vector<MethodDecl> methods;
  SourceSpan span;
};

struct SyntaxTree {
  std::string source_path;
  std::vector<Token> tokens;  // always ends with an end_of_file token
  std::vector<ClassDecl> classes;

  /// Source text covered by `range`, without the first token's leading trivia.
  std::string text(TokenRange range) const;
};

}  // namespace integdistill
