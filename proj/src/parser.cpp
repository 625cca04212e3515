#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "integdistill/parser.hpp"

namespace integdistill {

std::string SyntaxTree::text(TokenRange range) const {
  std::string out;
  for (std::size_t i = range.first; i <= range.last && i < tokens.size(); ++i) {
    if (i != range.first) out += tokens[i].leading_trivia;
    out += tokens[i].lexeme;
  }
  return out;
}

std::string emit(const SyntaxTree& tree) {
  std::string out;
  for (const auto& tok : tree.tokens) {
    out += tok.leading_trivia;
    out += tok.lexeme;
  }
  return out;
}

namespace {

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::end_of_file) return "end of file";
  return "'" + tok.lexeme + "'";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path)
      : tokens_(std::move(tokens)), path_(std::move(path)) {}

  SyntaxTree run() {
    SyntaxTree tree;
    tree.source_path = path_;
    while (!at_end()) tree.classes.push_back(parse_class());
    tree.tokens = std::move(tokens_);
    return tree;
  }

 private:
  // -- token helpers --------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at_end() const { return peek().kind == TokenKind::end_of_file; }
  bool is(std::string_view lexeme, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind != TokenKind::string_literal && t.kind != TokenKind::end_of_file &&
           t.lexeme == lexeme;
  }
  bool is_identifier(std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::identifier;
  }
  std::size_t next() { return pos_++; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError("expected " + expected + ", found " + describe(t), path_, t.line,
                     t.column);
  }

  std::size_t expect(std::string_view lexeme) {
    if (!is(lexeme)) fail("'" + std::string(lexeme) + "'");
    return next();
  }

  std::string expect_identifier() {
    if (!is_identifier()) fail("identifier");
    return tokens_[next()].lexeme;
  }

  std::string text(std::size_t first, std::size_t last) const {
    std::string out;
    for (std::size_t i = first; i <= last; ++i) {
      if (i != first) out += tokens_[i].leading_trivia;
      out += tokens_[i].lexeme;
    }
    return out;
  }

  // -- declarations ---------------------------------------------------------

  std::vector<std::string> parse_modifiers() {
    std::vector<std::string> mods;
    while (is("public") || is("private")) mods.push_back(tokens_[next()].lexeme);
    return mods;
  }

  std::string parse_type(bool allow_void) {
    if (is("int") || is("string") || (allow_void && is("void")) || is_identifier()) {
      return tokens_[next()].lexeme;
    }
    fail("type name");
  }

  ClassDecl parse_class() {
    ClassDecl cls;
    std::size_t first = pos_;
    parse_modifiers();
    expect("class");
    cls.name = expect_identifier();
    if (is(":")) {
      next();
      cls.base_names.push_back(expect_identifier());
    }
    expect("{");
    while (!is("}")) {
      if (at_end()) fail("'}'");
      parse_member(cls);
    }
    std::size_t last = next();
    cls.span = {tokens_[first].line, tokens_[last].line};
    return cls;
  }

  void parse_member(ClassDecl& cls) {
    std::size_t first = pos_;
    auto mods = parse_modifiers();
    if (is_identifier() && peek().lexeme == cls.name && is("(", 1)) {
      MethodDecl ctor;
      ctor.modifiers = std::move(mods);
      ctor.name = tokens_[next()].lexeme;
      ctor.is_constructor = true;
      parse_method_rest(ctor, first);
      cls.constructors.push_back(std::move(ctor));
      return;
    }
    std::string type = parse_type(/*allow_void=*/true);
    std::size_t name_tok = pos_;
    std::string name = expect_identifier();
    if (is("(")) {
      MethodDecl method;
      method.modifiers = std::move(mods);
      method.return_type = std::move(type);
      method.name = std::move(name);
      parse_method_rest(method, first);
      cls.methods.push_back(std::move(method));
      return;
    }
    if (type == "void") {
      throw ParseError("field '" + name + "' cannot have type void", path_,
                       tokens_[name_tok].line, tokens_[name_tok].column);
    }
    while (true) {
      FieldDecl field;
      field.modifiers = mods;
      field.type_name = type;
      field.name = std::move(name);
      field.line = tokens_[name_tok].line;
      if (is("=")) {
        next();
        field.init = parse_expr();
      }
      cls.field_decls.push_back(std::move(field));
      if (!is(",")) break;
      next();
      name_tok = pos_;
      name = expect_identifier();
    }
    expect(";");
  }

  void parse_method_rest(MethodDecl& method, std::size_t first) {
    std::size_t open = expect("(");
    if (!is(")")) {
      while (true) {
        Param p;
        p.type_name = parse_type(/*allow_void=*/false);
        p.name = expect_identifier();
        method.params.push_back(std::move(p));
        if (!is(",")) break;
        next();
      }
    }
    std::size_t close = expect(")");
    method.param_text = text(open, close);
    expect("{");
    while (!is("}")) {
      if (at_end()) fail("'}'");
      method.body.push_back(parse_stmt());
    }
    std::size_t last = next();
    method.tokens = {first, last};
    method.span = {tokens_[first].line, tokens_[last].line};
  }

  // -- statements -----------------------------------------------------------

  template <typename Node>
  StmtPtr make_stmt(Node node, std::size_t first) {
    auto stmt = std::make_unique<Stmt>();
    stmt->node = std::move(node);
    stmt->tokens = {first, pos_ - 1};
    stmt->span = {tokens_[first].line, tokens_[pos_ - 1].line};
    return stmt;
  }

  bool is_local_decl_start() const {
    if (is("int") || is("string")) return true;
    return is_identifier() && is_identifier(1);
  }

  StmtPtr parse_stmt() {
    std::size_t first = pos_;
    if (is("{")) {
      next();
      BlockStmt block;
      while (!is("}")) {
        if (at_end()) fail("'}'");
        block.statements.push_back(parse_stmt());
      }
      next();
      return make_stmt(std::move(block), first);
    }
    if (is("if")) {
      next();
      IfStmt node;
      expect("(");
      node.condition = parse_expr();
      expect(")");
      node.then_branch = parse_stmt();
      if (is("else")) {
        next();
        node.else_branch = parse_stmt();
      }
      return make_stmt(std::move(node), first);
    }
    if (is("while")) {
      next();
      WhileStmt node;
      expect("(");
      node.condition = parse_expr();
      expect(")");
      node.body = parse_stmt();
      return make_stmt(std::move(node), first);
    }
    if (is("return")) {
      next();
      ReturnStmt node;
      if (!is(";")) node.value = parse_expr();
      expect(";");
      return make_stmt(std::move(node), first);
    }
    if (is_local_decl_start()) {
      LocalDeclStmt node;
      node.type_name = tokens_[next()].lexeme;
      while (true) {
        Declarator d;
        d.line = peek().line;
        d.name = expect_identifier();
        if (is("=")) {
          next();
          d.init = parse_expr();
        }
        node.declarators.push_back(std::move(d));
        if (!is(",")) break;
        next();
      }
      expect(";");
      return make_stmt(std::move(node), first);
    }
    if (is("++") || is("--")) {
      IncDecStmt node;
      node.op = tokens_[next()].lexeme;
      node.prefix = true;
      node.target = parse_postfix();
      check_target(*node.target);
      expect(";");
      return make_stmt(std::move(node), first);
    }
    if (is(";")) fail("statement");

    ExprPtr expr = parse_expr();
    if (is("=") || is("+=") || is("-=") || is("*=") || is("/=")) {
      check_target(*expr);
      AssignStmt node;
      node.target = std::move(expr);
      node.op = tokens_[next()].lexeme;
      node.value = parse_expr();
      expect(";");
      return make_stmt(std::move(node), first);
    }
    if (is("++") || is("--")) {
      check_target(*expr);
      IncDecStmt node;
      node.target = std::move(expr);
      node.op = tokens_[next()].lexeme;
      node.prefix = false;
      expect(";");
      return make_stmt(std::move(node), first);
    }
    if (!std::holds_alternative<CallExpr>(expr->node) &&
        !std::holds_alternative<NewExpr>(expr->node)) {
      throw ParseError("only calls, object creations, assignments and increments can be "
                       "used as statements",
                       path_, expr->line, expr->column);
    }
    expect(";");
    ExprStmt node;
    node.expr = std::move(expr);
    return make_stmt(std::move(node), first);
  }

  void check_target(const Expr& target) const {
    if (std::holds_alternative<IdentifierExpr>(target.node) ||
        std::holds_alternative<MemberAccessExpr>(target.node)) {
      return;
    }
    throw ParseError("invalid assignment target", path_, target.line, target.column);
  }

  // -- expressions ----------------------------------------------------------

  template <typename Node>
  ExprPtr make_expr(Node node, std::size_t first) {
    auto expr = std::make_unique<Expr>();
    expr->node = std::move(node);
    expr->tokens = {first, pos_ - 1};
    expr->line = tokens_[first].line;
    expr->column = tokens_[first].column;
    return expr;
  }

  ExprPtr parse_expr() { return parse_binary(0); }

  static int precedence(std::string_view op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=") return 3;
    if (op == "<" || op == ">" || op == "<=" || op == ">=") return 4;
    if (op == "+" || op == "-") return 5;
    if (op == "*" || op == "/" || op == "%") return 6;
    return 0;
  }

  ExprPtr parse_binary(int min_prec) {
    std::size_t first = pos_;
    ExprPtr lhs = parse_unary();
    while (peek().kind == TokenKind::op) {
      int prec = precedence(peek().lexeme);
      if (prec == 0 || prec <= min_prec) break;
      std::string op = tokens_[next()].lexeme;
      ExprPtr rhs = parse_binary(prec);
      BinaryExpr node{std::move(op), std::move(lhs), std::move(rhs)};
      lhs = make_expr(std::move(node), first);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    std::size_t first = pos_;
    if (is("!") || is("-") || is("+")) {
      std::string op = tokens_[next()].lexeme;
      ExprPtr operand = parse_unary();
      return make_expr(UnaryExpr{std::move(op), std::move(operand)}, first);
    }
    return parse_postfix();
  }

  std::vector<ExprPtr> parse_args() {
    std::vector<ExprPtr> args;
    expect("(");
    if (!is(")")) {
      while (true) {
        args.push_back(parse_expr());
        if (!is(",")) break;
        next();
      }
    }
    expect(")");
    return args;
  }

  ExprPtr finish_call(ExprPtr receiver, std::string callee, std::size_t first) {
    CallExpr call;
    call.receiver_text =
        receiver ? text(receiver->tokens.first, receiver->tokens.last) : std::string("this");
    call.receiver = std::move(receiver);
    call.callee = std::move(callee);
    call.args = parse_args();
    call.text = text(first, pos_ - 1);
    return make_expr(std::move(call), first);
  }

  ExprPtr parse_postfix() {
    std::size_t first = pos_;
    ExprPtr expr = parse_primary();
    while (is(".")) {
      next();
      std::string member = expect_identifier();
      if (is("(")) {
        expr = finish_call(std::move(expr), std::move(member), first);
      } else {
        expr = make_expr(MemberAccessExpr{std::move(expr), std::move(member)}, first);
      }
    }
    return expr;
  }

  ExprPtr parse_primary() {
    std::size_t first = pos_;
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::identifier: {
        std::string name = tokens_[next()].lexeme;
        if (is("(")) return finish_call(nullptr, std::move(name), first);
        return make_expr(IdentifierExpr{std::move(name)}, first);
      }
      case TokenKind::integer_literal:
      case TokenKind::string_literal: {
        bool is_string = tok.kind == TokenKind::string_literal;
        std::string lexeme = tokens_[next()].lexeme;
        return make_expr(LiteralExpr{is_string, std::move(lexeme)}, first);
      }
      default:
        break;
    }
    if (is("this")) {
      next();
      return make_expr(ThisExpr{}, first);
    }
    if (is("new")) {
      next();
      NewExpr node;
      node.class_name = expect_identifier();
      node.args = parse_args();
      return make_expr(std::move(node), first);
    }
    if (is("(")) {
      next();
      ExprPtr inner = parse_expr();
      expect(")");
      inner->tokens = {first, pos_ - 1};
      inner->line = tokens_[first].line;
      inner->column = tokens_[first].column;
      return inner;
    }
    fail("expression");
  }

  std::vector<Token> tokens_;
  std::string path_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxTree parse(std::string_view source, std::string_view path) {
  return Parser(tokenize(source, path), std::string(path)).run();
}

}  // namespace integdistill
