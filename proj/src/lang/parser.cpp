#include "minthint/lang/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>

#include "minthint/error.hpp"

namespace minthint::lang {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "int", "bool", "char", "void", "if", "else", "while", "for", "return", "print", "true", "false",
};

// Longest match first.
const char* const kPuncts[] = {
    "==", "!=", "<=", ">=", "&&", "||", "(", ")", "{", "}", "[", "]", ";", ",",
    "=",  "<",  ">",  "+",  "-",  "*",  "/", "%", "!", "?", ":",
};

int decode_escape(char c) {
  switch (c) {
    case '0': return 0;
    case 'n': return '\n';
    case 't': return '\t';
    case 'r': return '\r';
    case '\\': return '\\';
    case '\'': return '\'';
    case '"': return '"';
    default: return -1;
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      TokenKind kind = kKeywords.count(word) ? TokenKind::Keyword : TokenKind::Ident;
      out.push_back({kind, std::move(word), line});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::int64_t v = 0;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        int d = src[j] - '0';
        if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
          throw SyntaxError(line, "integer literal out of range");
        }
        v = v * 10 + d;
        ++j;
      }
      if (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        throw SyntaxError(line, "malformed number");
      }
      out.push_back({TokenKind::Number, std::string(src.substr(i, j - i)), line, v});
      i = j;
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      int v = -1;
      if (j + 3 < src.size() && src[j] == '\\' && src[j + 1] == 'x' &&
          std::isxdigit(static_cast<unsigned char>(src[j + 2])) &&
          std::isxdigit(static_cast<unsigned char>(src[j + 3]))) {
        v = std::stoi(std::string(src.substr(j + 2, 2)), nullptr, 16);
        j += 4;
      } else if (j < src.size() && src[j] == '\\' && j + 1 < src.size()) {
        v = decode_escape(src[j + 1]);
        j += 2;
      } else if (j < src.size() && src[j] != '\'' && src[j] != '\n') {
        v = static_cast<unsigned char>(src[j]);
        j += 1;
      }
      if (v < 0 || v > 127 || j >= src.size() || src[j] != '\'') {
        throw SyntaxError(line, "malformed character literal");
      }
      out.push_back({TokenKind::CharLit, std::string(src.substr(i, j + 1 - i)), line, v});
      i = j + 1;
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      std::string_view pv(p);
      if (src.substr(i, pv.size()) == pv) {
        out.push_back({TokenKind::Punct, std::string(pv), line});
        i += pv.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError(line, std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokenKind::End, "", line});
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program p;
    std::set<std::string> names;
    while (peek().kind != TokenKind::End) {
      auto f = function();
      if (!names.insert(f.name).second) throw SyntaxError(f.line, "duplicate function '" + f.name + "'");
      p.functions.push_back(std::move(f));
    }
    if (p.functions.empty()) throw SyntaxError(1, "program has no functions");
    std::map<int, int> seen;
    for (const auto* s : p.statements()) {
      if (++seen[s->line] > 1) throw SyntaxError(s->line, "more than one statement on this line");
    }
    return p;
  }

  ExprPtr standalone(const std::vector<Variable>& scope) {
    fn_ = &scratch_;
    int max_slot = -1;
    for (const auto& v : scope) max_slot = std::max(max_slot, v.slot);
    scratch_.variables.assign(static_cast<std::size_t>(max_slot + 1), Variable{});
    for (const auto& v : scope) scratch_.variables[static_cast<std::size_t>(v.slot)] = v;
    scopes_.emplace_back();
    for (const auto& v : scope) scopes_.back()[v.name] = v.slot;
    auto e = expression();
    if (peek().kind != TokenKind::End) throw SyntaxError(peek().line, "trailing tokens after expression");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_punct(std::string_view p) const { return peek().kind == TokenKind::Punct && peek().text == p; }
  bool is_keyword(std::string_view k) const { return peek().kind == TokenKind::Keyword && peek().text == k; }
  bool accept(std::string_view p) {
    if (is_punct(p)) {
      next();
      return true;
    }
    return false;
  }
  const Token& expect(std::string_view p) {
    if (!is_punct(p)) {
      throw SyntaxError(peek().line, "expected '" + std::string(p) + "' but found '" + peek().text + "'");
    }
    return next();
  }
  std::string ident() {
    if (peek().kind != TokenKind::Ident) {
      throw SyntaxError(peek().line, "expected identifier but found '" + peek().text + "'");
    }
    return next().text;
  }

  std::optional<Scalar> type_keyword(bool allow_void) const {
    if (peek().kind != TokenKind::Keyword) return std::nullopt;
    const auto& t = peek().text;
    if (t == "int") return Scalar::Int;
    if (t == "bool") return Scalar::Bool;
    if (t == "char") return Scalar::Char;
    if (t == "void" && allow_void) return Scalar::Void;
    return std::nullopt;
  }

  int declare(const std::string& name, Type type, bool is_param, int line) {
    if (scopes_.back().count(name)) throw TypeError(line, "redeclaration of '" + name + "'");
    int slot = static_cast<int>(fn_->variables.size());
    fn_->variables.push_back(Variable{name, type, slot, is_param, line});
    scopes_.back()[name] = slot;
    return slot;
  }

  const Variable& lookup(const std::string& name, int line) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return fn_->variables[f->second];
    }
    throw TypeError(line, "undeclared variable '" + name + "'");
  }

  std::vector<int> visible_slots() const {
    std::map<std::string, int> vis;
    for (const auto& s : scopes_) {
      for (const auto& [n, slot] : s) vis[n] = slot;
    }
    std::vector<int> out;
    for (const auto& [n, slot] : vis) out.push_back(slot);
    std::sort(out.begin(), out.end());
    return out;
  }

  FunctionDef function() {
    FunctionDef f;
    f.line = peek().line;
    auto rt = type_keyword(true);
    if (!rt) throw SyntaxError(peek().line, "expected return type but found '" + peek().text + "'");
    next();
    f.return_type = Type::scalar_of(*rt);
    f.name = ident();
    fn_ = &f;
    scopes_.assign(1, {});
    expect("(");
    if (!is_punct(")")) {
      do {
        int line = peek().line;
        auto t = type_keyword(false);
        if (!t) throw SyntaxError(line, "expected parameter type");
        next();
        std::string name = ident();
        Type type = Type::scalar_of(*t);
        if (accept("[")) {
          type.is_array = true;
          if (peek().kind == TokenKind::Number) type.length = static_cast<std::size_t>(next().value);
          expect("]");
        }
        f.params.push_back(declare(name, type, true, line));
      } while (accept(","));
    }
    expect(")");
    if (!is_punct("{")) throw SyntaxError(peek().line, "expected function body");
    next();
    scopes_.emplace_back();
    while (!is_punct("}")) {
      if (peek().kind == TokenKind::End) throw SyntaxError(peek().line, "unterminated function body");
      f.body.push_back(statement());
    }
    next();
    scopes_.clear();
    fn_ = nullptr;
    return f;
  }

  std::vector<Stmt> body_block() {
    scopes_.emplace_back();
    std::vector<Stmt> out;
    if (accept("{")) {
      while (!is_punct("}")) {
        if (peek().kind == TokenKind::End) throw SyntaxError(peek().line, "unterminated block");
        out.push_back(statement());
      }
      next();
    } else {
      out.push_back(statement());
    }
    scopes_.pop_back();
    return out;
  }

  Stmt assignment(bool need_semicolon) {
    Stmt s;
    s.kind = StmtKind::Assign;
    s.line = peek().line;
    s.scope = visible_slots();
    s.target_name = ident();
    const auto& var = lookup(s.target_name, s.line);
    s.target_slot = var.slot;
    Scalar want = var.type.scalar;
    if (accept("[")) {
      if (!var.type.is_array) throw TypeError(s.line, "'" + s.target_name + "' is not an array");
      s.index = expression();
      if (s.index->type != Scalar::Int) throw TypeError(s.line, "array index must be int");
      expect("]");
    } else if (var.type.is_array) {
      throw TypeError(s.line, "cannot assign to array '" + s.target_name + "'");
    }
    expect("=");
    s.expr = expression();
    if (s.expr->type != want) {
      throw TypeError(s.line, "cannot assign " + std::string(scalar_name(s.expr->type)) + " to " +
                                  std::string(scalar_name(want)));
    }
    if (need_semicolon) expect(";");
    return s;
  }

  ExprPtr condition() {
    expect("(");
    int line = peek().line;
    auto c = expression();
    if (c->type != Scalar::Bool) throw TypeError(line, "condition must be bool");
    expect(")");
    return c;
  }

  Stmt statement() {
    Stmt s;
    s.line = peek().line;
    s.scope = visible_slots();
    if (is_punct("{")) {
      s.kind = StmtKind::Block;
      s.body = body_block();
      return s;
    }
    if (auto t = type_keyword(false)) {
      next();
      s.kind = StmtKind::Decl;
      s.target_name = ident();
      Type type = Type::scalar_of(*t);
      if (accept("[")) {
        if (peek().kind != TokenKind::Number) throw SyntaxError(s.line, "local arrays need a length");
        type.is_array = true;
        type.length = static_cast<std::size_t>(next().value);
        expect("]");
      }
      if (accept("=")) {
        if (type.is_array) throw SyntaxError(s.line, "array initializers are not supported");
        s.expr = expression();
        if (s.expr->type != type.scalar) throw TypeError(s.line, "initializer type mismatch");
      }
      expect(";");
      s.target_slot = declare(s.target_name, type, false, s.line);
      return s;
    }
    if (is_keyword("if")) {
      next();
      s.kind = StmtKind::If;
      s.expr = condition();
      s.body = body_block();
      if (is_keyword("else")) {
        next();
        if (is_keyword("if")) {
          s.else_if = true;
          scopes_.emplace_back();
          s.else_body.push_back(statement());
          scopes_.pop_back();
        } else {
          s.else_body = body_block();
        }
      }
      return s;
    }
    if (is_keyword("while")) {
      next();
      s.kind = StmtKind::While;
      s.expr = condition();
      s.body = body_block();
      return s;
    }
    if (is_keyword("for")) {
      next();
      s.kind = StmtKind::For;
      expect("(");
      s.init = std::make_shared<const Stmt>(assignment(false));
      expect(";");
      int line = peek().line;
      s.expr = expression();
      if (s.expr->type != Scalar::Bool) throw TypeError(line, "loop condition must be bool");
      expect(";");
      s.update = std::make_shared<const Stmt>(assignment(false));
      expect(")");
      s.body = body_block();
      return s;
    }
    if (is_keyword("return")) {
      next();
      s.kind = StmtKind::Return;
      Scalar want = fn_->return_type.scalar;
      if (!is_punct(";")) {
        s.expr = expression();
        if (want == Scalar::Void) throw TypeError(s.line, "void function returns a value");
        if (s.expr->type != want) throw TypeError(s.line, "return type mismatch");
      } else if (want != Scalar::Void) {
        throw TypeError(s.line, "missing return value");
      }
      expect(";");
      return s;
    }
    if (is_keyword("print")) {
      next();
      s.kind = StmtKind::Print;
      expect("(");
      s.expr = expression();
      expect(")");
      expect(";");
      return s;
    }
    if (peek().kind == TokenKind::Ident) return assignment(true);
    throw SyntaxError(peek().line, "unexpected '" + peek().text + "'");
  }

  // Expressions, lowest precedence first.
  ExprPtr expression() {
    auto c = logical_or();
    if (is_punct("?")) {
      int line = next().line;
      auto a = expression();
      expect(":");
      auto b = expression();
      if (c->type != Scalar::Bool) throw TypeError(line, "ternary guard must be bool");
      if (a->type != b->type) throw TypeError(line, "ternary arms differ in type");
      return Expr::ternary(c, a, b);
    }
    return c;
  }

  ExprPtr make_binary(BinaryOp op, ExprPtr l, ExprPtr r, int line) {
    if (!binary_result(op, l->type, r->type)) {
      throw TypeError(line, "operator '" + std::string(op_symbol(op)) + "' cannot combine " +
                                std::string(scalar_name(l->type)) + " and " + std::string(scalar_name(r->type)));
    }
    return Expr::binary(op, std::move(l), std::move(r));
  }

  template <typename Sub>
  ExprPtr left_assoc(Sub sub, std::initializer_list<std::pair<const char*, BinaryOp>> ops) {
    auto lhs = (this->*sub)();
    for (;;) {
      bool found = false;
      for (const auto& [sym, op] : ops) {
        if (is_punct(sym)) {
          int line = next().line;
          auto rhs = (this->*sub)();
          lhs = make_binary(op, lhs, rhs, line);
          found = true;
          break;
        }
      }
      if (!found) return lhs;
    }
  }

  ExprPtr logical_or() { return left_assoc(&Parser::logical_and, {{"||", BinaryOp::Or}}); }
  ExprPtr logical_and() { return left_assoc(&Parser::equality, {{"&&", BinaryOp::And}}); }
  ExprPtr equality() {
    return left_assoc(&Parser::relational, {{"==", BinaryOp::Eq}, {"!=", BinaryOp::Ne}});
  }
  ExprPtr relational() {
    return left_assoc(&Parser::additive, {{"<=", BinaryOp::Le},
                                          {">=", BinaryOp::Ge},
                                          {"<", BinaryOp::Lt},
                                          {">", BinaryOp::Gt}});
  }
  ExprPtr additive() {
    return left_assoc(&Parser::multiplicative, {{"+", BinaryOp::Add}, {"-", BinaryOp::Sub}});
  }
  ExprPtr multiplicative() {
    return left_assoc(&Parser::unary, {{"*", BinaryOp::Mul}, {"/", BinaryOp::Div}, {"%", BinaryOp::Mod}});
  }

  ExprPtr unary() {
    if (is_punct("!")) {
      int line = next().line;
      auto e = unary();
      if (e->type != Scalar::Bool) throw TypeError(line, "'!' needs a bool operand");
      return Expr::unary(UnaryOp::Not, e);
    }
    if (is_punct("-")) {
      int line = next().line;
      if (peek().kind == TokenKind::Number) return Expr::constant(Scalar::Int, -next().value);
      auto e = unary();
      if (e->type != Scalar::Int) throw TypeError(line, "unary '-' needs an int operand");
      return Expr::unary(UnaryOp::Neg, e);
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      next();
      return Expr::constant(Scalar::Int, t.value);
    }
    if (t.kind == TokenKind::CharLit) {
      next();
      return Expr::constant(Scalar::Char, t.value);
    }
    if (t.kind == TokenKind::Keyword && (t.text == "true" || t.text == "false")) {
      next();
      return Expr::constant(Scalar::Bool, t.text == "true" ? 1 : 0);
    }
    if (t.kind == TokenKind::Ident) {
      int line = t.line;
      std::string name = next().text;
      const auto& var = lookup(name, line);
      if (accept("[")) {
        if (!var.type.is_array) throw TypeError(line, "'" + name + "' is not an array");
        auto idx = expression();
        if (idx->type != Scalar::Int) throw TypeError(line, "array index must be int");
        expect("]");
        return Expr::index(name, var.slot, var.type.scalar, idx);
      }
      if (var.type.is_array) throw TypeError(line, "array '" + name + "' used as a value");
      return Expr::variable(name, var.slot, var.type.scalar);
    }
    if (accept("(")) {
      auto e = expression();
      expect(")");
      return e;
    }
    throw SyntaxError(t.line, "unexpected '" + t.text + "' in expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  FunctionDef* fn_ = nullptr;
  FunctionDef scratch_;
  std::vector<std::map<std::string, int>> scopes_;
};

}  // namespace

Program parse_program(std::string_view source) { return Parser(tokenize(source)).program(); }

ExprPtr parse_expression(std::string_view source, const std::vector<Variable>& scope) {
  return Parser(tokenize(source)).standalone(scope);
}

}  // namespace minthint::lang
