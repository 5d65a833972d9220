#include "minthint/lang/printer.hpp"

#include <cstdio>
#include <sstream>

namespace minthint::lang {

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Ternary: return 1;
    case ExprKind::Binary:
      switch (e.binary_op()) {
        case BinaryOp::Or: return 2;
        case BinaryOp::And: return 3;
        case BinaryOp::Eq:
        case BinaryOp::Ne: return 4;
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: return 5;
        case BinaryOp::Add:
        case BinaryOp::Sub: return 6;
        default: return 7;
      }
    case ExprKind::Unary: return 8;
    case ExprKind::Const: return e.value < 0 ? 8 : 9;
    default: return 9;
  }
}

void render(const Expr& e, int min_prec, std::string& out) {
  int p = precedence(e);
  bool wrap = p < min_prec;
  if (wrap) out += '(';
  switch (e.kind) {
    case ExprKind::Const:
      if (e.type == Scalar::Bool) {
        out += e.value ? "true" : "false";
      } else if (e.type == Scalar::Char) {
        out += char_literal(e.value);
      } else {
        out += std::to_string(e.value);
      }
      break;
    case ExprKind::Var: out += e.name; break;
    case ExprKind::Index:
      out += e.name;
      out += '[';
      render(*e.children[0], 0, out);
      out += ']';
      break;
    case ExprKind::Unary: {
      out += op_symbol(e.unary_op());
      const Expr& c = *e.children[0];
      // `-5` would read back as a literal and `--x` is hard to read.
      bool guard = e.unary_op() == UnaryOp::Neg &&
                   (c.kind == ExprKind::Const || (c.kind == ExprKind::Unary && c.unary_op() == UnaryOp::Neg));
      if (guard) {
        out += '(';
        render(c, 0, out);
        out += ')';
      } else {
        render(c, 8, out);
      }
      break;
    }
    case ExprKind::Binary:
      render(*e.children[0], p, out);
      out += ' ';
      out += op_symbol(e.binary_op());
      out += ' ';
      render(*e.children[1], p + 1, out);
      break;
    case ExprKind::Ternary:
      render(*e.children[0], 2, out);
      out += " ? ";
      render(*e.children[1], 1, out);
      out += " : ";
      render(*e.children[2], 1, out);
      break;
  }
  if (wrap) out += ')';
}

void render_key(const Expr& e, std::string& out) {
  switch (e.kind) {
    case ExprKind::Const:
      out += scalar_name(e.type);
      out += ':';
      out += std::to_string(e.value);
      return;
    case ExprKind::Var:
      out += e.name + "#" + std::to_string(e.slot);
      return;
    case ExprKind::Index:
      out += e.name + "#" + std::to_string(e.slot) + "[";
      render_key(*e.children[0], out);
      out += ']';
      return;
    case ExprKind::Unary:
      out += '(';
      out += op_symbol(e.unary_op());
      render_key(*e.children[0], out);
      out += ')';
      return;
    case ExprKind::Binary:
      out += '(';
      render_key(*e.children[0], out);
      out += op_symbol(e.binary_op());
      render_key(*e.children[1], out);
      out += ')';
      return;
    case ExprKind::Ternary:
      out += '(';
      render_key(*e.children[0], out);
      out += '?';
      render_key(*e.children[1], out);
      out += ':';
      render_key(*e.children[2], out);
      out += ')';
      return;
  }
}

class ProgramPrinter {
 public:
  explicit ProgramPrinter(const FunctionDef& f) : fn_(f) {}

  void function(std::ostringstream& os) {
    os << fn_.return_type.to_string() << ' ' << fn_.name << '(';
    for (std::size_t i = 0; i < fn_.params.size(); ++i) {
      const auto& v = fn_.variables[fn_.params[i]];
      if (i) os << ", ";
      os << scalar_name(v.type.scalar) << ' ' << v.name;
      if (v.type.is_array) os << '[' << (v.type.length ? std::to_string(*v.type.length) : "") << ']';
    }
    os << ") {\n";
    block(os, fn_.body, 1);
    os << "}\n";
  }

 private:
  static std::string pad(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  static std::string assignment(const Stmt& s) {
    std::string out = s.target_name;
    if (s.index) out += "[" + to_string(*s.index) + "]";
    return out + " = " + to_string(*s.expr);
  }

  void block(std::ostringstream& os, const std::vector<Stmt>& stmts, int depth) {
    for (const auto& s : stmts) stmt(os, s, depth, true);
  }

  void stmt(std::ostringstream& os, const Stmt& s, int depth, bool indent) {
    if (indent) os << pad(depth);
    switch (s.kind) {
      case StmtKind::Decl: {
        const auto& v = fn_.variables[s.target_slot];
        os << scalar_name(v.type.scalar) << ' ' << v.name;
        if (v.type.is_array) os << '[' << *v.type.length << ']';
        if (s.expr) os << " = " << to_string(*s.expr);
        os << ";\n";
        return;
      }
      case StmtKind::Assign: os << assignment(s) << ";\n"; return;
      case StmtKind::Return:
        os << "return";
        if (s.expr) os << ' ' << to_string(*s.expr);
        os << ";\n";
        return;
      case StmtKind::Print: os << "print(" << to_string(*s.expr) << ");\n"; return;
      case StmtKind::Block:
        os << "{\n";
        block(os, s.body, depth + 1);
        os << pad(depth) << "}\n";
        return;
      case StmtKind::While:
        os << "while (" << to_string(*s.expr) << ") {\n";
        block(os, s.body, depth + 1);
        os << pad(depth) << "}\n";
        return;
      case StmtKind::For:
        os << "for (" << assignment(*s.init) << "; " << to_string(*s.expr) << "; " << assignment(*s.update)
           << ") {\n";
        block(os, s.body, depth + 1);
        os << pad(depth) << "}\n";
        return;
      case StmtKind::If:
        os << "if (" << to_string(*s.expr) << ") {\n";
        block(os, s.body, depth + 1);
        if (s.else_if) {
          os << pad(depth) << "} else ";
          stmt(os, s.else_body.front(), depth, false);
          return;
        }
        if (!s.else_body.empty()) {
          os << pad(depth) << "} else {\n";
          block(os, s.else_body, depth + 1);
        }
        os << pad(depth) << "}\n";
        return;
    }
  }

  const FunctionDef& fn_;
};

}  // namespace

std::string char_literal(std::int64_t code) {
  switch (code) {
    case 0: return "'\\0'";
    case '\n': return "'\\n'";
    case '\t': return "'\\t'";
    case '\r': return "'\\r'";
    case '\\': return "'\\\\'";
    case '\'': return "'\\''";
    default: break;
  }
  if (code >= 32 && code < 127) return std::string("'") + static_cast<char>(code) + "'";
  char buf[16];
  std::snprintf(buf, sizeof buf, "'\\x%02x'", static_cast<unsigned>(code & 0xff));
  return buf;
}

std::string to_string(const Expr& e) {
  std::string out;
  render(e, 0, out);
  return out;
}

std::string to_key(const Expr& e) {
  std::string out;
  render_key(e, out);
  return out;
}

std::string pretty_print(const Program& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.functions.size(); ++i) {
    if (i) os << '\n';
    ProgramPrinter(p.functions[i]).function(os);
  }
  return os.str();
}

}  // namespace minthint::lang
