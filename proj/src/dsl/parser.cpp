// Lexer, recursive-descent parser and canonical printer for `.euc` scripts.

#include <cctype>

#include "euclid/dsl/script.hpp"

namespace euclid::dsl {

namespace {

struct Token {
  enum class Kind { Ident, PropId, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int column = 1;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

struct SyntaxError {
  Diagnostic diagnostic;
};

/// Tokens of one line; the End token sits one past the last character.
std::vector<Token> lex(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto err = [&](std::size_t col, std::string msg) {
    throw SyntaxError{{{line_no, static_cast<int>(col) + 1, 1}, Severity::Error, std::move(msg), {}}};
  };
  while (i < line.size()) {
    unsigned char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    Token t;
    t.column = static_cast<int>(i) + 1;
    if (c == 'I' && i + 2 < line.size() && line[i + 1] == '.' && std::isdigit(static_cast<unsigned char>(line[i + 2]))) {
      std::size_t j = i + 2;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j + 1 < line.size() && line[j] == '.' && (std::islower(static_cast<unsigned char>(line[j + 1])) || line[j + 1] == '_')) {
        ++j;
        while (j < line.size() && (std::islower(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      }
      t.kind = Token::Kind::PropId;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(static_cast<unsigned char>(line[j]))) ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (std::string_view("(),=.+-*/").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, static_cast<char>(c));
      ++i;
    } else {
      err(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back(std::move(t));
  }
  std::size_t end = line.find('#');
  if (end == std::string_view::npos) end = line.size();
  while (end > 0 && (line[end - 1] == ' ' || line[end - 1] == '\t')) --end;
  Token e;
  e.column = static_cast<int>(end) + 1;
  out.push_back(e);
  return out;
}

const char* const kTypes[] = {"point", "segment", "line", "ray", "circle", "angle", "figure", "result"};

bool is_type_keyword(const std::string& s) {
  for (const char* k : kTypes) {
    if (s == k) return true;
  }
  return false;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line_no) : toks_(std::move(toks)), line_(line_no) {}

  bool empty() const { return toks_.size() == 1; }

  Statement statement() {
    Statement s;
    const Token& first = peek();
    s.span = {line_, first.column, toks_.back().column - first.column};
    if (first.kind != Token::Kind::Ident) fail(first, "expected a declaration or 'assert'");
    if (first.text == "assert") {
      next();
      s.kind = Statement::Kind::Assertion;
      const Token& p = expect_ident("an assertion name");
      s.predicate = p.text;
      expect("(");
      if (!at(")")) {
        do s.args.push_back(expr());
        while (accept(","));
      }
      expect(")");
    } else if (is_type_keyword(first.text)) {
      next();
      s.kind = Statement::Kind::Declaration;
      s.type = first.text;
      const Token& n = expect_ident("a name");
      s.name = n.text;
      s.name_span = span_of(n);
      expect("=");
      s.value = expr();
      s.selector = selector();
    } else {
      fail(first, "unknown statement '" + first.text + "'", "statements start with a type or 'assert'");
    }
    if (peek().kind != Token::Kind::End) fail(peek(), "unexpected '" + peek().text + "' after the statement");
    return s;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at(const char* p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }
  bool accept(const char* p) {
    if (!at(p)) return false;
    next();
    return true;
  }

  Span span_of(const Token& t) const {
    return {line_, t.column, std::max<int>(1, static_cast<int>(t.text.size()))};
  }

  [[noreturn]] void fail(const Token& t, std::string msg, std::string note = {}) const {
    throw SyntaxError{{span_of(t), Severity::Error, std::move(msg), std::move(note)}};
  }

  static std::string shown(const Token& t) { return t.kind == Token::Kind::End ? "end of line" : "'" + t.text + "'"; }

  void expect(const char* p) {
    if (!accept(p)) fail(peek(), std::string("expected '") + p + "', found " + shown(peek()));
  }

  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(peek(), std::string("expected ") + what + ", found " + shown(peek()));
    return next();
  }

  Expr expr() {
    const Token& t = peek();
    Expr e;
    e.span = span_of(t);
    if (at("(")) {
      next();
      e.kind = Expr::Kind::Literal;
      e.x = num();
      expect(",");
      e.y = num();
      expect(")");
    } else if (t.kind == Token::Kind::PropId) {
      next();
      e.kind = Expr::Kind::Prop;
      e.name = t.text;
      expect("(");
      if (!at(")")) {
        do prop_arg(e);
        while (accept(","));
      }
      expect(")");
    } else if (t.kind == Token::Kind::Ident) {
      next();
      e.name = t.text;
      if (at("(")) {
        next();
        e.kind = Expr::Kind::Call;
        if (!at(")")) {
          do {
            e.args.push_back(expr());
            e.arg_names.emplace_back();
          } while (accept(","));
        }
        expect(")");
      } else if (accept(".")) {
        e.kind = Expr::Kind::Field;
        e.field = expect_ident("an output name").text;
      } else {
        e.kind = Expr::Kind::Ref;
      }
    } else {
      fail(t, "expected an expression, found " + shown(t));
    }
    return e;
  }

  void prop_arg(Expr& call) {
    if (peek().kind == Token::Kind::Ident && peek(1).kind == Token::Kind::Punct && peek(1).text == "=") {
      const Token& n = next();
      next();
      if (n.text == "side") {
        const Token& v = expect_ident("left, right, upper or lower");
        if (v.text != "left" && v.text != "right" && v.text != "upper" && v.text != "lower") {
          fail(v, "unknown side '" + v.text + "'", "expected left, right, upper or lower");
        }
        if (!call.side.empty()) fail(n, "side given twice");
        call.side = v.text;
        return;
      }
      call.args.push_back(expr());
      call.arg_names.push_back(n.text);
      return;
    }
    call.args.push_back(expr());
    call.arg_names.emplace_back();
  }

  Selector selector() {
    Selector s;
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident) return s;
    s.span = span_of(t);
    if (t.text == "first" || t.text == "second") {
      next();
      s.kind = t.text == "first" ? Selector::Kind::First : Selector::Kind::Second;
    } else if (t.text == "side") {
      next();
      const Token& w = expect_ident("upper, lower, left_of or right_of");
      s.span.length = w.column + static_cast<int>(w.text.size()) - s.span.column;
      if (w.text == "upper") {
        s.kind = Selector::Kind::Upper;
      } else if (w.text == "lower") {
        s.kind = Selector::Kind::Lower;
      } else if (w.text == "left_of" || w.text == "right_of") {
        s.kind = w.text == "left_of" ? Selector::Kind::LeftOf : Selector::Kind::RightOf;
        expect("(");
        s.args.push_back(expr());
        expect(")");
      } else {
        fail(w, "unknown side selector '" + w.text + "'", "expected upper, lower, left_of(ray) or right_of(ray)");
      }
    } else if (t.text == "same_side" || t.text == "opposite_side") {
      next();
      s.kind = t.text == "same_side" ? Selector::Kind::SameSide : Selector::Kind::OppositeSide;
      expect("(");
      s.args.push_back(expr());
      expect(",");
      s.args.push_back(expr());
      expect(")");
    } else {
      fail(t, "unexpected '" + t.text + "' after the expression",
           "selectors are first, second, side ..., same_side(line, point), opposite_side(line, point)");
    }
    return s;
  }

  Num num() {
    Num lhs = term();
    while (at("+") || at("-")) {
      Num::Op op = next().text == "+" ? Num::Op::Add : Num::Op::Sub;
      Num rhs = term();
      lhs = Num{op, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  Num term() {
    Num lhs = unary();
    while (at("*") || at("/")) {
      Num::Op op = next().text == "*" ? Num::Op::Mul : Num::Op::Div;
      Num rhs = unary();
      lhs = Num{op, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  Num unary() {
    if (accept("-")) return Num{Num::Op::Neg, {}, {unary()}};
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      next();
      return Num{Num::Op::Int, t.text, {}};
    }
    if (t.kind == Token::Kind::Ident && t.text == "sqrt") {
      next();
      expect("(");
      Num a = num();
      expect(")");
      return Num{Num::Op::Sqrt, {}, {std::move(a)}};
    }
    if (accept("(")) {
      Num a = num();
      expect(")");
      return a;
    }
    fail(t, "expected a number, found " + shown(t), "coordinates are integers, + - * /, and sqrt(...)");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

int precedence(const Num& n) {
  switch (n.op) {
    case Num::Op::Add:
    case Num::Op::Sub: return 1;
    case Num::Op::Mul:
    case Num::Op::Div: return 2;
    case Num::Op::Neg: return 3;
    default: return 4;
  }
}

void print_num(std::string& out, const Num& n, int min_prec) {
  int p = precedence(n);
  bool paren = p < min_prec;
  if (paren) out += '(';
  switch (n.op) {
    case Num::Op::Int: out += n.digits; break;
    case Num::Op::Sqrt:
      out += "sqrt(";
      print_num(out, n.args[0], 0);
      out += ')';
      break;
    case Num::Op::Neg:
      out += '-';
      print_num(out, n.args[0], 3);
      break;
    default: {
      const char* sym = n.op == Num::Op::Add ? " + " : n.op == Num::Op::Sub ? " - " : n.op == Num::Op::Mul ? " * " : " / ";
      print_num(out, n.args[0], p);
      out += sym;
      print_num(out, n.args[1], p + 1);
    }
  }
  if (paren) out += ')';
}

void print_expr(std::string& out, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Ref: out += e.name; return;
    case Expr::Kind::Field: out += e.name + "." + e.field; return;
    case Expr::Kind::Literal:
      out += '(';
      print_num(out, e.x, 0);
      out += ", ";
      print_num(out, e.y, 0);
      out += ')';
      return;
    case Expr::Kind::Call:
    case Expr::Kind::Prop: {
      out += e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        if (!e.arg_names[i].empty()) out += e.arg_names[i] + "=";
        print_expr(out, e.args[i]);
      }
      if (!e.side.empty()) out += std::string(e.args.empty() ? "" : ", ") + "side=" + e.side;
      out += ')';
      return;
    }
  }
}

std::string print_selector(const Selector& s) {
  std::string out;
  switch (s.kind) {
    case Selector::Kind::None: return out;
    case Selector::Kind::First: return " first";
    case Selector::Kind::Second: return " second";
    case Selector::Kind::Upper: return " side upper";
    case Selector::Kind::Lower: return " side lower";
    case Selector::Kind::LeftOf: out = " side left_of("; break;
    case Selector::Kind::RightOf: out = " side right_of("; break;
    case Selector::Kind::SameSide: out = " same_side("; break;
    case Selector::Kind::OppositeSide: out = " opposite_side("; break;
  }
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i) out += ", ";
    print_expr(out, s.args[i]);
  }
  return out + ")";
}

bool same_list(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].same(b[i])) return false;
  }
  return true;
}

}  // namespace

std::string format(const Diagnostic& d, std::string_view file) {
  std::string out = std::string(file) + ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
                    (d.severity == Severity::Error ? "error: " : "warning: ") + d.message;
  if (!d.note.empty()) out += "\n  note: " + d.note;
  return out;
}

bool Expr::same(const Expr& o) const {
  return kind == o.kind && name == o.name && field == o.field && x == o.x && y == o.y && same_list(args, o.args) &&
         arg_names == o.arg_names && side == o.side;
}

bool Statement::same(const Statement& o) const {
  return kind == o.kind && type == o.type && name == o.name && value.same(o.value) &&
         selector.kind == o.selector.kind && same_list(selector.args, o.selector.args) && predicate == o.predicate &&
         same_list(args, o.args);
}

bool Script::same(const Script& o) const {
  if (statements.size() != o.statements.size()) return false;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    if (!statements[i].same(o.statements[i])) return false;
  }
  return true;
}

ParseResult parse(std::string_view text) {
  ParseResult r;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    try {
      LineParser p(lex(line, line_no), line_no);
      if (!p.empty()) r.script.statements.push_back(p.statement());
    } catch (const SyntaxError& e) {
      r.diagnostics.push_back(e.diagnostic);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return r;
}

std::string print(const Selector& s) {
  std::string t = print_selector(s);
  return t.empty() ? t : t.substr(1);
}

std::string print(const Expr& e) {
  std::string out;
  print_expr(out, e);
  return out;
}

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    if (st.kind == Statement::Kind::Declaration) {
      out += st.type + " " + st.name + " = " + print(st.value) + print_selector(st.selector);
    } else {
      out += "assert " + st.predicate + "(";
      for (std::size_t i = 0; i < st.args.size(); ++i) {
        if (i) out += ", ";
        out += print(st.args[i]);
      }
      out += ")";
    }
    out += '\n';
  }
  return out;
}

}  // namespace euclid::dsl
