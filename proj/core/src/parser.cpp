// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ddi/error.hpp"
#include "ddi/frontend.hpp"

namespace ddi {
namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> lex(const std::string& src) {
  static const char* const kTwoChar[] = {"++", "--", "+=", "-=", "<=", ">=",
                                         "==", "!=", "&&", "||"};
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      const int l0 = line;
      const int c0 = col;
      advance(2);
      while (i + 1 < src.size() && !(src[i] == '*' && src[i + 1] == '/')) {
        advance(1);
      }
      if (i + 1 >= src.size()) {
        throw Error(ErrorKind::Parse, "unterminated comment", l0, c0);
      }
      advance(2);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_')) {
        ++j;
      }
      t.kind = Tok::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      t.kind = Tok::Int;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else {
      t.kind = Tok::Punct;
      for (const char* two : kTwoChar) {
        if (i + 1 < src.size() && src[i] == two[0] && src[i + 1] == two[1]) {
          t.text = two;
          break;
        }
      }
      if (t.text.empty()) {
        static const std::string kSingle = "(){}[];,=+-*/<>&:!%";
        if (kSingle.find(c) == std::string::npos) {
          throw Error(ErrorKind::Parse,
                      std::string("unexpected character '") + c + "'", line,
                      col);
        }
        t.text = std::string(1, c);
      }
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

bool is_keyword(const std::string& s) {
  static const std::set<std::string> kKeywords = {
      "int",   "void",   "for",    "if",   "else",   "while", "do",
      "read",  "print",  "break",  "continue", "goto", "return",
      "switch", "case"};
  return kKeywords.count(s) > 0;
}

bool contains_pointer_ref(const Expr& e) {
  if (e.kind == Expr::Kind::PointerRef) return true;
  for (const auto& o : e.operands) {
    if (contains_pointer_ref(o)) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string origin)
      : toks_(std::move(toks)) {
    prog_.origin = std::move(origin);
  }

  Program run() {
    if (peek_ident("void")) {
      parse_function();
    } else {
      while (peek().kind != Tok::End) parse_statement(prog_.body);
    }
    check_gotos();
    return std::move(prog_);
  }

 private:
  // --- token helpers -----------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool peek_punct(std::string_view p, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.kind == Tok::Punct && t.text == p;
  }
  bool peek_ident(std::string_view s) const {
    return peek().kind == Tok::Ident && peek().text == s;
  }
  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(std::string_view p) {
    if (peek_punct(p)) {
      take();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg,
                         const Token& at) const {
    throw Error(kind, msg, at.line, at.column);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    fail(ErrorKind::Parse, msg + ", found " + found, t);
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail("expected '" + std::string(p) + "'");
  }
  Token expect_ident() {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) {
      fail("expected identifier");
    }
    return take();
  }

  // --- declarations ------------------------------------------------------

  const VarInfo& lookup(const Token& name) const {
    const VarInfo* v = prog_.find_var(name.text);
    if (v == nullptr) {
      fail(ErrorKind::UnknownIdentifier, "'" + name.text + "' is not declared",
           name);
    }
    return *v;
  }

  void reject_reserved(const std::string& name, const Token& at) const {
    if (name == "PR" || name == "HU") {
      fail(ErrorKind::Semantic, "'" + name + "' is a reserved node name", at);
    }
  }

  void declare(const DeclItem& item, const Token& at) {
    reject_reserved(item.name, at);
    if (const VarInfo* v = prog_.find_var(item.name)) {
      if (v->kind != item.kind || v->rank != item.rank) {
        fail(ErrorKind::Semantic,
             "conflicting redeclaration of '" + item.name + "'", at);
      }
      return;
    }
    prog_.variables.push_back({item.name, item.kind, item.rank, false});
  }

  DeclItem parse_declarator() {
    DeclItem item;
    if (accept("*")) {
      if (peek_punct("*")) {
        fail(ErrorKind::UnsupportedConstruct,
             "pointers to pointers are not supported", peek());
      }
      item.kind = VarKind::Pointer;
    }
    Token name = expect_ident();
    item.name = name.text;
    while (accept("[")) {
      if (item.kind == VarKind::Pointer) {
        fail(ErrorKind::UnsupportedConstruct, "arrays of pointers", name);
      }
      if (peek().kind == Tok::Int) take();  // extent is not needed
      expect("]");
      item.kind = VarKind::Array;
      ++item.rank;
    }
    if (item.rank > 2) {
      fail(ErrorKind::UnsupportedConstruct,
           "arrays of more than two dimensions", name);
    }
    return item;
  }

  void parse_function() {
    take();  // void
    Token name = expect_ident();
    prog_.has_function = true;
    prog_.function_name = name.text;
    expect("(");
    if (peek_ident("void") && peek_punct(")", 1)) {
      take();
    } else if (!peek_punct(")")) {
      do {
        if (!peek_ident("int")) fail("expected 'int' in parameter list");
        take();
        Token at = peek();
        DeclItem p = parse_declarator();
        declare(p, at);
        prog_.params.push_back(std::move(p));
      } while (accept(","));
    }
    expect(")");
    expect("{");
    while (!peek_punct("}")) {
      if (peek().kind == Tok::End) fail("expected '}'");
      parse_statement(prog_.body);
    }
    expect("}");
    if (peek().kind != Tok::End) fail("expected end of input");
  }

  // --- instructions --------------------------------------------------------

  Instruction& new_instruction(InstrKind kind) {
    Instruction ins;
    ins.index = static_cast<int>(prog_.instructions.size()) + 1;
    ins.kind = kind;
    ins.loops = loop_stack_;
    ins.guarded = guard_depth_ > 0;
    prog_.instructions.push_back(std::move(ins));
    return prog_.instructions.back();
  }

  Stmt instr_stmt(const Instruction& ins) {
    Stmt s;
    s.kind = Stmt::Kind::Instr;
    s.instr = ins.index;
    return s;
  }

  // --- statements ----------------------------------------------------------

  void parse_statement(std::vector<Stmt>& out) {
    if (accept(";")) return;
    if (peek_punct("{")) {
      take();
      while (!peek_punct("}")) {
        if (peek().kind == Tok::End) fail("expected '}'");
        parse_statement(out);
      }
      take();
      return;
    }
    std::string label;
    Token label_tok;
    if (peek().kind == Tok::Ident && !is_keyword(peek().text) &&
        peek_punct(":", 1)) {
      label_tok = take();
      label = label_tok.text;
      take();
      if (!labels_.insert(label).second) {
        fail(ErrorKind::Semantic, "duplicate label '" + label + "'", label_tok);
      }
      if (peek_punct("{") || peek_punct(";") || peek_punct("}")) {
        fail("a label must precede a statement");
      }
    }
    Stmt s = parse_plain_statement();
    s.label = label;
    out.push_back(std::move(s));
  }

  Stmt parse_plain_statement() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      if (t.text == "int") return parse_declaration();
      if (t.text == "for") return parse_for();
      if (t.text == "if") return parse_if();
      if (t.text == "while" || t.text == "do") {
        fail(ErrorKind::UnsupportedConstruct, "'" + t.text + "' loops", t);
      }
    }
    return parse_simple();
  }

  // Statements allowed under an `if`.
  Stmt parse_simple() {
    const Token t = peek();
    if (t.kind == Tok::Ident) {
      if (t.text == "read") return parse_read();
      if (t.text == "print") return parse_print();
      if (t.text == "break" || t.text == "continue") {
        take();
        if (loop_stack_.empty()) {
          fail(ErrorKind::Semantic, "'" + t.text + "' outside a loop", t);
        }
        expect(";");
        auto& ins = new_instruction(InstrKind::ControlTransfer);
        ins.transfer = t.text == "break" ? Transfer::Break : Transfer::Continue;
        return instr_stmt(ins);
      }
      if (t.text == "goto") {
        take();
        Token target = expect_ident();
        expect(";");
        auto& ins = new_instruction(InstrKind::ControlTransfer);
        ins.transfer = Transfer::Goto;
        ins.jump_label = target.text;
        goto_sites_.push_back({ins.index, target});
        return instr_stmt(ins);
      }
      if (t.text == "if") return parse_if();
      if (t.text == "else" || t.text == "return" || t.text == "switch" ||
          t.text == "case" || t.text == "do" || t.text == "while") {
        fail(ErrorKind::UnsupportedConstruct, "'" + t.text + "'", t);
      }
      if (is_keyword(t.text)) fail("unexpected keyword");
      if (peek_punct("(", 1)) {
        fail(ErrorKind::UnsupportedConstruct, "function calls", t);
      }
    }
    return parse_assignment_statement();
  }

  Stmt parse_declaration() {
    const Token kw = take();  // int
    std::vector<DeclItem> items;
    std::set<std::string> seen;
    bool any_init = false;
    do {
      Token at = peek();
      DeclItem item = parse_declarator();
      if (!seen.insert(item.name).second) {
        fail(ErrorKind::Semantic, "'" + item.name + "' declared twice", at);
      }
      if (accept("=")) {
        if (item.kind != VarKind::Scalar) {
          fail(ErrorKind::UnsupportedConstruct,
               "initializers are only supported for scalars", at);
        }
        bool negative = accept("-");
        if (peek().kind != Tok::Int) {
          fail("declaration initializer must be an integer constant");
        }
        item.init = parse_int(take(), negative);
        any_init = true;
      }
      declare(item, at);
      items.push_back(std::move(item));
    } while (accept(","));
    expect(";");
    if (!any_init) {
      Stmt s;
      s.kind = Stmt::Kind::Decl;
      s.decls = std::move(items);
      return s;
    }
    (void)kw;
    auto& ins = new_instruction(InstrKind::Declaration);
    ins.decls = std::move(items);
    return instr_stmt(ins);
  }

  std::int64_t parse_int(const Token& t, bool negative) {
    std::string text = negative ? "-" + t.text : t.text;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size()) {
      fail(ErrorKind::Parse, "integer literal out of range", t);
    }
    return v;
  }

  Stmt parse_read() {
    take();
    auto targets = std::vector<Expr>{};
    do {
      targets.push_back(parse_lvalue(/*allow_pointer=*/false));
    } while (accept(","));
    expect(";");
    auto& ins = new_instruction(InstrKind::Input);
    ins.targets = std::move(targets);
    return instr_stmt(ins);
  }

  Stmt parse_print() {
    take();
    std::vector<Expr> args;
    do {
      Token at = peek();
      Expr e = parse_expr();
      if (e.kind != Expr::Kind::PointerRef && contains_pointer_ref(e)) {
        fail(ErrorKind::Semantic, "pointer used in arithmetic", at);
      }
      args.push_back(std::move(e));
    } while (accept(","));
    expect(";");
    auto& ins = new_instruction(InstrKind::Output);
    ins.operands = std::move(args);
    return instr_stmt(ins);
  }

  Stmt parse_if() {
    const Token kw = take();
    expect("(");
    Expr cond = parse_condition();
    expect(")");
    const int index = new_instruction(InstrKind::Conditional).index;
    prog_.instruction(index).operands.push_back(std::move(cond));
    if (peek_punct("{")) {
      fail(ErrorKind::UnsupportedConstruct,
           "braced if bodies; an if guards exactly one statement", peek());
    }
    if (peek_ident("for") || peek_ident("int")) {
      fail(ErrorKind::UnsupportedConstruct,
           "an if may only guard a simple statement", peek());
    }
    if (peek().kind == Tok::Ident && !is_keyword(peek().text) &&
        peek_punct(":", 1)) {
      fail(ErrorKind::UnsupportedConstruct, "labels on guarded statements",
           peek());
    }
    ++guard_depth_;
    Stmt guarded = parse_simple();
    --guard_depth_;
    if (peek_ident("else")) {
      fail(ErrorKind::UnsupportedConstruct, "'else'", peek());
    }
    (void)kw;
    Stmt s;
    s.kind = Stmt::Kind::If;
    s.instr = index;
    s.body.push_back(std::move(guarded));
    return s;
  }

  Stmt parse_for() {
    const Token kw = take();
    expect("(");
    accept_ident("int");
    Token var_tok = expect_ident();
    declare_loop_var(var_tok);
    expect("=");
    Expr init_rhs = parse_expr();
    reject_pointer_ref(init_rhs, var_tok);
    expect(";");

    Token cond_tok = peek();
    Expr cond = parse_condition();
    if (cond.operands[0] != Expr::var(var_tok.text)) {
      fail(ErrorKind::UnsupportedConstruct,
           "loop condition must compare the loop variable '" + var_tok.text +
               "'",
           cond_tok);
    }
    expect(";");

    Expr step = parse_increment(var_tok);
    expect(")");

    auto& init = new_instruction(InstrKind::LoopInit);
    init.targets.push_back(Expr::var(var_tok.text));
    init.operands.push_back(std::move(init_rhs));
    const int id = init.index;
    auto& cnd = new_instruction(InstrKind::LoopCond);
    cnd.operands.push_back(std::move(cond));
    auto& inc = new_instruction(InstrKind::LoopIncr);
    inc.targets.push_back(Expr::var(var_tok.text));
    inc.operands.push_back(std::move(step));

    Stmt s;
    s.kind = Stmt::Kind::For;
    s.init = id;
    s.cond = id + 1;
    s.incr = id + 2;
    loop_stack_.push_back(id);
    parse_statement(s.body);
    loop_stack_.pop_back();
    (void)kw;
    return s;
  }

  void accept_ident(std::string_view s) {
    if (peek_ident(s)) take();
  }

  void declare_loop_var(const Token& t) {
    reject_reserved(t.text, t);
    for (auto& v : prog_.variables) {
      if (v.name == t.text) {
        if (v.kind != VarKind::Scalar) {
          fail(ErrorKind::Semantic, "loop variable must be a scalar", t);
        }
        v.loop_var = true;
        return;
      }
    }
    prog_.variables.push_back({t.text, VarKind::Scalar, 0, true});
  }

  Expr parse_increment(const Token& var) {
    const Expr v = Expr::var(var.text);
    auto one = Expr::literal(1);
    if (accept("++") || accept("--")) {
      const bool inc = toks_[pos_ - 1].text == "++";
      Token name = expect_ident();
      if (name.text != var.text) fail_incr(name);
      return Expr::binary(inc ? BinOp::Add : BinOp::Sub, v, one);
    }
    Token name = expect_ident();
    if (name.text != var.text) fail_incr(name);
    if (accept("++")) return Expr::binary(BinOp::Add, v, one);
    if (accept("--")) return Expr::binary(BinOp::Sub, v, one);
    if (accept("+=") || accept("-=")) {
      const bool inc = toks_[pos_ - 1].text == "+=";
      Expr amount = parse_expr();
      reject_pointer_ref(amount, name);
      return Expr::binary(inc ? BinOp::Add : BinOp::Sub, v, std::move(amount));
    }
    expect("=");
    Expr rhs = parse_expr();
    reject_pointer_ref(rhs, name);
    if (rhs.kind == Expr::Kind::Binary &&
        (rhs.op == BinOp::Add || rhs.op == BinOp::Sub) &&
        rhs.operands[0] == v) {
      return rhs;
    }
    fail_incr(name);
  }

  [[noreturn]] void fail_incr(const Token& at) {
    fail(ErrorKind::UnsupportedConstruct,
         "loop increment must step the loop variable by a constant", at);
  }

  Stmt parse_assignment_statement() {
    Token at = peek();
    // Pointer assignment `p = &x`.
    if (peek().kind == Tok::Ident && peek_punct("=", 1) && peek_punct("&", 2)) {
      const VarInfo& v = lookup(peek());
      if (v.kind == VarKind::Pointer) return parse_pointer_assign();
    }
    Expr target = parse_lvalue(/*allow_pointer=*/false);
    Expr rhs;
    bool arithmetic = true;
    if (accept("++")) {
      rhs = Expr::binary(BinOp::Add, target, Expr::literal(1));
    } else if (accept("--")) {
      rhs = Expr::binary(BinOp::Sub, target, Expr::literal(1));
    } else if (accept("+=") || accept("-=")) {
      const bool inc = toks_[pos_ - 1].text == "+=";
      Expr amount = parse_expr();
      reject_pointer_ref(amount, at);
      rhs = Expr::binary(inc ? BinOp::Add : BinOp::Sub, target,
                         std::move(amount));
    } else {
      expect("=");
      if (peek_punct("&")) {
        fail(ErrorKind::Semantic, "address assigned to a non-pointer", peek());
      }
      rhs = parse_expr();
      reject_pointer_ref(rhs, at);
      arithmetic = rhs.kind == Expr::Kind::Binary || rhs.kind == Expr::Kind::Neg;
    }
    expect(";");
    auto& ins = new_instruction(arithmetic ? InstrKind::Arithmetic
                                           : InstrKind::Assignment);
    ins.targets.push_back(std::move(target));
    ins.operands.push_back(std::move(rhs));
    return instr_stmt(ins);
  }

  Stmt parse_pointer_assign() {
    Token p = take();
    take();  // =
    take();  // &
    Token x = expect_ident();
    const VarInfo& target = lookup(x);
    if (target.kind != VarKind::Scalar) {
      fail(ErrorKind::UnsupportedConstruct,
           "pointers may only hold the address of a scalar", x);
    }
    expect(";");
    if (!loop_stack_.empty()) {
      fail(ErrorKind::UnsupportedConstruct, "pointer assignment inside a loop",
           p);
    }
    if (guard_depth_ > 0) {
      fail(ErrorKind::UnsupportedConstruct, "pointer assignment under an if",
           p);
    }
    auto& ins = new_instruction(InstrKind::PointerAssign);
    ins.pointer = p.text;
    ins.pointee = x.text;
    return instr_stmt(ins);
  }

  void reject_pointer_ref(const Expr& e, const Token& at) {
    if (contains_pointer_ref(e)) {
      fail(ErrorKind::Semantic, "pointer used in arithmetic", at);
    }
  }

  Expr parse_lvalue(bool allow_pointer) {
    if (accept("*")) {
      if (peek_punct("*")) {
        fail(ErrorKind::UnsupportedConstruct, "nested dereference", peek());
      }
      Token name = expect_ident();
      if (lookup(name).kind != VarKind::Pointer) {
        fail(ErrorKind::Semantic, "'" + name.text + "' is not a pointer", name);
      }
      return Expr::deref(name.text);
    }
    Token name = expect_ident();
    const VarInfo& v = lookup(name);
    switch (v.kind) {
      case VarKind::Scalar:
        return Expr::var(name.text);
      case VarKind::Array:
        return Expr::index(name.text, parse_subscripts(name, v.rank));
      case VarKind::Pointer:
        if (!allow_pointer) {
          fail(ErrorKind::UnsupportedConstruct,
               "pointer '" + name.text + "' may only be assigned an address",
               name);
        }
        return Expr::pointer_ref(name.text);
    }
    fail("expected lvalue");
  }

  std::vector<Expr> parse_subscripts(const Token& name, int rank) {
    std::vector<Expr> subs;
    while (peek_punct("[")) {
      take();
      Token at = peek();
      Expr e = parse_expr();
      reject_pointer_ref(e, at);
      subs.push_back(std::move(e));
      expect("]");
    }
    if (static_cast<int>(subs.size()) != rank) {
      fail(ErrorKind::Semantic,
           "'" + name.text + "' has " + std::to_string(rank) +
               " dimension(s) but is indexed with " +
               std::to_string(subs.size()),
           name);
    }
    return subs;
  }

  // --- expressions ---------------------------------------------------------

  Expr parse_condition() {
    Expr lhs = parse_expr();
    static const std::pair<const char*, BinOp> kRel[] = {
        {"<=", BinOp::Le}, {">=", BinOp::Ge}, {"==", BinOp::Eq},
        {"!=", BinOp::Ne}, {"<", BinOp::Lt},  {">", BinOp::Gt}};
    for (const auto& [text, op] : kRel) {
      if (accept(text)) {
        Expr rhs = parse_expr();
        if (peek_punct("&&") || peek_punct("||")) {
          fail(ErrorKind::UnsupportedConstruct, "logical operators", peek());
        }
        Token at = peek();
        reject_pointer_ref(lhs, at);
        reject_pointer_ref(rhs, at);
        return Expr::binary(op, std::move(lhs), std::move(rhs));
      }
    }
    fail("expected relational operator");
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (peek_punct("+") || peek_punct("-")) {
      BinOp op = take().text == "+" ? BinOp::Add : BinOp::Sub;
      lhs = Expr::binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (peek_punct("*") || peek_punct("/") || peek_punct("%")) {
      if (peek_punct("%")) {
        fail(ErrorKind::UnsupportedConstruct, "the '%' operator", peek());
      }
      BinOp op = take().text == "*" ? BinOp::Mul : BinOp::Div;
      lhs = Expr::binary(op, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (peek_punct("-")) {
      Token minus = take();
      if (peek().kind == Tok::Int) return Expr::literal(parse_int(take(), true));
      Expr inner = parse_unary();
      if (inner.kind == Expr::Kind::Literal) {
        if (inner.value == INT64_MIN) {
          fail(ErrorKind::Parse, "integer literal out of range", minus);
        }
        return Expr::literal(-inner.value);
      }
      return Expr::neg(std::move(inner));
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token t = peek();
    if (t.kind == Tok::Int) {
      take();
      return Expr::literal(parse_int(t, false));
    }
    if (accept("(")) {
      Expr e = parse_expr();
      expect(")");
      return e;
    }
    if (peek_punct("*")) {
      take();
      if (peek_punct("*")) {
        fail(ErrorKind::UnsupportedConstruct, "nested dereference", peek());
      }
      Token name = expect_ident();
      if (lookup(name).kind != VarKind::Pointer) {
        fail(ErrorKind::Semantic, "'" + name.text + "' is not a pointer", name);
      }
      return Expr::deref(name.text);
    }
    if (peek_punct("&")) {
      fail(ErrorKind::UnsupportedConstruct,
           "address-of outside a pointer assignment", t);
    }
    if (t.kind == Tok::Ident && !is_keyword(t.text)) {
      if (peek_punct("(", 1)) {
        fail(ErrorKind::UnsupportedConstruct, "function calls", t);
      }
      return parse_lvalue(/*allow_pointer=*/true);
    }
    fail("expected expression");
  }

  // --- goto validation -----------------------------------------------------

  struct GotoSite {
    int index;
    Token at;
  };

  // A goto may only jump forward, to a label in its own block or in an
  // enclosing one.
  void check_gotos() {
    if (goto_sites_.empty()) return;
    std::vector<std::pair<const std::vector<Stmt>*, std::size_t>> path;
    for (const auto& site : goto_sites_) {
      path.clear();
      if (!find_path(prog_.body, site.index, path)) continue;
      const std::string& label = prog_.instruction(site.index).jump_label;
      if (!labels_.count(label)) {
        fail(ErrorKind::Semantic, "undefined label '" + label + "'", site.at);
      }
      bool ok = false;
      for (auto it = path.rbegin(); it != path.rend() && !ok; ++it) {
        const auto& block = *it->first;
        for (std::size_t k = it->second + 1; k < block.size(); ++k) {
          if (block[k].label == label) {
            ok = true;
            break;
          }
        }
      }
      if (!ok) {
        fail(ErrorKind::UnsupportedConstruct,
             "goto '" + label +
                 "' must jump forward to a label in the same or an enclosing "
                 "block",
             site.at);
      }
    }
  }

  static bool contains_instr(const Stmt& s, int index) {
    if ((s.kind == Stmt::Kind::Instr || s.kind == Stmt::Kind::If) &&
        s.instr == index) {
      return true;
    }
    for (const auto& b : s.body) {
      if (contains_instr(b, index)) return true;
    }
    return false;
  }

  static bool find_path(
      const std::vector<Stmt>& block, int index,
      std::vector<std::pair<const std::vector<Stmt>*, std::size_t>>& path) {
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (!contains_instr(block[k], index)) continue;
      path.emplace_back(&block, k);
      if (block[k].kind == Stmt::Kind::For) find_path(block[k].body, index, path);
      return true;
    }
    return false;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Program prog_;
  std::vector<int> loop_stack_;
  int guard_depth_ = 0;
  std::set<std::string> labels_;
  std::vector<GotoSite> goto_sites_;
};

}  // namespace

Program parse_program(const SourceProgram& src) {
  Parser parser(lex(src.text), src.origin);
  return parser.run();
}

}  // namespace ddi
