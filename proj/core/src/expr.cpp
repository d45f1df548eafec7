#include "kf/expr.hpp"

#include <cctype>
#include <sstream>

#include "kf/errors.hpp"

namespace kf {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  KnotExpr run() {
    const KnotExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw invalid_input("syntax error at offset " + std::to_string(pos_) +
                        ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool peek_is_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer literal too large");
      v = 10 * v + (s_[pos_] - '0');
      ++pos_;
    }
    return negative ? -v : v;
  }

  KnotExpr atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected an atom");
    const char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return mirror_knot(atom());
    }
    if (c == '(') {
      ++pos_;
      const KnotExpr e = expr();
      expect(')');
      return e;
    }
    if (c == 'T') {
      ++pos_;
      expect('(');
      const std::int64_t p = integer();
      expect(',');
      const std::int64_t q = integer();
      expect(')');
      return torus_knot(p, q);
    }
    if (c == 'C') {
      ++pos_;
      expect('(');
      const KnotExpr companion = atom();
      expect(';');
      const std::int64_t m = integer();
      expect(',');
      const std::int64_t l = integer();
      expect(')');
      return cable_knot(companion, m, l);
    }
    if (c == 'K') {
      ++pos_;
      expect('(');
      const std::int64_t i = integer();
      expect(',');
      const std::int64_t j = integer();
      expect(')');
      return k_ij(i, j);
    }
    if (c == 'S') {
      ++pos_;
      expect('[');
      StepSequence seq;
      if (!peek_is(']')) {
        seq.push_back(integer());
        while (peek_is(',')) {
          ++pos_;
          seq.push_back(integer());
        }
      }
      expect(']');
      return raw_class_knot(seq);
    }
    fail("expected an atom");
  }

  KnotExpr term() {
    if (peek_is_digit()) {
      const std::int64_t n = integer();
      if (n < 1) fail("repetition count must be positive");
      if (n > 4096) fail("repetition count too large");
      expect('*');
      const KnotExpr a = atom();
      return sum_knots(std::vector<KnotExpr>(static_cast<std::size_t>(n), a));
    }
    return atom();
  }

  KnotExpr expr() {
    std::vector<KnotExpr> children{term()};
    while (peek_is('+') || peek_is('-')) {
      const char op = s_[pos_];
      ++pos_;
      KnotExpr t = term();
      children.push_back(op == '-' ? mirror_knot(t) : t);
    }
    return sum_knots(children);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void print_node(const KnotExpr& e, std::ostringstream& os, bool as_atom);

// Term position: a repeat prints as n*Atom, a sum needs parentheses.
void print_term(const KnotExpr& e, std::ostringstream& os) {
  if (e.kind == KnotKind::repeat) {
    os << e.n << '*';
    print_node(e.children[0], os, true);
    return;
  }
  print_node(e, os, true);
}

void print_node(const KnotExpr& e, std::ostringstream& os, bool as_atom) {
  switch (e.kind) {
    case KnotKind::torus:
      os << "T(" << e.p << ',' << e.q << ')';
      return;
    case KnotKind::cable:
      os << "C(";
      print_node(e.children[0], os, true);
      os << ';' << e.m << ',' << e.l << ')';
      return;
    case KnotKind::raw_class: {
      os << "S[";
      for (std::size_t k = 0; k < e.seq.size(); ++k)
        os << (k ? "," : "") << e.seq[k];
      os << ']';
      return;
    }
    case KnotKind::mirror:
      os << '-';
      print_node(e.children[0], os, true);
      return;
    case KnotKind::repeat:
      if (as_atom) os << '(';
      print_term(e, os);
      if (as_atom) os << ')';
      return;
    case KnotKind::sum: {
      if (as_atom) os << '(';
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const KnotExpr& child = e.children[k];
        if (k == 0) {
          print_term(child, os);
        } else if (child.kind == KnotKind::mirror) {
          os << " - ";
          print_term(child.children[0], os);
        } else {
          os << " + ";
          print_term(child, os);
        }
      }
      if (as_atom) os << ')';
      return;
    }
  }
  throw invariant_violation("unknown knot expression node");
}

}  // namespace

KnotExpr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const KnotExpr& e) {
  std::ostringstream os;
  print_node(e, os, false);
  return os.str();
}

}  // namespace kf
