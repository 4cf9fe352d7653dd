#include "pspace/ndsem.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <vector>

#include "pspace/error.hpp"

namespace pspace {

ExprPtr make_lit(std::int64_t v) { return std::make_shared<const Expr>(Expr{Lit{v}}); }
ExprPtr make_var(std::string name) { return std::make_shared<const Expr>(Expr{Var{std::move(name)}}); }
ExprPtr make_binop(std::string op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{BinOp{std::move(op), std::move(lhs), std::move(rhs)}});
}
ExprPtr make_choice(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Choice{std::move(lhs), std::move(rhs)}});
}
ExprPtr make_let(std::string name, ExprPtr bound, ExprPtr body) {
  return std::make_shared<const Expr>(Expr{Let{std::move(name), std::move(bound), std::move(body)}});
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Lit>) return x.value == y.value;
        if constexpr (std::is_same_v<T, Var>) return x.name == y.name;
        if constexpr (std::is_same_v<T, BinOp>)
          return x.op == y.op && same_expr(*x.lhs, *y.lhs) && same_expr(*x.rhs, *y.rhs);
        if constexpr (std::is_same_v<T, Choice>) return same_expr(*x.lhs, *y.lhs) && same_expr(*x.rhs, *y.rhs);
        if constexpr (std::is_same_v<T, Let>)
          return x.name == y.name && same_expr(*x.bound, *y.bound) && same_expr(*x.body, *y.body);
      },
      a.node);
}

std::string to_source(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Lit>) return std::to_string(x.value);
        if constexpr (std::is_same_v<T, Var>) return x.name;
        if constexpr (std::is_same_v<T, BinOp>)
          return "(" + to_source(*x.lhs) + " " + x.op + " " + to_source(*x.rhs) + ")";
        if constexpr (std::is_same_v<T, Choice>)
          return "choice(" + to_source(*x.lhs) + ", " + to_source(*x.rhs) + ")";
        if constexpr (std::is_same_v<T, Let>)
          return "let " + x.name + " = " + to_source(*x.bound) + " in " + to_source(*x.body);
      },
      e.node);
}

// --- Parser -------------------------------------------------------------------

namespace {

bool is_op_char(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '%': case '<': case '>':
    case '&': case '|': case '^': case '!': case '~': case '@': case '$':
      return true;
    default:
      return false;
  }
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr program() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::syntax_error, std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "', found end of input");
    if (s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip();
    if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  ExprPtr integer(std::size_t start) {
    bool neg = false;
    if (s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string text(s_.substr(digits, pos_ - digits));
    if (neg) text.insert(text.begin(), '-');
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size()) fail_at(start, "integer literal out of range");
    return make_lit(v);
  }

  ExprPtr expr() {
    if (at_end()) fail("expected expression, found end of input");
    const std::size_t start = pos_;
    const char c = s_[pos_];
    const bool digit_next = pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && digit_next)) return integer(start);
    if (c == '(') {
      ++pos_;
      ExprPtr lhs = expr();
      skip();
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return lhs;
      }
      if (pos_ >= s_.size()) fail("expected operator, found end of input");
      if (!is_op_char(s_[pos_])) fail("expected operator");
      const std::size_t op_start = pos_;
      while (pos_ < s_.size() && is_op_char(s_[pos_])) ++pos_;
      std::string op(s_.substr(op_start, pos_ - op_start));
      ExprPtr rhs = expr();
      expect(')');
      return make_binop(std::move(op), std::move(lhs), std::move(rhs));
    }
    if (is_ident_start(c)) {
      std::string name = ident();
      if (name == "choice") {
        expect('(');
        ExprPtr lhs = expr();
        expect(',');
        ExprPtr rhs = expr();
        expect(')');
        return make_choice(std::move(lhs), std::move(rhs));
      }
      if (name == "let") {
        skip();
        const std::size_t name_at = pos_;
        std::string var = ident();
        if (var == "choice" || var == "let" || var == "in") fail_at(name_at, "keyword '" + var + "' cannot be bound");
        expect('=');
        ExprPtr bound = expr();
        skip();
        const std::size_t kw = pos_;
        if (at_end() || !is_ident_start(s_[pos_]) || ident() != "in") fail_at(kw, "expected 'in'");
        ExprPtr body = expr();
        return make_let(std::move(var), std::move(bound), std::move(body));
      }
      if (name == "in") fail_at(start, "unexpected keyword 'in'");
      return make_var(std::move(name));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void check_bound(const Expr& e, std::vector<std::string>& scope) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          for (const auto& s : scope)
            if (s == x.name) return;
          throw Error(ErrorCode::unbound_variable, "unbound variable '" + x.name + "'");
        } else if constexpr (std::is_same_v<T, BinOp> || std::is_same_v<T, Choice>) {
          check_bound(*x.lhs, scope);
          check_bound(*x.rhs, scope);
        } else if constexpr (std::is_same_v<T, Let>) {
          check_bound(*x.bound, scope);
          scope.push_back(x.name);
          check_bound(*x.body, scope);
          scope.pop_back();
        }
      },
      e.node);
}

}  // namespace

ExprPtr parse_program(std::string_view text) {
  ExprPtr e = Parser(text).program();
  std::vector<std::string> scope;
  check_bound(*e, scope);
  return e;
}

// --- Domains --------------------------------------------------------------------

std::size_t AbstractDomain::abstract_lit(std::int64_t v) const {
  if (auto it = lits.map.find(v); it != lits.map.end()) return it->second;
  if (lits.sign) return v < 0 ? lits.sign->neg : v == 0 ? lits.sign->zero : lits.sign->pos;
  if (lits.parity) return v % 2 == 0 ? lits.parity->even : lits.parity->odd;
  if (lits.fallback) return *lits.fallback;
  throw Error(ErrorCode::invalid_argument, "no abstraction for literal " + std::to_string(v));
}

void validate_domain(const AbstractDomain& d) {
  const std::size_t n = d.poset.size();
  if (n == 0) throw Error(ErrorCode::empty_poset, "abstract domain has no elements");
  auto in_range = [&](std::size_t i, const std::string& what) {
    if (i >= n) throw Error(ErrorCode::invalid_argument, what + " refers to element " + std::to_string(i) + " outside the domain");
  };
  for (const auto& [v, i] : d.lits.map) in_range(i, "literal " + std::to_string(v));
  if (d.lits.sign) {
    in_range(d.lits.sign->neg, "sign rule");
    in_range(d.lits.sign->zero, "sign rule");
    in_range(d.lits.sign->pos, "sign rule");
  }
  if (d.lits.parity) {
    in_range(d.lits.parity->even, "parity rule");
    in_range(d.lits.parity->odd, "parity rule");
  }
  if (d.lits.fallback) in_range(*d.lits.fallback, "default literal");
  for (const auto& [sym, t] : d.ops) {
    if (t.size() != n) throw Error(ErrorCode::invalid_argument, "table for '" + sym + "' has the wrong size");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) in_range(t(a, b), "table for '" + sym + "'");
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        if (!d.poset.leq(a1, a2)) continue;
        for (std::size_t b1 = 0; b1 < n; ++b1)
          for (std::size_t b2 = 0; b2 < n; ++b2)
            if (d.poset.leq(b1, b2) && !d.poset.leq(t(a1, b1), t(a2, b2)))
              throw Error(ErrorCode::not_monotone, "operation '" + sym + "' is not monotone at (" +
                                                       d.poset.name(a1) + ", " + d.poset.name(b1) + ") <= (" +
                                                       d.poset.name(a2) + ", " + d.poset.name(b2) + ")");
      }
  }
}

AbstractDomain sign_domain() {
  AbstractDomain d;
  d.poset = Poset::from_pairs({"Neg", "Zero", "Pos"}, {});
  d.lits.sign = LiteralRules::Sign{0, 1, 2};
  OpTable mul(3);
  const std::size_t r[3][3] = {{2, 1, 0}, {1, 1, 1}, {0, 1, 2}};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) mul.set(a, b, r[a][b]);
  d.ops.emplace("*", std::move(mul));
  return d;
}

AbstractDomain parity_domain() {
  AbstractDomain d;
  d.poset = Poset::from_pairs({"Even", "Odd"}, {});
  d.lits.parity = LiteralRules::Parity{0, 1};
  OpTable add(2), mul(2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      add.set(a, b, a ^ b);
      mul.set(a, b, a & b);
    }
  d.ops.emplace("+", add);
  d.ops.emplace("-", add);
  d.ops.emplace("*", mul);
  return d;
}

// --- Analysis -------------------------------------------------------------------

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::may: return "may";
    case Mode::must: return "must";
    case Mode::convex: return "convex";
  }
  return "may";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
  if (text == "may") return Mode::may;
  if (text == "must") return Mode::must;
  if (text == "convex") return Mode::convex;
  return std::nullopt;
}

Kind mode_kind(Mode m) noexcept {
  switch (m) {
    case Mode::may: return Kind::lower;
    case Mode::must: return Kind::upper;
    case Mode::convex: return Kind::convex;
  }
  return Kind::lower;
}

Elem lift_binop(Kind kind, const Poset& base, const OpTable& op, const Elem& a, const Elem& b) {
  Subset img = base.none();
  const Subset gb = generators(kind, b);
  generators(kind, a).for_each([&](std::size_t x) { gb.for_each([&](std::size_t y) { img.insert(op(x, y)); }); });
  return canonical(kind, base, img);
}

namespace {

struct Analyzer {
  const AbstractDomain& d;
  Kind kind;
  std::vector<std::pair<std::string, Elem>> env;

  Elem eval(const Expr& e) {
    return std::visit(
        [&](const auto& x) -> Elem {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Lit>) {
            return unit_elem(kind, d.poset, d.abstract_lit(x.value));
          } else if constexpr (std::is_same_v<T, Var>) {
            for (auto it = env.rbegin(); it != env.rend(); ++it)
              if (it->first == x.name) return it->second;
            throw Error(ErrorCode::unbound_variable, "unbound variable '" + x.name + "'");
          } else if constexpr (std::is_same_v<T, BinOp>) {
            auto it = d.ops.find(x.op);
            if (it == d.ops.end()) throw Error(ErrorCode::unknown_op, "domain has no operation '" + x.op + "'");
            Elem l = eval(*x.lhs);
            Elem r = eval(*x.rhs);
            return lift_binop(kind, d.poset, it->second, l, r);
          } else if constexpr (std::is_same_v<T, Choice>) {
            Elem l = eval(*x.lhs);
            Elem r = eval(*x.rhs);
            return canonical(kind, d.poset, generators(kind, l) | generators(kind, r));
          } else {
            Elem v = eval(*x.bound);
            env.emplace_back(x.name, std::move(v));
            Elem out = eval(*x.body);
            env.pop_back();
            return out;
          }
        },
        e.node);
  }
};

std::string listing(const Poset& p, const Subset& s) {
  std::string out;
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += p.name(i);
    first = false;
  });
  return out;
}

std::string braced(const Poset& p, const Subset& s) { return "{" + listing(p, s) + "}"; }
std::string bare_or_braced(const Poset& p, const Subset& s) {
  return s.count() == 1 ? listing(p, s) : braced(p, s);
}

}  // namespace

Verdict analyze(const Expr& e, const AbstractDomain& d, Mode mode) {
  Analyzer a{d, mode_kind(mode), {}};
  Elem el = a.eval(e);
  return Verdict{mode, d.poset, std::move(el)};
}

std::string render_verdict(const Verdict& v) {
  const Poset& p = v.domain;
  switch (v.mode) {
    case Mode::may:
      return "may: " + braced(p, v.element.max);
    case Mode::must:
      if (v.element.min.count() == 1) return "must: at least " + listing(p, v.element.min);
      return "must: at least one of " + braced(p, v.element.min) + " (no single guaranteed value)";
    case Mode::convex:
      if (v.element.min == v.element.max) return "convex: exactly " + bare_or_braced(p, v.element.min);
      return "convex: between " + bare_or_braced(p, v.element.min) + " and " + bare_or_braced(p, v.element.max);
  }
  return {};
}

}  // namespace pspace
