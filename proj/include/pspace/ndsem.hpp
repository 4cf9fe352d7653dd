#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pspace/powerspace.hpp"
#include "pspace/semilattice.hpp"

namespace pspace {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Lit {
  std::int64_t value;
};
struct Var {
  std::string name;
};
struct BinOp {
  std::string op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Choice {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Let {
  std::string name;
  ExprPtr bound;
  ExprPtr body;
};

struct Expr {
  std::variant<Lit, Var, BinOp, Choice, Let> node;
};

ExprPtr make_lit(std::int64_t v);
ExprPtr make_var(std::string name);
ExprPtr make_binop(std::string op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_choice(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_let(std::string name, ExprPtr bound, ExprPtr body);

bool same_expr(const Expr& a, const Expr& b);
// Source form accepted by parse_program.
std::string to_source(const Expr& e);

// Grammar:
//   e ::= int | ident | ( e op e ) | ( e ) | choice ( e , e ) | let ident = e in e
// `op` is a run of symbol characters; '#' starts a comment. Throws
// syntax_error ("line:col: ...") or unbound_variable.
ExprPtr parse_program(std::string_view text);

// How integer literals are abstracted. The first applicable rule wins:
// explicit map, sign rule, parity rule, default.
struct LiteralRules {
  std::map<std::int64_t, std::size_t> map;
  struct Sign {
    std::size_t neg, zero, pos;
  };
  struct Parity {
    std::size_t even, odd;
  };
  std::optional<Sign> sign;
  std::optional<Parity> parity;
  std::optional<std::size_t> fallback;
};

struct AbstractDomain {
  Poset poset;
  LiteralRules lits;
  std::map<std::string, OpTable, std::less<>> ops;

  // Throws invalid_argument when no rule covers v.
  std::size_t abstract_lit(std::int64_t v) const;
};

// Table sizes, literal targets, and joint monotonicity of every operation.
// Throws invalid_argument or not_monotone.
void validate_domain(const AbstractDomain& d);

// {Neg, Zero, Pos} antichain with exact sign multiplication "*".
AbstractDomain sign_domain();
// {Even, Odd} antichain with "+", "-" and "*".
AbstractDomain parity_domain();

enum class Mode { may, must, convex };

std::string_view to_string(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;
// may -> lower, must -> upper, convex -> convex.
Kind mode_kind(Mode m) noexcept;

struct Verdict {
  Mode mode = Mode::may;
  Poset domain;
  Elem element;
};

// Literals go to unit elements, choice to the powerspace union, operators to
// the image of the generator products (canonicalised), let binds the value of
// the bound expression (call-by-value). Throws unknown_op or unbound_variable.
Verdict analyze(const Expr& e, const AbstractDomain& d, Mode mode);

// Binary operation lifted to powerspace elements of the given kind.
Elem lift_binop(Kind kind, const Poset& base, const OpTable& op, const Elem& a, const Elem& b);

// may: {Neg, Pos}
// must: at least Pos | must: at least one of {Neg, Pos} (no single guaranteed value)
// convex: exactly 0 | convex: between 0 and {1, 2}
std::string render_verdict(const Verdict& v);

}  // namespace pspace
