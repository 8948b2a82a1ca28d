#pragma once

#include <map>
#include <memory>

#include "heisidx/symbolic.hpp"

namespace heisidx {

/// Declared shape of a named coefficient symbol.
struct CoeffShape {
  bool is_matrix = false;  // scalar otherwise; matrices are r x r
};

/// Declaration context for parsing operator source text.
struct OperatorContext {
  int n = 1;  // number of complex contact directions
  int r = 1;  // coefficient matrix size
  std::map<std::string, CoeffShape> coeffs;
};

/// AST for operator source text. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := 'i' | number | ident | gen | '(' expr ')' | 'Szego' '(' expr ')'
///   gen    := ('Z'|'Zb') index | 'T'
/// Szego(a) stands for the order-zero operator S a S + (1 - S) built from the
/// Szego projector; its argument must evaluate to a coefficient.
struct OperatorExpr {
  enum class Kind { Number, Coeff, Gen, Add, Sub, Mul, Szego };
  using Ptr = std::shared_ptr<const OperatorExpr>;

  Kind kind;
  Complex value{};      // Number
  std::string name;     // Coeff
  Generator gen{};      // Gen
  Ptr lhs, rhs;         // Add/Sub/Mul; Szego uses lhs only

  static Ptr number(Complex v);
  static Ptr coeff(std::string name);
  static Ptr generator(Generator g);
  static Ptr add(Ptr a, Ptr b);
  static Ptr sub(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr szego(Ptr a);

  bool contains_szego() const;
  bool equals(const OperatorExpr& other) const;
};

/// Parses operator source against the declarations. Throws ParseError with a
/// position on syntax errors, undeclared coefficient names, generator indices
/// out of 1..n, or coefficient shape mismatches.
OperatorExpr::Ptr parse_operator(const std::string& src, const OperatorContext& ctx);

/// Canonical printer; parse_operator(print(e)) reproduces e node for node.
std::string print_operator(const OperatorExpr& e);

/// Bound values for named coefficients (frozen at one point of the manifold).
struct CoeffValues {
  std::map<std::string, Complex> scalars;
  std::map<std::string, Matrix> matrices;
};

/// Evaluates a Szego-free expression to an enveloping-algebra element with
/// the bound coefficient values. Throws DimensionError if a Szego node is
/// present or a referenced coefficient is unbound.
EnvElement eval_env(const OperatorExpr& e, const OperatorContext& ctx, const CoeffValues& vals);

}  // namespace heisidx
