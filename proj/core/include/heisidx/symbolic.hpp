#pragma once

#include <map>
#include <optional>

#include "heisidx/prelude.hpp"

namespace heisidx {

/// Generators of (the complexified Lie algebra of) the Heisenberg group with
/// n complex contact directions: Z_1..Z_n, Zb_1..Zb_n and the central T.
/// Heisenberg weights: weight(Z) = weight(Zb) = 1, weight(T) = 2.
enum class GeneratorKind { Z, Zbar, T };

struct Generator {
  GeneratorKind kind;
  int j = 0;  // 1-based direction index; unused for T
};

/// Normal-ordered monomial Z^alpha Zb^gamma T^p. Multi-indices have one slot
/// per complex direction.
struct Monomial {
  std::vector<int> z;     // alpha
  std::vector<int> zbar;  // gamma
  int t = 0;              // p

  int weight() const;
  bool is_unit() const;
  auto operator<=>(const Monomial&) const = default;
};

/// Element of the universal enveloping algebra with r x r matrix
/// coefficients, stored in normal order (Z block, then Zb block, then T
/// powers). Model operators of differential type live here. Immutable in
/// spirit: every operation returns a fresh element.
class EnvElement {
 public:
  EnvElement(int n, int r);

  static EnvElement zero(int n, int r) { return EnvElement(n, r); }
  static EnvElement unit(int n, int r);
  static EnvElement generator(Generator g, int n, int r);
  /// Scalar multiple of the unit monomial.
  static EnvElement constant(Complex c, int n, int r);
  /// Matrix multiple of the unit monomial.
  static EnvElement constant(const Matrix& c, int n);

  int n() const { return n_; }
  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Matrix>& terms() const { return terms_; }

  /// Max monomial weight |alpha|+|gamma|+2p; 0 for the zero element.
  int heisenberg_order() const;
  /// Max degree shift |alpha|-|gamma| over stored monomials (0 if empty).
  int degree_raise() const;
  /// True when the only stored monomial is the unit one.
  bool is_constant_term() const;
  /// Coefficient of the unit monomial (zero matrix if absent).
  Matrix constant_coefficient() const;

  /// Accumulate c * monomial; drops exact-zero results.
  void add_term(const Monomial& m, const Matrix& c);

  EnvElement operator+(const EnvElement& rhs) const;
  EnvElement operator-(const EnvElement& rhs) const;
  EnvElement operator*(Complex s) const;
  friend EnvElement operator*(Complex s, const EnvElement& p) { return p * s; }

  /// Normal-ordered product; [Z_j, Zb_k] = 2i delta_jk T with T central.
  /// Matrix coefficients multiply in order. Throws DimensionError on
  /// mismatched n or r.
  EnvElement multiply(const EnvElement& rhs) const;
  EnvElement operator*(const EnvElement& rhs) const { return multiply(rhs); }

  /// The anti-automorphism induced by (v,t) -> (v,-t): Z -> Z, Zb -> Zb,
  /// T -> -T, word order reversed, matrix coefficients transposed.
  EnvElement op_involution() const;

  /// Formal adjoint: antilinear anti-homomorphism with Z_j <-> Zb_j,
  /// T -> -T and conjugate-transposed coefficients.
  EnvElement formal_adjoint() const;

  /// Parabolic dilation delta_s: scales each monomial of weight w by s^w.
  /// Throws DimensionError if s <= 0.
  EnvElement dilate(double s) const;

  /// Weight-exactly-d homogeneous part. Throws DimensionError if any stored
  /// monomial exceeds weight d (the order was under-declared). The result
  /// may be the zero element.
  EnvElement principal_part(int d) const;

  bool approx_equal(const EnvElement& rhs, double tol = 1e-12) const;

  /// Normal-ordered rendering, e.g. "(1,0) Z1^2 Zb2 T".
  std::string to_string() const;

 private:
  int n_;
  int r_;
  std::map<Monomial, Matrix> terms_;
};

}  // namespace heisidx
