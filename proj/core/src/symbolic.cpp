#include "heisidx/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace heisidx {

namespace {

int abs_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool is_exact_zero(const Matrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != Complex(0.0, 0.0)) return false;
  return true;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * double(n - i) / double(i + 1);
  return b;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= double(i);
  return f;
}

}  // namespace

int Monomial::weight() const { return abs_sum(z) + abs_sum(zbar) + 2 * t; }

bool Monomial::is_unit() const { return t == 0 && abs_sum(z) == 0 && abs_sum(zbar) == 0; }

EnvElement::EnvElement(int n, int r) : n_(n), r_(r) {
  if (n < 1 || r < 1) throw DimensionError("EnvElement needs n >= 1 and r >= 1");
}

EnvElement EnvElement::unit(int n, int r) {
  EnvElement e(n, r);
  Monomial one{std::vector<int>(n, 0), std::vector<int>(n, 0), 0};
  e.add_term(one, Matrix::Identity(r, r));
  return e;
}

EnvElement EnvElement::generator(Generator g, int n, int r) {
  EnvElement e(n, r);
  Monomial m{std::vector<int>(n, 0), std::vector<int>(n, 0), 0};
  switch (g.kind) {
    case GeneratorKind::Z:
      if (g.j < 1 || g.j > n) throw DimensionError("generator index out of range");
      m.z[g.j - 1] = 1;
      break;
    case GeneratorKind::Zbar:
      if (g.j < 1 || g.j > n) throw DimensionError("generator index out of range");
      m.zbar[g.j - 1] = 1;
      break;
    case GeneratorKind::T:
      m.t = 1;
      break;
  }
  e.add_term(m, Matrix::Identity(r, r));
  return e;
}

EnvElement EnvElement::constant(Complex c, int n, int r) {
  EnvElement e(n, r);
  Monomial one{std::vector<int>(n, 0), std::vector<int>(n, 0), 0};
  e.add_term(one, c * Matrix::Identity(r, r));
  return e;
}

EnvElement EnvElement::constant(const Matrix& c, int n) {
  if (c.rows() != c.cols() || c.rows() < 1) throw DimensionError("coefficient matrix must be square");
  EnvElement e(n, int(c.rows()));
  Monomial one{std::vector<int>(n, 0), std::vector<int>(n, 0), 0};
  e.add_term(one, c);
  return e;
}

int EnvElement::heisenberg_order() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.weight());
  return d;
}

int EnvElement::degree_raise() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, abs_sum(m.z) - abs_sum(m.zbar));
  return d;
}

bool EnvElement::is_constant_term() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Matrix EnvElement::constant_coefficient() const {
  Monomial one{std::vector<int>(n_, 0), std::vector<int>(n_, 0), 0};
  auto it = terms_.find(one);
  return it == terms_.end() ? Matrix::Zero(r_, r_).eval() : it->second;
}

void EnvElement::add_term(const Monomial& m, const Matrix& c) {
  if (int(m.z.size()) != n_ || int(m.zbar.size()) != n_)
    throw DimensionError("monomial multi-index size != n");
  if (c.rows() != r_ || c.cols() != r_) throw DimensionError("coefficient is not r x r");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!is_exact_zero(c)) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (is_exact_zero(it->second)) terms_.erase(it);
}

EnvElement EnvElement::operator+(const EnvElement& rhs) const {
  if (rhs.n_ != n_ || rhs.r_ != r_) throw DimensionError("EnvElement shape mismatch in +");
  EnvElement out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

EnvElement EnvElement::operator-(const EnvElement& rhs) const {
  if (rhs.n_ != n_ || rhs.r_ != r_) throw DimensionError("EnvElement shape mismatch in -");
  EnvElement out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, (-c).eval());
  return out;
}

EnvElement EnvElement::operator*(Complex s) const {
  EnvElement out(n_, r_);
  if (s == Complex(0.0, 0.0)) return out;
  for (const auto& [m, c] : terms_) out.add_term(m, (s * c).eval());
  return out;
}

EnvElement EnvElement::multiply(const EnvElement& rhs) const {
  if (rhs.n_ != n_ || rhs.r_ != r_) throw DimensionError("EnvElement shape mismatch in multiply");
  EnvElement out(n_, r_);
  // (Z^a1 Zb^g1 T^p1)(Z^a2 Zb^g2 T^p2): commute Zb^g1 past Z^a2 with
  // Zb^m Z^k = sum_j j! C(m,j) C(k,j) (-2i T)^j Z^(k-j) Zb^(m-j), per slot.
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      Matrix coeff = c1 * c2;
      std::vector<int> kmax(n_);
      for (int j = 0; j < n_; ++j) kmax[j] = std::min(m1.zbar[j], m2.z[j]);
      std::vector<int> k(n_, 0);
      while (true) {
        Complex factor{1.0, 0.0};
        int ksum = 0;
        for (int j = 0; j < n_; ++j) {
          if (k[j] > 0) {
            factor *= factorial(k[j]) * binom(m1.zbar[j], k[j]) * binom(m2.z[j], k[j]);
            factor *= std::pow(Complex(0.0, -2.0), k[j]);
          }
          ksum += k[j];
        }
        Monomial m{std::vector<int>(n_), std::vector<int>(n_), m1.t + m2.t + ksum};
        for (int j = 0; j < n_; ++j) {
          m.z[j] = m1.z[j] + m2.z[j] - k[j];
          m.zbar[j] = m1.zbar[j] + m2.zbar[j] - k[j];
        }
        out.add_term(m, (factor * coeff).eval());
        // next multi-index k <= kmax
        int carry = 0;
        while (carry < n_) {
          if (++k[carry] <= kmax[carry]) break;
          k[carry] = 0;
          ++carry;
        }
        if (carry == n_) break;
      }
    }
  }
  return out;
}

EnvElement EnvElement::op_involution() const {
  EnvElement out(n_, r_);
  // op(C Z^a Zb^g T^p) = (-1)^p C^T Zb^g Z^a T^p, then reorder Zb^g Z^a.
  for (const auto& [m, c] : terms_) {
    Matrix coeff = double(m.t % 2 == 0 ? 1 : -1) * c.transpose();
    std::vector<int> kmax(n_);
    for (int j = 0; j < n_; ++j) kmax[j] = std::min(m.zbar[j], m.z[j]);
    std::vector<int> k(n_, 0);
    while (true) {
      Complex factor{1.0, 0.0};
      int ksum = 0;
      for (int j = 0; j < n_; ++j) {
        if (k[j] > 0) {
          factor *= factorial(k[j]) * binom(m.zbar[j], k[j]) * binom(m.z[j], k[j]);
          factor *= std::pow(Complex(0.0, -2.0), k[j]);
        }
        ksum += k[j];
      }
      Monomial mm{std::vector<int>(n_), std::vector<int>(n_), m.t + ksum};
      for (int j = 0; j < n_; ++j) {
        mm.z[j] = m.z[j] - k[j];
        mm.zbar[j] = m.zbar[j] - k[j];
      }
      out.add_term(mm, (factor * coeff).eval());
      int carry = 0;
      while (carry < n_) {
        if (++k[carry] <= kmax[carry]) break;
        k[carry] = 0;
        ++carry;
      }
      if (carry == n_) break;
    }
  }
  return out;
}

EnvElement EnvElement::formal_adjoint() const {
  EnvElement out(n_, r_);
  // adjoint(C Z^a Zb^g T^p) = (-1)^p C^H Z^g Zb^a T^p: already normal ordered.
  for (const auto& [m, c] : terms_) {
    Monomial mm{m.zbar, m.z, m.t};
    Matrix coeff = double(m.t % 2 == 0 ? 1 : -1) * c.adjoint();
    out.add_term(mm, coeff);
  }
  return out;
}

EnvElement EnvElement::dilate(double s) const {
  if (!(s > 0.0)) throw DimensionError("dilate needs s > 0");
  EnvElement out(n_, r_);
  for (const auto& [m, c] : terms_) out.add_term(m, (std::pow(s, m.weight()) * c).eval());
  return out;
}

EnvElement EnvElement::principal_part(int d) const {
  EnvElement out(n_, r_);
  for (const auto& [m, c] : terms_) {
    int w = m.weight();
    if (w > d)
      throw DimensionError("principal_part: monomial of weight " + std::to_string(w) +
                           " exceeds declared order " + std::to_string(d));
    if (w == d) out.add_term(m, c);
  }
  return out;
}

bool EnvElement::approx_equal(const EnvElement& rhs, double tol) const {
  if (rhs.n_ != n_ || rhs.r_ != r_) return false;
  auto diff = *this - rhs;
  for (const auto& [m, c] : diff.terms_)
    if (c.cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

std::string EnvElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (r_ == 1) {
      Complex v = c(0, 0);
      os << "(" << v.real() << "," << v.imag() << ")";
    } else {
      os << "[";
      for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < r_; ++j) {
          Complex v = c(i, j);
          os << "(" << v.real() << "," << v.imag() << ")";
          if (j + 1 < r_) os << ",";
        }
        if (i + 1 < r_) os << ";";
      }
      os << "]";
    }
    for (int j = 0; j < n_; ++j)
      if (m.z[j] > 0) {
        os << " Z" << (j + 1);
        if (m.z[j] > 1) os << "^" << m.z[j];
      }
    for (int j = 0; j < n_; ++j)
      if (m.zbar[j] > 0) {
        os << " Zb" << (j + 1);
        if (m.zbar[j] > 1) os << "^" << m.zbar[j];
      }
    if (m.t > 0) {
      os << " T";
      if (m.t > 1) os << "^" << m.t;
    }
  }
  return os.str();
}

}  // namespace heisidx
