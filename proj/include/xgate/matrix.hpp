#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace xgate {

using complexd = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector4d;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;

/// Max-norm deviation of a square matrix from its own adjoint.
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// Max-norm of U†U - 1.
template <typename Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return (u.adjoint() * u - Plain::Identity()).cwiseAbs().maxCoeff();
}

/// exp(-i H dt) for a Hermitian matrix H, via eigendecomposition.
/// H must be Hermitian to within kHermitianTol (scaled by the largest entry);
/// the result is unitary by construction.
template <typename Derived>
typename Derived::PlainObject hermitian_exp(const Eigen::MatrixBase<Derived>& h, double dt) {
  using Plain = typename Derived::PlainObject;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double defect = hermiticity_error(h);
  if (!(defect <= kHermitianTol * scale)) {
    std::ostringstream msg;
    msg << "hermitian_exp: generator is not Hermitian, |H - H^dag|_max = " << defect;
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(dt)) throw std::invalid_argument("hermitian_exp: dt must be finite");

  Eigen::SelfAdjointEigenSolver<Plain> es(h);
  const auto& lambda = es.eigenvalues();
  Plain phases = Plain::Zero();
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k, k) = std::polar(1.0, -lambda(k) * dt);
  }
  return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

/// A 4x4 matrix verified unitary at construction. The universal currency for
/// time-evolution operators and target gates.
class Unitary4 {
 public:
  explicit Unitary4(const Matrix4cd& m) : m_(m) {
    const double defect = unitarity_error(m);
    if (!(defect <= kUnitaryTol)) {
      std::ostringstream msg;
      msg << "Unitary4: matrix is not unitary, |U^dag U - 1|_max = " << defect;
      throw std::invalid_argument(msg.str());
    }
  }

  static Unitary4 identity() { return Unitary4(Matrix4cd::Identity()); }

  const Matrix4cd& matrix() const { return m_; }
  operator const Matrix4cd&() const { return m_; }

  Unitary4 adjoint() const { return Unitary4(Matrix4cd(m_.adjoint())); }
  Unitary4 operator*(const Unitary4& rhs) const { return Unitary4(Matrix4cd(m_ * rhs.m_)); }

 private:
  Matrix4cd m_;
};

/// Determinant of a unitary; |det| = 1 up to roundoff.
inline complexd det4(const Unitary4& u) { return u.matrix().determinant(); }

/// Kronecker product of two single-qubit operators, first factor on the
/// left (slow) index.
inline Matrix4cd kron2(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd out;
  out.block<2, 2>(0, 0) = a(0, 0) * b;
  out.block<2, 2>(0, 2) = a(0, 1) * b;
  out.block<2, 2>(2, 0) = a(1, 0) * b;
  out.block<2, 2>(2, 2) = a(1, 1) * b;
  return out;
}

}  // namespace xgate
