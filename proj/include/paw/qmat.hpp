#pragma once

// Dense complex-matrix kernel. Everything here is a free function templated on
// the real scalar (or on the Eigen expression type) so it composes with Eigen
// expressions directly.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <type_traits>
#include <vector>

#include "paw/errors.hpp"

namespace paw {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Matrix = CMatrix<double>;
using Vector = CVector<double>;
using RealVector = RVector<double>;
using Complex = std::complex<double>;

/// Default tolerance for Hermiticity checks on inputs.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues within this gap are treated as one degenerate group when fixing eigenvectors.
inline constexpr double kDegeneracyTol = 1e-9;

enum class Subsystem { First, Second };

template <typename Real = double>
CMatrix<Real> identity(Eigen::Index dim) {
  return CMatrix<Real>::Identity(dim, dim);
}

template <typename Real = double>
CMatrix<Real> pauli_x() {
  CMatrix<Real> m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

template <typename Real = double>
CMatrix<Real> pauli_y() {
  using C = std::complex<Real>;
  CMatrix<Real> m(2, 2);
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Real = double>
CMatrix<Real> pauli_z() {
  CMatrix<Real> m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Largest entry magnitude, the norm all tolerances in this library refer to.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " must be a non-empty square matrix");
  }
}

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  return max_abs(a - a.adjoint());
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, typename Derived::RealScalar tol = kHermitianTol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

/// Kronecker product; the left factor indexes the most significant subsystem.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Real>
struct HermitianEigen {
  RVector<Real> values;    // ascending
  CMatrix<Real> vectors;   // orthonormal columns, same order as values
};

namespace detail {

// Replaces the eigenvectors of one degenerate group [begin, end) by a canonical
// orthonormal basis of the same subspace: greedy Gram-Schmidt over projected unit
// vectors, largest residual first, lowest index on ties. The chosen basis vector
// has a real positive component at its pivot index, which also fixes the phase
// of non-degenerate eigenvectors.
template <typename Real>
void canonicalize_group(CMatrix<Real>& vectors, Eigen::Index begin, Eigen::Index end) {
  const Eigen::Index n = vectors.rows();
  const Eigen::Index k = end - begin;
  const CMatrix<Real> basis = vectors.middleCols(begin, k);
  const CMatrix<Real> projector = basis * basis.adjoint();

  CMatrix<Real> chosen(n, k);
  for (Eigen::Index col = 0; col < k; ++col) {
    Eigen::Index best = -1;
    Real best_norm = -1;
    CVector<Real> best_vec;
    for (Eigen::Index i = 0; i < n; ++i) {
      CVector<Real> v = projector.col(i);
      for (Eigen::Index prev = 0; prev < col; ++prev) {
        v -= chosen.col(prev) * chosen.col(prev).dot(v);
      }
      const Real norm = v.norm();
      // Strict comparison with a relative margin keeps the lowest index on near-ties.
      if (norm > best_norm * (Real(1) + Real(1e-9))) {
        best = i;
        best_norm = norm;
        best_vec = std::move(v);
      }
    }
    // Second pass removes rounding drift from the first orthogonalization.
    for (Eigen::Index prev = 0; prev < col; ++prev) {
      best_vec -= chosen.col(prev) * chosen.col(prev).dot(best_vec);
    }
    best_vec /= best_vec.norm();
    const auto pivot = best_vec(best);
    if (std::abs(pivot) > 0) best_vec *= std::conj(pivot) / std::abs(pivot);
    chosen.col(col) = best_vec;
  }
  vectors.middleCols(begin, k) = chosen;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix with eigenvalues ascending.
///
/// Eigenvectors are canonical: each degenerate group is re-orthonormalized in a
/// fixed basis order, so identical inputs give identical outputs irrespective of
/// the solver's internal choices.
template <typename Derived>
HermitianEigen<typename Derived::RealScalar> hermitian_eigendecompose(
    const Eigen::MatrixBase<Derived>& a, typename Derived::RealScalar tol = kHermitianTol) {
  using Real = typename Derived::RealScalar;
  require_square(a, "hermitian_eigendecompose input");
  if (!all_finite(a)) throw Error(Errc::InvalidArgument, "matrix has non-finite entries");
  if (hermiticity_defect(a) > tol) {
    throw Error(Errc::NotHermitian, "matrix deviates from its adjoint by more than the tolerance");
  }
  const CMatrix<Real> sym = (a + a.adjoint()) * Real(0.5);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::ConvergenceFailure, "self-adjoint eigensolver did not converge");
  }
  HermitianEigen<Real> out{solver.eigenvalues(), solver.eigenvectors()};

  const Eigen::Index n = out.values.size();
  const Real scale = std::max(Real(1), out.values.cwiseAbs().maxCoeff());
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || out.values(i) - out.values(i - 1) > Real(kDegeneracyTol) * scale) {
      detail::canonicalize_group(out.vectors, begin, i);
      begin = i;
    }
  }
  return out;
}

/// Applies f to the spectrum of a Hermitian matrix: V diag(f(λ)) V†.
/// The result is complex if f returns a complex number (e.g. exp(-iλt)).
template <typename Derived, typename F>
auto spectral_function(const Eigen::MatrixBase<Derived>& a, F&& f,
                       typename Derived::RealScalar tol = kHermitianTol) {
  using Real = typename Derived::RealScalar;
  const auto eig = hermitian_eigendecompose(a, tol);
  CVector<Real> mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    mapped(i) = std::complex<Real>(std::invoke(f, eig.values(i)));
  }
  CMatrix<Real> out = eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
  return out;
}

/// x·log₂x with the 0·log0 = 0 convention. Inputs in [-1e-12, 0) are clamped to zero.
template <typename Real>
Real xlog2x(Real x) {
  if (x <= Real(0)) return Real(0);
  return x * std::log2(x);
}

/// e^{-iHt} for Hermitian H.
template <typename Derived>
CMatrix<typename Derived::RealScalar> unitary_evolution(const Eigen::MatrixBase<Derived>& h,
                                                        typename Derived::RealScalar t) {
  using Real = typename Derived::RealScalar;
  return spectral_function(h, [t](Real e) { return std::exp(std::complex<Real>(0, -e * t)); });
}

/// Traces out one factor of a bipartite operator on C^{d1} ⊗ C^{d2}.
template <typename Derived>
CMatrix<typename Derived::RealScalar> partial_trace(const Eigen::MatrixBase<Derived>& a, Eigen::Index d1,
                                                    Eigen::Index d2, Subsystem keep) {
  using Real = typename Derived::RealScalar;
  if (d1 <= 0 || d2 <= 0 || a.rows() != a.cols() || a.rows() != d1 * d2) {
    throw Error(Errc::DimensionMismatch, "partial_trace: matrix dimension is not d1*d2");
  }
  if (keep == Subsystem::First) {
    CMatrix<Real> out = CMatrix<Real>::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += a(i * d2 + k, j * d2 + k);
    return out;
  }
  CMatrix<Real> out = CMatrix<Real>::Zero(d2, d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k) out(i, j) += a(k * d2 + i, k * d2 + j);
  return out;
}

}  // namespace paw
