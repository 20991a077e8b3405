#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>

namespace horn {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline double max_abs_entry(const CMatrix& M) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i < M.rows(); ++i) best = std::max(best, std::abs(M(i, j)));
  return best;
}

/// Entrywise check of M(i,j) == conj(M(j,i)) at absolute tolerance tol,
/// relaxed proportionally to the magnitude of the entries.
inline bool is_hermitian(const CMatrix& M, double tol = 1e-12) {
  if (M.rows() != M.cols()) return false;
  double scale = 1.0 + max_abs_entry(M);
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (std::abs(M(i, j) - std::conj(M(j, i))) > tol * scale) return false;
  return true;
}

struct EigenDecomposition {
  RVector values;   // descending
  CMatrix vectors;  // column k pairs with values[k]
};

/// Spectral decomposition of a Hermitian matrix, eigenvalues descending.
/// Rejects input that is not Hermitian within tolerance.
inline EigenDecomposition hermitian_eigen(const CMatrix& H, double tol = 1e-9) {
  if (!is_hermitian(H, tol)) throw std::invalid_argument("hermitian_eigen: input not Hermitian");
  CMatrix sym = (H + H.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigen: eigensolver failed");
  const Eigen::Index n = H.rows();
  EigenDecomposition out;
  out.values = RVector(n);
  out.vectors = CMatrix(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

/// Approximately Haar unitary: QR of an i.i.d. complex Gaussian matrix with
/// the R-diagonal phases folded back in. Deterministic for a given rng state.
inline CMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix G(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) G(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<CMatrix> qr(G);
  CMatrix Q = qr.householderQ() * CMatrix::Identity(n, n);
  CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex d = R(j, j);
    double a = std::abs(d);
    Q.col(j) *= (a > 1e-300) ? d / a : Complex(1, 0);
  }
  return Q;
}

/// Gaussian Hermitian matrix (G + G*)/2.
inline CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix G(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) G(i, j) = Complex(gauss(rng), gauss(rng));
  return (G + G.adjoint()) / 2.0;
}

}  // namespace horn
