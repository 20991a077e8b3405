#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "horn/feasibility.hpp"
#include "horn/hermitian.hpp"

namespace horn {

struct OptimizerConfig {
  int restarts = 100;
  int max_iterations = 2000;
  double tolerance = 1e-7;   // residual threshold for success
  double initial_step = 0.5;  // backtracking line search start
  double min_step = 1e-12;    // line search floor
  std::uint64_t seed = 0;
};

struct VerificationReport {
  bool spectra_ok = false;
  bool psd_ok = false;
  bool rank_ok = false;
  double max_spectrum_deviation = 0.0;
  double min_sum_eigenvalue = 0.0;
  double rank_excess_eigenvalue = 0.0;  // (r+1)-st largest eigenvalue of the sum
  bool passed() const { return spectra_ok && psd_ok && rank_ok; }
};

struct RealizationResult {
  bool found = false;
  std::vector<CMatrix> matrices;
  std::vector<double> sum_eigenvalues;  // descending
  double residual = 0.0;
  int iterations = 0;     // total over all restarts tried
  int restarts_used = 0;  // restarts consumed (index of success + 1 on success)
};

/// Distance from "positive semidefinite of rank at most r", as the squared
/// l2 defect of the spectrum: tail eigenvalues beyond position r enter
/// squared, negative head eigenvalues enter squared.
inline double penalty_from_eigenvalues(const RVector& mu, int r) {
  double total = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (static_cast<int>(k) < r) {
      double neg = std::min(mu(k), 0.0);
      total += neg * neg;
    } else {
      total += mu(k) * mu(k);
    }
  }
  return total;
}

inline double penalty(const CMatrix& B, int r) {
  return penalty_from_eigenvalues(hermitian_eigen(B).values, r);
}

/// Checks a candidate realization: (a) each spectrum matches alpha entrywise
/// after sorting, (b) the sum has no eigenvalue below -tol, (c) the sum has
/// rank at most r up to tol.
inline VerificationReport verify_realization(const std::vector<CMatrix>& matrices,
                                             const SpectrumInstance& inst, double tol) {
  inst.validate();
  if (static_cast<int>(matrices.size()) != inst.m)
    throw std::invalid_argument("verify_realization: expected m matrices");
  VerificationReport report;
  report.spectra_ok = true;
  for (int s = 1; s <= inst.m; ++s) {
    const CMatrix& A = matrices[static_cast<size_t>(s - 1)];
    if (A.rows() != inst.n || A.cols() != inst.n)
      throw std::invalid_argument("verify_realization: matrix dimension mismatch");
    RVector spectrum = hermitian_eigen(A).values;
    std::vector<double> expected(static_cast<size_t>(inst.n));
    for (int i = 1; i <= inst.n; ++i)
      expected[static_cast<size_t>(i - 1)] = to_double(inst.entry(s, i));
    std::sort(expected.rbegin(), expected.rend());
    for (int i = 0; i < inst.n; ++i) {
      double dev = std::abs(spectrum(i) - expected[static_cast<size_t>(i)]);
      report.max_spectrum_deviation = std::max(report.max_spectrum_deviation, dev);
    }
  }
  report.spectra_ok = report.max_spectrum_deviation <= tol;

  CMatrix B = CMatrix::Zero(inst.n, inst.n);
  for (const auto& A : matrices) B += A;
  RVector mu = hermitian_eigen(B).values;
  report.min_sum_eigenvalue = mu(inst.n - 1);
  report.psd_ok = report.min_sum_eigenvalue >= -tol;
  if (inst.r < inst.n) {
    report.rank_excess_eigenvalue = mu(inst.r);
    report.rank_ok = report.rank_excess_eigenvalue <= tol;
  } else {
    report.rank_excess_eigenvalue = 0.0;
    report.rank_ok = true;
  }
  return report;
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// exp(eta * C) for anti-Hermitian C, reusing the decomposition of -iC.
struct AntiHermitianExp {
  RVector phases;
  CMatrix basis;

  explicit AntiHermitianExp(const CMatrix& C) {
    CMatrix H = Complex(0, -1) * C;  // Hermitian
    auto eig = hermitian_eigen(H, 1e-6);
    phases = eig.values;
    basis = eig.vectors;
  }

  CMatrix at(double eta) const {
    const Eigen::Index n = phases.size();
    CMatrix D = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
      D(k, k) = std::polar(1.0, eta * phases(k));
    return basis * D * basis.adjoint();
  }
};

}  // namespace detail

/// Searches for Hermitian matrices with the prescribed spectra whose sum is
/// positive semidefinite of rank at most r, by first-order descent on the
/// unitary orbit of each diagonal with random restarts. A failure report is
/// not a proof of infeasibility.
inline RealizationResult realize(const SpectrumInstance& inst, const OptimizerConfig& cfg) {
  inst.validate();
  if (!check_dagger(inst).empty())
    throw std::invalid_argument("realize: instance violates weak decrease");
  if (cfg.restarts < 1 || cfg.tolerance <= 0)
    throw std::invalid_argument("realize: bad optimizer configuration");

  const int n = inst.n;
  const int m = inst.m;
  std::vector<RVector> diag(static_cast<size_t>(m));
  for (int s = 1; s <= m; ++s) {
    diag[static_cast<size_t>(s - 1)] = RVector(n);
    for (int i = 1; i <= n; ++i)
      diag[static_cast<size_t>(s - 1)](i - 1) = to_double(inst.entry(s, i));
  }

  RealizationResult best;
  best.residual = std::numeric_limits<double>::infinity();
  best.restarts_used = cfg.restarts;

  auto assemble = [&](const std::vector<CMatrix>& U, int s) {
    return U[static_cast<size_t>(s)] * diag[static_cast<size_t>(s)].asDiagonal() *
           U[static_cast<size_t>(s)].adjoint();
  };

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(detail::mix_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
    std::vector<CMatrix> U(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s)
      U[static_cast<size_t>(s)] =
          (restart == 0) ? CMatrix::Identity(n, n) : random_unitary(n, rng);
    std::vector<CMatrix> A(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) A[static_cast<size_t>(s)] = assemble(U, s);

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
      ++best.iterations;
      CMatrix B = CMatrix::Zero(n, n);
      for (const auto& As : A) B += As;
      auto eig = hermitian_eigen(B, 1e-6);
      double residual = penalty_from_eigenvalues(eig.values, inst.r);

      if (residual < best.residual) {
        best.residual = residual;
        best.matrices = A;
        best.sum_eigenvalues.assign(eig.values.data(), eig.values.data() + n);
      }
      if (residual < cfg.tolerance) {
        best.found = true;
        best.restarts_used = restart + 1;
        return best;
      }

      // gradient of the penalty through the eigenvalues of B
      RVector weights(n);
      for (int k = 0; k < n; ++k)
        weights(k) = (k < inst.r) ? 2.0 * std::min(eig.values(k), 0.0) : 2.0 * eig.values(k);
      CMatrix M = eig.vectors * weights.asDiagonal() * eig.vectors.adjoint();

      std::vector<CMatrix> direction(static_cast<size_t>(m));
      double grad_norm2 = 0.0;
      for (int s = 0; s < m; ++s) {
        direction[static_cast<size_t>(s)] =
            A[static_cast<size_t>(s)] * M - M * A[static_cast<size_t>(s)];
        grad_norm2 += direction[static_cast<size_t>(s)].squaredNorm();
      }
      if (grad_norm2 < 1e-24) break;  // first-order stationary

      // clustered eigenvalues make the first-order formula unreliable
      double min_gap = std::numeric_limits<double>::infinity();
      for (int k = 0; k + 1 < n; ++k)
        min_gap = std::min(min_gap, eig.values(k) - eig.values(k + 1));
      if (n > 1 && min_gap < 1e-9) {
        for (int s = 0; s < m; ++s) {
          CMatrix noise = random_hermitian(n, rng);
          direction[static_cast<size_t>(s)] +=
              Complex(0, 1e-8 * std::sqrt(grad_norm2)) * noise;
        }
      }

      std::vector<detail::AntiHermitianExp> steps;
      steps.reserve(static_cast<size_t>(m));
      for (int s = 0; s < m; ++s) steps.emplace_back(direction[static_cast<size_t>(s)]);

      bool accepted = false;
      for (double eta = cfg.initial_step; eta >= cfg.min_step; eta *= 0.5) {
        std::vector<CMatrix> U_next(static_cast<size_t>(m));
        std::vector<CMatrix> A_next(static_cast<size_t>(m));
        CMatrix B_next = CMatrix::Zero(n, n);
        for (int s = 0; s < m; ++s) {
          U_next[static_cast<size_t>(s)] =
              steps[static_cast<size_t>(s)].at(eta) * U[static_cast<size_t>(s)];
          A_next[static_cast<size_t>(s)] = U_next[static_cast<size_t>(s)] *
                                           diag[static_cast<size_t>(s)].asDiagonal() *
                                           U_next[static_cast<size_t>(s)].adjoint();
          B_next += A_next[static_cast<size_t>(s)];
        }
        double next_residual = penalty(B_next, inst.r);
        if (next_residual <= residual - 1e-4 * eta * grad_norm2) {
          U = std::move(U_next);
          A = std::move(A_next);
          accepted = true;
          break;
        }
      }
      if (!accepted) break;  // line search exhausted

      if ((iter + 1) % 64 == 0) {
        for (int s = 0; s < m; ++s) {
          Eigen::HouseholderQR<CMatrix> qr(U[static_cast<size_t>(s)]);
          U[static_cast<size_t>(s)] = qr.householderQ() * CMatrix::Identity(n, n);
          A[static_cast<size_t>(s)] = assemble(U, s);
        }
      }
    }
  }
  return best;
}

struct ForwardSample {
  SpectrumInstance instance;
  std::vector<CMatrix> matrices;
};

namespace detail {

inline Rational round_to_millionths(double x) {
  return Rational(static_cast<long long>(std::llround(x * 1e6)), 1000000);
}

}  // namespace detail

/// Draws m-1 Gaussian Hermitian matrices and a random PSD matrix B of rank
/// at most r, solves for the last matrix, and returns the instance formed by
/// the spectra rounded to denominator-10^6 rationals. Samples whose smallest
/// inequality slack is below 10*n*m*1e-6 are redrawn so rounding cannot flip
/// the verdict; rows that are tight by construction (the r = 0 trace rows)
/// are instead corrected to hold exactly after rounding.
inline ForwardSample forward_sample(int n, int m, int r, std::mt19937_64& rng) {
  if (n < 1 || m < 1 || r < 0 || r > n)
    throw std::invalid_argument("forward_sample: bad parameters");
  std::normal_distribution<double> gauss(0.0, 1.0);

  if (m == 1) {
    // the instance is the spectrum of B itself; the structural zeros stay exact
    RVector beta = RVector::Zero(n);
    for (int i = 0; i < r; ++i) beta(i) = std::abs(gauss(rng));
    std::sort(beta.data(), beta.data() + r, std::greater<double>());
    CMatrix V = random_unitary(n, rng);
    ForwardSample sample;
    sample.matrices = {V * beta.asDiagonal() * V.adjoint()};
    sample.instance = {n, 1, r, {std::vector<Rational>(static_cast<size_t>(n), Rational(0))}};
    for (int i = 0; i < r; ++i)
      sample.instance.alpha[0][static_cast<size_t>(i)] = detail::round_to_millionths(beta(i));
    return sample;
  }

  if (m == 2 && r == 0) {
    // B = 0 forces A(2) = -A(1); every inequality row is an exact equality,
    // so the second spectrum is derived from the first instead of rounded
    CMatrix A1 = random_hermitian(n, rng);
    RVector values = hermitian_eigen(A1).values;
    ForwardSample sample;
    sample.matrices = {A1, -A1};
    sample.instance.n = n;
    sample.instance.m = 2;
    sample.instance.r = 0;
    sample.instance.alpha.resize(2);
    for (int i = 0; i < n; ++i)
      sample.instance.alpha[0].push_back(detail::round_to_millionths(values(i)));
    for (int i = n - 1; i >= 0; --i)
      sample.instance.alpha[1].push_back(-sample.instance.alpha[0][static_cast<size_t>(i)]);
    return sample;
  }

  const InequalitySystem& system = cached_system(n, m, r);
  const double slack_floor = 10.0 * n * m * 1e-6;

  for (int attempt = 0; attempt < 5000; ++attempt) {
    std::vector<CMatrix> A(static_cast<size_t>(m));
    for (int s = 0; s + 1 < m; ++s) A[static_cast<size_t>(s)] = random_hermitian(n, rng);

    RVector beta = RVector::Zero(n);
    for (int i = 0; i < r; ++i) beta(i) = std::abs(gauss(rng));
    CMatrix V = random_unitary(n, rng);
    CMatrix B = V * beta.asDiagonal() * V.adjoint();

    CMatrix rest = CMatrix::Zero(n, n);
    for (int s = 0; s + 1 < m; ++s) rest += A[static_cast<size_t>(s)];
    A[static_cast<size_t>(m - 1)] = B - rest;

    std::vector<std::vector<double>> spectra(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) {
      RVector values = hermitian_eigen(A[static_cast<size_t>(s)]).values;
      spectra[static_cast<size_t>(s)].assign(values.data(), values.data() + n);
    }

    if (r == 0) {
      // the trace rows get corrected exactly; entries must be separated
      // enough that the correction cannot reorder them
      double min_gap = std::numeric_limits<double>::infinity();
      for (int s = 0; s < m; ++s)
        for (int i = 0; i + 1 < n; ++i)
          min_gap = std::min(min_gap, spectra[static_cast<size_t>(s)][static_cast<size_t>(i)] -
                                          spectra[static_cast<size_t>(s)][static_cast<size_t>(i + 1)]);
      if (n > 1 && min_gap < 1e-3) continue;
    }

    auto double_slack = [&](const HornInequality& ineq) {
      double sum = 0.0;
      for (int s = 1; s <= m; ++s) {
        const auto& subset = ineq.subsets.at(static_cast<size_t>(s - 1));
        for (int e : subset.elements()) {
          int i = (ineq.kind == IneqKind::Major) ? e : n + 1 - e;
          sum += spectra[static_cast<size_t>(s - 1)][static_cast<size_t>(i - 1)];
        }
      }
      return (ineq.kind == IneqKind::Major) ? sum : -sum;
    };

    bool margin_ok = true;
    for (const auto& list : {system.majors, system.rank_bounds}) {
      for (const auto& ineq : list) {
        bool forced_tight = (r == 0 && ineq.t == n);
        double slack = double_slack(ineq);
        if (forced_tight ? std::abs(slack) > 1e-8 : slack < slack_floor) {
          margin_ok = false;
          break;
        }
      }
      if (!margin_ok) break;
    }
    if (!margin_ok) continue;

    ForwardSample sample;
    sample.matrices = std::move(A);
    sample.instance.n = n;
    sample.instance.m = m;
    sample.instance.r = r;
    sample.instance.alpha.resize(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) {
      auto& tuple = sample.instance.alpha[static_cast<size_t>(s)];
      for (int i = 0; i < n; ++i)
        tuple.push_back(detail::round_to_millionths(spectra[static_cast<size_t>(s)][static_cast<size_t>(i)]));
    }
    if (r == 0) {
      Rational deficit = 0;
      for (const auto& tuple : sample.instance.alpha)
        for (const auto& value : tuple) deficit += value;
      sample.instance.alpha[0][0] -= deficit;
    }
    return sample;
  }
  throw std::runtime_error("forward_sample: margin audit kept failing");
}

}  // namespace horn
