#ifndef LOGMINOR_SPD_HPP
#define LOGMINOR_SPD_HPP

#include <cstddef>
#include <vector>

#include "logminor/errors.hpp"

namespace logminor {

/// Dense square matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    std::size_t dim() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<double>& data() const noexcept { return a_; }

    static Matrix identity(std::size_t n);

    double frobenius_norm() const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;

  private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Eigenvalues of an SPD matrix, sorted descending, with derived quantities.
struct Spectrum {
    std::vector<double> eigenvalues;  // descending, all > 0
    double condition_number = 1.0;    // lambda_1 / lambda_n
    double ell = 0.0;                 // min(|log lambda_1|, |log lambda_n|)
};

/// Strictly increasing set of k row/column indices into [0, n).
class IndexSet {
  public:
    IndexSet(std::vector<std::size_t> indices, std::size_t n);

    std::size_t size() const noexcept { return indices_.size(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  private:
    std::vector<std::size_t> indices_;
};

/// Symmetric positive-definite matrix. Immutable after construction; the
/// spectrum is computed during validation and cached.
class SpdMatrix {
  public:
    std::size_t dim() const noexcept { return m_.dim(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const noexcept { return m_; }
    const Spectrum& spectrum() const noexcept { return spectrum_; }
    bool is_diagonal() const noexcept { return is_diagonal_; }

    double condition_number() const noexcept { return spectrum_.condition_number; }
    double ell() const noexcept { return spectrum_.ell; }

    friend SpdMatrix make_spd(const Matrix& entries, bool strict_symmetry, double pd_tolerance);

  private:
    SpdMatrix(Matrix m, Spectrum s, bool diag)
        : m_(std::move(m)), spectrum_(std::move(s)), is_diagonal_(diag) {}

    Matrix m_;
    Spectrum spectrum_;
    bool is_diagonal_ = false;
};

// Symmetrizes the input as (M + M^T)/2 and validates positive definiteness
// against the relative threshold lambda_n > pd_tolerance * lambda_1. With
// strict_symmetry, asymmetry above 1e-10 relative is rejected instead.
SpdMatrix make_spd(const Matrix& entries, bool strict_symmetry = false,
                   double pd_tolerance = 1e-12);

SpdMatrix make_spd_diagonal(const std::vector<double>& diag);

SpdMatrix principal_submatrix(const SpdMatrix& m, const IndexSet& idx);

/// log det via Cholesky: 2 * sum(log diag(L)). Natural log.
double log_det(const SpdMatrix& m);
double log_det_cholesky(const Matrix& symmetric);

// Log-minor for a strictly increasing index list; Cholesky on the extracted
// entries without revalidating the submatrix (PD follows from interlacing).
double logminor_at(const SpdMatrix& m, const std::vector<std::size_t>& indices);

/// All eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, sorted
/// descending. Converges when the off-diagonal Frobenius norm drops below
/// 1e-12 times the matrix Frobenius norm; iteration cap 100 sweeps.
std::vector<double> jacobi_eigenvalues(const Matrix& symmetric);

Spectrum eigenvalues_sym(const Matrix& symmetric);

}  // namespace logminor

#endif
