#include "logminor/spd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace logminor {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t l = 0; l < n_; ++l) {
            const double v = (*this)(i, l);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += v * rhs(l, j);
        }
    }
    return out;
}

IndexSet::IndexSet(std::vector<std::size_t> indices, std::size_t n) : indices_(std::move(indices)) {
    if (indices_.empty()) fail(errc::bad_arguments, "index set must be nonempty");
    for (std::size_t i = 0; i + 1 < indices_.size(); ++i) {
        if (indices_[i] >= indices_[i + 1])
            fail(errc::bad_arguments, "index set must be strictly increasing");
    }
    if (indices_.back() >= n) fail(errc::index_out_of_range, "index exceeds matrix dimension");
}

namespace {

bool all_finite(const Matrix& m) {
    for (double v : m.data())
        if (!std::isfinite(v)) return false;
    return true;
}

bool diagonal_entries_only(const Matrix& m) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (i != j && m(i, j) != 0.0) return false;
    return true;
}

Spectrum spectrum_from_sorted(std::vector<double> eig) {
    Spectrum s;
    s.eigenvalues = std::move(eig);
    const double top = s.eigenvalues.front();
    const double bottom = s.eigenvalues.back();
    if (bottom > 0.0) {
        s.condition_number = top / bottom;
        s.ell = std::min(std::abs(std::log(top)), std::abs(std::log(bottom)));
    } else {
        s.condition_number = std::numeric_limits<double>::infinity();
        s.ell = 0.0;
    }
    return s;
}

}  // namespace

SpdMatrix make_spd(const Matrix& entries, bool strict_symmetry, double pd_tolerance) {
    const std::size_t n = entries.dim();
    if (n == 0) fail(errc::bad_arguments, "empty matrix");
    if (!all_finite(entries)) fail(errc::not_finite, "matrix has non-finite entries");

    if (strict_symmetry) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                worst = std::max(worst, std::abs(entries(i, j) - entries(j, i)));
        if (worst > 1e-10 * std::max(1.0, entries.frobenius_norm()))
            fail(errc::not_symmetric, "matrix is not symmetric");
    }

    Matrix sym(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym(i, j) = 0.5 * (entries(i, j) + entries(j, i));

    Spectrum spec = eigenvalues_sym(sym);
    const double lambda_1 = spec.eigenvalues.front();
    const double lambda_n = spec.eigenvalues.back();
    if (!(lambda_n > pd_tolerance * lambda_1) || lambda_n <= 0.0)
        fail(errc::not_positive_definite, "matrix is not positive definite");

    const bool diag = diagonal_entries_only(sym);
    return SpdMatrix(std::move(sym), std::move(spec), diag);
}

SpdMatrix make_spd_diagonal(const std::vector<double>& diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return make_spd(m);
}

SpdMatrix principal_submatrix(const SpdMatrix& m, const IndexSet& idx) {
    const auto& ix = idx.indices();
    if (ix.back() >= m.dim()) fail(errc::index_out_of_range, "index exceeds matrix dimension");
    Matrix sub(ix.size());
    for (std::size_t i = 0; i < ix.size(); ++i)
        for (std::size_t j = 0; j < ix.size(); ++j) sub(i, j) = m(ix[i], ix[j]);
    // PD is guaranteed by interlacing; revalidation also refreshes the spectrum.
    return make_spd(sub);
}

double log_det_cholesky(const Matrix& symmetric) {
    const std::size_t n = symmetric.dim();
    Matrix chol(n);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double d = symmetric(j, j);
        for (std::size_t l = 0; l < j; ++l) d -= chol(j, l) * chol(j, l);
        if (!(d > 0.0)) fail(errc::cholesky_breakdown, "nonpositive pivot in Cholesky");
        chol(j, j) = std::sqrt(d);
        acc += std::log(chol(j, j));
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = symmetric(i, j);
            for (std::size_t l = 0; l < j; ++l) s -= chol(i, l) * chol(j, l);
            chol(i, j) = s / chol(j, j);
        }
    }
    return 2.0 * acc;
}

double log_det(const SpdMatrix& m) { return log_det_cholesky(m.matrix()); }

double logminor_at(const SpdMatrix& m, const std::vector<std::size_t>& indices) {
    if (indices.empty() || indices.back() >= m.dim())
        fail(errc::index_out_of_range, "index exceeds matrix dimension");
    Matrix sub(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j) sub(i, j) = m(indices[i], indices[j]);
    return log_det_cholesky(sub);
}

std::vector<double> jacobi_eigenvalues(const Matrix& symmetric) {
    const std::size_t n = symmetric.dim();
    Matrix a = symmetric;
    const double fro = a.frobenius_norm();
    const double target = 1e-12 * fro;

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    const int max_sweeps = 100;
    int sweep = 0;
    while (off_norm() > target) {
        if (++sweep > max_sweeps) fail(errc::no_convergence, "Jacobi sweeps exceeded cap");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a(p, i);
                    const double aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

Spectrum eigenvalues_sym(const Matrix& symmetric) {
    return spectrum_from_sorted(jacobi_eigenvalues(symmetric));
}

}  // namespace logminor
