#include "logminor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "logminor/rng.hpp"

namespace logminor {

namespace {

// Householder QR; returns Q with columns scaled by the sign of diag(R), which
// makes the factorization unique and the distribution Haar when the input is
// i.i.d. Gaussian.
Matrix qr_orthogonal_factor(const Matrix& a) {
    const std::size_t n = a.dim();
    Matrix r = a;
    Matrix q = Matrix::identity(n);

    std::vector<double> v(n);
    for (std::size_t col = 0; col < n; ++col) {
        double norm = 0.0;
        for (std::size_t i = col; i < n; ++i) norm += r(i, col) * r(i, col);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;

        const double alpha = r(col, col) >= 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (std::size_t i = col; i < n; ++i) {
            v[i] = r(i, col) - (i == col ? alpha : 0.0);
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;

        // r <- H r, q <- q H with H = I - 2 v v^T / |v|^2
        for (std::size_t j = col; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = col; i < n; ++i) dot += v[i] * r(i, j);
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = col; i < n; ++i) r(i, j) -= f * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            double dot = 0.0;
            for (std::size_t j = col; j < n; ++j) dot += q(i, j) * v[j];
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t j = col; j < n; ++j) q(i, j) -= f * v[j];
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (r(j, j) < 0.0)
            for (std::size_t i = 0; i < n; ++i) q(i, j) = -q(i, j);
    }
    return q;
}

SpdMatrix conjugate_by_haar(const SpdMatrix& d, const Matrix& q) {
    Matrix b = q.transpose() * d.matrix() * q;
    return make_spd(b);  // symmetrizes away rounding asymmetry
}

std::vector<double> e2_spectrum(std::size_t n, double kappa, std::uint64_t stream_seed) {
    std::vector<double> eig(n);
    eig[0] = kappa;
    eig[n - 1] = 1.0;
    RngStream rng(stream_seed);
    for (std::size_t i = 1; i + 1 < n; ++i) eig[i] = rng.next_uniform(1.0, kappa);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace

SpdMatrix gen_e1(std::size_t n, double kappa) {
    if (n < 2 || n % 2 != 0) fail(errc::odd_dimension, "E1 requires even n >= 2");
    if (kappa < 1.0) fail(errc::kappa_not_above_one, "kappa must be >= 1");
    return gen_two_level_diagonal(n, kappa, n / 2);
}

SpdMatrix gen_e2(std::size_t n, double kappa, std::uint64_t seed) {
    if (n < 2) fail(errc::bad_arguments, "E2 requires n >= 2");
    if (!(kappa > 1.0)) fail(errc::kappa_not_above_one, "E2 requires kappa > 1");
    return make_spd_diagonal(e2_spectrum(n, kappa, derive_stream_seed(seed, "e2.spectrum")));
}

Matrix gen_haar_orthogonal(std::size_t n, std::uint64_t seed) {
    if (n == 0) fail(errc::bad_arguments, "n must be positive");
    RngStream rng = RngStream::derived(seed, "haar.gaussian");
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.next_gaussian();
    return qr_orthogonal_factor(a);
}

SpdMatrix haar_conjugate(const SpdMatrix& m, std::uint64_t seed) {
    return conjugate_by_haar(m, gen_haar_orthogonal(m.dim(), derive_stream_seed(seed, "conj.q")));
}

SpdMatrix gen_e3(std::size_t n, double kappa, std::uint64_t seed) {
    return conjugate_by_haar(gen_e1(n, kappa),
                             gen_haar_orthogonal(n, derive_stream_seed(seed, "e3.q")));
}

SpdMatrix gen_e4(std::size_t n, double kappa, std::uint64_t seed) {
    SpdMatrix d = make_spd_diagonal(e2_spectrum(n, kappa, derive_stream_seed(seed, "e4.spectrum")));
    return conjugate_by_haar(d, gen_haar_orthogonal(n, derive_stream_seed(seed, "e4.q")));
}

SpdMatrix gen_two_level_diagonal(std::size_t n, double kappa, std::size_t ell_split) {
    if (n < 2) fail(errc::bad_arguments, "n must be >= 2");
    if (kappa < 1.0) fail(errc::kappa_not_above_one, "kappa must be >= 1");
    if (ell_split < 1 || ell_split > n - 1) fail(errc::bad_split, "need 1 <= ell_split <= n-1");
    std::vector<double> eig(n, 1.0);
    for (std::size_t i = 0; i < ell_split; ++i) eig[i] = kappa;
    return make_spd_diagonal(eig);
}

SpdMatrix gen_uniform_spectrum(std::size_t n, double kappa, std::uint64_t seed) {
    if (n < 2) fail(errc::bad_arguments, "n must be >= 2");
    if (kappa < 1.0) fail(errc::kappa_not_above_one, "kappa must be >= 1");
    if (kappa == 1.0) return make_spd_diagonal(std::vector<double>(n, 1.0));
    return make_spd_diagonal(e2_spectrum(n, kappa, derive_stream_seed(seed, "uniform.spectrum")));
}

SpdMatrix gen_wishart(std::size_t n, std::size_t n_f, const SpdMatrix& scale, std::uint64_t seed) {
    if (scale.dim() != n) fail(errc::bad_arguments, "scale matrix dimension mismatch");
    if (n_f < n) fail(errc::degrees_of_freedom_too_small, "need n_f >= n for a PD Wishart sample");

    // Cholesky factor of the scale matrix, for sampling x = L z.
    Matrix chol(n);
    {
        const Matrix& v = scale.matrix();
        for (std::size_t j = 0; j < n; ++j) {
            double d = v(j, j);
            for (std::size_t l = 0; l < j; ++l) d -= chol(j, l) * chol(j, l);
            if (!(d > 0.0)) fail(errc::cholesky_breakdown, "scale matrix lost definiteness");
            chol(j, j) = std::sqrt(d);
            for (std::size_t i = j + 1; i < n; ++i) {
                double s = v(i, j);
                for (std::size_t l = 0; l < j; ++l) s -= chol(i, l) * chol(j, l);
                chol(i, j) = s / chol(j, j);
            }
        }
    }

    RngStream rng = RngStream::derived(seed, "wishart.gaussian");
    Matrix sum(n);
    std::vector<double> z(n), x(n);
    for (std::size_t draw = 0; draw < n_f; ++draw) {
        for (std::size_t i = 0; i < n; ++i) z[i] = rng.next_gaussian();
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j <= i; ++j) s += chol(i, j) * z[j];
            x[i] = s;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sum(i, j) += x[i] * x[j];
    }
    const double inv = 1.0 / static_cast<double>(n_f);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = sum(i, j) * inv;
    return make_spd(m);
}

SpdMatrix generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::e1: return gen_e1(spec.n, spec.kappa);
        case GeneratorKind::e2: return gen_e2(spec.n, spec.kappa, spec.seed);
        case GeneratorKind::e3: return gen_e3(spec.n, spec.kappa, spec.seed);
        case GeneratorKind::e4: return gen_e4(spec.n, spec.kappa, spec.seed);
        case GeneratorKind::two_level_diagonal:
            return gen_two_level_diagonal(spec.n, spec.kappa, spec.ell_split);
        case GeneratorKind::uniform_spectrum:
            return gen_uniform_spectrum(spec.n, spec.kappa, spec.seed);
        case GeneratorKind::wishart: {
            const std::size_t n_f = spec.degrees_of_freedom ? spec.degrees_of_freedom : spec.n;
            Matrix id = Matrix::identity(spec.n);
            return gen_wishart(spec.n, n_f, make_spd(id), spec.seed);
        }
    }
    fail(errc::bad_arguments, "unknown generator kind");
}

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "e1") return GeneratorKind::e1;
    if (name == "e2") return GeneratorKind::e2;
    if (name == "e3") return GeneratorKind::e3;
    if (name == "e4") return GeneratorKind::e4;
    if (name == "two-level") return GeneratorKind::two_level_diagonal;
    if (name == "uniform-spectrum") return GeneratorKind::uniform_spectrum;
    if (name == "wishart") return GeneratorKind::wishart;
    fail(errc::bad_arguments, "unknown generator kind: " + name);
}

}  // namespace logminor
