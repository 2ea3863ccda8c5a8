#ifndef LOGMINOR_GENERATORS_HPP
#define LOGMINOR_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "logminor/spd.hpp"

namespace logminor {

enum class GeneratorKind {
    e1,
    e2,
    e3,
    e4,
    two_level_diagonal,
    uniform_spectrum,
    wishart,
};

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::e1;
    std::size_t n = 2;
    double kappa = 1.0;
    std::size_t ell_split = 1;          // two_level_diagonal only
    std::size_t degrees_of_freedom = 0; // wishart only; 0 means default n
    std::uint64_t seed = 0;
};

/// Diagonal matrix with the first n/2 eigenvalues at kappa and the rest at 1.
/// Maximizes the log-minor variance among diagonal matrices of condition
/// number kappa. n must be even.
SpdMatrix gen_e1(std::size_t n, double kappa);

/// Diagonal matrix with pinned extremes kappa and 1 and n-2 interior
/// eigenvalues drawn uniformly on [1, kappa], sorted descending.
SpdMatrix gen_e2(std::size_t n, double kappa, std::uint64_t seed);

/// Haar-distributed orthogonal matrix: Gaussian fill, QR, columns scaled by
/// the sign of the matching diagonal entry of R.
Matrix gen_haar_orthogonal(std::size_t n, std::uint64_t seed);

/// Q^T M Q for a fresh Haar orthogonal Q, symmetrized.
SpdMatrix haar_conjugate(const SpdMatrix& m, std::uint64_t seed);

/// Haar conjugations Q^T D Q of the E1 / E2 diagonals.
SpdMatrix gen_e3(std::size_t n, double kappa, std::uint64_t seed);
SpdMatrix gen_e4(std::size_t n, double kappa, std::uint64_t seed);

/// Diagonal with ell_split entries at kappa and n - ell_split at 1.
SpdMatrix gen_two_level_diagonal(std::size_t n, double kappa, std::size_t ell_split);

/// Diagonal with spectrum {kappa, 1} plus n-2 uniform draws on [1, kappa],
/// unsorted pinning aside. Used by the conjecture search.
SpdMatrix gen_uniform_spectrum(std::size_t n, double kappa, std::uint64_t seed);

/// Normalized Wishart sample: (1/n_f) sum of x x^T with x ~ N(0, scale).
SpdMatrix gen_wishart(std::size_t n, std::size_t n_f, const SpdMatrix& scale, std::uint64_t seed);

SpdMatrix generate(const GeneratorSpec& spec);

GeneratorKind parse_generator_kind(const std::string& name);

}  // namespace logminor

#endif
