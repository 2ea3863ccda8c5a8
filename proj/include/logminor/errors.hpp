#ifndef LOGMINOR_ERRORS_HPP
#define LOGMINOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logminor {

enum class errc {
    not_square,
    not_finite,
    not_positive_definite,
    not_symmetric,
    index_out_of_range,
    cholesky_breakdown,
    no_convergence,
    odd_dimension,
    kappa_not_above_one,
    degrees_of_freedom_too_small,
    bad_split,
    k_too_large,
    kappa_hat_too_small,
    negative_r,
    nonpositive_r,
    empty_distribution,
    too_many_subsets,
    bad_arguments,
    not_diagonal,
    ell_zero,
    length_mismatch,
    unattainable_target,
    k_equals_n,
    bad_format,
};

/// All domain errors carry an errc so callers can branch without string matching.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace logminor

#endif
