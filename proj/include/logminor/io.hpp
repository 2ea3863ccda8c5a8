#ifndef LOGMINOR_IO_HPP
#define LOGMINOR_IO_HPP

#include <iosfwd>
#include <string>

#include "logminor/spd.hpp"

namespace logminor {

// Matrix text format: first line n, then n rows of n whitespace-separated
// reals. A first line of "SPECTRUM" followed by n and n eigenvalues instead
// constructs a diagonal matrix.
SpdMatrix read_matrix(std::istream& in);
SpdMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const SpdMatrix& m);
void write_matrix_file(const std::string& path, const SpdMatrix& m);

}  // namespace logminor

#endif
