#include "logminor/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace logminor {

SpdMatrix read_matrix(std::istream& in) {
    std::string first;
    if (!(in >> first)) fail(errc::bad_format, "empty matrix input");

    if (first == "SPECTRUM") {
        std::size_t n = 0;
        if (!(in >> n) || n == 0) fail(errc::bad_format, "SPECTRUM header needs a dimension");
        std::vector<double> eig(n);
        for (std::size_t i = 0; i < n; ++i)
            if (!(in >> eig[i])) fail(errc::bad_format, "truncated spectrum");
        return make_spd_diagonal(eig);
    }

    std::size_t n = 0;
    try {
        n = std::stoul(first);
    } catch (const std::exception&) {
        fail(errc::bad_format, "first token must be the dimension or SPECTRUM");
    }
    if (n == 0) fail(errc::bad_format, "dimension must be positive");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(in >> m(i, j))) fail(errc::bad_format, "truncated matrix");
    return make_spd(m);
}

SpdMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_format, "cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const SpdMatrix& m) {
    const std::size_t n = m.dim();
    out << n << '\n';
    out << std::setprecision(17);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out << m(i, j) << (j + 1 == n ? '\n' : ' ');
    }
}

void write_matrix_file(const std::string& path, const SpdMatrix& m) {
    std::ofstream out(path);
    if (!out) fail(errc::bad_format, "cannot open output file: " + path);
    write_matrix(out, m);
}

}  // namespace logminor
