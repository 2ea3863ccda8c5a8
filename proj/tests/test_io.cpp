#include <doctest.h>

#include <sstream>

#include "logminor/generators.hpp"
#include "logminor/io.hpp"

using namespace logminor;

TEST_CASE("matrix text round trip") {
    SpdMatrix m = gen_e4(6, 5.0, 17);
    std::stringstream buf;
    write_matrix(buf, m);
    SpdMatrix back = read_matrix(buf);
    REQUIRE(back.dim() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(back(i, j) == doctest::Approx(m(i, j)).epsilon(1e-15));
}

TEST_CASE("spectrum format builds a diagonal matrix") {
    std::istringstream in("SPECTRUM\n3\n4.0 2.0 1.0\n");
    SpdMatrix m = read_matrix(in);
    CHECK(m.is_diagonal());
    CHECK(m(0, 0) == 4.0);
    CHECK(m(2, 2) == 1.0);
    CHECK(m.condition_number() == doctest::Approx(4.0));
}

TEST_CASE("malformed input is rejected") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_matrix(empty), error);

    std::istringstream truncated("3\n1 0 0\n0 1 0\n");
    CHECK_THROWS_AS(read_matrix(truncated), error);

    std::istringstream junk("hello\n");
    CHECK_THROWS_AS(read_matrix(junk), error);

    std::istringstream notpd("2\n1 2\n2 1\n");
    CHECK_THROWS_AS(read_matrix(notpd), error);
}
