#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "abelian/code.hpp"
#include "abelian/io.hpp"

using namespace abelian;

TEST_CASE("code files round-trip byte for byte") {
    Field f = make_field(2, 1);
    CodePtr c = bch_univariate(f, 55, 7, 13);
    std::ostringstream os;
    write_code(os, *c);
    std::string text = os.str();

    std::istringstream is(text);
    CodePtr back = read_code(is);
    CHECK(back->field().get() == c->field().get());
    CHECK(back->defining_set() == c->defining_set());
    CHECK(back->multiplier() == c->multiplier());

    std::ostringstream os2;
    write_code(os2, *back);
    CHECK(os2.str() == text);
}

TEST_CASE("bivariate codes and non-trivial multipliers survive the trip") {
    Field f = make_field(2, 2);
    OrbitSet d = orbit_closure(
        std::vector<IndexPair>{{0, 0}, {1, 1}, {3, 4}}, 7, 9, 4);
    CodePtr c = code_from_defining_set(f, d, {2, 5});
    std::ostringstream os;
    write_code(os, *c);
    std::istringstream is(os.str());
    CodePtr back = read_code(is);
    CHECK(back->defining_set() == d);
    CHECK(back->multiplier() == std::make_pair(2u, 5u));
}

TEST_CASE("file variants agree with the stream variants") {
    Field f = make_field(2, 1);
    CodePtr c = bch_univariate(f, 7, 3, 1);
    const std::string path = "io_roundtrip_tmp.code";
    write_code_file(path, *c);
    CodePtr back = read_code_file(path);
    CHECK(back->defining_set() == c->defining_set());
    std::ostringstream os;
    write_code(os, *c);
    std::ifstream in(path);
    std::stringstream disk;
    disk << in.rdbuf();
    CHECK(disk.str() == os.str());
    std::remove(path.c_str());
}

TEST_CASE("readers reject malformed and non-canonical input") {
    {
        std::istringstream is("p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\n"
                              "defining_set_reps=[[0,2]]\n");
        // (0,2) is in the orbit of (0,1); reps must be orbit-minimal
        CHECK_THROWS_AS((void)read_code(is), ParseError);
    }
    {
        std::istringstream is("not a code file\n");
        CHECK_THROWS_AS((void)read_code(is), ParseError);
    }
    {
        std::istringstream is("p=2 m=1\nr=[1,7]\n");  // truncated
        CHECK_THROWS_AS((void)read_code(is), ParseError);
    }
    CHECK_THROWS_AS((void)read_code_file("/nonexistent/path.code"), ParseError);
}
