#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <krawtchouk/io.hpp>
#include <krawtchouk/verify.hpp>

#include "oracles.hpp"

using namespace krawtchouk;
using oracles::rat;

TEST_CASE("rational literal parsing") {
    CHECK(rational_from_string("27/16") == make_rational(27, 16));
    CHECK(rational_from_string("-3/4") == make_rational(-3, 4));
    CHECK(rational_from_string("6/8") == make_rational(3, 4));  // canonicalized
    CHECK(rational_from_string("42") == 42);
    CHECK(rational_from_string("-7") == -7);
    CHECK(rational_from_string("0.25") == make_rational(1, 4));
    CHECK(rational_from_string("2.5") == make_rational(5, 2));
    CHECK(rational_from_string("-0.125") == make_rational(-1, 8));
    CHECK(rational_from_string("1e-3") == make_rational(1, 1000));
    CHECK(rational_from_string("2.5e2") == 250);
    CHECK(rational_from_string(".5") == make_rational(1, 2));

    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("2e"), std::invalid_argument);
}

TEST_CASE("scalar formatting") {
    CHECK(to_string(make_rational(27, 16)) == "27/16");
    CHECK(to_string(make_rational(-5, 1)) == "-5");
    CHECK(to_string(0.5) == "0.5");
    CHECK(to_string(1.0) == "1");
}

TEST_CASE("signal round trips through both formats") {
    auto f = oracles::signal_fixture({"1", "-3/4", "27/16", "0", "5"});
    for (Format fmt : {Format::csv, Format::json}) {
        std::stringstream buf;
        write_signal(buf, f, fmt);
        auto back = read_signal<Rational>(buf, fmt);
        REQUIRE(back == f);
    }
    Signal<double> g{0.5, -1.25, 3.0, 0.0};
    for (Format fmt : {Format::csv, Format::json}) {
        std::stringstream buf;
        write_signal(buf, g, fmt);
        auto back = read_signal<double>(buf, fmt);
        REQUIRE(back == g);
    }
}

TEST_CASE("csv reader tolerates blank lines and padding") {
    std::stringstream in("1\n\n  -3/4  \n\n2\n");
    auto f = read_signal<Rational>(in, Format::csv);
    REQUIRE(f == oracles::signal_fixture({"1", "-3/4", "2"}));
}

TEST_CASE("json reader accepts numbers and strings") {
    std::stringstream in(R"(["1/2", 3, -4.5])");
    auto f = read_signal<Rational>(in, Format::json);
    REQUIRE(f == oracles::signal_fixture({"1/2", "3", "-9/2"}));

    std::stringstream bad(R"({"not": "an array"})");
    CHECK_THROWS_AS(read_signal<Rational>(bad, Format::json), std::invalid_argument);
}

TEST_CASE("matrix output formats") {
    Matrix<Rational> m(2, 3);
    m(0, 0) = rat("1");
    m(0, 1) = rat("1/2");
    m(0, 2) = rat("-3");
    m(1, 2) = rat("27/16");
    std::stringstream csv;
    write_matrix(csv, m, Format::csv);
    CHECK(csv.str() == "1,1/2,-3\n0,0,27/16\n");
    std::stringstream js;
    write_matrix(js, m, Format::json);
    CHECK(js.str() == R"([["1","1/2","-3"],["0","0","27/16"]])"
                      "\n");
}

TEST_CASE("exact output is byte-stable across runs") {
    Params<Rational> p(4, rat("1/4"), rat("2"));
    auto phi = phi_matrix(p);
    std::stringstream a, b;
    write_matrix(a, phi, Format::csv);
    write_matrix(b, phi_matrix(p), Format::csv);
    REQUIRE(a.str() == b.str());
    REQUIRE(a.str().find("81/16") != std::string::npos);
}

TEST_CASE("identity suite passes for representative parameters") {
    SECTION("symmetric N=4 reports success on every identity") {
        Params<Rational> sym(4, rat("1/2"), rat("2"));
        for (const auto& r : run_identity_checks(sym, {})) {
            INFO(r.name);
            CHECK(r.passed);
        }
    }
    SECTION("general exact parameters") {
        Params<Rational> p(5, rat("1/3"), rat("3"));
        for (const auto& r : run_identity_checks(p, {})) {
            INFO(r.name);
            CHECK(r.passed);
        }
    }
    SECTION("float backend at moderate N") {
        Params<double> p(12, 0.25, 2.0);
        for (const auto& r : run_identity_checks(p, {})) {
            INFO(r.name);
            CHECK(r.passed);
        }
    }
}
