#include <catch2/catch_amalgamated.hpp>

#include <krawtchouk/bases.hpp>

#include "oracles.hpp"

using namespace krawtchouk;
using oracles::rat;

TEST_CASE("dual transform is the column action") {
    Params<Rational> p(5, rat("1/4"), rat("3"));
    auto phi = phi_matrix(p);
    SECTION("unit vectors pick out columns of Phi") {
        for (std::size_t j = 0; j < 6; ++j) {
            auto F = dual_transform(oracles::unit(6, j), p);
            for (std::size_t n = 0; n < 6; ++n) REQUIRE(F[n] == phi(n, j));
        }
    }
    SECTION("dual transform = row transform against Phi^T") {
        std::mt19937_64 rng(17);
        auto f = oracles::random_rational_signal(rng, 6);
        REQUIRE(dual_transform(f, p) == row_apply(f, phi.transpose()));
    }
    SECTION("length mismatch is rejected") {
        CHECK_THROWS_AS(dual_transform(Signal<Rational>(5), p), std::invalid_argument);
    }
}

TEST_CASE("binomial image of the weighted basis") {
    SECTION("m=N collapses to e_0") {
        Params<Rational> p(6, rat("1/3"), rat("2"));
        REQUIRE(binomial_image(6, p) == oracles::unit(7, 0));
    }
    SECTION("m=0 is column 0 of Phi") {
        Params<Rational> p(5, rat("1/4"), rat("2"));
        REQUIRE(binomial_image(0, p) == gen_coeffs(0, p));
    }
    SECTION("closed form holds for general parameters") {
        auto check = [](const Params<Rational>& params) {
            for (long m = 0; m <= params.n(); ++m) {
                auto image = binomial_image(m, params);
                for (long n = 0; n <= params.n(); ++n) {
                    Rational expect = n <= params.n() - m
                                          ? binomial<Rational>(params.n() - m, n) *
                                                pow_int(Rational(params.lambda() * params.q()), n)
                                          : Rational(0);
                    REQUIRE(image[static_cast<std::size_t>(n)] == expect);
                }
            }
        };
        for (const auto& params : oracles::parameter_grid(9, 7)) check(params);
        check(Params<Rational>(16, rat("1/3"), rat("3")));
    }
    SECTION("symmetric N=4 display: Pascal columns map to scaled partners") {
        // Phi B = [[1,2,4,8,16],[4,6,8,8,0],[6,6,4,0,0],[4,2,0,0,0],[1,0,0,0,0]];
        // the dual image of the weighted f_m is that column divided by 2^m.
        Params<Rational> sym(4, rat("1/2"), rat("2"));
        auto product = oracles::matrix_fixture({{"1", "2", "4", "8", "16"},
                                                {"4", "6", "8", "8", "0"},
                                                {"6", "6", "4", "0", "0"},
                                                {"4", "2", "0", "0", "0"},
                                                {"1", "0", "0", "0", "0"}});
        REQUIRE(phi_matrix(sym) * pascal_matrix<Rational>(4) == product);
        for (long m = 0; m <= 4; ++m) {
            auto image = binomial_image(m, sym);
            for (std::size_t n = 0; n < 5; ++n)
                REQUIRE(image[n] * pow_int(Rational(2), m) ==
                        product(n, static_cast<std::size_t>(m)));
        }
    }
    SECTION("index range enforced") {
        Params<Rational> p(3, rat("1/2"), rat("2"));
        CHECK_THROWS_AS(binomial_image(4, p), std::domain_error);
    }
}

TEST_CASE("row binomial image") {
    Params<Rational> p(6, rat("1/4"), rat("2"));
    SECTION("i=0 maps to the all-ones vector") {
        auto image = row_binomial_image(0, p);
        for (const auto& v : image) REQUIRE(v == 1);
    }
    SECTION("i=N maps to the delta at j=0") {
        auto image = row_binomial_image(6, p);
        REQUIRE(image == oracles::unit(7, 0));
    }
    SECTION("closed form C(N-j, i) for general p") {
        auto check = [](const Params<Rational>& params) {
            for (long i = 0; i <= params.n(); ++i) {
                auto image = row_binomial_image(i, params);
                for (long j = 0; j <= params.n(); ++j)
                    REQUIRE(image[static_cast<std::size_t>(j)] ==
                            binomial<Rational>(params.n() - j, i));
            }
        };
        for (const auto& params : oracles::parameter_grid(8, 6)) check(params);
        check(Params<Rational>(16, rat("2/3"), rat("2")));
    }
}

TEST_CASE("pascal matrix and its alternating inverse") {
    for (long n : {0L, 3L, 7L, 12L}) {
        auto b = pascal_matrix<Rational>(n);
        auto binv = pascal_matrix_inverse<Rational>(n);
        auto dim = static_cast<std::size_t>(n) + 1;
        REQUIRE(b * binv == Matrix<Rational>::identity(dim));
        REQUIRE(binv * b == Matrix<Rational>::identity(dim));
    }
}

TEST_CASE("antidiagonal factorization Phi B = B J D") {
    SECTION("N=4 displayed matrices") {
        auto basis = antidiagonal_factorization<Rational>(4);
        REQUIRE(basis.B == oracles::matrix_fixture({{"1", "1", "1", "1", "1"},
                                                    {"0", "1", "2", "3", "4"},
                                                    {"0", "0", "1", "3", "6"},
                                                    {"0", "0", "0", "1", "4"},
                                                    {"0", "0", "0", "0", "1"}}));
        REQUIRE(basis.J * basis.D == oracles::matrix_fixture({{"0", "0", "0", "0", "16"},
                                                              {"0", "0", "0", "8", "0"},
                                                              {"0", "0", "4", "0", "0"},
                                                              {"0", "2", "0", "0", "0"},
                                                              {"1", "0", "0", "0", "0"}}));
        Params<Rational> sym(4, rat("1/2"), rat("2"));
        auto jbj = basis.J * basis.B * basis.J;
        REQUIRE(jbj * phi_matrix(sym) ==
                oracles::matrix_fixture({{"1", "1", "1", "1", "1"},
                                         {"8", "6", "4", "2", "0"},
                                         {"24", "12", "4", "0", "0"},
                                         {"32", "8", "0", "0", "0"},
                                         {"16", "0", "0", "0", "0"}}));
    }
    SECTION("N=0 degenerates to 1x1 matrices") {
        auto basis = antidiagonal_factorization<Rational>(0);
        REQUIRE(basis.B == oracles::matrix_fixture({{"1"}}));
        REQUIRE(basis.J == oracles::matrix_fixture({{"1"}}));
        REQUIRE(basis.D == oracles::matrix_fixture({{"1"}}));
    }
    SECTION("non-symmetric parameters are unsupported") {
        CHECK_THROWS_AS(antidiagonal_factorization(Params<Rational>(4, rat("1/4"), rat("2"))),
                        std::domain_error);
        CHECK_THROWS_AS(antidiagonal_factorization(Params<Rational>(4, rat("1/2"), rat("1"))),
                        std::domain_error);
        CHECK_NOTHROW(antidiagonal_factorization(Params<Rational>(4, rat("1/2"), rat("2"))));
    }
    SECTION("B^-1 Phi B is anti-diagonal") {
        for (long n = 0; n <= 16; ++n) {
            Params<Rational> sym(n, rat("1/2"), rat("2"));
            auto basis = antidiagonal_factorization<Rational>(n);
            auto conj = pascal_matrix_inverse<Rational>(n) * phi_matrix(sym) * basis.B;
            for (std::size_t i = 0; i < sym.dim(); ++i)
                for (std::size_t j = 0; j < sym.dim(); ++j) {
                    if (i + j == sym.dim() - 1)
                        REQUIRE(conj(i, j) == pow_int(Rational(2), static_cast<long>(j)));
                    else
                        REQUIRE(conj(i, j) == 0);
                }
        }
    }
    SECTION("support preservation: columns on {0..m} map into {0..N-m}") {
        const long N = 8;
        Params<Rational> sym(N, rat("1/2"), rat("2"));
        auto basis = antidiagonal_factorization<Rational>(N);
        for (long m = 0; m <= N; ++m) {
            Signal<Rational> col(sym.dim());
            for (std::size_t j = 0; j < sym.dim(); ++j)
                col[j] = basis.B(j, static_cast<std::size_t>(m));
            auto image = dual_transform(col, sym);
            for (long n = 0; n <= N; ++n) {
                if (n > N - m) REQUIRE(image[static_cast<std::size_t>(n)] == 0);
            }
            // the image is the partner column scaled by 2^m
            for (std::size_t n = 0; n < sym.dim(); ++n)
                REQUIRE(image[n] == pow_int(Rational(2), m) *
                                        basis.B(n, static_cast<std::size_t>(N - m)));
        }
    }
}
