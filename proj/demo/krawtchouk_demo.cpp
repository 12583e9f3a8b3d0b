// Walkthrough of the calculus on a small signal: transform by two
// algorithms, invert exactly, and convolve by three routes.

#include <iostream>

#include <krawtchouk/krawtchouk.hpp>

using namespace krawtchouk;

namespace {

void print(const char* label, const Signal<Rational>& f) {
    std::cout << label << ": ";
    for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? ", " : "") << to_string(f[i]);
    std::cout << "\n";
}

}  // namespace

int main() {
    Params<Rational> params(4, make_rational(1, 4), Rational(2));
    std::cout << "N=" << params.n() << "  p=" << to_string(params.p())
              << "  lambda=" << to_string(params.lambda())
              << "  sigma^2=" << to_string(params.sigma2()) << "\n\n";

    std::cout << "Phi:\n";
    write_matrix(std::cout, phi_matrix(params), Format::csv);

    Signal<Rational> f{Rational(1), make_rational(1, 2), Rational(0), Rational(-2), Rational(3)};
    print("\nf", f);

    auto F = forward_transform(f, params);
    print("F = f^T Phi (matrix route)", F);
    print("F (shift-operator route)  ", shift_transform(f, params));
    print("inverse_transform(F)      ", inverse_transform(F, params));

    Signal<Rational> g{Rational(2), Rational(-1), make_rational(1, 3), Rational(0), Rational(1)};
    print("\ng", g);
    print("f*g (direct triple sum)   ", convolve(f, g, params));
    print("f*g (Kronecker iteration) ", convolve_via_shift(f, g, params));
    print("f*g (transform-multiply)  ", convolve_via_inversion(f, g, params));

    auto FG = forward_transform(convolve(f, g, params), params);
    for (std::size_t j = 0; j < FG.size(); ++j) {
        auto G = forward_transform(g, params);
        if (FG[j] != F[j] * G[j]) {
            std::cout << "convolution theorem violated!\n";
            return 1;
        }
    }
    std::cout << "\ntransform(f*g) = F .* G holds exactly\n";

    Params<Rational> sym(4, make_rational(1, 2), Rational(2));
    auto twice = forward_transform(forward_transform(f, sym), sym);
    std::cout << "symmetric case: Phi^2 f = 2^N f -> "
              << (twice == Signal<Rational>{16 * f[0], 16 * f[1], 16 * f[2], 16 * f[3], 16 * f[4]}
                      ? "ok"
                      : "violated")
              << "\n";
    return 0;
}
