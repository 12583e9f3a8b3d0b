#pragma once

#include <stdexcept>

#include "core.hpp"
#include "matrix.hpp"
#include "transform.hpp"

namespace krawtchouk {

/// Dual (column-action) transform F = Phi f, i.e. F(n) = sum_j k_n(j) f(j).
/// Kept separate from forward_transform so row and column conventions never
/// mix silently.
template <field_scalar S>
Signal<S> dual_transform(const Signal<S>& f, const Params<S>& params) {
    if (f.size() != params.dim())
        throw std::invalid_argument("dual_transform: signal length must be N+1");
    return phi_matrix(params) * f;
}

/// Image of the weighted binomial basis function f_m(j) = C(m,j) p^(m-j) q^j
/// under the dual transform. The closed form F_m(n) = C(N-m,n) (lambda q)^n
/// is checked against the computed image before returning it.
template <field_scalar S>
Signal<S> binomial_image(long m, const Params<S>& params) {
    const long N = params.n();
    detail::check_degree(m, N, "binomial_image: m");
    auto pascal = pascal_triangle<S>(N);
    Signal<S> fm(params.dim(), S(0));
    for (long j = 0; j <= m; ++j)
        fm[static_cast<std::size_t>(j)] =
            S(S(pascal[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] *
                pow_int(params.p(), m - j)) *
              pow_int(params.q(), j));
    Signal<S> image = dual_transform(fm, params);
    const S lq = S(params.lambda() * params.q());
    Signal<S> closed(params.dim(), S(0));
    for (long n = 0; n <= N - m; ++n)
        closed[static_cast<std::size_t>(n)] =
            S(pascal[static_cast<std::size_t>(N - m)][static_cast<std::size_t>(n)] * pow_int(lq, n));
    if (!signals_close(image, closed))
        throw std::logic_error("binomial_image: closed form violated");
    return image;
}

/// Image of f_i(n) = C(N-n, N-i) p^(i-n) lambda^(-n) under the row transform.
/// The closed form F_i(j) = C(N-j, i) is checked before returning.
template <field_scalar S>
Signal<S> row_binomial_image(long i, const Params<S>& params) {
    const long N = params.n();
    detail::check_degree(i, N, "row_binomial_image: i");
    auto pascal = pascal_triangle<S>(N);
    Signal<S> fi(params.dim(), S(0));
    for (long n = 0; n <= i; ++n)
        fi[static_cast<std::size_t>(n)] =
            S(S(pascal[static_cast<std::size_t>(N - n)][static_cast<std::size_t>(N - i)] *
                pow_int(params.p(), i - n)) *
              pow_int(params.lambda(), -n));
    Signal<S> image = forward_transform(fi, params);
    Signal<S> closed(params.dim(), S(0));
    for (long j = 0; j + i <= N; ++j)
        closed[static_cast<std::size_t>(j)] =
            pascal[static_cast<std::size_t>(N - j)][static_cast<std::size_t>(i)];
    if (!signals_close(image, closed))
        throw std::logic_error("row_binomial_image: closed form violated");
    return image;
}

/// The symmetric-case binomial basis in which Phi is anti-diagonal:
/// Phi B = B J D with B the integer Pascal matrix (entry (j,m) = C(m,j)),
/// J the anti-identity and D = diag(1, 2, ..., 2^N).
template <field_scalar S>
struct BinomialBasis {
    Matrix<S> B;
    Matrix<S> J;
    Matrix<S> D;
};

/// Upper-triangular Pascal matrix, entry (j,m) = C(m,j).
template <field_scalar S>
Matrix<S> pascal_matrix(long N) {
    auto pascal = pascal_triangle<S>(N);
    const auto dim = static_cast<std::size_t>(N) + 1;
    Matrix<S> b(dim, dim);
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t j = 0; j <= m; ++j) b(j, m) = pascal[m][j];
    return b;
}

/// Explicit alternating-sign inverse, entry (j,m) = (-1)^(m+j) C(m,j).
template <field_scalar S>
Matrix<S> pascal_matrix_inverse(long N) {
    auto pascal = pascal_triangle<S>(N);
    const auto dim = static_cast<std::size_t>(N) + 1;
    Matrix<S> b(dim, dim);
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t j = 0; j <= m; ++j)
            b(j, m) = ((m + j) % 2 == 0) ? pascal[m][j] : S(S(0) - pascal[m][j]);
    return b;
}

/// Builds (B, J, D) for the symmetric case and verifies both factorizations
///   Phi B = B J D   and   J B J Phi = D B J
/// exactly before returning.
template <field_scalar S>
BinomialBasis<S> antidiagonal_factorization(long N) {
    if (N < 0) throw std::domain_error("antidiagonal_factorization: N must be nonnegative");
    const auto dim = static_cast<std::size_t>(N) + 1;
    BinomialBasis<S> basis{pascal_matrix<S>(N), Matrix<S>(dim, dim), Matrix<S>(dim, dim)};
    for (std::size_t j = 0; j < dim; ++j) {
        basis.J(j, dim - 1 - j) = S(1);
        basis.D(j, j) = pow_int(S(2), static_cast<long>(j));
    }
    const Params<S> sym(N, S(S(1) / S(2)), S(2));
    const Matrix<S> phi = phi_matrix(sym);
    if (!matrices_close(phi * basis.B, basis.B * (basis.J * basis.D)))
        throw std::logic_error("antidiagonal_factorization: Phi B != B J D");
    const Matrix<S> jbj = basis.J * basis.B * basis.J;
    if (!matrices_close(jbj * phi, basis.D * (basis.B * basis.J)))
        throw std::logic_error("antidiagonal_factorization: J B J Phi != D B J");
    return basis;
}

/// Same factorization reached from explicit parameters; anything other than
/// the symmetric case is unsupported.
template <field_scalar S>
BinomialBasis<S> antidiagonal_factorization(const Params<S>& params) {
    if (!params.symmetric())
        throw std::domain_error(
            "antidiagonal_factorization: only the symmetric case (p=1/2, lambda=2) is supported");
    return antidiagonal_factorization<S>(params.n());
}

}  // namespace krawtchouk
