#pragma once

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "matrix.hpp"
#include "transform.hpp"

namespace krawtchouk {

/// Coefficients c_n of the expansion k_l * k_m = sum_n c_n k_n on the grid.
/// c_n vanishes unless |l-m| <= n <= min(l+m, N); in the symmetric case
/// additionally unless l+m-n is even.
template <field_scalar S>
struct LinTable {
    long l = 0;
    long m = 0;
    Signal<S> coeffs;
};

namespace detail {

/// n! / (a! b! (n-a-b)!) read off the Pascal triangle as C(n,a) C(n-a,b).
template <field_scalar S>
S multinomial(const std::vector<std::vector<S>>& pascal, long n, long a, long b) {
    return S(pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] *
             pascal[static_cast<std::size_t>(n - a)][static_cast<std::size_t>(b)]);
}

}  // namespace detail

/// Linearization coefficients of k_l k_m, general case:
///   c_n = sum_delta n!/((n-m+d)!(n-l+d)!(l+m-n-2d)!) C(N-n,d)
///         (lambda(q-p))^(l+m-n-2d) sigma^(2d),
/// with every term containing a negative factorial argument skipped.
template <field_scalar S>
LinTable<S> linearization_coeffs(long l, long m, const Params<S>& params) {
    const long N = params.n();
    detail::check_degree(l, N, "linearization_coeffs: l");
    detail::check_degree(m, N, "linearization_coeffs: m");
    auto pascal = pascal_triangle<S>(N);
    const S drift = S(params.lambda() * S(params.q() - params.p()));
    LinTable<S> table{l, m, Signal<S>(params.dim(), S(0))};
    for (long n = 0; n <= N; ++n) {
        S acc(0);
        for (long d = 0; d <= N - n; ++d) {
            const long a = n - m + d;
            const long b = n - l + d;
            const long c = l + m - n - 2 * d;
            if (a < 0 || b < 0 || c < 0) continue;
            S term = detail::multinomial(pascal, n, a, b);
            term = S(term * pascal[static_cast<std::size_t>(N - n)][static_cast<std::size_t>(d)]);
            term = S(term * pow_int(drift, c));
            term = S(term * pow_int(params.sigma2(), d));
            acc = S(acc + term);
        }
        table.coeffs[static_cast<std::size_t>(n)] = acc;
    }
    return table;
}

/// Triangle function Delta(l,m,n) = ((l+m+n)/2)! / (((-l+m+n)/2)! ((l-m+n)/2)!
/// ((l+m-n)/2)!), zero whenever the perimeter is odd or any factorial
/// argument would be negative. Total by convention so summation code stays
/// uniform.
template <field_scalar S>
S triangle_function(long l, long m, long n) {
    if ((l + m + n) % 2 != 0) return S(0);
    const long s = (l + m + n) / 2;
    const long a = (-l + m + n) / 2;
    const long b = (l - m + n) / 2;
    const long c = (l + m - n) / 2;
    if (s < 0 || a < 0 || b < 0 || c < 0) return S(0);
    auto pascal = pascal_triangle<S>(s);
    return detail::multinomial(pascal, s, a, b);
}

/// Symmetric-case linearization, both closed forms:
///   binomial: C(n, (l-m+n)/2) C(N-n, (l+m-n)/2)
///   triangle: C(N, (l+m+n)/2) Delta(l,m,n) / C(N,n)
/// The two are checked against each other term by term when l+m < N (beyond
/// that they are only guaranteed to agree pointwise on the spectrum). The
/// binomial form is returned; it coincides with the general table at
/// lambda=2, p=1/2.
template <field_scalar S>
LinTable<S> linearization_coeffs_symmetric(long l, long m, long N) {
    detail::check_degree(l, N, "linearization_coeffs_symmetric: l");
    detail::check_degree(m, N, "linearization_coeffs_symmetric: m");
    auto pascal = pascal_triangle<S>(N);
    LinTable<S> table{l, m, Signal<S>(static_cast<std::size_t>(N) + 1, S(0))};
    for (long n = 0; n <= N; ++n) {
        S binom_form(0);
        if ((l + m + n) % 2 == 0) {
            const long a = (l - m + n) / 2;
            const long c = (l + m - n) / 2;
            if (a >= 0 && a <= n && c >= 0 && c <= N - n)
                binom_form = S(pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] *
                               pascal[static_cast<std::size_t>(N - n)][static_cast<std::size_t>(c)]);
        }
        if (l + m < N) {
            const long s = (l + m + n) / 2;
            S tri_form(0);
            if ((l + m + n) % 2 == 0 && s <= N)
                tri_form = S(S(binomial<S>(N, s) * triangle_function<S>(l, m, n)) /
                             pascal[static_cast<std::size_t>(N)][static_cast<std::size_t>(n)]);
            if (!scalar_traits<S>::eq(binom_form, tri_form))
                throw std::logic_error(
                    "linearization_coeffs_symmetric: binomial and triangle forms disagree");
        }
        table.coeffs[static_cast<std::size_t>(n)] = binom_form;
    }
    return table;
}

/// Krawtchouk convolution, the explicit triple sum:
///   (f*g)(n) = sum_{a,b,d} (n choose a,b,n-a-b) (N-n choose d)
///              (lambda(q-p))^(n-a-b) (lambda^2 p q)^d f(n-b+d) g(n-a+d).
/// Index combinations leaving the grid are skipped rather than zero-padded.
template <field_scalar S>
Signal<S> convolve(const Signal<S>& f, const Signal<S>& g, const Params<S>& params) {
    const long N = params.n();
    if (f.size() != params.dim() || g.size() != params.dim())
        throw std::invalid_argument("convolve: signal lengths must be N+1");
    auto pascal = pascal_triangle<S>(N);
    const S drift = S(params.lambda() * S(params.q() - params.p()));
    Signal<S> out(params.dim(), S(0));
    for (long n = 0; n <= N; ++n) {
        S acc(0);
        for (long a = 0; a <= n; ++a) {
            for (long b = 0; b + a <= n; ++b) {
                const long c = n - a - b;
                const S base = S(detail::multinomial(pascal, n, a, b) * pow_int(drift, c));
                for (long d = 0; d <= N - n; ++d) {
                    const long fi = n - b + d;
                    const long gi = n - a + d;
                    if (fi < 0 || fi > N || gi < 0 || gi > N) continue;
                    S term = S(base * pascal[static_cast<std::size_t>(N - n)][static_cast<std::size_t>(d)]);
                    term = S(term * pow_int(params.sigma2(), d));
                    term = S(term * S(f[static_cast<std::size_t>(fi)] * g[static_cast<std::size_t>(gi)]));
                    acc = S(acc + term);
                }
            }
        }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

/// Symmetric-case convolution
///   (f*g)(n) = sum_{a,b} (n choose a)(N-n choose b) f(a+b) g(n-a+b);
/// equal to convolve at lambda=2, p=1/2.
template <field_scalar S>
Signal<S> convolve_symmetric(const Signal<S>& f, const Signal<S>& g, long N) {
    const auto dim = static_cast<std::size_t>(N) + 1;
    if (f.size() != dim || g.size() != dim)
        throw std::invalid_argument("convolve_symmetric: signal lengths must be N+1");
    auto pascal = pascal_triangle<S>(N);
    Signal<S> out(dim, S(0));
    for (long n = 0; n <= N; ++n) {
        S acc(0);
        for (long a = 0; a <= n; ++a)
            for (long b = 0; b <= N - n; ++b) {
                const long fi = a + b;
                const long gi = n - a + b;
                if (fi < 0 || fi > N || gi < 0 || gi > N) continue;
                S term = S(pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] *
                           pascal[static_cast<std::size_t>(N - n)][static_cast<std::size_t>(b)]);
                term = S(term * S(f[static_cast<std::size_t>(fi)] * g[static_cast<std::size_t>(gi)]));
                acc = S(acc + term);
            }
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

/// The Kronecker shift operators driving the convolution iteration:
///   T(N) = (1 + sigma^2 T_n T_m)^N,
///   U    = (1 + sigma^2 T_n T_m)^{-1} (T_n + T_m + lambda(q-p) T_n T_m),
/// with T_n = T (x) I and T_m = I (x) T, both of dimension (N+1)^2.
template <field_scalar S>
struct ConvolutionKit {
    Matrix<S> TN;
    Matrix<S> U;
};

/// Default refusal threshold for the (N+1)^2-sized Kronecker materialization.
inline constexpr long kKroneckerCap = 64;

namespace detail {

/// sum of coeff * T_n^a T_m^b terms as an (N+1)^2-dimensional matrix;
/// T_n^a T_m^b maps index (i,k) to (i+a, k+b).
template <field_scalar S>
Matrix<S> assemble_kronecker(long N, const std::vector<std::tuple<long, long, S>>& terms) {
    const long dim = N + 1;
    const auto big = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
    Matrix<S> out(big, big);
    for (const auto& [a, b, coeff] : terms) {
        for (long i = 0; i + a < dim; ++i)
            for (long k = 0; k + b < dim; ++k) {
                const auto row = static_cast<std::size_t>(i * dim + k);
                const auto col = static_cast<std::size_t>((i + a) * dim + (k + b));
                out(row, col) = S(out(row, col) + coeff);
            }
    }
    return out;
}

}  // namespace detail

template <field_scalar S>
ConvolutionKit<S> build_convolution_kit(const Params<S>& params, long max_n = kKroneckerCap) {
    const long N = params.n();
    if (N > max_n)
        throw std::length_error("build_convolution_kit: N exceeds the Kronecker size cap");
    auto pascal = pascal_triangle<S>(N);
    const S drift = S(params.lambda() * S(params.q() - params.p()));

    // (1 + sigma^2 T_n T_m)^N expands along the diagonal powers T_n^d T_m^d.
    std::vector<std::tuple<long, long, S>> tn_terms;
    for (long d = 0; d <= N; ++d)
        tn_terms.emplace_back(d, d,
                              S(pascal[static_cast<std::size_t>(N)][static_cast<std::size_t>(d)] *
                                pow_int(params.sigma2(), d)));

    // Geometric series for the nilpotent inverse, multiplied through:
    // U = sum_d (-sigma^2)^d (T_n^{d+1} T_m^d + T_n^d T_m^{d+1}
    //                         + lambda(q-p) T_n^{d+1} T_m^{d+1}).
    std::vector<std::tuple<long, long, S>> u_terms;
    S sign_pow(1);
    for (long d = 0; d <= N; ++d) {
        u_terms.emplace_back(d + 1, d, sign_pow);
        u_terms.emplace_back(d, d + 1, sign_pow);
        u_terms.emplace_back(d + 1, d + 1, S(sign_pow * drift));
        sign_pow = S(sign_pow * S(S(0) - params.sigma2()));
    }

    return {detail::assemble_kronecker(N, tn_terms), detail::assemble_kronecker(N, u_terms)};
}

/// Convolution by the Kronecker iteration: w_0 = T(N)(f (x) g), w_n = U w_{n-1},
/// and (f*g)(n) is the top entry of w_n. Refused above max_n since the
/// operators have (N+1)^2 rows.
template <field_scalar S>
Signal<S> convolve_via_shift(const Signal<S>& f, const Signal<S>& g, const Params<S>& params,
                             long max_n = kKroneckerCap) {
    const std::size_t dim = params.dim();
    if (f.size() != dim || g.size() != dim)
        throw std::invalid_argument("convolve_via_shift: signal lengths must be N+1");
    auto kit = build_convolution_kit(params, max_n);
    Signal<S> fg(dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) fg[a * dim + b] = S(f[a] * g[b]);
    Signal<S> w = kit.TN * fg;
    Signal<S> out(dim);
    out[0] = w[0];
    for (std::size_t n = 1; n < dim; ++n) {
        w = kit.U * w;
        out[n] = w[0];
    }
    return out;
}

/// The stacked top rows of U^n T(N), n = 0..N: the (N+1) x (N+1)^2 matrix
/// that sends f (x) g to f*g.
template <field_scalar S>
Matrix<S> convolution_top_rows(const Params<S>& params, long max_n = kKroneckerCap) {
    auto kit = build_convolution_kit(params, max_n);
    const std::size_t dim = params.dim();
    const std::size_t big = dim * dim;
    Matrix<S> out(dim, big);
    Matrix<S> m = kit.TN;
    for (std::size_t n = 0; n < dim; ++n) {
        if (n > 0) m = kit.U * m;
        for (std::size_t c = 0; c < big; ++c) out(n, c) = m(0, c);
    }
    return out;
}

/// Third route: transform both signals, multiply pointwise, invert.
template <field_scalar S>
Signal<S> convolve_via_inversion(const Signal<S>& f, const Signal<S>& g, const Params<S>& params) {
    if (f.size() != params.dim() || g.size() != params.dim())
        throw std::invalid_argument("convolve_via_inversion: signal lengths must be N+1");
    Signal<S> F = forward_transform(f, params);
    Signal<S> G = forward_transform(g, params);
    for (std::size_t j = 0; j < F.size(); ++j) F[j] = S(F[j] * G[j]);
    return inverse_transform(F, params);
}

}  // namespace krawtchouk
