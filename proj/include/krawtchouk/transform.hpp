#pragma once

#include <stdexcept>

#include "core.hpp"
#include "matrix.hpp"

namespace krawtchouk {

/// Phi^(N): entry (i,j) is k_i(j,N). Rows index polynomial degree, columns
/// index the point j; column j is gen_coeffs(j).
template <field_scalar S>
Matrix<S> phi_matrix(const Params<S>& params) {
    const std::size_t dim = params.dim();
    Matrix<S> phi(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        auto col = gen_coeffs(static_cast<long>(j), params);
        for (std::size_t i = 0; i < dim; ++i) phi(i, j) = std::move(col[i]);
    }
    return phi;
}

/// Forward transform F(j) = sum_n f(n) k_n(j,N), the row action f^T Phi.
template <field_scalar S>
Signal<S> forward_transform(const Signal<S>& f, const Params<S>& params) {
    if (f.size() != params.dim())
        throw std::invalid_argument("forward_transform: signal length must be N+1");
    return row_apply(f, phi_matrix(params));
}

/// The shift-operator machinery: T shifts f(n) -> f(n+1) and is nilpotent,
/// T(N) = (I + lambda q T)^N, U = (I + lambda q T)^{-1} (I - lambda p T).
/// Both T(N) and U are upper triangular with unit diagonal.
template <field_scalar S>
struct ShiftKit {
    Matrix<S> T;
    Matrix<S> TN;
    Matrix<S> U;
};

namespace detail {

/// Upper-triangular Toeplitz matrix from its superdiagonal values
/// (coefficients of powers of the shift T).
template <field_scalar S>
Matrix<S> toeplitz_upper(const std::vector<S>& diag, std::size_t dim) {
    Matrix<S> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            std::size_t d = j - i;
            if (d < diag.size()) m(i, j) = diag[d];
        }
    return m;
}

}  // namespace detail

/// T(N) comes from N successive multiplications by (1 + lambda q T) in
/// polynomial form; U from its series expansion
///   U = I - lambda T + lambda^2 q T^2 - lambda^3 q^2 T^3 + ...
/// (coefficient of T^d is -lambda(-lambda q)^(d-1) for d >= 1), never by a
/// general matrix inversion.
template <field_scalar S>
ShiftKit<S> build_shift_kit(const Params<S>& params) {
    const long N = params.n();
    const std::size_t dim = params.dim();
    const S lq = S(params.lambda() * params.q());

    std::vector<S> tn_coeffs{S(1)};
    const std::vector<S> factor{S(1), lq};
    for (long step = 0; step < N; ++step) {
        tn_coeffs = detail::poly_mul(tn_coeffs, factor);
        if (tn_coeffs.size() > dim) tn_coeffs.resize(dim);
    }

    std::vector<S> u_coeffs(dim, S(0));
    u_coeffs[0] = S(1);
    if (dim > 1) {
        S c = S(S(0) - params.lambda());  // coefficient of T^1
        for (std::size_t d = 1; d < dim; ++d) {
            u_coeffs[d] = c;
            c = S(c * S(S(0) - lq));
        }
    }

    Matrix<S> t(dim, dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) t(i, i + 1) = S(1);

    return {std::move(t), detail::toeplitz_upper(tn_coeffs, dim),
            detail::toeplitz_upper(u_coeffs, dim)};
}

/// Transform by the iterative scheme: v_0 = T(N) f, v_j = U v_{j-1}, and
/// F(j) is the top entry of v_j. Only the current vector is kept; see
/// shift_transform_table for the full-matrix view.
template <field_scalar S>
Signal<S> shift_transform(const Signal<S>& f, const ShiftKit<S>& kit) {
    const std::size_t dim = kit.TN.rows();
    if (f.size() != dim) throw std::invalid_argument("shift_transform: signal length must be N+1");
    Signal<S> out(dim);
    Signal<S> v = kit.TN * f;
    out[0] = v[0];
    for (std::size_t j = 1; j < dim; ++j) {
        v = kit.U * v;
        out[j] = v[0];
    }
    return out;
}

template <field_scalar S>
Signal<S> shift_transform(const Signal<S>& f, const Params<S>& params) {
    if (f.size() != params.dim())
        throw std::invalid_argument("shift_transform: signal length must be N+1");
    return shift_transform(f, build_shift_kit(params));
}

/// Debug/verify view of the iteration: row j holds the top row of U^j T(N),
/// which is column j of Phi; the table equals Phi^T.
template <field_scalar S>
Matrix<S> shift_transform_table(const Params<S>& params) {
    auto kit = build_shift_kit(params);
    const std::size_t dim = params.dim();
    Matrix<S> table(dim, dim);
    Matrix<S> m = kit.TN;
    for (std::size_t j = 0; j < dim; ++j) {
        if (j > 0) m = kit.U * m;
        for (std::size_t c = 0; c < dim; ++c) table(j, c) = m(0, c);
    }
    return table;
}

/// Exact inversion through Phi^{-1} = lambda^{-N} P Phi P'^{-1}: one diagonal
/// scaling, one forward transform, one diagonal scaling. In the symmetric
/// case P = P' = I and this reduces to Phi^{-1} = 2^{-N} Phi.
template <field_scalar S>
Signal<S> inverse_transform(const Signal<S>& F, const Params<S>& params) {
    const long N = params.n();
    if (F.size() != params.dim())
        throw std::invalid_argument("inverse_transform: signal length must be N+1");
    const S lp = S(params.lambda() * params.p());
    Signal<S> scaled(F.size());
    for (long j = 0; j <= N; ++j)
        scaled[static_cast<std::size_t>(j)] =
            S(F[static_cast<std::size_t>(j)] * pow_int(lp, N - j));
    Signal<S> h = forward_transform(scaled, params);
    const S lam_inv_n = pow_int(params.lambda(), -N);
    for (long n = 0; n <= N; ++n)
        h[static_cast<std::size_t>(n)] =
            S(S(h[static_cast<std::size_t>(n)] * lam_inv_n) * pow_int(lp, -n));
    return h;
}

}  // namespace krawtchouk
