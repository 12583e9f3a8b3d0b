#pragma once

#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace krawtchouk {

/// The Bernoulli model (N, p, lambda) with its derived constants.
///
/// N is the number of Bernoulli steps and the degree bound; the steps take
/// values lambda and 0 with probabilities p and q = 1-p (the standard model
/// of jump size lambda). mu = lambda*p and sigma2 = lambda^2*p*q. Degenerate
/// parameters (p outside (0,1), lambda = 0) are rejected: they make the norm
/// matrix singular and the orthogonality relation collapse.
template <field_scalar S>
class Params {
public:
    Params(long n, S p, S lambda)
        : n_(n),
          p_(std::move(p)),
          lambda_(std::move(lambda)),
          q_(S(S(1) - p_)),
          mu_(S(lambda_ * p_)),
          sigma2_(S(lambda_ * lambda_ * p_ * q_)) {
        if (n_ < 0) throw std::domain_error("Params: N must be nonnegative");
        if (!(S(0) < p_ && p_ < S(1))) throw std::domain_error("Params: p must lie in (0,1)");
        if (lambda_ == S(0)) throw std::domain_error("Params: lambda must be nonzero");
    }

    long n() const { return n_; }
    /// N+1, the dimension of signals and matrices.
    std::size_t dim() const { return static_cast<std::size_t>(n_) + 1; }
    const S& p() const { return p_; }
    const S& q() const { return q_; }
    const S& lambda() const { return lambda_; }
    const S& mu() const { return mu_; }
    const S& sigma2() const { return sigma2_; }

    /// The signs process: p = q = 1/2, lambda = 2.
    bool symmetric() const { return p_ == S(S(1) / S(2)) && lambda_ == S(2); }

private:
    long n_;
    S p_, lambda_, q_, mu_, sigma2_;
};

/// Pascal triangle rows 0..n; row k holds C(k,0..k). Additions only, so the
/// values are exact in the rational backend and never route through
/// floating-point factorials.
template <field_scalar S>
std::vector<std::vector<S>> pascal_triangle(long n) {
    std::vector<std::vector<S>> rows(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        auto& row = rows[static_cast<std::size_t>(k)];
        row.assign(static_cast<std::size_t>(k) + 1, S(1));
        for (long i = 1; i < k; ++i)
            row[static_cast<std::size_t>(i)] =
                S(rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] +
                  rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)]);
    }
    return rows;
}

/// C(n,k), zero outside 0 <= k <= n.
template <field_scalar S>
S binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return S(0);
    auto rows = pascal_triangle<S>(n);
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace detail {

/// Coefficients of (1 + c v)^e as a vector of length e+1.
template <field_scalar S>
std::vector<S> binomial_power(const S& c, long e) {
    auto rows = pascal_triangle<S>(e);
    std::vector<S> out(static_cast<std::size_t>(e) + 1);
    S cp(1);
    for (long k = 0; k <= e; ++k) {
        out[static_cast<std::size_t>(k)] = S(rows[static_cast<std::size_t>(e)][static_cast<std::size_t>(k)] * cp);
        cp = S(cp * c);
    }
    return out;
}

template <field_scalar S>
std::vector<S> poly_mul(const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> out(a.size() + b.size() - 1, S(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == S(0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += S(a[i] * b[j]);
    }
    return out;
}

inline void check_degree(long n, long nmax, const char* what) {
    if (n < 0 || n > nmax) throw std::domain_error(std::string(what) + ": index out of range");
}

}  // namespace detail

/// k_n(j,N) by the explicit sum
///   lambda^n * sum_i C(N-j, n-i) C(j, i) (-1)^i p^i q^(n-i),
/// the coefficient of v^n in (1 + lambda q v)^(N-j) (1 - lambda p v)^j.
template <field_scalar S>
S eval_k(long n, long j, const Params<S>& params) {
    const long N = params.n();
    detail::check_degree(n, N, "eval_k: n");
    detail::check_degree(j, N, "eval_k: j");
    auto rows = pascal_triangle<S>(N);
    const auto& row_nj = rows[static_cast<std::size_t>(N - j)];
    const auto& row_j = rows[static_cast<std::size_t>(j)];
    S acc(0);
    S p_pow(1);  // p^i, advanced with i
    for (long i = 0; i <= n; ++i) {
        if (i > j || n - i > N - j) {
            p_pow = S(p_pow * params.p());
            continue;
        }
        S term = S(row_nj[static_cast<std::size_t>(n - i)] * row_j[static_cast<std::size_t>(i)]);
        term = S(term * p_pow);
        term = S(term * pow_int(params.q(), n - i));
        if (i & 1)
            acc = S(acc - term);
        else
            acc = S(acc + term);
        p_pow = S(p_pow * params.p());
    }
    return S(pow_int(params.lambda(), n) * acc);
}

/// K_n(x,N) for the symmetric case, from the recurrence
///   x K_n = K_{n+1} + n(N+1-n) K_{n-1},  K_0 = 1, K_1 = x.
/// x may be any integer (K_n is a polynomial), but the identities relating
/// K_n to k_n are guaranteed only on the spectrum {-N, -N+2, ..., N}.
template <field_scalar S>
S eval_K_symmetric(long n, long x, long N) {
    detail::check_degree(n, N, "eval_K_symmetric: n");
    S prev(1);
    if (n == 0) return prev;
    S cur(x);
    for (long m = 1; m < n; ++m) {
        S next = S(S(S(x) * cur) - S(S(m * (N + 1 - m)) * prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

/// The full coefficient vector (k_0(j,N), ..., k_N(j,N)): column j of Phi,
/// computed by multiplying the two binomial powers of the generating function.
template <field_scalar S>
Signal<S> gen_coeffs(long j, const Params<S>& params) {
    const long N = params.n();
    detail::check_degree(j, N, "gen_coeffs: j");
    auto a = detail::binomial_power(S(params.lambda() * params.q()), N - j);
    auto b = detail::binomial_power(S(S(0) - S(params.lambda() * params.p())), j);
    auto prod = detail::poly_mul(a, b);
    prod.resize(params.dim(), S(0));
    return prod;
}

/// ||k_n||^2 = C(N,n) (lambda^2 p q)^n.
template <field_scalar S>
S squared_norm(long n, const Params<S>& params) {
    detail::check_degree(n, params.n(), "squared_norm: n");
    return S(binomial<S>(params.n(), n) * pow_int(params.sigma2(), n));
}

/// The four diagonal matrices of the orthogonality and inversion identities.
template <field_scalar S>
struct WeightMatrices {
    Matrix<S> B;       ///< binomial distribution: diag C(N,j) p^(N-j) q^j
    Matrix<S> Gamma;   ///< squared norms: diag C(N,n) (lambda^2 p q)^n
    Matrix<S> P;       ///< diag (lambda p)^(N-j)
    Matrix<S> Pprime;  ///< diag (lambda p)^j
};

template <field_scalar S>
WeightMatrices<S> weight_matrices(const Params<S>& params) {
    const long N = params.n();
    const std::size_t dim = params.dim();
    Signal<S> b(dim), gamma(dim), pl(dim), pr(dim);
    auto rows = pascal_triangle<S>(N);
    const auto& binN = rows[static_cast<std::size_t>(N)];
    const S lp = S(params.lambda() * params.p());
    for (long j = 0; j <= N; ++j) {
        auto js = static_cast<std::size_t>(j);
        b[js] = S(S(binN[js] * pow_int(params.p(), N - j)) * pow_int(params.q(), j));
        gamma[js] = S(binN[js] * pow_int(params.sigma2(), j));
        pl[js] = pow_int(lp, N - j);
        pr[js] = pow_int(lp, j);
    }
    return {diagonal(b), diagonal(gamma), diagonal(pl), diagonal(pr)};
}

}  // namespace krawtchouk
