#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bases.hpp"
#include "convolution.hpp"
#include "core.hpp"
#include "matrix.hpp"
#include "transform.hpp"

namespace krawtchouk {

struct CheckResult {
    std::string name;
    bool passed = false;
};

namespace detail {

/// One identity check: comparisons share a common magnitude scale so the
/// float backend judges cancellation error relative to the terms involved.
template <field_scalar S>
class IdentityCheck {
public:
    explicit IdentityCheck(double tol) : tol_(tol) {}

    void observe(const S& v) {
        if constexpr (!scalar_traits<S>::exact)
            scale_ = std::max(scale_, std::abs(scalar_traits<S>::to_double(v)));
    }

    void expect_eq(const S& a, const S& b) {
        observe(a);
        observe(b);
        if constexpr (scalar_traits<S>::exact) {
            ok_ = ok_ && (a == b);
        } else {
            pending_.emplace_back(scalar_traits<S>::to_double(a), scalar_traits<S>::to_double(b));
        }
    }

    bool result() {
        if constexpr (!scalar_traits<S>::exact)
            for (auto& [a, b] : pending_)
                ok_ = ok_ && approx_equal(a, b, tol_, scale_);
        return ok_;
    }

private:
    double tol_;
    double scale_ = 1.0;
    bool ok_ = true;
    std::vector<std::pair<double, double>> pending_;
};

template <field_scalar S>
void expect_matrix_eq(IdentityCheck<S>& chk, const Matrix<S>& a, const Matrix<S>& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) chk.expect_eq(a(i, j), b(i, j));
}

template <field_scalar S>
void expect_signal_eq(IdentityCheck<S>& chk, const Signal<S>& a, const Signal<S>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) chk.expect_eq(a[i], b[i]);
}

template <field_scalar S>
S k_or_zero(long n, long j, const Params<S>& params) {
    return (n < 0 || n > params.n()) ? S(0) : eval_k(n, j, params);
}

template <field_scalar S>
Signal<S> random_signal(std::mt19937_64& rng, std::size_t len) {
    Signal<S> f(len);
    if constexpr (scalar_traits<S>::exact) {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 8);
        for (auto& v : f) v = scalar_traits<S>::from_rational(make_rational(num(rng), den(rng)));
    } else {
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (auto& v : f) v = dist(rng);
    }
    return f;
}

template <field_scalar S>
Signal<S> unit_signal(std::size_t len, std::size_t at) {
    Signal<S> e(len, S(0));
    e[at] = S(1);
    return e;
}

}  // namespace detail

/// Options for the identity suite. trials bounds the number of random
/// signals per randomized check; tol applies to the float backend only.
struct VerifyOptions {
    unsigned long seed = 20260809;
    int trials = 10;
    double tol = 1e-9;
};

/// Runs every identity of the calculus that applies to the given parameters
/// and reports one pass/fail entry per identity.
template <field_scalar S>
std::vector<CheckResult> run_identity_checks(const Params<S>& params, VerifyOptions opt = {}) {
    using detail::IdentityCheck;
    std::vector<CheckResult> results;
    std::mt19937_64 rng(opt.seed);
    const long N = params.n();
    const std::size_t dim = params.dim();
    const Params<S> up(N + 1, params.p(), params.lambda());  // for the N -> N+1 recurrences
    const Matrix<S> phi = phi_matrix(params);
    const auto wm = weight_matrices(params);

    auto run = [&](const std::string& name, auto&& body) {
        IdentityCheck<S> chk(opt.tol);
        bool threw = false;
        try {
            body(chk);
        } catch (const std::exception&) {
            threw = true;
        }
        results.push_back({name, !threw && chk.result()});
    };

    run("orthogonality: Phi B Phi^T = Gamma", [&](auto& chk) {
        detail::expect_matrix_eq(chk, phi * wm.B * phi.transpose(), wm.Gamma);
    });

    run("inversion identity: Phi P Phi = lambda^N P'", [&](auto& chk) {
        detail::expect_matrix_eq(chk, phi * wm.P * phi, pow_int(params.lambda(), N) * wm.Pprime);
    });

    run("inverse factorization: Phi (lambda^-N P Phi P'^-1) = I", [&](auto& chk) {
        for (std::size_t r = 0; r < dim; ++r) {
            Signal<S> e = detail::unit_signal<S>(dim, r);
            Signal<S> rt = inverse_transform(forward_transform(e, params), params);
            detail::expect_signal_eq(chk, rt, e);
        }
    });

    run("pascal recurrence 1: k_n(j,N+1) = k_n(j,N) + lambda q k_{n-1}(j,N)", [&](auto& chk) {
        for (long n = 0; n <= N + 1; ++n)
            for (long j = 0; j <= N; ++j)
                chk.expect_eq(eval_k(n, j, up),
                              S(detail::k_or_zero(n, j, params) +
                                S(S(params.lambda() * params.q()) * detail::k_or_zero(n - 1, j, params))));
    });

    run("pascal recurrence 2: k_n(j+1,N+1) = k_n(j,N) - lambda p k_{n-1}(j,N)", [&](auto& chk) {
        for (long n = 0; n <= N + 1; ++n)
            for (long j = 0; j <= N; ++j)
                chk.expect_eq(eval_k(n, j + 1, up),
                              S(detail::k_or_zero(n, j, params) -
                                S(S(params.lambda() * params.p()) * detail::k_or_zero(n - 1, j, params))));
    });

    run("martingale recurrence: k_n(j,N) = p k_n(j,N+1) + q k_n(j+1,N+1)", [&](auto& chk) {
        for (long n = 0; n <= N; ++n)
            for (long j = 0; j <= N; ++j)
                chk.expect_eq(eval_k(n, j, params), S(S(params.p() * eval_k(n, j, up)) +
                                                      S(params.q() * eval_k(n, j + 1, up))));
    });

    run("square identity", [&](auto& chk) {
        for (long n = 0; n <= N; ++n)
            for (long j = 0; j + 1 <= N; ++j) {
                S rhs = S(S(params.lambda() * params.p()) * detail::k_or_zero(n - 1, j, params));
                rhs = S(rhs + S(S(params.lambda() * params.q()) * detail::k_or_zero(n - 1, j + 1, params)));
                rhs = S(rhs + eval_k(n, j + 1, params));
                chk.expect_eq(eval_k(n, j, params), rhs);
            }
    });

    run("three-term recurrence", [&](auto& chk) {
        const S drift = S(params.lambda() * S(params.q() - params.p()));
        for (long m = 0; m <= N; ++m)
            for (long j = 0; j <= N; ++j) {
                S lhs = S(S(params.lambda() * S(S(params.q() * S(N)) - S(j))) * eval_k(m, j, params));
                S rhs = S(S(m + 1) * detail::k_or_zero(m + 1, j, params));
                rhs = S(rhs + S(S(drift * S(m)) * eval_k(m, j, params)));
                rhs = S(rhs + S(S(params.sigma2() * S(N + 1 - m)) * detail::k_or_zero(m - 1, j, params)));
                chk.expect_eq(lhs, rhs);
            }
    });

    run("centered-square identity: (X-mu)^2 = lambda(q-p)(X-mu) + sigma^2", [&](auto& chk) {
        const S drift = S(params.lambda() * S(params.q() - params.p()));
        for (S x : {params.lambda(), S(0)}) {
            S c = S(x - params.mu());
            chk.expect_eq(S(c * c), S(S(drift * c) + params.sigma2()));
        }
    });

    run("generating coefficients match the explicit sum", [&](auto& chk) {
        for (long j = 0; j <= N; ++j) {
            auto col = gen_coeffs(j, params);
            for (long n = 0; n <= N; ++n)
                chk.expect_eq(col[static_cast<std::size_t>(n)], eval_k(n, j, params));
        }
    });

    run("squared norms match the expectation sum", [&](auto& chk) {
        for (long n = 0; n <= N; ++n) {
            S acc(0);
            for (long j = 0; j <= N; ++j) {
                S knj = eval_k(n, j, params);
                acc = S(acc + S(wm.B(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) *
                                S(knj * knj)));
            }
            chk.expect_eq(acc, squared_norm(n, params));
        }
    });

    run("shift kit: (I + lambda q T) U = I - lambda p T and (I-U)(I+lambda q T) = lambda T",
        [&](auto& chk) {
            auto kit = build_shift_kit(params);
            Matrix<S> i_lq = Matrix<S>::identity(dim) + S(params.lambda() * params.q()) * kit.T;
            Matrix<S> i_lp = Matrix<S>::identity(dim) - S(params.lambda() * params.p()) * kit.T;
            detail::expect_matrix_eq(chk, i_lq * kit.U, i_lp);
            detail::expect_matrix_eq(chk, (Matrix<S>::identity(dim) - kit.U) * i_lq,
                                     params.lambda() * kit.T);
            // T is nilpotent of index N+1
            Matrix<S> tp = Matrix<S>::identity(dim);
            for (long e = 0; e <= N; ++e) tp = tp * kit.T;
            detail::expect_matrix_eq(chk, tp, Matrix<S>(dim, dim));
        });

    // Cross-algorithm equalities are exact-backend invariants; the float
    // shift iteration drifts with N and is covered by fixtures instead.
    if constexpr (scalar_traits<S>::exact) {
        run("shift transform equals matrix transform", [&](auto& chk) {
            auto kit = build_shift_kit(params);
            for (int t = 0; t < opt.trials; ++t) {
                auto f = detail::random_signal<S>(rng, dim);
                detail::expect_signal_eq(chk, shift_transform(f, kit), forward_transform(f, params));
            }
            detail::expect_matrix_eq(chk, shift_transform_table(params), phi.transpose());
        });
    }

    run("transform round trip", [&](auto& chk) {
        for (int t = 0; t < opt.trials; ++t) {
            auto f = detail::random_signal<S>(rng, dim);
            detail::expect_signal_eq(chk, inverse_transform(forward_transform(f, params), params), f);
        }
    });

    run("binomial basis image: F_m(n) = C(N-m,n)(lambda q)^n", [&](auto& chk) {
        for (long m = 0; m <= N; ++m) {
            auto img = binomial_image(m, params);  // throws if the closed form fails
            chk.observe(img[0]);
        }
    });

    run("row binomial image: F_i(j) = C(N-j,i)", [&](auto& chk) {
        for (long i = 0; i <= N; ++i) {
            auto img = row_binomial_image(i, params);
            chk.observe(img[0]);
        }
    });

    run("convolution theorem: transform(f*g) = F.G", [&](auto& chk) {
        for (int t = 0; t < opt.trials; ++t) {
            auto f = detail::random_signal<S>(rng, dim);
            auto g = detail::random_signal<S>(rng, dim);
            auto lhs = forward_transform(convolve(f, g, params), params);
            auto F = forward_transform(f, params);
            auto G = forward_transform(g, params);
            for (std::size_t j = 0; j < dim; ++j) chk.expect_eq(lhs[j], S(F[j] * G[j]));
        }
    });

    run("convolution commutativity", [&](auto& chk) {
        for (int t = 0; t < opt.trials; ++t) {
            auto f = detail::random_signal<S>(rng, dim);
            auto g = detail::random_signal<S>(rng, dim);
            detail::expect_signal_eq(chk, convolve(f, g, params), convolve(g, f, params));
        }
    });

    run(scalar_traits<S>::exact ? "convolution route agreement (direct / shift / inversion)"
                                : "convolution route agreement (direct / inversion)",
        [&](auto& chk) {
            for (int t = 0; t < opt.trials; ++t) {
                auto f = detail::random_signal<S>(rng, dim);
                auto g = detail::random_signal<S>(rng, dim);
                auto direct = convolve(f, g, params);
                if (scalar_traits<S>::exact && N <= kKroneckerCap)
                    detail::expect_signal_eq(chk, convolve_via_shift(f, g, params), direct);
                detail::expect_signal_eq(chk, convolve_via_inversion(f, g, params), direct);
            }
        });

    run("linearization reproduces convolve(e_l, e_m)", [&](auto& chk) {
        for (long l = 0; l <= N; ++l)
            for (long m = 0; m <= N; ++m) {
                auto table = linearization_coeffs(l, m, params);
                auto viaconv = convolve(detail::unit_signal<S>(dim, static_cast<std::size_t>(l)),
                                        detail::unit_signal<S>(dim, static_cast<std::size_t>(m)), params);
                detail::expect_signal_eq(chk, table.coeffs, viaconv);
            }
    });

    run("linearization grid identity: k_l k_m = sum_n c_n k_n", [&](auto& chk) {
        for (long l = 0; l <= N; ++l)
            for (long m = l; m <= N; ++m) {
                auto table = linearization_coeffs(l, m, params);
                for (long j = 0; j <= N; ++j) {
                    S lhs = S(eval_k(l, j, params) * eval_k(m, j, params));
                    S rhs(0);
                    for (long n = 0; n <= N; ++n)
                        rhs = S(rhs + S(table.coeffs[static_cast<std::size_t>(n)] * eval_k(n, j, params)));
                    chk.expect_eq(lhs, rhs);
                }
            }
    });

    if (N <= 6) {
        run("bivariate product identity (generating function of all products)", [&](auto& chk) {
            const S drift = S(params.lambda() * S(params.q() - params.p()));
            auto pascal = pascal_triangle<S>(N);
            for (long j = 0; j <= N; ++j) {
                std::map<std::pair<long, long>, S> lhs, rhs;
                for (long l = 0; l <= N; ++l)
                    for (long m = 0; m <= N; ++m)
                        lhs[{l, m}] = S(eval_k(l, j, params) * eval_k(m, j, params));
                for (long n = 0; n <= N; ++n) {
                    S kn = eval_k(n, j, params);
                    for (long d = 0; d <= N - n; ++d) {
                        S cd = S(S(pascal[static_cast<std::size_t>(N - n)][static_cast<std::size_t>(d)] *
                                   pow_int(params.sigma2(), d)) * kn);
                        for (long a = 0; a <= n; ++a)
                            for (long b = 0; a + b <= n; ++b) {
                                const long c = n - a - b;
                                S term = S(S(detail::multinomial(pascal, n, a, b) * pow_int(drift, c)) * cd);
                                auto key = std::make_pair(a + c + d, b + c + d);
                                auto it = rhs.find(key);
                                if (it == rhs.end())
                                    rhs.emplace(key, term);
                                else
                                    it->second = S(it->second + term);
                            }
                    }
                }
                for (const auto& [key, v] : lhs) {
                    auto it = rhs.find(key);
                    chk.expect_eq(v, it == rhs.end() ? S(0) : it->second);
                }
                for (const auto& [key, v] : rhs)
                    if (!lhs.count(key)) chk.expect_eq(v, S(0));
            }
        });
    }

    if (params.symmetric()) {
        run("symmetric involution: Phi^2 = 2^N I", [&](auto& chk) {
            detail::expect_matrix_eq(chk, phi * phi,
                                     pow_int(S(2), N) * Matrix<S>::identity(dim));
        });

        run("symmetric polynomials: K_n(N-2j, N) = n! k_n(j, N)", [&](auto& chk) {
            S fact(1);
            for (long n = 0; n <= N; ++n) {
                if (n > 0) fact = S(fact * S(n));
                for (long j = 0; j <= N; ++j)
                    chk.expect_eq(eval_K_symmetric<S>(n, N - 2 * j, N),
                                  S(fact * eval_k(n, j, params)));
            }
        });

        run("symmetric linearization: closed forms and spectrum identity", [&](auto& chk) {
            for (long l = 0; l <= N; ++l)
                for (long m = 0; m <= N; ++m) {
                    auto table = linearization_coeffs_symmetric<S>(l, m, N);
                    auto general = linearization_coeffs(l, m, params);
                    detail::expect_signal_eq(chk, table.coeffs, general.coeffs);
                    for (long j = 0; j <= N; ++j) {
                        S rhs(0);
                        for (long n = 0; n <= N; ++n)
                            rhs = S(rhs + S(table.coeffs[static_cast<std::size_t>(n)] *
                                            eval_k(n, j, params)));
                        chk.expect_eq(S(eval_k(l, j, params) * eval_k(m, j, params)), rhs);
                    }
                }
        });

        run("symmetric convolution formula equals general", [&](auto& chk) {
            for (int t = 0; t < opt.trials; ++t) {
                auto f = detail::random_signal<S>(rng, dim);
                auto g = detail::random_signal<S>(rng, dim);
                detail::expect_signal_eq(chk, convolve_symmetric(f, g, N), convolve(f, g, params));
            }
        });

        run("antidiagonal factorization: Phi B = B J D and J B J Phi = D B J", [&](auto& chk) {
            auto basis = antidiagonal_factorization<S>(N);  // throws when violated
            detail::expect_matrix_eq(chk, basis.J * basis.J, Matrix<S>::identity(dim));
            Matrix<S> conj = pascal_matrix_inverse<S>(N) * phi * basis.B;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (i + j != dim - 1) chk.expect_eq(conj(i, j), S(0));
        });

        run("support preservation of binomial columns", [&](auto& chk) {
            auto basis = antidiagonal_factorization<S>(N);
            for (long m = 0; m <= N; ++m) {
                Signal<S> col(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    col[j] = basis.B(j, static_cast<std::size_t>(m));
                auto image = dual_transform(col, params);
                for (long n = N - m + 1; n <= N; ++n)
                    chk.expect_eq(image[static_cast<std::size_t>(n)], S(0));
            }
        });
    }

    return results;
}

}  // namespace krawtchouk
