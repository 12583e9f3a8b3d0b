// krawcli: command-line front end for Krawtchouk transforms, convolutions,
// operator matrix dumps, and the identity verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 bad flags or unparseable
// input values, 3 dimension mismatch or size-cap refusal, 4 parameter domain
// violation (p outside (0,1), lambda = 0).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <krawtchouk/krawtchouk.hpp>

namespace {

using namespace krawtchouk;

struct CommonOptions {
    long n = 0;
    std::string p = "1/2";
    std::string lambda = "2";
    std::string backend = "auto";
    std::string format = "csv";
    std::string output = "-";
};

struct MatrixOptions {
    CommonOptions common;
    std::string which = "phi";
};

struct VectorOptions {
    CommonOptions common;
    std::string input = "-";
};

struct ConvolveOptions {
    CommonOptions common;
    std::string f_path;
    std::string g_path;
    std::string route = "direct";
};

struct BasisOptions {
    CommonOptions common;
    std::string kind = "dual";
    long index = 0;
};

struct VerifyOptionsCli {
    CommonOptions common;
    unsigned long seed = 20260809;
    int trials = 10;
    double tol = 1e-9;
};

void add_common(CLI::App* sub, CommonOptions& opt, bool with_format = true) {
    sub->add_option("--N", opt.n, "degree bound N (signals have N+1 entries)")->required();
    sub->add_option("--p", opt.p, "success probability, rational \"a/b\" or decimal (default 1/2)");
    sub->add_option("--lambda", opt.lambda, "jump size, rational or decimal (default 2)");
    sub->add_option("--backend", opt.backend, "exact|float|auto (auto: exact for N<=16)")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    if (with_format)
        sub->add_option("--format", opt.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", opt.output, "output path, \"-\" for stdout");
}

Format parse_format(const std::string& f) { return f == "json" ? Format::json : Format::csv; }

bool use_exact(const CommonOptions& opt) {
    if (opt.backend == "exact") return true;
    if (opt.backend == "float") return false;
    return opt.n <= 16;
}

template <field_scalar S>
Params<S> make_params(const CommonOptions& opt) {
    return Params<S>(opt.n, scalar_from_string<S>(opt.p), scalar_from_string<S>(opt.lambda));
}

class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw CLI::ValidationError("--output", "cannot open " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

template <field_scalar S>
Signal<S> read_vector_file(const std::string& path, Format format) {
    auto parse = [&](std::istream& in) {
        try {
            return read_signal<S>(in, format);
        } catch (const std::exception& e) {
            // unparseable vector content is reported as a usage error
            throw CLI::ValidationError("input", e.what());
        }
    };
    if (path == "-") return parse(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("input", "cannot open " + path);
    return parse(in);
}

template <field_scalar S>
int run_matrix(const MatrixOptions& opt) {
    auto params = make_params<S>(opt.common);
    Matrix<S> m;
    if (opt.which == "phi") {
        m = phi_matrix(params);
    } else if (opt.which == "TN") {
        m = build_shift_kit(params).TN;
    } else if (opt.which == "U") {
        m = build_shift_kit(params).U;
    } else if (opt.which == "JD") {
        auto basis = antidiagonal_factorization(params);
        m = basis.J * basis.D;
    } else {
        auto wm = weight_matrices(params);
        if (opt.which == "B")
            m = wm.B;
        else if (opt.which == "Gamma")
            m = wm.Gamma;
        else if (opt.which == "P")
            m = wm.P;
        else
            m = wm.Pprime;
    }
    OutputStream out(opt.common.output);
    write_matrix(out.get(), m, parse_format(opt.common.format));
    return 0;
}

template <field_scalar S>
int run_vector_command(const VectorOptions& opt, bool inverse) {
    auto params = make_params<S>(opt.common);
    auto format = parse_format(opt.common.format);
    auto f = read_vector_file<S>(opt.input, format);
    if (f.size() != params.dim())
        throw std::invalid_argument("input vector has " + std::to_string(f.size()) +
                                    " entries, expected " + std::to_string(params.dim()));
    auto result = inverse ? inverse_transform(f, params) : forward_transform(f, params);
    OutputStream out(opt.common.output);
    write_signal(out.get(), result, format);
    return 0;
}

template <field_scalar S>
int run_convolve(const ConvolveOptions& opt) {
    auto params = make_params<S>(opt.common);
    auto format = parse_format(opt.common.format);
    auto f = read_vector_file<S>(opt.f_path, format);
    auto g = read_vector_file<S>(opt.g_path, format);
    if (f.size() != params.dim() || g.size() != params.dim())
        throw std::invalid_argument("convolve: both vectors must have N+1 entries");
    Signal<S> result;
    if (opt.route == "shift")
        result = convolve_via_shift(f, g, params);
    else if (opt.route == "inversion")
        result = convolve_via_inversion(f, g, params);
    else
        result = convolve(f, g, params);
    OutputStream out(opt.common.output);
    write_signal(out.get(), result, format);
    return 0;
}

template <field_scalar S>
int run_basis(const BasisOptions& opt) {
    auto params = make_params<S>(opt.common);
    auto image = opt.kind == "row" ? row_binomial_image(opt.index, params)
                                   : binomial_image(opt.index, params);
    OutputStream out(opt.common.output);
    write_signal(out.get(), image, parse_format(opt.common.format));
    return 0;
}

template <field_scalar S>
int run_verify(const VerifyOptionsCli& opt) {
    auto params = make_params<S>(opt.common);
    OutputStream out(opt.common.output);
    auto& os = out.get();
    os << "verify N=" << params.n() << " p=" << scalar_traits<S>::str(params.p())
       << " lambda=" << scalar_traits<S>::str(params.lambda())
       << " backend=" << scalar_traits<S>::name();
    if (!scalar_traits<S>::exact) os << " tol=" << opt.tol;
    os << "\n";
    auto results = run_identity_checks(params, {opt.seed, opt.trials, opt.tol});
    int failures = 0;
    for (const auto& r : results) {
        os << (r.passed ? "PASS  " : "FAIL  ") << r.name << "\n";
        if (!r.passed) ++failures;
    }
    os << (failures == 0 ? "all identities verified" : "verification FAILED") << " (" << failures
       << "/" << results.size() << " failures)\n";
    return failures == 0 ? 0 : 1;
}

template <class Fn>
int dispatch(const CommonOptions& common, Fn&& fn) {
    // Rational literals in --p/--lambda are validated before Params is built
    // so a typo reports as a flag error, not a domain error.
    try {
        rational_from_string(common.p);
        rational_from_string(common.lambda);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return use_exact(common) ? fn.template operator()<Rational>() : fn.template operator()<double>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Krawtchouk operator calculus: transforms, convolutions, matrices, identities"};
    app.require_subcommand(1);

    MatrixOptions matrix_opt;
    auto* matrix_cmd = app.add_subcommand("matrix", "emit a named operator matrix");
    add_common(matrix_cmd, matrix_opt.common);
    matrix_cmd->add_option("--which", matrix_opt.which, "phi|B|Gamma|P|Pprime|TN|U|JD")
        ->check(CLI::IsMember({"phi", "B", "Gamma", "P", "Pprime", "TN", "U", "JD"}));

    VectorOptions transform_opt;
    auto* transform_cmd = app.add_subcommand("transform", "forward transform of one vector");
    add_common(transform_cmd, transform_opt.common);
    transform_cmd->add_option("--input", transform_opt.input, "vector path, \"-\" for stdin");

    VectorOptions inverse_opt;
    auto* inverse_cmd = app.add_subcommand("inverse", "inverse transform of one vector");
    add_common(inverse_cmd, inverse_opt.common);
    inverse_cmd->add_option("--input", inverse_opt.input, "vector path, \"-\" for stdin");

    ConvolveOptions convolve_opt;
    auto* convolve_cmd = app.add_subcommand("convolve", "Krawtchouk convolution of two vectors");
    add_common(convolve_cmd, convolve_opt.common);
    convolve_cmd->add_option("--f", convolve_opt.f_path, "first vector path")->required();
    convolve_cmd->add_option("--g", convolve_opt.g_path, "second vector path")->required();
    convolve_cmd->add_option("--route", convolve_opt.route, "direct|shift|inversion")
        ->check(CLI::IsMember({"direct", "shift", "inversion"}));

    BasisOptions basis_opt;
    auto* basis_cmd = app.add_subcommand("basis", "binomial basis image vectors");
    add_common(basis_cmd, basis_opt.common);
    basis_cmd->add_option("--kind", basis_opt.kind, "dual (F_m) | row (F_i)")
        ->check(CLI::IsMember({"dual", "row"}));
    basis_cmd->add_option("--index", basis_opt.index, "basis index in 0..N")->required();

    VerifyOptionsCli verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite for given parameters");
    add_common(verify_cmd, verify_opt.common, /*with_format=*/false);
    verify_cmd->add_option("--seed", verify_opt.seed, "random seed for the property checks");
    verify_cmd->add_option("--trials", verify_opt.trials, "random signals per property check");
    verify_cmd->add_option("--tol", verify_opt.tol, "relative tolerance (float backend)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*matrix_cmd)
            return dispatch(matrix_opt.common, [&]<field_scalar S>() { return run_matrix<S>(matrix_opt); });
        if (*transform_cmd)
            return dispatch(transform_opt.common,
                            [&]<field_scalar S>() { return run_vector_command<S>(transform_opt, false); });
        if (*inverse_cmd)
            return dispatch(inverse_opt.common,
                            [&]<field_scalar S>() { return run_vector_command<S>(inverse_opt, true); });
        if (*convolve_cmd)
            return dispatch(convolve_opt.common,
                            [&]<field_scalar S>() { return run_convolve<S>(convolve_opt); });
        if (*basis_cmd) {
            if (basis_opt.index < 0 || basis_opt.index > basis_opt.common.n) {
                std::cerr << "error: --index must lie in 0..N\n";
                return 2;
            }
            return dispatch(basis_opt.common, [&]<field_scalar S>() { return run_basis<S>(basis_opt); });
        }
        if (*verify_cmd)
            return dispatch(verify_opt.common, [&]<field_scalar S>() { return run_verify<S>(verify_opt); });
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 4;
    } catch (const std::length_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "dimension/input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
