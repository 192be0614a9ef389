#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "nhr/degeneracy.hpp"
#include "nhr/errors.hpp"
#include "nhr/io.hpp"
#include "nhr/linalg.hpp"
#include "nhr/modal.hpp"
#include "nhr/perturb.hpp"
#include "nhr/response.hpp"

namespace {

constexpr const char* kVersion = "nhr 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitDivergent = 4;

struct MatrixInput {
    std::string bytes;
    nhr::ComplexMatrix matrix;

    MatrixInput() : matrix(1) {}
};

MatrixInput load_matrix(const std::string& path, const std::string& format) {
    MatrixInput in;
    in.bytes = nhr::read_file(path);
    if (format == "json")
        in.matrix = nhr::parse_matrix_json(in.bytes);
    else if (format == "csv-reim")
        in.matrix = nhr::parse_matrix_csv_reim(in.bytes);
    else
        throw nhr::ParseError("unknown input format: " + format);
    if (!in.matrix.all_finite()) throw nhr::ParseError("matrix entries must be finite");
    return in;
}

nhr::Complex parse_complex_flag(const std::string& text) {
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw nhr::ParseError("trailing characters in complex value");
            return nhr::Complex(re, 0.0);
        }
        const std::string re_part = text.substr(0, comma);
        const std::string im_part = text.substr(comma + 1);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) throw nhr::ParseError("trailing characters in complex value");
        const double im = std::stod(im_part, &used);
        if (used != im_part.size()) throw nhr::ParseError("trailing characters in complex value");
        return nhr::Complex(re, im);
    } catch (const std::invalid_argument&) {
        throw nhr::ParseError("cannot parse complex value: " + text);
    } catch (const std::out_of_range&) {
        throw nhr::ParseError("complex value out of range: " + text);
    }
}

double resolve_tolerance(const std::optional<double>& flag, std::size_t n) {
    if (flag) return *flag;
    if (const char* env = std::getenv("NHR_TOL")) {
        try {
            std::size_t used = 0;
            const std::string text(env);
            const double v = std::stod(text, &used);
            if (used != text.size() || !(v > 0.0)) throw nhr::ParseError("NHR_TOL must be a positive number");
            return v;
        } catch (const std::invalid_argument&) {
            throw nhr::ParseError("NHR_TOL must be a positive number");
        } catch (const std::out_of_range&) {
            throw nhr::ParseError("NHR_TOL out of range");
        }
    }
    return nhr::default_tolerance(n);
}

std::vector<nhr::StrengthEntry> strength_table(const nhr::ModalExpansion& exp, std::size_t alpha,
                                               double tol) {
    std::vector<nhr::StrengthEntry> table;
    const std::size_t m_max = std::min(alpha, exp.n - 1);
    for (std::size_t n = 1; n <= alpha; ++n)
        for (std::size_t m = 0; m <= m_max; ++m) {
            nhr::StrengthEntry entry;
            entry.n = n;
            entry.m = m;
            try {
                entry.value = nhr::strength_function(exp, n, m, tol);
            } catch (const nhr::DivergentStrength&) {
                entry.value = std::nullopt;
            }
            table.push_back(entry);
        }
    return table;
}

int cmd_analyze(const std::string& path, const std::string& format, std::optional<double> tol_flag,
                std::optional<std::string> omega_flag) {
    const MatrixInput in = load_matrix(path, format);
    const std::size_t n = in.matrix.dim();
    const double tol = resolve_tolerance(tol_flag, n);

    std::vector<nhr::Complex> targets;
    if (omega_flag) {
        targets.push_back(parse_complex_flag(*omega_flag));
    } else {
        const std::vector<nhr::Complex> roots = nhr::eigenvalues(in.matrix);
        const double radius = 1e-7 * std::max(1.0, nhr::spectral_norm(in.matrix));
        for (const auto& cluster : nhr::cluster_points(roots, radius)) {
            nhr::Complex center(0.0, 0.0);
            for (std::size_t idx : cluster) center += roots[idx];
            center /= static_cast<double>(cluster.size());
            targets.push_back(nhr::refine_eigenvalue(in.matrix, center, cluster.size()));
        }
        std::sort(targets.begin(), targets.end(), [](nhr::Complex a, nhr::Complex b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
    }

    nhr::AnalyzeDocument doc;
    doc.version = kVersion;
    doc.input_digest = nhr::fnv1a_digest(in.bytes);
    doc.tolerance = tol;
    for (nhr::Complex target : targets) {
        nhr::DegeneracyReport report = nhr::classify(in.matrix, target, tol);
        const nhr::ModalExpansion exp = nhr::flv_expand(in.matrix, target);
        doc.strength_tables.push_back(strength_table(exp, report.algebraic, tol));
        doc.reports.push_back(std::move(report));
    }
    std::cout << nhr::format_analyze_document(doc);
    return kExitOk;
}

int cmd_greens(const std::string& path, const std::string& format, double e_min, double e_max,
               int steps, double loss) {
    if (steps < 2) throw nhr::ParseError("--steps must be >= 2");
    if (!(e_max > e_min)) throw nhr::ParseError("--e-max must exceed --e-min");
    if (loss < 0.0) throw nhr::ParseError("--loss must be >= 0");
    const MatrixInput in = load_matrix(path, format);
    std::cout << nhr::format_sweep_csv(nhr::power_sweep(in.matrix, e_min, e_max, steps, loss));
    return kExitOk;
}

int cmd_modes(const std::string& path, const std::string& format, const std::string& omega_flag) {
    const MatrixInput in = load_matrix(path, format);
    const nhr::Complex omega = parse_complex_flag(omega_flag);
    const nhr::ModalExpansion exp = nhr::flv_expand(in.matrix, omega);
    std::cout << nhr::format_modes_document(nhr::modes_document(exp));
    return kExitOk;
}

int cmd_perturb(const std::string& h0_path, const std::string& hp_path, const std::string& format,
                double epsilon, const std::string& omega_flag, std::optional<double> tol_flag) {
    const MatrixInput h0 = load_matrix(h0_path, format);
    const MatrixInput hp = load_matrix(hp_path, format);
    if (hp.matrix.dim() != h0.matrix.dim())
        throw nhr::ParseError("perturbation dimension does not match the Hamiltonian");
    const nhr::Complex omega = parse_complex_flag(omega_flag);
    const double tol = resolve_tolerance(tol_flag, h0.matrix.dim());
    const nhr::DegeneracyReport report = nhr::classify(h0.matrix, omega, tol);
    const nhr::PolygonPrediction prediction =
        nhr::predict_polygons(h0.matrix, hp.matrix, epsilon, report);
    std::cout << nhr::format_perturb_document(prediction);
    return kExitOk;
}

int cmd_strength(const std::string& path, const std::string& format, const std::string& omega_flag,
                 std::size_t n_index, std::size_t m_index, std::optional<double> tol_flag) {
    const MatrixInput in = load_matrix(path, format);
    const nhr::Complex omega = parse_complex_flag(omega_flag);
    const double tol = resolve_tolerance(tol_flag, in.matrix.dim());
    const nhr::ModalExpansion exp = nhr::flv_expand(in.matrix, omega);
    try {
        std::cout << nhr::format_double(nhr::strength_function(exp, n_index, m_index, tol)) << '\n';
    } catch (const nhr::DivergentStrength&) {
        std::cout << "DIVERGENT\n";
        return kExitDivergent;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniform spectral-response analysis of finite non-Hermitian Hamiltonians"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string matrix_path, hprime_path, omega_text, format = "json";
    std::optional<double> tol_flag;
    std::optional<std::string> omega_opt;
    double e_min = 0.0, e_max = 1.0, loss = 0.0, epsilon = 0.0;
    int steps = 0;
    std::size_t n_index = 1, m_index = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Input format: json or csv-reim")
            ->check(CLI::IsMember({"json", "csv-reim"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Classify every eigenvalue (or one given energy)");
    analyze->add_option("matrix", matrix_path, "Hamiltonian file")->required();
    analyze->add_option("--tol", tol_flag, "Vanishing tolerance");
    std::string analyze_omega;
    analyze->add_option("--omega", analyze_omega, "Reference energy re[,im]; omit to scan all roots");
    add_format(analyze);

    CLI::App* greens = app.add_subcommand("greens", "Response-power sweep over a real energy window");
    greens->add_option("matrix", matrix_path)->required();
    greens->add_option("--e-min", e_min, "Window start")->required();
    greens->add_option("--e-max", e_max, "Window end")->required();
    greens->add_option("--steps", steps, "Grid size (>= 2)")->required();
    greens->add_option("--loss", loss, "Target decay rate of the longest-living state")->required();
    add_format(greens);

    CLI::App* modes = app.add_subcommand("modes", "Dump expansion coefficients and modes");
    modes->add_option("matrix", matrix_path)->required();
    modes->add_option("--omega", omega_text, "Reference energy re[,im]")->required();
    add_format(modes);

    CLI::App* perturb = app.add_subcommand("perturb", "Polygon prediction for a perturbed degeneracy");
    perturb->add_option("hamiltonian", matrix_path)->required();
    perturb->add_option("perturbation", hprime_path)->required();
    perturb->add_option("--epsilon", epsilon, "Perturbation strength")->required()->check(CLI::PositiveNumber);
    perturb->add_option("--omega", omega_text, "Degenerate eigenvalue re[,im]")->required();
    perturb->add_option("--tol", tol_flag, "Vanishing tolerance");
    add_format(perturb);

    CLI::App* strength = app.add_subcommand("strength", "One response-strength function |eta^(n,m)|^2");
    strength->add_option("matrix", matrix_path)->required();
    strength->add_option("--omega", omega_text, "Reference energy re[,im]")->required();
    strength->add_option("--n", n_index, "Coefficient index (1..N)")->required();
    strength->add_option("--m", m_index, "Mode index (0..N-1)")->required();
    strength->add_option("--tol", tol_flag, "Vanishing tolerance");
    add_format(strength);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (analyze->parsed()) {
            if (analyze->count("--omega")) omega_opt = analyze_omega;
            return cmd_analyze(matrix_path, format, tol_flag, omega_opt);
        }
        if (greens->parsed()) return cmd_greens(matrix_path, format, e_min, e_max, steps, loss);
        if (modes->parsed()) return cmd_modes(matrix_path, format, omega_text);
        if (perturb->parsed())
            return cmd_perturb(matrix_path, hprime_path, format, epsilon, omega_text, tol_flag);
        if (strength->parsed())
            return cmd_strength(matrix_path, format, omega_text, n_index, m_index, tol_flag);
    } catch (const nhr::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const nhr::NotAnEigenvalue& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const nhr::ZeroElement& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const nhr::DivergentStrength& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDivergent;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
