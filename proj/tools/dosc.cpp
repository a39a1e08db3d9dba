// dosc: verification suites and dataset emitters for the Darboux-transformed
// singular oscillator library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dosc/darboux.hpp"
#include "dosc/geometry.hpp"
#include "dosc/holomorphic.hpp"
#include "dosc/report.hpp"
#include "dosc/transformed.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using dosc::num::cplx;
using dosc::report::format_double;

struct Row {
    std::vector<std::pair<std::string, double>> cells;
};

struct Dataset {
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

std::string dataset_csv(const Dataset& data) {
    std::string out;
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
        out += (c ? "," : "") + data.columns[c];
    }
    out += "\n";
    for (const Row& row : data.rows) {
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            out += (c ? "," : "") + format_double(row.cells[c].second);
        }
        out += "\n";
    }
    return out;
}

std::string dataset_json(const Dataset& data) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Row& row : data.rows) {
        nlohmann::ordered_json obj;
        for (const auto& [key, value] : row.cells) {
            obj[key] = value;
        }
        rows.push_back(obj);
    }
    return rows.dump(2);
}

// Writes to the path, or to standard output when the path is empty.
// Returns false on I/O failure.
bool write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return static_cast<bool>(std::cout);
    }
    std::ofstream file(path);
    if (!file) {
        return false;
    }
    file << payload;
    file.flush();
    return static_cast<bool>(file);
}

bool parse_complex(const std::string& text, cplx* out) {
    double re = 0.0, im = 0.0;
    char tail = '\0';
    const int got = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &tail);
    if (got != 2) {
        return false;
    }
    *out = cplx(re, im);
    return true;
}

struct EmitOptions {
    std::string what;
    double b = 2.0;
    int p = 1;
    int n_max = 4;
    double x_min = 0.1;
    double x_max = 10.0;
    int points = 500;
    std::string z0_text = "0.5,0";
    double t_end = 2.0 * M_PI;
    double dt = 1e-3;
    std::string system_name = "transformed";
};

Dataset emit_dataset(const EmitOptions& opt) {
    const dosc::osc::ModelParams params = dosc::osc::make_params(opt.b, opt.p);
    const dosc::darboux::DarbouxContext ctx = dosc::darboux::make_context(params);
    if (opt.points < 1) {
        throw std::invalid_argument("emit: need at least one point");
    }
    Dataset data;
    auto push = [&data](std::initializer_list<std::pair<std::string, double>> cells) {
        Row row;
        row.cells.assign(cells);
        if (data.columns.empty()) {
            for (const auto& [key, value] : row.cells) {
                data.columns.push_back(key);
            }
        }
        data.rows.push_back(std::move(row));
    };
    // Half-open sampling (x_min, x_max]: endpoints like s = 1 or x = 0 are
    // singular for several of the emitted quantities.
    auto sample = [&opt](int i) {
        return opt.x_min + (opt.x_max - opt.x_min) * (i + 1.0) / opt.points;
    };

    if (opt.what == "potential") {
        for (int i = 0; i < opt.points; ++i) {
            const double x = sample(i);
            push({{"x", x},
                  {"V0", dosc::osc::potential_v0(params, x)},
                  {"Vp", dosc::darboux::V_p(ctx, x)},
                  {"Ap", dosc::darboux::A_p(ctx, x)}});
        }
    } else if (opt.what == "eigen") {
        for (int n = 0; n <= opt.n_max; ++n) {
            const double energy = dosc::osc::energy(params, n);
            for (int i = 0; i < opt.points; ++i) {
                const double x = sample(i);
                push({{"n", static_cast<double>(n)},
                      {"x", x},
                      {"energy", energy},
                      {"psi", dosc::osc::psi(params, n, x)},
                      {"phi", dosc::darboux::phi(ctx, n, x)}});
            }
        }
    } else if (opt.what == "measure") {
        for (int i = 0; i < opt.points; ++i) {
            const double s = sample(i);
            if (!(s > 0.0) || !(s < 1.0)) {
                throw std::invalid_argument(
                    "emit measure: range must lie inside (0, 1)");
            }
            push({{"s", s},
                  {"mu_weight", dosc::osc::measure_mu_weight(params, s)},
                  {"h", dosc::transformed::measure_h(params, s)}});
        }
    } else if (opt.what == "curvature") {
        for (int i = 0; i < opt.points; ++i) {
            const double s = sample(i);
            if (!(s >= 0.0) || !(s < 1.0)) {
                throw std::invalid_argument(
                    "emit curvature: range must lie inside [0, 1)");
            }
            const cplx z(std::sqrt(s), 0.0);
            push({{"s", s},
                  {"K_initial",
                   dosc::geom::curvature(params, dosc::holo::System::initial, z)},
                  {"K_transformed",
                   dosc::geom::curvature(params, dosc::holo::System::transformed, z)}});
        }
    } else if (opt.what == "trajectory") {
        cplx z0;
        if (!parse_complex(opt.z0_text, &z0)) {
            throw std::invalid_argument("emit trajectory: --z0 expects re,im");
        }
        const dosc::holo::System system = (opt.system_name == "initial")
                                              ? dosc::holo::System::initial
                                              : dosc::holo::System::transformed;
        if (opt.system_name != "initial" && opt.system_name != "transformed") {
            throw std::invalid_argument(
                "emit trajectory: --system must be initial or transformed");
        }
        const auto trajectory =
            dosc::geom::hamilton_flow(params, system, z0, opt.t_end, opt.dt);
        for (const auto& point : trajectory) {
            push({{"t", point.time},
                  {"re_z", point.z.real()},
                  {"im_z", point.z.imag()}});
        }
    } else if (opt.what == "kernel") {
        // Kernels sampled along the real diagonal t = z zbar'.
        for (int i = 0; i < opt.points; ++i) {
            const double t = sample(i);
            if (!(std::abs(t) < 1.0)) {
                throw std::invalid_argument(
                    "emit kernel: range must lie inside (-1, 1)");
            }
            const cplx z(t, 0.0);
            push({{"t", t},
                  {"bergman0",
                   dosc::holo::bergman0(params, z, cplx(1.0, 0.0)).real()},
                  {"bergman1",
                   dosc::holo::bergman1(params, z, cplx(1.0, 0.0)).real()}});
        }
    } else {
        throw std::invalid_argument("emit: unknown dataset " + opt.what);
    }
    return data;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Darboux-transformed singular oscillator: identity verification and "
        "dataset emission"};
    app.require_subcommand(1);

    dosc::report::ReportOptions verify_opt;
    std::string verify_format = "text";
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "Run the identity registry");
    verify->add_option("--b", verify_opt.b, "Barrier strength b >= 0");
    verify->add_option("--p", verify_opt.p, "Transformation index p >= 0");
    verify->add_option("--n-max", verify_opt.n_max,
                       "Largest quantum number exercised (<= 60)");
    verify->add_option("--tol-coarse", verify_opt.tol_coarse,
                       "Tolerance for quadrature-level checks");
    verify->add_option("--tol-fine", verify_opt.tol_fine,
                       "Tolerance for inner-product-level checks");
    verify->add_option("--grid-nodes", verify_opt.grid_nodes,
                       "Uniform stencil grid size");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", verify_out, "Output path (default stdout)");

    EmitOptions emit_opt;
    std::string emit_format = "csv";
    std::string emit_out;
    CLI::App* emit = app.add_subcommand("emit", "Emit a dataset");
    emit->add_option("what", emit_opt.what,
                     "potential | eigen | measure | curvature | trajectory | kernel")
        ->required()
        ->check(CLI::IsMember({"potential", "eigen", "measure", "curvature",
                               "trajectory", "kernel"}));
    emit->add_option("--b", emit_opt.b, "Barrier strength b >= 0");
    emit->add_option("--p", emit_opt.p, "Transformation index p >= 0");
    emit->add_option("--n-max", emit_opt.n_max, "Largest level for eigen emission");
    emit->add_option("--x-min", emit_opt.x_min, "Range start (exclusive)");
    emit->add_option("--x-max", emit_opt.x_max, "Range end (inclusive)");
    emit->add_option("--points", emit_opt.points, "Sample count");
    emit->add_option("--z0", emit_opt.z0_text, "Trajectory start, re,im");
    emit->add_option("--t-end", emit_opt.t_end, "Trajectory end time");
    emit->add_option("--dt", emit_opt.dt, "Trajectory time step");
    emit->add_option("--system", emit_opt.system_name,
                     "initial or transformed (trajectory only)")
        ->check(CLI::IsMember({"initial", "transformed"}));
    emit->add_option("--format", emit_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    emit->add_option("--out", emit_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_status = app.exit(e);
        return cli_status == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (verify_opt.n_max < 0 || verify_opt.n_max > 60) {
                std::cerr << "verify: --n-max must lie in [0, 60] (Laguerre "
                             "recurrence ceiling)\n";
                return kExitUsage;
            }
            const dosc::report::VerificationReport report =
                dosc::report::run_verification(verify_opt);
            const std::string payload = (verify_format == "json")
                                            ? dosc::report::to_json(report) + "\n"
                                            : dosc::report::to_text(report);
            if (!write_output(verify_out, payload)) {
                std::cerr << "verify: cannot write " << verify_out << "\n";
                return kExitIo;
            }
            return report.all_pass() ? kExitOk : kExitCheckFailure;
        }
        const Dataset data = emit_dataset(emit_opt);
        const std::string payload =
            (emit_format == "json") ? dataset_json(data) + "\n" : dataset_csv(data);
        if (!write_output(emit_out, payload)) {
            std::cerr << "emit: cannot write " << emit_out << "\n";
            return kExitIo;
        }
        return kExitOk;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
