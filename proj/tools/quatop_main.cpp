// quatop: batch front end for quaternionic operator analysis.
//
// Exit codes: 0 success, 2 usage/parse error, 3 numerical failure,
// 4 verification failure.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "quatop/errors.hpp"
#include "quatop/io.hpp"
#include "quatop/kernels.hpp"
#include "quatop/spectrum.hpp"
#include "quatop/wvnb.hpp"

namespace {

using quatop::io::json;

quatop::UnitImaginary parse_axis(const std::string& spec) {
    double x, y, z;
    char c1, c2;
    std::istringstream is(spec);
    if (!(is >> x >> c1 >> y >> c2 >> z) || c1 != ',' || c2 != ',')
        throw quatop::FormatError("--axis expects three comma-separated floats");
    return quatop::UnitImaginary(x, y, z);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        quatop::io::save_text(out_path, text + "\n");
}

int print_verify(const quatop::VerifyReport& rep) {
    for (const auto& e : rep.entries)
        std::cout << (e.pass ? "[ok]   " : "[FAIL] ") << e.name
                  << (e.detail.empty() ? "" : ": " + e.detail) << "\n";
    return rep.ok ? 0 : 4;
}

int run(int argc, char** argv) {
    CLI::App app{"quaternionic operator analysis: slice spectra and diagonal-plus-compact splits"};
    app.require_subcommand(1);

    std::string in_path, out_path, curve_path, dec_path;
    std::string axis_spec = "1,0,0";
    std::string mode = "op";
    std::string kernels_name;
    double epsilon = 0.0;
    double tol_scale = 1.0;
    std::vector<std::size_t> sizes;

    app.add_option("--kernels", kernels_name, "force kernel variant (scalar|avx2)");

    auto* analyze = app.add_subcommand("analyze", "classification flags and norms");
    analyze->add_option("file", in_path, "QMatrix JSON file")->required();
    analyze->add_option("--out", out_path, "write report here instead of stdout");

    auto* spectrum = app.add_subcommand("spectrum", "spherical spectrum report");
    spectrum->add_option("file", in_path)->required();
    spectrum->add_option("--axis", axis_spec, "slice axis x,y,z (default 1,0,0)");
    spectrum->add_option("--tol-scale", tol_scale, "scales the 1e-8 clustering tolerance");
    spectrum->add_option("--out", out_path);
    std::string plot_path;
    spectrum->add_option("--plot", plot_path, "CSV of (alpha,beta) representatives");

    auto* decompose = app.add_subcommand("decompose", "diagonal + small compact split");
    decompose->add_option("file", in_path)->required();
    decompose->add_option("--epsilon", epsilon, "norm budget for K")->required();
    decompose->add_option("--mode", mode, "op|hs (default op)");
    decompose->add_option("--curve", curve_path, "curve JSON (required for hs mode)");
    decompose->add_option("--axis", axis_spec);
    decompose->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "re-audit a stored decomposition");
    verify_cmd->add_option("file", in_path, "QMatrix JSON file")->required();
    verify_cmd->add_option("decomposition", dec_path, "Decomposition JSON file")->required();

    auto* truncate = app.add_subcommand("truncate", "convergence study over growing sections");
    truncate->add_option("file", in_path, "operator descriptor JSON")->required();
    truncate->add_option("--sizes", sizes, "ascending section sizes")->required()->delimiter(',');
    truncate->add_option("--epsilon", epsilon)->required();
    truncate->add_option("--mode", mode, "op|hs (default op)");
    truncate->add_option("--curve", curve_path);
    truncate->add_option("--axis", axis_spec);
    truncate->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!kernels_name.empty() && !quatop::kernels::set_active(kernels_name))
        throw quatop::FormatError("unknown or unavailable kernel variant: " + kernels_name);
    const quatop::UnitImaginary axis = parse_axis(axis_spec);
    if (mode != "op" && mode != "hs") throw quatop::FormatError("--mode must be op or hs");
    const quatop::DecompositionMode dmode = mode == "op" ? quatop::DecompositionMode::OpNorm
                                                         : quatop::DecompositionMode::Hs;

    if (*analyze) {
        const quatop::QMatrix m = quatop::io::load_qmatrix(in_path);
        const quatop::OperatorClass cls = quatop::classify(m);
        json rep{{"n", m.dim()},
                 {"self_adjoint", cls.self_adjoint},
                 {"anti_self_adjoint", cls.anti_self_adjoint},
                 {"normal", cls.normal},
                 {"unitary", cls.unitary},
                 {"op_norm", quatop::op_norm(m)},
                 {"hs_norm", quatop::hs_norm(m)}};
        emit(rep.dump(2), out_path);
        return 0;
    }

    if (*spectrum) {
        const quatop::QMatrix m = quatop::io::load_qmatrix(in_path);
        const quatop::SpectrumReport rep =
            quatop::spherical_spectrum(m, axis, 1e-8 * tol_scale);
        emit(quatop::io::spectrum_to_json(rep).dump(2), out_path);
        if (!plot_path.empty()) {
            std::ostringstream csv;
            csv.precision(17);
            csv << "alpha,beta,mult\n";
            for (const auto& s : rep.spheres)
                csv << s.alpha << "," << s.beta << "," << s.multiplicity << "\n";
            quatop::io::save_text(plot_path, csv.str());
        }
        return 0;
    }

    if (*decompose) {
        const quatop::QMatrix m = quatop::io::load_qmatrix(in_path);
        std::optional<quatop::Curve> curve;
        if (!curve_path.empty())
            curve = quatop::io::curve_from_json(quatop::io::load_json(curve_path));
        if (dmode == quatop::DecompositionMode::Hs && !curve)
            throw quatop::FormatError("hs mode requires --curve");
        const quatop::Decomposition dec =
            dmode == quatop::DecompositionMode::OpNorm
                ? quatop::decompose_op_norm(m, epsilon, axis)
                : quatop::decompose_hs(m, epsilon, *curve, axis);
        emit(quatop::io::decomposition_to_json(dec).dump(2), out_path);
        return print_verify(quatop::verify(m, dec));
    }

    if (*verify_cmd) {
        const quatop::QMatrix m = quatop::io::load_qmatrix(in_path);
        const quatop::Decomposition dec =
            quatop::io::decomposition_from_json(quatop::io::load_json(dec_path));
        return print_verify(quatop::verify(m, dec));
    }

    if (*truncate) {
        const json desc_json = quatop::io::load_json(in_path);
        const quatop::OpDescriptor desc = quatop::io::descriptor_from_json(desc_json);
        std::optional<quatop::Curve> curve;
        if (!curve_path.empty())
            curve = quatop::io::curve_from_json(quatop::io::load_json(curve_path));
        const quatop::TruncationTable table =
            quatop::truncation_study(desc, sizes, epsilon, dmode, curve, axis);
        const std::string csv = table.to_csv();
        if (out_path.empty())
            std::cout << csv;
        else
            quatop::io::save_text(out_path, csv);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const quatop::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
