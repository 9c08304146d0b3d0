// connlab command line: construct complexes, dump operator matrices and
// spectra, verify the exact identities, hunt for conjecture counterexamples,
// and run the dynamics/wave computations.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "connlab/dynamics.hpp"
#include "connlab/exact.hpp"
#include "connlab/harness.hpp"
#include "connlab/io.hpp"
#include "connlab/operators.hpp"
#include "connlab/spectra.hpp"
#include "connlab/waves.hpp"

using namespace connlab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitCandidate = 2;

void emit(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-") std::cout << content;
    else write_file(out, content);
}

struct GlobalOpts {
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::string out;
    std::string format = "json";
    std::string complex_file;
    bool auto_close = false;

    Complex load_complex() const {
        if (complex_file.empty())
            throw std::invalid_argument("this command needs --complex <file>");
        return read_complex_file(complex_file, auto_close);
    }
};

Complex build_generated(const std::string& kind, int n, long long m,
                        std::uint64_t seed, const std::vector<int>& parts) {
    if (kind == "random") return Complex::random(n, m, seed);
    if (kind == "complete") return Complex::whitney(Graph::complete(n));
    if (kind == "cycle") return Complex::whitney(Graph::cycle(n));
    if (kind == "path") return Complex::whitney(Graph::path(n));
    if (kind == "octahedron") return Complex::whitney(Graph::octahedron());
    if (kind == "multipartite")
        return Complex::whitney(Graph::complete_multipartite(parts));
    if (kind == "graph") return Complex::one_skeleton(Graph::random(n, m, seed));
    throw std::invalid_argument("unknown generator kind: " + kind);
}

IntMat named_matrix(const Complex& g, const std::string& name, int block) {
    if (name == "L") return connection_matrix(g);
    if (name == "g") return green_matrix(g);
    if (name == "d") return exterior_derivative(g);
    if (name == "D") return dirac(g);
    if (name == "H") return block >= 0 ? hodge_block(g, block) : hodge(g);
    if (name == "absD") return signless(dirac(g));
    if (name == "absH") {
        const IntMat a = signless(dirac(g));
        return a * a;
    }
    throw std::invalid_argument("unknown matrix name: " + name);
}

RealMat named_operator(const Complex& g, const std::string& name) {
    if (name == "L") return to_real(connection_matrix(g));
    if (name == "g") return to_real(green_matrix(g));
    if (name == "D") return to_real(dirac(g));
    if (name == "H") return to_real(hodge(g));
    throw std::invalid_argument("unknown operator: " + name);
}

ScanConfig scan_config(const GlobalOpts& opts, long long trials) {
    ScanConfig cfg;
    cfg.trials = trials;
    cfg.seed = opts.seed;
    cfg.tol = opts.tol;
    return cfg;
}

int finish_scan(const ScanReport& rep, const GlobalOpts& opts,
                const std::string& witness_file) {
    emit(opts.out, rep.full_json().dump(2) + "\n");
    if (!rep.clean && !witness_file.empty()) {
        for (const auto& [check, stat] : rep.checks) {
            if (stat.passed == stat.evaluated) continue;
            json witness;
            witness["complex"] = json::parse(stat.worst_complex);
            witness["index"] = stat.worst_index;
            witness["trial"] = stat.worst_trial;
            write_file(witness_file,
                       verdict_json(check, false, stat.min_margin, witness).dump(2) + "\n");
            break;
        }
    }
    if (!rep.failure.empty()) return kExitError;
    return rep.clean ? kExitPass : kExitCandidate;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connection/Dirac spectra of finite abstract simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "random seed");
    app.add_option("--tol", opts.tol, "numerical tolerance");
    app.add_option("--out", opts.out, "output file ('-' for stdout)");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--complex", opts.complex_file, "complex file (array of arrays)");
    app.add_flag("--auto-close", opts.auto_close,
                 "complete complex files to their closure instead of rejecting");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a complex file");
    std::string gen_kind = "random";
    int gen_n = 6;
    long long gen_m = 9;
    std::vector<int> gen_parts;
    gen->add_option("--kind", gen_kind,
                    "random|complete|cycle|path|octahedron|multipartite|graph");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--m", gen_m, "edge count (random/graph kinds)");
    gen->add_option("--parts", gen_parts, "part sizes for multipartite");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "dump an operator matrix");
    std::string matrix_name = "L";
    int matrix_block = -1;
    matrix->add_option("--name", matrix_name, "L|g|d|D|H|absD|absH");
    matrix->add_option("--k", matrix_block, "restrict H to the k-dimensional block");

    // spectra
    auto* spectra = app.add_subcommand("spectra", "dump a spectrum as CSV");
    std::string spectra_op = "L";
    spectra->add_option("--operator", spectra_op, "L|g|D|H");

    // verify
    auto* verify = app.add_subcommand("verify", "run every exact identity check");
    long long verify_trials = 100;
    std::string witness_file = "witness.json";
    std::vector<std::string> verify_checks;
    verify->add_option("--trials", verify_trials, "number of random complexes");
    verify->add_option("--witness", witness_file, "witness output on failure");
    verify->add_option("--checks", verify_checks, "restrict to named checks");

    // scan
    auto* scan = app.add_subcommand("scan", "conjecture scans over random complexes");
    scan->require_subcommand(1);
    auto* scan_loewner_cmd = scan->add_subcommand("loewner", "S_k(L) vs S_k(D), S_k(g)");
    auto* scan_green_cmd = scan->add_subcommand("green-top", "top eigenvalue gap of g");
    auto* scan_radius_cmd = scan->add_subcommand("radius", "rho(L) vs rho(g)");
    long long scan_trials = 500;
    bool scan_all_complexes = false;
    for (auto* sc : {scan_loewner_cmd, scan_green_cmd, scan_radius_cmd}) {
        sc->add_option("--trials", scan_trials, "number of random complexes");
        sc->add_option("--witness", witness_file, "witness output for candidates");
    }
    scan_green_cmd->add_flag("--all-complexes", scan_all_complexes,
                             "include disconnected complexes (gap degeneracy is "
                             "trivial across components)");

    // lefschetz
    auto* lefschetz = app.add_subcommand("lefschetz", "fixed point reports");
    std::string map_file;
    bool all_autos = false;
    lefschetz->add_option("--map", map_file, "map file {vertices, image}");
    lefschetz->add_flag("--all-automorphisms", all_autos,
                        "report every automorphism instead of one map");

    // wave
    auto* wave = app.add_subcommand("wave", "discrete wave evolution as CSV");
    std::string wave_op = "D";
    std::string wave_scale = "auto";
    std::size_t wave_steps = 32;
    std::size_t wave_source = 0;
    wave->add_option("--operator", wave_op, "D|L|g");
    wave->add_option("--scale", wave_scale, "positive scale factor or 'auto'");
    wave->add_option("--steps", wave_steps, "number of discrete time steps");
    wave->add_option("--source", wave_source, "basis index of the point source");

    // figures
    auto* figures = app.add_subcommand("figures", "emit spectra CSV and SVG figures");
    int fig_n = 6;
    long long fig_m = 12;
    figures->add_option("--n", fig_n, "vertex count when generating");
    figures->add_option("--m", fig_m, "edge count when generating");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const Complex g = build_generated(gen_kind, gen_n, gen_m, opts.seed, gen_parts);
            emit(opts.out, complex_to_text(g) + "\n");
            return kExitPass;
        }
        if (matrix->parsed()) {
            const Complex g = opts.load_complex();
            const IntMat m = named_matrix(g, matrix_name, matrix_block);
            if (opts.format == "csv") emit(opts.out, matrix_to_csv(m));
            else emit(opts.out, matrix_to_json(g, m, matrix_name).dump(2) + "\n");
            return kExitPass;
        }
        if (spectra->parsed()) {
            const Complex g = opts.load_complex();
            const Spectrum s = spectrum_of(named_operator(g, spectra_op));
            emit(opts.out, spectrum_to_csv(s));
            return kExitPass;
        }
        if (verify->parsed()) {
            ScanConfig cfg = scan_config(opts, verify_trials);
            cfg.checks = verify_checks;
            const ScanReport rep = opts.complex_file.empty()
                                       ? verify_all(cfg)
                                       : verify_single(opts.load_complex(), cfg);
            return finish_scan(rep, opts, witness_file);
        }
        if (scan->parsed()) {
            ScanConfig cfg = scan_config(opts, scan_trials);
            ScanReport rep;
            if (scan_loewner_cmd->parsed()) {
                rep = scan_loewner(cfg);
            } else if (scan_green_cmd->parsed()) {
                cfg.connected_only = !scan_all_complexes;
                rep = scan_green_top(cfg);
            } else {
                rep = scan_spectral_radius(cfg);
            }
            return finish_scan(rep, opts, witness_file);
        }
        if (lefschetz->parsed()) {
            const Complex g = opts.load_complex();
            if (all_autos) {
                json reports = json::array();
                for (const auto& t : find_automorphisms(g))
                    reports.push_back(lefschetz_report_json(g, t));
                emit(opts.out, reports.dump(2) + "\n");
                for (const auto& r : reports)
                    if (r["pass"] != true) return kExitError;
                return kExitPass;
            }
            if (map_file.empty())
                throw std::invalid_argument("lefschetz needs --map or --all-automorphisms");
            const SimplicialMap t = read_map_file(map_file, g);
            const json rep = lefschetz_report_json(g, t);
            emit(opts.out, rep.dump(2) + "\n");
            return rep["pass"] == true ? kExitPass : kExitError;
        }
        if (wave->parsed()) {
            const Complex g = opts.load_complex();
            RealMat a = named_operator(g, wave_op);
            double scale;
            if (wave_scale == "auto") {
                const double rho = spectral_radius(a);
                scale = rho > 0 ? 0.45 / rho : 1.0;
            } else {
                scale = std::stod(wave_scale);
            }
            a = a * scale;
            if (wave_source >= g.size())
                throw std::invalid_argument("source index out of range");
            WaveState s;
            s.u.assign(g.size(), 0.0);
            s.v.assign(g.size(), 0.0);
            s.u[wave_source] = 1.0;
            std::vector<std::vector<double>> us{s.u}, vs{s.v};
            if (spectral_radius(a) >= 1.0)
                throw std::invalid_argument("scaled operator must have norm below 1");
            for (std::size_t k = 0; k < wave_steps; ++k) {
                s = symplectic_step(a, s);
                us.push_back(s.u);
                vs.push_back(s.v);
            }
            emit(opts.out, trajectory_to_csv(us, vs));
            return kExitPass;
        }
        if (figures->parsed()) {
            const Complex g = opts.complex_file.empty()
                                  ? Complex::random(fig_n, fig_m, opts.seed)
                                  : opts.load_complex();
            const std::string prefix = opts.out.empty() ? "connlab_" : opts.out;
            for (const auto& path : emit_figures(g, prefix))
                std::cout << path << "\n";
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
