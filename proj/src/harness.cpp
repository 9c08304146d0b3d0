#include "connlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "connlab/dynamics.hpp"
#include "connlab/exact.hpp"
#include "connlab/io.hpp"
#include "connlab/operators.hpp"
#include "connlab/spectra.hpp"

namespace connlab {

using nlohmann::json;

namespace {

constexpr double kExactTol = 1e-8;  // tolerance of the floating-point identities

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do { draw = rng(); } while (draw >= limit);
    return draw % bound;
}

double uniform_01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

double min_element_or(const std::vector<double>& v, double fallback) {
    return v.empty() ? fallback : *std::min_element(v.begin(), v.end());
}

// residuals small enough to trust a candidate margin
bool spectra_trustworthy(const RealMat& a) {
    const Spectrum s = spectrum_of(a, true);
    return s.residual_bound <= 1e-12 * (1.0 + inf_norm(a)) * a.rows();
}

}  // namespace

void CheckStat::record(long long trial, double margin, bool pass,
                       const std::string& complex_text, long long index) {
    ++evaluated;
    if (pass) ++passed;
    if (!has_margin || margin < min_margin) {
        min_margin = margin;
        has_margin = true;
        worst_trial = trial;
        worst_index = index;
        worst_complex = complex_text;
    }
}

json ScanReport::result_json() const {
    json j;
    j["scan"] = name;
    j["config"] = {{"trials", cfg.trials},
                   {"vertex_min", cfg.vertex_min},
                   {"vertex_max", cfg.vertex_max},
                   {"density_min", cfg.density_min},
                   {"density_max", cfg.density_max},
                   {"seed", cfg.seed},
                   {"tol", cfg.tol},
                   {"max_simplices", cfg.max_simplices},
                   {"connected_only", cfg.connected_only}};
    json checks_json;
    for (const auto& [check, stat] : checks) {
        json s;
        s["evaluated"] = stat.evaluated;
        s["passed"] = stat.passed;
        if (stat.has_margin) {
            s["min_margin"] = stat.min_margin;
            s["witness"] = {{"trial", stat.worst_trial},
                            {"index", stat.worst_index},
                            {"complex", json::parse(stat.worst_complex.empty()
                                                        ? "[]"
                                                        : stat.worst_complex)}};
        }
        checks_json[check] = std::move(s);
    }
    j["checks"] = std::move(checks_json);
    j["clean"] = clean;
    if (!failure.empty()) j["failure"] = failure;
    return j;
}

json ScanReport::full_json() const {
    json j;
    j["result"] = result_json();
    j["meta"] = {{"wall_seconds", wall_seconds}};
    return j;
}

std::uint64_t trial_seed(std::uint64_t seed, long long trial) {
    return splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1)));
}

static void validate_config(const ScanConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("scan needs at least one trial");
    if (cfg.vertex_min < 1 || cfg.vertex_max < cfg.vertex_min)
        throw std::invalid_argument("empty vertex range");
    if (cfg.density_min < 0.0 || cfg.density_max > 1.0 ||
        cfg.density_max < cfg.density_min)
        throw std::invalid_argument("empty edge density range");
}

Complex sample_complex(const ScanConfig& cfg, long long trial) {
    std::mt19937_64 rng(trial_seed(cfg.seed, trial));
    Complex last;
    for (int attempt = 0; attempt < 256; ++attempt) {
        const int span = cfg.vertex_max - cfg.vertex_min + 1;
        const int n = cfg.vertex_min +
                      static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(span)));
        const double p =
            cfg.density_min + (cfg.density_max - cfg.density_min) * uniform_01(rng);
        const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
        const long long m = static_cast<long long>(p * static_cast<double>(max_edges));
        try {
            last = Complex::random(n, m, rng(), cfg.max_simplices);
        } catch (const std::invalid_argument&) {
            continue;  // over the cap; redraw
        }
        if (!cfg.connected_only || last.connected()) return last;
    }
    return last;  // deterministic fallback after exhausting attempts
}

// ---------------------------------------------------------------------------
// Question scans

ScanReport scan_loewner(const ScanConfig& cfg) {
    validate_config(cfg);
    Timer timer;
    ScanReport rep;
    rep.name = "loewner";
    rep.cfg = cfg;
    for (long long trial = 0; trial < cfg.trials; ++trial) {
        const Complex g = sample_complex(cfg, trial);
        const std::string text = complex_to_text(g);
        const RealMat lmat = to_real(connection_matrix(g));
        const RealMat dmat = to_real(dirac(g));
        const RealMat gmat = to_real(green_matrix(g));
        const Spectrum sl = spectrum_of(lmat, false);
        const Spectrum sd = spectrum_of(dmat, false);
        const Spectrum sg = spectrum_of(gmat, false);
        const auto ld = loewner_margins(sl, sd);
        const auto lg = loewner_margins(sl, sg);
        const double m_ld = min_element_or(ld, 0.0);
        const double m_lg = min_element_or(lg, 0.0);
        const long long k_ld =
            ld.empty() ? -1
                       : static_cast<long long>(std::min_element(ld.begin(), ld.end()) -
                                                ld.begin()) + 1;
        const long long k_lg =
            lg.empty() ? -1
                       : static_cast<long long>(std::min_element(lg.begin(), lg.end()) -
                                                lg.begin()) + 1;
        bool cand_ld = m_ld < -cfg.tol;
        bool cand_lg = m_lg < -cfg.tol;
        if (cand_ld || cand_lg) {
            // a candidate must survive tightened residual verification
            const bool trustworthy = spectra_trustworthy(lmat) &&
                                     spectra_trustworthy(dmat) &&
                                     spectra_trustworthy(gmat);
            if (!trustworthy) cand_ld = cand_lg = false;
        }
        rep.checks["loewner_LD"].record(trial, m_ld, !cand_ld, text, k_ld);
        rep.checks["loewner_Lg"].record(trial, m_lg, !cand_lg, text, k_lg);
        if (cand_ld || cand_lg) rep.clean = false;
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

ScanReport scan_green_top(const ScanConfig& cfg) {
    validate_config(cfg);
    Timer timer;
    ScanReport rep;
    rep.name = "green-top";
    rep.cfg = cfg;
    for (long long trial = 0; trial < cfg.trials; ++trial) {
        const Complex g = sample_complex(cfg, trial);
        if (g.size() < 2) continue;  // gap undefined
        const IntMat gint = green_matrix(g);
        const RealMat gmat = to_real(gint);
        const Spectrum sg = spectrum_of(gmat, false);
        const double gap = sg.values[0] - sg.values[1];
        bool candidate = gap <= cfg.tol;
        if (candidate) {
            if (!spectra_trustworthy(gmat)) candidate = false;
            // where feasible, settle the degeneracy exactly: a simple top
            // eigenvalue has a square-free factor in the characteristic
            // polynomial, so gcd(p, p') of degree zero refutes the candidate
            else if (g.size() <= 64 && char_poly_repeated_root_degree(gint) == 0)
                candidate = false;
        }
        rep.checks["green_gap"].record(trial, gap, !candidate, complex_to_text(g));
        if (candidate) rep.clean = false;
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

ScanReport scan_spectral_radius(const ScanConfig& cfg) {
    validate_config(cfg);
    Timer timer;
    ScanReport rep;
    rep.name = "radius";
    rep.cfg = cfg;
    for (long long trial = 0; trial < cfg.trials; ++trial) {
        const Complex g = sample_complex(cfg, trial);
        if (g.empty()) continue;
        const RealMat lmat = to_real(connection_matrix(g));
        const RealMat gmat = to_real(green_matrix(g));
        const Spectrum sl = spectrum_of(lmat, false);
        const Spectrum sg = spectrum_of(gmat, false);
        const double margin = sl.spectral_radius() - sg.spectral_radius();
        bool candidate = margin <= cfg.tol;
        if (candidate && !(spectra_trustworthy(lmat) && spectra_trustworthy(gmat)))
            candidate = false;
        rep.checks["radius_margin"].record(trial, margin, !candidate, complex_to_text(g));
        if (candidate) rep.clean = false;
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// verify_all

namespace {

double min_interlace_slack(const Spectrum& outer, const Spectrum& inner) {
    const std::size_t j = outer.size() - inner.size();
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < inner.size(); ++k) {
        slack = std::min(slack, outer.values[k] - inner.values[k]);
        slack = std::min(slack, inner.values[k] - outer.values[k + j]);
    }
    return inner.size() == 0 ? 0.0 : slack;
}

double min_degree_slack(const Spectrum& s, const std::vector<long long>& degs) {
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < degs.size(); ++k)
        slack = std::min(slack, static_cast<double>(degs[k]) - s.values[k]);
    return degs.empty() ? 0.0 : slack;
}

struct VerifyContext {
    ScanReport* rep;
    long long trial;
    std::string text;
    bool failed = false;

    bool want(const ScanConfig& cfg, const std::string& check) const {
        return cfg.checks.empty() ||
               std::find(cfg.checks.begin(), cfg.checks.end(), check) != cfg.checks.end();
    }
    void exact(const std::string& check, bool pass) {
        rep->checks[check].record(trial, pass ? 0.0 : -1.0, pass, text);
        if (!pass) fail(check);
    }
    void margin(const std::string& check, double m, double tol, long long index = -1) {
        const bool pass = m >= -tol;
        rep->checks[check].record(trial, m, pass, text, index);
        if (!pass) fail(check);
    }
    void fail(const std::string& check) {
        failed = true;
        rep->clean = false;
        if (rep->failure.empty())
            rep->failure = check + " failed on trial " + std::to_string(trial);
    }
};

// a vertex map that always validates: send every vertex into a fixed facet
std::vector<Vertex> collapse_map(const Complex& g, std::mt19937_64& rng) {
    const auto maximal = g.maximal_simplices();
    const Simplex& target =
        g.simplex(maximal[uniform_below(rng, maximal.size())]);
    const auto vs = g.vertex_set();
    std::vector<Vertex> image(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        image[i] = target.vertices()[uniform_below(rng, target.vertices().size())];
    return image;
}

void lefschetz_suite(const Complex& g, const ScanConfig& cfg, VerifyContext& ctx,
                     std::mt19937_64& rng) {
    if (g.empty() || g.vertex_set().size() > 8 || g.size() > 300) return;
    std::vector<SimplicialMap> maps;
    maps.push_back(identity_map(g));
    for (auto& t : find_automorphisms(g, 4)) maps.push_back(std::move(t));
    // random vertex assignments that happen to validate
    int random_found = 0;
    for (int attempt = 0; attempt < 50 && random_found < 3; ++attempt) {
        const auto vs = g.vertex_set();
        std::vector<Vertex> image(vs.size());
        for (auto& v : image) v = vs[uniform_below(rng, vs.size())];
        try {
            maps.emplace_back(g, vs, image);
            ++random_found;
        } catch (const std::invalid_argument&) {
        }
    }
    maps.emplace_back(g, g.vertex_set(), collapse_map(g, rng));

    for (const auto& t : maps) {
        if (ctx.want(cfg, "lefschetz")) {
            const LefschetzReport lr = verify_lefschetz(g, t);
            ctx.exact("lefschetz", lr.pass);
        }
        if (ctx.want(cfg, "koopman_supertrace"))
            ctx.exact("koopman_supertrace", koopman_supertrace_check(g, t));
        if (ctx.want(cfg, "attractor")) ctx.exact("attractor", attractor(g, t).pass);
        if (ctx.failed) return;
    }

    // dynamical matrices over the sampled automorphisms
    if (!ctx.want(cfg, "dynamical")) return;
    const IntMat eye = IntMat::identity(g.size());
    const long long chi = g.euler_characteristic();
    int used = 0;
    for (const auto& t : maps) {
        if (!t.is_automorphism() || used >= 3) continue;
        ++used;
        const DynamicalMatrices dm = dynamical_matrices(g, t);
        bool ok = dm.l_t * dm.g_t.transpose() == eye;
        long long total = 0;
        for (std::size_t i = 0; i < dm.g_t.rows(); ++i)
            for (std::size_t j = 0; j < dm.g_t.cols(); ++j) total += dm.g_t(i, j);
        ok = ok && total == chi;
        ok = ok && dm.dirac_t * dm.dirac_t == hodge(g);
        ctx.exact("dynamical", ok);
        if (ctx.failed) return;
    }
}

void verify_complex(const Complex& g, const ScanConfig& cfg, VerifyContext& ctx,
                    std::mt19937_64& rng) {
    const IntMat lmat = connection_matrix(g);
    const IntMat gmat = green_matrix(g);
    const IntMat dmat = dirac(g);
    const std::size_t n = g.size();

    if (ctx.want(cfg, "unimodular"))
        ctx.exact("unimodular", det_exact(lmat) == g.fermi_characteristic());
    if (ctx.failed) return;

    if (ctx.want(cfg, "green_inverse"))
        ctx.exact("green_inverse", lmat * gmat == IntMat::identity(n));
    if (ctx.failed) return;

    if (ctx.want(cfg, "energy")) {
        long long total = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) total += gmat(i, j);
        ctx.exact("energy", total == g.euler_characteristic());
    }
    if (ctx.want(cfg, "green_trace")) {
        long long tr = 0, star_sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            tr += gmat(i, i);
            for (std::size_t j : g.star(i)) star_sum += g.simplex(j).omega();
        }
        ctx.exact("green_trace", tr == star_sum);
    }
    if (ctx.failed) return;

    const Spectrum sl = spectrum_of(to_real(lmat), false);
    const Spectrum sd = spectrum_of(to_real(dmat), false);

    if (ctx.want(cfg, "signature_L")) {
        const Signature sig = signature(sl, kExactTol);
        ctx.exact("signature_L",
                  static_cast<long long>(sig.positives) -
                          static_cast<long long>(sig.negatives) ==
                      g.euler_characteristic());
    }
    if (ctx.want(cfg, "dirac_symmetry")) {
        double worst = 0.0;
        for (std::size_t k = 0; k < sd.size(); ++k)
            worst = std::max(worst,
                             std::abs(sd.values[k] + sd.values[sd.size() - 1 - k]));
        ctx.margin("dirac_symmetry", -worst, kExactTol);
    }
    if (ctx.failed) return;

    if (ctx.want(cfg, "degree_L"))
        ctx.margin("degree_L", min_degree_slack(sl, connection_degrees(g)), kExactTol);
    if (ctx.want(cfg, "degree_D"))
        ctx.margin("degree_D", min_degree_slack(sd, dirac_degrees(g)), kExactTol);
    if (ctx.failed) return;

    // interlacing under deletion of maximal simplices (closed case) and of
    // vertices / stars (open case, Dirac only)
    if (ctx.want(cfg, "interlace_L") || ctx.want(cfg, "interlace_D")) {
        auto maximal = g.maximal_simplices();
        const std::size_t budget = n > 600 ? 3 : 8;
        while (maximal.size() > budget) {
            maximal.erase(maximal.begin() +
                          static_cast<long>(uniform_below(rng, maximal.size())));
        }
        for (std::size_t pos : maximal) {
            const std::vector<std::size_t> del{pos};
            if (ctx.want(cfg, "interlace_L")) {
                const Spectrum inner =
                    spectrum_of(to_real(submatrix_delete(lmat, del)), false);
                ctx.margin("interlace_L", min_interlace_slack(sl, inner), kExactTol,
                           static_cast<long long>(pos));
            }
            if (ctx.want(cfg, "interlace_D")) {
                const Spectrum inner =
                    spectrum_of(to_real(submatrix_delete(dmat, del)), false);
                ctx.margin("interlace_D", min_interlace_slack(sd, inner), kExactTol,
                           static_cast<long long>(pos));
            }
            if (ctx.failed) return;
        }
    }
    if (ctx.want(cfg, "interlace_D_open") && n > 1) {
        // single vertex deletions leave open sets
        const auto [vlo, vhi] = g.block_range(0);
        std::vector<std::size_t> vertices;
        for (std::size_t i = vlo; i < vhi; ++i) vertices.push_back(i);
        while (vertices.size() > 6)
            vertices.erase(vertices.begin() +
                           static_cast<long>(uniform_below(rng, vertices.size())));
        for (std::size_t pos : vertices) {
            const Spectrum inner =
                spectrum_of(to_real(submatrix_delete(dmat, {pos})), false);
            ctx.margin("interlace_D_open", min_interlace_slack(sd, inner), kExactTol,
                       static_cast<long long>(pos));
            if (ctx.failed) return;
        }
        // one star: nested interlacing for a multi-element open set
        const std::size_t x = uniform_below(rng, n);
        const auto star_positions = g.star(x);
        if (star_positions.size() < n) {
            const RealMat d_open =
                to_real(dirac(g)).principal_submatrix(star_positions);
            const Spectrum inner = spectrum_of(d_open, false);
            ctx.margin("interlace_D_open", min_interlace_slack(sd, inner), kExactTol,
                       static_cast<long long>(x));
        }
    }
    if (ctx.failed) return;

    if (ctx.want(cfg, "mckean_singer"))
        ctx.exact("mckean_singer", mckean_singer_check(g, 5).pass);
    if (ctx.want(cfg, "euler_poincare")) {
        const auto b = betti(g);
        long long alt = 0;
        for (std::size_t k = 0; k < b.size(); ++k)
            alt += (k % 2 == 0 ? b[k] : -b[k]);
        ctx.exact("euler_poincare", alt == g.euler_characteristic());
    }
    if (ctx.failed) return;

    if (ctx.want(cfg, "hydrogen") && g.dimension() <= 1 && !g.empty()) {
        const IntMat absd = signless(dmat);
        ctx.exact("hydrogen", lmat - gmat == absd * absd);
    }
    if (ctx.failed) return;

    if (ctx.want(cfg, "schur") && n > 0) {
        double slack = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n; ++k)
            slack = std::min(slack, sl.cumulative[k] - static_cast<double>(k + 1));
        ctx.margin("schur", slack, kExactTol);
    }
    if (ctx.want(cfg, "fan") && n > 0) {
        const Spectrum s_diff = spectrum_of(to_real(lmat - dmat), false);
        double slack = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n; ++k)
            slack = std::min(slack,
                             sd.cumulative[k] + s_diff.cumulative[k] - sl.cumulative[k]);
        ctx.margin("fan", slack, kExactTol);
    }
    if (ctx.failed) return;

    if (ctx.want(cfg, "perron") && g.connected() && n > 0)
        ctx.exact("perron", perron_check(lmat, sl).pass);
    if (ctx.failed) return;

    lefschetz_suite(g, cfg, ctx, rng);
}

std::vector<Complex> degenerate_fixtures() {
    return {
        Complex::closure({{1}}),
        Complex::closure({{1}, {2}, {3}}),
        Complex::closure({{1, 2}}),
        Complex::whitney(Graph::complete(3)),
        Complex::whitney(Graph::cycle(4)),
        Complex::whitney(Graph::cycle(5)),
        Complex::whitney(Graph::path(4)),
        Complex::whitney(Graph::octahedron()),
    };
}

}  // namespace

ScanReport verify_single(const Complex& g, const ScanConfig& cfg) {
    Timer timer;
    ScanReport rep;
    rep.name = "verify";
    rep.cfg = cfg;
    VerifyContext ctx{&rep, 0, complex_to_text(g)};
    std::mt19937_64 rng(trial_seed(cfg.seed, 0));
    verify_complex(g, cfg, ctx, rng);
    rep.wall_seconds = timer.seconds();
    return rep;
}

ScanReport verify_all(const ScanConfig& cfg) {
    validate_config(cfg);
    Timer timer;
    ScanReport rep;
    rep.name = "verify";
    rep.cfg = cfg;
    long long trial = 0;
    if (cfg.include_fixtures) {
        for (const Complex& g : degenerate_fixtures()) {
            VerifyContext ctx{&rep, trial, complex_to_text(g)};
            std::mt19937_64 rng(trial_seed(cfg.seed, trial));
            verify_complex(g, cfg, ctx, rng);
            ++trial;
            if (!rep.clean) {
                rep.wall_seconds = timer.seconds();
                return rep;
            }
        }
    }
    for (long long t = 0; t < cfg.trials; ++t, ++trial) {
        const Complex g = sample_complex(cfg, t);
        VerifyContext ctx{&rep, trial, complex_to_text(g)};
        std::mt19937_64 rng(trial_seed(cfg.seed, trial) ^ 0x5bf0'3635'dead'beefULL);
        verify_complex(g, cfg, ctx, rng);
        if (!rep.clean) break;
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

double replay_witness(const std::string& check, const std::string& complex_text) {
    const Complex g = parse_complex(complex_text);
    if (check == "loewner_LD" || check == "loewner_Lg") {
        const Spectrum sl = spectrum_of(to_real(connection_matrix(g)), false);
        const Spectrum other = check == "loewner_LD"
                                   ? spectrum_of(to_real(dirac(g)), false)
                                   : spectrum_of(to_real(green_matrix(g)), false);
        return min_element_or(loewner_margins(sl, other), 0.0);
    }
    if (check == "green_gap") {
        const Spectrum sg = spectrum_of(to_real(green_matrix(g)), false);
        return sg.values[0] - sg.values[1];
    }
    if (check == "radius_margin") {
        const Spectrum sl = spectrum_of(to_real(connection_matrix(g)), false);
        const Spectrum sg = spectrum_of(to_real(green_matrix(g)), false);
        return sl.spectral_radius() - sg.spectral_radius();
    }
    if (check == "degree_L")
        return min_degree_slack(spectrum_of(to_real(connection_matrix(g)), false),
                                connection_degrees(g));
    if (check == "degree_D")
        return min_degree_slack(spectrum_of(to_real(dirac(g)), false), dirac_degrees(g));
    throw std::invalid_argument("no replay rule for check: " + check);
}

std::vector<std::string> emit_figures(const Complex& g, const std::string& prefix) {
    if (g.empty()) throw std::invalid_argument("cannot plot an empty complex");
    const Spectrum sl = spectrum_of(to_real(connection_matrix(g)), false);
    const Spectrum sg = spectrum_of(to_real(green_matrix(g)), false);
    const Spectrum sd = spectrum_of(to_real(dirac(g)), false);
    const auto dl = connection_degrees(g);
    const auto dd = dirac_degrees(g);
    const std::size_t n = g.size();

    std::ostringstream csv;
    csv << "j,lambda_L,lambda_g,lambda_D,S_L,S_g,S_D,d_L,d_D\n";
    csv << std::setprecision(17);
    for (std::size_t j = 0; j < n; ++j)
        csv << (j + 1) << ',' << sl.values[j] << ',' << sg.values[j] << ','
            << sd.values[j] << ',' << sl.cumulative[j] << ',' << sg.cumulative[j] << ','
            << sd.cumulative[j] << ',' << dl[j] << ',' << dd[j] << '\n';

    auto to_series = [](const std::string& label, const std::string& color,
                        const std::vector<double>& y) {
        return PlotSeries{label, color, y};
    };
    auto degrees_real = [](const std::vector<long long>& d) {
        std::vector<double> y(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) y[i] = static_cast<double>(d[i]);
        return y;
    };

    const std::string fig1 = svg_panel_row(
        {{"spectra",
          {to_series("lambda(L)", "#1f77b4", sl.values),
           to_series("lambda(g)", "#2ca02c", sg.values),
           to_series("lambda(D)", "#d62728", sd.values)}},
         {"cumulative spectra",
          {to_series("S(L)", "#1f77b4", sl.cumulative),
           to_series("S(g)", "#2ca02c", sg.cumulative),
           to_series("S(D)", "#d62728", sd.cumulative)}}});
    const std::string fig2 = svg_panel_row(
        {{"connection spectrum under degree envelope",
          {to_series("lambda(L)", "#1f77b4", sl.values),
           to_series("d(L)", "#ff7f0e", degrees_real(dl))}},
         {"dirac spectrum under degree envelope",
          {to_series("lambda(D)", "#d62728", sd.values),
           to_series("d(D)", "#9467bd", degrees_real(dd))}}});

    const std::string csv_path = prefix + "spectra.csv";
    const std::string f1_path = prefix + "figure1.svg";
    const std::string f2_path = prefix + "figure2.svg";
    write_file(csv_path, csv.str());
    write_file(f1_path, fig1);
    write_file(f2_path, fig2);
    return {csv_path, f1_path, f2_path};
}

}  // namespace connlab
