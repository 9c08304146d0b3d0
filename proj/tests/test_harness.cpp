#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "connlab/harness.hpp"
#include "connlab/io.hpp"
#include "connlab/operators.hpp"

using namespace connlab;
using nlohmann::json;

namespace {

ScanConfig small_config(long long trials, std::uint64_t seed) {
    ScanConfig cfg;
    cfg.trials = trials;
    cfg.vertex_min = 3;
    cfg.vertex_max = 7;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("complex file parsing") {
    const Complex g = parse_complex("[[1],[2],[1,2]]");
    CHECK(g.size() == 3);
    // canonicalization: order and vertex order are free in the file
    const Complex h = parse_complex("[[2,1],[2],[1]]");
    CHECK(h.simplices() == g.simplices());
    // non-closed input is rejected unless auto_close is set
    CHECK_THROWS_AS(parse_complex("[[1,2]]"), std::invalid_argument);
    CHECK(parse_complex("[[1,2]]", true).size() == 3);
    CHECK(parse_complex("[]").empty());
    // round trip
    const Complex r = Complex::random(6, 8, 3);
    CHECK(parse_complex(complex_to_text(r)).simplices() == r.simplices());
}

TEST_CASE("matrix and spectrum dumps") {
    const Complex g = Complex::closure({{1, 2}});
    const json j = matrix_to_json(g, connection_matrix(g), "L");
    CHECK(j["name"] == "L");
    CHECK(j["basis"].size() == 3);
    CHECK(j["entries"][2] == json::array({1, 1, 1}));
    CHECK(matrix_to_csv(connection_matrix(g)) == "1,0,1\n0,1,1\n1,1,1\n");

    const Spectrum s = spectrum_from_values({2.0, 1.0});
    std::istringstream csv(spectrum_to_csv(s));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "index,lambda,cumulative");
    std::getline(csv, line);
    CHECK(line == "1,2,2");
    std::getline(csv, line);
    CHECK(line == "2,1,3");
}

TEST_CASE("map files") {
    const Complex g = Complex::whitney(Graph::complete(3));
    const SimplicialMap t = parse_map(R"({"vertices":[1,2,3],"image":[2,3,1]})", g);
    CHECK(t.apply(1) == 2);
    CHECK(t.is_automorphism());
    // unsorted vertex arrays are accepted
    const SimplicialMap u = parse_map(R"({"vertices":[3,1,2],"image":[1,2,3]})", g);
    CHECK(u.apply(3) == 1);
    const json j = map_to_json(t);
    CHECK(j["vertices"].size() == 3);
    CHECK_THROWS_AS(parse_map(R"({"vertices":[1,2,3]})", g), std::invalid_argument);

    const json rep = lefschetz_report_json(g, t);
    CHECK(rep["pass"] == true);
    CHECK(rep["sum"] == 1);
    CHECK(rep["lefschetz"] == 1);
}

TEST_CASE("trial seeds and sampling are deterministic") {
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 5) == trial_seed(1, 5));
    const ScanConfig cfg = small_config(3, 11);
    for (long long t = 0; t < 3; ++t) {
        const Complex a = sample_complex(cfg, t);
        const Complex b = sample_complex(cfg, t);
        CHECK(a.simplices() == b.simplices());
        CHECK(a.size() <= cfg.max_simplices);
        const auto vs = a.vertex_set();
        CHECK(static_cast<int>(vs.size()) >= cfg.vertex_min);
        CHECK(static_cast<int>(vs.size()) <= cfg.vertex_max);
    }
}

TEST_CASE("loewner scan") {
    const ScanConfig cfg = small_config(6, 5);
    const ScanReport rep = scan_loewner(cfg);
    CHECK(rep.clean);
    CHECK(rep.checks.at("loewner_LD").evaluated == 6);
    CHECK(rep.checks.at("loewner_LD").min_margin >= 0.0);
    CHECK(rep.checks.at("loewner_Lg").min_margin >= 0.0);
    // bitwise determinism of the result content
    const ScanReport again = scan_loewner(cfg);
    CHECK(rep.result_json().dump() == again.result_json().dump());
}

TEST_CASE("green-top and radius scans") {
    ScanConfig cfg = small_config(5, 23);
    cfg.connected_only = true;
    const ScanReport gap = scan_green_top(cfg);
    CHECK(gap.clean);
    CHECK(gap.checks.at("green_gap").min_margin > 0.0);
    const ScanReport radius = scan_spectral_radius(cfg);
    CHECK(radius.clean);
    CHECK(radius.checks.at("radius_margin").min_margin > 0.0);
}

TEST_CASE("witness round trip reproduces the margin") {
    const ScanConfig cfg = small_config(4, 77);
    const ScanReport rep = scan_loewner(cfg);
    for (const std::string check : {"loewner_LD", "loewner_Lg"}) {
        const CheckStat& stat = rep.checks.at(check);
        REQUIRE(!stat.worst_complex.empty());
        const double replayed = replay_witness(check, stat.worst_complex);
        CHECK(std::abs(replayed - stat.min_margin) <= 1e-12);
    }
}

TEST_CASE("verify_all over fixtures and a small sweep") {
    ScanConfig cfg = small_config(4, 9);
    const ScanReport rep = verify_all(cfg);
    CHECK(rep.clean);
    CHECK(rep.failure.empty());
    CHECK(rep.checks.at("unimodular").evaluated >= 12);  // fixtures + trials
    CHECK(rep.checks.at("hydrogen").evaluated >= 1);     // the 1-dim fixture
    CHECK(rep.checks.at("lefschetz").passed == rep.checks.at("lefschetz").evaluated);
    const ScanReport again = verify_all(cfg);
    CHECK(rep.result_json().dump() == again.result_json().dump());
}

TEST_CASE("verdict reports") {
    const json v = verdict_json("degree_L", true, 0.25, json::array({1, 2}));
    CHECK(v["check"] == "degree_L");
    CHECK(v["pass"] == true);
    CHECK(v["margin_min"] == 0.25);
    CHECK(v["witness"] == json::array({1, 2}));
}

TEST_CASE("degree witnesses replay") {
    const Complex g = Complex::random(6, 10, 123);
    const std::string text = complex_to_text(g);
    const double slack_l = replay_witness("degree_L", text);
    const double slack_d = replay_witness("degree_D", text);
    CHECK(slack_l >= 0.0);
    CHECK(slack_d >= 0.0);
    CHECK_THROWS_AS(replay_witness("nonsense", text), std::invalid_argument);
}

TEST_CASE("panel rows nest charts into one svg document") {
    const std::string svg = svg_panel_row(
        {{"left", {PlotSeries{"a", "#000000", {1.0, 2.0}}}},
         {"right", {PlotSeries{"b", "#ff0000", {2.0, 1.0}}}}},
        320, 200);
    CHECK(svg.find("width=\"640\"") != std::string::npos);
    CHECK(svg.rfind("<svg", 0) == 0);
    // outer document plus one nested element per panel
    std::size_t count = 0;
    for (std::size_t pos = svg.find("<svg"); pos != std::string::npos;
         pos = svg.find("<svg", pos + 1))
        ++count;
    CHECK(count == 3);
}

TEST_CASE("config validation") {
    ScanConfig bad;
    bad.trials = 0;
    CHECK_THROWS_AS(scan_loewner(bad), std::invalid_argument);
    bad.trials = 1;
    bad.vertex_max = 2;
    bad.vertex_min = 5;
    CHECK_THROWS_AS(verify_all(bad), std::invalid_argument);
}

TEST_CASE("figure emission") {
    const Complex g = Complex::closure({{1, 2}});
    const auto paths = emit_figures(g, "/tmp/connlab_test_");
    REQUIRE(paths.size() == 3);
    const std::string csv = read_file(paths[0]);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "j,lambda_L,lambda_g,lambda_D,S_L,S_g,S_D,d_L,d_D");
    int rows = 0;
    double prev_sl = 0.0;
    while (std::getline(is, line)) {
        ++rows;
        std::istringstream ls(line);
        std::string field;
        std::vector<double> f;
        while (std::getline(ls, field, ',')) f.push_back(std::stod(field));
        REQUIRE(f.size() == 9);
        // cumulative differences reproduce the eigenvalues
        CHECK(f[4] - prev_sl == doctest::Approx(f[1]).epsilon(1e-12));
        prev_sl = f[4];
    }
    CHECK(rows == 3);
    const std::string svg = read_file(paths[1]);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK_THROWS_AS(emit_figures(Complex(), "/tmp/connlab_x_"), std::invalid_argument);
    for (const auto& p : paths) std::remove(p.c_str());
}
