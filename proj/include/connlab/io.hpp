#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "connlab/complex.hpp"
#include "connlab/dynamics.hpp"
#include "connlab/matrix.hpp"
#include "connlab/spectra.hpp"

namespace connlab {

/// Complex file format: one array of arrays of integers, e.g. [[1],[2],[1,2]].
/// The reader canonicalizes; with auto_close it completes the input to its
/// closure, otherwise a non-closed input is rejected.
Complex parse_complex(const std::string& text, bool auto_close = false,
                      std::size_t cap = Complex::kDefaultCap);
Complex read_complex_file(const std::string& path, bool auto_close = false,
                          std::size_t cap = Complex::kDefaultCap);
std::string complex_to_text(const Complex& g);
nlohmann::json complex_to_json(const Complex& g);

/// Matrix dump: {"basis": [[...]...], "name": "L", "entries": [[...]...]}.
nlohmann::json matrix_to_json(const Complex& g, const IntMat& m, const std::string& name);
std::string matrix_to_csv(const IntMat& m);

/// Spectrum dump: CSV columns (index, lambda, cumulative).
std::string spectrum_to_csv(const Spectrum& s);

/// Verdict report: {"check": ..., "pass": ..., "margin_min": ..., "witness": ...}.
nlohmann::json verdict_json(const std::string& check, bool pass, double margin_min,
                            const nlohmann::json& witness);

/// Map file format: {"vertices": [...], "image": [...]} parallel arrays.
SimplicialMap read_map_file(const std::string& path, const Complex& g);
SimplicialMap parse_map(const std::string& text, const Complex& g);
nlohmann::json map_to_json(const SimplicialMap& t);

/// Lefschetz report: {"fixed": [...], "indices": [...], "sum", "lefschetz", "pass"}.
nlohmann::json lefschetz_report_json(const Complex& g, const SimplicialMap& t);

/// Wave trajectory dump: CSV rows (step, simplex_index, u, v).
std::string trajectory_to_csv(const std::vector<std::vector<double>>& u_steps,
                              const std::vector<std::vector<double>>& v_steps);

/// A single polyline series for the SVG plots.
struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<double> y;  // x is the 1-based index
};

/// Minimal self-contained SVG line chart.
std::string svg_line_chart(const std::string& title,
                           const std::vector<PlotSeries>& series, int width = 640,
                           int height = 400);

/// One SVG document with several charts side by side (nested svg elements).
std::string svg_panel_row(
    const std::vector<std::pair<std::string, std::vector<PlotSeries>>>& panels,
    int panel_width = 640, int height = 400);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace connlab
