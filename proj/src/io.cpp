#include "connlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace connlab {

using nlohmann::json;

Complex parse_complex(const std::string& text, bool auto_close, std::size_t cap) {
    json j = json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("complex file must be an array of arrays");
    std::vector<std::vector<Vertex>> sets;
    for (const auto& item : j) {
        if (!item.is_array())
            throw std::invalid_argument("complex file must be an array of arrays");
        std::vector<Vertex> s;
        for (const auto& v : item) s.push_back(v.get<Vertex>());
        sets.push_back(std::move(s));
    }
    if (auto_close) return Complex::closure(sets, cap);
    std::vector<Simplex> simplices;
    simplices.reserve(sets.size());
    for (auto& s : sets) simplices.emplace_back(std::move(s));
    return Complex::from_simplices(std::move(simplices), cap);
}

Complex read_complex_file(const std::string& path, bool auto_close, std::size_t cap) {
    return parse_complex(read_file(path), auto_close, cap);
}

json complex_to_json(const Complex& g) {
    json j = json::array();
    for (const Simplex& s : g.simplices()) j.push_back(s.vertices());
    return j;
}

std::string complex_to_text(const Complex& g) { return complex_to_json(g).dump(); }

json matrix_to_json(const Complex& g, const IntMat& m, const std::string& name) {
    json j;
    j["basis"] = complex_to_json(g);
    j["name"] = name;
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

std::string matrix_to_csv(const IntMat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::ostringstream os;
    os << "index,lambda,cumulative\n";
    os << std::setprecision(17);
    for (std::size_t k = 0; k < s.size(); ++k)
        os << (k + 1) << ',' << s.values[k] << ',' << s.cumulative[k] << '\n';
    return os.str();
}

json verdict_json(const std::string& check, bool pass, double margin_min,
                  const json& witness) {
    json j;
    j["check"] = check;
    j["pass"] = pass;
    j["margin_min"] = margin_min;
    j["witness"] = witness;
    return j;
}

SimplicialMap parse_map(const std::string& text, const Complex& g) {
    json j = json::parse(text);
    if (!j.contains("vertices") || !j.contains("image"))
        throw std::invalid_argument("map file needs parallel 'vertices' and 'image' arrays");
    std::vector<Vertex> domain = j["vertices"].get<std::vector<Vertex>>();
    std::vector<Vertex> image = j["image"].get<std::vector<Vertex>>();
    // accept any ordering of the vertex array; sort both in parallel
    std::vector<std::size_t> order(domain.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
    std::vector<Vertex> d2(domain.size()), i2(image.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        d2[i] = domain[order[i]];
        if (order[i] >= image.size())
            throw std::invalid_argument("map file arrays differ in length");
        i2[i] = image[order[i]];
    }
    return SimplicialMap(g, std::move(d2), std::move(i2));
}

SimplicialMap read_map_file(const std::string& path, const Complex& g) {
    return parse_map(read_file(path), g);
}

json map_to_json(const SimplicialMap& t) {
    json j;
    j["vertices"] = t.domain();
    j["image"] = t.image();
    return j;
}

json lefschetz_report_json(const Complex& g, const SimplicialMap& t) {
    const FixedPointReport fp = fixed_points(g, t);
    const LefschetzReport rep = verify_lefschetz(g, t);
    json j;
    json fixed = json::array();
    for (std::size_t pos : fp.fixed) fixed.push_back(g.simplex(pos).vertices());
    j["fixed"] = std::move(fixed);
    j["indices"] = fp.indices;
    j["sum"] = rep.index_sum;
    j["koopman_supertrace"] = rep.koopman_supertrace;
    j["lefschetz"] = rep.lefschetz;
    j["pass"] = rep.pass;
    return j;
}

std::string trajectory_to_csv(const std::vector<std::vector<double>>& u_steps,
                              const std::vector<std::vector<double>>& v_steps) {
    std::ostringstream os;
    os << "step,simplex_index,u,v\n";
    os << std::setprecision(17);
    for (std::size_t k = 0; k < u_steps.size(); ++k)
        for (std::size_t i = 0; i < u_steps[k].size(); ++i)
            os << k << ',' << i << ',' << u_steps[k][i] << ',' << v_steps[k][i] << '\n';
    return os.str();
}

static std::string svg_chart_inner(const std::string& title,
                                   const std::vector<PlotSeries>& series, int x_offset,
                                   int width, int height) {
    const double ml = 50, mr = 15, mt = 30, mb = 35;
    const double pw = width - ml - mr, ph = height - mt - mb;
    double ymin = 0.0, ymax = 1.0;
    std::size_t nmax = 1;
    bool first = true;
    for (const auto& s : series)
        for (double y : s.y) {
            if (first) { ymin = ymax = y; first = false; }
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    for (const auto& s : series) nmax = std::max(nmax, s.y.size());
    if (ymax - ymin < 1e-12) { ymax += 1.0; ymin -= 1.0; }
    const double xscale = nmax > 1 ? pw / static_cast<double>(nmax - 1) : 0.0;
    const double yscale = ph / (ymax - ymin);
    auto px = [&](std::size_t i) { return ml + xscale * static_cast<double>(i); };
    auto py = [&](double y) { return mt + ph - (y - ymin) * yscale; };

    std::ostringstream os;
    os << std::setprecision(8);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" x=\"" << x_offset << "\" width=\""
       << width << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
       << mt + ph << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
       << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    // zero line when visible
    if (ymin < 0.0 && ymax > 0.0)
        os << "<line x1=\"" << ml << "\" y1=\"" << py(0.0) << "\" x2=\"" << ml + pw
           << "\" y2=\"" << py(0.0) << "\" stroke=\"#cccccc\" stroke-dasharray=\"4\"/>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << py(ymax) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << ymax << "</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << py(ymin) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << ymin << "</text>\n";
    int legend_y = static_cast<int>(mt) + 12;
    for (const auto& s : series) {
        if (s.y.empty()) continue;
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            if (i) os << ' ';
            os << px(i) << ',' << py(s.y[i]);
        }
        os << "\"/>\n";
        os << "<text x=\"" << width - mr - 120 << "\" y=\"" << legend_y
           << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << s.color << "\">"
           << s.label << "</text>\n";
        legend_y += 14;
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_line_chart(const std::string& title, const std::vector<PlotSeries>& series,
                           int width, int height) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n"
       << svg_chart_inner(title, series, 0, width, height) << "</svg>\n";
    return os.str();
}

std::string svg_panel_row(
    const std::vector<std::pair<std::string, std::vector<PlotSeries>>>& panels,
    int panel_width, int height) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
       << panel_width * static_cast<int>(panels.size()) << "\" height=\"" << height
       << "\">\n";
    int x = 0;
    for (const auto& [title, series] : panels) {
        os << svg_chart_inner(title, series, x, panel_width, height);
        x += panel_width;
    }
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace connlab
