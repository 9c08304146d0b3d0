#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "connlab/dynamics.hpp"
#include "connlab/exact.hpp"
#include "connlab/harness.hpp"
#include "connlab/io.hpp"
#include "connlab/operators.hpp"
#include "connlab/spectra.hpp"
#include "connlab/waves.hpp"

namespace py = pybind11;
using namespace connlab;

namespace {

py::array_t<long long> int_array(const IntMat& m) {
    py::array_t<long long> a({m.rows(), m.cols()});
    auto r = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return a;
}

py::array_t<double> real_array(const RealMat& m) {
    py::array_t<double> a({m.rows(), m.cols()});
    auto r = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return a;
}

RealMat real_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1))
        throw std::invalid_argument("expected a square 2-d array");
    RealMat m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    auto r = a.unchecked<2>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i)
        for (py::ssize_t j = 0; j < a.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
    return m;
}

std::vector<double> vec_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
    std::vector<double> v(static_cast<std::size_t>(a.shape(0)));
    auto r = a.unchecked<1>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i) v[static_cast<std::size_t>(i)] = r(i);
    return v;
}

py::dict spectrum_dict(const Spectrum& s) {
    py::dict d;
    d["values"] = s.values;
    d["cumulative"] = s.cumulative;
    d["residual_bound"] = s.residual_bound;
    return d;
}

Graph graph_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g;
    g.n_vertices = n;
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("loops are not allowed");
        if (a > b) std::swap(a, b);
        g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

std::pair<std::string, std::string> rational_parts(const Rational& q) {
    return {q.get_num().get_str(), q.get_den().get_str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "connection, Green, Dirac and Hodge operators of finite abstract "
              "simplicial complexes, with spectral and dynamical verification tools";

    py::class_<Complex>(m, "Complex")
        .def_static(
            "closure",
            [](const std::vector<std::vector<Vertex>>& sets, std::size_t cap) {
                return Complex::closure(sets, cap);
            },
            py::arg("sets"), py::arg("cap") = Complex::kDefaultCap)
        .def_static(
            "whitney",
            [](int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
               std::size_t cap) { return Complex::whitney(graph_from_edges(n, edges), cap); },
            py::arg("n"), py::arg("edges"), py::arg("cap") = Complex::kDefaultCap)
        .def_static(
            "one_skeleton",
            [](int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
               std::size_t cap) {
                return Complex::one_skeleton(graph_from_edges(n, edges), cap);
            },
            py::arg("n"), py::arg("edges"), py::arg("cap") = Complex::kDefaultCap)
        .def_static("random", &Complex::random, py::arg("n_vertices"),
                    py::arg("n_edges"), py::arg("seed"),
                    py::arg("cap") = Complex::kDefaultCap)
        .def("__len__", &Complex::size)
        .def("simplices",
             [](const Complex& g) {
                 std::vector<std::vector<Vertex>> out;
                 for (const Simplex& s : g.simplices()) out.push_back(s.vertices());
                 return out;
             })
        .def("dimension", &Complex::dimension)
        .def("f_vector", [](const Complex& g) { return g.f_vector().counts; })
        .def("euler_characteristic", &Complex::euler_characteristic)
        .def("fermi_characteristic", &Complex::fermi_characteristic)
        .def("connected", &Complex::connected)
        .def("vertex_set", &Complex::vertex_set)
        .def("index_of",
             [](const Complex& g, const std::vector<Vertex>& s) -> py::object {
                 const auto idx = g.index_of(Simplex(s));
                 if (!idx) return py::none();
                 return py::int_(*idx);
             })
        .def("star", &Complex::star)
        .def("core", &Complex::core)
        .def("is_open", &Complex::is_open)
        .def("is_closed", &Complex::is_closed)
        .def("maximal_simplices", &Complex::maximal_simplices)
        .def("__repr__", [](const Complex& g) {
            return "<Complex with " + std::to_string(g.size()) + " simplices>";
        });

    py::class_<SimplicialMap>(m, "SimplicialMap")
        .def(py::init([](const Complex& g, const std::vector<Vertex>& image) {
                 return validate_map(g, image);
             }),
             py::arg("complex"), py::arg("image"))
        .def_property_readonly("domain", &SimplicialMap::domain)
        .def_property_readonly("image", &SimplicialMap::image)
        .def("__call__", &SimplicialMap::apply)
        .def("is_automorphism", &SimplicialMap::is_automorphism);

    // operator matrices
    m.def("connection_matrix",
          [](const Complex& g) { return int_array(connection_matrix(g)); });
    m.def("green_matrix", [](const Complex& g) { return int_array(green_matrix(g)); });
    m.def("exterior_derivative",
          [](const Complex& g) { return int_array(exterior_derivative(g)); });
    m.def("dirac", [](const Complex& g) { return int_array(dirac(g)); });
    m.def("hodge", [](const Complex& g) { return int_array(hodge(g)); });
    m.def("hodge_block",
          [](const Complex& g, int k) { return int_array(hodge_block(g, k)); });
    m.def("boundary_sign", [](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
        return boundary_sign(Simplex(x), Simplex(y));
    });
    m.def("connection_degrees", &connection_degrees);
    m.def("dirac_degrees", &dirac_degrees);

    // exact arithmetic
    m.def("det_connection", [](const Complex& g) {
        return py::cast(det_exact(connection_matrix(g)).get_str());
    });
    m.def("betti", &betti);
    m.def("analytic_torsion",
          [](const Complex& g) { return rational_parts(analytic_torsion(g)); });
    m.def("mckean_singer_check", [](const Complex& g, int n_max) {
        const auto rep = mckean_singer_check(g, n_max);
        py::dict d;
        d["pass"] = rep.pass;
        std::vector<std::string> traces;
        for (const auto& t : rep.supertraces) traces.push_back(t.get_str());
        d["supertraces"] = traces;
        d["str_identity"] = rep.str_identity;
        return d;
    }, py::arg("complex"), py::arg("n_max") = 5);

    // spectra
    m.def(
        "eigh",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
           bool with_vectors) { return spectrum_dict(spectrum_of(real_from_array(a), with_vectors)); },
        py::arg("a"), py::arg("with_vectors") = true);
    m.def("spectrum", [](const Complex& g, const std::string& name) {
        IntMat mat;
        if (name == "L") mat = connection_matrix(g);
        else if (name == "g") mat = green_matrix(g);
        else if (name == "D") mat = dirac(g);
        else if (name == "H") mat = hodge(g);
        else throw std::invalid_argument("operator must be one of L, g, D, H");
        return spectrum_dict(spectrum_of(to_real(mat)));
    });
    m.def("signature", [](const std::vector<double>& values, double zero_tol) {
        const Signature s = signature(spectrum_from_values(values), zero_tol);
        return py::make_tuple(s.positives, s.negatives, s.zeros);
    }, py::arg("values"), py::arg("zero_tol") = 1e-8);
    m.def("interlace_check", [](const std::vector<double>& outer,
                                const std::vector<double>& inner, double tol) {
        return interlace_check(spectrum_from_values(outer), spectrum_from_values(inner), tol);
    }, py::arg("outer"), py::arg("inner"), py::arg("tol") = 1e-8);
    m.def("loewner_margins",
          [](const std::vector<double>& a, const std::vector<double>& b) {
              return loewner_margins(spectrum_from_values(a), spectrum_from_values(b));
          });
    m.def("zeta", [](const std::vector<double>& values, double s, double zero_tol) {
        return zeta(spectrum_from_values(values), s, zero_tol);
    }, py::arg("values"), py::arg("s"), py::arg("zero_tol") = 1e-8);

    // dynamics
    m.def("find_automorphisms",
          [](const Complex& g, std::size_t limit, std::size_t vertex_cap) {
              return find_automorphisms(g, limit, vertex_cap);
          },
          py::arg("complex"), py::arg("limit") = 0, py::arg("vertex_cap") = 10);
    m.def("koopman",
          [](const Complex& g, const SimplicialMap& t) { return int_array(koopman(g, t)); });
    m.def("fixed_points", [](const Complex& g, const SimplicialMap& t) {
        const auto rep = fixed_points(g, t);
        py::dict d;
        d["fixed"] = rep.fixed;
        d["indices"] = rep.indices;
        d["index_sum"] = rep.index_sum;
        return d;
    });
    m.def("lefschetz_number", &lefschetz_number);
    m.def("verify_lefschetz", [](const Complex& g, const SimplicialMap& t) {
        const auto rep = verify_lefschetz(g, t);
        py::dict d;
        d["index_sum"] = rep.index_sum;
        d["koopman_supertrace"] = rep.koopman_supertrace;
        d["lefschetz"] = rep.lefschetz;
        d["pass"] = rep.pass;
        return d;
    });
    m.def("attractor", [](const Complex& g, const SimplicialMap& t) {
        const auto rep = attractor(g, t);
        py::dict d;
        d["attractor"] = rep.attractor;
        d["closed"] = rep.closed;
        d["invariant"] = rep.invariant;
        d["bijective"] = rep.bijective;
        d["index_sums_agree"] = rep.index_sums_agree;
        d["lefschetz_agree"] = rep.lefschetz_agree;
        d["pass"] = rep.pass;
        return d;
    });
    m.def("heat_deformation_check",
          [](const Complex& g, const SimplicialMap& t, const std::vector<double>& times,
             double tol) {
              const auto rep = heat_deformation_check(g, t, times, tol);
              py::dict d;
              d["pass"] = rep.pass;
              d["deviations"] = rep.deviations;
              return d;
          },
          py::arg("complex"), py::arg("map"), py::arg("times"), py::arg("tol") = 1e-8);
    m.def("dynamical_matrices", [](const Complex& g, const SimplicialMap& t) {
        const auto dm = dynamical_matrices(g, t);
        py::dict d;
        d["L_T"] = int_array(dm.l_t);
        d["g_T"] = int_array(dm.g_t);
        d["d_T"] = int_array(dm.d_t);
        d["D_T"] = int_array(dm.dirac_t);
        return d;
    });
    m.def("dynamical_zeta", [](const Complex& g, const SimplicialMap& t, int order) {
        const auto dz = dynamical_zeta(g, t, order);
        py::dict d;
        auto rational_strings = [](const std::vector<Rational>& v) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& q : v) out.push_back(rational_parts(q));
            return out;
        };
        d["series"] = rational_strings(dz.series);
        d["numerator"] = rational_strings(dz.numerator);
        d["denominator"] = rational_strings(dz.denominator);
        d["lefschetz_numbers"] = dz.lefschetz_numbers;
        d["series_matches_closed_form"] = dz.series_matches_closed_form;
        return d;
    });

    // waves
    m.def("wave_solve",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
             const py::array_t<double, py::array::c_style | py::array::forcecast>& u0,
             const py::array_t<double, py::array::c_style | py::array::forcecast>& v0,
             double t) {
              const WaveState s =
                  wave_solve(real_from_array(a), vec_from_array(u0), vec_from_array(v0), t);
              return py::make_tuple(s.u, s.v);
          });
    m.def("boundary_solve",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
             double c,
             const py::array_t<double, py::array::c_style | py::array::forcecast>& u0,
             const py::array_t<double, py::array::c_style | py::array::forcecast>& u1) {
              return boundary_solve(real_from_array(a), c, vec_from_array(u0),
                                    vec_from_array(u1));
          });
    m.def("symplectic_evolve",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
             const py::array_t<double, py::array::c_style | py::array::forcecast>& u0,
             const py::array_t<double, py::array::c_style | py::array::forcecast>& v0,
             std::size_t steps) {
              const WaveState s = symplectic_evolve(
                  real_from_array(a), WaveState{vec_from_array(u0), vec_from_array(v0)},
                  steps);
              return py::make_tuple(s.u, s.v);
          });
    m.def("causality_check",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
             std::size_t source, std::size_t steps) {
              const auto rep = causality_check(real_from_array(a), source, steps);
              py::dict d;
              d["pass"] = rep.pass;
              d["worst_leak"] = rep.worst_leak;
              return d;
          });
    m.def("chebyshev_series_check",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& a,
             int order) {
              const auto rep = chebyshev_series_check(real_from_array(a), order);
              py::dict d;
              d["pass"] = rep.pass;
              d["max_recurrence_residual"] = rep.max_recurrence_residual;
              d["max_scalar_deviation"] = rep.max_scalar_deviation;
              return d;
          });

    // harness
    auto scan_config = [](long long trials, std::uint64_t seed, double tol,
                          bool connected_only) {
        ScanConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.connected_only = connected_only;
        return cfg;
    };
    m.def("scan_loewner",
          [scan_config](long long trials, std::uint64_t seed, double tol) {
              return scan_loewner(scan_config(trials, seed, tol, false)).full_json().dump();
          },
          py::arg("trials") = 500, py::arg("seed") = 1, py::arg("tol") = 1e-9);
    m.def("scan_green_top",
          [scan_config](long long trials, std::uint64_t seed, double tol) {
              return scan_green_top(scan_config(trials, seed, tol, true)).full_json().dump();
          },
          py::arg("trials") = 500, py::arg("seed") = 1, py::arg("tol") = 1e-9);
    m.def("scan_spectral_radius",
          [scan_config](long long trials, std::uint64_t seed, double tol) {
              return scan_spectral_radius(scan_config(trials, seed, tol, false))
                  .full_json()
                  .dump();
          },
          py::arg("trials") = 500, py::arg("seed") = 1, py::arg("tol") = 1e-9);
    m.def("verify_all",
          [scan_config](long long trials, std::uint64_t seed, double tol) {
              return verify_all(scan_config(trials, seed, tol, false)).full_json().dump();
          },
          py::arg("trials") = 100, py::arg("seed") = 1, py::arg("tol") = 1e-9);
    m.def("emit_figures", [](const Complex& g, const std::string& prefix) {
        return emit_figures(g, prefix);
    });
    m.def("parse_complex", &parse_complex, py::arg("text"), py::arg("auto_close") = false,
          py::arg("cap") = Complex::kDefaultCap);
    m.def("complex_to_text", &complex_to_text);
}
