#include <doctest.h>

#include <cmath>
#include <random>

#include "connlab/operators.hpp"
#include "connlab/waves.hpp"

using namespace connlab;

namespace {

const Complex kEdge = Complex::closure({{1, 2}});

std::vector<double> mat_vec(const RealMat& a, const std::vector<double>& x) {
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

// independent oracle: RK4 on the first-order system (u, v)' = (v, -A^2 u)
WaveState rk4_wave(const RealMat& a, std::vector<double> u, std::vector<double> v,
                   double t_end, double h) {
    const RealMat a2 = a * a;
    const auto deriv = [&](const WaveState& s) {
        WaveState d;
        d.u = s.v;
        d.v = mat_vec(a2, s.u);
        for (double& x : d.v) x = -x;
        return d;
    };
    auto axpy = [](const WaveState& s, const WaveState& d, double c) {
        WaveState r = s;
        for (std::size_t i = 0; i < r.u.size(); ++i) {
            r.u[i] += c * d.u[i];
            r.v[i] += c * d.v[i];
        }
        return r;
    };
    WaveState s{std::move(u), std::move(v)};
    const auto steps = static_cast<std::size_t>(std::round(t_end / h));
    const double dt = t_end / static_cast<double>(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const WaveState k1 = deriv(s);
        const WaveState k2 = deriv(axpy(s, k1, dt / 2));
        const WaveState k3 = deriv(axpy(s, k2, dt / 2));
        const WaveState k4 = deriv(axpy(s, k3, dt));
        for (std::size_t i = 0; i < s.u.size(); ++i) {
            s.u[i] += dt / 6 * (k1.u[i] + 2 * k2.u[i] + 2 * k3.u[i] + k4.u[i]);
            s.v[i] += dt / 6 * (k1.v[i] + 2 * k2.v[i] + 2 * k3.v[i] + k4.v[i]);
        }
    }
    return s;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> x(n);
    for (double& v : x) v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    return x;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("wave solution reproduces the initial conditions at t = 0") {
    const RealMat a = to_real(dirac(Complex::whitney(Graph::cycle(4))));
    const auto u0 = random_vector(a.rows(), 1);
    const auto v0 = random_vector(a.rows(), 2);
    const WaveState s = wave_solve(a, u0, v0, 0.0);
    CHECK(max_abs_diff(s.u, u0) <= 1e-10);
    CHECK(max_abs_diff(s.v, v0) <= 1e-10);
}

TEST_CASE("zero operator gives free motion (sinc regularization)") {
    const RealMat a(3, 3);
    const std::vector<double> u0{1, 2, 3}, v0{-1, 0, 2};
    const WaveState s = wave_solve(a, u0, v0, 1.7);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(s.u[i] == doctest::Approx(u0[i] + 1.7 * v0[i]).epsilon(1e-12));
}

TEST_CASE("wave solution against the RK4 oracle") {
    const RealMat a = to_real(dirac(kEdge));
    std::vector<double> u0(3, 0.0), v0(3, 0.0);
    u0[2] = 1.0;  // the edge basis vector
    const double t = std::acos(-1.0) / std::sqrt(2.0);
    const WaveState ours = wave_solve(a, u0, v0, t);
    const WaveState oracle = rk4_wave(a, u0, v0, t, 1e-3);
    CHECK(max_abs_diff(ours.u, oracle.u) <= 1e-6);
    CHECK(max_abs_diff(ours.v, oracle.v) <= 1e-6);
    // cos(t D) flips the sqrt(2) modes: at t = pi/sqrt(2) the edge amplitude
    // returns to -1 (the zero mode of D does not see the edge component)
    CHECK(ours.u[2] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("d'alembert residual via finite differences") {
    for (std::uint64_t seed : {4u, 5u}) {
        const Complex g = Complex::random(5, 6, seed);
        for (const IntMat& m : {dirac(g), connection_matrix(g), green_matrix(g)}) {
            RealMat a = to_real(m);
            const double rho = spectral_radius(a);
            if (rho > 2.0) a = a * (2.0 / rho);
            const EigenSystem es = eigen_system(a);
            const auto u0 = random_vector(a.rows(), seed + 10);
            const auto v0 = random_vector(a.rows(), seed + 20);
            const RealMat a2 = a * a;
            const double h = 1e-4;
            for (double t : {0.3, 1.1}) {
                const auto um = wave_solve(es, u0, v0, t - h).u;
                const auto uc = wave_solve(es, u0, v0, t).u;
                const auto up = wave_solve(es, u0, v0, t + h).u;
                const auto a2u = mat_vec(a2, uc);
                double worst = 0.0;
                for (std::size_t i = 0; i < uc.size(); ++i) {
                    const double second = (up[i] - 2.0 * uc[i] + um[i]) / (h * h);
                    worst = std::max(worst, std::abs(second + a2u[i]));
                }
                CHECK(worst <= 1e-6);
            }
        }
    }
}

TEST_CASE("boundary problem") {
    // A = 0, u1 = u0: the unique initial velocity is zero
    const RealMat zero(3, 3);
    const std::vector<double> u0{1, 0, 2};
    const auto v0 = boundary_solve(zero, 1.0, u0, u0);
    for (double v : v0) CHECK(std::abs(v) <= 1e-12);

    // random boundary data on whitney(C_4)
    const Complex c4 = Complex::whitney(Graph::cycle(4));
    const RealMat a = to_real(dirac(c4));
    const double c = 0.1;
    const auto p = random_vector(a.rows(), 31);
    const auto q = random_vector(a.rows(), 32);
    const auto v = boundary_solve(a, c, p, q);
    const RealMat ca = a * c;
    const WaveState end = wave_solve(ca, p, v, 1.0);
    CHECK(max_abs_diff(end.u, q) <= 1e-8);

    // disconnected complex: transfer between components still has a solution
    const Complex two = Complex::closure({{1, 2}, {3, 4}});
    const RealMat d2 = to_real(dirac(two));
    std::vector<double> src(d2.rows(), 0.0), dst(d2.rows(), 0.0);
    src[0] = 1.0;   // a vertex of the first component
    dst[d2.rows() - 1] = 1.0;  // the other component's edge
    const auto vel = boundary_solve(d2, 0.5, src, dst);
    const WaveState arrived = wave_solve(d2 * 0.5, src, vel, 1.0);
    CHECK(max_abs_diff(arrived.u, dst) <= 1e-8);

    // norm precondition
    RealMat big(1, 1);
    big(0, 0) = 2.0;
    CHECK_THROWS_AS(boundary_solve(big, 1.0, {1.0}, {0.0}), std::domain_error);
}

TEST_CASE("discrete wave map basics") {
    // A = 0: (u,v) -> (-v,u) has period 4
    const RealMat zero(2, 2);
    WaveState s{{1.0, 2.0}, {3.0, -1.0}};
    WaveState t = s;
    for (int k = 0; k < 4; ++k) t = symplectic_step(zero, t);
    CHECK(max_abs_diff(t.u, s.u) == 0.0);
    CHECK(max_abs_diff(t.v, s.v) == 0.0);

    // a step followed by the inverse step is the identity
    const Complex c5 = Complex::whitney(Graph::cycle(5));
    RealMat a = to_real(connection_matrix(c5));
    a = a * (0.5 / spectral_radius(a));
    const auto u0 = random_vector(a.rows(), 8);
    const auto v0 = random_vector(a.rows(), 9);
    const WaveState fwd = symplectic_step(a, {u0, v0});
    // inverse: (u,v) <- (v', 2A v' - u')
    WaveState back;
    back.u = fwd.v;
    back.v = mat_vec(a, fwd.v);
    for (std::size_t i = 0; i < back.v.size(); ++i)
        back.v[i] = 2.0 * back.v[i] - fwd.u[i];
    CHECK(max_abs_diff(back.u, u0) <= 1e-12);
    CHECK(max_abs_diff(back.v, v0) <= 1e-12);

    CHECK_THROWS_AS(symplectic_evolve(to_real(connection_matrix(c5)), {u0, v0}, 1),
                    std::domain_error);
}

TEST_CASE("block map eigenvalues stay on the unit circle") {
    const Complex c5 = Complex::whitney(Graph::cycle(5));
    RealMat a = to_real(connection_matrix(c5));
    a = a * (0.5 / spectral_radius(a));
    const SymplecticSpectrumReport rep = symplectic_spectrum_check(a);
    CHECK(rep.pass);
    CHECK(rep.max_modulus_deviation <= 1e-10);
    CHECK(rep.max_eigen_residual <= 1e-8);
}

TEST_CASE("discrete evolution matches the chebyshev closed form") {
    const Complex c5 = Complex::whitney(Graph::cycle(5));
    for (const IntMat& m : {connection_matrix(c5), dirac(c5)}) {
        RealMat a = to_real(m);
        a = a * (0.45 / spectral_radius(a));
        const EigenSystem es = eigen_system(a);
        const auto u0 = random_vector(a.rows(), 14);
        const auto v0 = random_vector(a.rows(), 15);
        WaveState s{u0, v0};
        for (std::size_t n : {1u, 2u, 7u, 25u}) {
            s = {u0, v0};
            for (std::size_t k = 0; k < n; ++k) s = symplectic_step(a, s);
            const auto closed = chebyshev_closed_form(es, u0, v0, n);
            CHECK(max_abs_diff(s.u, closed) <= 1e-8);
        }
    }
}

TEST_CASE("unitary conjugation of the block map") {
    // A = 0: U = iI
    const UnitaryConjugationReport zero = unitary_conjugation_check(RealMat(2, 2));
    CHECK(zero.pass);

    const RealMat quarter = to_real(connection_matrix(kEdge)) * 0.25;
    const UnitaryConjugationReport rep = unitary_conjugation_check(quarter);
    CHECK(rep.pass);
    CHECK(rep.sum_residual <= 1e-10);
    CHECK(rep.conjugation_residual <= 1e-8);
    CHECK(rep.circle_residual <= 1e-12);

    RealMat big(1, 1);
    big(0, 0) = 1.5;
    CHECK_THROWS_AS(unitary_conjugation_check(big), std::domain_error);
}

TEST_CASE("discrete causality") {
    const Complex c8 = Complex::whitney(Graph::cycle(8));
    RealMat a = to_real(connection_matrix(c8));
    a = a * (0.5 / spectral_radius(a));
    // 0 steps: support is the source itself
    const std::size_t source = 0;
    CHECK(causality_check(a, source, 0).pass);
    CHECK(causality_check(a, source, 1).pass);
    const CausalityReport rep = causality_check(a, source, 6);
    CHECK(rep.pass);
    CHECK(rep.worst_leak <= 1e-14);
    CHECK_THROWS_AS(causality_check(a, 999, 1), std::invalid_argument);
}

TEST_CASE("continuous time has no finite propagation speed") {
    // contrast with the discrete map: at t = 0.1 every simplex of a
    // connected complex already carries amplitude
    const Complex g = Complex::random(7, 14, 21);
    REQUIRE(g.connected());
    const RealMat a = to_real(connection_matrix(g));
    std::vector<double> u0(a.rows(), 0.0), v0(a.rows(), 0.0);
    u0[0] = 1.0;
    const WaveState s = wave_solve(a, u0, v0, 0.1);
    for (double x : s.u) CHECK(std::abs(x) > 1e-12);
}

TEST_CASE("chebyshev recurrence against functional calculus") {
    const RealMat quarter = to_real(connection_matrix(kEdge)) * 0.25;
    const ChebyshevReport rep = chebyshev_series_check(quarter, 5);
    CHECK(rep.pass);
    CHECK(rep.max_recurrence_residual <= 1e-9);
    // the three scalar discretizations agree through second order
    CHECK(rep.max_scalar_deviation <= 100.0 * 0.01 * 0.01 * 0.01);

    const Complex c5 = Complex::whitney(Graph::cycle(5));
    RealMat a = to_real(dirac(c5));
    a = a * (0.9 / spectral_radius(a));
    CHECK(chebyshev_series_check(a, 8).pass);
}
