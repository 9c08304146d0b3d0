#include "connlab/waves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace connlab {

namespace {

constexpr double kNormMargin = 1e-12;

void require_length(const std::vector<double>& x, std::size_t n, const char* what) {
    if (x.size() != n) throw std::invalid_argument(std::string(what) + " has wrong length");
}

std::vector<double> to_eigenbasis(const EigenSystem& es, const std::vector<double>& x) {
    const std::size_t n = es.values.size();
    std::vector<double> y(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) y[j] += es.vectors(i, j) * x[i];
    return y;
}

std::vector<double> from_eigenbasis(const EigenSystem& es, const std::vector<double>& y) {
    const std::size_t n = es.values.size();
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += es.vectors(i, j) * y[j];
    return x;
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

double spectral_radius(const RealMat& a) {
    return spectrum_of(a, false).spectral_radius();
}

RealMat matrix_function(const EigenSystem& es, double (*f)(double)) {
    const std::size_t n = es.values.size();
    RealMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += es.vectors(i, k) * f(es.values[k]) * es.vectors(j, k);
            m(i, j) = acc;
        }
    return m;
}

WaveState wave_solve(const EigenSystem& es, const std::vector<double>& u0,
                     const std::vector<double>& v0, double t) {
    const std::size_t n = es.values.size();
    require_length(u0, n, "u0");
    require_length(v0, n, "v0");
    const auto cu = to_eigenbasis(es, u0);
    const auto cv = to_eigenbasis(es, v0);
    std::vector<double> yu(n), yv(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lam = es.values[j];
        const double c = std::cos(lam * t);
        const double s = t * sinc(lam * t);  // the removable singularity at 0
        yu[j] = c * cu[j] + s * cv[j];
        yv[j] = -lam * std::sin(lam * t) * cu[j] + c * cv[j];
    }
    return {from_eigenbasis(es, yu), from_eigenbasis(es, yv)};
}

WaveState wave_solve(const RealMat& a, const std::vector<double>& u0,
                     const std::vector<double>& v0, double t) {
    return wave_solve(eigen_system(a), u0, v0, t);
}

std::vector<double> boundary_solve(const RealMat& a, double c,
                                   const std::vector<double>& u0,
                                   const std::vector<double>& u1) {
    const EigenSystem es = eigen_system(a);
    const std::size_t n = es.values.size();
    require_length(u0, n, "u0");
    require_length(u1, n, "u1");
    double rho = 0.0;
    for (double v : es.values) rho = std::max(rho, std::abs(c * v));
    if (rho >= std::acos(-1.0) / 2.0 - kNormMargin)
        throw std::domain_error("spectral radius of c*A must stay below pi/2");
    // v0 = sinc(cA)^{-1} (u1 - cos(cA) u0)
    const auto cu0 = to_eigenbasis(es, u0);
    const auto cu1 = to_eigenbasis(es, u1);
    std::vector<double> y(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lam = c * es.values[j];
        y[j] = (cu1[j] - std::cos(lam) * cu0[j]) / sinc(lam);
    }
    return from_eigenbasis(es, y);
}

WaveState symplectic_step(const RealMat& a, const WaveState& s) {
    const std::size_t n = a.rows();
    require_length(s.u, n, "u");
    require_length(s.v, n, "v");
    WaveState next;
    next.u.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * s.u[j];
        next.u[i] = 2.0 * acc - s.v[i];
    }
    next.v = s.u;
    return next;
}

WaveState symplectic_evolve(const RealMat& a, WaveState s, std::size_t steps) {
    if (spectral_radius(a) >= 1.0 - kNormMargin)
        throw std::domain_error("discrete wave map needs spectral radius below 1");
    for (std::size_t k = 0; k < steps; ++k) s = symplectic_step(a, s);
    return s;
}

std::vector<double> chebyshev_closed_form(const EigenSystem& es,
                                          const std::vector<double>& u0,
                                          const std::vector<double>& v0,
                                          std::size_t steps) {
    const std::size_t n = es.values.size();
    require_length(u0, n, "u0");
    require_length(v0, n, "v0");
    const auto cu = to_eigenbasis(es, u0);
    const auto cv = to_eigenbasis(es, v0);
    std::vector<double> y(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lam = es.values[j];
        if (std::abs(lam) >= 1.0)
            throw std::domain_error("closed form needs spectral radius below 1");
        // per mode: u_k = cos(k theta) a + sin(k theta) b with lambda = cos theta,
        // a = u0, b fixed by u_{-1} = v0
        const double theta = std::acos(lam);
        const double sin_theta = std::sin(theta);
        const double bcoef = (lam * cu[j] - cv[j]) / sin_theta;
        y[j] = std::cos(steps * theta) * cu[j] + std::sin(steps * theta) * bcoef;
    }
    return from_eigenbasis(es, y);
}

UnitaryConjugationReport unitary_conjugation_check(const RealMat& a, double sum_tol,
                                                   double conj_tol) {
    const EigenSystem es = eigen_system(a);
    const std::size_t n = es.values.size();
    double rho = 0.0;
    for (double v : es.values) rho = std::max(rho, std::abs(v));
    if (rho >= 1.0 - kNormMargin)
        throw std::domain_error("unitary conjugation needs spectral radius below 1");

    using Cplx = std::complex<double>;
    // U = A + i sqrt(I - A^2) via functional calculus
    CplxMat u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Cplx acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                const double lam = es.values[k];
                const Cplx mu(lam, std::sqrt(std::max(0.0, 1.0 - lam * lam)));
                acc += es.vectors(i, k) * mu * es.vectors(j, k);
            }
            u(i, j) = acc;
        }
    const CplxMat u_star = [&] {
        CplxMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = std::conj(u(j, i));
        return m;
    }();

    UnitaryConjugationReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rep.sum_residual = std::max(
                rep.sum_residual, std::abs(u(i, j) + u_star(i, j) - Cplx(2.0 * a(i, j))));

    // S = [[U, U*], [I, I]] collects the per-mode eigenvectors (mu, 1) of
    // the block map B = [[2A, -I], [I, 0]]; verify S^{-1} B S = diag(U, U*)
    // by solving S X = B S.
    const std::size_t m2 = 2 * n;
    CplxMat s(m2, m2), bs(m2, m2), diag_uu(m2, m2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s(i, j) = u(i, j);
            s(i, n + j) = u_star(i, j);
            s(n + i, j) = (i == j) ? 1.0 : 0.0;
            s(n + i, n + j) = (i == j) ? 1.0 : 0.0;
            diag_uu(i, j) = u(i, j);
            diag_uu(n + i, n + j) = u_star(i, j);
        }
    // B*S in blocks: top = 2A*(top of S) - (bottom of S), bottom = top of S
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
            Cplx top(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) top += 2.0 * a(i, k) * s(k, j);
            top -= s(n + i, j);
            bs(i, j) = top;
            bs(n + i, j) = s(i, j);
        }

    // complex Gaussian elimination with partial pivoting on [S | BS]
    CplxMat aug(m2, 2 * m2);
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
            aug(i, j) = s(i, j);
            aug(i, m2 + j) = bs(i, j);
        }
    for (std::size_t col = 0; col < m2; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m2; ++r)
            if (std::abs(aug(r, col)) > std::abs(aug(piv, col))) piv = r;
        if (std::abs(aug(piv, col)) == 0.0)
            throw std::runtime_error("conjugation matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * m2; ++j) std::swap(aug(col, j), aug(piv, j));
        const Cplx inv = 1.0 / aug(col, col);
        for (std::size_t j = col; j < 2 * m2; ++j) aug(col, j) *= inv;
        for (std::size_t r = 0; r < m2; ++r) {
            if (r == col) continue;
            const Cplx f = aug(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < 2 * m2; ++j) aug(r, j) -= f * aug(col, j);
        }
    }
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m2; ++j)
            rep.conjugation_residual = std::max(
                rep.conjugation_residual, std::abs(aug(i, m2 + j) - diag_uu(i, j)));

    for (double lam : es.values) {
        const Cplx mu(lam, std::sqrt(std::max(0.0, 1.0 - lam * lam)));
        rep.circle_residual = std::max(rep.circle_residual, std::abs(std::abs(mu) - 1.0));
    }
    rep.pass = rep.sum_residual <= sum_tol && rep.conjugation_residual <= conj_tol;
    return rep;
}

SymplecticSpectrumReport symplectic_spectrum_check(const RealMat& a, double circle_tol) {
    const EigenSystem es = eigen_system(a);
    const std::size_t n = es.values.size();
    double rho = 0.0;
    for (double v : es.values) rho = std::max(rho, std::abs(v));
    if (rho >= 1.0 - kNormMargin)
        throw std::domain_error("block map spectrum check needs spectral radius below 1");

    SymplecticSpectrumReport rep;
    using Cplx = std::complex<double>;
    // eigenpairs of B = [[2A,-I],[I,0]]: for A v = lambda v the vector
    // (mu v, v) is a B-eigenvector when mu^2 - 2 lambda mu + 1 = 0
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = es.values[k];
        const double root = std::sqrt(std::max(0.0, 1.0 - lam * lam));
        for (int sign : {+1, -1}) {
            const Cplx mu(lam, sign * root);
            rep.max_modulus_deviation =
                std::max(rep.max_modulus_deviation, std::abs(std::abs(mu) - 1.0));
            // residual of B (mu v, v)^T - mu (mu v, v)^T; the second block is
            // exactly zero, the first reduces to 2 mu (A v - lambda v)
            double r2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double av = 0.0;
                for (std::size_t j = 0; j < n; ++j) av += a(i, j) * es.vectors(j, k);
                const double diff = av - lam * es.vectors(i, k);
                r2 += std::norm(2.0 * mu * diff);
            }
            rep.max_eigen_residual = std::max(rep.max_eigen_residual, std::sqrt(r2));
        }
    }
    rep.pass = rep.max_modulus_deviation <= circle_tol;
    return rep;
}

CausalityReport causality_check(const RealMat& a, std::size_t source,
                                std::size_t steps, double leak_tol) {
    a.require_square();
    const std::size_t n = a.rows();
    if (source >= n) throw std::invalid_argument("source index out of range");
    if (spectral_radius(a) >= 1.0 - kNormMargin)
        throw std::domain_error("causality check needs spectral radius below 1");

    // BFS distances in the interaction graph (off-diagonal nonzero pattern)
    std::vector<std::size_t> dist(n, n + 1);
    dist[source] = 0;
    std::vector<std::size_t> frontier{source};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : frontier)
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && a(i, j) != 0.0 && dist[j] > dist[i] + 1) {
                    dist[j] = dist[i] + 1;
                    next.push_back(j);
                }
        frontier.swap(next);
    }

    CausalityReport rep;
    rep.steps = steps;
    WaveState s;
    s.u.assign(n, 0.0);
    s.v.assign(n, 0.0);
    s.u[source] = 1.0;
    for (std::size_t k = 0; k <= steps; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            if (dist[i] > k)
                rep.worst_leak = std::max(rep.worst_leak, std::abs(s.u[i]));
        if (k < steps) s = symplectic_step(a, s);
    }
    rep.pass = rep.worst_leak <= leak_tol;
    return rep;
}

ChebyshevReport chebyshev_series_check(const RealMat& a, int order, double mat_tol) {
    const EigenSystem es = eigen_system(a);
    const std::size_t n = es.values.size();
    double rho = 0.0;
    for (double v : es.values) rho = std::max(rho, std::abs(v));
    if (rho >= 1.0 - kNormMargin)
        throw std::domain_error("chebyshev check needs spectral radius below 1");

    ChebyshevReport rep;
    // T_n by recurrence vs cos(n arccos(A)) by functional calculus
    RealMat t_prev = RealMat::identity(n);
    RealMat t_cur = a;
    for (int m = 0; m <= order; ++m) {
        RealMat t_m = m == 0 ? t_prev : t_cur;
        if (m >= 2) {
            RealMat t_next = a * t_cur * 2.0 - t_prev;
            t_prev = t_cur;
            t_cur = t_next;
            t_m = t_cur;
        }
        RealMat exact(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    acc += es.vectors(i, k) * std::cos(m * std::acos(es.values[k])) *
                           es.vectors(j, k);
                exact(i, j) = acc;
            }
        rep.max_recurrence_residual =
            std::max(rep.max_recurrence_residual, max_abs(t_m - exact));
    }

    // scalar agreement of the three time discretizations through O(h^2):
    // exp(-i arcsin(2hx)), exp(-2ihx), and the Cayley transform all expand
    // as 1 - 2ihx - 2h^2x^2 + O(h^3)
    using Cplx = std::complex<double>;
    const double h = 0.01, x = 0.3;
    const Cplx i_unit(0.0, 1.0);
    const Cplx f1 = std::exp(-i_unit * std::asin(2.0 * h * x));
    const Cplx f2 = std::exp(-i_unit * (2.0 * h * x));
    const Cplx f3 = (i_unit + h * x) / (i_unit - h * x);
    const Cplx second_order = 1.0 - 2.0 * i_unit * h * x - 2.0 * h * h * x * x;
    const double budget = 100.0 * h * h * h;
    rep.max_scalar_deviation = std::max(
        {std::abs(f1 - f2), std::abs(f1 - f3), std::abs(f2 - f3),
         std::abs(f1 - second_order), std::abs(f2 - second_order),
         std::abs(f3 - second_order)});
    rep.pass = rep.max_recurrence_residual <= mat_tol && rep.max_scalar_deviation <= budget;
    return rep;
}

}  // namespace connlab
