#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "egonet/distribution.hpp"

namespace egonet {

// Tolerances and iteration budgets shared by all fixed-point solvers, and
// grid resolutions for the parameter searches.
struct SolverSettings {
    double tol = 1e-12;
    std::size_t max_iter = 1'000'000;
    int r_grid = 201;  // grid points for the assortativity search
    int p_grid = 101;  // grid points for transmission-probability sweeps

    void validate() const {
        if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
        if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
        if (r_grid < 2 || p_grid < 2) throw std::invalid_argument("grids need >= 2 points");
    }
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Solutions below this are numerically indistinguishable from the
// subcritical fixed point and are reported as exactly 0.
inline constexpr double kTauFloor = 1e-9;

namespace detail {

inline double ipow(double x, int e) {
    double r = 1.0;
    for (; e > 0; --e) r *= x;
    return r;
}

inline void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
}

// Iterates t <- f(t) from t0 until successive values differ by at most tol.
// direction = -1 requires a nonincreasing trajectory (descent from above to
// the largest fixed point), +1 a nondecreasing one (ascent from below to
// the smallest); any violation indicates a broken map and raises.
template <typename F>
double fixed_point(F&& f, double t0, int direction, const SolverSettings& st,
                   const char* what) {
    double t = t0;
    for (std::size_t i = 0; i < st.max_iter; ++i) {
        double next = f(t);
        if (direction * (next - t) < -1e-12)
            throw ConvergenceError(std::string(what) + ": iteration lost monotonicity");
        if (std::abs(next - t) <= st.tol) return next;
        t = next;
    }
    throw ConvergenceError(std::string(what) + ": no convergence within max_iter");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Extremal bounds
// ---------------------------------------------------------------------------

// The minimum relative giant/outbreak size is 0 at every data level:
// tile the population with bounded components.
inline double tau_min_any_level() { return 0.0; }

// Largest achievable giant fraction when only the mean degree is known:
// connect everything through a spanning line when mu >= 2, otherwise give a
// fraction mu/2 of the nodes degree 2 and leave the rest isolated.
inline double tau_max_mean(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("mean degree must be > 0");
    return mu >= 2.0 ? 1.0 : mu / 2.0;
}

// Largest achievable giant fraction for a known degree distribution.
// Nodes of degree >= 2 are lined up; degree-1 nodes are attached pendant
// while the line nodes have spare capacity. The capacity term
// (mu - p1)/(1 - p0 - p1) - 2 is the mean number of free stubs per line
// node; the bound is clamped to [1 - (p0 + p1), 1]. When everything has
// degree <= 1 all components are bounded, so the fraction is 0.
inline double tau_max_degree(const DegreeDistribution& d) {
    const double p0 = d.mass(0), p1 = d.mass(1);
    const double line = 1.0 - (p0 + p1);
    if (line <= 0.0) return 0.0;
    const double capacity = (d.mean() - p1) / line - 2.0;
    double tau = capacity >= p1 ? 1.0 - p0 : line + capacity;
    return std::clamp(tau, line, 1.0);
}

// Largest achievable major-outbreak size with known mean degree and
// transmission probability p: floor(mu/2) hub nodes adjacent to everyone
// plus one partial hub. An outbreak is major iff the index case infects a
// hub.
inline double tau_epi_max_mean(double mu, double p) {
    if (!(mu > 0.0)) throw std::invalid_argument("mean degree must be > 0");
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    const int k = static_cast<int>(std::floor(mu / 2.0));
    const double alpha = mu / 2.0 - k;
    const double miss = 1.0 - p;
    return (1.0 - alpha) * (1.0 - detail::ipow(miss, k)) +
           alpha * (1.0 - detail::ipow(miss, k + 1));
}

// ---------------------------------------------------------------------------
// Random-network (typical) sizes
// ---------------------------------------------------------------------------

// Largest solution t of 1 - t = exp(-mu t): the giant fraction of an
// Erdos-Renyi network with mean degree mu. Zero iff mu <= 1.
inline double solve_er_giant(double mu, const SolverSettings& st = {}) {
    if (!(mu > 0.0)) throw std::invalid_argument("mean degree must be > 0");
    st.validate();
    if (mu <= 1.0) return 0.0;
    double t = detail::fixed_point([mu](double x) { return 1.0 - std::exp(-mu * x); }, 1.0,
                                   -1, st, "er giant");
    return t < kTauFloor ? 0.0 : t;
}

// Largest solution of 1 - t = exp(-p mu t): the relative final size of a
// major outbreak on an Erdos-Renyi network. Depends only on the product
// p*mu and coincides with solve_er_giant at p = 1.
inline double solve_er_epidemic(double mu, double p, const SolverSettings& st = {}) {
    if (!(mu > 0.0)) throw std::invalid_argument("mean degree must be > 0");
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    return solve_er_giant(mu * p, st);
}

// Mean excess degree E[D(D-1)]/E[D]; the giant of a configuration-model
// network is positive iff this exceeds 1.
inline double mean_excess_degree(const DegreeDistribution& d) {
    const double mu = d.mean();
    if (!(mu > 0.0)) throw std::invalid_argument("degree distribution must have positive mean");
    return d.factorial_moment2() / mu;
}

// Basic reproduction number p * E[D(D-1)]/E[D] for an epidemic with
// transmission probability p on a configuration-model network.
inline double basic_reproduction_number(const DegreeDistribution& d, double p) {
    detail::check_probability(p, "p");
    return p * mean_excess_degree(d);
}

// Giant fraction of a configuration-model network: solve
// 1 - t = rho'(1 - t)/rho'(1) for the largest root, then 1 - rho(1 - t).
inline double solve_config_giant(const DegreeDistribution& d, const SolverSettings& st = {}) {
    st.validate();
    if (mean_excess_degree(d) <= 1.0) return 0.0;
    const double dmu = d.pgf_derivative(1.0);
    auto step = [&](double t) {
        double s = std::clamp(1.0 - t, 0.0, 1.0);
        return 1.0 - d.pgf_derivative(s) / dmu;
    };
    double t = detail::fixed_point(step, 1.0, -1, st, "configuration giant");
    double tau = 1.0 - d.pgf(std::clamp(1.0 - t, 0.0, 1.0));
    return tau < kTauFloor ? 0.0 : tau;
}

// Relative final size of a major outbreak on a configuration-model
// network: solve 1 - t = rho'(1 - p t)/rho'(1), then 1 - rho(1 - p t).
// Reduces to solve_config_giant at p = 1 and is zero iff R0 <= 1.
inline double solve_config_epidemic(const DegreeDistribution& d, double p,
                                    const SolverSettings& st = {}) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    st.validate();
    if (basic_reproduction_number(d, p) <= 1.0) return 0.0;
    const double dmu = d.pgf_derivative(1.0);
    auto step = [&](double t) {
        double s = std::clamp(1.0 - p * t, 0.0, 1.0);
        return 1.0 - d.pgf_derivative(s) / dmu;
    };
    double t = detail::fixed_point(step, 1.0, -1, st, "configuration epidemic");
    double tau = 1.0 - d.pgf(std::clamp(1.0 - p * t, 0.0, 1.0));
    return tau < kTauFloor ? 0.0 : tau;
}

// ---------------------------------------------------------------------------
// Two-class (degree 2 / degree 3) correlated family
// ---------------------------------------------------------------------------

// Extinction probabilities of the two-type outbreak process in the
// 60/40 degree-2/degree-3 network with assortativity r: eta2 (eta3) is the
// probability that an infected degree-2 (degree-3) actor generates only a
// small number of further cases.
struct EtaPair {
    double eta2 = 1.0;
    double eta3 = 1.0;
};

// Componentwise-minimal solution of
//   eta2 = (1-p) + p r eta2 + p (1-r) eta3
//   eta3 = [(1-p) + p (1-r) eta2 + p r eta3]^2
// found by monotone iteration from (0, 0). p2 and p3 describe the
// two-point degree distribution and must sum to 1; the fixed-point system
// itself depends only on r and p.
inline EtaPair solve_eta_system(double p2, double p3, double r, double p,
                                const SolverSettings& st = {}) {
    if (!(p2 >= 0.0 && p3 >= 0.0) || std::abs(p2 + p3 - 1.0) > 1e-9)
        throw std::invalid_argument("class fractions must be >= 0 and sum to 1");
    detail::check_probability(r, "r");
    detail::check_probability(p, "p");
    st.validate();
    double e2 = 0.0, e3 = 0.0;
    for (std::size_t i = 0; i < st.max_iter; ++i) {
        double n2 = (1.0 - p) + p * r * e2 + p * (1.0 - r) * e3;
        double b = (1.0 - p) + p * (1.0 - r) * e2 + p * r * e3;
        double n3 = b * b;
        if (n2 - e2 < -1e-12 || n3 - e3 < -1e-12)
            throw ConvergenceError("eta system: iteration lost monotonicity");
        if (std::abs(n2 - e2) <= st.tol && std::abs(n3 - e3) <= st.tol) return {n2, n3};
        e2 = n2;
        e3 = n3;
    }
    throw ConvergenceError("eta system: no convergence within max_iter");
}

// Relative size of a major outbreak in the two-class family:
//   1 - tau = 0.6 [(1-p) + p r eta2 + p (1-r) eta3]^2
//           + 0.4 [(1-p) + p (1-r) eta2 + p r eta3]^3
// A major outbreak is impossible for p <= 1/2 regardless of r.
inline double outbreak_size_two_class(double r, double p, const SolverSettings& st = {}) {
    detail::check_probability(r, "r");
    detail::check_probability(p, "p");
    if (p <= 0.5) return 0.0;
    EtaPair eta = solve_eta_system(0.6, 0.4, r, p, st);
    double b2 = (1.0 - p) + p * r * eta.eta2 + p * (1.0 - r) * eta.eta3;
    double b3 = (1.0 - p) + p * (1.0 - r) * eta.eta2 + p * r * eta.eta3;
    double tau = 1.0 - 0.6 * b2 * b2 - 0.4 * b3 * b3 * b3;
    tau = std::clamp(tau, 0.0, 1.0);
    return tau < kTauFloor ? 0.0 : tau;
}

struct RMaxResult {
    std::optional<double> r_max;  // absent when no r gives a positive outbreak
    double tau = 0.0;
};

// Grid search over r in [0,1] for the assortativity maximizing the
// two-class outbreak size; ties break toward smaller r.
inline RMaxResult find_r_max(double p, const SolverSettings& st = {}) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    st.validate();
    if (p <= 0.5) return {};
    RMaxResult best;
    for (int i = 0; i < st.r_grid; ++i) {
        double r = static_cast<double>(i) / (st.r_grid - 1);
        double tau = outbreak_size_two_class(r, p, st);
        if (tau > best.tau) best = {r, tau};
    }
    return best;
}

// ---------------------------------------------------------------------------
// Joint single/triangle degree level (clustered networks)
// ---------------------------------------------------------------------------

// Fixed point of the four-equation clustered-network system. g1 (gdelta)
// is the probability that a single edge (triangle) of a random node fails
// to attach it to the giant; h1 (hdelta) the corresponding probabilities
// for a node reached through such an edge/triangle.
struct MillerSolution {
    double g1 = 1.0;
    double h1 = 1.0;
    double gdelta = 1.0;
    double hdelta = 1.0;
    double tau = 0.0;
    bool empty_network = false;  // set when E[D1] = E[Ddelta] = 0
};

// Dominant eigenvalue of the 2x2 next-generation matrix for the clustered
// model; the outbreak is major-capable iff it exceeds 1. When one stub type
// is absent the surviving diagonal entry is the reproduction number.
inline double r0_miller(const JointDegreeDistribution& j, double p) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    const double e1 = j.mean_single(), ed = j.mean_triangle();
    const double tri_factor = 2.0 * p * (1.0 + p - p * p);
    if (e1 <= 0.0 && ed <= 0.0) return 0.0;
    if (e1 <= 0.0) return tri_factor * j.e_triangle_sq_minus_triangle() / ed;
    if (ed <= 0.0) return p * j.e_single_sq_minus_single() / e1;
    const double m11 = p * j.e_single_sq_minus_single() / e1;
    const double m12 = p * j.e_single_triangle() / ed;
    const double m21 = tri_factor * j.e_single_triangle() / e1;
    const double m22 = tri_factor * j.e_triangle_sq_minus_triangle() / ed;
    const double half_diff = (m11 - m22) / 2.0;
    return (m11 + m22) / 2.0 + std::sqrt(half_diff * half_diff + m12 * m21);
}

// Iterates the clustered-network system from h1 = hdelta = 0:
//   g1     = 1 - p + p h1
//   h1     = sum k1 p(k1,kd) g1^{k1-1} gdelta^{kd} / E[D1]
//   gdelta = (1 - p + p hdelta)^2 - 2 p^2 (1-p) hdelta (1 - hdelta)
//   hdelta = sum kd p(k1,kd) g1^{k1} gdelta^{kd-1} / E[Ddelta]
// and evaluates tau = 1 - sum p(k1,kd) g1^{k1} gdelta^{kd}. A stub type
// with zero expectation has its pair pinned to 1 and its equation dropped.
inline MillerSolution solve_miller(const JointDegreeDistribution& j, double p,
                                   const SolverSettings& st = {}) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("p must lie in (0,1]");
    st.validate();
    const double e1 = j.mean_single(), ed = j.mean_triangle();
    MillerSolution sol;
    if (e1 <= 0.0 && ed <= 0.0) {
        sol.empty_network = true;
        return sol;
    }
    if (r0_miller(j, p) <= 1.0) return sol;  // extinction certain: all ones, tau 0

    const bool use1 = e1 > 0.0, used = ed > 0.0;
    double h1 = use1 ? 0.0 : 1.0, hd = used ? 0.0 : 1.0;
    double g1 = 1.0, gd = 1.0;
    auto update_g = [&] {
        g1 = use1 ? 1.0 - p + p * h1 : 1.0;
        if (used) {
            double b = 1.0 - p + p * hd;
            gd = b * b - 2.0 * p * p * (1.0 - p) * hd * (1.0 - hd);
        } else {
            gd = 1.0;
        }
    };
    for (std::size_t i = 0; i < st.max_iter; ++i) {
        update_g();
        double n1 = h1, nd = hd;
        if (use1) {
            n1 = 0.0;
            for (const auto& e : j.entries())
                n1 += e.k1 * e.p * detail::ipow(g1, e.k1 - 1) * detail::ipow(gd, e.kdelta);
            n1 /= e1;
        }
        if (used) {
            nd = 0.0;
            for (const auto& e : j.entries())
                nd += e.kdelta * e.p * detail::ipow(g1, e.k1) * detail::ipow(gd, e.kdelta - 1);
            nd /= ed;
        }
        if (n1 - h1 < -1e-12 || nd - hd < -1e-12)
            throw ConvergenceError("clustered system: iteration lost monotonicity");
        bool done = std::abs(n1 - h1) <= st.tol && std::abs(nd - hd) <= st.tol;
        h1 = n1;
        hd = nd;
        if (done) break;
        if (i + 1 == st.max_iter)
            throw ConvergenceError("clustered system: no convergence within max_iter");
    }
    update_g();
    double keep = 0.0;
    for (const auto& e : j.entries())
        keep += e.p * detail::ipow(g1, e.k1) * detail::ipow(gd, e.kdelta);
    sol.g1 = g1;
    sol.h1 = h1;
    sol.gdelta = gd;
    sol.hdelta = hd;
    sol.tau = std::clamp(1.0 - keep, 0.0, 1.0);
    if (sol.tau < kTauFloor) sol.tau = 0.0;
    return sol;
}

// Giant-component fraction of the clustered model: the p = 1 case of the
// system above.
inline double giant_miller(const JointDegreeDistribution& j, const SolverSettings& st = {}) {
    return solve_miller(j, 1.0, st).tau;
}

}  // namespace egonet
