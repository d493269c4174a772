#pragma once

/**
 * @file solver.hpp
 * @brief Numerical solutions of the target equation on small finite carriers.
 *
 * Unknowns are the 2n values (g_0..g_{n-1}, f_0..f_{n-1}); each pair (x, y)
 * gives one quadratic equation
 *   g(x sigma(y)) - g(x)g(y) + f(x)f(y) - alpha f(x sigma(y)) = 0.
 * The system is solved by damped Gauss-Newton on its realification (4n real
 * unknowns, 2n^2 real equations), least-squares steps via a complete
 * orthogonal decomposition so rank-deficient Jacobians on positive-dimensional
 * components still give the minimum-norm step. Starts are random points in
 * the disk of radius 3 plus every family construction available on the
 * carrier.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gcal/classify.hpp"

namespace gcal {

struct SolverConfig {
    std::size_t max_order = 4;
    std::size_t restarts = 2000;
    double newton_tol = 1e-12;
    std::size_t newton_max_iters = 100;
    double dedup_radius = 1e-6;
    std::uint64_t seed = 0;
    double start_radius = 3.0;
    std::size_t max_halvings = 40;

    void validate() const {
        if (max_order == 0 || newton_max_iters == 0 || !(newton_tol > 0) || !(dedup_radius > 0) ||
            !(start_radius > 0))
            throw std::invalid_argument("solver configuration fields must be positive");
    }
};

struct SolvedPoint {
    FiniteFunction<Complex> g;
    FiniteFunction<Complex> f;
    double residual = 0;
    bool non_isolated = false;
    bool seeded = false;  // first reached from a family construction
};

struct SolutionSet {
    Complex alpha;
    std::vector<SolvedPoint> solutions;  // canonical order
    std::size_t converged_starts = 0;
    std::size_t failed_starts = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Start i of a run is generated by mt19937_64 seeded with splitmix64(seed + i);
/// uniforms take the top 53 bits so the stream does not depend on the
/// standard library's distribution implementations.
class StartGenerator {
public:
    StartGenerator(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(seed + index)) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    Complex in_disk(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double theta = 2 * std::numbers::pi * uniform();
        return std::polar(r, theta);
    }

private:
    std::mt19937_64 engine_;
};

class System {
public:
    System(const FiniteSemigroup& s, const Permutation& sigma, Complex alpha) : n_(s.order()), alpha_(alpha) {
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y) xsy_.push_back(s.compose(x, sigma(y)));
    }

    std::size_t unknowns() const { return 2 * n_; }
    std::size_t equations() const { return n_ * n_; }

    Eigen::VectorXcd evaluate(const Eigen::VectorXcd& z) const {
        Eigen::VectorXcd out(equations());
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y) {
                const auto k = x * n_ + y;
                const auto p = xsy_[k];
                out[k] = z[p] - z[x] * z[y] + z[n_ + x] * z[n_ + y] - alpha_ * z[n_ + p];
            }
        return out;
    }

    Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& z) const {
        Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(equations(), unknowns());
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y) {
                const auto k = static_cast<Eigen::Index>(x * n_ + y);
                const auto p = xsy_[x * n_ + y];
                j(k, p) += 1.0;
                j(k, x) -= z[y];
                j(k, y) -= z[x];
                j(k, n_ + x) += z[n_ + y];
                j(k, n_ + y) += z[n_ + x];
                j(k, n_ + p) -= alpha_;
            }
        return j;
    }

private:
    std::size_t n_;
    Complex alpha_;
    std::vector<std::size_t> xsy_;
};

inline Eigen::MatrixXd realify(const Eigen::MatrixXcd& j) {
    const auto r = j.rows(), c = j.cols();
    Eigen::MatrixXd out(2 * r, 2 * c);
    out.topLeftCorner(r, c) = j.real();
    out.topRightCorner(r, c) = -j.imag();
    out.bottomLeftCorner(r, c) = j.imag();
    out.bottomRightCorner(r, c) = j.real();
    return out;
}

inline Eigen::VectorXd realify(const Eigen::VectorXcd& v) {
    Eigen::VectorXd out(2 * v.size());
    out.head(v.size()) = v.real();
    out.tail(v.size()) = v.imag();
    return out;
}

inline double max_abs(const Eigen::VectorXcd& v) {
    double m = 0;
    for (Eigen::Index k = 0; k < v.size(); ++k) m = std::max(m, std::abs(v[k]));
    return m;
}

/// Damped Gauss-Newton. Iterates until the step stalls rather than stopping
/// at the tolerance: near a singular root convergence is only linear, and a
/// point with a tiny residual can still be far from the root it approaches.
inline std::optional<Eigen::VectorXcd> newton(const System& sys, Eigen::VectorXcd z, const SolverConfig& cfg) {
    const auto m = static_cast<Eigen::Index>(sys.unknowns());
    auto value = sys.evaluate(z);
    double norm = value.norm();
    for (std::size_t iter = 0; iter < cfg.newton_max_iters && norm > 0; ++iter) {
        const Eigen::MatrixXd jr = realify(sys.jacobian(z));
        const Eigen::VectorXd step = jr.completeOrthogonalDecomposition().solve(-realify(value));
        Eigen::VectorXcd dz(m);
        for (Eigen::Index k = 0; k < m; ++k) dz[k] = Complex(step[k], step[m + k]);

        double t = 1.0;
        bool improved = false;
        for (std::size_t h = 0; h <= cfg.max_halvings; ++h, t /= 2) {
            Eigen::VectorXcd trial = z + t * dz;
            auto trial_value = sys.evaluate(trial);
            const double trial_norm = trial_value.norm();
            if (std::isfinite(trial_norm) && trial_norm < norm) {
                z = std::move(trial);
                value = std::move(trial_value);
                norm = trial_norm;
                improved = true;
                break;
            }
        }
        if (!improved || t * dz.norm() <= 1e-15 * (1 + z.norm())) break;
    }
    if (!(max_abs(value) <= cfg.newton_tol)) return std::nullopt;
    return z;
}

/// Rank deficiency of the complex Jacobian (2n columns).
inline bool rank_deficient(const System& sys, const Eigen::VectorXcd& z) {
    const Eigen::MatrixXcd j = sys.jacobian(z);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(j);
    const auto& sv = svd.singularValues();
    const double top = sv.size() ? sv[0] : 0;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > 1e-8 * std::max(top, 1.0)) ++rank;
    return rank < static_cast<Eigen::Index>(sys.unknowns());
}

inline Eigen::VectorXcd stack(const FiniteFunction<Complex>& g, const FiniteFunction<Complex>& f) {
    const auto n = static_cast<Eigen::Index>(g.size());
    Eigen::VectorXcd z(2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        z[k] = g(static_cast<std::size_t>(k));
        z[n + k] = f(static_cast<std::size_t>(k));
    }
    return z;
}

inline bool lexicographic_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
        if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
    }
    return false;
}

}  // namespace detail

/// Pairs built from every family available on s, used as deterministic starts.
inline std::vector<SolutionPair<FiniteSemigroup, Complex>> seeded_family_pairs(const FiniteSemigroup& s,
                                                                               const Permutation& sigma,
                                                                               Complex alpha, std::uint64_t seed) {
    using D = FamilyDescriptor<FiniteSemigroup, Complex>;
    const CharacterTable<Complex> table(s, sigma);
    std::vector<SolutionPair<FiniteSemigroup, Complex>> out;
    auto add = [&](const D& d) {
        try {
            out.push_back(construct(s, sigma, d));
        } catch (const std::invalid_argument&) {
        }
    };

    detail::StartGenerator rng(seed, 0xF00Dull);
    std::vector<Complex> random_values(s.order());
    for (auto& v : random_values) v = rng.in_disk(1.0) + Complex(0.5, 0);

    // families 1-3
    if (near(alpha, Complex(1)) || near(alpha, Complex(-1))) {
        auto d = D::make(1, alpha);
        d.free_function = FiniteFunction<Complex>(random_values);
        add(d);
    }
    const auto sq = square(s);
    std::vector<Complex> off_square;
    for (std::size_t x = 0; x < s.order(); ++x)
        if (!sq.contains(x)) off_square.push_back(random_values[x]);
    if (!off_square.empty()) {
        for (int tag : {2, 3}) {
            auto d = D::make(tag, alpha);
            d.free_function = vanishing_on_square(s, off_square);
            add(d);
        }
    }
    const auto& even = table.even();
    for (const auto& chi : even)
        for (Complex q : {Complex(0), Complex(1), alpha, -alpha})
            for (int branch : {1, -1}) {
                auto d = D::make(4, alpha, q, branch);
                d.chi = chi;
                add(d);
            }
    for (std::size_t i = 0; i < even.size(); ++i)
        for (std::size_t j = 0; j < even.size(); ++j) {
            if (i == j) continue;
            for (Complex q : {Complex(0), Complex(1), Complex(2)})
                for (int branch : {1, -1}) {
                    auto d = D::make(5, alpha, q, branch);
                    d.chi1 = even[i];
                    d.chi2 = even[j];
                    add(d);
                }
            auto d6 = D::make(6, alpha);
            d6.chi1 = even[i];
            d6.chi2 = even[j];
            add(d6);
        }
    for (const auto& chi : even)
        for (int branch : {1, -1}) {
            auto d = D::make(7, alpha, Complex(0), branch);
            d.chi = chi;
            add(d);
            // a non-zero rho on P_chi when one exists
            const auto sets = null_sets(s, chi);
            if (!sets.p_chi.empty()) {
                std::vector<Complex> rho(s.order(), Complex(0));
                for (auto p : sets.p_chi) rho[p] = Complex(1, 0);
                d.h_spec = HSpec<FiniteSemigroup, Complex>{constant_function<Complex>(s, Complex(0)),
                                                          FiniteFunction<Complex>(rho)};
                add(d);
            }
        }
    for (const auto& chi : table.nonzero()) {
        auto d = D::make(8, alpha);
        d.chi = chi;
        add(d);
    }
    return out;
}

/**
 * Converged, deduplicated solutions from cfg.restarts random starts plus the
 * seeded family pairs. Deterministic for a fixed seed.
 */
inline SolutionSet find_solutions(const FiniteSemigroup& s, const Permutation& sigma, Complex alpha,
                                  const SolverConfig& cfg) {
    cfg.validate();
    if (s.order() > cfg.max_order)
        throw std::length_error("order " + std::to_string(s.order()) + " exceeds solver bound " +
                                std::to_string(cfg.max_order));
    const detail::System sys(s, sigma, alpha);
    const auto unknowns = static_cast<Eigen::Index>(sys.unknowns());
    const std::size_t n = s.order();

    struct Candidate {
        Eigen::VectorXcd z;
        bool seeded;
    };
    std::vector<Candidate> found;
    SolutionSet out;
    out.alpha = alpha;

    for (const auto& pair : seeded_family_pairs(s, sigma, alpha, cfg.seed)) {
        if (auto z = detail::newton(sys, detail::stack(pair.g, pair.f), cfg)) {
            found.push_back({std::move(*z), true});
            ++out.converged_starts;
        } else {
            ++out.failed_starts;
        }
    }
    for (std::size_t i = 0; i < cfg.restarts; ++i) {
        detail::StartGenerator rng(cfg.seed, i);
        Eigen::VectorXcd z(unknowns);
        for (Eigen::Index k = 0; k < unknowns; ++k) z[k] = rng.in_disk(cfg.start_radius);
        if (auto root = detail::newton(sys, std::move(z), cfg)) {
            found.push_back({std::move(*root), false});
            ++out.converged_starts;
        } else {
            ++out.failed_starts;
        }
    }

    std::stable_sort(found.begin(), found.end(),
                     [](const Candidate& a, const Candidate& b) { return detail::lexicographic_less(a.z, b.z); });
    std::vector<Candidate> kept;
    for (auto& c : found) {
        bool duplicate = false;
        for (auto& k : kept)
            if ((c.z - k.z).cwiseAbs().maxCoeff() < cfg.dedup_radius) {
                if (c.seeded && !k.seeded) k = c;  // constructed values are the better representative
                duplicate = true;
                break;
            }
        if (!duplicate) kept.push_back(std::move(c));
    }

    for (const auto& c : kept) {
        SolvedPoint p;
        std::vector<Complex> g(n), f(n);
        for (std::size_t k = 0; k < n; ++k) {
            g[k] = c.z[static_cast<Eigen::Index>(k)];
            f[k] = c.z[static_cast<Eigen::Index>(n + k)];
        }
        p.g = FiniteFunction<Complex>(std::move(g));
        p.f = FiniteFunction<Complex>(std::move(f));
        // independent re-verification through the analysis module
        p.residual = residual(s, sigma, alpha, p.g, p.f).max_residual;
        if (p.residual > cfg.newton_tol) continue;
        p.non_isolated = detail::rank_deficient(sys, c.z);
        p.seeded = c.seeded;
        out.solutions.push_back(std::move(p));
    }
    return out;
}

struct CompletenessReport {
    std::size_t solutions = 0;
    std::size_t non_isolated = 0;
    std::map<int, std::size_t> by_family;
    std::vector<SolvedPoint> unclassified;
    std::size_t seeded_total = 0;
    std::size_t seeded_missed = 0;  // constructible pairs with no returned solution within dedup_radius

    bool ok() const { return unclassified.empty() && seeded_missed == 0; }
};

/// Classifies every solution found; lists the unclassified ones and checks
/// that every seeded family pair was recovered.
inline CompletenessReport completeness_check(const FiniteSemigroup& s, const Permutation& sigma, Complex alpha,
                                             const SolverConfig& cfg) {
    const auto set = find_solutions(s, sigma, alpha, cfg);
    const CharacterTable<Complex> table(s, sigma);
    CompletenessReport report;
    report.solutions = set.solutions.size();
    for (const auto& p : set.solutions) {
        if (p.non_isolated) ++report.non_isolated;
        const auto result = classify(s, sigma, alpha, p.g, p.f, table);
        if (result.family_tag) ++report.by_family[*result.family_tag];
        else report.unclassified.push_back(p);
    }
    for (const auto& pair : seeded_family_pairs(s, sigma, alpha, cfg.seed)) {
        ++report.seeded_total;
        const auto target = detail::stack(pair.g, pair.f);
        const bool hit = std::any_of(set.solutions.begin(), set.solutions.end(), [&](const SolvedPoint& p) {
            return (detail::stack(p.g, p.f) - target).cwiseAbs().maxCoeff() < cfg.dedup_radius;
        });
        if (!hit) ++report.seeded_missed;
    }
    return report;
}

}  // namespace gcal
