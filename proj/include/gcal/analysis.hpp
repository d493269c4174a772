#pragma once

/**
 * @file analysis.hpp
 * @brief Residual of g(x sigma(y)) = g(x)g(y) - f(x)f(y) + alpha f(x sigma(y))
 *        and property checkers for the structural lemmas behind the
 *        classification.
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcal/functions.hpp"

namespace gcal {

template <class E>
struct VerificationReport {
    double max_residual = 0;
    std::optional<std::pair<E, E>> worst_pair;
    std::size_t pair_count = 0;
    std::size_t skipped_pairs = 0;  // a value was unknown (outside the window)
    std::string mode;

    bool ok(double tol = kIdentityTolerance) const { return max_residual <= tol; }
};

/// Defect of the target equation at (x, y); nullopt if any value is unknown.
template <Semigroup S, class Sig, class T, class G, class F>
std::optional<T> defect(const S& s, const Sig& sigma, const T& alpha, const G& g, const F& f,
                        const element_t<S>& x, const element_t<S>& y) {
    const auto xsy = s.compose(x, sigma(y));
    auto gxsy = eval(g, xsy);
    auto fxsy = eval(f, xsy);
    auto gx = eval(g, x);
    auto gy = eval(g, y);
    auto fx = eval(f, x);
    auto fy = eval(f, y);
    if (!gxsy || !fxsy || !gx || !gy || !fx || !fy) return std::nullopt;
    return *gxsy - *gx * *gy + *fx * *fy - alpha * *fxsy;
}

/// Max defect over all window pairs.
template <Semigroup S, class Sig, class T, class G, class F>
VerificationReport<element_t<S>> residual(const S& s, const Sig& sigma, const T& alpha, const G& g, const F& f) {
    VerificationReport<element_t<S>> report;
    report.mode = scalar_traits<T>::mode;
    report.max_residual = 0;
    for (const auto& x : s.window())
        for (const auto& y : s.window()) {
            auto d = defect(s, sigma, alpha, g, f, x, y);
            if (!d) {
                ++report.skipped_pairs;
                continue;
            }
            ++report.pair_count;
            const double m = magnitude(*d);
            if (!report.worst_pair || m > report.max_residual) {
                report.max_residual = m;
                report.worst_pair = std::make_pair(x, y);
            }
        }
    return report;
}

/// In exact mode "within tolerance" means exactly zero.
template <class T>
bool residual_acceptable(double max_residual, double tol = kIdentityTolerance) {
    if constexpr (scalar_traits<T>::exact) return max_residual == 0;
    else return max_residual <= tol;
}

namespace detail {

template <class T>
std::optional<T> opt_mul(const std::optional<T>& a, const std::optional<T>& b) {
    if (!a || !b) return std::nullopt;
    return *a * *b;
}

template <class T>
struct PairChecker {
    PropertyReport& report;
    double tol;

    void operator()(const char* property, const std::optional<T>& lhs, const std::optional<T>& rhs,
                    const std::string& where) {
        if (!lhs || !rhs) {
            ++report.skipped;
            return;
        }
        ++report.checked;
        if (!near(*lhs, *rhs, tol)) report.fail(property, where);
    }
};

}  // namespace detail

/**
 * With G = g - alpha f: (1) G(x sigma(y)) = G(y sigma(x)); (2) G(xyz) =
 * G(sigma(xyz)); (3) g^e(x) g^o(yz) = f^e(x) f^o(yz) and
 * g^e(yz) g^o(x) = f^e(yz) f^o(x). If (g, f) is not a solution the
 * hypothesis flag is cleared and nothing is asserted.
 */
template <Semigroup S, class Sig, class T, class G, class F>
PropertyReport check_G_properties(const S& s, const Sig& sigma, const T& alpha, const G& g, const F& f,
                                  double tol = kIdentityTolerance) {
    PropertyReport report;
    report.name = "G-properties";
    report.window_certified = !S::is_finite;
    const auto res = residual(s, sigma, alpha, g, f);
    if (!residual_acceptable<T>(res.max_residual, tol)) {
        report.hypothesis_ok = false;
        report.hypothesis_note = "not a solution (residual " + std::to_string(res.max_residual) + ")";
        return report;
    }
    const auto big_g = lincomb(s, T(1), g, T(0) - alpha, f);
    const auto ge = even_part(s, g, sigma);
    const auto go = odd_part(s, g, sigma);
    const auto fe = even_part(s, f, sigma);
    const auto fo = odd_part(s, f, sigma);
    detail::PairChecker<T> check{report, tol};
    const auto& w = s.window();
    for (const auto& x : w)
        for (const auto& y : w)
            check("(1) G(x sigma(y)) = G(y sigma(x))", eval(big_g, s.compose(x, sigma(y))),
                  eval(big_g, s.compose(y, sigma(x))), format_tuple(s, {x, y}));
    for (const auto& x : w)
        for (const auto& y : w)
            for (const auto& z : w) {
                const auto yz = s.compose(y, z);
                const auto xyz = s.compose(x, yz);
                const auto where = format_tuple(s, {x, y, z});
                check("(2) G(xyz) = G*(xyz)", eval(big_g, xyz), eval(big_g, sigma(xyz)), where);
                check("(3) g^e(x)g^o(yz) = f^e(x)f^o(yz)", detail::opt_mul(eval(ge, x), eval(go, yz)),
                      detail::opt_mul(eval(fe, x), eval(fo, yz)), where);
                check("(3) g^e(yz)g^o(x) = f^e(yz)f^o(x)", detail::opt_mul(eval(ge, yz), eval(go, x)),
                      detail::opt_mul(eval(fe, yz), eval(fo, x)), where);
            }
    return report;
}

/// c1 f + c2 g = 0 when dependent.
template <class T>
struct LinearDependence {
    bool dependent = false;
    T c1 = T(0);
    T c2 = T(0);
    double ratio = 0;  // sigma_min / sigma_max of the 2 x n value matrix (0 when dependent in exact mode)
};

/**
 * Rank of the 2 x n matrix with rows f and g. Float mode compares
 * sigma_min / sigma_max against tol; the singular values come from
 * sigma_min * sigma_max = |g| |f - proj_g f| and
 * sigma_min^2 + sigma_max^2 = |f|^2 + |g|^2. Exact mode tests every 2 x 2 minor.
 */
template <Semigroup S, class F, class G>
LinearDependence<value_of_t<F>> check_linear_dependence(const S& s, const F& f, const G& g,
                                                        double tol = kIdentityTolerance) {
    using T = value_of_t<F>;
    std::vector<T> fv, gv;
    for (const auto& x : s.window()) {
        auto a = eval(f, x);
        auto b = eval(g, x);
        if (!a || !b) continue;
        fv.push_back(*a);
        gv.push_back(*b);
    }
    LinearDependence<T> out;
    const std::size_t n = fv.size();
    std::size_t pivot = 0;
    double g_max = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (magnitude(gv[k]) > g_max) {
            g_max = magnitude(gv[k]);
            pivot = k;
        }

    if constexpr (scalar_traits<T>::exact) {
        out.dependent = true;
        for (std::size_t i = 0; i < n && out.dependent; ++i)
            for (std::size_t j = i + 1; j < n && out.dependent; ++j)
                if (!(fv[i] * gv[j] - fv[j] * gv[i]).is_zero()) out.dependent = false;
        out.ratio = out.dependent ? 0.0 : 1.0;
    } else {
        using LD = long double;
        LD ff = 0, gg = 0;
        std::complex<LD> gf = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const auto a = scalar_traits<T>::to_complex(fv[k]);
            const auto b = scalar_traits<T>::to_complex(gv[k]);
            ff += std::norm(a);
            gg += std::norm(b);
            gf += std::conj(b) * a;
        }
        const LD total = ff + gg;
        if (total == 0 || ff == 0 || gg == 0) {
            out.ratio = 0;
        } else {
            const LD perp = std::max<LD>(ff - std::norm(gf) / gg, 0);  // |f - proj_g f|^2
            const LD prod = std::sqrt(gg * perp);                       // sigma_min * sigma_max
            const LD disc = std::max<LD>(total * total - 4 * prod * prod, 0);
            const LD smax2 = (total + std::sqrt(disc)) / 2;
            out.ratio = static_cast<double>(prod / smax2);
        }
        out.dependent = out.ratio < tol;
    }
    if (!out.dependent) return out;

    const bool f_zero = std::all_of(fv.begin(), fv.end(), [&](const T& v) { return is_zero(v, tol); });
    const bool g_zero = g_max == 0 || std::all_of(gv.begin(), gv.end(), [&](const T& v) { return is_zero(v, tol); });
    if (f_zero) {
        out.c1 = T(1);
    } else if (g_zero) {
        out.c2 = T(1);
    } else {
        out.c1 = T(1);
        out.c2 = T(0) - fv[pivot] / gv[pivot];
    }
    return out;
}

/**
 * If g != 0 vanishes on S^2, beta != 0 and
 * f(x sigma(y)) = beta f(x)f(y) - beta g(x)g(y) on all pairs, then f and g
 * are linearly dependent. Unmet hypotheses make the report vacuous.
 */
template <Semigroup S, class Sig, class T, class F, class G>
PropertyReport check_null_square_dependence(const S& s, const Sig& sigma, const T& beta, const F& f,
                                            const G& g, double tol = kIdentityTolerance) {
    PropertyReport report;
    report.name = "dependence-lemma";
    report.window_certified = !S::is_finite;
    auto vacuous = [&](std::string why) {
        report.hypothesis_ok = false;
        report.hypothesis_note = std::move(why);
        return report;
    };
    if (is_zero(beta, tol)) return vacuous("beta = 0");
    if (is_zero_function(s, g, tol)) return vacuous("g = 0");
    for (const auto& x : square(s)) {
        auto v = eval(g, x);
        if (v && !is_zero(*v, tol)) return vacuous("g does not vanish on S^2 at " + s.label(x));
    }
    for (const auto& x : s.window())
        for (const auto& y : s.window()) {
            auto lhs = eval(f, s.compose(x, sigma(y)));
            auto fx = eval(f, x), fy = eval(f, y), gx = eval(g, x), gy = eval(g, y);
            if (!lhs || !fx || !fy || !gx || !gy) {
                ++report.skipped;
                continue;
            }
            if (!near(*lhs, beta * *fx * *fy - beta * *gx * *gy, tol))
                return vacuous("equation fails at " + format_tuple(s, {x, y}));
        }
    ++report.checked;
    const auto dep = check_linear_dependence(s, f, g, tol);
    if (!dep.dependent)
        report.fail("f and g linearly dependent", "sigma_min/sigma_max = " + std::to_string(dep.ratio));
    return report;
}

/**
 * For f = a1 chi1 + a2 chi2 and g = b1 chi1 + b2 chi2 with distinct non-zero
 * multiplicative chi1, chi2, a1, a2 != 0 and g != 0:
 * f even and g odd imply a1 = a2 and b1 + b2 = 0; f odd and g even imply
 * a1 + a2 = 0 and b1 = b2. When neither parity pattern holds the report is
 * vacuous.
 */
template <Semigroup S, class Sig, class C, class T>
PropertyReport check_two_character_parity(const S& s, const Sig& sigma, const C& chi1, const C& chi2,
                                          const T& a1, const T& a2, const T& b1, const T& b2,
                                          double tol = kIdentityTolerance) {
    PropertyReport report;
    report.name = "parity-lemma";
    report.window_certified = !S::is_finite;
    auto vacuous = [&](std::string why) {
        report.hypothesis_ok = false;
        report.hypothesis_note = std::move(why);
        return report;
    };
    if (!is_multiplicative(s, chi1, tol) || !is_multiplicative(s, chi2, tol))
        return vacuous("chi1, chi2 must be multiplicative");
    if (is_zero_function(s, chi1, tol) || is_zero_function(s, chi2, tol)) return vacuous("chi1, chi2 must be non-zero");
    if (functions_near(s, chi1, chi2, tol)) return vacuous("chi1 = chi2");
    if (is_zero(a1, tol) || is_zero(a2, tol)) return vacuous("a1, a2 must be non-zero");
    const auto f = lincomb(s, a1, chi1, a2, chi2);
    const auto g = lincomb(s, b1, chi1, b2, chi2);
    if (is_zero_function(s, g, tol)) return vacuous("g = 0");

    const bool f_even = is_even_fn(s, f, sigma, tol), f_odd = is_odd_fn(s, f, sigma, tol);
    const bool g_even = is_even_fn(s, g, sigma, tol), g_odd = is_odd_fn(s, g, sigma, tol);
    bool any = false;
    if (f_even && g_odd) {
        any = true;
        ++report.checked;
        if (!near(a1, a2, tol)) report.fail("case (1): a1 = a2", "f even, g odd");
        if (!is_zero(b1 + b2, tol)) report.fail("case (1): b1 + b2 = 0", "f even, g odd");
    }
    if (f_odd && g_even) {
        any = true;
        ++report.checked;
        if (!is_zero(a1 + a2, tol)) report.fail("case (2): a1 + a2 = 0", "f odd, g even");
        if (!near(b1, b2, tol)) report.fail("case (2): b1 = b2", "f odd, g even");
    }
    if (!any) return vacuous("neither (f even, g odd) nor (f odd, g even)");
    return report;
}

}  // namespace gcal
