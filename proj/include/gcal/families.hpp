#pragma once

/**
 * @file families.hpp
 * @brief Constructors for the eight solution families of
 *        g(x sigma(y)) = g(x)g(y) - f(x)f(y) + alpha f(x sigma(y)),
 *        and the piecewise builder for the sine-law part h of family 7.
 *
 *   1  alpha = +-1, f any non-zero function, g = alpha f
 *   2  alpha != 1, f = g != 0, g = 0 on S^2
 *   3  alpha != -1, f = -g != 0, g = 0 on S^2
 *   4  f = (q + alpha) chi / 2, g = (1 +- sqrt(1 + q^2 - alpha^2)) chi / 2
 *   5  f = alpha (chi1 + chi2)/2 + q (chi1 - chi2)/2,
 *      g = (chi1 + chi2)/2 +- sqrt(1 + q^2 - alpha^2) (chi1 - chi2)/2, q != +-alpha
 *   6  alpha != 0, f = alpha chi1, g = chi2
 *   7  f = alpha chi + h, g = chi +- h, h an even solution of
 *      h(xy) = h(x)chi(y) + h(y)chi(x)
 *   8  alpha != +-1, f = (1+alpha)/2 chi - (1-alpha)/2 chi*,
 *      g = (1+alpha)/2 chi + (1-alpha)/2 chi*, chi != chi*
 *
 * chi, chi1, chi2 are non-zero sigma-even multiplicative functions except in
 * family 8, where chi is any multiplicative function with chi != chi*.
 */

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcal/functions.hpp"

namespace gcal {

/// h on S \ I_chi is chi*A with A additive; on P_chi it is rho.
template <Semigroup S, class T>
struct HSpec {
    function_t<S, T> additive;
    function_t<S, T> rho;
};

template <Semigroup S, class T>
struct FamilyDescriptor {
    int family_tag = 0;
    T alpha = T(0);
    T q = T(0);          // families 4, 5
    int sign_branch = 1;  // families 4, 5, 7
    std::optional<function_t<S, T>> chi;   // families 4, 7, 8
    std::optional<function_t<S, T>> chi1;  // families 5, 6
    std::optional<function_t<S, T>> chi2;  // families 5, 6
    std::optional<HSpec<S, T>> h_spec;     // family 7; absent means h = 0
    std::optional<function_t<S, T>> free_function;  // families 1-3

    static FamilyDescriptor make(int tag, T alpha, T q = T(0), int sign_branch = 1) {
        FamilyDescriptor d;
        d.family_tag = tag;
        d.alpha = std::move(alpha);
        d.q = std::move(q);
        d.sign_branch = sign_branch;
        return d;
    }
};

template <Semigroup S, class T>
struct SolutionPair {
    function_t<S, T> g;
    function_t<S, T> f;
    T alpha = T(0);
    std::optional<FamilyDescriptor<S, T>> provenance;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

template <Semigroup S, class F, class Sig>
void require_even_character(const S& s, const Sig& sigma, const F& chi, const std::string& what) {
    require(is_multiplicative(s, chi), what + " is not multiplicative");
    require(!is_zero_function(s, chi), what + " must be non-zero");
    require(is_even_fn(s, chi, sigma), what + " is not sigma-even");
}

template <Semigroup S, class T>
const function_t<S, T>& need(const std::optional<function_t<S, T>>& fn, const char* what, int family) {
    require(fn.has_value(), "family " + std::to_string(family) + " needs " + what);
    return *fn;
}

}  // namespace detail

/// Function equal to 0 on S^2 and to the given values, in element order, on S \ S^2.
template <class T>
FiniteFunction<T> vanishing_on_square(const FiniteSemigroup& s, const std::vector<T>& free_values) {
    const auto sq = square(s);
    std::vector<T> values(s.order(), T(0));
    std::size_t k = 0;
    for (std::size_t x = 0; x < s.order(); ++x) {
        if (sq.contains(x)) continue;
        if (k >= free_values.size()) throw std::invalid_argument("too few values for S \\ S^2");
        values[x] = free_values[k++];
    }
    if (k != free_values.size()) throw std::invalid_argument("too many values for S \\ S^2");
    return FiniteFunction<T>(std::move(values));
}

/// True iff f vanishes on S^2 (window-restricted for procedural carriers).
template <Semigroup S, class F>
bool vanishes_on_square(const S& s, const F& f, double tol = kIdentityTolerance) {
    for (const auto& x : square(s)) {
        auto v = eval(f, x);
        if (v && !is_zero(*v, tol)) return false;
    }
    return true;
}

/// A rational q for which 1 + q^2 - alpha^2 is the square of a rational:
/// with D = alpha^2 - 1 and any non-zero m, q = (m + D/m)/2 gives root (D/m - m)/2.
inline Rational rational_q_with_exact_root(const Rational& alpha, const Rational& m) {
    if (m == 0) throw std::invalid_argument("m must be non-zero");
    const Rational d = alpha * alpha - 1;
    return (m + d / m) / 2;
}

// ---------------------------------------------------------------------------
// Family 7: the sine-law part h

namespace detail {

/// Values of h outside the window are fixed by any factorization x = ab with
/// a, b in the window: both factors in I_chi puts x in I_chi^2 (h = 0); a
/// factor in P_chi times a non-null factor puts x in P_chi (h = rho);
/// a factor in I_chi \ P_chi times a non-null factor forces h = 0.
template <class E>
using OutsideNullMap = std::map<E, bool>;  // true: x in P_chi

template <Semigroup S, class F>
OutsideNullMap<element_t<S>> outside_null_map(const S& s, const F& chi, const NullSets<element_t<S>>& sets) {
    OutsideNullMap<element_t<S>> out;
    if constexpr (!S::is_finite) {
        if (sets.i_chi.empty()) return out;
        const auto& w = s.window();
        for (const auto& a : w)
            for (const auto& b : w) {
                const auto ab = s.compose(a, b);
                if (s.window_lookup(ab)) continue;
                const bool na = sets.i_chi.contains(a);
                const bool nb = sets.i_chi.contains(b);
                if (!na && !nb) continue;
                const bool in_p = (na != nb) && (sets.p_chi.contains(a) || sets.p_chi.contains(b));
                out.emplace(ab, in_p);
            }
    }
    (void)chi;
    return out;
}

}  // namespace detail

/// h = chi*A on S \ I_chi, 0 on I_chi \ P_chi, rho on P_chi. No conditions are checked.
template <Semigroup S, class F, class T>
function_t<S, T> assemble_h(const S& s, const F& chi, const HSpec<S, T>& spec,
                            const NullSets<element_t<S>>& sets) {
    using E = element_t<S>;
    auto outside = std::make_shared<detail::OutsideNullMap<E>>(detail::outside_null_map(s, chi, sets));
    auto state = std::make_shared<NullSets<E>>(sets);
    auto carrier = std::make_shared<const S>(s);
    return make_function<T>(s, [carrier, chi, spec, state, outside](const E& x) -> std::optional<T> {
        auto c = eval(chi, x);
        if (!c) return std::nullopt;
        if (!is_zero(*c)) {
            auto a = eval(spec.additive, x);
            if (!a) return std::nullopt;
            return *c * *a;
        }
        if (auto w = carrier->window_lookup(x)) {
            if (state->p_chi.contains(*w)) return eval(spec.rho, *w);
            return T(0);
        }
        auto it = outside->find(x);
        if (it == outside->end()) return std::nullopt;
        if (it->second) return eval(spec.rho, x);
        return T(0);
    });
}

/**
 * Conditions on (chi, A, rho) for h to be an even solution of the sine law:
 * A o sigma = A and A additive on S \ I_chi; rho o sigma = rho on P_chi;
 * condition (I): rho(up) = rho(p)chi(u), rho(pv) = rho(p)chi(v),
 * rho(upv) = rho(p)chi(uv) for p in P_chi and u, v outside I_chi, scanned over
 * all window triples; condition (II): h(xy) = h(yx) = 0 for x in I_chi \ P_chi,
 * y outside I_chi; and the sine law h(xy) = h(x)chi(y) + h(y)chi(x) itself.
 */
template <Semigroup S, class F, class Sig, class T>
PropertyReport check_h_conditions(const S& s, const Sig& sigma, const F& chi, const HSpec<S, T>& spec,
                                  double tol = kIdentityTolerance) {
    using E = element_t<S>;
    PropertyReport report;
    report.name = "h-conditions";
    const auto sets = null_sets(s, chi, tol);
    report.window_certified = sets.window_certified;
    const auto h = assemble_h(s, chi, spec, sets);

    std::vector<E> units;
    for (const auto& x : s.window())
        if (!sets.i_chi.contains(x)) units.push_back(x);

    auto compare = [&](const char* property, std::optional<T> lhs, std::optional<T> rhs, const std::string& where) {
        if (!lhs || !rhs) {
            ++report.skipped;
            return;
        }
        ++report.checked;
        if (!near(*lhs, *rhs, tol)) report.fail(property, where);
    };
    auto times = [](std::optional<T> a, std::optional<T> b) -> std::optional<T> {
        if (!a || !b) return std::nullopt;
        return *a * *b;
    };
    auto plus = [](std::optional<T> a, std::optional<T> b) -> std::optional<T> {
        if (!a || !b) return std::nullopt;
        return *a + *b;
    };

    for (const auto& u : units) {
        compare("A o sigma = A", eval(spec.additive, sigma(u)), eval(spec.additive, u), s.label(u));
        for (const auto& v : units)
            compare("A additive on S \\ I_chi", eval(spec.additive, s.compose(u, v)),
                    plus(eval(spec.additive, u), eval(spec.additive, v)), format_tuple(s, {u, v}));
    }
    for (const auto& p : sets.p_chi) compare("rho o sigma = rho", eval(spec.rho, sigma(p)), eval(spec.rho, p), s.label(p));

    for (const auto& p : sets.p_chi) {
        const auto rp = eval(spec.rho, p);
        for (const auto& u : units) {
            const auto up = s.compose(u, p);
            const auto pu = s.compose(p, u);
            compare("(I) rho(up) = rho(p)chi(u)", eval(spec.rho, up), times(rp, eval(chi, u)), format_tuple(s, {u, p}));
            compare("(I) rho(pv) = rho(p)chi(v)", eval(spec.rho, pu), times(rp, eval(chi, u)), format_tuple(s, {p, u}));
            for (const auto& v : units)
                compare("(I) rho(upv) = rho(p)chi(uv)", eval(spec.rho, s.compose(up, v)),
                        times(rp, eval(chi, s.compose(u, v))), format_tuple(s, {u, p, v}));
        }
    }

    for (const auto& x : sets.i_chi) {
        if (sets.p_chi.contains(x)) continue;
        for (const auto& y : units) {
            compare("(II) h(xy) = 0", eval(h, s.compose(x, y)), T(0), format_tuple(s, {x, y}));
            compare("(II) h(yx) = 0", eval(h, s.compose(y, x)), T(0), format_tuple(s, {y, x}));
        }
    }

    for (const auto& x : s.window())
        for (const auto& y : s.window())
            compare("sine law h(xy) = h(x)chi(y) + h(y)chi(x)", eval(h, s.compose(x, y)),
                    plus(times(eval(h, x), eval(chi, y)), times(eval(h, y), eval(chi, x))), format_tuple(s, {x, y}));
    return report;
}

/// The family-7 function h; throws std::invalid_argument naming the first
/// violated condition.
template <Semigroup S, class F, class Sig, class T>
function_t<S, T> build_h(const S& s, const Sig& sigma, const F& chi, const HSpec<S, T>& spec,
                         double tol = kIdentityTolerance) {
    const auto report = check_h_conditions(s, sigma, chi, spec, tol);
    if (!report.passed()) {
        const auto& c = report.counterexamples.front();
        throw std::invalid_argument("h violates " + c.property + " at " + c.witness);
    }
    return assemble_h(s, chi, spec, null_sets(s, chi, tol));
}

/// The zero h (A = 0, rho = 0).
template <class T, Semigroup S>
HSpec<S, T> zero_h_spec(const S& s) {
    return {constant_function<T>(s, T(0)), constant_function<T>(s, T(0))};
}

// ---------------------------------------------------------------------------

/**
 * Builds (g, f) from a descriptor after checking the family's side
 * conditions. `free_f` (or d.free_function) is the arbitrary function of
 * families 1-3. Throws std::invalid_argument on any violated condition and
 * InexactError when an exact square root leaves the field.
 */
template <Semigroup S, class Sig, class T>
SolutionPair<S, T> construct(const S& s, const Sig& sigma, const FamilyDescriptor<S, T>& d,
                             const std::optional<function_t<S, T>>& free_f = std::nullopt) {
    using detail::need;
    using detail::require;
    const T& alpha = d.alpha;
    const T one(1), two(2);
    const int k = d.family_tag;
    require(d.sign_branch == 1 || d.sign_branch == -1, "sign_branch must be +1 or -1");

    SolutionPair<S, T> out{constant_function<T>(s, T(0)), constant_function<T>(s, T(0)), alpha, d};
    auto free = free_f ? free_f : d.free_function;
    if (k >= 1 && k <= 3) {
        require(free.has_value(), "family " + std::to_string(k) + " needs a free function");
        require(!is_zero_function(s, *free), "family " + std::to_string(k) + " needs a non-zero function");
        out.provenance->free_function = free;
    }

    switch (k) {
        case 1:
            require(near(alpha, one) || near(alpha, T(0) - one), "family 1 needs alpha = +-1");
            out.f = *free;
            out.g = scale(s, alpha, *free);
            break;
        case 2:
            require(!near(alpha, one), "family 2 needs alpha != 1");
            require(vanishes_on_square(s, *free), "family 2 function must vanish on S^2");
            out.f = *free;
            out.g = *free;
            break;
        case 3:
            require(!near(alpha, T(0) - one), "family 3 needs alpha != -1");
            require(vanishes_on_square(s, *free), "family 3 function must vanish on S^2");
            out.g = *free;
            out.f = scale(s, T(0) - one, *free);
            break;
        case 4: {
            const auto& chi = need<S, T>(d.chi, "chi", 4);
            detail::require_even_character(s, sigma, chi, "chi");
            const T root = sqrt_branch(one + d.q * d.q - alpha * alpha, d.sign_branch);
            out.f = scale(s, (d.q + alpha) / two, chi);
            out.g = scale(s, (one + root) / two, chi);
            break;
        }
        case 5: {
            const auto& c1 = need<S, T>(d.chi1, "chi1", 5);
            const auto& c2 = need<S, T>(d.chi2, "chi2", 5);
            detail::require_even_character(s, sigma, c1, "chi1");
            detail::require_even_character(s, sigma, c2, "chi2");
            require(!functions_near(s, c1, c2), "family 5 needs chi1 != chi2");
            require(!near(d.q, alpha) && !near(d.q, T(0) - alpha), "family 5 needs q not in {alpha, -alpha}");
            const T root = sqrt_branch(one + d.q * d.q - alpha * alpha, d.sign_branch);
            out.f = lincomb(s, (alpha + d.q) / two, c1, (alpha - d.q) / two, c2);
            out.g = lincomb(s, (one + root) / two, c1, (one - root) / two, c2);
            break;
        }
        case 6: {
            const auto& c1 = need<S, T>(d.chi1, "chi1", 6);
            const auto& c2 = need<S, T>(d.chi2, "chi2", 6);
            require(!is_zero(alpha), "family 6 needs alpha != 0");
            detail::require_even_character(s, sigma, c1, "chi1");
            detail::require_even_character(s, sigma, c2, "chi2");
            require(!functions_near(s, c1, c2), "family 6 needs chi1 != chi2");
            out.f = scale(s, alpha, c1);
            out.g = c2;
            break;
        }
        case 7: {
            const auto& chi = need<S, T>(d.chi, "chi", 7);
            detail::require_even_character(s, sigma, chi, "chi");
            const auto spec = d.h_spec ? *d.h_spec : zero_h_spec<T>(s);
            const auto h = build_h(s, sigma, chi, spec);
            const T sign = d.sign_branch > 0 ? one : T(0) - one;
            out.f = lincomb(s, alpha, chi, one, h);
            out.g = lincomb(s, one, chi, sign, h);
            break;
        }
        case 8: {
            const auto& chi = need<S, T>(d.chi, "chi", 8);
            require(!near(alpha, one) && !near(alpha, T(0) - one), "family 8 needs alpha != +-1");
            require(is_multiplicative(s, chi), "chi is not multiplicative");
            const auto chi_star = star(s, chi, sigma);
            require(!functions_near(s, chi, chi_star), "family 8 needs chi != chi*");
            out.f = lincomb(s, (one + alpha) / two, chi, T(0) - (one - alpha) / two, chi_star);
            out.g = lincomb(s, (one + alpha) / two, chi, (one - alpha) / two, chi_star);
            break;
        }
        default:
            throw std::invalid_argument("family tag must be 1-8, got " + std::to_string(k));
    }
    return out;
}

}  // namespace gcal
