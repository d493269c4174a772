#pragma once

/**
 * @file functions.hpp
 * @brief Complex-valued functions on a carrier: the sigma-star operation,
 *        even/odd parts, multiplicative and additive functions, and the null
 *        sets I_chi, I_chi^2, P_chi of a multiplicative function.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcal/detail/exact_linalg.hpp"
#include "gcal/report.hpp"
#include "gcal/semigroup.hpp"

namespace gcal {

/// f*(x) = f(sigma(x)).
template <Semigroup S, class F, class Sig>
function_t<S, value_of_t<F>> star(const S& s, const F& f, const Sig& sigma) {
    using T = value_of_t<F>;
    return make_function<T>(s, [f, sigma](const element_t<S>& x) { return eval(f, sigma(x)); });
}

/// (f + f*) / 2
template <Semigroup S, class F, class Sig>
function_t<S, value_of_t<F>> even_part(const S& s, const F& f, const Sig& sigma) {
    using T = value_of_t<F>;
    return make_function<T>(s, [f, sigma](const element_t<S>& x) -> std::optional<T> {
        auto a = eval(f, x);
        auto b = eval(f, sigma(x));
        if (!a || !b) return std::nullopt;
        return (*a + *b) / T(2);
    });
}

/// (f - f*) / 2
template <Semigroup S, class F, class Sig>
function_t<S, value_of_t<F>> odd_part(const S& s, const F& f, const Sig& sigma) {
    using T = value_of_t<F>;
    return make_function<T>(s, [f, sigma](const element_t<S>& x) -> std::optional<T> {
        auto a = eval(f, x);
        auto b = eval(f, sigma(x));
        if (!a || !b) return std::nullopt;
        return (*a - *b) / T(2);
    });
}

template <Semigroup S, class F, class Sig>
bool is_even_fn(const S& s, const F& f, const Sig& sigma, double tol = kIdentityTolerance) {
    for (const auto& x : s.window()) {
        auto a = eval(f, x);
        auto b = eval(f, sigma(x));
        if (a && b && !near(*a, *b, tol)) return false;
    }
    return true;
}

template <Semigroup S, class F, class Sig>
bool is_odd_fn(const S& s, const F& f, const Sig& sigma, double tol = kIdentityTolerance) {
    using T = value_of_t<F>;
    for (const auto& x : s.window()) {
        auto a = eval(f, x);
        auto b = eval(f, sigma(x));
        if (a && b && !near(*a, T(0) - *b, tol)) return false;
    }
    return true;
}

/// chi(xy) = chi(x) chi(y) on all window pairs. The zero function qualifies.
template <Semigroup S, class F>
bool is_multiplicative(const S& s, const F& f, double tol = kIdentityTolerance) {
    const auto& w = s.window();
    for (const auto& x : w) {
        auto fx = eval(f, x);
        if (!fx) continue;
        for (const auto& y : w) {
            auto fy = eval(f, y);
            auto fxy = eval(f, s.compose(x, y));
            if (fy && fxy && !near(*fxy, *fx * *fy, tol)) return false;
        }
    }
    return true;
}

/// A(xy) = A(x) + A(y) for x, y in the sub-carrier.
template <Semigroup S, class F>
bool is_additive(const S& s, const ElementSubset<element_t<S>>& sub, const F& a, double tol = kIdentityTolerance) {
    for (const auto& x : sub) {
        auto ax = eval(a, x);
        if (!ax) continue;
        for (const auto& y : sub) {
            auto ay = eval(a, y);
            auto axy = eval(a, s.compose(x, y));
            if (ay && axy && !near(*axy, *ax + *ay, tol)) return false;
        }
    }
    return true;
}

/// Basis of the additive functions on a sub-carrier of a finite semigroup
/// (values outside the sub-carrier are 0). Only pairs whose product stays in
/// the sub-carrier constrain A.
template <class T>
std::vector<FiniteFunction<T>> enumerate_additive(const FiniteSemigroup& s, const ElementSubset<std::size_t>& sub) {
    const auto& elems = sub.elements();
    std::map<std::size_t, std::size_t> column;
    for (std::size_t k = 0; k < elems.size(); ++k) column[elems[k]] = k;

    detail::RationalMatrix rows;
    for (auto x : elems)
        for (auto y : elems) {
            auto xy = s.compose(x, y);
            if (!sub.contains(xy)) continue;
            std::vector<Rational> row(elems.size(), Rational(0));
            row[column[xy]] += 1;
            row[column[x]] -= 1;
            row[column[y]] -= 1;
            rows.push_back(std::move(row));
        }
    std::vector<FiniteFunction<T>> out;
    for (const auto& v : detail::nullspace(rows, elems.size())) {
        std::vector<T> values(s.order(), T(0));
        for (std::size_t k = 0; k < elems.size(); ++k) values[elems[k]] = from_rational<T>({v[k], 0});
        out.emplace_back(std::move(values));
    }
    return out;
}

/// A multiplicative function on a finite carrier; the zero function is kept
/// but flagged since most constructions need a non-zero one.
template <class T>
struct MultiplicativeFunction {
    FiniteFunction<T> values;
    bool zero = false;

    bool nonzero() const { return !zero; }
    const T& operator()(std::size_t x) const { return values(x); }
};

/// Index and period of the cyclic subsemigroup generated by x:
/// x^(index + period) = x^index with both minimal.
struct CyclicData {
    std::size_t index = 0;
    std::size_t period = 0;
};

inline CyclicData cyclic_data(const FiniteSemigroup& s, std::size_t x) {
    std::vector<std::size_t> first_seen(s.order(), 0);  // exponent (1-based) at which an element first appears
    std::size_t power = x;
    for (std::size_t k = 1;; ++k) {
        if (first_seen[power] != 0) return {first_seen[power], k - first_seen[power]};
        first_seen[power] = k;
        power = s.compose(power, x);
    }
}

inline constexpr std::size_t kDefaultMultiplicativeBound = 6;

/**
 * All multiplicative functions S -> C of a finite semigroup.
 *
 * A non-zero value c = chi(x) satisfies c^(m+r) = c^m for the index m and
 * period r of x, hence c^r = 1. Each element's candidates are therefore 0
 * followed by the r-th roots of unity in increasing angle; assignments are
 * enumerated depth first (element 0 most significant) with pruning on every
 * product whose factors are already assigned. The resulting order is
 * canonical.
 */
template <class T>
std::vector<MultiplicativeFunction<T>> enumerate_multiplicative(const FiniteSemigroup& s,
                                                                std::size_t max_order = kDefaultMultiplicativeBound) {
    const std::size_t n = s.order();
    if (n > max_order)
        throw std::length_error("order " + std::to_string(n) + " exceeds multiplicative enumeration bound " +
                                std::to_string(max_order));
    std::vector<std::vector<T>> candidates(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto period = cyclic_data(s, x).period;
        candidates[x].push_back(T(0));
        for (std::size_t k = 0; k < period; ++k) candidates[x].push_back(scalar_traits<T>::root_of_unity(k, period));
    }

    std::vector<MultiplicativeFunction<T>> out;
    std::vector<T> chi(n, T(0));
    auto consistent_upto = [&](std::size_t last) {
        for (std::size_t a = 0; a <= last; ++a)
            for (std::size_t b = 0; b <= last; ++b) {
                if (a != last && b != last) continue;
                const auto ab = s.compose(a, b);
                if (ab > last) continue;
                if (!near(chi[ab], chi[a] * chi[b])) return false;
            }
        // products landing on `last` from earlier factors
        for (std::size_t a = 0; a < last; ++a)
            for (std::size_t b = 0; b < last; ++b)
                if (s.compose(a, b) == last && !near(chi[last], chi[a] * chi[b])) return false;
        return true;
    };
    auto recurse = [&](auto&& self, std::size_t x) -> void {
        if (x == n) {
            bool zero = std::all_of(chi.begin(), chi.end(), [](const T& v) { return is_zero(v); });
            out.push_back({FiniteFunction<T>(chi), zero});
            return;
        }
        for (const auto& c : candidates[x]) {
            chi[x] = c;
            if (consistent_upto(x)) self(self, x + 1);
        }
        chi[x] = T(0);
    };
    recurse(recurse, 0);
    return out;
}

/// I_chi, I_chi^2 and P_chi. For procedural carriers all three are subsets of
/// the window and P_chi's universal quantifiers range over window elements
/// (window_certified is then set).
template <class E>
struct NullSets {
    ElementSubset<E> i_chi;
    ElementSubset<E> i_chi_sq;
    ElementSubset<E> p_chi;
    bool window_certified = false;
};

/**
 * Null sets of a non-zero multiplicative chi.
 *
 * P_chi = {p in I \ I^2 : up, pv, upv in I \ I^2 for all u, v outside I_chi}.
 * On procedural carriers a translate that leaves the window does not
 * constrain p.
 */
template <Semigroup S, class F>
NullSets<element_t<S>> null_sets(const S& s, const F& chi, double tol = kIdentityTolerance) {
    using E = element_t<S>;
    std::vector<E> zeros, units;
    for (const auto& x : s.window()) {
        auto c = eval(chi, x);
        if (!c) throw std::invalid_argument("multiplicative function undefined on window element " + s.label(x));
        (is_zero(*c, tol) ? zeros : units).push_back(x);
    }
    if (units.empty()) throw std::invalid_argument("null sets need a non-zero multiplicative function");

    NullSets<E> out;
    out.window_certified = !S::is_finite;
    out.i_chi = ElementSubset<E>(zeros);
    out.i_chi_sq = product_set(s, out.i_chi);

    auto in_difference = [&](const E& z) {
        auto w = s.window_lookup(z);
        if (!w) return std::optional<bool>();  // unknown: outside the window
        return std::optional<bool>(out.i_chi.contains(*w) && !out.i_chi_sq.contains(*w));
    };

    std::vector<E> p;
    for (const auto& cand : out.i_chi) {
        if (out.i_chi_sq.contains(cand)) continue;
        bool ok = true;
        for (std::size_t iu = 0; iu < units.size() && ok; ++iu) {
            const E& u = units[iu];
            const E up = s.compose(u, cand);
            const E pu = s.compose(cand, u);
            if (auto r = in_difference(up); r && !*r) ok = false;
            if (auto r = in_difference(pu); r && !*r) ok = false;
            for (std::size_t iv = 0; iv < units.size() && ok; ++iv) {
                if (auto r = in_difference(s.compose(up, units[iv])); r && !*r) ok = false;
            }
        }
        if (ok) p.push_back(cand);
    }
    out.p_chi = ElementSubset<E>(std::move(p));
    return out;
}

/**
 * (a) u outside I_chi and p in P_chi imply up, pu in P_chi;
 * (b) sigma(P_chi) = P_{chi o sigma}.
 * Translates outside the window are skipped (counted in `skipped`).
 */
template <Semigroup S, class F, class Sig>
PropertyReport check_pchi_lemma(const S& s, const Sig& sigma, const F& chi, double tol = kIdentityTolerance) {
    PropertyReport report;
    report.name = "pchi-lemma";
    const auto sets = null_sets(s, chi, tol);
    report.window_certified = sets.window_certified;

    for (const auto& u : s.window()) {
        if (sets.i_chi.contains(u)) continue;
        for (const auto& p : sets.p_chi) {
            for (const auto& prod : {s.compose(u, p), s.compose(p, u)}) {
                auto w = s.window_lookup(prod);
                if (!w) {
                    ++report.skipped;
                    continue;
                }
                ++report.checked;
                if (!sets.p_chi.contains(*w))
                    report.fail("(a) up, pu in P_chi", format_tuple(s, {u, p}) + " -> " + s.label(prod));
            }
        }
    }

    const auto chi_star = star(s, chi, sigma);
    const auto sets_star = null_sets(s, chi_star, tol);
    std::vector<element_t<S>> image;
    for (const auto& p : sets.p_chi) {
        auto w = s.window_lookup(sigma(p));
        if (!w) {
            ++report.skipped;
            continue;
        }
        image.push_back(*w);
    }
    ++report.checked;
    ElementSubset<element_t<S>> sigma_p(std::move(image));
    if (!(sigma_p == sets_star.p_chi)) {
        std::string witness;
        for (const auto& x : sigma_p)
            if (!sets_star.p_chi.contains(x)) witness += s.label(x) + " in sigma(P_chi) only; ";
        for (const auto& x : sets_star.p_chi)
            if (!sigma_p.contains(x)) witness += s.label(x) + " in P_chi* only; ";
        report.fail("(b) sigma(P_chi) = P_chi*", witness);
    }
    return report;
}

}  // namespace gcal
