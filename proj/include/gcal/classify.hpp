#pragma once

/**
 * @file classify.hpp
 * @brief Recovers the family and parameters of a solution on a finite carrier.
 *
 * Each family is tried in the fixed order 1, 2, 3, 4, 6, 8, 5, 7. For each
 * candidate the parameters are read off the pair (ratios against enumerated
 * multiplicative functions, a 2 x 2 solve for two-character spans, h = f -
 * alpha chi for family 7), the pair is rebuilt with construct(), and the
 * candidate is accepted when the rebuilt pair matches the input within the
 * classification tolerance (exactly, in exact mode). The first accepted
 * candidate wins, which also resolves the overlaps between families at
 * boundary parameters.
 */

#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gcal/analysis.hpp"
#include "gcal/families.hpp"

namespace gcal {

inline constexpr std::array<int, 8> kClassifyOrder{1, 2, 3, 4, 6, 8, 5, 7};

template <class T>
struct ClassificationResult {
    std::optional<int> family_tag;  // empty: unclassified
    std::optional<FamilyDescriptor<FiniteSemigroup, T>> descriptor;
    double match_residual = std::numeric_limits<double>::infinity();
    double max_residual = 0;  // residual of the input pair

    bool classified() const { return family_tag.has_value(); }
};

/// Characters of a finite carrier split by parity, computed once per (s, sigma).
template <class T>
class CharacterTable {
public:
    CharacterTable(const FiniteSemigroup& s, const Permutation& sigma) {
        for (auto& m : enumerate_multiplicative<T>(s, std::max(s.order(), kDefaultMultiplicativeBound))) {
            if (m.zero) continue;
            const auto chi_star = star(s, m.values, sigma);
            if (functions_near(s, m.values, chi_star)) even_.push_back(m.values);
            nonzero_.push_back(std::move(m.values));
        }
    }

    const std::vector<FiniteFunction<T>>& nonzero() const { return nonzero_; }
    const std::vector<FiniteFunction<T>>& even() const { return even_; }

private:
    std::vector<FiniteFunction<T>> nonzero_;
    std::vector<FiniteFunction<T>> even_;
};

namespace detail {

template <class T>
std::size_t argmax_magnitude(const FiniteFunction<T>& f) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < f.size(); ++k)
        if (magnitude(f(k)) > magnitude(f(best))) best = k;
    return best;
}

/// Branch sign b with b * principal_sqrt(z) closest to root.
template <class T>
int nearest_branch(const T& z, const T& root) {
    T principal;
    try {
        principal = scalar_traits<T>::sqrt_principal(z);
    } catch (const InexactError&) {
        return 1;  // the rebuild will fail and reject the candidate
    }
    return magnitude(root - principal) <= magnitude(root + principal) ? 1 : -1;
}

template <class T>
class Attempt {
public:
    Attempt(const FiniteSemigroup& s, const Permutation& sigma, const FiniteFunction<T>& g,
            const FiniteFunction<T>& f, double tol)
        : s_(s), sigma_(sigma), g_(g), f_(f), tol_(tol) {}

    /// Rebuilds from d; keeps it if it matches and nothing was accepted yet.
    bool operator()(const FamilyDescriptor<FiniteSemigroup, T>& d) {
        try {
            const auto pair = construct(s_, sigma_, d);
            const double dist = std::max(max_distance(s_, pair.g, g_), max_distance(s_, pair.f, f_));
            best_ = std::min(best_, dist);
            const bool match = scalar_traits<T>::exact ? dist == 0 : dist < tol_;
            if (match) {
                result_.family_tag = d.family_tag;
                result_.descriptor = *pair.provenance;
                result_.match_residual = dist;
                return true;
            }
        } catch (const std::invalid_argument&) {
        } catch (const InexactError&) {
        }
        return false;
    }

    ClassificationResult<T> result() const {
        auto out = result_;
        if (!out.family_tag) out.match_residual = best_;
        return out;
    }

private:
    const FiniteSemigroup& s_;
    const Permutation& sigma_;
    const FiniteFunction<T>& g_;
    const FiniteFunction<T>& f_;
    double tol_;
    double best_ = std::numeric_limits<double>::infinity();
    ClassificationResult<T> result_;
};

}  // namespace detail

/**
 * Classifies a solution (g, f) on a finite carrier. Throws std::domain_error
 * if the pair is not a solution (residual above kIdentityTolerance, or
 * non-zero in exact mode).
 */
template <class T>
ClassificationResult<T> classify(const FiniteSemigroup& s, const Permutation& sigma, const T& alpha,
                                 const FiniteFunction<T>& g, const FiniteFunction<T>& f,
                                 const CharacterTable<T>& table, double tol = kClassifyTolerance) {
    const auto res = residual(s, sigma, alpha, g, f);
    if (!residual_acceptable<T>(res.max_residual))
        throw std::domain_error("not a solution: residual " + std::to_string(res.max_residual));

    using D = FamilyDescriptor<FiniteSemigroup, T>;
    const T one(1), two(2);
    detail::Attempt<T> attempt(s, sigma, g, f, tol);
    auto finish = [&] {
        auto out = attempt.result();
        out.max_residual = res.max_residual;
        return out;
    };
    auto ratio = [](const FiniteFunction<T>& fn, const FiniteFunction<T>& chi) {
        const auto k = detail::argmax_magnitude(chi);
        return fn(k) / chi(k);
    };

    for (int tag : kClassifyOrder) {
        switch (tag) {
            case 1: {
                auto d = D::make(1, alpha);
                d.free_function = f;
                if (attempt(d)) return finish();
                break;
            }
            case 2: {
                auto d = D::make(2, alpha);
                d.free_function = f;
                if (attempt(d)) return finish();
                break;
            }
            case 3: {
                auto d = D::make(3, alpha);
                d.free_function = g;
                if (attempt(d)) return finish();
                break;
            }
            case 4:
                for (const auto& chi : table.even()) {
                    const T q = two * ratio(f, chi) - alpha;
                    const T root = two * ratio(g, chi) - one;
                    auto d = D::make(4, alpha, q, detail::nearest_branch(one + q * q - alpha * alpha, root));
                    d.chi = chi;
                    if (attempt(d)) return finish();
                }
                break;
            case 6:
                for (const auto& c1 : table.even())
                    for (const auto& c2 : table.even()) {
                        auto d = D::make(6, alpha);
                        d.chi1 = c1;
                        d.chi2 = c2;
                        if (attempt(d)) return finish();
                    }
                break;
            case 8:
                for (const auto& chi : table.nonzero()) {
                    auto d = D::make(8, alpha);
                    d.chi = chi;
                    if (attempt(d)) return finish();
                }
                break;
            case 5: {
                const auto& ev = table.even();
                for (std::size_t i = 0; i < ev.size(); ++i)
                    for (std::size_t j = i + 1; j < ev.size(); ++j) {
                        // f = a1 chi1 + a2 chi2, g = b1 chi1 + b2 chi2 from the best-conditioned 2 x 2 minor
                        std::size_t bx = 0, by = 0;
                        double best = -1;
                        for (std::size_t x = 0; x < s.order(); ++x)
                            for (std::size_t y = x + 1; y < s.order(); ++y) {
                                const double m = magnitude(ev[i](x) * ev[j](y) - ev[j](x) * ev[i](y));
                                if (m > best) {
                                    best = m;
                                    bx = x;
                                    by = y;
                                }
                            }
                        if (best <= 0) continue;
                        const T det = ev[i](bx) * ev[j](by) - ev[j](bx) * ev[i](by);
                        const T a1 = (f(bx) * ev[j](by) - ev[j](bx) * f(by)) / det;
                        const T b1 = (g(bx) * ev[j](by) - ev[j](bx) * g(by)) / det;
                        const T q = two * a1 - alpha;
                        const T root = two * b1 - one;
                        auto d = D::make(5, alpha, q, detail::nearest_branch(one + q * q - alpha * alpha, root));
                        d.chi1 = ev[i];
                        d.chi2 = ev[j];
                        if (attempt(d)) return finish();
                    }
                break;
            }
            case 7:
                for (const auto& chi : table.even()) {
                    std::vector<T> h(s.order());
                    for (std::size_t x = 0; x < s.order(); ++x) h[x] = f(x) - alpha * chi(x);
                    std::vector<T> a_values(s.order(), T(0));
                    for (std::size_t x = 0; x < s.order(); ++x)
                        if (!is_zero(chi(x))) a_values[x] = h[x] / chi(x);
                    HSpec<FiniteSemigroup, T> spec{FiniteFunction<T>(std::move(a_values)), FiniteFunction<T>(h)};
                    // g - chi = sign * h
                    double plus = 0, minus = 0;
                    for (std::size_t x = 0; x < s.order(); ++x) {
                        plus = std::max(plus, magnitude(g(x) - chi(x) - h[x]));
                        minus = std::max(minus, magnitude(g(x) - chi(x) + h[x]));
                    }
                    auto d = D::make(7, alpha, T(0), plus <= minus ? 1 : -1);
                    d.chi = chi;
                    d.h_spec = spec;
                    if (attempt(d)) return finish();
                }
                break;
        }
    }
    return finish();
}

template <class T>
ClassificationResult<T> classify(const FiniteSemigroup& s, const Permutation& sigma, const T& alpha,
                                 const FiniteFunction<T>& g, const FiniteFunction<T>& f,
                                 double tol = kClassifyTolerance) {
    return classify(s, sigma, alpha, g, f, CharacterTable<T>(s, sigma), tol);
}

}  // namespace gcal
