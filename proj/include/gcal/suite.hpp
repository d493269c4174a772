#pragma once

/**
 * @file suite.hpp
 * @brief The acceptance battery: eight criteria, each with its own
 *        tolerance and runtime budget. Shared by `gcal suite` and the
 *        acceptance binary.
 */

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gcal/classify.hpp"
#include "gcal/families.hpp"
#include "gcal/fixtures.hpp"
#include "gcal/io.hpp"
#include "gcal/solver.hpp"

namespace gcal {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;  // 0: no runtime budget
};

// ---------------------------------------------------------------------------
// Random family-constructed solutions on finite carriers

/// One (finite fixture, sigma) pair with its character table.
struct FiniteContext {
    std::string fixture;
    std::size_t sigma_index = 0;
    FiniteSemigroup s;
    Permutation sigma;
    CharacterTable<Complex> table;
    std::vector<std::size_t> outside_square;  // S \ S^2

    FiniteContext(std::string name, std::size_t index, FiniteSemigroup carrier, Permutation p)
        : fixture(std::move(name)), sigma_index(index), s(std::move(carrier)), sigma(std::move(p)),
          table(s, sigma) {
        const auto sq = square(s);
        for (std::size_t x = 0; x < s.order(); ++x)
            if (!sq.contains(x)) outside_square.push_back(x);
    }
};

inline std::vector<FiniteContext> finite_contexts(const std::vector<std::string>& names = finite_fixture_names()) {
    std::vector<FiniteContext> out;
    for (const auto& name : names) {
        auto fx = finite_fixture(name);
        for (std::size_t k = 0; k < fx.sigmas.size(); ++k) out.emplace_back(name, k, fx.semigroup, fx.sigmas[k]);
    }
    return out;
}

class RandomDescriptors {
public:
    explicit RandomDescriptors(std::uint64_t seed) : rng_(seed) {}

    Complex scalar(double radius = 2) {
        std::uniform_real_distribution<double> u(-radius, radius);
        return {u(rng_), u(rng_)};
    }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    int sign() { return index(2) ? 1 : -1; }

    FiniteFunction<Complex> values(std::size_t n) {
        std::vector<Complex> v(n);
        for (auto& z : v) z = scalar();
        return FiniteFunction<Complex>(std::move(v));
    }

    /// A descriptor of the given family satisfying its side conditions, or
    /// nullopt if the carrier has none (e.g. family 6 with fewer than two
    /// even characters). Family 7 draws rho at random and falls back to h = 0
    /// when the random rho violates the side conditions.
    std::optional<FamilyDescriptor<FiniteSemigroup, Complex>> draw(const FiniteContext& c, int family) {
        using D = FamilyDescriptor<FiniteSemigroup, Complex>;
        const auto& ev = c.table.even();
        const std::size_t n = c.s.order();
        switch (family) {
            case 1: {
                auto d = D::make(1, Complex(sign(), 0));
                d.free_function = values(n);
                return d;
            }
            case 2:
            case 3: {
                if (c.outside_square.empty()) return std::nullopt;
                std::vector<Complex> free(c.outside_square.size());
                for (auto& z : free) z = scalar();
                auto d = D::make(family, scalar());
                d.free_function = vanishing_on_square(c.s, free);
                return d;
            }
            case 4: {
                if (ev.empty()) return std::nullopt;
                auto d = D::make(4, scalar(), scalar(), sign());
                d.chi = ev[index(ev.size())];
                return d;
            }
            case 5:
            case 6: {
                if (ev.size() < 2) return std::nullopt;
                const auto i = index(ev.size());
                auto j = index(ev.size() - 1);
                if (j >= i) ++j;
                auto d = D::make(family, scalar(), scalar(), sign());
                d.chi1 = ev[i];
                d.chi2 = ev[j];
                return d;
            }
            case 7: {
                if (ev.empty()) return std::nullopt;
                auto d = D::make(7, scalar(), Complex(0), sign());
                d.chi = ev[index(ev.size())];
                const auto rho = scalar();
                HSpec<FiniteSemigroup, Complex> spec{constant_function<Complex>(c.s, Complex(0)),
                                                     constant_function<Complex>(c.s, rho)};
                if (check_h_conditions(c.s, c.sigma, *d.chi, spec).passed()) d.h_spec = spec;
                return d;
            }
            case 8: {
                std::vector<const FiniteFunction<Complex>*> odd;
                for (const auto& chi : c.table.nonzero())
                    if (!functions_near(c.s, chi, star(c.s, chi, c.sigma))) odd.push_back(&chi);
                if (odd.empty()) return std::nullopt;
                Complex alpha = scalar();
                auto d = D::make(8, alpha);
                d.chi = *odd[index(odd.size())];
                return d;
            }
        }
        return std::nullopt;
    }

    /// A constructed solution from a random family that applies on c.
    std::optional<SolutionPair<FiniteSemigroup, Complex>> solution(const FiniteContext& c) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            const int family = static_cast<int>(index(8)) + 1;
            auto d = draw(c, family);
            if (!d) continue;
            try {
                return construct(c.s, c.sigma, *d);
            } catch (const std::invalid_argument&) {
                // measure-zero coincidences such as q = alpha in family 5
            }
        }
        return std::nullopt;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Criterion 1: every family verifies on every fixture where it applies

namespace detail {

struct FamilyTally {
    std::array<std::size_t, 9> verified{};
    std::array<std::size_t, 9> rejected{};
    double worst_float = 0;
    double worst_exact = 0;
    std::vector<std::string> failures;
};

template <class T, Semigroup S>
struct FamilyInputs {
    std::vector<function_t<S, T>> characters;   // multiplicative, zero excluded
    std::vector<function_t<S, T>> arbitrary;    // family 1
    std::vector<function_t<S, T>> null_square;  // families 2, 3
    std::vector<HSpec<S, T>> h_specs;           // family 7, besides h = 0
    std::vector<T> alphas;
    std::vector<std::pair<T, T>> alpha_q;       // families 4, 5
};

template <class T, Semigroup S, class Sig>
void sweep_families(FamilyTally& tally, const std::string& where, const S& s, const Sig& sigma,
                    const FamilyInputs<T, S>& in) {
    using D = FamilyDescriptor<S, T>;
    std::vector<function_t<S, T>> even;
    for (const auto& chi : in.characters)
        if (is_even_fn(s, chi, sigma)) even.push_back(chi);

    auto run = [&](const D& d) {
        try {
            const auto pair = construct(s, sigma, d);
            const double r = residual(s, sigma, d.alpha, pair.g, pair.f).max_residual;
            double& worst = scalar_traits<T>::exact ? tally.worst_exact : tally.worst_float;
            worst = std::max(worst, r);
            if (!residual_acceptable<T>(r))
                tally.failures.push_back(where + " family " + std::to_string(d.family_tag) + " residual " +
                                         std::to_string(r));
            ++tally.verified[d.family_tag];
        } catch (const std::invalid_argument&) {
            ++tally.rejected[d.family_tag];
        } catch (const InexactError&) {
            ++tally.rejected[d.family_tag];
        }
    };

    for (const T& a : {T(1), T(-1)})
        for (const auto& fn : in.arbitrary) {
            auto d = D::make(1, a);
            d.free_function = fn;
            run(d);
        }
    for (const auto& a : in.alphas)
        for (const auto& fn : in.null_square)
            for (int tag : {2, 3}) {
                auto d = D::make(tag, a);
                d.free_function = fn;
                run(d);
            }
    for (const auto& [a, q] : in.alpha_q)
        for (int branch : {1, -1}) {
            for (const auto& chi : even) {
                auto d = D::make(4, a, q, branch);
                d.chi = chi;
                run(d);
            }
            for (std::size_t i = 0; i < even.size(); ++i)
                for (std::size_t j = 0; j < even.size(); ++j) {
                    if (i == j) continue;
                    auto d = D::make(5, a, q, branch);
                    d.chi1 = even[i];
                    d.chi2 = even[j];
                    run(d);
                }
        }
    for (const auto& a : in.alphas) {
        for (std::size_t i = 0; i < even.size(); ++i)
            for (std::size_t j = 0; j < even.size(); ++j) {
                if (i == j) continue;
                auto d = D::make(6, a);
                d.chi1 = even[i];
                d.chi2 = even[j];
                run(d);
            }
        for (const auto& chi : even)
            for (int branch : {1, -1}) {
                auto d = D::make(7, a, T(0), branch);
                d.chi = chi;
                run(d);
                for (const auto& spec : in.h_specs) {
                    d.h_spec = spec;
                    run(d);
                }
            }
        for (const auto& chi : in.characters) {
            auto d = D::make(8, a);
            d.chi = chi;
            run(d);
        }
    }
}

template <class T>
FamilyInputs<T, FiniteSemigroup> finite_inputs(const FiniteSemigroup& s) {
    FamilyInputs<T, FiniteSemigroup> in;
    for (auto& m : enumerate_multiplicative<T>(s))
        if (!m.zero) in.characters.push_back(std::move(m.values));
    const std::size_t n = s.order();
    std::vector<T> ramp(n);
    for (std::size_t x = 0; x < n; ++x) ramp[x] = from_rational<T>({Rational(x + 1), Rational(1, 3)});
    in.arbitrary.emplace_back(ramp);

    const auto sq = square(s);
    const std::size_t free_count = n - sq.size();
    if (free_count > 0) {
        std::vector<T> free(free_count);
        for (std::size_t k = 0; k < free_count; ++k) free[k] = from_rational<T>({Rational(2 * k + 1, 2), Rational(-1)});
        in.null_square.push_back(vanishing_on_square(s, free));
    }
    // rho constant: accepted wherever the side conditions allow it
    in.h_specs.push_back({constant_function<T>(s, T(0)), constant_function<T>(s, from_rational<T>({Rational(3), Rational(0)}))});

    if constexpr (scalar_traits<T>::exact) {
        for (auto a : {Rational(0), Rational(1, 2), Rational(2), Rational(-3, 2)}) in.alphas.push_back(T(a));
        // rational q with 1 + q^2 - alpha^2 a rational square
        for (auto a : {Rational(0), Rational(1, 2), Rational(2)})
            for (auto m : {Rational(1), Rational(2), Rational(-1, 3)})
                in.alpha_q.emplace_back(T(a), T(rational_q_with_exact_root(a, m)));
    } else {
        in.alphas = {T(0), T(0.5), T(2), T(0, 1), T(1, -2)};
        in.alpha_q = {{T(0.5), T(0.3)}, {T(0, 1), T(2, -1)}, {T(2), T(0)}, {T(1, -2), T(0, 1.5)}};
    }
    return in;
}

inline std::string tally_detail(const FamilyTally& t) {
    std::ostringstream out;
    out << "verified per family:";
    for (int k = 1; k <= 8; ++k) out << " " << k << ":" << t.verified[k];
    out << "; worst exact " << t.worst_exact << ", worst float " << t.worst_float;
    if (!t.failures.empty()) out << "; first failure: " << t.failures.front();
    return out.str();
}

}  // namespace detail

inline CriterionResult criterion_family_residuals() {
    CriterionResult r{1, "family residuals (exact = 0, float < 1e-9)", false, "", 0, 10};
    detail::FamilyTally tally;

    for (const auto& name : finite_fixture_names()) {
        const auto fx = finite_fixture(name);
        const auto exact_in = detail::finite_inputs<Cyclotomic>(fx.semigroup);
        const auto float_in = detail::finite_inputs<Complex>(fx.semigroup);
        for (std::size_t k = 0; k < fx.sigmas.size(); ++k) {
            const std::string where = name + " sigma" + std::to_string(k);
            detail::sweep_families(tally, where + " exact", fx.semigroup, fx.sigmas[k], exact_in);
            detail::sweep_families(tally, where, fx.semigroup, fx.sigmas[k], float_in);
        }
    }

    {
        const RealLine s;
        detail::FamilyInputs<Complex, RealLine> in;
        for (Complex l : {Complex(0), Complex(1), Complex(2, 1), Complex(0, -0.5)})
            in.characters.push_back(rule_function<Complex>(s, json{{"rule", "exp"}, {"lambda", {l.real(), l.imag()}}}));
        in.arbitrary.push_back(rule_function<Complex>(s, json{{"rule", "isin"}, {"lambda", 3}}));
        in.h_specs.push_back({rule_function<Complex>(s, json{{"rule", "linear"}, {"delta", {0.7, 0}}}),
                              rule_function<Complex>(s, json{{"rule", "zero"}})});
        in.alphas = {Complex(0.5), Complex(0, 1)};
        in.alpha_q = {{Complex(0.5), Complex(2, -1)}};
        for (const auto& name : {"negation", "identity"})
            detail::sweep_families(tally, std::string("real-line ") + name, s, involution_by_name(s, name), in);
    }
    {
        using L = std::complex<long double>;
        const Heisenberg s(2);
        detail::FamilyInputs<L, Heisenberg> in;
        for (auto [a, b] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.5, -1.0}})
            in.characters.push_back(rule_function<L>(s, json{{"rule", "heis-exp"}, {"a", a}, {"b", b}}));
        in.arbitrary.push_back(rule_function<L>(s, json{{"rule", "heis-linear"}, {"a", 1}, {"b", 2}}));
        in.h_specs.push_back({rule_function<L>(s, json{{"rule", "heis-linear"}, {"a", 1}, {"b", -1}}),
                              rule_function<L>(s, json{{"rule", "zero"}})});
        in.alphas = {L(0.5), L(0, 1)};
        in.alpha_q = {{L(0.5), L(2, -1)}};
        for (const auto& name : {"flip", "identity"})
            detail::sweep_families(tally, std::string("heisenberg ") + name, s, involution_by_name(s, name), in);
    }
    {
        const NaturalsFrom2 s;
        detail::FamilyInputs<Complex, NaturalsFrom2> in;
        for (const json& rule : {json{{"rule", "one"}}, json{{"rule", "parity"}}, json{{"rule", "power"}, {"k", 1}}})
            in.characters.push_back(rule_function<Complex>(s, rule));
        in.arbitrary.push_back(rule_function<Complex>(s, json{{"rule", "padic-count"}, {"prime", 3}}));
        in.null_square.push_back(rule_function<Complex>(s, json{{"rule", "prime-indicator"}, {"value", {1.5, -1}}}));
        in.h_specs.push_back({rule_function<Complex>(s, json{{"rule", "padic-count"}, {"prime", 5}}),
                              rule_function<Complex>(s, json{{"rule", "const"}, {"value", {3, 0}}})});
        in.alphas = {Complex(0.5), Complex(0, 1)};
        in.alpha_q = {{Complex(0.5), Complex(2, -1)}};
        detail::sweep_families(tally, "naturals-from-2 identity", s, involution_by_name(s, "identity"), in);
    }

    bool every_family = true;
    for (int k = 1; k <= 8; ++k) every_family = every_family && tally.verified[k] > 0;
    r.passed = tally.failures.empty() && every_family;
    r.detail = detail::tally_detail(tally);
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: family 8 on the real line against cos/sin closed forms

inline CriterionResult criterion_real_line_closed_form() {
    CriterionResult r{2, "real line family 8 matches cos/sin forms to 1e-12", false, "", 0, 0};
    const RealLine s(64);
    const auto sigma = real_negation();
    const Complex i(0, 1);
    double worst = 0;
    std::size_t cases = 0;
    for (Complex lambda : {Complex(1), Complex(2, 1)})
        for (Complex alpha : {Complex(0), Complex(2), Complex(0, 1)}) {
            auto d = FamilyDescriptor<RealLine, Complex>::make(8, alpha);
            d.chi = rule_function<Complex>(s, json{{"rule", "exp"}, {"lambda", scalar_to_json(lambda)}});
            const auto pair = construct(s, sigma, d);
            for (double x : s.window()) {
                const Complex f = alpha * std::cos(lambda * x) + i * std::sin(lambda * x);
                const Complex g = std::cos(lambda * x) + i * alpha * std::sin(lambda * x);
                for (const Complex diff : {*pair.f(x) - f, *pair.g(x) - g})
                    worst = std::max({worst, std::abs(diff.real()), std::abs(diff.imag())});
            }
            ++cases;
        }
    r.passed = cases == 6 && worst <= 1e-12;
    std::ostringstream out;
    out << cases << " (lambda, alpha) cases on 64 points, max deviation " << worst;
    r.detail = out.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: Heisenberg group

inline CriterionResult criterion_heisenberg() {
    using L = std::complex<long double>;
    using D = FamilyDescriptor<Heisenberg, L>;
    CriterionResult r{3, "heisenberg family 8 < 1e-9; only chi = 1 is even, four solution types", false, "", 0, 0};
    const Heisenberg s(3);
    const auto sigma = heisenberg_flip();
    std::ostringstream detail;

    double worst = 0;
    for (auto [a, b] : {std::pair{1, 0}, {1, 2}}) {
        auto d = D::make(8, L(3));
        d.chi = rule_function<L>(s, json{{"rule", "heis-exp"}, {"a", a}, {"b", b}});
        const auto pair = construct(s, sigma, d);
        worst = std::max(worst, residual(s, sigma, d.alpha, pair.g, pair.f).max_residual);
    }
    const bool family8_ok = worst < 1e-9;
    detail << "family 8 max residual " << worst;

    // candidate continuous characters e^{ax+by} and additive ax+by on a parameter grid
    std::vector<std::pair<L, L>> grid;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (L unit : {L(1), L(0, 1)}) grid.emplace_back(unit * L(a), unit * L(b));
    std::size_t even_chars = 0, even_additive = 0;
    bool only_trivial = true;
    for (const auto& [a, b] : grid) {
        json params{{"a", scalar_to_json(a)}, {"b", scalar_to_json(b)}};
        json exp_rule = params, lin_rule = params;
        exp_rule["rule"] = "heis-exp";
        lin_rule["rule"] = "heis-linear";
        const bool trivial = a == L(0) && b == L(0);
        if (is_even_fn(s, rule_function<L>(s, exp_rule), sigma)) {
            ++even_chars;
            only_trivial = only_trivial && trivial;
        }
        if (is_even_fn(s, rule_function<L>(s, lin_rule), sigma)) {
            ++even_additive;
            only_trivial = only_trivial && trivial;
        }
    }
    // the grid repeats (0,0) once per unit
    const bool even_ok = only_trivial && even_chars == 2 && even_additive == 2;
    detail << "; even characters on grid " << even_chars << ", even additive " << even_additive;

    // with chi = 1 the only even character: 5 and 6 need two, 7 collapses to constants
    const auto one = rule_function<L>(s, json{{"rule", "one"}});
    const L alpha(0.5, 0.25);
    std::set<std::string> types{"zero", "family 1 (alpha = +-1)"};
    bool degenerate_ok = true;
    auto is_constant = [&](const auto& fn) {
        const auto c = *fn(H3Element{});
        return is_zero_function(s, lincomb(s, L(1), fn, L(-1), constant_function<L>(s, c)));
    };
    for (int tag : {4, 5, 6, 7}) {
        auto d = D::make(tag, alpha, L(2, -1));
        d.chi = d.chi1 = d.chi2 = one;
        if (tag == 7) d.h_spec = HSpec<Heisenberg, L>{rule_function<L>(s, json{{"rule", "zero"}}), one};
        try {
            const auto pair = construct(s, sigma, d);
            if (tag == 5 || tag == 6) degenerate_ok = false;
            if (!is_constant(pair.g) || !is_constant(pair.f)) degenerate_ok = false;
            types.insert("constants");
        } catch (const std::invalid_argument&) {
            if (tag == 4 || tag == 7) degenerate_ok = false;
        }
    }
    {
        auto d = D::make(8, alpha);
        d.chi = rule_function<L>(s, json{{"rule", "heis-exp"}, {"a", 1}, {"b", 0}});
        construct(s, sigma, d);
        types.insert("family 8");
    }
    detail << "; solution types " << types.size();
    r.passed = family8_ok && even_ok && degenerate_ok && types.size() == 4;
    r.detail = detail.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: naturals under multiplication, parity character

inline CriterionResult criterion_naturals() {
    CriterionResult r{4, "naturals: I_chi = evens, P_chi = 2N \\ 4N, h conditions and sine law hold", false, "", 0, 0};
    const NaturalsFrom2 s(200);
    const auto sigma = identity_involution<std::int64_t>();
    const auto chi = rule_function<Complex>(s, json{{"rule", "parity"}});
    const auto sets = null_sets(s, chi);

    bool sets_ok = true;
    for (std::int64_t n = 2; n <= 200; ++n) {
        sets_ok = sets_ok && sets.i_chi.contains(n) == (n % 2 == 0);
        sets_ok = sets_ok && sets.p_chi.contains(n) == (n % 4 == 2);
    }
    const Complex c(3, -2);
    HSpec<NaturalsFrom2, Complex> spec{rule_function<Complex>(s, json{{"rule", "padic-count"}, {"prime", 5}}),
                                       rule_function<Complex>(s, json{{"rule", "const"}, {"value", scalar_to_json(c)}})};
    const auto report = check_h_conditions(s, sigma, chi, spec);
    const auto h = build_h(s, sigma, chi, spec);
    bool shape_ok = true;
    for (std::int64_t n = 2; n <= 200; ++n) {
        const Complex want = n % 2 ? Complex(static_cast<double>(padic_valuation(n, 5))) : (n % 4 == 2 ? c : Complex(0));
        shape_ok = shape_ok && near(*h(n), want);
    }
    r.passed = sets_ok && shape_ok && report.passed() && report.checked > 0;
    std::ostringstream out;
    out << "|I_chi| = " << sets.i_chi.size() << ", |P_chi| = " << sets.p_chi.size() << ", sets "
        << (sets_ok ? "exact" : "WRONG") << "; h checks " << report.checked << ", counterexamples "
        << report.counterexamples.size() << ", skipped " << report.skipped << "; piecewise h "
        << (shape_ok ? "matches" : "DIFFERS");
    r.detail = out.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: structural property battery

struct LemmaBatteryStats {
    std::size_t solutions = 0;
    std::size_t pchi_reports = 0;
    std::size_t g_reports = 0;
    std::size_t dependence_reports = 0, dependence_nonvacuous = 0;
    std::size_t parity_reports = 0, parity_nonvacuous = 0;
    std::size_t counterexamples = 0;
    std::string first_counterexample;
};

inline LemmaBatteryStats run_lemma_battery(std::size_t target_solutions, std::uint64_t seed) {
    LemmaBatteryStats st;
    auto contexts = finite_contexts();
    RandomDescriptors rnd(seed);
    auto absorb = [&](const PropertyReport& rep, const std::string& where) {
        if (!rep.passed()) {
            if (st.counterexamples == 0)
                st.first_counterexample = where + " " + rep.name + ": " + rep.counterexamples.front().property +
                                          " at " + rep.counterexamples.front().witness;
            st.counterexamples += rep.counterexamples.size();
        }
    };

    for (const auto& c : contexts) {
        const std::string where = c.fixture + " sigma" + std::to_string(c.sigma_index);
        for (const auto& chi : c.table.nonzero()) {
            absorb(check_pchi_lemma(c.s, c.sigma, chi), where);
            ++st.pchi_reports;
        }
        // two-character parity instances: (a, a, b, -b) and (a, -a, b, b) on chi, chi*
        for (const auto& chi : c.table.nonzero()) {
            const auto chi_star = star(c.s, chi, c.sigma);
            for (int k = 0; k < 4; ++k) {
                const Complex a = rnd.scalar(), b = rnd.scalar();
                for (const auto& co : {std::array{a, a, b, -b}, std::array{a, -a, b, b},
                                       std::array{a, rnd.scalar(), b, rnd.scalar()}}) {
                    const auto rep = check_two_character_parity(c.s, c.sigma, chi, chi_star, co[0], co[1], co[2], co[3]);
                    ++st.parity_reports;
                    if (rep.hypothesis_ok) ++st.parity_nonvacuous;
                    absorb(rep, where);
                }
            }
        }
    }

    for (std::size_t k = 0; st.solutions < target_solutions && k < 20 * target_solutions; ++k) {
        const auto& c = contexts[k % contexts.size()];
        auto pair = rnd.solution(c);
        if (!pair) continue;
        ++st.solutions;
        const std::string where = c.fixture + " sigma" + std::to_string(c.sigma_index) + " family " +
                                  std::to_string(pair->provenance->family_tag);
        absorb(check_G_properties(c.s, c.sigma, pair->alpha, pair->g, pair->f), where);
        ++st.g_reports;
        const auto dep = check_null_square_dependence(c.s, c.sigma, rnd.scalar(), pair->f, pair->g);
        ++st.dependence_reports;
        if (dep.hypothesis_ok) ++st.dependence_nonvacuous;
        absorb(dep, where);
    }
    return st;
}

inline CriterionResult criterion_lemma_battery() {
    CriterionResult r{5, "property battery: zero counterexamples over >= 1000 solutions", false, "", 0, 60};
    const auto st = run_lemma_battery(1200, 7);
    r.passed = st.counterexamples == 0 && st.solutions >= 1000;
    std::ostringstream out;
    out << st.solutions << " solutions; reports: pchi " << st.pchi_reports << ", G " << st.g_reports
        << ", dependence " << st.dependence_reports << " (" << st.dependence_nonvacuous << " non-vacuous), parity "
        << st.parity_reports << " (" << st.parity_nonvacuous << " non-vacuous); counterexamples "
        << st.counterexamples;
    if (!st.first_counterexample.empty()) out << "; first: " << st.first_counterexample;
    r.detail = out.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: multiplicative enumeration counts

inline CriterionResult criterion_character_counts() {
    CriterionResult r{6, "multiplicative counts: bool-mult 3, c2 3, c3 4, all exact-verified", false, "", 0, 0};
    std::ostringstream out;
    bool ok = true;
    for (auto [name, expected] : {std::pair{"bool-mult", 3}, {"c2", 3}, {"c3", 4}}) {
        const auto s = finite_fixture(name).semigroup;
        const auto list = enumerate_multiplicative<Cyclotomic>(s);
        bool mult = true;
        for (const auto& m : list) mult = mult && is_multiplicative(s, m.values);
        ok = ok && mult && list.size() == static_cast<std::size_t>(expected);
        out << name << " " << list.size() << (mult ? "" : " (NOT multiplicative)") << "; ";
    }
    r.passed = ok;
    r.detail = out.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: completeness oracle

inline CriterionResult criterion_completeness(const SolverConfig& base = {}) {
    CriterionResult r{7, "completeness oracle: zero unclassified (seed 42, 2000 restarts)", false, "", 0, 300};
    SolverConfig cfg = base;
    cfg.seed = 42;
    cfg.restarts = 2000;
    std::size_t runs = 0, solutions = 0, unclassified = 0, seeded_missed = 0;
    std::string first;
    for (const auto& name : oracle_fixture_names()) {
        const auto fx = finite_fixture(name);
        for (std::size_t k = 0; k < fx.sigmas.size(); ++k)
            for (Complex alpha : {Complex(0), Complex(0.5), Complex(1), Complex(2), Complex(0, 1)}) {
                const auto rep = completeness_check(fx.semigroup, fx.sigmas[k], alpha, cfg);
                ++runs;
                solutions += rep.solutions;
                seeded_missed += rep.seeded_missed;
                if (!rep.unclassified.empty() && first.empty())
                    first = name + " sigma" + std::to_string(k) + " alpha " + format_complex(alpha);
                unclassified += rep.unclassified.size();
            }
    }
    r.passed = unclassified == 0;
    std::ostringstream out;
    out << runs << " runs, " << solutions << " distinct solutions, " << unclassified << " unclassified, "
        << seeded_missed << " seeded family pairs not recovered";
    if (!first.empty()) out << "; first unclassified in " << first;
    r.detail = out.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 8: classify(construct(d)) rebuilds the input pair

inline CriterionResult criterion_classifier_round_trip() {
    CriterionResult r{8, "classifier round trip on 500 random descriptors within 1e-7", false, "", 0, 0};
    auto contexts = finite_contexts();
    RandomDescriptors rnd(2024);
    std::size_t done = 0, failures = 0;
    std::array<std::size_t, 9> input_family{};
    double worst = 0;
    std::string first;
    for (std::size_t k = 0; done < 500 && k < 20000; ++k) {
        const auto& c = contexts[k % contexts.size()];
        auto pair = rnd.solution(c);
        if (!pair) continue;
        ++done;
        ++input_family[pair->provenance->family_tag];
        const auto result = classify(c.s, c.sigma, pair->alpha, pair->g, pair->f, c.table);
        double dist = std::numeric_limits<double>::infinity();
        if (result.descriptor) {
            const auto rebuilt = construct(c.s, c.sigma, *result.descriptor);
            dist = std::max(max_distance(c.s, rebuilt.g, pair->g), max_distance(c.s, rebuilt.f, pair->f));
        }
        worst = std::max(worst, dist);
        if (!(dist < 1e-7)) {
            ++failures;
            if (first.empty())
                first = c.fixture + " sigma" + std::to_string(c.sigma_index) + " family " +
                        std::to_string(pair->provenance->family_tag);
        }
    }
    r.passed = done == 500 && failures == 0;
    std::ostringstream out;
    out << done << " descriptors (per family:";
    for (int k = 1; k <= 8; ++k) out << " " << k << ":" << input_family[k];
    out << "), failures " << failures << ", max rebuild distance " << worst;
    if (!first.empty()) out << "; first failure " << first;
    r.detail = out.str();
    return r;
}

// ---------------------------------------------------------------------------

/// Runs criteria in order, calling `on_result` after each. A criterion that
/// throws fails with the exception text; one over its runtime budget fails.
inline std::vector<CriterionResult> run_suite(const std::function<void(const CriterionResult&)>& on_result = {},
                                              const std::vector<int>& only = {}) {
    const std::vector<std::pair<int, std::function<CriterionResult()>>> all{
        {1, [] { return criterion_family_residuals(); }},   {2, [] { return criterion_real_line_closed_form(); }},
        {3, [] { return criterion_heisenberg(); }},         {4, [] { return criterion_naturals(); }},
        {5, [] { return criterion_lemma_battery(); }},      {6, [] { return criterion_character_counts(); }},
        {7, [] { return criterion_completeness(); }},       {8, [] { return criterion_classifier_round_trip(); }}};
    std::vector<CriterionResult> out;
    for (const auto& [id, fn] : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.id = id;
            r.title = "criterion " + std::to_string(id);
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
            r.passed = false;
            r.detail += "; over runtime budget of " + std::to_string(static_cast<int>(r.budget_seconds)) + " s";
        }
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string format_criterion(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "  (" << std::fixed
        << std::setprecision(2) << r.seconds << " s)\n      " << r.detail;
    return out.str();
}

}  // namespace gcal
