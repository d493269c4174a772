#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gcal/fixtures.hpp"
#include "gcal/functions.hpp"
#include "gcal/io.hpp"

using namespace gcal;

namespace {

FiniteFunction<Complex> random_function(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-2, 2);
    std::vector<Complex> v(n);
    for (auto& z : v) z = {u(rng), u(rng)};
    return FiniteFunction<Complex>(v);
}

// oracle: every assignment of {0} + 12th roots of unity, filtered by the definition
std::vector<std::vector<Cyclotomic>> brute_force_multiplicative(const FiniteSemigroup& s) {
    std::vector<Cyclotomic> candidates{Cyclotomic(0)};
    for (int k = 0; k < 12; ++k) candidates.push_back(Cyclotomic::zeta_power(k));
    const std::size_t n = s.order();
    std::vector<std::size_t> digit(n, 0);
    std::vector<std::vector<Cyclotomic>> out;
    while (true) {
        std::vector<Cyclotomic> chi(n);
        for (std::size_t x = 0; x < n; ++x) chi[x] = candidates[digit[x]];
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t y = 0; y < n && ok; ++y) ok = chi[s.compose(x, y)] == chi[x] * chi[y];
        if (ok) out.push_back(chi);
        std::size_t k = 0;
        while (k < n && ++digit[k] == candidates.size()) digit[k++] = 0;
        if (k == n) break;
    }
    return out;
}

}  // namespace

TEST(Star, IdentityAndInvolution) {
    std::mt19937 rng(1);
    for (const auto& name : finite_fixture_names()) {
        const auto fx = finite_fixture(name);
        const auto f = random_function(fx.semigroup.order(), rng);
        EXPECT_EQ(star(fx.semigroup, f, fx.sigmas[0]), f);
        for (const auto& sigma : fx.sigmas) EXPECT_EQ(star(fx.semigroup, star(fx.semigroup, f, sigma), sigma), f);
    }
}

TEST(Star, Linear) {
    std::mt19937 rng(2);
    const auto s = cyclic_group(3);
    const auto sigma = enumerate_involutive_automorphisms(s)[1];
    const auto f = random_function(3, rng), g = random_function(3, rng);
    const Complex a(1, 2), b(-0.5, 3);
    const auto lhs = star(s, lincomb(s, a, f, b, g), sigma);
    const auto rhs = lincomb(s, a, star(s, f, sigma), b, star(s, g, sigma));
    EXPECT_TRUE(functions_near(s, lhs, rhs));
}

TEST(Star, RealLineExponential) {
    const RealLine s;
    const Complex lambda(2, 1), i(0, 1);
    const auto chi = rule_function<Complex>(s, json{{"rule", "exp"}, {"lambda", {2, 1}}});
    const auto chi_star = star(s, chi, real_negation());
    for (double x : s.window()) EXPECT_TRUE(near(*chi_star(x), std::exp(-i * lambda * x)));
}

TEST(Parity, DecompositionOnFiniteCarriers) {
    std::mt19937 rng(4);
    for (const auto& name : finite_fixture_names()) {
        const auto fx = finite_fixture(name);
        const auto& s = fx.semigroup;
        for (const auto& sigma : fx.sigmas) {
            const auto f = random_function(s.order(), rng);
            const auto e = even_part(s, f, sigma), o = odd_part(s, f, sigma);
            EXPECT_TRUE(functions_near(s, lincomb(s, Complex(1), e, Complex(1), o), f));
            EXPECT_TRUE(is_even_fn(s, e, sigma));
            EXPECT_TRUE(is_odd_fn(s, o, sigma));
            EXPECT_TRUE(is_zero_function(s, even_part(s, o, sigma)));
        }
    }
}

TEST(Parity, EvenFunctionIsItsOwnEvenPart) {
    const auto s = cyclic_group(3);
    const auto sigma = enumerate_involutive_automorphisms(s)[1];
    const FiniteFunction<Complex> f({Complex(2), Complex(1, 1), Complex(1, 1)});
    EXPECT_TRUE(functions_near(s, even_part(s, f, sigma), f));
    EXPECT_TRUE(is_zero_function(s, odd_part(s, f, sigma)));
}

TEST(Parity, RealLineEulerFormula) {
    const RealLine s;
    const Complex lambda(1.5, -0.5), i(0, 1);
    const auto chi = rule_function<Complex>(s, json{{"rule", "exp"}, {"lambda", {1.5, -0.5}}});
    const auto e = even_part(s, chi, real_negation());
    const auto o = odd_part(s, chi, real_negation());
    for (double x : s.window()) {
        EXPECT_TRUE(near(*e(x), std::cos(lambda * x)));
        EXPECT_TRUE(near(*o(x), i * std::sin(lambda * x)));
    }
}

TEST(Multiplicative, Examples) {
    const auto bm = bool_mult_semigroup();
    EXPECT_TRUE(is_multiplicative(bm, constant_function<Complex>(bm, Complex(0))));
    const NaturalsFrom2 n(200);
    EXPECT_TRUE(is_multiplicative(n, rule_function<Complex>(n, json{{"rule", "parity"}})));
    EXPECT_FALSE(is_multiplicative(n, rule_function<Complex>(n, json{{"rule", "prime-indicator"}})));

    std::vector<std::int64_t> odd;
    for (std::int64_t k = 3; k <= 200; k += 2) odd.push_back(k);
    const auto five = rule_function<Complex>(n, json{{"rule", "padic-count"}, {"prime", 5}});
    EXPECT_TRUE(is_additive(n, ElementSubset<std::int64_t>(odd), five));
    const auto linear = rule_function<Complex>(n, json{{"rule", "power"}, {"k", 1}});
    EXPECT_FALSE(is_additive(n, ElementSubset<std::int64_t>(odd), linear));
}

TEST(EnumerateMultiplicative, CanonicalListsForSmallCarriers) {
    auto values = [](const std::vector<MultiplicativeFunction<Cyclotomic>>& list) {
        std::vector<std::vector<Cyclotomic>> out;
        for (const auto& m : list) out.push_back(m.values.values);
        return out;
    };
    const auto bm = enumerate_multiplicative<Cyclotomic>(bool_mult_semigroup());
    ASSERT_EQ(bm.size(), 3u);
    EXPECT_EQ(values(bm), (std::vector<std::vector<Cyclotomic>>{{0, 0}, {0, 1}, {1, 1}}));
    EXPECT_TRUE(bm[0].zero);
    EXPECT_FALSE(bm[1].zero);

    const auto c2 = enumerate_multiplicative<Cyclotomic>(cyclic_group(2));
    EXPECT_EQ(values(c2), (std::vector<std::vector<Cyclotomic>>{{0, 0}, {1, 1}, {1, -1}}));
    EXPECT_EQ(enumerate_multiplicative<Cyclotomic>(cyclic_group(3)).size(), 4u);
    EXPECT_THROW(enumerate_multiplicative<Complex>(cyclic_group(7)), std::length_error);
}

TEST(EnumerateMultiplicative, MatchesBruteForceOnEveryFixture) {
    for (const auto& name : finite_fixture_names()) {
        const auto s = finite_fixture(name).semigroup;
        const auto list = enumerate_multiplicative<Cyclotomic>(s);
        std::vector<std::vector<Cyclotomic>> got;
        for (const auto& m : list) {
            EXPECT_TRUE(is_multiplicative(s, m.values)) << name;
            got.push_back(m.values.values);
        }
        auto expected = brute_force_multiplicative(s);
        auto key = [](const std::vector<Cyclotomic>& v) {
            std::string k;
            for (const auto& c : v) k += c.str() + "|";
            return k;
        };
        std::set<std::string> a, b;
        for (const auto& v : got) a.insert(key(v));
        for (const auto& v : expected) b.insert(key(v));
        EXPECT_EQ(a.size(), got.size()) << name << ": duplicates";
        EXPECT_EQ(a, b) << name;
    }
}

TEST(EnumerateMultiplicative, FloatAgreesWithExact) {
    for (const auto& name : finite_fixture_names()) {
        const auto s = finite_fixture(name).semigroup;
        const auto ex = enumerate_multiplicative<Cyclotomic>(s);
        const auto fl = enumerate_multiplicative<Complex>(s);
        ASSERT_EQ(ex.size(), fl.size()) << name;
        for (std::size_t k = 0; k < ex.size(); ++k)
            for (std::size_t x = 0; x < s.order(); ++x) EXPECT_TRUE(near(to_complex(ex[k](x)), fl[k](x)));
    }
}

TEST(CyclicData, IndexAndPeriod) {
    const auto c3 = cyclic_group(3);
    EXPECT_EQ(cyclic_data(c3, 1).index, 1u);
    EXPECT_EQ(cyclic_data(c3, 1).period, 3u);
    const auto n3 = null_semigroup(3);
    EXPECT_EQ(cyclic_data(n3, 1).index, 2u);
    EXPECT_EQ(cyclic_data(n3, 1).period, 1u);
}

TEST(EnumerateAdditive, OnlyZeroOnFiniteSubsemigroups) {
    for (const auto& name : finite_fixture_names()) {
        const auto s = finite_fixture(name).semigroup;
        const std::size_t n = s.order();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> elems;
            for (std::size_t x = 0; x < n; ++x)
                if (mask & (1u << x)) elems.push_back(x);
            const ElementSubset<std::size_t> sub(elems);
            bool closed = true;
            for (auto x : elems)
                for (auto y : elems) closed = closed && sub.contains(s.compose(x, y));
            if (!closed) continue;
            EXPECT_TRUE(enumerate_additive<Cyclotomic>(s, sub).empty()) << name << " mask " << mask;
        }
    }
}

TEST(NullSets, Examples) {
    const auto c3 = cyclic_group(3);
    const auto nowhere_zero = constant_function<Complex>(c3, Complex(1));
    const auto sets = null_sets(c3, nowhere_zero);
    EXPECT_TRUE(sets.i_chi.empty());
    EXPECT_TRUE(sets.p_chi.empty());
    EXPECT_FALSE(sets.window_certified);

    const auto bm = bool_mult_semigroup();
    const auto b = null_sets(bm, FiniteFunction<Complex>({Complex(0), Complex(1)}));
    EXPECT_EQ(b.i_chi, ElementSubset<std::size_t>({0}));
    EXPECT_EQ(b.i_chi_sq, ElementSubset<std::size_t>({0}));
    EXPECT_TRUE(b.p_chi.empty());

    EXPECT_THROW(null_sets(bm, constant_function<Complex>(bm, Complex(0))), std::invalid_argument);
}

TEST(NullSets, NilpotentMonoidHasNonEmptyP) {
    // {1, p, 0} with p^2 = 0; chi = (1, 0, 0) gives I = {p, 0}, I^2 = {0}, P = {p}
    const auto s = nil3_semigroup();
    const auto sets = null_sets(s, FiniteFunction<Complex>({Complex(1), Complex(0), Complex(0)}));
    EXPECT_EQ(sets.i_chi, ElementSubset<std::size_t>({1, 2}));
    EXPECT_EQ(sets.i_chi_sq, ElementSubset<std::size_t>({2}));
    EXPECT_EQ(sets.p_chi, ElementSubset<std::size_t>({1}));
}

TEST(NullSets, NaturalsParity) {
    const NaturalsFrom2 n(200);
    const auto sets = null_sets(n, rule_function<Complex>(n, json{{"rule", "parity"}}));
    EXPECT_TRUE(sets.window_certified);
    for (std::int64_t k = 2; k <= 200; ++k) {
        EXPECT_EQ(sets.i_chi.contains(k), k % 2 == 0);
        EXPECT_EQ(sets.i_chi_sq.contains(k), k % 4 == 0);
        EXPECT_EQ(sets.p_chi.contains(k), k % 4 == 2);
    }
    // 3 is outside I_chi and 2 in P_chi, so 6 must be in P_chi
    EXPECT_TRUE(sets.p_chi.contains(6));
    EXPECT_TRUE(sets.i_chi_sq.subset_of(sets.i_chi));
}

TEST(PchiProperties, HoldOnEveryFixtureCharacterAndSigma) {
    for (const auto& name : finite_fixture_names()) {
        const auto fx = finite_fixture(name);
        for (const auto& m : enumerate_multiplicative<Complex>(fx.semigroup)) {
            if (m.zero) continue;
            for (const auto& sigma : fx.sigmas) {
                const auto rep = check_pchi_lemma(fx.semigroup, sigma, m.values);
                EXPECT_TRUE(rep.passed()) << name;
                EXPECT_GT(rep.checked, 0u);
            }
        }
    }
    const NaturalsFrom2 n(120);
    const auto rep = check_pchi_lemma(n, identity_involution<std::int64_t>(),
                                      rule_function<Complex>(n, json{{"rule", "parity"}}));
    EXPECT_TRUE(rep.passed());
    EXPECT_TRUE(rep.window_certified);
}
