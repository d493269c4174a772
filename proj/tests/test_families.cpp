#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gcal/analysis.hpp"
#include "gcal/families.hpp"
#include "gcal/fixtures.hpp"
#include "gcal/io.hpp"

using namespace gcal;

namespace {

using D = FamilyDescriptor<FiniteSemigroup, Complex>;
using DX = FamilyDescriptor<FiniteSemigroup, Cyclotomic>;

FiniteFunction<Complex> fn(std::vector<Complex> v) { return FiniteFunction<Complex>(std::move(v)); }

const Complex omega = std::polar(1.0, 2 * std::numbers::pi / 3);

// the two characters of C2 and the trivial character of C3, all even under either sigma
const auto c2_trivial = fn({1, 1});
const auto c2_sign = fn({1, -1});

void expect_solution(const FiniteSemigroup& s, const Permutation& sigma, const SolutionPair<FiniteSemigroup, Complex>& p) {
    EXPECT_LE(residual(s, sigma, p.alpha, p.g, p.f).max_residual, 1e-12);
}

}  // namespace

TEST(Family1, GEqualsAlphaF) {
    const auto s = left_zero_semigroup(2);
    const auto sigma = enumerate_involutive_automorphisms(s)[1];
    const auto free = fn({Complex(2, 1), Complex(-3)});
    for (double a : {1.0, -1.0}) {
        auto d = D::make(1, Complex(a));
        d.free_function = free;
        const auto p = construct(s, sigma, d);
        for (std::size_t x = 0; x < 2; ++x) {
            EXPECT_EQ(p.f(x), free(x));
            EXPECT_EQ(p.g(x), a * free(x));
        }
        expect_solution(s, sigma, p);
    }
    auto d = D::make(1, Complex(0.5));
    d.free_function = free;
    EXPECT_THROW(construct(s, sigma, d), std::invalid_argument);
    d = D::make(1, Complex(1));
    d.free_function = fn({0, 0});
    EXPECT_THROW(construct(s, sigma, d), std::invalid_argument);
    EXPECT_THROW(construct(s, sigma, D::make(1, Complex(1))), std::invalid_argument);
}

TEST(Family2And3, VanishOnSquare) {
    const auto s = null_semigroup(3);
    const auto sigmas = enumerate_involutive_automorphisms(s);
    const auto free = vanishing_on_square<Complex>(s, {Complex(1, 1), Complex(-2)});
    EXPECT_EQ(free(0), Complex(0));
    for (const auto& sigma : sigmas) {
        auto d2 = D::make(2, Complex(0.3, 0.2));
        d2.free_function = free;
        const auto p2 = construct(s, sigma, d2);
        EXPECT_EQ(p2.f, free);
        EXPECT_EQ(p2.g, free);
        expect_solution(s, sigma, p2);

        auto d3 = D::make(3, Complex(2));
        d3.free_function = free;
        const auto p3 = construct(s, sigma, d3);
        EXPECT_EQ(p3.g, free);
        for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(p3.f(x), -free(x));
        expect_solution(s, sigma, p3);
    }
    auto bad = D::make(2, Complex(1));
    bad.free_function = free;
    EXPECT_THROW(construct(s, sigmas[0], bad), std::invalid_argument);
    bad = D::make(3, Complex(-1));
    bad.free_function = free;
    EXPECT_THROW(construct(s, sigmas[0], bad), std::invalid_argument);
    bad = D::make(2, Complex(0));
    bad.free_function = fn({1, 1, 0});
    EXPECT_THROW(construct(s, sigmas[0], bad), std::invalid_argument);
    EXPECT_THROW(vanishing_on_square<Complex>(s, {Complex(1)}), std::invalid_argument);
}

TEST(Family4, ClosedForm) {
    const auto s = cyclic_group(2);
    const Permutation id = enumerate_involutive_automorphisms(s)[0];
    const Complex alpha(0.4, 0.1), q(1.5, -0.5);
    for (int branch : {1, -1}) {
        auto d = D::make(4, alpha, q, branch);
        d.chi = c2_sign;
        const auto p = construct(s, id, d);
        const Complex root = double(branch) * std::sqrt(1.0 + q * q - alpha * alpha);
        for (std::size_t x = 0; x < 2; ++x) {
            EXPECT_TRUE(near(p.f(x), (q + alpha) / 2.0 * c2_sign(x)));
            EXPECT_TRUE(near(p.g(x), (1.0 + root) / 2.0 * c2_sign(x)));
        }
        expect_solution(s, id, p);
    }
    auto d = D::make(4, alpha, q);
    d.chi = fn({0, 0});
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
    d.chi = fn({1, 2});
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
    EXPECT_THROW(construct(s, id, D::make(4, alpha, q)), std::invalid_argument);
}

TEST(Family4, OneElementSemigroup) {
    const FiniteSemigroup s(std::vector<std::vector<std::size_t>>{{0}});
    const auto id = enumerate_involutive_automorphisms(s)[0];
    auto d = D::make(4, Complex(0.5), Complex(0.25));
    d.chi = fn({1});
    const auto p = construct(s, id, d);
    // g(0) = g(0)^2 - f(0)^2 + alpha f(0) on a single point
    const Complex g = p.g(0), f = p.f(0);
    EXPECT_TRUE(near(g, g * g - f * f + 0.5 * f));
}

TEST(Family5, ClosedFormAndConditions) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    const Complex alpha(0.5), q(0.2, 0.3);
    auto d = D::make(5, alpha, q, -1);
    d.chi1 = c2_trivial;
    d.chi2 = c2_sign;
    const auto p = construct(s, id, d);
    const Complex root = -std::sqrt(1.0 + q * q - alpha * alpha);
    for (std::size_t x = 0; x < 2; ++x) {
        const Complex sum = (c2_trivial(x) + c2_sign(x)) / 2.0, diff = (c2_trivial(x) - c2_sign(x)) / 2.0;
        EXPECT_TRUE(near(p.f(x), alpha * sum + q * diff));
        EXPECT_TRUE(near(p.g(x), sum + root * diff));
    }
    expect_solution(s, id, p);

    d.q = alpha;
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
    d.q = -alpha;
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
    d.q = q;
    d.chi2 = c2_trivial;
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
}

TEST(Family6, ClosedFormAndConditions) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    auto d = D::make(6, Complex(2));
    d.chi1 = c2_sign;
    d.chi2 = c2_trivial;
    const auto p = construct(s, id, d);
    EXPECT_EQ(p.f, fn({2, -2}));
    EXPECT_EQ(p.g, c2_trivial);
    expect_solution(s, id, p);
    d.alpha = Complex(0);
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
}

TEST(Family6, OddCharacterRejected) {
    const auto s = cyclic_group(3);
    const auto inv = enumerate_involutive_automorphisms(s)[1];
    auto d = D::make(6, Complex(2));
    d.chi1 = fn({1, omega, omega * omega});  // chi o sigma = conj(chi) != chi
    d.chi2 = fn({1, 1, 1});
    EXPECT_THROW(construct(s, inv, d), std::invalid_argument);
}

TEST(Family7, ZeroHReducesToCharacter) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    auto d = D::make(7, Complex(0.7, -0.2));
    d.chi = c2_sign;
    const auto p = construct(s, id, d);
    for (std::size_t x = 0; x < 2; ++x) {
        EXPECT_TRUE(near(p.f(x), Complex(0.7, -0.2) * c2_sign(x)));
        EXPECT_TRUE(near(p.g(x), c2_sign(x)));
    }
    expect_solution(s, id, p);
}

TEST(Family7, PiecewiseHOnNilpotentMonoid) {
    // {1, p, 0}, chi = (1, 0, 0): P_chi = {p}, h = rho on p and 0 elsewhere
    const auto s = nil3_semigroup();
    const auto id = enumerate_involutive_automorphisms(s)[0];
    const auto chi = fn({1, 0, 0});
    const HSpec<FiniteSemigroup, Complex> spec{fn({0, 0, 0}), fn({0, Complex(3, 1), 0})};
    const auto h = build_h(s, id, chi, spec);
    EXPECT_EQ(h, fn({0, Complex(3, 1), 0}));
    for (int branch : {1, -1}) {
        auto d = D::make(7, Complex(0.25), Complex(0), branch);
        d.chi = chi;
        d.h_spec = spec;
        const auto p = construct(s, id, d);
        for (std::size_t x = 0; x < 3; ++x) {
            EXPECT_TRUE(near(p.f(x), 0.25 * chi(x) + h(x)));
            EXPECT_TRUE(near(p.g(x), chi(x) + double(branch) * h(x)));
        }
        expect_solution(s, id, p);
    }
}

TEST(Family7, NaturalsPiecewiseH) {
    const NaturalsFrom2 n(120);
    const auto id = identity_involution<std::int64_t>();
    const auto chi = rule_function<Complex>(n, json{{"rule", "parity"}});
    const HSpec<NaturalsFrom2, Complex> spec{rule_function<Complex>(n, json{{"rule", "padic-count"}, {"prime", 5}}),
                                             rule_function<Complex>(n, json{{"rule", "const"}, {"value", "2"}})};
    const auto h = build_h(n, id, chi, spec);
    for (std::int64_t k = 2; k <= 120; ++k) {
        const Complex want = k % 2 ? Complex(double(padic_valuation(k, 5))) : (k % 4 == 2 ? Complex(2) : Complex(0));
        EXPECT_TRUE(near(*h(k), want)) << k;
    }
    FamilyDescriptor<NaturalsFrom2, Complex> d;
    d.family_tag = 7;
    d.alpha = Complex(0.5);
    d.chi = chi;
    d.h_spec = spec;
    const auto p = construct(n, id, d);
    EXPECT_LE(residual(n, id, Complex(0.5), p.g, p.f).max_residual, 1e-9);
}

TEST(Family7, ConditionOneViolation) {
    // rho(3 * 2) = 1 but rho(2) chi(3) = 0
    const NaturalsFrom2 n(60);
    const auto id = identity_involution<std::int64_t>();
    const auto chi = rule_function<Complex>(n, json{{"rule", "parity"}});
    const HSpec<NaturalsFrom2, Complex> spec{rule_function<Complex>(n, json{{"rule", "zero"}}),
                                             rule_function<Complex>(n, json{{"rule", "padic-count"}, {"prime", 3}})};
    const auto rep = check_h_conditions(n, id, chi, spec);
    ASSERT_FALSE(rep.passed());
    bool saw_condition_one = false;
    for (const auto& c : rep.counterexamples) saw_condition_one |= c.property.rfind("(I)", 0) == 0;
    EXPECT_TRUE(saw_condition_one);
    EXPECT_THROW(build_h(n, id, chi, spec), std::invalid_argument);
}

TEST(Family7, NonAdditiveARejected) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    auto d = D::make(7, Complex(1));
    d.chi = c2_trivial;
    d.h_spec = HSpec<FiniteSemigroup, Complex>{fn({1, 1}), fn({0, 0})};
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
}

TEST(Family8, ClosedFormAndStarIdentities) {
    const auto s = cyclic_group(3);
    const auto inv = enumerate_involutive_automorphisms(s)[1];
    const auto chi = fn({1, omega, omega * omega});
    const Complex alpha(2, 0.5);
    auto d = D::make(8, alpha);
    d.chi = chi;
    const auto p = construct(s, inv, d);
    const auto chi_star = star(s, chi, inv);
    for (std::size_t x = 0; x < 3; ++x) {
        EXPECT_TRUE(near(chi_star(x), std::conj(chi(x))));
        EXPECT_TRUE(near(p.f(x), (1.0 + alpha) / 2.0 * chi(x) - (1.0 - alpha) / 2.0 * chi_star(x)));
        EXPECT_TRUE(near(p.g(x), (1.0 + alpha) / 2.0 * chi(x) + (1.0 - alpha) / 2.0 * chi_star(x)));
        // g + f = (1 + alpha) chi and g - f = (1 - alpha) chi*
        EXPECT_TRUE(near(p.g(x) + p.f(x), (1.0 + alpha) * chi(x)));
        EXPECT_TRUE(near(p.g(x) - p.f(x), (1.0 - alpha) * chi_star(x)));
    }
    expect_solution(s, inv, p);

    d.alpha = Complex(1);
    EXPECT_THROW(construct(s, inv, d), std::invalid_argument);
    d.alpha = Complex(-1);
    EXPECT_THROW(construct(s, inv, d), std::invalid_argument);
    d.alpha = alpha;
    d.chi = fn({1, 1, 1});
    EXPECT_THROW(construct(s, inv, d), std::invalid_argument);
}

TEST(Family8, ExactResidualIsZero) {
    const auto s = cyclic_group(3);
    const auto inv = enumerate_involutive_automorphisms(s)[1];
    auto d = DX::make(8, Cyclotomic(2));
    d.chi = FiniteFunction<Cyclotomic>({Cyclotomic(1), Cyclotomic::zeta_power(4), Cyclotomic::zeta_power(8)});
    const auto p = construct(s, inv, d);
    EXPECT_EQ(residual(s, inv, Cyclotomic(2), p.g, p.f).max_residual, 0.0);
}

TEST(Families, ExactSquareRootAndInexactError) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    const Rational alpha(1, 2);
    for (int m : {1, 2, -3}) {
        const Rational q = rational_q_with_exact_root(alpha, Rational(m));
        const auto root = exact_sqrt(1 + q * q - alpha * alpha);
        ASSERT_TRUE(root.has_value()) << m;
        auto d = DX::make(4, Cyclotomic(alpha), Cyclotomic(q));
        d.chi = FiniteFunction<Cyclotomic>({Cyclotomic(1), Cyclotomic(-1)});
        const auto p = construct(s, id, d);
        EXPECT_EQ(residual(s, id, Cyclotomic(alpha), p.g, p.f).max_residual, 0.0);
    }
    EXPECT_THROW(rational_q_with_exact_root(alpha, Rational(0)), std::invalid_argument);

    // 1 + 1 - 0 = 2 has no square root in the field
    auto d = DX::make(4, Cyclotomic(0), Cyclotomic(1));
    d.chi = FiniteFunction<Cyclotomic>({Cyclotomic(1), Cyclotomic(1)});
    EXPECT_THROW(construct(s, id, d), InexactError);
}

TEST(Families, StructuralProperties) {
    const auto c3 = cyclic_group(3);
    const auto inv = enumerate_involutive_automorphisms(c3)[1];
    const auto trivial = fn({1, 1, 1});
    std::vector<SolutionPair<FiniteSemigroup, Complex>> pairs;
    auto d4 = D::make(4, Complex(0.3), Complex(1.1));
    d4.chi = trivial;
    pairs.push_back(construct(c3, inv, d4));
    auto d7 = D::make(7, Complex(0.3));
    d7.chi = trivial;
    pairs.push_back(construct(c3, inv, d7));
    auto d8 = D::make(8, Complex(0.3));
    d8.chi = fn({1, omega, omega * omega});
    pairs.push_back(construct(c3, inv, d8));
    for (const auto& p : pairs) {
        EXPECT_TRUE(is_abelian_fn(c3, p.g));
        EXPECT_TRUE(is_central(c3, p.g));
        EXPECT_TRUE(is_central(c3, p.f));
    }
    EXPECT_TRUE(is_even_fn(c3, pairs[0].g, inv));
    EXPECT_TRUE(is_even_fn(c3, pairs[1].f, inv));
    EXPECT_FALSE(is_even_fn(c3, pairs[2].g, inv));

    const auto n3 = null_semigroup(3);
    auto d2 = D::make(2, Complex(0));
    d2.free_function = vanishing_on_square<Complex>(n3, {Complex(1), Complex(2)});
    const auto p2 = construct(n3, enumerate_involutive_automorphisms(n3)[0], d2);
    EXPECT_TRUE(is_abelian_fn(n3, p2.g));
    EXPECT_TRUE(is_central(n3, p2.g));
}

TEST(Families, UnknownTagAndBadBranch) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    EXPECT_THROW(construct(s, id, D::make(9, Complex(0))), std::invalid_argument);
    EXPECT_THROW(construct(s, id, D::make(0, Complex(0))), std::invalid_argument);
    auto d = D::make(4, Complex(0), Complex(0), 2);
    d.chi = c2_trivial;
    EXPECT_THROW(construct(s, id, d), std::invalid_argument);
}

TEST(Families, RealLineExponentialFamily8) {
    const RealLine s;
    const auto chi = rule_function<Complex>(s, json{{"rule", "exp"}, {"lambda", {1, 0}}});
    FamilyDescriptor<RealLine, Complex> d;
    d.family_tag = 8;
    d.alpha = Complex(2);
    d.chi = chi;
    const auto p = construct(s, real_negation(), d);
    for (double x : s.window()) {
        EXPECT_TRUE(near(*p.g(x), 1.5 * std::exp(Complex(0, x)) - 0.5 * std::exp(Complex(0, -x))));
        EXPECT_TRUE(near(*p.f(x), 1.5 * std::exp(Complex(0, x)) + 0.5 * std::exp(Complex(0, -x))));
    }
}
