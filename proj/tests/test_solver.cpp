#include <sstream>

#include <gtest/gtest.h>

#include "gcal/fixtures.hpp"
#include "gcal/io.hpp"
#include "gcal/solver.hpp"

using namespace gcal;

namespace {

SolverConfig small_config(std::uint64_t seed = 1, std::size_t restarts = 300) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    return cfg;
}

Permutation sigma_of(const FiniteSemigroup& s, std::size_t k) { return enumerate_involutive_automorphisms(s).at(k); }

}  // namespace

TEST(Solver, OneElementSemigroupLiesOnTheCurve) {
    const FiniteSemigroup s(std::vector<std::vector<std::size_t>>{{0}});
    const Complex alpha(0.5, 0.25);
    const auto set = find_solutions(s, sigma_of(s, 0), alpha, small_config());
    ASSERT_FALSE(set.solutions.empty());
    for (const auto& p : set.solutions) {
        // one equation in two unknowns: g = g^2 - f^2 + alpha f
        const Complex g = p.g(0), f = p.f(0);
        EXPECT_LT(std::abs(g * g - f * f + alpha * f - g), 1e-9);
        EXPECT_TRUE(p.non_isolated);
    }
}

TEST(Solver, SolutionsAreSoundAndClassified) {
    const auto s = cyclic_group(2);
    const auto id = sigma_of(s, 0);
    const auto set = find_solutions(s, id, Complex(0), small_config());
    ASSERT_FALSE(set.solutions.empty());
    const CharacterTable<Complex> table(s, id);
    for (const auto& p : set.solutions) {
        EXPECT_LE(residual(s, id, Complex(0), p.g, p.f).max_residual, kIdentityTolerance);
        EXPECT_NEAR(p.residual, residual(s, id, Complex(0), p.g, p.f).max_residual, 1e-12);
        const auto r = classify(s, id, Complex(0), p.g, p.f, table);
        ASSERT_TRUE(r.classified());
        if (!p.non_isolated) {
            EXPECT_TRUE(*r.family_tag == 4 || *r.family_tag == 5) << *r.family_tag;
        }
    }
}

TEST(Solver, AlphaOneRecoversFamily1) {
    const auto s = cyclic_group(2);
    const auto id = sigma_of(s, 0);
    const auto set = find_solutions(s, id, Complex(1), small_config());
    const CharacterTable<Complex> table(s, id);
    bool saw_family_1 = false;
    for (const auto& p : set.solutions) {
        const auto r = classify(s, id, Complex(1), p.g, p.f, table);
        saw_family_1 |= r.family_tag == 1;
    }
    EXPECT_TRUE(saw_family_1);
}

TEST(Solver, DeterministicForAFixedSeed) {
    const auto s = left_zero_semigroup(2);
    const auto sigma = sigma_of(s, 1);
    const auto a = find_solutions(s, sigma, Complex(0.5), small_config(7));
    const auto b = find_solutions(s, sigma, Complex(0.5), small_config(7));
    ASSERT_EQ(a.solutions.size(), b.solutions.size());
    for (std::size_t k = 0; k < a.solutions.size(); ++k) {
        EXPECT_EQ(a.solutions[k].g, b.solutions[k].g);
        EXPECT_EQ(a.solutions[k].f, b.solutions[k].f);
    }
    EXPECT_EQ(solution_set_to_jsonl(a), solution_set_to_jsonl(b));
}

TEST(Solver, DeduplicatedPointsAreSeparated) {
    const auto s = cyclic_group(3);
    const auto sigma = sigma_of(s, 1);
    const auto cfg = small_config(3);
    const auto set = find_solutions(s, sigma, Complex(2), cfg);
    for (std::size_t i = 0; i < set.solutions.size(); ++i)
        for (std::size_t j = i + 1; j < set.solutions.size(); ++j) {
            const double d = std::max(max_distance(s, set.solutions[i].g, set.solutions[j].g),
                                      max_distance(s, set.solutions[i].f, set.solutions[j].f));
            EXPECT_GE(d, cfg.dedup_radius);
        }
}

TEST(Solver, RejectsOversizedCarrierAndBadConfig) {
    const auto s = cyclic_group(5);
    EXPECT_THROW(find_solutions(s, sigma_of(s, 0), Complex(0), small_config()), std::length_error);
    SolverConfig bad;
    bad.dedup_radius = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = SolverConfig{};
    bad.newton_max_iters = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_NO_THROW(SolverConfig{}.validate());
}

TEST(Completeness, SmallFixtures) {
    struct Case {
        FiniteSemigroup s;
        std::size_t sigma;
        Complex alpha;
    };
    const std::vector<Case> cases{{left_zero_semigroup(2), 1, Complex(0.5)},
                                  {cyclic_group(3), 1, Complex(2)},
                                  {null_semigroup(3), 0, Complex(0.3, 0.1)},
                                  {bool_mult_semigroup(), 0, Complex(-1)}};
    for (const auto& c : cases) {
        const auto rep = completeness_check(c.s, sigma_of(c.s, c.sigma), c.alpha, small_config(5, 400));
        EXPECT_TRUE(rep.unclassified.empty()) << c.s.order() << " alpha " << c.alpha;
        EXPECT_EQ(rep.seeded_missed, 0u);
        EXPECT_GT(rep.seeded_total, 0u);
        EXPECT_GT(rep.solutions, 0u);
    }
}

TEST(SeededPairs, AreSolutions) {
    for (const auto& name : oracle_fixture_names()) {
        const auto fx = finite_fixture(name);
        for (const auto& sigma : fx.sigmas)
            for (const auto& p : seeded_family_pairs(fx.semigroup, sigma, Complex(0.7), 1))
                EXPECT_LE(residual(fx.semigroup, sigma, Complex(0.7), p.g, p.f).max_residual, 1e-9) << name;
    }
}

TEST(SolutionJsonl, OneObjectPerLine) {
    const auto s = cyclic_group(2);
    const auto set = find_solutions(s, sigma_of(s, 0), Complex(0.5), small_config());
    std::istringstream in(solution_set_to_jsonl(set));
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        const auto j = json::parse(line);
        EXPECT_EQ(j.at("g").size(), 2u);
        EXPECT_EQ(j.at("f").size(), 2u);
        EXPECT_TRUE(j.at("residual").is_number());
        EXPECT_TRUE(j.at("non_isolated").is_boolean());
        const auto g = values_from_json<Complex>(j.at("g"), 2);
        EXPECT_EQ(g, set.solutions[lines].g);
        ++lines;
    }
    EXPECT_EQ(lines, set.solutions.size());
}
