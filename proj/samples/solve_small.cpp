// Solves on the left-zero semigroup of order 2 and classifies what comes back.

#include <iostream>

#include "gcal/gcal.hpp"

int main() {
    using namespace gcal;
    const auto s = left_zero_semigroup(2);
    const auto sigma = enumerate_involutive_automorphisms(s)[1];
    SolverConfig cfg;
    cfg.seed = 42;
    cfg.restarts = 500;
    const Complex alpha(0.5);

    const auto set = find_solutions(s, sigma, alpha, cfg);
    const CharacterTable<Complex> table(s, sigma);
    std::cout << set.solutions.size() << " solutions from " << set.converged_starts << " converged starts\n";
    for (const auto& p : set.solutions) {
        const auto r = classify(s, sigma, alpha, p.g, p.f, table);
        std::cout << "  g = " << values_to_json(p.g).dump() << "  f = " << values_to_json(p.f).dump() << "  family "
                  << (r.family_tag ? std::to_string(*r.family_tag) : std::string("?"))
                  << (p.non_isolated ? "  (non-isolated)" : "") << "\n";
    }
}
