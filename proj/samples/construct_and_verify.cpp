// Builds a family-8 pair on the real line and on C3, then checks the residual.

#include <iostream>

#include "gcal/gcal.hpp"

int main() {
    using namespace gcal;

    const RealLine line;
    FamilyDescriptor<RealLine, Complex> d;
    d.family_tag = 8;
    d.alpha = Complex(2);
    d.chi = rule_function<Complex>(line, json{{"rule", "exp"}, {"lambda", {1, 0}}});
    const auto pair = construct(line, real_negation(), d);
    const auto rep = residual(line, real_negation(), d.alpha, pair.g, pair.f);
    std::cout << "real line, family 8: max residual " << rep.max_residual << " over " << rep.pair_count
              << " pairs\n";

    // exact mode: chi(k) = omega^k on C3, sigma = inversion
    const auto c3 = cyclic_group(3);
    const auto inv = enumerate_involutive_automorphisms(c3)[1];
    auto dx = FamilyDescriptor<FiniteSemigroup, Cyclotomic>::make(8, Cyclotomic(2));
    dx.chi = FiniteFunction<Cyclotomic>({Cyclotomic(1), Cyclotomic::zeta_power(4), Cyclotomic::zeta_power(8)});
    const auto exact = construct(c3, inv, dx);
    std::cout << "C3, family 8, exact: residual " << residual(c3, inv, dx.alpha, exact.g, exact.f).max_residual
              << "\n  g = " << values_to_json(exact.g).dump() << "\n  f = " << values_to_json(exact.f).dump() << "\n";
    return rep.ok() ? 0 : 1;
}
