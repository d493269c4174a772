// Prints which family each constructed pair on C2 is classified into.

#include <iostream>

#include "gcal/gcal.hpp"

int main() {
    using namespace gcal;
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    const FiniteFunction<Complex> trivial({Complex(1), Complex(1)}), sign({Complex(1), Complex(-1)});
    using D = FamilyDescriptor<FiniteSemigroup, Complex>;

    std::vector<D> inputs;
    auto d1 = D::make(1, Complex(1));
    d1.free_function = FiniteFunction<Complex>({Complex(2), Complex(0, 1)});
    inputs.push_back(d1);
    auto d4 = D::make(4, Complex(0.5), Complex(2));
    d4.chi = sign;
    inputs.push_back(d4);
    auto d5 = D::make(5, Complex(0.5), Complex(0.125));
    d5.chi1 = trivial;
    d5.chi2 = sign;
    inputs.push_back(d5);
    auto d6 = D::make(6, Complex(2));
    d6.chi1 = sign;
    d6.chi2 = trivial;
    inputs.push_back(d6);
    auto d7 = D::make(7, Complex(3));
    d7.chi = trivial;
    inputs.push_back(d7);

    const CharacterTable<Complex> table(s, id);
    for (const auto& d : inputs) {
        const auto p = construct(s, id, d);
        const auto r = classify(s, id, d.alpha, p.g, p.f, table);
        std::cout << "built as " << d.family_tag << "  ->  "
                  << (r.family_tag ? "family " + std::to_string(*r.family_tag) : std::string("unclassified"))
                  << "  (match residual " << r.match_residual << ")\n";
    }
}
