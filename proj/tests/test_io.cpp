#include <cstdlib>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "gcal/io.hpp"

using namespace gcal;

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_semigroup(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(SemigroupText, ParsesCommentsAndSigma) {
    const auto loaded = parse_semigroup("# cyclic group of order 3\norder 3\n0 1 2\n1 2 0  # row 1\n2 0 1\n\nsigma 0 2 1\n");
    EXPECT_EQ(loaded.semigroup.order(), 3u);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(loaded.semigroup.compose(x, y), (x + y) % 3);
    ASSERT_TRUE(loaded.sigma.has_value());
    EXPECT_EQ(loaded.sigma->image, (std::vector<std::size_t>{0, 2, 1}));
}

TEST(SemigroupText, FormatRoundTrip) {
    for (const auto& name : finite_fixture_names()) {
        const auto fx = finite_fixture(name);
        const auto sigma = fx.sigmas.back();
        const auto loaded = parse_semigroup(format_semigroup(fx.semigroup, sigma));
        ASSERT_EQ(loaded.semigroup.order(), fx.semigroup.order());
        for (std::size_t x = 0; x < fx.semigroup.order(); ++x)
            for (std::size_t y = 0; y < fx.semigroup.order(); ++y)
                EXPECT_EQ(loaded.semigroup.compose(x, y), fx.semigroup.compose(x, y));
        EXPECT_EQ(loaded.sigma->image, sigma.image);
    }
}

TEST(SemigroupText, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("order 2\n0 1\n1\n"), 3u);
    EXPECT_EQ(parse_error_line("\n# header\n0 1\n"), 3u);
    EXPECT_EQ(parse_error_line("order 2\n0 1\n1 5\n"), 3u);
    EXPECT_EQ(parse_error_line("order 2\n0 1\n1 x\n"), 3u);
    EXPECT_EQ(parse_error_line("order 2\n0 1\n1 0\nsigma 1\n"), 4u);
    EXPECT_EQ(parse_error_line("order 2\n0 1\n1 0\nsigma 0 0\n"), 4u);
    EXPECT_EQ(parse_error_line("order 2\n0 1\n1 0\n1 1\n"), 4u);
    EXPECT_NE(parse_error_line("order 3\n0 1 2\n"), 0u);
    EXPECT_THROW(parse_semigroup(""), ParseError);
}

TEST(SemigroupText, AxiomViolationsAreValidationErrors) {
    try {
        parse_semigroup("order 2\n1 1\n0 0\n");
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("(x, y, z) = ("), std::string::npos);
    }
    // swapping 0 and 1 on {0,1} under multiplication is not a homomorphism
    EXPECT_THROW(parse_semigroup("order 2\n0 0\n0 1\nsigma 1 0\n"), ValidationError);
}

TEST(ScalarJson, FloatRoundTripIsExact) {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int k = 0; k < 200; ++k) {
        const Complex z(u(rng), u(rng));
        const auto text = scalar_to_json(z).dump();
        EXPECT_EQ(scalar_from_json<Complex>(json::parse(text)), z);
    }
    EXPECT_EQ(scalar_from_json<Complex>(json(2.5)), Complex(2.5));
    EXPECT_EQ(scalar_from_json<Complex>(json("1-2i")), Complex(1, -2));
    EXPECT_THROW(scalar_from_json<Complex>(json("1+2j")), std::invalid_argument);
    EXPECT_THROW(scalar_from_json<Complex>(json::object()), std::invalid_argument);
}

TEST(ScalarJson, ExactRoundTrip) {
    const std::vector<Cyclotomic> values{Cyclotomic(Rational(1, 8)), Cyclotomic(Rational(-3), Rational(7, 2)),
                                         Cyclotomic::zeta_power(1), Cyclotomic::zeta_power(4) + Cyclotomic(Rational(2, 3))};
    for (const auto& z : values) EXPECT_EQ(scalar_from_json<Cyclotomic>(scalar_to_json(z)), z);
    EXPECT_EQ(scalar_to_json(Cyclotomic(Rational(1, 8))), json::array({"1/8", "0"}));
    EXPECT_TRUE(scalar_to_json(Cyclotomic::zeta_power(1)).contains("zeta12"));
    EXPECT_EQ(scalar_from_json<Cyclotomic>(json("0.125")), Cyclotomic(Rational(1, 8)));
    EXPECT_EQ(scalar_from_json<Cyclotomic>(json("-3/4")), Cyclotomic(Rational(-3, 4)));
    EXPECT_THROW(scalar_from_json<Cyclotomic>(json(0.5)), std::invalid_argument);
    EXPECT_THROW(scalar_from_json<Cyclotomic>(json("1/0")), std::invalid_argument);
}

TEST(ValuesJson, RoundTripAndLength) {
    const FiniteFunction<Complex> f({Complex(1, 2), Complex(-0.1, 0.3)});
    EXPECT_EQ(values_from_json<Complex>(values_to_json(f), 2), f);
    EXPECT_THROW(values_from_json<Complex>(values_to_json(f), 3), std::invalid_argument);
}

TEST(DescriptorJson, RoundTripRebuildsThePair) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    auto d = FamilyDescriptor<FiniteSemigroup, Cyclotomic>::make(5, Cyclotomic(Rational(1, 2)), Cyclotomic(Rational(1, 8)), -1);
    d.chi1 = FiniteFunction<Cyclotomic>({Cyclotomic(1), Cyclotomic(1)});
    d.chi2 = FiniteFunction<Cyclotomic>({Cyclotomic(1), Cyclotomic(-1)});
    const auto j = descriptor_to_json(d);
    const auto back = descriptor_from_json<Cyclotomic>(s, json::parse(j.dump()));
    EXPECT_EQ(descriptor_to_json(back), j);
    const auto p1 = construct(s, id, d), p2 = construct(s, id, back);
    EXPECT_EQ(p1.g, p2.g);
    EXPECT_EQ(p1.f, p2.f);
}

TEST(DescriptorJson, CharacterReferences) {
    const auto s = cyclic_group(2);
    const auto d = descriptor_from_json<Complex>(s, json{{"family_tag", 6}, {"alpha", 2}, {"chi1", {{"character", 1}}},
                                                         {"chi2", {{"character", 0}}}});
    ASSERT_TRUE(d.chi1 && d.chi2);
    EXPECT_FALSE(functions_near(s, *d.chi1, *d.chi2));
    EXPECT_THROW(resolve_function<Complex>(s, json{{"character", 2}}), std::out_of_range);
    EXPECT_THROW(resolve_function<Complex>(s, json{{"rule", "parity"}}), std::invalid_argument);
    EXPECT_THROW(resolve_function<Complex>(s, json("oops")), std::invalid_argument);
}

TEST(Rules, ValuesAndUnknownNames) {
    const NaturalsFrom2 n(40);
    EXPECT_EQ(*rule_function<Complex>(n, json{{"rule", "padic-count"}, {"prime", 5}})(50), Complex(2));
    EXPECT_EQ(*rule_function<Complex>(n, json{{"rule", "padic-count"}})(25), Complex(2));
    EXPECT_EQ(*rule_function<Complex>(n, json{{"rule", "prime-indicator"}, {"value", "2i"}})(7), Complex(0, 2));
    EXPECT_EQ(*rule_function<Complex>(n, json{{"rule", "prime-indicator"}})(9), Complex(0));
    EXPECT_EQ(*rule_function<Complex>(n, json{{"rule", "power"}, {"k", 2}})(6), Complex(36));
    EXPECT_THROW(rule_function<Complex>(n, json{{"rule", "padic-count"}, {"prime", 4}}), std::invalid_argument);
    EXPECT_THROW(rule_function<Complex>(n, json{{"rule", "exp"}}), std::invalid_argument);
    EXPECT_THROW(rule_function<Complex>(RealLine(), json{{"rule", "parity"}}), std::invalid_argument);
    EXPECT_THROW(resolve_function<Complex>(n, json::array({1, 2})), std::invalid_argument);

    const Heisenberg h(1);
    const auto lin = rule_function<std::complex<long double>>(h, json{{"rule", "heis-linear"}, {"a", 2}, {"b", -1}});
    EXPECT_EQ(*lin(H3Element{1, 1, 0}), std::complex<long double>(1));
}

TEST(CarrierJson, RoundTrip) {
    const auto finite = carrier_to_json(carrier_by_name("c3"), "c3");
    const auto back = carrier_from_json(json::parse(finite.dump()));
    ASSERT_TRUE(std::holds_alternative<FiniteSemigroup>(back));
    EXPECT_EQ(std::get<FiniteSemigroup>(back).compose(2, 2), 1u);

    const auto nat = carrier_from_json(carrier_to_json(carrier_by_name("naturals-from-2", 90), "naturals-from-2"));
    ASSERT_TRUE(std::holds_alternative<NaturalsFrom2>(nat));
    EXPECT_EQ(std::get<NaturalsFrom2>(nat).window().back(), 90);
    EXPECT_THROW(carrier_by_name("no-such-fixture"), std::out_of_range);
}

TEST(ReportJson, ClassificationKeys) {
    const auto s = cyclic_group(2);
    const auto id = enumerate_involutive_automorphisms(s)[0];
    const auto r = classify(s, id, Complex(2), FiniteFunction<Complex>({Complex(1), Complex(1)}),
                            FiniteFunction<Complex>({Complex(2), Complex(-2)}));
    const auto j = classification_to_json(r);
    for (const char* key : {"family_tag", "params", "match_residual", "max_residual"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j.at("family_tag"), 6);
    EXPECT_EQ(j.at("params").at("family_tag"), 6);

    ClassificationResult<Complex> none;
    EXPECT_EQ(classification_to_json(none).at("family_tag"), "unclassified");
}

TEST(Session, NamesAreUniqueAndOutputDirComesFromEnvironment) {
    Session a;
    a.add("chi", json{{"character", 1}});
    EXPECT_TRUE(a.contains("chi"));
    EXPECT_THROW(a.add("chi", json(1)), std::invalid_argument);
    EXPECT_THROW(a.get("missing"), std::out_of_range);

    const auto dir = std::filesystem::temp_directory_path() / "gcal_io_test";
    ::setenv("GCAL_OUT_DIR", dir.c_str(), 1);
    Session b;
    ::unsetenv("GCAL_OUT_DIR");
    EXPECT_EQ(b.resolve_output("pair.json"), dir / "pair.json");
    EXPECT_EQ(b.resolve_output("/abs/pair.json"), std::filesystem::path("/abs/pair.json"));

    const json payload{{"k", 1}};
    write_json_file(b.resolve_output("sub/x.json"), payload);
    EXPECT_EQ(read_json_file(dir / "sub" / "x.json"), payload);
    std::filesystem::remove_all(dir);
    EXPECT_THROW(read_json_file(dir / "sub" / "x.json"), std::runtime_error);
}
