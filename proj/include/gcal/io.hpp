#pragma once

/**
 * @file io.hpp
 * @brief Semigroup text files, JSON codecs for scalars, functions, carriers,
 *        descriptors and reports, and the named rules that define functions
 *        on procedural carriers.
 *
 * Semigroup file:
 *
 *     # comment
 *     order 3
 *     0 1 2
 *     1 2 0
 *     2 0 1
 *     sigma 0 2 1
 *
 * Function references in JSON:
 *   [[re, im], ...]            values by element (finite carriers)
 *   {"character": k}           k-th non-zero multiplicative function (finite)
 *   {"rule": "...", ...}       named rule, see rule_function()
 *
 * Exact scalars are ["p/q", "p/q"] for Gaussian rationals and
 * {"zeta12": [c0, c1, c2, c3]} otherwise.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gcal/classify.hpp"
#include "gcal/families.hpp"
#include "gcal/fixtures.hpp"
#include "gcal/solver.hpp"

namespace gcal {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A structurally well-formed file whose table or sigma violates an axiom.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedSemigroup {
    FiniteSemigroup semigroup;
    std::optional<Permutation> sigma;
};

// ---------------------------------------------------------------------------
// Semigroup text format

namespace detail {

inline std::size_t parse_index(const std::string& token, std::size_t line) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
    try {
        return static_cast<std::size_t>(std::stoull(token));
    } catch (const std::out_of_range&) {
        throw ParseError(line, "integer out of range: '" + token + "'");
    }
}

inline std::vector<std::string> tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

}  // namespace detail

inline LoadedSemigroup parse_semigroup(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::size_t order = 0;
    std::size_t order_line = 0;
    std::vector<std::vector<std::size_t>> rows;
    std::vector<std::size_t> row_lines;
    std::optional<Permutation> sigma;
    std::size_t sigma_line = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto toks = detail::tokens(raw);
        if (toks.empty()) continue;
        if (order == 0) {
            if (toks[0] != "order" || toks.size() != 2) throw ParseError(line_no, "expected 'order n'");
            order = detail::parse_index(toks[1], line_no);
            if (order == 0) throw ParseError(line_no, "order must be positive");
            order_line = line_no;
            continue;
        }
        if (toks[0] == "sigma") {
            if (rows.size() != order) throw ParseError(line_no, "sigma must follow all " + std::to_string(order) + " rows");
            if (sigma) throw ParseError(line_no, "duplicate sigma line");
            if (toks.size() != order + 1)
                throw ParseError(line_no, "sigma needs " + std::to_string(order) + " entries");
            Permutation p;
            for (std::size_t k = 1; k < toks.size(); ++k) p.image.push_back(detail::parse_index(toks[k], line_no));
            sigma = std::move(p);
            sigma_line = line_no;
            continue;
        }
        if (rows.size() == order) throw ParseError(line_no, "unexpected content after the Cayley table");
        if (sigma) throw ParseError(line_no, "unexpected content after sigma");
        if (toks.size() != order)
            throw ParseError(line_no, "row has " + std::to_string(toks.size()) + " entries, expected " +
                                          std::to_string(order));
        std::vector<std::size_t> row;
        for (const auto& t : toks) {
            const auto v = detail::parse_index(t, line_no);
            if (v >= order)
                throw ParseError(line_no, "entry " + t + " is not an element index below " + std::to_string(order));
            row.push_back(v);
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }
    if (order == 0) throw ParseError(line_no, "missing 'order n' line");
    if (rows.size() != order)
        throw ParseError(line_no, "expected " + std::to_string(order) + " rows after line " +
                                      std::to_string(order_line) + ", found " + std::to_string(rows.size()));

    LoadedSemigroup out{FiniteSemigroup(std::move(rows)), std::nullopt};
    const auto report = validate(out.semigroup);
    if (!report.associativity.empty()) {
        const auto& t = report.associativity.front();
        throw ValidationError("not associative: (xy)z != x(yz) at (x, y, z) = (" + std::to_string(t[0]) + ", " +
                              std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")");
    }
    if (sigma) {
        std::vector<bool> seen(order, false);
        for (auto v : sigma->image) {
            if (v >= order || seen[v]) throw ParseError(sigma_line, "sigma is not a permutation of 0.." + std::to_string(order - 1));
            seen[v] = true;
        }
        const auto inv = validate_involution(out.semigroup, *sigma);
        if (!inv.not_homomorphic.empty()) {
            const auto& [x, y] = inv.not_homomorphic.front();
            throw ValidationError("sigma is not an automorphism: sigma(xy) != sigma(x)sigma(y) at (x, y) = (" +
                                  std::to_string(x) + ", " + std::to_string(y) + ")");
        }
        if (!inv.not_involutive.empty())
            throw ValidationError("sigma is not involutive: sigma(sigma(x)) != x at x = " +
                                  std::to_string(inv.not_involutive.front()));
        out.sigma = std::move(sigma);
    }
    return out;
}

inline LoadedSemigroup load_semigroup(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_semigroup(buf.str());
}

inline std::string format_semigroup(const FiniteSemigroup& s, const std::optional<Permutation>& sigma = std::nullopt) {
    std::ostringstream out;
    out << "order " << s.order() << "\n";
    for (std::size_t x = 0; x < s.order(); ++x) {
        for (std::size_t y = 0; y < s.order(); ++y) out << (y ? " " : "") << s.compose(x, y);
        out << "\n";
    }
    if (sigma) {
        out << "sigma";
        for (auto v : sigma->image) out << " " << v;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Scalars

namespace detail {

inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(trim(text), false);
    const Rational num = parse_decimal(trim(std::string_view(text).substr(0, slash)), false);
    const Rational den = parse_decimal(trim(std::string_view(text).substr(slash + 1)), false);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return num / den;
}

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("exact value must be an integer or a \"p/q\" string: " + j.dump());
}

}  // namespace detail

template <class T>
json scalar_to_json(const T& z) {
    if constexpr (scalar_traits<T>::exact) {
        if (z.is_gaussian()) return json::array({z.gaussian_re().str(), z.gaussian_im().str()});
        json coeffs = json::array();
        for (const auto& c : z.coeffs()) coeffs.push_back(c.str());
        return json{{"zeta12", coeffs}};
    } else {
        return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
    }
}

/// Accepts [re, im], a bare real, or a complex literal string ("2-0.5i").
template <class T>
T scalar_from_json(const json& j) {
    if constexpr (scalar_traits<T>::exact) {
        if (j.is_object() && j.contains("zeta12")) {
            const auto& c = j.at("zeta12");
            if (!c.is_array() || c.size() != 4) throw std::invalid_argument("zeta12 needs 4 coefficients");
            return Cyclotomic::from_coeffs({detail::rational_from_json(c[0]), detail::rational_from_json(c[1]),
                                            detail::rational_from_json(c[2]), detail::rational_from_json(c[3])});
        }
        if (j.is_array() && j.size() == 2)
            return Cyclotomic(detail::rational_from_json(j[0]), detail::rational_from_json(j[1]));
        if (j.is_string()) {
            const auto s = j.get<std::string>();
            if (s.find('/') != std::string::npos) return Cyclotomic(detail::parse_rational(s));
            return Cyclotomic(parse_complex(s));
        }
        if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long long>()));
        throw std::invalid_argument("malformed exact scalar: " + j.dump());
    } else {
        using R = typename T::value_type;
        if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
            return T(static_cast<R>(j[0].get<double>()), static_cast<R>(j[1].get<double>()));
        if (j.is_number()) return T(static_cast<R>(j.get<double>()), R(0));
        if (j.is_string()) return scalar_traits<T>::from_rational(parse_complex(j.get<std::string>()));
        throw std::invalid_argument("malformed complex value: " + j.dump());
    }
}

template <class T>
json values_to_json(const FiniteFunction<T>& f) {
    json out = json::array();
    for (const auto& v : f.values) out.push_back(scalar_to_json(v));
    return out;
}

template <class T>
FiniteFunction<T> values_from_json(const json& j, std::size_t order) {
    if (!j.is_array()) throw std::invalid_argument("function values must be an array");
    if (j.size() != order)
        throw std::invalid_argument("function has " + std::to_string(j.size()) + " values, carrier order is " +
                                    std::to_string(order));
    std::vector<T> values;
    for (const auto& v : j) values.push_back(scalar_from_json<T>(v));
    return FiniteFunction<T>(std::move(values));
}

// ---------------------------------------------------------------------------
// Carriers and involutions

using AnyCarrier = std::variant<FiniteSemigroup, RealLine, Heisenberg, NaturalsFrom2>;

/// Float scalar used on a carrier: Heisenberg values grow like e^{18} on the
/// default window, beyond what double resolves at an absolute 1e-9.
template <class S>
using float_scalar_t = std::conditional_t<std::is_same_v<S, Heisenberg>, std::complex<long double>, Complex>;

/// Window parameter: grid points (real-line), radius (heisenberg), upper bound (naturals).
inline AnyCarrier procedural_carrier(const std::string& name, std::optional<long long> window = std::nullopt) {
    if (name == "real-line") return RealLine(static_cast<std::size_t>(window.value_or(64)));
    if (name == "heisenberg") return Heisenberg(static_cast<long>(window.value_or(3)));
    if (name == "naturals-from-2") return NaturalsFrom2(window.value_or(65));
    throw std::out_of_range("unknown fixture '" + name + "'");
}

inline AnyCarrier carrier_by_name(const std::string& name, std::optional<long long> window = std::nullopt) {
    if (is_finite_fixture(name)) return finite_fixture(name).semigroup;
    return procedural_carrier(name, window);
}

inline json carrier_to_json(const AnyCarrier& c, const std::string& fixture = "") {
    return std::visit(
        [&](const auto& s) -> json {
            using S = std::decay_t<decltype(s)>;
            json out;
            if (!fixture.empty()) out["fixture"] = fixture;
            if constexpr (std::is_same_v<S, FiniteSemigroup>) {
                out["order"] = s.order();
                out["cayley"] = s.cayley();
            } else if constexpr (std::is_same_v<S, RealLine>) {
                out["window"] = s.points();
            } else if constexpr (std::is_same_v<S, Heisenberg>) {
                out["window"] = s.radius();
            } else {
                out["window"] = s.upper();
            }
            return out;
        },
        c);
}

inline AnyCarrier carrier_from_json(const json& j) {
    if (j.contains("cayley")) {
        auto table = j.at("cayley").get<std::vector<std::vector<std::size_t>>>();
        FiniteSemigroup s(std::move(table));
        if (!validate(s).ok()) throw ValidationError("carrier table is not a semigroup");
        return s;
    }
    if (!j.contains("fixture")) throw std::invalid_argument("carrier needs 'fixture' or 'cayley'");
    std::optional<long long> window;
    if (j.contains("window")) window = j.at("window").get<long long>();
    return carrier_by_name(j.at("fixture").get<std::string>(), window);
}

inline Involution<double> involution_by_name(const RealLine&, const std::string& name) {
    if (name == "negation") return real_negation();
    if (name == "identity") return identity_involution<double>();
    throw std::out_of_range("unknown involution '" + name + "' on real-line (negation, identity)");
}

inline Involution<H3Element> involution_by_name(const Heisenberg&, const std::string& name) {
    if (name == "flip") return heisenberg_flip();
    if (name == "identity") return identity_involution<H3Element>();
    throw std::out_of_range("unknown involution '" + name + "' on heisenberg (flip, identity)");
}

inline Involution<std::int64_t> involution_by_name(const NaturalsFrom2&, const std::string& name) {
    if (name == "identity") return identity_involution<std::int64_t>();
    throw std::out_of_range("unknown involution '" + name + "' on naturals-from-2 (identity)");
}

/// Default involution: the first non-identity one where available.
inline std::string default_involution_name(const AnyCarrier& c) {
    if (std::holds_alternative<RealLine>(c)) return "negation";
    if (std::holds_alternative<Heisenberg>(c)) return "flip";
    return "identity";
}

// ---------------------------------------------------------------------------
// Function rules

namespace detail {

template <class T>
T rule_scalar(const json& rule, const char* key, const char* fallback = nullptr) {
    if (rule.contains(key)) return scalar_from_json<T>(rule.at(key));
    if (fallback) return scalar_from_json<T>(json(fallback));
    throw std::invalid_argument(std::string("rule '") + rule.value("rule", "") + "' needs '" + key + "'");
}

template <class E, class T>
std::optional<ProceduralFunction<E, T>> common_rule(const json& rule) {
    const auto name = rule.at("rule").get<std::string>();
    if (name == "zero") return ProceduralFunction<E, T>{[](const E&) -> std::optional<T> { return T(0); }};
    if (name == "one") return ProceduralFunction<E, T>{[](const E&) -> std::optional<T> { return T(1); }};
    if (name == "const") {
        const T c = rule_scalar<T>(rule, "value");
        return ProceduralFunction<E, T>{[c](const E&) -> std::optional<T> { return c; }};
    }
    return std::nullopt;
}

[[noreturn]] inline void unknown_rule(const json& rule, const char* carrier, const char* known) {
    throw std::invalid_argument("unknown rule '" + rule.value("rule", std::string("?")) + "' on " + carrier +
                                " (" + known + ")");
}

}  // namespace detail

/**
 * real-line rules: exp (e^{i lambda x}, key "lambda"), linear (delta*x,
 * key "delta"), cos and isin (cos(lambda x), i sin(lambda x)), const, one, zero.
 */
template <class T>
ProceduralFunction<double, T> rule_function(const RealLine&, const json& rule) {
    if (auto f = detail::common_rule<double, T>(rule)) return *f;
    const auto name = rule.at("rule").get<std::string>();
    using R = typename T::value_type;
    if (name == "exp" || name == "cos" || name == "isin") {
        const T lambda = detail::rule_scalar<T>(rule, "lambda");
        const T i(0, 1);
        if (name == "exp") return {[=](const double& x) -> std::optional<T> { return std::exp(i * lambda * R(x)); }};
        if (name == "cos") return {[=](const double& x) -> std::optional<T> { return std::cos(lambda * R(x)); }};
        return {[=](const double& x) -> std::optional<T> { return i * std::sin(lambda * R(x)); }};
    }
    if (name == "linear") {
        const T delta = detail::rule_scalar<T>(rule, "delta");
        return {[=](const double& x) -> std::optional<T> { return delta * R(x); }};
    }
    detail::unknown_rule(rule, "real-line", "exp, cos, isin, linear, const, one, zero");
}

/// heisenberg rules: heis-exp (e^{a x + b y}), heis-linear (a x + b y), const, one, zero.
template <class T>
ProceduralFunction<H3Element, T> rule_function(const Heisenberg&, const json& rule) {
    if (auto f = detail::common_rule<H3Element, T>(rule)) return *f;
    const auto name = rule.at("rule").get<std::string>();
    using R = typename T::value_type;
    const T a = detail::rule_scalar<T>(rule, "a", "0");
    const T b = detail::rule_scalar<T>(rule, "b", "0");
    if (name == "heis-exp")
        return {[=](const H3Element& e) -> std::optional<T> { return std::exp(a * R(e.x) + b * R(e.y)); }};
    if (name == "heis-linear")
        return {[=](const H3Element& e) -> std::optional<T> { return a * R(e.x) + b * R(e.y); }};
    detail::unknown_rule(rule, "heisenberg", "heis-exp, heis-linear, const, one, zero");
}

/**
 * naturals-from-2 rules: parity (1 on odd, 0 on even), padic-count (key
 * "prime"), power (n^k, key "k"), prime-indicator (value on primes, 0 on
 * S^2), const, one, zero.
 */
template <class T>
ProceduralFunction<std::int64_t, T> rule_function(const NaturalsFrom2&, const json& rule) {
    using E = std::int64_t;
    if (auto f = detail::common_rule<E, T>(rule)) return *f;
    const auto name = rule.at("rule").get<std::string>();
    if (name == "parity") return {[](const E& n) -> std::optional<T> { return n % 2 ? T(1) : T(0); }};
    if (name == "padic-count") {
        const auto p = rule.value("prime", 5);
        if (!is_prime(p)) throw std::invalid_argument("padic-count needs a prime");
        return {[p](const E& n) -> std::optional<T> { return T(static_cast<int>(padic_valuation(n, p))); }};
    }
    if (name == "power") {
        const int k = rule.value("k", 1);
        return {[k](const E& n) -> std::optional<T> { return std::pow(T(static_cast<double>(n)), k); }};
    }
    if (name == "prime-indicator") {
        const T c = detail::rule_scalar<T>(rule, "value", "1");
        return {[c](const E& n) -> std::optional<T> { return is_prime(n) ? c : T(0); }};
    }
    detail::unknown_rule(rule, "naturals-from-2", "parity, padic-count, power, prime-indicator, const, one, zero");
}

/// Resolves a function reference on a finite carrier.
template <class T>
FiniteFunction<T> resolve_function(const FiniteSemigroup& s, const json& ref) {
    if (ref.is_array()) return values_from_json<T>(ref, s.order());
    if (ref.is_object() && ref.contains("character")) {
        const auto k = ref.at("character").get<std::size_t>();
        std::vector<FiniteFunction<T>> nonzero;
        for (auto& m : enumerate_multiplicative<T>(s, std::max(s.order(), kDefaultMultiplicativeBound)))
            if (!m.zero) nonzero.push_back(std::move(m.values));
        if (k >= nonzero.size())
            throw std::out_of_range("character " + std::to_string(k) + " does not exist (" +
                                    std::to_string(nonzero.size()) + " non-zero multiplicative functions)");
        return nonzero[k];
    }
    if (ref.is_object() && ref.contains("rule")) {
        if (auto f = detail::common_rule<std::size_t, T>(ref)) return make_function<T>(s, *f);
        detail::unknown_rule(ref, "a finite carrier", "const, one, zero");
    }
    throw std::invalid_argument("malformed function reference: " + ref.dump());
}

template <class T, class S>
    requires(!std::is_same_v<S, FiniteSemigroup>)
function_t<S, T> resolve_function(const S& s, const json& ref) {
    if (!ref.is_object() || !ref.contains("rule"))
        throw std::invalid_argument("functions on procedural carriers are given by rule: " + ref.dump());
    return rule_function<T>(s, ref);
}

// ---------------------------------------------------------------------------
// Descriptors

template <class T, Semigroup S>
FamilyDescriptor<S, T> descriptor_from_json(const S& s, const json& j) {
    auto d = FamilyDescriptor<S, T>::make(j.at("family_tag").get<int>(), scalar_from_json<T>(j.at("alpha")));
    if (j.contains("q")) d.q = scalar_from_json<T>(j.at("q"));
    d.sign_branch = j.value("sign_branch", 1);
    auto fn = [&](const char* key) -> std::optional<function_t<S, T>> {
        if (!j.contains(key)) return std::nullopt;
        return resolve_function<T>(s, j.at(key));
    };
    d.chi = fn("chi");
    d.chi1 = fn("chi1");
    d.chi2 = fn("chi2");
    d.free_function = fn("free");
    if (j.contains("h_spec")) {
        const auto& h = j.at("h_spec");
        d.h_spec = HSpec<S, T>{resolve_function<T>(s, h.at("A")), resolve_function<T>(s, h.at("rho"))};
    }
    return d;
}

/// Finite carriers only: every function is written out as values.
template <class T>
json descriptor_to_json(const FamilyDescriptor<FiniteSemigroup, T>& d) {
    json out;
    out["family_tag"] = d.family_tag;
    out["alpha"] = scalar_to_json(d.alpha);
    if (d.family_tag == 4 || d.family_tag == 5) out["q"] = scalar_to_json(d.q);
    if (d.family_tag == 4 || d.family_tag == 5 || d.family_tag == 7) out["sign_branch"] = d.sign_branch;
    if (d.chi) out["chi"] = values_to_json(*d.chi);
    if (d.chi1) out["chi1"] = values_to_json(*d.chi1);
    if (d.chi2) out["chi2"] = values_to_json(*d.chi2);
    if (d.free_function) out["free"] = values_to_json(*d.free_function);
    if (d.h_spec) out["h_spec"] = {{"A", values_to_json(d.h_spec->additive)}, {"rho", values_to_json(d.h_spec->rho)}};
    return out;
}

// ---------------------------------------------------------------------------
// Reports

template <class E>
json verification_to_json(const VerificationReport<E>& r, const std::function<std::string(const E&)>& label) {
    json out{{"max_residual", r.max_residual}, {"pair_count", r.pair_count}, {"skipped_pairs", r.skipped_pairs},
             {"mode", r.mode}};
    if (r.worst_pair) out["worst_pair"] = {label(r.worst_pair->first), label(r.worst_pair->second)};
    return out;
}

template <class T>
json classification_to_json(const ClassificationResult<T>& r) {
    json out;
    out["family_tag"] = r.family_tag ? json(*r.family_tag) : json("unclassified");
    out["params"] = r.descriptor ? descriptor_to_json(*r.descriptor) : json(nullptr);
    out["match_residual"] = r.match_residual;
    out["max_residual"] = r.max_residual;
    return out;
}

inline json property_report_to_json(const PropertyReport& r) {
    json ce = json::array();
    for (const auto& c : r.counterexamples) ce.push_back({{"property", c.property}, {"witness", c.witness}});
    return {{"name", r.name},           {"passed", r.passed()},       {"hypothesis_ok", r.hypothesis_ok},
            {"note", r.hypothesis_note}, {"checked", r.checked},       {"skipped", r.skipped},
            {"window_certified", r.window_certified}, {"counterexamples", ce}};
}

/// One JSON line per solution.
inline std::string solution_set_to_jsonl(const SolutionSet& set) {
    std::string out;
    for (const auto& p : set.solutions) {
        json line{{"g", values_to_json(p.g)},
                  {"f", values_to_json(p.f)},
                  {"residual", p.residual},
                  {"non_isolated", p.non_isolated}};
        out += line.dump() + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Session

/// Named functions and descriptors of one CLI invocation plus where files go.
class Session {
public:
    Session() {
        if (const char* dir = std::getenv("GCAL_OUT_DIR"); dir && *dir) output_dir_ = dir;
    }

    const std::filesystem::path& output_dir() const { return output_dir_; }
    void set_output_dir(std::filesystem::path dir) { output_dir_ = std::move(dir); }

    /// Relative paths are placed in the output directory.
    std::filesystem::path resolve_output(const std::filesystem::path& p) const {
        return p.is_absolute() ? p : output_dir_ / p;
    }

    void add(const std::string& name, json value) {
        if (!registry_.emplace(name, std::move(value)).second)
            throw std::invalid_argument("name '" + name + "' is already registered in this session");
    }
    const json& get(const std::string& name) const {
        auto it = registry_.find(name);
        if (it == registry_.end()) throw std::out_of_range("no function or descriptor named '" + name + "'");
        return it->second;
    }
    bool contains(const std::string& name) const { return registry_.count(name) != 0; }

private:
    std::filesystem::path output_dir_ = ".";
    std::map<std::string, json> registry_;
};

inline void write_json_file(const std::filesystem::path& path, const json& j) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace gcal
