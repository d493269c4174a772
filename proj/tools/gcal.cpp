// gcal: construct, verify, solve and classify solutions of
//   g(x sigma(y)) = g(x)g(y) - f(x)f(y) + alpha f(x sigma(y))
// on built-in fixtures and Cayley-table files.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "gcal/gcal.hpp"

namespace {

using namespace gcal;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Input error: reported and mapped to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// carriers and sigma

struct Target {
    std::string fixture;  // empty for files
    AnyCarrier carrier;
    std::optional<Permutation> file_sigma;
};

Target load_target(const std::string& what, std::optional<long long> window) {
    if (is_finite_fixture(what)) return {what, finite_fixture(what).semigroup, std::nullopt};
    for (const auto& name : procedural_fixture_names())
        if (what == name) return {what, procedural_carrier(what, window), std::nullopt};
    if (!std::filesystem::exists(what))
        throw UsageError("unknown fixture or missing file '" + what + "' (fixtures: c2, c3, leftzero2, null3, "
                         "bool-mult, nil3, real-line, heisenberg, naturals-from-2)");
    auto loaded = load_semigroup(what);
    return {"", std::move(loaded.semigroup), std::move(loaded.sigma)};
}

/// sigma option on a finite carrier: index into the enumeration, or the file's sigma by default.
Permutation finite_sigma(const FiniteSemigroup& s, const std::optional<Permutation>& from_file,
                         const std::string& option) {
    if (option.empty() && from_file) return *from_file;
    const auto all = enumerate_involutive_automorphisms(s);
    std::size_t k = 0;
    if (!option.empty()) {
        try {
            k = std::stoul(option);
        } catch (const std::exception&) {
            throw UsageError("--sigma on a finite carrier is an index into the automorphism list, got '" + option + "'");
        }
    } else if (all.size() > 1) {
        k = 1;  // the first non-identity involution
    }
    if (k >= all.size())
        throw UsageError("--sigma " + std::to_string(k) + " out of range (" + std::to_string(all.size()) +
                         " involutive automorphisms)");
    return all[k];
}

json sigma_to_json(const Permutation& p) { return p.image; }

std::string describe_perm(const Permutation& p) {
    std::string out = "[";
    for (std::size_t k = 0; k < p.image.size(); ++k) out += (k ? " " : "") + std::to_string(p.image[k]);
    return out + "]";
}

// ---------------------------------------------------------------------------
// function references from the command line

/// "@name" looks up --define, an integer is a character index, JSON is taken
/// as is, anything else is a rule name.
json function_ref(const Session& session, const std::string& text) {
    if (text.empty()) throw UsageError("empty function reference");
    if (text[0] == '@') return session.get(text.substr(1));
    if (text.find_first_not_of("0123456789") == std::string::npos) return json{{"character", std::stoul(text)}};
    if (text[0] == '[' || text[0] == '{') {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw UsageError("malformed JSON function reference: " + std::string(e.what()));
        }
    }
    return json{{"rule", text}};
}

json literal_json(const std::string& text) {
    parse_complex(text);  // validates the syntax
    return json(text);
}

// ---------------------------------------------------------------------------
// pair files

struct PairFile {
    json carrier;
    json sigma;
    json alpha;
    std::string mode;
    json descriptor;
    json g, f;  // finite carriers only
};

PairFile read_pair(const std::filesystem::path& path) {
    const auto j = read_json_file(path);
    PairFile p;
    try {
        p.carrier = j.at("carrier");
        p.sigma = j.at("sigma");
        p.alpha = j.at("alpha");
        p.mode = j.value("mode", "float");
        p.descriptor = j.value("descriptor", json());
        p.g = j.value("g", json());
        p.f = j.value("f", json());
    } catch (const json::exception& e) {
        throw UsageError(path.string() + ": " + e.what());
    }
    return p;
}

template <class T>
T alpha_from(const std::string& option, const json& stored) {
    if (!option.empty()) return scalar_traits<T>::from_rational(parse_complex(option));
    return scalar_from_json<T>(stored);
}

// ---------------------------------------------------------------------------
// validate

template <Semigroup S, class Sig>
bool report_involution(const S& s, const Sig& sigma, const std::string& name) {
    const auto rep = validate_involution(s, sigma);
    if (rep.ok()) {
        std::cout << "  sigma " << name << ": involutive automorphism\n";
        return true;
    }
    if (!rep.not_homomorphic.empty()) {
        const auto& [x, y] = rep.not_homomorphic.front();
        std::cout << "  sigma " << name << ": not an automorphism at " << format_tuple(s, {x, y}) << "\n";
    } else {
        std::cout << "  sigma " << name << ": not involutive at " << s.label(rep.not_involutive.front()) << "\n";
    }
    return false;
}

int cmd_validate(const std::string& what, std::optional<long long> window) {
    Target t;
    try {
        t = load_target(what, window);
    } catch (const ValidationError& e) {
        std::cout << what << ": invalid: " << e.what() << "\n";
        return kCheckFailed;
    }
    return std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            const auto rep = validate(s);
            std::cout << what << ": " << s.window().size() << (S::is_finite ? " elements" : " window elements");
            if (!rep.ok()) {
                if (!rep.associativity.empty()) {
                    const auto& a = rep.associativity.front();
                    std::cout << ", not associative at " << format_tuple(s, {a[0], a[1], a[2]}) << "\n";
                } else {
                    std::cout << ", table entries outside the carrier\n";
                }
                return kCheckFailed;
            }
            std::cout << ", associative" << (S::is_finite ? "" : " on the window") << "\n";
            bool ok = true;
            if constexpr (S::is_finite) {
                if (t.file_sigma) ok = report_involution(s, *t.file_sigma, describe_perm(*t.file_sigma));
            } else {
                for (const std::string name : {"identity", "negation", "flip"}) {
                    try {
                        ok = report_involution(s, involution_by_name(s, name), name) && ok;
                    } catch (const std::out_of_range&) {
                    }
                }
            }
            return ok ? kOk : kCheckFailed;
        },
        t.carrier);
}

// ---------------------------------------------------------------------------
// automorphisms, characters

const FiniteSemigroup& need_finite(const Target& t, const char* command) {
    if (auto s = std::get_if<FiniteSemigroup>(&t.carrier)) return *s;
    throw UsageError(std::string(command) + " needs a finite carrier");
}

int cmd_automorphisms(const std::string& what) {
    const auto t = load_target(what, std::nullopt);
    const auto& s = need_finite(t, "automorphisms");
    const auto all = enumerate_involutive_automorphisms(s);
    std::cout << all.size() << " involutive automorphisms of " << what << "\n";
    for (std::size_t k = 0; k < all.size(); ++k)
        std::cout << "  " << k << ": " << describe_perm(all[k]) << (all[k].is_identity() ? "  identity" : "") << "\n";
    return kOk;
}

template <class T>
int characters_of(const FiniteSemigroup& s, const std::string& what) {
    const auto list = enumerate_multiplicative<T>(s);
    const auto sigmas = enumerate_involutive_automorphisms(s);
    std::cout << list.size() << " multiplicative functions on " << what << " (" << scalar_traits<T>::mode << ")\n";
    std::size_t index = 0;
    for (const auto& m : list) {
        std::cout << "  " << (m.zero ? std::string("zero") : "chi" + std::to_string(index++)) << ": "
                  << values_to_json(m.values).dump();
        if (!m.zero) {
            std::cout << "  even under sigma";
            for (std::size_t k = 0; k < sigmas.size(); ++k)
                if (is_even_fn(s, m.values, sigmas[k])) std::cout << " " << k;
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_characters(const std::string& what, bool exact) {
    const auto t = load_target(what, std::nullopt);
    const auto& s = need_finite(t, "characters");
    return exact ? characters_of<Cyclotomic>(s, what) : characters_of<Complex>(s, what);
}

// ---------------------------------------------------------------------------
// nullsets

template <Semigroup S>
void print_subset(const S& s, const char* name, const ElementSubset<element_t<S>>& set) {
    std::cout << name << " (" << set.size() << "): {";
    bool first = true;
    for (const auto& x : set) {
        std::cout << (first ? "" : ", ") << s.label(x);
        first = false;
    }
    std::cout << "}\n";
}

int cmd_nullsets(const std::string& what, const std::string& chi_text, std::optional<long long> window,
                 const std::string& sigma_option, const Session& session) {
    const auto t = load_target(what, window);
    return std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            using T = float_scalar_t<S>;
            const auto chi = resolve_function<T>(s, function_ref(session, chi_text));
            if (!is_multiplicative(s, chi)) {
                std::cout << "chi is not multiplicative\n";
                return kCheckFailed;
            }
            const auto sets = null_sets(s, chi);
            print_subset(s, "I_chi", sets.i_chi);
            print_subset(s, "I_chi^2", sets.i_chi_sq);
            print_subset(s, "P_chi", sets.p_chi);
            if (sets.window_certified) std::cout << "(window-certified: quantifiers range over the window)\n";
            PropertyReport rep;
            if constexpr (S::is_finite) {
                rep = check_pchi_lemma(s, finite_sigma(s, t.file_sigma, sigma_option), chi);
            } else {
                const auto name = sigma_option.empty() ? default_involution_name(t.carrier) : sigma_option;
                rep = check_pchi_lemma(s, involution_by_name(s, name), chi);
            }
            std::cout << "translate and sigma properties of P_chi: " << (rep.passed() ? "hold" : "FAIL") << " ("
                      << rep.checked << " checked, " << rep.skipped << " skipped)\n";
            return rep.passed() ? kOk : kCheckFailed;
        },
        t.carrier);
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
    int family = 0;
    std::string fixture = "c3";
    std::optional<long long> window;
    std::string sigma;
    std::string alpha = "0";
    std::string q = "0";
    int branch = 1;
    std::string chi, chi1, chi2, free, additive, rho;
    std::string lambda, a, b;
    std::string out = "pair.json";
    bool exact = false;
};

json descriptor_json(const ConstructOptions& o, const Session& session, const AnyCarrier& carrier) {
    json d{{"family_tag", o.family}, {"alpha", literal_json(o.alpha)}, {"sign_branch", o.branch}};
    if (o.family == 4 || o.family == 5) d["q"] = literal_json(o.q);
    std::string chi = o.chi;
    // shorthands for the characters of the procedural fixtures
    if (chi.empty() && !o.lambda.empty() && std::holds_alternative<RealLine>(carrier))
        d["chi"] = json{{"rule", "exp"}, {"lambda", literal_json(o.lambda)}};
    else if (chi.empty() && (!o.a.empty() || !o.b.empty()) && std::holds_alternative<Heisenberg>(carrier))
        d["chi"] = json{{"rule", "heis-exp"}, {"a", literal_json(o.a.empty() ? "0" : o.a)},
                        {"b", literal_json(o.b.empty() ? "0" : o.b)}};
    else if (!chi.empty())
        d["chi"] = function_ref(session, chi);
    if (!o.chi1.empty()) d["chi1"] = function_ref(session, o.chi1);
    if (!o.chi2.empty()) d["chi2"] = function_ref(session, o.chi2);
    if (!o.free.empty()) d["free"] = function_ref(session, o.free);
    if (!o.additive.empty() || !o.rho.empty())
        d["h_spec"] = {{"A", function_ref(session, o.additive.empty() ? "zero" : o.additive)},
                       {"rho", function_ref(session, o.rho.empty() ? "zero" : o.rho)}};
    return d;
}

template <class T, Semigroup S, class Sig>
json build_pair(const S& s, const Sig& sigma, const json& djson) {
    const auto d = descriptor_from_json<T>(s, djson);
    const auto pair = construct(s, sigma, d);
    const auto rep = residual(s, sigma, d.alpha, pair.g, pair.f);
    json out{{"alpha", scalar_to_json(d.alpha)}, {"mode", scalar_traits<T>::mode}};
    if constexpr (S::is_finite) {
        out["descriptor"] = descriptor_to_json(*pair.provenance);
        out["g"] = values_to_json(pair.g);
        out["f"] = values_to_json(pair.f);
    } else {
        out["descriptor"] = djson;
    }
    out["max_residual"] = rep.max_residual;
    return out;
}

int cmd_construct(const ConstructOptions& o, const Session& session) {
    const auto t = load_target(o.fixture, o.window);
    const auto djson = descriptor_json(o, session, t.carrier);
    json pair = std::visit(
        [&](const auto& s) -> json {
            using S = std::decay_t<decltype(s)>;
            json out;
            if constexpr (S::is_finite) {
                const auto sigma = finite_sigma(s, t.file_sigma, o.sigma);
                out = o.exact ? build_pair<Cyclotomic>(s, sigma, djson) : build_pair<Complex>(s, sigma, djson);
                out["sigma"] = sigma_to_json(sigma);
            } else {
                if (o.exact) throw UsageError("--exact needs a finite carrier");
                const auto name = o.sigma.empty() ? default_involution_name(t.carrier) : o.sigma;
                out = build_pair<float_scalar_t<S>>(s, involution_by_name(s, name), djson);
                out["sigma"] = name;
            }
            out["carrier"] = carrier_to_json(t.carrier, t.fixture);
            return out;
        },
        t.carrier);
    const auto path = session.resolve_output(o.out);
    write_json_file(path, pair);
    std::cout << "wrote " << path.string() << " (family " << o.family << ", residual " << pair["max_residual"]
              << ")\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// verify, classify

/// Rebuilds the pair of a file and hands it to `fn(s, sigma, alpha, g, f)`.
template <class Fn>
int with_pair(const PairFile& p, const std::string& alpha_option, bool exact, Fn fn) {
    const auto carrier = carrier_from_json(p.carrier);
    if (exact && p.mode != "exact") throw UsageError("--exact needs a pair written in exact mode");
    const bool use_exact = exact || p.mode == "exact";
    return std::visit(
        [&](const auto& s) -> int {
            using S = std::decay_t<decltype(s)>;
            if constexpr (S::is_finite) {
                Permutation sigma{p.sigma.get<std::vector<std::size_t>>()};
                if (!validate_involution(s, sigma).ok()) throw ValidationError("sigma in pair file is not an involutive automorphism");
                auto run = [&](auto tag) {
                    using T = decltype(tag);
                    const auto g = values_from_json<T>(p.g, s.order());
                    const auto f = values_from_json<T>(p.f, s.order());
                    return fn(s, sigma, alpha_from<T>(alpha_option, p.alpha), g, f);
                };
                return use_exact ? run(Cyclotomic()) : run(Complex());
            } else {
                using T = float_scalar_t<S>;
                if (use_exact) throw UsageError("exact mode needs a finite carrier");
                const auto sigma = involution_by_name(s, p.sigma.get<std::string>());
                const auto pair = construct(s, sigma, descriptor_from_json<T>(s, p.descriptor));
                return fn(s, sigma, alpha_from<T>(alpha_option, p.alpha), pair.g, pair.f);
            }
        },
        carrier);
}

int cmd_verify(const std::string& pair_path, const std::string& alpha, bool exact, const Session& session) {
    const auto p = read_pair(session.resolve_output(pair_path));
    return with_pair(p, alpha, exact, [](const auto& s, const auto& sigma, const auto& a, const auto& g, const auto& f) {
        using T = std::decay_t<decltype(a)>;
        const auto rep = residual(s, sigma, a, g, f);
        std::function<std::string(const element_t<std::decay_t<decltype(s)>>&)> label = [&](const auto& x) {
            return s.label(x);
        };
        auto j = verification_to_json(rep, label);
        const bool ok = residual_acceptable<T>(rep.max_residual);
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
        return ok ? kOk : kCheckFailed;
    });
}

int cmd_classify(const std::string& pair_path, const std::string& alpha, bool exact, const Session& session) {
    const auto p = read_pair(session.resolve_output(pair_path));
    return with_pair(p, alpha, exact, [](const auto& s, const auto& sigma, const auto& a, const auto& g, const auto& f) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (!S::is_finite) {
            throw UsageError("classify needs a finite carrier");
            return kUsage;
        } else {
            const auto result = classify(s, sigma, a, g, f);
            std::cout << classification_to_json(result).dump(2) << "\n";
            return result.classified() ? kOk : kCheckFailed;
        }
    });
}

// ---------------------------------------------------------------------------
// solve, suite

int cmd_solve(const std::string& what, const std::string& alpha, const std::string& sigma_option,
              const SolverConfig& cfg, const std::string& out, const Session& session) {
    const auto t = load_target(what, std::nullopt);
    const auto& s = need_finite(t, "solve");
    const auto sigma = finite_sigma(s, t.file_sigma, sigma_option);
    const Complex a = from_literal<Complex>(alpha);
    const auto set = find_solutions(s, sigma, a, cfg);
    const auto lines = solution_set_to_jsonl(set);
    if (out.empty()) {
        std::cout << lines;
    } else {
        const auto path = session.resolve_output(out);
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream(path) << lines;
        std::cout << "wrote " << set.solutions.size() << " solutions to " << path.string() << "\n";
    }
    std::cerr << set.solutions.size() << " distinct solutions from " << set.converged_starts << " converged starts ("
              << set.failed_starts << " failed), sigma " << describe_perm(sigma) << "\n";
    return kOk;
}

int cmd_suite(const std::vector<int>& only) {
    std::size_t failed = 0;
    run_suite(
        [&](const CriterionResult& r) {
            std::cout << format_criterion(r) << std::endl;
            if (!r.passed) ++failed;
        },
        only);
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solutions of g(x sigma(y)) = g(x)g(y) - f(x)f(y) + alpha f(x sigma(y)) on semigroups"};
    app.require_subcommand(1);
    Session session;
    std::vector<std::string> defines;
    app.add_option("--define", defines, "Register a named function: name=<json>, used as @name");
    std::string out_dir;
    app.add_option("--out-dir", out_dir, "Directory for relative output paths (default: $GCAL_OUT_DIR or .)");

    std::string target, chi, alpha, sigma, pair_path, out;
    std::optional<long long> window;
    bool exact = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check associativity (and sigma, if given)");
    validate_cmd->add_option("target", target, "Fixture name or semigroup file")->required();
    validate_cmd->add_option("--window", window, "Window size of a procedural fixture");

    auto* auto_cmd = app.add_subcommand("automorphisms", "List involutive automorphisms of a finite carrier");
    auto_cmd->add_option("target", target, "Fixture name or semigroup file")->required();

    auto* char_cmd = app.add_subcommand("characters", "List multiplicative functions of a finite carrier");
    char_cmd->add_option("target", target, "Fixture name or semigroup file")->required();
    char_cmd->add_flag("--exact", exact, "Exact arithmetic");

    auto* null_cmd = app.add_subcommand("nullsets", "Print I_chi, I_chi^2 and P_chi");
    null_cmd->add_option("target", target, "Fixture name or semigroup file")->required();
    null_cmd->add_option("--chi", chi, "Character: index, rule name, JSON or @name")->required();
    null_cmd->add_option("--window", window, "Window size of a procedural fixture");
    null_cmd->add_option("--sigma", sigma, "Involution: index (finite) or name");

    ConstructOptions co;
    auto* con_cmd = app.add_subcommand("construct", "Build (g, f) from a family descriptor");
    con_cmd->add_option("--family", co.family, "Family 1-8")->required()->check(CLI::Range(1, 8));
    con_cmd->add_option("--fixture", co.fixture, "Fixture name or semigroup file");
    con_cmd->add_option("--window", co.window, "Window size of a procedural fixture");
    con_cmd->add_option("--sigma", co.sigma, "Involution: index (finite) or name");
    con_cmd->add_option("--alpha", co.alpha, "alpha as a+bi");
    con_cmd->add_option("--q", co.q, "q for families 4 and 5");
    con_cmd->add_option("--branch", co.branch, "Sign branch +1 or -1")->check(CLI::IsMember({-1, 1}));
    con_cmd->add_option("--chi", co.chi, "chi: character index, rule name, JSON or @name");
    con_cmd->add_option("--chi1", co.chi1, "chi1 for families 5 and 6");
    con_cmd->add_option("--chi2", co.chi2, "chi2 for families 5 and 6");
    con_cmd->add_option("--free", co.free, "Free function of families 1-3");
    con_cmd->add_option("--A", co.additive, "Additive part of h (family 7)");
    con_cmd->add_option("--rho", co.rho, "Values of h on P_chi (family 7)");
    con_cmd->add_option("--lambda", co.lambda, "real-line: chi(x) = exp(i lambda x)");
    con_cmd->add_option("--a", co.a, "heisenberg: chi = exp(a x + b y)");
    con_cmd->add_option("--b", co.b, "heisenberg: chi = exp(a x + b y)");
    con_cmd->add_option("--out", co.out, "Output pair file");
    con_cmd->add_flag("--exact", co.exact, "Exact arithmetic");

    auto* ver_cmd = app.add_subcommand("verify", "Residual of a pair");
    ver_cmd->add_option("--pair", pair_path, "Pair file")->required();
    ver_cmd->add_option("--alpha", alpha, "alpha as a+bi (default: the pair's)");
    ver_cmd->add_flag("--exact", exact, "Exact arithmetic");

    SolverConfig cfg;
    auto* solve_cmd = app.add_subcommand("solve", "Multi-start Newton on a finite carrier");
    solve_cmd->add_option("target", target, "Fixture name or semigroup file")->required();
    solve_cmd->add_option("--alpha", alpha, "alpha as a+bi")->required();
    solve_cmd->add_option("--sigma", sigma, "Involution index");
    solve_cmd->add_option("--seed", cfg.seed, "Random seed");
    solve_cmd->add_option("--restarts", cfg.restarts, "Random starts");
    solve_cmd->add_option("--out", out, "Write JSON lines here instead of stdout");

    auto* cls_cmd = app.add_subcommand("classify", "Family and parameters of a pair");
    cls_cmd->add_option("--pair", pair_path, "Pair file")->required();
    cls_cmd->add_option("--alpha", alpha, "alpha as a+bi (default: the pair's)");
    cls_cmd->add_flag("--exact", exact, "Exact arithmetic");

    std::vector<int> only;
    auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance battery");
    suite_cmd->add_option("--only", only, "Criterion numbers to run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (!out_dir.empty()) session.set_output_dir(out_dir);
        for (const auto& d : defines) {
            const auto eq = d.find('=');
            if (eq == std::string::npos) throw UsageError("--define expects name=<json>");
            json value;
            try {
                value = json::parse(d.substr(eq + 1));
            } catch (const json::parse_error& e) {
                throw UsageError("--define " + d.substr(0, eq) + ": " + e.what());
            }
            session.add(d.substr(0, eq), std::move(value));
        }

        if (*validate_cmd) return cmd_validate(target, window);
        if (*auto_cmd) return cmd_automorphisms(target);
        if (*char_cmd) return cmd_characters(target, exact);
        if (*null_cmd) return cmd_nullsets(target, chi, window, sigma, session);
        if (*con_cmd) return cmd_construct(co, session);
        if (*ver_cmd) return cmd_verify(pair_path, alpha, exact, session);
        if (*solve_cmd) {
            cfg.validate();
            return cmd_solve(target, alpha, sigma, cfg, out, session);
        }
        if (*cls_cmd) return cmd_classify(pair_path, alpha, exact, session);
        if (*suite_cmd) return cmd_suite(only);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
