#pragma once

/**
 * @file fixtures.hpp
 * @brief Built-in carriers.
 *
 * Finite: c2, c3 (cyclic groups), leftzero2 (xy = x), null3 (every product
 * is the zero z), bool-mult ({0,1} under multiplication) and nil3 (the monoid
 * {1, p, 0} with p^2 = 0, the smallest carrier with a non-empty P_chi).
 *
 * Procedural: the additive reals sampled on a uniform grid over [-pi, pi];
 * the Heisenberg group H3 as integer triples with
 * (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y'); and (N \ {1}, *) on [2, upper].
 */

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gcal/semigroup.hpp"

namespace gcal {

// ---------------------------------------------------------------------------
// Finite built-ins

inline FiniteSemigroup cyclic_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) t[x][y] = (x + y) % n;
        labels.push_back(x == 0 ? "e" : (x == 1 ? "g" : "g^" + std::to_string(x)));
    }
    return FiniteSemigroup(std::move(t), std::move(labels));
}

inline FiniteSemigroup left_zero_semigroup(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) t[x][y] = x;
        labels.push_back(std::string(1, static_cast<char>('a' + x)));
    }
    return FiniteSemigroup(std::move(t), std::move(labels));
}

/// Element 0 is the zero z; every product equals z.
inline FiniteSemigroup null_semigroup(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n, 0));
    std::vector<std::string> labels{"z"};
    for (std::size_t x = 1; x < n; ++x) labels.push_back(std::string(1, static_cast<char>('a' + x - 1)));
    return FiniteSemigroup(std::move(t), std::move(labels));
}

inline FiniteSemigroup bool_mult_semigroup() {
    return FiniteSemigroup({{0, 0}, {0, 1}}, {"0", "1"});
}

/// {1, p, 0}: 1 is the identity, 0 is absorbing, p^2 = 0.
inline FiniteSemigroup nil3_semigroup() {
    return FiniteSemigroup({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {"1", "p", "0"});
}

struct FiniteFixture {
    std::string name;
    FiniteSemigroup semigroup;
    std::vector<Permutation> sigmas;  // all involutive automorphisms, identity first
};

inline std::vector<std::string> finite_fixture_names() {
    return {"c2", "c3", "leftzero2", "null3", "bool-mult", "nil3"};
}

/// The fixtures the completeness oracle runs over.
inline std::vector<std::string> oracle_fixture_names() {
    return {"c2", "c3", "leftzero2", "null3", "bool-mult"};
}

inline bool is_finite_fixture(std::string_view name) {
    for (const auto& n : finite_fixture_names())
        if (n == name) return true;
    return false;
}

inline FiniteFixture finite_fixture(std::string_view name) {
    FiniteSemigroup s;
    if (name == "c2") s = cyclic_group(2);
    else if (name == "c3") s = cyclic_group(3);
    else if (name == "leftzero2") s = left_zero_semigroup(2);
    else if (name == "null3") s = null_semigroup(3);
    else if (name == "bool-mult") s = bool_mult_semigroup();
    else if (name == "nil3") s = nil3_semigroup();
    else throw std::out_of_range("unknown finite fixture '" + std::string(name) + "'");
    auto sigmas = enumerate_involutive_automorphisms(s);
    return {std::string(name), std::move(s), std::move(sigmas)};
}

// ---------------------------------------------------------------------------
// Procedural carriers

/// (R, +) sampled on `points` uniform grid points over [-pi, pi].
class RealLine {
public:
    using element_type = double;
    template <class T>
    using function_type = ProceduralFunction<double, T>;
    static constexpr bool is_finite = false;

    explicit RealLine(std::size_t points = 64) : points_(points) {
        if (points < 2) throw std::invalid_argument("real-line window needs at least 2 points");
        const double span = static_cast<double>(points - 1);
        for (std::size_t k = 0; k < points; ++k) {
            const double m = 2.0 * static_cast<double>(k) - span;  // symmetric under k -> points-1-k
            window_.push_back(m * std::numbers::pi / span);
        }
    }

    double compose(double x, double y) const { return x + y; }
    const std::vector<double>& window() const { return window_; }

    std::optional<double> window_lookup(double z) const {
        const double span = static_cast<double>(points_ - 1);
        const double k = std::round((z / std::numbers::pi + 1.0) * span / 2.0);
        if (k < 0 || k > span) return std::nullopt;
        const double w = window_[static_cast<std::size_t>(k)];
        if (!same(w, z)) return std::nullopt;
        return w;
    }

    bool same(double x, double y) const {
        return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
    }

    std::string label(double x) const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", x);
        return buf;
    }

    std::size_t points() const { return points_; }

private:
    std::size_t points_;
    std::vector<double> window_;
};

inline Involution<double> real_negation() {
    return {"negation", [](const double& x) { return -x; }};
}

struct H3Element {
    long x = 0;
    long y = 0;
    long z = 0;
    auto operator<=>(const H3Element&) const = default;
};

/// Heisenberg group: (x,y,z) stands for the upper unitriangular matrix with
/// x, y on the superdiagonal and z in the corner.
class Heisenberg {
public:
    using element_type = H3Element;
    template <class T>
    using function_type = ProceduralFunction<H3Element, T>;
    static constexpr bool is_finite = false;

    explicit Heisenberg(long radius = 3) : radius_(radius) {
        if (radius < 0) throw std::invalid_argument("heisenberg window radius must be non-negative");
        for (long x = -radius; x <= radius; ++x)
            for (long y = -radius; y <= radius; ++y)
                for (long z = -radius; z <= radius; ++z) window_.push_back({x, y, z});
    }

    H3Element compose(const H3Element& a, const H3Element& b) const {
        return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
    }
    const std::vector<H3Element>& window() const { return window_; }
    std::optional<H3Element> window_lookup(const H3Element& e) const {
        auto in = [this](long v) { return v >= -radius_ && v <= radius_; };
        if (in(e.x) && in(e.y) && in(e.z)) return e;
        return std::nullopt;
    }
    bool same(const H3Element& a, const H3Element& b) const { return a == b; }
    std::string label(const H3Element& e) const {
        return "(" + std::to_string(e.x) + "," + std::to_string(e.y) + "," + std::to_string(e.z) + ")";
    }
    long radius() const { return radius_; }

private:
    long radius_;
    std::vector<H3Element> window_;
};

inline Involution<H3Element> heisenberg_flip() {
    return {"flip", [](const H3Element& e) { return H3Element{-e.x, -e.y, e.z}; }};
}

/// (N \ {1}, *) with window [2, upper].
class NaturalsFrom2 {
public:
    using element_type = std::int64_t;
    template <class T>
    using function_type = ProceduralFunction<std::int64_t, T>;
    static constexpr bool is_finite = false;

    explicit NaturalsFrom2(std::int64_t upper = 65) : upper_(upper) {
        if (upper < 2) throw std::invalid_argument("naturals window upper bound must be at least 2");
        for (std::int64_t n = 2; n <= upper; ++n) window_.push_back(n);
    }

    std::int64_t compose(std::int64_t x, std::int64_t y) const {
        if (x < 2 || y < 2)
            throw std::domain_error("element outside N \\ {1}: (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ")");
        std::int64_t out = 0;
        if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("product overflows int64");
        return out;
    }
    const std::vector<std::int64_t>& window() const { return window_; }
    std::optional<std::int64_t> window_lookup(std::int64_t z) const {
        if (z >= 2 && z <= upper_) return z;
        return std::nullopt;
    }
    bool same(std::int64_t a, std::int64_t b) const { return a == b; }
    std::string label(std::int64_t n) const { return std::to_string(n); }
    std::int64_t upper() const { return upper_; }

private:
    std::int64_t upper_;
    std::vector<std::int64_t> window_;
};

/// Number of times p divides n.
inline long padic_valuation(std::int64_t n, std::int64_t p) {
    long count = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++count;
    }
    return count;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::string> procedural_fixture_names() {
    return {"real-line", "heisenberg", "naturals-from-2"};
}

}  // namespace gcal
