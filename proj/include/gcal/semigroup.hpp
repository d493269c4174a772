#pragma once

/**
 * @file semigroup.hpp
 * @brief Finite and procedural semigroups, involutive automorphisms, product sets.
 *
 * Every carrier exposes the same small surface (the Semigroup concept):
 *   - compose(x, y)        the product xy
 *   - window()             the finite list of elements checks range over
 *                          (the whole carrier for finite semigroups)
 *   - window_lookup(z)     canonical window element equal to z, if any
 *   - same(x, y)           element equality (tolerant for real coordinates)
 *   - label(x)             display name
 *
 * Procedural carriers are infinite; all of their sets and universal
 * statements are window-certified: quantifiers range over the window, and a
 * product that leaves the window only participates when the functions
 * involved can evaluate it.
 */

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcal/function.hpp"
#include "gcal/report.hpp"
#include "gcal/scalar.hpp"

namespace gcal {

template <class S>
concept Semigroup = requires(const S& s, const typename S::element_type& x) {
    typename S::element_type;
    { S::is_finite } -> std::convertible_to<bool>;
    { s.compose(x, x) } -> std::convertible_to<typename S::element_type>;
    { s.window() } -> std::convertible_to<const std::vector<typename S::element_type>&>;
    { s.window_lookup(x) } -> std::same_as<std::optional<typename S::element_type>>;
    { s.same(x, x) } -> std::convertible_to<bool>;
    { s.label(x) } -> std::convertible_to<std::string>;
};

template <class S>
using element_t = typename S::element_type;

template <class S, class T>
using function_t = typename S::template function_type<T>;

/// Order-n semigroup given by its Cayley table; elements are 0..n-1.
class FiniteSemigroup {
public:
    using element_type = std::size_t;
    template <class T>
    using function_type = FiniteFunction<T>;
    static constexpr bool is_finite = true;

    FiniteSemigroup() = default;

    /// Stores the table as given; closure and associativity are reported by validate().
    explicit FiniteSemigroup(std::vector<std::vector<std::size_t>> cayley,
                             std::vector<std::string> labels = {})
        : order_(cayley.size()), labels_(std::move(labels)) {
        if (order_ == 0) throw std::invalid_argument("semigroup order must be positive");
        if (!labels_.empty() && labels_.size() != order_)
            throw std::invalid_argument("label count does not match order");
        table_.reserve(order_ * order_);
        for (const auto& row : cayley) {
            if (row.size() != order_) throw std::invalid_argument("Cayley table must be square");
            table_.insert(table_.end(), row.begin(), row.end());
        }
        window_.resize(order_);
        std::iota(window_.begin(), window_.end(), std::size_t{0});
    }

    std::size_t order() const { return order_; }

    std::size_t compose(std::size_t x, std::size_t y) const {
        if (x >= order_ || y >= order_)
            throw std::out_of_range("element index out of range: (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ") for order " + std::to_string(order_));
        return table_[x * order_ + y];
    }

    /// Raw table entry, possibly invalid in an unvalidated table.
    std::size_t entry(std::size_t x, std::size_t y) const { return table_.at(x * order_ + y); }

    const std::vector<std::size_t>& window() const { return window_; }
    std::optional<std::size_t> window_lookup(std::size_t z) const {
        return z < order_ ? std::optional<std::size_t>(z) : std::nullopt;
    }
    bool same(std::size_t x, std::size_t y) const { return x == y; }

    std::string label(std::size_t x) const {
        if (x < labels_.size()) return labels_[x];
        return std::to_string(x);
    }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<std::vector<std::size_t>> cayley() const {
        std::vector<std::vector<std::size_t>> rows(order_);
        for (std::size_t x = 0; x < order_; ++x)
            rows[x].assign(table_.begin() + static_cast<std::ptrdiff_t>(x * order_),
                           table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * order_));
        return rows;
    }

    bool operator==(const FiniteSemigroup& o) const { return order_ == o.order_ && table_ == o.table_; }

private:
    std::size_t order_ = 0;
    std::vector<std::size_t> table_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> window_;
};

/// An involutive automorphism of a finite carrier, as a permutation of indices.
struct Permutation {
    std::vector<std::size_t> image;

    static Permutation identity(std::size_t n) {
        Permutation p;
        p.image.resize(n);
        std::iota(p.image.begin(), p.image.end(), std::size_t{0});
        return p;
    }

    std::size_t operator()(std::size_t x) const { return image.at(x); }
    bool is_identity() const {
        for (std::size_t k = 0; k < image.size(); ++k)
            if (image[k] != k) return false;
        return true;
    }
    bool operator==(const Permutation&) const = default;
};

/// An involutive automorphism of a procedural carrier, selected by rule name.
template <class E>
struct Involution {
    std::string name;
    std::function<E(const E&)> map;

    E operator()(const E& x) const { return map(x); }
};

template <class E>
Involution<E> identity_involution() {
    return {"identity", [](const E& x) { return x; }};
}

/// Sorted set of elements; for procedural carriers always a subset of the window.
template <class E>
class ElementSubset {
public:
    ElementSubset() = default;
    explicit ElementSubset(std::vector<E> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    bool contains(const E& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }
    bool subset_of(const ElementSubset& other) const {
        return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                             elements_.end());
    }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }
    const std::vector<E>& elements() const { return elements_; }

    bool operator==(const ElementSubset&) const = default;

private:
    std::vector<E> elements_;
};

/// The product xy.
template <Semigroup S>
element_t<S> compose(const S& s, const element_t<S>& x, const element_t<S>& y) {
    return s.compose(x, y);
}

template <Semigroup S>
std::string format_tuple(const S& s, std::initializer_list<element_t<S>> xs) {
    std::string out = "(";
    bool first = true;
    for (const auto& x : xs) {
        if (!first) out += ", ";
        out += s.label(x);
        first = false;
    }
    return out + ")";
}

/// Builds a function of the carrier's native kind from an evaluator. Finite
/// carriers tabulate eagerly; procedural carriers keep the evaluator.
template <class T, Semigroup S, class Fn>
function_t<S, T> make_function(const S& s, Fn fn) {
    if constexpr (S::is_finite) {
        std::vector<T> values;
        values.reserve(s.order());
        for (std::size_t x = 0; x < s.order(); ++x) {
            auto v = eval(fn, x);
            if (!v) throw std::logic_error("function undefined on finite element " + s.label(x));
            values.push_back(*v);
        }
        return FiniteFunction<T>(std::move(values));
    } else {
        using E = element_t<S>;
        return ProceduralFunction<E, T>{[fn = std::move(fn)](const E& x) -> std::optional<T> {
            return eval(fn, x);
        }};
    }
}

template <class T, Semigroup S>
function_t<S, T> constant_function(const S& s, T value) {
    return make_function<T>(s, [value](const element_t<S>&) { return value; });
}

/// a*f + b*g, undefined wherever f or g is.
template <Semigroup S, class F, class G, class T = value_of_t<F>>
function_t<S, T> lincomb(const S& s, const T& a, const F& f, const T& b, const G& g) {
    return make_function<T>(s, [a, f, b, g](const element_t<S>& x) -> std::optional<T> {
        auto fx = eval(f, x);
        auto gx = eval(g, x);
        if (!fx || !gx) return std::nullopt;
        return a * *fx + b * *gx;
    });
}

template <Semigroup S, class F, class T = value_of_t<F>>
function_t<S, T> scale(const S& s, const T& a, const F& f) {
    return make_function<T>(s, [a, f](const element_t<S>& x) -> std::optional<T> {
        auto fx = eval(f, x);
        if (!fx) return std::nullopt;
        return a * *fx;
    });
}

/// Max over the window of |f - g|, ignoring undefined points.
template <Semigroup S, class F, class G>
double max_distance(const S& s, const F& f, const G& g) {
    double worst = 0;
    for (const auto& x : s.window()) {
        auto fx = eval(f, x);
        auto gx = eval(g, x);
        if (!fx || !gx) continue;
        worst = std::max(worst, magnitude(*fx - *gx));
    }
    return worst;
}

template <Semigroup S, class F, class G>
bool functions_near(const S& s, const F& f, const G& g, double tol = kIdentityTolerance) {
    for (const auto& x : s.window()) {
        auto fx = eval(f, x);
        auto gx = eval(g, x);
        if (!fx || !gx) continue;
        if (!near(*fx, *gx, tol)) return false;
    }
    return true;
}

template <Semigroup S, class F>
bool is_zero_function(const S& s, const F& f, double tol = kIdentityTolerance) {
    for (const auto& x : s.window()) {
        auto fx = eval(f, x);
        if (fx && !is_zero(*fx, tol)) return false;
    }
    return true;
}

template <class E>
struct ValidationReport {
    std::vector<std::pair<E, E>> closure;            // table entries outside the carrier
    std::vector<std::array<E, 3>> associativity;     // (xy)z != x(yz)

    bool ok() const { return closure.empty() && associativity.empty(); }
};

/// Closure and associativity on all (window) triples.
template <Semigroup S>
ValidationReport<element_t<S>> validate(const S& s) {
    ValidationReport<element_t<S>> report;
    if constexpr (S::is_finite) {
        const std::size_t n = s.order();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (s.entry(x, y) >= n) report.closure.emplace_back(x, y);
        if (!report.closure.empty()) return report;
    }
    const auto& w = s.window();
    for (const auto& x : w)
        for (const auto& y : w) {
            const auto xy = s.compose(x, y);
            for (const auto& z : w)
                if (!s.same(s.compose(xy, z), s.compose(x, s.compose(y, z))))
                    report.associativity.push_back({x, y, z});
        }
    return report;
}

/// Violations of sigma(sigma(x)) = x and sigma(xy) = sigma(x)sigma(y).
template <class E>
struct InvolutionReport {
    std::vector<E> not_involutive;
    std::vector<std::pair<E, E>> not_homomorphic;
    bool ok() const { return not_involutive.empty() && not_homomorphic.empty(); }
};

template <Semigroup S, class Sig>
InvolutionReport<element_t<S>> validate_involution(const S& s, const Sig& sigma) {
    InvolutionReport<element_t<S>> report;
    const auto& w = s.window();
    for (const auto& x : w)
        if (!s.same(sigma(sigma(x)), x)) report.not_involutive.push_back(x);
    for (const auto& x : w)
        for (const auto& y : w)
            if (!s.same(sigma(s.compose(x, y)), s.compose(sigma(x), sigma(y))))
                report.not_homomorphic.emplace_back(x, y);
    return report;
}

inline InvolutionReport<std::size_t> validate_involution(const FiniteSemigroup& s, const Permutation& sigma) {
    if (sigma.image.size() != s.order()) throw std::invalid_argument("permutation size does not match order");
    std::vector<bool> seen(s.order(), false);
    for (auto v : sigma.image) {
        if (v >= s.order() || seen[v]) throw std::invalid_argument("sigma is not a permutation");
        seen[v] = true;
    }
    return validate_involution<FiniteSemigroup, Permutation>(s, sigma);
}

/// T^2 = {xy | x, y in T}, intersected with the window for procedural carriers.
template <Semigroup S>
ElementSubset<element_t<S>> product_set(const S& s, const ElementSubset<element_t<S>>& t) {
    std::vector<element_t<S>> out;
    for (const auto& x : t)
        for (const auto& y : t)
            if (auto z = s.window_lookup(s.compose(x, y))) out.push_back(*z);
    return ElementSubset<element_t<S>>(std::move(out));
}

template <Semigroup S>
ElementSubset<element_t<S>> whole_window(const S& s) {
    return ElementSubset<element_t<S>>(s.window());
}

/// S^2 (window-restricted for procedural carriers).
template <Semigroup S>
ElementSubset<element_t<S>> square(const S& s) {
    return product_set(s, whole_window(s));
}

inline constexpr std::size_t kDefaultAutomorphismBound = 8;

/// All involutive automorphisms by brute force over permutations, in
/// lexicographic order of the image vector (identity first).
inline std::vector<Permutation> enumerate_involutive_automorphisms(const FiniteSemigroup& s,
                                                                   std::size_t max_order = kDefaultAutomorphismBound) {
    const std::size_t n = s.order();
    if (n > max_order)
        throw std::length_error("order " + std::to_string(n) + " exceeds automorphism enumeration bound " +
                                std::to_string(max_order));
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = p.image[p.image[x]] == x;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t y = 0; y < n && ok; ++y)
                ok = p.image[s.compose(x, y)] == s.compose(p.image[x], p.image[y]);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    return out;
}

/// f(xy) = f(yx) on all window pairs.
template <Semigroup S, class F>
bool is_central(const S& s, const F& f, double tol = kIdentityTolerance) {
    const auto& w = s.window();
    for (const auto& x : w)
        for (const auto& y : w) {
            auto a = eval(f, s.compose(x, y));
            auto b = eval(f, s.compose(y, x));
            if (a && b && !near(*a, *b, tol)) return false;
        }
    return true;
}

/// Central, and f(xyz) = f(xzy) on all window triples.
template <Semigroup S, class F>
bool is_abelian_fn(const S& s, const F& f, double tol = kIdentityTolerance) {
    if (!is_central(s, f, tol)) return false;
    const auto& w = s.window();
    for (const auto& x : w)
        for (const auto& y : w)
            for (const auto& z : w) {
                auto a = eval(f, s.compose(s.compose(x, y), z));
                auto b = eval(f, s.compose(s.compose(x, z), y));
                if (a && b && !near(*a, *b, tol)) return false;
            }
    return true;
}

}  // namespace gcal
