#pragma once

// Function containers over a carrier.
//
// FiniteFunction<T> is a dense table indexed by element. ProceduralFunction
// wraps an evaluator that may decline (std::nullopt) for elements whose value
// is only known on the sample window; checks skip tuples that hit such an
// element and count them separately.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gcal {

template <class T>
struct FiniteFunction {
    using value_type = T;
    using element_type = std::size_t;

    std::vector<T> values;

    FiniteFunction() = default;
    explicit FiniteFunction(std::vector<T> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    const T& operator()(std::size_t x) const { return values.at(x); }

    bool operator==(const FiniteFunction&) const = default;
};

template <class E, class T>
struct ProceduralFunction {
    using value_type = T;
    using element_type = E;

    std::function<std::optional<T>(const E&)> rule;

    std::optional<T> operator()(const E& x) const { return rule(x); }
};

namespace detail {

template <class>
inline constexpr bool is_optional_v = false;
template <class U>
inline constexpr bool is_optional_v<std::optional<U>> = true;

}  // namespace detail

/// Evaluates any function container (or callable) as std::optional.
template <class F, class E>
auto eval(const F& f, const E& x) {
    using R = std::remove_cvref_t<decltype(f(x))>;
    if constexpr (detail::is_optional_v<R>) {
        return f(x);
    } else {
        return std::optional<R>(f(x));
    }
}

template <class F>
using value_of_t = typename std::remove_cvref_t<F>::value_type;

}  // namespace gcal
