#pragma once

/**
 * @file scalar.hpp
 * @brief Scalar types used for function values.
 *
 * Two modes are supported:
 *  - float mode: std::complex<R> for a floating point R (double by default,
 *    long double where term magnitudes demand the extra mantissa);
 *  - exact mode: Cyclotomic, the field Q(zeta_12) with rational coefficients.
 *    It contains the Gaussian rationals Q(i) and every root of unity whose
 *    order divides 12, which covers the characters of the small test
 *    semigroups.
 *
 * scalar_traits<T> is the single customization point the algorithms use.
 */

#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Absolute per-component tolerance for identity checks in float mode.
inline constexpr double kIdentityTolerance = 1e-9;
/// Max-norm tolerance for classifier reconstruction.
inline constexpr double kClassifyTolerance = 1e-7;

/// Raised when an exact computation leaves the exact field (e.g. an
/// irrational square root).
class InexactError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct RationalComplex {
    Rational re{0};
    Rational im{0};
    bool operator==(const RationalComplex&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// [+-]digits[.digits] or [+-].digits; an empty body after the sign is
// accepted only when allow_unit is set (the "i" / "-i" shorthand).
inline Rational parse_decimal(std::string_view text, bool allow_unit) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) {
        if (!allow_unit) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
        return negative ? Rational(-1) : Rational(1);
    }
    Integer digits = 0;
    Integer scale = 1;
    bool seen_digit = false;
    bool seen_point = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            if (seen_point) scale *= 10;
            seen_digit = true;
        } else {
            throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    Rational value(digits, scale);
    return negative ? Rational(-value) : value;
}

}  // namespace detail

/// Parses `a`, `bi`, `a+bi`, `a-bi` with decimal reals (`i` alone means 1i).
inline RationalComplex parse_complex(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return {detail::parse_decimal(s, false), 0};

    std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {0, detail::parse_decimal(body, true)};
    return {detail::parse_decimal(body.substr(0, split), false),
            detail::parse_decimal(body.substr(split), true)};
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

/// Exact square root of a rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer sn = boost::multiprecision::sqrt(num);
    Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

/**
 * Element of Q(zeta) with zeta = exp(i*pi/6), stored in the power basis
 * 1, zeta, zeta^2, zeta^3 modulo the 12th cyclotomic polynomial
 * zeta^4 - zeta^2 + 1. Note zeta^3 = i and zeta^4 = exp(2*pi*i/3).
 */
class Cyclotomic {
public:
    using Coeffs = std::array<Rational, 4>;

    Cyclotomic() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
    Cyclotomic(int n) : c_{Rational(n), Rational(0), Rational(0), Rational(0)} {}  // NOLINT
    explicit Cyclotomic(const Rational& re, const Rational& im = Rational(0))
        : c_{re, Rational(0), Rational(0), im} {}
    explicit Cyclotomic(const RationalComplex& z) : Cyclotomic(z.re, z.im) {}

    static Cyclotomic from_coeffs(Coeffs c) {
        Cyclotomic out;
        out.c_ = std::move(c);
        return out;
    }

    /// zeta_12^k for any integer k.
    static Cyclotomic zeta_power(long k) {
        long r = ((k % 12) + 12) % 12;
        Cyclotomic out(1);
        for (long j = 0; j < r; ++j) out = out.times_zeta();
        return out;
    }

    const Coeffs& coeffs() const { return c_; }

    bool is_gaussian() const { return c_[1] == 0 && c_[2] == 0; }
    /// Real/imaginary parts; only meaningful when is_gaussian().
    const Rational& gaussian_re() const { return c_[0]; }
    const Rational& gaussian_im() const { return c_[3]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    std::complex<long double> to_complex() const {
        std::complex<long double> acc = 0;
        for (int k = 0; k < 4; ++k) {
            if (c_[k] == 0) continue;
            long double angle = static_cast<long double>(k) * std::numbers::pi_v<long double> / 6.0L;
            acc += c_[k].convert_to<long double>() * std::polar(1.0L, angle);
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) {
        for (int k = 0; k < 4; ++k) a.c_[k] += b.c_[k];
        return a;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) {
        for (int k = 0; k < 4; ++k) a.c_[k] -= b.c_[k];
        return a;
    }
    friend Cyclotomic operator-(Cyclotomic a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        std::array<Rational, 7> d{};
        for (int i = 0; i < 4; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < 4; ++j) d[i + j] += a.c_[i] * b.c_[j];
        }
        // zeta^6 = -1, zeta^5 = zeta^3 - zeta, zeta^4 = zeta^2 - 1
        d[0] -= d[6];
        d[3] += d[5];
        d[1] -= d[5];
        d[2] += d[4];
        d[0] -= d[4];
        return from_coeffs({d[0], d[1], d[2], d[3]});
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(zeta_12)");
        // Column j of the multiplication matrix is this * zeta^j; solve M x = e0.
        std::array<std::array<Rational, 5>, 4> m{};
        Cyclotomic col = *this;
        for (int j = 0; j < 4; ++j) {
            for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
            col = col.times_zeta();
        }
        for (int i = 0; i < 4; ++i) m[i][4] = (i == 0) ? 1 : 0;
        for (int p = 0; p < 4; ++p) {
            int pivot = p;
            while (m[pivot][p] == 0) ++pivot;
            std::swap(m[p], m[pivot]);
            Rational inv = 1 / m[p][p];
            for (int j = p; j < 5; ++j) m[p][j] *= inv;
            for (int i = 0; i < 4; ++i) {
                if (i == p || m[i][p] == 0) continue;
                Rational factor = m[i][p];
                for (int j = p; j < 5; ++j) m[i][j] -= factor * m[p][j];
            }
        }
        return from_coeffs({m[0][4], m[1][4], m[2][4], m[3][4]});
    }

    std::string str() const {
        if (is_gaussian()) return c_[0].str() + (c_[3] < 0 ? "-" : "+") + Rational(abs(c_[3])).str() + "i";
        return "[" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ", " + c_[3].str() + "]_z12";
    }

private:
    Cyclotomic times_zeta() const {
        // (c0 + c1 z + c2 z^2 + c3 z^3) z = -c3 + c0 z + (c1 + c3) z^2 + c2 z^3
        return from_coeffs({-c_[3], c_[0], c_[1] + c_[3], c_[2]});
    }

    Coeffs c_;
};

template <class T>
struct scalar_traits;

template <std::floating_point R>
struct scalar_traits<std::complex<R>> {
    using value_type = std::complex<R>;
    static constexpr bool exact = false;
    static constexpr const char* mode = "float";

    static value_type from_rational(const RationalComplex& z) {
        return {z.re.template convert_to<R>(), z.im.template convert_to<R>()};
    }
    static value_type from_complex(std::complex<long double> z) {
        return {static_cast<R>(z.real()), static_cast<R>(z.imag())};
    }
    static std::complex<long double> to_complex(const value_type& z) {
        return {static_cast<long double>(z.real()), static_cast<long double>(z.imag())};
    }
    static double magnitude(const value_type& z) { return static_cast<double>(std::abs(z)); }

    static bool near(const value_type& a, const value_type& b, double tol) {
        return std::abs(static_cast<double>(a.real() - b.real())) <= tol &&
               std::abs(static_cast<double>(a.imag() - b.imag())) <= tol;
    }

    /// exp(2*pi*i*k/r), exact on the axes.
    static value_type root_of_unity(std::size_t k, std::size_t r) {
        k %= r;
        if ((4 * k) % r == 0) {
            switch ((4 * k) / r) {
                case 0: return {1, 0};
                case 1: return {0, 1};
                case 2: return {-1, 0};
                default: return {0, -1};
            }
        }
        return std::polar(R(1), 2 * std::numbers::pi_v<R> * static_cast<R>(k) / static_cast<R>(r));
    }

    /// Principal root: real part >= 0, and imaginary part >= 0 when the real part is 0.
    static value_type sqrt_principal(const value_type& z) {
        value_type w = std::sqrt(z);
        if (w.real() < 0 || (w.real() == 0 && w.imag() < 0)) w = -w;
        if (w.real() == 0) w = value_type(R(0), w.imag());  // drop a negative zero
        return w;
    }
};

template <>
struct scalar_traits<Cyclotomic> {
    using value_type = Cyclotomic;
    static constexpr bool exact = true;
    static constexpr const char* mode = "exact";

    static value_type from_rational(const RationalComplex& z) { return Cyclotomic(z); }
    static std::complex<long double> to_complex(const value_type& z) { return z.to_complex(); }
    static double magnitude(const value_type& z) {
        if (z.is_zero()) return 0.0;
        double m = static_cast<double>(std::abs(z.to_complex()));
        return m > 0 ? m : std::numeric_limits<double>::denorm_min();
    }
    static bool near(const value_type& a, const value_type& b, double /*tol*/) { return a == b; }

    static value_type root_of_unity(std::size_t k, std::size_t r) {
        if (r == 0 || 12 % r != 0)
            throw InexactError("root of unity of order " + std::to_string(r) + " is not in Q(zeta_12)");
        return Cyclotomic::zeta_power(static_cast<long>((k % r) * (12 / r)));
    }

    static value_type sqrt_principal(const value_type& z) {
        if (!z.is_gaussian()) throw InexactError("square root outside Q(i) in exact mode: " + z.str());
        const Rational& a = z.gaussian_re();
        const Rational& b = z.gaussian_im();
        if (b == 0) {
            if (a >= 0) {
                if (auto r = exact_sqrt(a)) return Cyclotomic(*r);
            } else if (auto r = exact_sqrt(-a)) {
                return Cyclotomic(Rational(0), *r);
            }
            throw InexactError("no exact square root of " + z.str());
        }
        auto modulus = exact_sqrt(a * a + b * b);
        if (!modulus) throw InexactError("no exact square root of " + z.str());
        auto x = exact_sqrt((*modulus + a) / 2);
        if (!x) throw InexactError("no exact square root of " + z.str());
        return Cyclotomic(*x, b / (2 * *x));
    }
};

template <class T>
inline bool near(const T& a, const T& b, double tol = kIdentityTolerance) {
    return scalar_traits<T>::near(a, b, tol);
}

template <class T>
inline bool is_zero(const T& a, double tol = kIdentityTolerance) {
    return scalar_traits<T>::near(a, T(0), tol);
}

template <class T>
inline double magnitude(const T& a) {
    return scalar_traits<T>::magnitude(a);
}

template <class T>
inline T from_rational(const RationalComplex& z) {
    return scalar_traits<T>::from_rational(z);
}

template <class T>
inline T from_literal(std::string_view text) {
    return scalar_traits<T>::from_rational(parse_complex(text));
}

template <class T>
inline Complex to_complex(const T& z) {
    auto c = scalar_traits<T>::to_complex(z);
    return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
}

/// Principal square root multiplied by branch (+1 or -1).
template <class T>
inline T sqrt_branch(const T& z, int branch) {
    T root = scalar_traits<T>::sqrt_principal(z);
    return branch < 0 ? T(0) - root : root;
}

inline std::string format_complex(const Complex& z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

}  // namespace gcal
