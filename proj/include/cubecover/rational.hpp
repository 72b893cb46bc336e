#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cubecover {

/// Exact rational number (always kept in canonical reduced form).
using Rational = mpq_class;

/// Formats as "p/q"; integers are written with an explicit "/1".
std::string to_string(const Rational& q);

/// Parses "p/q" or "p". Throws InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// A value of T or +infinity.
template <typename T>
class Extended {
public:
    Extended() = default;
    Extended(T value) : value_(std::move(value)) {}

    static Extended infinity() { return Extended(); }

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    const T& value() const { return *value_; }

    friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }

    friend bool operator<(const Extended& a, const Extended& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.value() < b.value();
    }

private:
    std::optional<T> value_;
};

/// Graph distance: a natural number or infinity across components.
using ExtendedDistance = Extended<std::uint32_t>;
using ExtendedRational = Extended<Rational>;

std::string to_string(const ExtendedRational& q);

}  // namespace cubecover
