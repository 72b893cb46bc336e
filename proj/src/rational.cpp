#include "cubecover/rational.hpp"

#include "cubecover/error.hpp"

#include <cctype>

namespace cubecover {

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const ExtendedRational& q) {
    return q.is_infinite() ? std::string("inf") : to_string(q.value());
}

Rational parse_rational(std::string_view text) {
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    mpz_class p(n), q{std::string(den)};
    if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

NotMedianError::NotMedianError(std::array<std::uint32_t, 3> t, std::size_t count)
    : InvalidInput("not a median graph: vertices (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                   std::to_string(t[2]) + ") have " + std::to_string(count) + " medians"),
      triple(t),
      median_count(count) {}

}  // namespace cubecover
