#include "hauptmodul/triangle.hpp"

#include <charconv>

#include "hauptmodul/error.hpp"

namespace hauptmodul
{

TriangleType::TriangleType(unsigned m1, std::optional<unsigned> m2) : m1_(m1), m2_(m2)
{
    if (m1 < 2) {
        raise(ErrorCode::invalid_triangle, "m1 must be at least 2");
    }
    if (m2) {
        if (*m2 < m1) {
            raise(ErrorCode::invalid_triangle, "expected m1 <= m2");
        }
        // 1/m1 + 1/m2 < 1  <=>  m1 + m2 < m1 m2
        if (static_cast<unsigned long>(m1) + *m2 >= static_cast<unsigned long>(m1) * *m2) {
            raise(ErrorCode::invalid_triangle, "type " + label() + " is not hyperbolic");
        }
    }
}

unsigned long TriangleType::modulus() const noexcept
{
    return 2ul * m1_ * (m2_ ? *m2_ : 1u);
}

Rational TriangleType::inverse_m1() const
{
    return make_rational(1, m1_);
}

Rational TriangleType::inverse_m2() const
{
    return m2_ ? make_rational(1, *m2_) : Rational(0);
}

std::string TriangleType::label() const
{
    return "(" + spec() + ",inf)";
}

std::string TriangleType::spec() const
{
    return std::to_string(m1_) + "," + (m2_ ? std::to_string(*m2_) : std::string("inf"));
}

std::strong_ordering operator<=>(const TriangleType &lhs, const TriangleType &rhs)
{
    if (auto c = lhs.m1_ <=> rhs.m1_; c != 0) {
        return c;
    }
    if (lhs.m2_.has_value() != rhs.m2_.has_value()) {
        return lhs.m2_.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return lhs.m2_.value_or(0) <=> rhs.m2_.value_or(0);
}

namespace
{

std::optional<unsigned> parse_order(std::string_view token, std::string_view whole)
{
    if (token == "inf" || token == "oo" || token == "infinity") {
        return std::nullopt;
    }
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        raise(ErrorCode::parse_error, "bad triangle type '" + std::string(whole) + "', expected m1,m2");
    }
    return value;
}

} // namespace

TriangleType parse_triangle(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        raise(ErrorCode::parse_error, "bad triangle type '" + std::string(text) + "', expected m1,m2");
    }
    const auto m1 = parse_order(text.substr(0, comma), text);
    const auto m2 = parse_order(text.substr(comma + 1), text);
    if (!m1) {
        raise(ErrorCode::invalid_triangle, "m1 = inf is only possible for (inf,inf,inf), which is not supported");
    }
    return TriangleType(*m1, m2);
}

} // namespace hauptmodul
