#ifndef HAUPTMODUL_TRIANGLE_HPP
#define HAUPTMODUL_TRIANGLE_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "hauptmodul/rational.hpp"

namespace hauptmodul
{

// Triangle group of type (m1, m2, inf). m2 == nullopt encodes m2 = inf; m1 is
// always finite because (inf, inf, inf) is not supported.
class TriangleType
{
public:
    // Throws InvalidTriangle unless 2 <= m1 <= m2 and 1/m1 + 1/m2 < 1.
    TriangleType(unsigned m1, std::optional<unsigned> m2);

    unsigned m1() const noexcept
    {
        return m1_;
    }
    std::optional<unsigned> m2() const noexcept
    {
        return m2_;
    }
    bool m2_infinite() const noexcept
    {
        return !m2_.has_value();
    }

    // 2 m1 m2, or 2 m1 when m2 = inf: the modulus of the congruence conditions.
    unsigned long modulus() const noexcept;
    // 1/m1 and 1/m2 (zero for inf).
    Rational inverse_m1() const;
    Rational inverse_m2() const;

    // "(2,5,inf)" / "(2,inf,inf)".
    std::string label() const;
    // "2,5" / "2,inf".
    std::string spec() const;

    friend bool operator==(const TriangleType &, const TriangleType &) = default;
    // Sorted by m1, then m2 with inf last.
    friend std::strong_ordering operator<=>(const TriangleType &lhs, const TriangleType &rhs);

private:
    unsigned m1_;
    std::optional<unsigned> m2_;
};

// Parses "m1,m2" where m2 may be "inf"; throws ParseError / InvalidTriangle.
TriangleType parse_triangle(std::string_view text);

} // namespace hauptmodul

#endif
