#ifndef HAUPTMODUL_ERROR_HPP
#define HAUPTMODUL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hauptmodul
{

// Numbering is mirrored by hm_status in the C API (offset by one, 0 = ok).
enum class ErrorCode {
    invalid_argument = 1,
    invalid_triangle,
    parse_error,
    zero_constant_term,
    nonzero_constant_term,
    constant_term_not_one,
    not_invertible,
    singular_system,
    inconsistent_order_one,
    degenerate_denominator,
    prime_divides_denominator,
    shared_factor,
    route_mismatch,
    formula_mismatch,
    verification_failure,
};

const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept
    {
        return code_;
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string &what)
{
    throw Error(code, what);
}

} // namespace hauptmodul

#endif
