#ifndef SEMIRES_SCALAR_HPP
#define SEMIRES_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semires {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite arithmetic left the range of the integer carrier.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Operand shapes are incompatible, or a matrix was built with a zero dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Operands belong to different semirings.
class TagMismatchError : public Error {
public:
    using Error::Error;
};

/// Malformed text or structured input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A value violates a domain invariant (e.g. an interval with lower > upper).
class DomainError : public Error {
public:
    using Error::Error;
};

enum class SemiringTag : std::uint8_t { MaxPlus, MaxMin };

/**
 * Element of the extended integers Z ∪ {-inf, +inf}.
 *
 * The numeric order is total and coincides with the canonical order of
 * both supported semirings. Infinities carry a zero payload so the
 * defaulted comparison orders by kind first.
 */
class Scalar {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };
    using value_type = std::int64_t;

    constexpr Scalar() noexcept = default;

    static constexpr Scalar neg_inf() noexcept { return Scalar{Kind::NegInf, 0}; }
    static constexpr Scalar pos_inf() noexcept { return Scalar{Kind::PosInf, 0}; }
    static constexpr Scalar finite(value_type v) noexcept { return Scalar{Kind::Finite, v}; }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
    constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

    /// Finite payload; throws DomainError on an infinity.
    value_type value() const;

    friend constexpr auto operator<=>(const Scalar&, const Scalar&) noexcept = default;
    friend constexpr bool operator==(const Scalar&, const Scalar&) noexcept = default;

private:
    constexpr Scalar(Kind k, value_type v) noexcept : kind_(k), value_(v) {}

    Kind kind_ = Kind::NegInf;
    value_type value_ = 0;
};

// Semiring constants: ε (zero), e (unit), ⊤ (top).
constexpr Scalar zero(SemiringTag) noexcept { return Scalar::neg_inf(); }
constexpr Scalar one(SemiringTag tag) noexcept
{
    return tag == SemiringTag::MaxPlus ? Scalar::finite(0) : Scalar::pos_inf();
}
constexpr Scalar top(SemiringTag) noexcept { return Scalar::pos_inf(); }

Scalar add(SemiringTag tag, Scalar a, Scalar b) noexcept;
Scalar mul(SemiringTag tag, Scalar a, Scalar b);
Scalar meet(SemiringTag tag, Scalar a, Scalar b) noexcept;
bool leq(SemiringTag tag, Scalar a, Scalar b) noexcept;

/// Greatest x with a ⊗ x ⪯ b.
Scalar left_residual(SemiringTag tag, Scalar a, Scalar b);
/// Greatest x with x ⊗ a ⪯ b.
Scalar right_residual(SemiringTag tag, Scalar b, Scalar a);

/// "-inf", "+inf" or a base-10 integer literal.
Scalar parse_scalar(std::string_view text);
std::string to_string(Scalar s);

SemiringTag parse_tag(std::string_view text);
std::string_view to_string(SemiringTag tag) noexcept;

void require_same_tag(SemiringTag a, SemiringTag b);

}  // namespace semires

#endif  // SEMIRES_SCALAR_HPP
