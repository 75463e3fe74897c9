#include "semires/scalar.hpp"

#include <algorithm>
#include <charconv>

namespace semires {

Scalar::value_type Scalar::value() const
{
    if (!is_finite()) {
        throw DomainError("Scalar::value: not a finite scalar");
    }
    return value_;
}

Scalar add(SemiringTag, Scalar a, Scalar b) noexcept
{
    return std::max(a, b);
}

Scalar mul(SemiringTag tag, Scalar a, Scalar b)
{
    if (tag == SemiringTag::MaxMin) {
        return std::min(a, b);
    }
    // ε absorbs, including against ⊤.
    if (a.is_neg_inf() || b.is_neg_inf()) {
        return Scalar::neg_inf();
    }
    if (a.is_pos_inf() || b.is_pos_inf()) {
        return Scalar::pos_inf();
    }
    Scalar::value_type sum = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &sum)) {
        throw OverflowError("mul: " + to_string(a) + " + " + to_string(b) + " overflows");
    }
    return Scalar::finite(sum);
}

Scalar meet(SemiringTag, Scalar a, Scalar b) noexcept
{
    return std::min(a, b);
}

bool leq(SemiringTag tag, Scalar a, Scalar b) noexcept
{
    return add(tag, a, b) == b;
}

Scalar left_residual(SemiringTag tag, Scalar a, Scalar b)
{
    if (tag == SemiringTag::MaxMin) {
        // Gödel implication.
        return a <= b ? Scalar::pos_inf() : b;
    }
    if (a.is_neg_inf() || b.is_pos_inf()) {
        return Scalar::pos_inf();
    }
    if (a.is_pos_inf() || b.is_neg_inf()) {
        return Scalar::neg_inf();
    }
    Scalar::value_type diff = 0;
    if (__builtin_sub_overflow(b.value(), a.value(), &diff)) {
        throw OverflowError("left_residual: " + to_string(b) + " - " + to_string(a) + " overflows");
    }
    return Scalar::finite(diff);
}

Scalar right_residual(SemiringTag tag, Scalar b, Scalar a)
{
    // Both instances are commutative.
    return left_residual(tag, a, b);
}

Scalar parse_scalar(std::string_view text)
{
    if (text == "-inf") {
        return Scalar::neg_inf();
    }
    if (text == "+inf") {
        return Scalar::pos_inf();
    }
    Scalar::value_type v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("invalid scalar literal '" + std::string(text) + "'");
    }
    return Scalar::finite(v);
}

std::string to_string(Scalar s)
{
    switch (s.kind()) {
    case Scalar::Kind::NegInf:
        return "-inf";
    case Scalar::Kind::PosInf:
        return "+inf";
    case Scalar::Kind::Finite:
        break;
    }
    return std::to_string(s.value());
}

SemiringTag parse_tag(std::string_view text)
{
    if (text == "maxplus") {
        return SemiringTag::MaxPlus;
    }
    if (text == "maxmin") {
        return SemiringTag::MaxMin;
    }
    throw ParseError("unknown semiring '" + std::string(text) + "' (expected maxplus or maxmin)");
}

std::string_view to_string(SemiringTag tag) noexcept
{
    return tag == SemiringTag::MaxPlus ? "maxplus" : "maxmin";
}

void require_same_tag(SemiringTag a, SemiringTag b)
{
    if (a != b) {
        throw TagMismatchError(std::string("semiring mismatch: ") + std::string(to_string(a)) +
                               " vs " + std::string(to_string(b)));
    }
}

}  // namespace semires
