#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace asua {

/// Exact fraction over arbitrary-precision integers. GMP keeps every value
/// produced by arithmetic in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Always `p/q`, including integers (`13/1`) and zero (`0/1`).
std::string format_fraction(const Rational& r);

/// Fixed-point decimal with `places` digits after the point, rounded half
/// away from zero using integer arithmetic only, so the output does not
/// depend on the platform's floating-point formatting.
std::string format_decimal(const Rational& r, unsigned places = 12);

/// `p/q` when non-integral, `p` otherwise.
std::string format_compact(const Rational& r);

/// Accepts `p`, `p/q` or `-p/q`. Throws Error{Parse} on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace asua
