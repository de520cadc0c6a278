#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bracealg {

/// Exact rational scalar. Always kept canonical (lowest terms, positive
/// denominator).
using Scalar = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws InputError on
/// malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string format_scalar(const Scalar& value);

}  // namespace bracealg
