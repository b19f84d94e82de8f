#pragma once

#include <gmpxx.h>

#include <string>

namespace sheafforge {

/// Exact rational scalar. GMP keeps the value canonical (den > 0, reduced).
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace sheafforge
