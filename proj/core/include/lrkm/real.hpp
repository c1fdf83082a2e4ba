#pragma once

// Working precision.
//
// Every coefficient, node and function value in lrkm is an `lrkm::real`.  The
// type is fixed at configure time by LRKM_PRECISION:
//
//   double    IEEE binary64 (53-bit significand)
//   extended  x87 long double (64-bit significand)
//   quad      IEEE binary128 via Boost.Multiprecision (113-bit significand)
//
// The default is quad.  Polynomials are stored as monomial coefficients, and
// the orthonormal Legendre-derived families used by the kernels carry
// coefficients that grow roughly like 5.8^m; in binary64 the orthonormality
// defect of the stored basis reaches 1e-12 near m = 8.

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#if defined(LRKM_PRECISION_QUAD)
#include <boost/multiprecision/float128.hpp>
#endif

namespace lrkm {

#if defined(LRKM_PRECISION_QUAD)
using real = boost::multiprecision::float128;
inline constexpr const char* kPrecisionName = "quad";
#elif defined(LRKM_PRECISION_EXTENDED)
using real = long double;
inline constexpr const char* kPrecisionName = "extended";
#else
using real = double;
inline constexpr const char* kPrecisionName = "double";
#endif

// Unqualified math calls inside lrkm resolve to these for builtin types and to
// the Boost overloads (through ADL) for float128.
using std::abs;
using std::atan;
using std::ceil;
using std::cos;
using std::exp;
using std::floor;
using std::isfinite;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;
using std::tan;

/// Decimal digits the working precision carries faithfully.
inline constexpr int kRealDigits10 = std::numeric_limits<real>::digits10;

inline double to_double(const real& v) { return static_cast<double>(v); }

/// Parses a decimal or scientific literal at full working precision.
/// Throws std::invalid_argument when the whole string is not a number.
real parse_real(std::string_view text);

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(const real& v, int decimals);

/// Scientific notation with `digits` digits after the point, e.g. 1.80E-20.
std::string format_sci(const real& v, int digits);

real pi();
real euler_e();

}  // namespace lrkm
