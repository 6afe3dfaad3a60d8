#pragma once

#include <string_view>

#include "fourierlab/angle.hpp"
#include "fourierlab/closedform.hpp"
#include "fourierlab/pipoly.hpp"

namespace fourierlab {

/// Parses the summand of a series over n >= 1, for example
///   (sin(n)/n)^7            sin(n)^2*sin(n*x)/n^3
///   (-1)^(n+1)*cos(n*x)/n^2  3/2*sin(pi/3*n)/n + cos(2*n)/n^2
/// Arguments of sin and cos must be n*(r + s*pi + t*x) with rational r, s, t.
/// (-1)^(n+k) is read as (-1)^k*cos(pi*n). Throws ParseError with the byte
/// offset of the problem and the tokens that would have been accepted there.
ProductExpression parse_series(std::string_view text);

/// Parses an element of Q[pi] such as "-1/2 + 23*pi/96" or "(pi-1)^2/6".
PiPoly parse_pipoly(std::string_view text);

/// Parses r + s*pi, for example "pi/3", "2*pi - 1" or "0.25".
Angle parse_angle(std::string_view text);

}  // namespace fourierlab
