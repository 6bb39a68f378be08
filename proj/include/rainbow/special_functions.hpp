#pragma once

namespace rainbow::special {

/// Γ(x) for real x via the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula below 1/2. Relative error is below 1e-13 for |x| <= 50
/// and grows to about 2e-12 near the overflow point. Throws PoleError at
/// x = 0, -1, -2, ...
double gamma(double x);

/// sin(πx) with exact zeros at integers and argument reduction mod 2.
double sin_pi(double x);

}  // namespace rainbow::special
