#pragma once

// Internal quadruple-precision kernels. The filter taps at tight band edges
// reach magnitudes ~1e20 while prediction residuals must resolve below
// delta/2, so signal evaluation, folding and the decode loop all run in
// __float128 and results are handed out as double head + double tail pairs.

#include <quadmath.h>

#include <cstdint>
#include <vector>

namespace modrec::detail {

using quad = __float128;

inline quad q_pi() { return M_PIq; }

inline quad q_from_pair(double hi, double lo) {
    return static_cast<quad>(hi) + static_cast<quad>(lo);
}

inline void q_to_pair(quad x, double& hi, double& lo) {
    hi = static_cast<double>(x);
    lo = static_cast<double>(x - static_cast<quad>(hi));
}

// sin(pi*u)/(pi*u) with exact zeros at nonzero integers and sinc(0) = 1.
inline quad q_sinc(quad u) {
    if (u == floorq(u)) return u == 0 ? quad(1) : quad(0);
    const quad pu = q_pi() * u;
    return sinq(pu) / pu;
}

// Residue of x in [-delta/2, delta/2); *wraps receives the subtracted
// multiple m with x - r = m*delta.
inline quad q_mod_reduce(quad x, quad delta, long long* wraps = nullptr) {
    quad m = floorq(x / delta + quad(0.5));
    quad r = x - delta * m;
    while (r >= delta / 2) { r -= delta; m += 1; }
    while (r < -delta / 2) { r += delta; m -= 1; }
    if (wraps) *wraps = static_cast<long long>(m);
    return r;
}

// Coefficients of p_K(z) = z^K * T_K^{[a,2]}(z + 1/z), lowest power first.
// Carried with the scaled recurrence
//   Q_1 = z^2 - (a/2+1)z + 1,   Q_0 = 2,
//   Q_K = (z^2 - (a/2+1)z + 1)*Q_{K-1} - s^2 z^2 Q_{K-2},  s = (2-a)/4,
// whose multipliers are all O(1); expanding T_K into monomials first would
// blow up as 2^K. The result is palindromic; the upper half is mirrored
// from the lower half so the symmetry is exact.
std::vector<quad> chebyshev_pk_coeffs(int order, quad a);

} // namespace modrec::detail
