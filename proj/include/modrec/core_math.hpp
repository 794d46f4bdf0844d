#pragma once

#include <vector>

namespace modrec {

/// Reduce x into the half-open cell [-delta/2, delta/2). The result r
/// satisfies x - r = m*delta for an integer m. Throws std::invalid_argument
/// for non-positive delta or non-finite x.
double mod_reduce(double x, double delta);

/// Chebyshev polynomial of the first kind, T_k(y), evaluated with the
/// three-term recurrence. Overflows to +/-inf for large k and |y| > 1.
double chebyshev_value(int k, double y);

/// Dense real polynomial, coefficients stored lowest power first
/// (coeffs[j] multiplies z^j). Trailing zeros are kept trimmed so that
/// degree() is meaningful.
struct LaurentPoly {
    std::vector<double> coeffs;

    LaurentPoly() : coeffs{0.0} {}
    explicit LaurentPoly(std::vector<double> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void trim();

    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    /// multiply by z^k
    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(double s) const;
    double eval(double z) const;
};

/// Monic prediction filter derived from the shifted Chebyshev polynomial
/// on [a, 2]: taps h_1..h_2K of p(z) = 1 - h_1 z - ... - h_2K z^2K.
/// taps_lo carries a per-tap compensation term (taps[i] + taps_lo[i] is the
/// tap to roughly twice double precision); plain-double callers may ignore it.
struct PredictorTaps {
    int order = 0;                 // K
    double band_edge_a = 0.0;      // a = 2cos(2*pi*W*Ts)
    std::vector<double> taps;      // h_1..h_2K
    std::vector<double> taps_lo;   // compensation, same length
    double guaranteed_bound = 0.0; // 2*((2-a)/4)^K, max in-band magnitude
};

/// Build the order-K Chebyshev predictor for band edge a in (-2, 2).
/// Throws std::invalid_argument outside that open interval (a = 2 is zero
/// bandwidth, a = -2 is exactly critical sampling and the bound stops
/// decaying).
PredictorTaps build_chebyshev_taps(int order, double band_edge_a);

/// |p(e^{-2*pi*i*f_norm})| for the filter polynomial, f_norm = f*Ts in
/// [-1/2, 1/2]. Evaluated through the Chebyshev form on y = 2cos(2*pi*f),
/// which stays accurate in-band where direct coefficient summation loses
/// everything to cancellation.
double eval_on_unit_circle(const PredictorTaps& taps, double f_norm);

/// Max of eval_on_unit_circle over a uniform grid of grid_points points on
/// [0, f_norm_edge] (negative frequencies are redundant by symmetry).
double in_band_max(const PredictorTaps& taps, double f_norm_edge, int grid_points);

} // namespace modrec
