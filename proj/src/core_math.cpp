#include "modrec/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quad_real.hpp"

namespace modrec {

double mod_reduce(double x, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("mod_reduce: delta must be positive and finite");
    if (!std::isfinite(x))
        throw std::invalid_argument("mod_reduce: x must be finite");
    double r = x - delta * std::floor(x / delta + 0.5);
    // rounding can land exactly on +delta/2 or just outside the cell
    if (r >= delta / 2) r -= delta;
    if (r < -delta / 2) r += delta;
    return r;
}

double chebyshev_value(int k, double y) {
    if (k < 0) throw std::invalid_argument("chebyshev_value: k must be >= 0");
    if (k == 0) return 1.0;
    double tm1 = 1.0, t = y;
    for (int i = 2; i <= k; ++i) {
        double next = 2.0 * y * t - tm1;
        tm1 = t;
        t = next;
    }
    return t;
}

LaurentPoly::LaurentPoly(std::vector<double> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    trim();
}

void LaurentPoly::trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    std::vector<double> out(coeffs.size() + rhs.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs.size(); ++j)
            out[i + j] += coeffs[i] * rhs.coeffs[j];
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    std::vector<double> out(std::max(coeffs.size(), rhs.coeffs.size()), 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
    for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) out[i] -= rhs.coeffs[i];
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("LaurentPoly::shifted: negative shift");
    std::vector<double> out(coeffs.size() + static_cast<std::size_t>(k), 0.0);
    std::copy(coeffs.begin(), coeffs.end(), out.begin() + k);
    return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::scaled(double s) const {
    std::vector<double> out = coeffs;
    for (double& c : out) c *= s;
    return LaurentPoly(std::move(out));
}

double LaurentPoly::eval(double z) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

namespace detail {

std::vector<quad> chebyshev_pk_coeffs(int order, quad a) {
    const quad b1 = -(a / 2 + 1);
    const quad s = (quad(2) - a) / 4;
    const quad s2 = s * s;
    std::vector<quad> qm1 = {quad(2)};            // Q_0
    std::vector<quad> q = {quad(1), b1, quad(1)}; // Q_1
    for (int k = 2; k <= order; ++k) {
        std::vector<quad> next(q.size() + 2, quad(0));
        const std::size_t n = next.size();
        // (z^2 + b1 z + 1) * Q_{k-1}, lower half only
        for (std::size_t j = 0; j < n / 2 + 1; ++j) {
            quad acc = 0;
            if (j < q.size()) acc += q[j];
            if (j >= 1 && j - 1 < q.size()) acc += b1 * q[j - 1];
            if (j >= 2 && j - 2 < q.size()) acc += q[j - 2];
            if (j >= 2 && j - 2 < qm1.size()) acc -= s2 * qm1[j - 2];
            next[j] = acc;
        }
        for (std::size_t j = 0; j < n / 2; ++j) next[n - 1 - j] = next[j];
        qm1 = std::move(q);
        q = std::move(next);
    }
    return order == 0 ? qm1 : q;
}

} // namespace detail

PredictorTaps build_chebyshev_taps(int order, double band_edge_a) {
    if (order < 1) throw std::invalid_argument("build_chebyshev_taps: order must be >= 1");
    if (!(band_edge_a > -2.0 && band_edge_a < 2.0))
        throw std::invalid_argument(
            "build_chebyshev_taps: band_edge_a must lie in (-2, 2); got " +
            std::to_string(band_edge_a));

    const std::vector<detail::quad> pk =
        detail::chebyshev_pk_coeffs(order, static_cast<detail::quad>(band_edge_a));

    PredictorTaps out;
    out.order = order;
    out.band_edge_a = band_edge_a;
    out.guaranteed_bound = 2.0 * std::pow((2.0 - band_edge_a) / 4.0, order);
    out.taps.resize(2 * static_cast<std::size_t>(order));
    out.taps_lo.resize(out.taps.size());
    // p(z) = 1 - h_1 z - ... - h_2K z^2K
    for (std::size_t i = 0; i < out.taps.size(); ++i)
        detail::q_to_pair(-pk[i + 1], out.taps[i], out.taps_lo[i]);
    return out;
}

double eval_on_unit_circle(const PredictorTaps& taps, double f_norm) {
    const double a = taps.band_edge_a;
    const int k = taps.order;
    const double y_circle = 2.0 * std::cos(2.0 * M_PI * f_norm); // z + 1/z on |z|=1
    const double y = 2.0 * (y_circle - a) / (2.0 - a) - 1.0;     // map [a,2] -> [-1,1]
    const double s = (2.0 - a) / 4.0;
    if (std::fabs(y) <= 1.0)
        return 2.0 * std::pow(s, k) * std::fabs(chebyshev_value(k, y));
    // out of band |T_k| grows like cosh(k*acosh|y|); go through logs so the
    // tiny scale factor and the huge Chebyshev value cannot under/overflow
    const double t = std::acosh(std::fabs(y));
    const double log_val = std::log(2.0) + k * std::log(s) + k * t - std::log(2.0) +
                           std::log1p(std::exp(-2.0 * k * t));
    return std::exp(log_val);
}

double in_band_max(const PredictorTaps& taps, double f_norm_edge, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("in_band_max: grid_points must be >= 2");
    if (!(f_norm_edge > 0.0 && f_norm_edge < 0.5))
        throw std::invalid_argument("in_band_max: f_norm_edge must lie in (0, 1/2)");
    double best = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double f = f_norm_edge * static_cast<double>(i) / (grid_points - 1);
        best = std::max(best, eval_on_unit_circle(taps, f));
    }
    return best;
}

} // namespace modrec
