#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace modrec {

/// Finite mixture of grid-aligned sincs: x(t) = sum_k amps[k] *
/// sinc(2*w0*(t - centers[k])), bandlimited to [-w0, w0] with w0 < w.
/// Centers sit on the 1/(2*w0) grid, which makes the L2 energy exactly
/// sum(amps^2)/(2*w0) and gives an explicit 1/|t| tail beyond tail_t0.
struct SignalSpec {
    double w0 = 0.0;              // actual bandwidth, Hz
    double w = 0.0;               // declared class bandwidth W, Hz (w0 < w)
    std::vector<double> amps;     // c_1..c_M
    std::vector<double> centers;  // tau_1..tau_M, seconds
    double energy_e = 0.0;        // E
    double tail_t0 = 0.0;         // T0
    double tail_rho = 1.0;        // rho
};

/// Indexed block of samples x_{n0}, x_{n0+1}, ... taken every ts seconds.
/// folded_delta is present iff the samples are modulo-reduced.
/// samples_lo is an optional per-sample compensation (samples[i] +
/// samples_lo[i] holds the value to roughly twice double precision); it is
/// what lets the decoder survive band edges where the filter taps reach
/// 1e20. Empty means all-zero.
struct SampleStream {
    long long start_index = 0;
    std::vector<double> samples;
    std::vector<double> samples_lo;
    double ts = 1.0;
    std::optional<double> folded_delta;

    long long end_index() const {
        return start_index + static_cast<long long>(samples.size()) - 1;
    }
    bool has_index(long long n) const {
        return n >= start_index && n <= end_index();
    }
    double at(long long n) const { return samples[static_cast<std::size_t>(n - start_index)]; }
    double lo_at(long long n) const {
        return samples_lo.empty() ? 0.0 : samples_lo[static_cast<std::size_t>(n - start_index)];
    }
};

/// sin(pi*u)/(pi*u) with sinc(0) = 1 and exact zeros at nonzero integers.
double sinc(double u);

/// Assemble a SignalSpec from explicit amplitudes and centers, computing the
/// energy and tail fields. Centers must be grid-aligned (k/(2*w0) for
/// integer k) and w0 < w must hold strictly.
SignalSpec make_signal_spec(double w0, double w, std::vector<double> amps,
                            std::vector<double> centers);

/// Draw a random num_terms-sinc member of the class, deterministic in seed.
/// Uses w0 = 0.95*w, centers packed around t = 0, amplitudes scaled so that
/// energy_e <= energy_budget and sum|c|/(pi*w0) <= 1 (the latter makes the
/// stored tail bound |x(t)| <= 1/|t| provable, not just typical).
SignalSpec gen_signal(double w, double energy_budget, int num_terms, std::uint64_t seed);

double eval_signal(const SignalSpec& spec, double t);

/// x_n = x(n*ts) for n in [n_lo, n_hi]; fills samples_lo with the
/// extended-precision tails.
SampleStream sample_signal(const SignalSpec& spec, double ts, long long n_lo, long long n_hi);

/// Element-wise modulo reduction into [-delta/2, delta/2). Folding an
/// already-folded stream with the same delta is the identity; with a
/// different delta it throws.
SampleStream fold_stream(const SampleStream& stream, double delta);

/// Shannon-Whittaker interpolation truncated to |n - t/ts| <= window.
/// Throws std::out_of_range (naming the missing indices) if the window
/// around t is not fully covered by the stream, std::invalid_argument if
/// the stream is folded or window < 1.
double whittaker_reconstruct(const SampleStream& stream, double t, int window = 2000);

} // namespace modrec
