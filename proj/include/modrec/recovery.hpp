#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "modrec/signal_model.hpp"

namespace modrec {

/// Sampling rate does not satisfy ts*w < 1/2.
class infeasible_rate_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything the decoder needs to size its filter and pick a start index.
struct RecoveryConfig {
    double w = 0.0;         // class bandwidth W, Hz
    double energy_e = 0.0;  // E
    double tail_t0 = 0.0;   // T0
    double tail_rho = 1.0;  // rho
    double delta = 0.0;     // modulo cell size
    double ts = 0.0;        // sampling period, seconds
    double margin = 1e-3;   // safety factor on the delta/2 budget

    /// Throws std::invalid_argument on malformed fields and
    /// infeasible_rate_error unless ts*w < 1/2 strictly.
    void validate() const;
};

enum class FilterKind { chebyshev, difference };

const char* to_string(FilterKind kind);
FilterKind filter_kind_from_string(const std::string& name);

/// Monic prediction filter, taps h_1..h_L of
/// p(z) = 1 - h_1 z - ... - h_L z^L. For the chebyshev kind L = 2K and
/// error_bound = sqrt(2WE)*2*((2-a)/4)^K is a guaranteed ceiling on |e_n|
/// over the whole signal class; the difference kind ((1-z)^L) carries no
/// such guarantee.
struct PredictorFilter {
    FilterKind kind = FilterKind::chebyshev;
    int order = 0;                      // K for chebyshev, L for difference
    std::vector<double> taps;
    std::vector<double> taps_lo;        // compensation terms, may be empty
    std::optional<double> error_bound;

    std::size_t length() const { return taps.size(); }
};

/// Per-trial outcome record.
struct TrialReport {
    RecoveryConfig config;
    FilterKind kind = FilterKind::chebyshev;
    int order = 0;
    std::optional<double> error_bound;
    double max_pred_error = 0.0;                  // max |e*_n| seen by the decoder
    std::optional<double> max_recovery_error;     // vs ground truth, when known
    bool success = false;
    long long n_start = 0;
    long long n_end = 0;
    std::vector<std::string> warnings;
};

/// Smallest filter order K whose guaranteed error bound drops below delta/2:
/// smallest integer strictly above log(sqrt(32WE)/delta) / log(2/(1-cos(2*pi*W*Ts))).
/// Returns 1 when delta >= sqrt(32WE) (any order already suffices).
int required_k(const RecoveryConfig& config);

/// Largest N with |x_n| < delta/2 guaranteed for all n < N, from the tail
/// bound: N = -ceil(max(T0, (delta/2)^(-1/rho))/Ts) - 1.
long long start_index(const RecoveryConfig& config);

/// Build a predictor. The chebyshev kind sizes itself via required_k (order
/// is bumped, rarely, if the bound lands inside the safety margin); the
/// difference kind requires an explicit order.
PredictorFilter build_filter(const RecoveryConfig& config, FilterKind kind,
                             std::optional<int> difference_order = {});

/// One-step prediction sum h_i * history[i-1]; history is most-recent-first
/// and must have exactly filter.length() entries.
double predict(const PredictorFilter& filter, std::span<const double> history);

struct UnfoldResult {
    SampleStream recovered;
    TrialReport report;
};

/// Sequential decoder: for each n from the start index to the end of the
/// folded stream, predict x_n from the L previously recovered samples, wrap
/// the folded residual into [-delta/2, delta/2) around that prediction, and
/// emit x_n = folded_n - m*delta. warmup supplies the L unfolded samples at
/// indices start-L .. start-1 in ascending order (the start-index rule
/// guarantees the folded values there equal the true ones, so callers may
/// slice them straight out of the folded stream). warmup_lo optionally
/// carries their compensation terms.
///
/// Residuals within margin of the delta/2 boundary are recorded as warnings:
/// a true wrap error is silent without ground truth, and a near-boundary
/// residual is the best observable proxy.
UnfoldResult unfold(const SampleStream& folded, const PredictorFilter& filter,
                    const RecoveryConfig& config, std::span<const double> warmup,
                    std::span<const double> warmup_lo = {});

/// Max |e_n| of the filter on true (unfolded) samples of spec over
/// n in [n_lo, n_hi]. For a chebyshev filter this must come out below
/// filter.error_bound.
double verify_error_bound(const SignalSpec& spec, const PredictorFilter& filter,
                          const RecoveryConfig& config, long long n_lo, long long n_hi);

} // namespace modrec
