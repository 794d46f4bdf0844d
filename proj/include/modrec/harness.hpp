#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modrec/recovery.hpp"
#include "modrec/signal_model.hpp"

namespace modrec {

struct PipelineResult {
    TrialReport report;
    SampleStream truth;
    SampleStream folded;
    SampleStream recovered;
};

/// End-to-end trial: sample -> (optional additive uniform noise) -> fold ->
/// build filter -> unfold -> compare to ground truth. The decode range is
/// [start_index, -start_index]; success means
/// max|recovered - truth| <= 1e-6 * delta.
PipelineResult run_pipeline(const SignalSpec& spec, double ts, double delta, FilterKind kind,
                            std::optional<int> difference_order = {}, double noise_eps = 0.0,
                            std::uint64_t noise_seed = 0);

/// Grid of trials written as CSV rows.
struct SweepSpec {
    std::vector<double> wts_products;  // W*Ts values; signals use W = 1
    std::vector<double> deltas;
    int trials_per_cell = 1;
    std::uint64_t seed = 0;
    std::vector<FilterKind> kinds = {FilterKind::chebyshev};
    std::vector<int> difference_orders = {6};
    int num_terms = 8;
    double energy_budget = 1.0;
};

/// One row per (wts, delta, kind[, order], trial):
///   wts,delta,kind,order,max_pred_err,max_rec_err,success
/// Numbers use 17 significant digits, lines end with LF. A failing cell
/// (e.g. an infeasible rate) becomes a row with nan errors and success=0
/// rather than aborting the sweep.
void run_sweep(const SweepSpec& sweep, std::ostream& csv);

/// %.17g, round-trip exact for doubles.
std::string format_g17(double value);

} // namespace modrec
