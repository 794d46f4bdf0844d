#include "modrec/recovery.hpp"

#include <cmath>
#include <sstream>

#include "modrec/core_math.hpp"
#include "quad_real.hpp"

namespace modrec {

using detail::quad;

void RecoveryConfig::validate() const {
    auto need_pos = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string("RecoveryConfig: ") + name +
                                        " must be positive and finite");
    };
    need_pos(w, "w");
    need_pos(energy_e, "energy_e");
    need_pos(tail_t0, "tail_t0");
    need_pos(tail_rho, "tail_rho");
    need_pos(delta, "delta");
    need_pos(ts, "ts");
    if (!(margin >= 0.0 && margin < 1.0))
        throw std::invalid_argument("RecoveryConfig: margin must lie in [0, 1)");
    if (!(ts * w < 0.5)) {
        std::ostringstream msg;
        msg << "sampling is not above the Nyquist rate: ts*w = " << ts * w << " must be < 1/2";
        throw infeasible_rate_error(msg.str());
    }
}

const char* to_string(FilterKind kind) {
    return kind == FilterKind::chebyshev ? "chebyshev" : "difference";
}

FilterKind filter_kind_from_string(const std::string& name) {
    if (name == "chebyshev") return FilterKind::chebyshev;
    if (name == "difference") return FilterKind::difference;
    throw std::invalid_argument("unknown filter kind: " + name);
}

int required_k(const RecoveryConfig& config) {
    config.validate();
    const double num = std::log(std::sqrt(32.0 * config.w * config.energy_e) / config.delta);
    if (num <= 0.0) return 1; // bound is already below delta/2 at any order
    const double den = std::log(2.0 / (1.0 - std::cos(2.0 * M_PI * config.w * config.ts)));
    return static_cast<int>(std::floor(num / den)) + 1;
}

long long start_index(const RecoveryConfig& config) {
    config.validate();
    const double reach =
        std::max(config.tail_t0, std::pow(config.delta / 2.0, -1.0 / config.tail_rho));
    return -static_cast<long long>(std::ceil(reach / config.ts)) - 1;
}

PredictorFilter build_filter(const RecoveryConfig& config, FilterKind kind,
                             std::optional<int> difference_order) {
    config.validate();
    PredictorFilter filter;
    filter.kind = kind;

    if (kind == FilterKind::difference) {
        if (!difference_order || *difference_order < 1)
            throw std::invalid_argument("build_filter: difference kind needs an explicit order L >= 1");
        const int len = *difference_order;
        filter.order = len;
        filter.taps.resize(static_cast<std::size_t>(len));
        // (1-z)^L = 1 - h_1 z - ... - h_L z^L with h_i = (-1)^(i+1) * binom(L, i)
        double binom = 1.0;
        for (int i = 1; i <= len; ++i) {
            binom = binom * (len - i + 1) / i;
            filter.taps[static_cast<std::size_t>(i - 1)] = (i % 2 == 1 ? binom : -binom);
        }
        return filter;
    }

    int k = required_k(config);
    const double band_edge_a = 2.0 * std::cos(2.0 * M_PI * config.w * config.ts);
    const double ratio = (2.0 - band_edge_a) / 4.0;
    const double amp = std::sqrt(2.0 * config.w * config.energy_e);
    const double limit = (config.delta / 2.0) * (1.0 - config.margin);
    double bound = amp * 2.0 * std::pow(ratio, k);
    // required_k guarantees bound < delta/2; the safety margin can still be
    // violated when the formula lands within `margin` of the boundary, in
    // which case one more order restores it (ratio < 1 so this terminates)
    while (bound >= limit) {
        ++k;
        bound = amp * 2.0 * std::pow(ratio, k);
    }

    PredictorTaps taps = build_chebyshev_taps(k, band_edge_a);
    filter.order = k;
    filter.taps = std::move(taps.taps);
    filter.taps_lo = std::move(taps.taps_lo);
    filter.error_bound = bound;
    return filter;
}

namespace {

quad tap_q(const PredictorFilter& filter, std::size_t i) {
    const double lo = filter.taps_lo.empty() ? 0.0 : filter.taps_lo[i];
    return detail::q_from_pair(filter.taps[i], lo);
}

} // namespace

double predict(const PredictorFilter& filter, std::span<const double> history) {
    if (history.size() != filter.length())
        throw std::invalid_argument("predict: history must have exactly L entries");
    quad acc = 0;
    for (std::size_t i = 0; i < history.size(); ++i)
        acc += tap_q(filter, i) * static_cast<quad>(history[i]);
    return static_cast<double>(acc);
}

UnfoldResult unfold(const SampleStream& folded, const PredictorFilter& filter,
                    const RecoveryConfig& config, std::span<const double> warmup,
                    std::span<const double> warmup_lo) {
    config.validate();
    if (!folded.folded_delta)
        throw std::invalid_argument("unfold: stream is not folded");
    if (*folded.folded_delta != config.delta)
        throw std::invalid_argument("unfold: stream folded with a different delta than the config");
    const std::size_t len = filter.length();
    if (warmup.size() != len)
        throw std::invalid_argument("unfold: warmup must supply exactly L samples");
    if (!warmup_lo.empty() && warmup_lo.size() != len)
        throw std::invalid_argument("unfold: warmup_lo size mismatch");

    const long long n_start = start_index(config);
    const long long n_end = folded.end_index();
    if (!folded.has_index(n_start)) {
        std::ostringstream msg;
        msg << "unfold: folded stream covers [" << folded.start_index << ", " << n_end
            << "] but decoding starts at " << n_start;
        throw std::out_of_range(msg.str());
    }

    const quad delta_q = static_cast<quad>(config.delta);
    const double near_limit = (config.delta / 2.0) * (1.0 - config.margin);

    // most-recent-first history of recovered values; warmup arrives in
    // ascending index order
    std::vector<quad> history(len);
    for (std::size_t i = 0; i < len; ++i) {
        const double lo = warmup_lo.empty() ? 0.0 : warmup_lo[len - 1 - i];
        history[i] = detail::q_from_pair(warmup[len - 1 - i], lo);
    }

    UnfoldResult result;
    result.recovered.start_index = n_start;
    result.recovered.ts = folded.ts;
    const std::size_t count = static_cast<std::size_t>(n_end - n_start + 1);
    result.recovered.samples.resize(count);
    result.recovered.samples_lo.resize(count);

    TrialReport& report = result.report;
    report.config = config;
    report.kind = filter.kind;
    report.order = filter.order;
    report.error_bound = filter.error_bound;
    report.n_start = n_start;
    report.n_end = n_end;

    std::size_t warn_count = 0;
    for (long long n = n_start; n <= n_end; ++n) {
        quad prediction = 0;
        for (std::size_t i = 0; i < len; ++i) prediction += tap_q(filter, i) * history[i];

        const quad folded_n = detail::q_from_pair(folded.at(n), folded.lo_at(n));
        long long wraps = 0;
        const quad residual = detail::q_mod_reduce(folded_n - prediction, delta_q, &wraps);
        const quad recovered_n = folded_n - delta_q * static_cast<quad>(wraps);

        const double residual_d = std::fabs(static_cast<double>(residual));
        report.max_pred_error = std::max(report.max_pred_error, residual_d);
        if (residual_d >= near_limit) {
            ++warn_count;
            if (report.warnings.size() < 8) {
                std::ostringstream msg;
                msg << "near-boundary residual |e*| = " << residual_d << " at n = " << n
                    << " (limit " << near_limit << "); a wrap error here is undetectable";
                report.warnings.push_back(msg.str());
            }
        }

        const std::size_t i = static_cast<std::size_t>(n - n_start);
        detail::q_to_pair(recovered_n, result.recovered.samples[i],
                          result.recovered.samples_lo[i]);
        for (std::size_t j = len - 1; j > 0; --j) history[j] = history[j - 1];
        history[0] = recovered_n;
    }
    if (warn_count > report.warnings.size()) {
        std::ostringstream msg;
        msg << (warn_count - report.warnings.size()) << " further near-boundary residuals";
        report.warnings.push_back(msg.str());
    }
    // without ground truth, "no residual came near the boundary" is the
    // strongest success statement available
    report.success = report.warnings.empty();
    return result;
}

double verify_error_bound(const SignalSpec& spec, const PredictorFilter& filter,
                          const RecoveryConfig& config, long long n_lo, long long n_hi) {
    config.validate();
    if (n_lo > n_hi) throw std::invalid_argument("verify_error_bound: n_lo > n_hi");
    const long long len = static_cast<long long>(filter.length());
    const SampleStream truth = sample_signal(spec, config.ts, n_lo - len, n_hi);
    double worst = 0.0;
    for (long long n = n_lo; n <= n_hi; ++n) {
        quad e = detail::q_from_pair(truth.at(n), truth.lo_at(n));
        for (long long i = 1; i <= len; ++i)
            e -= tap_q(filter, static_cast<std::size_t>(i - 1)) *
                 detail::q_from_pair(truth.at(n - i), truth.lo_at(n - i));
        worst = std::max(worst, std::fabs(static_cast<double>(e)));
    }
    return worst;
}

} // namespace modrec
