#include "modrec/signal_model.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "quad_real.hpp"

namespace modrec {

namespace {

// uniform in [0,1) from the top 53 bits; the engine is standardized, the
// <random> distributions are not
double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

detail::quad eval_signal_q(const SignalSpec& spec, detail::quad t) {
    using detail::quad;
    quad acc = 0;
    const quad two_w0 = 2 * static_cast<quad>(spec.w0);
    for (std::size_t k = 0; k < spec.amps.size(); ++k) {
        const quad u = two_w0 * (t - static_cast<quad>(spec.centers[k]));
        acc += static_cast<quad>(spec.amps[k]) * detail::q_sinc(u);
    }
    return acc;
}

} // namespace

double sinc(double u) {
    if (u == std::floor(u)) return u == 0.0 ? 1.0 : 0.0;
    const double pu = M_PI * u;
    return std::sin(pu) / pu;
}

SignalSpec make_signal_spec(double w0, double w, std::vector<double> amps,
                            std::vector<double> centers) {
    if (!(w0 > 0.0) || !(w > 0.0) || !(w0 < w))
        throw std::invalid_argument("make_signal_spec: need 0 < w0 < w");
    if (amps.empty() || amps.size() != centers.size())
        throw std::invalid_argument("make_signal_spec: amps/centers size mismatch");
    for (double tau : centers) {
        const double k = tau * 2.0 * w0;
        if (std::fabs(k - std::round(k)) > 1e-9)
            throw std::invalid_argument("make_signal_spec: centers must sit on the 1/(2*w0) grid");
    }
    SignalSpec spec;
    spec.w0 = w0;
    spec.w = w;
    spec.amps = std::move(amps);
    spec.centers = std::move(centers);

    double sum_sq = 0.0, sum_abs = 0.0, max_tau = 0.0;
    for (std::size_t k = 0; k < spec.amps.size(); ++k) {
        sum_sq += spec.amps[k] * spec.amps[k];
        sum_abs += std::fabs(spec.amps[k]);
        max_tau = std::max(max_tau, std::fabs(spec.centers[k]));
    }
    spec.energy_e = sum_sq / (2.0 * w0);
    spec.tail_t0 = std::max(2.0 * max_tau, 2.0 * sum_abs / (M_PI * w0));
    spec.tail_rho = 1.0;
    return spec;
}

SignalSpec gen_signal(double w, double energy_budget, int num_terms, std::uint64_t seed) {
    if (!(w > 0.0)) throw std::invalid_argument("gen_signal: w must be positive");
    if (!(energy_budget > 0.0)) throw std::invalid_argument("gen_signal: energy budget must be positive");
    if (num_terms < 1) throw std::invalid_argument("gen_signal: num_terms must be >= 1");

    const double w0 = 0.95 * w;
    std::mt19937_64 rng(seed);
    std::vector<double> amps(static_cast<std::size_t>(num_terms));
    double sum_sq = 0.0;
    do {
        sum_sq = 0.0;
        for (double& c : amps) {
            c = 2.0 * uniform53(rng) - 1.0;
            sum_sq += c * c;
        }
    } while (sum_sq == 0.0);

    std::vector<double> centers(amps.size());
    for (int k = 0; k < num_terms; ++k)
        centers[static_cast<std::size_t>(k)] = static_cast<double>(k - num_terms / 2) / (2.0 * w0);

    // scale to the energy budget, then cap so sum|c| <= pi*w0; the cap keeps
    // the triangle-inequality tail bound |x(t)| <= 1/|t| valid for every draw
    double scale = std::sqrt(energy_budget / (sum_sq / (2.0 * w0))) * (1.0 - 1e-12);
    double sum_abs = 0.0;
    for (double c : amps) sum_abs += std::fabs(c) * scale;
    const double b = sum_abs / (M_PI * w0);
    if (b > 1.0) scale /= b / (1.0 - 1e-12);
    for (double& c : amps) c *= scale;

    return make_signal_spec(w0, w, std::move(amps), std::move(centers));
}

double eval_signal(const SignalSpec& spec, double t) {
    double acc = 0.0;
    for (std::size_t k = 0; k < spec.amps.size(); ++k)
        acc += spec.amps[k] * sinc(2.0 * spec.w0 * (t - spec.centers[k]));
    return acc;
}

SampleStream sample_signal(const SignalSpec& spec, double ts, long long n_lo, long long n_hi) {
    if (!(ts > 0.0)) throw std::invalid_argument("sample_signal: ts must be positive");
    if (n_lo > n_hi) throw std::invalid_argument("sample_signal: n_lo > n_hi");
    SampleStream out;
    out.start_index = n_lo;
    out.ts = ts;
    const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
    out.samples.resize(count);
    out.samples_lo.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const detail::quad t = static_cast<detail::quad>(n_lo + static_cast<long long>(i)) *
                               static_cast<detail::quad>(ts);
        detail::q_to_pair(eval_signal_q(spec, t), out.samples[i], out.samples_lo[i]);
    }
    return out;
}

SampleStream fold_stream(const SampleStream& stream, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("fold_stream: delta must be positive");
    if (stream.folded_delta && *stream.folded_delta != delta)
        throw std::invalid_argument("fold_stream: stream already folded with a different delta");
    SampleStream out = stream;
    out.samples_lo.resize(out.samples.size(), 0.0);
    const detail::quad dq = static_cast<detail::quad>(delta);
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        const detail::quad x = detail::q_from_pair(stream.samples[i], stream.lo_at(stream.start_index + static_cast<long long>(i)));
        detail::q_to_pair(detail::q_mod_reduce(x, dq), out.samples[i], out.samples_lo[i]);
    }
    out.folded_delta = delta;
    return out;
}

double whittaker_reconstruct(const SampleStream& stream, double t, int window) {
    if (stream.folded_delta)
        throw std::invalid_argument("whittaker_reconstruct: stream is folded; unfold it first");
    if (window < 1) throw std::invalid_argument("whittaker_reconstruct: window must be >= 1");
    const double center = t / stream.ts;
    const long long n_lo = static_cast<long long>(std::ceil(center - window));
    const long long n_hi = static_cast<long long>(std::floor(center + window));
    if (n_lo < stream.start_index || n_hi > stream.end_index()) {
        std::ostringstream msg;
        msg << "whittaker_reconstruct: window around t = " << t << " needs indices [" << n_lo
            << ", " << n_hi << "] but stream covers [" << stream.start_index << ", "
            << stream.end_index() << "]";
        throw std::out_of_range(msg.str());
    }
    double acc = 0.0;
    for (long long n = n_lo; n <= n_hi; ++n)
        acc += stream.at(n) * sinc((t - static_cast<double>(n) * stream.ts) / stream.ts);
    return acc;
}

} // namespace modrec
