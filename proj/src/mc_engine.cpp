// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The onebit-mimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "onebit/mc_engine.hpp"
#include "onebit/estimation.hpp"
#include "onebit/numerics.hpp"
#include "onebit/precoding.hpp"
#include "onebit/quantizer.hpp"

#include <cmath>
#include <exception>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace onebit
{

double SqinrBreakdown::rate() const
{
    return std::log2(1.0 + gamma());
}

std::string to_string(DacModel m)
{
    return m == DacModel::Linearized ? "linearized" : "exact";
}

DacModel parse_dac_model(std::string_view s)
{
    if (s == "linearized")
        return DacModel::Linearized;
    if (s == "exact")
        return DacModel::Exact;
    throw ConfigError("unknown dac_model '" + std::string(s) + "' (expected linearized|exact)");
}

namespace
{

struct TrialContext
{
    const Scenario *scenario;
    RegimeKey key;
    McOptions options;
    EstimatorParams params;
    std::optional<DownlinkBussgang> linear_dac;
    double transmit_mw;
    double noise_mw;
    std::size_t users;
};

// Per-trial samples for every user, stored at the trial's own slot.
struct TrialSamples
{
    std::vector<unsigned char> ok;
    std::vector<Complex> gain;
    std::vector<double> iui;
    std::vector<double> qn;
    std::vector<double> genie;

    TrialSamples(std::size_t trials, std::size_t users)
        : ok(trials, 0), gain(trials * users), iui(trials * users), qn(trials * users), genie(trials * users)
    {
    }
};

void run_trial(const TrialContext &ctx, std::size_t n, TrialSamples &out)
{
    const Scenario &s = *ctx.scenario;
    const int L = s.L();
    const int K = s.K();
    RngStream rng(ctx.options.seed, n);

    const ChannelSet channels = draw_channels(s, rng);
    const ChannelEstimateSet est = estimate_channels(s, ctx.params, channels, rng);
    Precoder pre;
    try
    {
        pre = build_precoder(ctx.key.precoder, est, ctx.key.architecture, ctx.transmit_mw);
    }
    catch (const SingularMatrixError &)
    {
        return; // counted as a failed trial
    }

    // Effective precoders A_l W_l and distortion covariances per BS.
    std::vector<ComplexMatrix> AW(L);
    std::vector<ComplexMatrix> rqq(L);
    const bool quantized = ctx.key.quantized_dac();
    const bool exact = quantized && ctx.options.dac_model == DacModel::Exact;
    for (int l = 0; l < L; ++l)
    {
        if (!quantized)
            AW[l] = pre.W[l];
        else if (!exact)
            AW[l] = ctx.linear_dac->gain(l) * pre.W[l];
        else
        {
            const ComplexMatrix Rxx = pre.W[l] * pre.W[l].adjoint();
            AW[l] = bussgang_linear_operator(Rxx).asDiagonal() * pre.W[l];
            rqq[l] = arcsin_law_quantization_noise(Rxx);
        }
    }

    const double linear_qn = 1.0 - kTwoOverPi;
    const std::size_t base = n * ctx.users;
    for (int j = 0; j < L; ++j)
    {
        for (int k = 0; k < K; ++k)
        {
            out.iui[base + j * K + k] = 0.0;
            out.qn[base + j * K + k] = 0.0;
        }
        for (int l = 0; l < L; ++l)
        {
            const ComplexMatrix &H = channels.block(l, j); // BS l to users of cell j
            const ComplexMatrix E = H.adjoint() * AW[l];   // (k, m): user k, stream m of BS l
            const double eta = pre.eta(l);
            ComplexMatrix RH;
            if (exact)
                RH = rqq[l] * H;
            for (int k = 0; k < K; ++k)
            {
                const std::size_t u = base + j * K + k;
                double interference = 0.0;
                for (int m = 0; m < K; ++m)
                {
                    if (l == j && m == k)
                        continue;
                    interference += std::norm(E(k, m));
                }
                out.iui[u] += eta * interference;
                if (l == j)
                    out.gain[u] = E(k, k);
                if (exact)
                    out.qn[u] += eta * H.col(k).dot(RH.col(k)).real();
                else if (quantized)
                    out.qn[u] += eta * linear_qn * H.col(k).squaredNorm();
            }
        }
    }
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
        {
            const std::size_t u = base + j * K + k;
            const double signal = pre.eta(j) * std::norm(out.gain[u]);
            out.genie[u] = std::log2(1.0 + signal / (out.iui[u] + out.qn[u] + ctx.noise_mw));
        }
    out.ok[n] = 1;
}

struct Moments
{
    double mean = 0.0;
    double stderr_ = 0.0;
};

template <class F> Moments moments(const TrialSamples &smp, std::size_t users, std::size_t u, std::size_t valid, F &&f)
{
    const std::size_t trials = smp.ok.size();
    double sum = 0.0;
    for (std::size_t n = 0; n < trials; ++n)
        if (smp.ok[n])
            sum += f(n * users + u);
    const double mean = sum / valid;
    double ss = 0.0;
    for (std::size_t n = 0; n < trials; ++n)
        if (smp.ok[n])
        {
            const double d = f(n * users + u) - mean;
            ss += d * d;
        }
    const double var = valid > 1 ? ss / (valid - 1) : 0.0;
    return {mean, std::sqrt(var / valid)};
}

} // namespace

RateReport mc_sqinr(const Scenario &scenario, const RegimeKey &key, const McOptions &options)
{
    if (options.trials < 1)
        throw DomainError("mc_sqinr: trials must be at least 1");
    if (key.precoder == PrecoderKind::ZF && scenario.K() >= scenario.M())
        throw DomainError("mc_sqinr: ZF needs K < M");

    const int L = scenario.L();
    const int K = scenario.K();
    TrialContext ctx{&scenario, key, options, estimator_params(scenario, key.estimation()), std::nullopt,
                     scenario.transmit_mw(), scenario.noise_mw(), static_cast<std::size_t>(L) * K};
    if (key.quantized_dac())
        ctx.linear_dac = asymptotic_bussgang(key.precoder, ctx.params, scenario.M(), K);

    const auto trials = static_cast<std::size_t>(options.trials);
    TrialSamples smp(trials, ctx.users);
    std::vector<std::exception_ptr> errors(trials);

    if (options.execution == Execution::Serial)
    {
        for (std::size_t n = 0; n < trials; ++n)
            run_trial(ctx, n, smp);
    }
    else
    {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(trials); ++n)
        {
            try
            {
                run_trial(ctx, static_cast<std::size_t>(n), smp);
            }
            catch (...)
            {
                errors[n] = std::current_exception();
            }
        }
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::size_t valid = 0;
    for (auto ok : smp.ok)
        valid += ok;
    const std::size_t failed = trials - valid;
    if (failed * 100 > trials || valid == 0)
    {
        std::ostringstream msg;
        msg << "mc_sqinr: " << failed << " of " << trials << " trials failed (precoder construction)";
        throw NumericalError(msg.str());
    }

    RateReport r;
    r.L = L;
    r.K = K;
    r.trials = static_cast<int>(valid);
    r.failed_trials = static_cast<int>(failed);
    r.per_user.resize(ctx.users);
    r.mc_stderr.resize(ctx.users);
    r.genie_rate.resize(ctx.users);
    r.genie_stderr.resize(ctx.users);

    for (int j = 0; j < L; ++j)
    {
        const double eta = power_scaling(key.precoder, key.architecture, ctx.params, j, scenario.M(), ctx.transmit_mw);

        for (int k = 0; k < K; ++k)
        {
            const std::size_t u = static_cast<std::size_t>(j) * K + k;
            Complex gsum = 0.0;
            for (std::size_t n = 0; n < trials; ++n)
                if (smp.ok[n])
                    gsum += smp.gain[n * ctx.users + u];
            const Complex gmean = gsum / static_cast<double>(valid);
            const Complex dir = std::abs(gmean) > 0.0 ? std::conj(gmean) / std::abs(gmean) : Complex(1.0);

            const auto along = moments(smp, ctx.users, u, valid,
                                       [&](std::size_t i) { return (dir * smp.gain[i]).real(); });
            const auto spread = moments(smp, ctx.users, u, valid,
                                        [&](std::size_t i) { return std::norm(smp.gain[i] - gmean); });
            const auto qn = moments(smp, ctx.users, u, valid, [&](std::size_t i) { return smp.qn[i]; });
            const auto iui = moments(smp, ctx.users, u, valid, [&](std::size_t i) { return smp.iui[i]; });
            const auto genie = moments(smp, ctx.users, u, valid, [&](std::size_t i) { return smp.genie[i]; });

            SqinrBreakdown &b = r.per_user[u];
            b.ds = eta * std::norm(gmean);
            b.cu = eta * spread.mean;
            b.qn = qn.mean;
            b.iui = iui.mean;
            b.tn = ctx.noise_mw;

            TermStdErr &e = r.mc_stderr[u];
            e.ds = 2.0 * eta * std::abs(gmean) * along.stderr_;
            e.cu = eta * spread.stderr_;
            e.qn = qn.stderr_;
            e.iui = iui.stderr_;
            const double den = b.cu + b.qn + b.iui + b.tn;
            const double se_den = std::sqrt(e.cu * e.cu + e.qn * e.qn + e.iui * e.iui);
            const double gamma = b.gamma();
            const double rel_ds = b.ds > 0.0 ? e.ds / b.ds : 0.0;
            e.gamma = gamma * std::sqrt(rel_ds * rel_ds + (se_den / den) * (se_den / den));
            e.rate = e.gamma / ((1.0 + gamma) * std::log(2.0));

            r.genie_rate[u] = genie.mean;
            r.genie_stderr[u] = genie.stderr_;
            r.sum_rate += b.rate();
        }
    }
    return r;
}

CellUserTable mc_genie_rate(const Scenario &scenario, const RegimeKey &key, const McOptions &options)
{
    const RateReport r = mc_sqinr(scenario, key, options);
    CellUserTable out(r.L, r.K);
    for (int j = 0; j < r.L; ++j)
        for (int k = 0; k < r.K; ++k)
            out(j, k) = r.genie_at(j, k);
    return out;
}

} // namespace onebit
