// SPDX-License-Identifier: Apache-2.0
//
// rirsim - rate and element-count simulation for IRS and relay-aided IRS links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rirsim/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rirsim
{
    namespace
    {
        void validate_inputs(const RateInputs &in)
        {
            if (in.elements < 0)
                throw std::invalid_argument("rate inputs: elements must be >= 0");
            if (!(in.kappa > 0.0) || in.kappa > 1.0)
                throw std::invalid_argument("rate inputs: kappa must be in (0, 1]");
            if (!(in.p_t_mw > 0.0) || !std::isfinite(in.p_t_mw))
                throw std::invalid_argument("rate inputs: p_t_mw must be finite and > 0");
            if (!(in.p_r_mw > 0.0) || !std::isfinite(in.p_r_mw))
                throw std::invalid_argument("rate inputs: p_r_mw must be finite and > 0");
            if (!(in.sigma1_sq_mw > 0.0) || !(in.sigma2_sq_mw > 0.0))
                throw std::invalid_argument("rate inputs: noise powers must be > 0");
            if (in.beta && (!(*in.beta >= 0.0) || !std::isfinite(*in.beta)))
                throw std::invalid_argument("rate inputs: beta must be finite and >= 0");
        }

        const ChannelStats &need_stats(const RateInputs &in, const char *op)
        {
            if (!in.stats)
                throw std::invalid_argument(std::string(op) + ": exact mode requires channel stats");
            return *in.stats;
        }

        const LosGains &need_los(const RateInputs &in, const char *op)
        {
            if (!in.los)
                throw std::invalid_argument(std::string(op) + ": los/upper_bound mode requires LOS gains");
            if (!(in.los->rho_t >= 0.0) || !(in.los->rho_r >= 0.0))
                throw std::invalid_argument(std::string(op) + ": LOS path gains must be >= 0");
            return *in.los;
        }

        const LosGains &need_los_with_eta(const RateInputs &in, const char *op)
        {
            const LosGains &los = need_los(in, op);
            if (!(los.eta_t > 0.0) || !(los.eta_r > 0.0))
                throw std::invalid_argument(std::string(op) + ": los mode requires near-field eta statistics");
            return los;
        }

        RateBranch mode_branch(RateMode mode)
        {
            switch (mode)
            {
            case RateMode::exact:
                return RateBranch::exact;
            case RateMode::los:
                return RateBranch::los;
            default:
                return RateBranch::upper_bound;
            }
        }

        RateReport make_report(double snr, RateBranch branch)
        {
            return {rate_from_snr(snr), snr, branch};
        }

        // Aggregate per-hop channel factors A_t, A_r of the relay-aided link,
        // defined so that the hop SNRs read p kappa A / sigma^2:
        //   exact:       A = M^2 xi_circ
        //   los:         A = M^2 rho eta
        //   upper_bound: A = M rho
        struct HopFactors
        {
            double a_t = 0.0;
            double a_r = 0.0;
        };

        HopFactors rir_hop_factors(const RateInputs &in, RateMode mode, const char *op)
        {
            const double m = static_cast<double>(in.elements);
            switch (mode)
            {
            case RateMode::exact:
            {
                const ChannelStats &stats = need_stats(in, op);
                if (!(stats.xi_circ_t > 0.0) || !(stats.xi_circ_r > 0.0))
                    throw std::invalid_argument(std::string(op) + ": stats lack composite-channel statistics");
                return {m * m * stats.xi_circ_t, m * m * stats.xi_circ_r};
            }
            case RateMode::los:
            {
                const LosGains &los = need_los_with_eta(in, op);
                return {m * m * los.rho_t * los.eta_t, m * m * los.rho_r * los.eta_r};
            }
            default:
            {
                const LosGains &los = need_los(in, op);
                return {m * los.rho_t, m * los.rho_r};
            }
            }
        }

        // Single-antenna hop gains of the standalone relays (zeta or rho).
        HopFactors relay_hop_factors(const RateInputs &in, RateMode mode, const char *op)
        {
            if (mode == RateMode::exact)
            {
                const ChannelStats &stats = need_stats(in, op);
                return {stats.zeta_t, stats.zeta_r};
            }
            const LosGains &los = need_los(in, op);
            return {los.rho_t, los.rho_r};
        }

        // Shared AF combination: clamp the requested gain to the power budget
        // and evaluate the two-hop SNR. `kappa` is 1 for standalone relays.
        RateReport af_report(const RateInputs &in, double kappa, const HopFactors &hops)
        {
            const double cap = in.p_r_mw / (in.p_t_mw * kappa * hops.a_t + in.sigma1_sq_mw);
            const bool power_limited = !in.beta || *in.beta > cap;
            const double beta_eff = power_limited ? cap : *in.beta;
            const double snr = in.p_t_mw * beta_eff * kappa * kappa * hops.a_t * hops.a_r /
                               (beta_eff * kappa * hops.a_r * in.sigma1_sq_mw + in.sigma2_sq_mw);
            return make_report(snr, power_limited ? RateBranch::power_limited : RateBranch::gain_limited);
        }
    } // namespace

    const char *to_string(RateMode mode)
    {
        switch (mode)
        {
        case RateMode::exact:
            return "exact";
        case RateMode::los:
            return "los";
        default:
            return "upper_bound";
        }
    }

    const char *to_string(RateBranch branch)
    {
        switch (branch)
        {
        case RateBranch::exact:
            return "exact";
        case RateBranch::los:
            return "los";
        case RateBranch::upper_bound:
            return "upper_bound";
        case RateBranch::gain_limited:
            return "gain_limited";
        default:
            return "power_limited";
        }
    }

    double rate_from_snr(double snr)
    {
        return std::log1p(snr) / std::numbers::ln2;
    }

    RateReport rate_irs(const RateInputs &in, RateMode mode)
    {
        validate_inputs(in);
        double xi = 0.0;
        switch (mode)
        {
        case RateMode::exact:
            xi = need_stats(in, "rate_irs").xi_tr;
            break;
        case RateMode::los:
            xi = need_los(in, "rate_irs").rho_t * in.los->rho_r;
            break;
        default:
            if (in.stats)
                xi = in.stats->zeta_t * in.stats->zeta_r;
            else
                xi = need_los(in, "rate_irs").rho_t * in.los->rho_r;
            break;
        }
        const double m = static_cast<double>(in.elements);
        const double snr = in.p_t_mw * in.kappa * m * m * xi / in.sigma2_sq_mw;
        return make_report(snr, mode_branch(mode));
    }

    RateReport rate_df_relay(const RateInputs &in, RateMode mode)
    {
        validate_inputs(in);
        const HopFactors hops = relay_hop_factors(in, mode, "rate_df_relay");
        const double snr = std::min(in.p_t_mw * hops.a_t / in.sigma1_sq_mw,
                                    in.p_r_mw * hops.a_r / in.sigma2_sq_mw);
        return make_report(snr, mode_branch(mode));
    }

    RateReport rate_af_relay(const RateInputs &in, RateMode mode)
    {
        validate_inputs(in);
        return af_report(in, 1.0, relay_hop_factors(in, mode, "rate_af_relay"));
    }

    RateReport rate_rir_direction(const RateInputs &in, Direction direction, RateMode mode)
    {
        validate_inputs(in);
        const HopFactors hops = rir_hop_factors(in, mode, "rate_rir_direction");
        const double snr = direction == Direction::tx_side
                               ? in.p_t_mw * in.kappa * hops.a_t / in.sigma1_sq_mw
                               : in.p_r_mw * in.kappa * hops.a_r / in.sigma2_sq_mw;
        return make_report(snr, mode_branch(mode));
    }

    RateReport rate_rir_df(const RateInputs &in, RateMode mode)
    {
        validate_inputs(in);
        const HopFactors hops = rir_hop_factors(in, mode, "rate_rir_df");
        const double snr = in.kappa * std::min(in.p_t_mw * hops.a_t / in.sigma1_sq_mw,
                                               in.p_r_mw * hops.a_r / in.sigma2_sq_mw);
        return make_report(snr, mode_branch(mode));
    }

    RateReport rate_rir_af(const RateInputs &in, RateMode mode)
    {
        validate_inputs(in);
        return af_report(in, in.kappa, rir_hop_factors(in, mode, "rate_rir_af"));
    }

    double af_relay_gain_cap(const RateInputs &in, RateMode mode)
    {
        validate_inputs(in);
        const HopFactors hops = relay_hop_factors(in, mode, "af_relay_gain_cap");
        return in.p_r_mw / (in.p_t_mw * hops.a_t + in.sigma1_sq_mw);
    }

    double rir_af_gain_cap(const RateInputs &in, RateMode mode)
    {
        validate_inputs(in);
        const HopFactors hops = rir_hop_factors(in, mode, "rir_af_gain_cap");
        return in.p_r_mw / (in.p_t_mw * in.kappa * hops.a_t + in.sigma1_sq_mw);
    }

} // namespace rirsim
