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

#include "rirsim/sizing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rirsim
{
    namespace
    {
        void check_target(const SizingTarget &target)
        {
            if (!(target.r_lim_bps_hz > 0.0) || !std::isfinite(target.r_lim_bps_hz))
                throw std::invalid_argument("sizing: target rate must be finite and > 0");
            if (!(target.gamma_lim > 0.0))
                throw std::invalid_argument("sizing: gamma_lim must be > 0");
        }

        std::int64_t ceil_elements(double m_real)
        {
            if (!std::isfinite(m_real))
                throw std::domain_error("sizing: element count does not converge (infeasible inputs)");
            return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(m_real)));
        }

        void check_positive_gain(double value, const char *op)
        {
            if (!(value > 0.0) || !std::isfinite(value))
                throw std::domain_error(std::string(op) + ": infeasible target (zero channel gain)");
        }

        // Per-element hop gains x_t, x_r so that the relay-aided hop SNRs read
        // p kappa f(M) x / sigma^2 with f(M) = M^2 (exact/los) or M (bound).
        struct HopGains
        {
            double x_t = 0.0;
            double x_r = 0.0;
            bool quadratic_in_m = false; // true when f(M) = M^2
        };

        HopGains rir_hop_gains(const RateInputs &in, RateMode mode, const char *op)
        {
            switch (mode)
            {
            case RateMode::exact:
                if (!in.stats)
                    throw std::invalid_argument(std::string(op) + ": exact mode requires channel stats");
                return {in.stats->xi_circ_t, in.stats->xi_circ_r, true};
            case RateMode::los:
                if (!in.los)
                    throw std::invalid_argument(std::string(op) + ": los mode requires LOS gains");
                return {in.los->rho_t * in.los->eta_t, in.los->rho_r * in.los->eta_r, true};
            default:
                if (!in.los)
                    throw std::invalid_argument(std::string(op) + ": upper_bound mode requires LOS gains");
                return {in.los->rho_t, in.los->rho_r, false};
            }
        }
    } // namespace

    SizingTarget make_sizing_target(double r_lim_bps_hz)
    {
        if (!(r_lim_bps_hz > 0.0) || !std::isfinite(r_lim_bps_hz))
            throw std::invalid_argument("sizing: target rate must be finite and > 0");
        return {r_lim_bps_hz, std::exp2(r_lim_bps_hz) - 1.0};
    }

    const char *to_string(SizingBranch branch)
    {
        switch (branch)
        {
        case SizingBranch::irs_2m:
            return "irs_2m";
        case SizingBranch::irs_m:
            return "irs_m";
        case SizingBranch::rir_df:
            return "rir_df";
        case SizingBranch::rir_af_gain_limited:
            return "rir_af_gain_limited";
        default:
            return "rir_af_power_limited";
        }
    }

    const char *to_string(IrsConvention convention)
    {
        return convention == IrsConvention::two_m ? "2m" : "m";
    }

    double solve_positive_quadratic(double a, double b, double c)
    {
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("solve_positive_quadratic: a must be finite and > 0");
        if (!(c >= 0.0) || !std::isfinite(c) || !std::isfinite(b))
            throw std::invalid_argument("solve_positive_quadratic: b must be finite, c finite and >= 0");
        const double s = std::sqrt(b * b + 4.0 * a * c);
        // For b < 0 the direct form cancels; use the conjugate expression.
        const double root = b >= 0.0 ? (b + s) / (2.0 * a) : (2.0 * c) / (s - b);
        return std::max(root, 0.0);
    }

    double solve_positive_root(double a, double b, double c)
    {
        return std::sqrt(solve_positive_quadratic(a, b, c));
    }

    SizingReport elements_irs(const SizingTarget &target, const RateInputs &in, RateMode mode,
                              IrsConvention convention)
    {
        check_target(target);
        double xi = 0.0;
        switch (mode)
        {
        case RateMode::exact:
            if (!in.stats)
                throw std::invalid_argument("elements_irs: exact mode requires channel stats");
            xi = in.stats->xi_tr;
            break;
        case RateMode::los:
        case RateMode::upper_bound:
            if (in.stats && mode == RateMode::upper_bound)
                xi = in.stats->zeta_t * in.stats->zeta_r;
            else if (in.los)
                xi = in.los->rho_t * in.los->rho_r;
            else
                throw std::invalid_argument("elements_irs: los/upper_bound mode requires LOS gains");
            break;
        }
        const double denom = in.p_t_mw * in.kappa * xi;
        check_positive_gain(denom, "elements_irs");
        const double m_surface = std::sqrt(target.gamma_lim * in.sigma2_sq_mw / denom);
        const bool two_m = convention == IrsConvention::two_m;
        const double m_real = two_m ? 0.5 * m_surface : m_surface;
        return {ceil_elements(m_real), m_real, two_m ? SizingBranch::irs_2m : SizingBranch::irs_m};
    }

    SizingReport elements_rir_df(const SizingTarget &target, const RateInputs &in, RateMode mode)
    {
        check_target(target);
        const HopGains gains = rir_hop_gains(in, mode, "elements_rir_df");
        check_positive_gain(gains.x_t, "elements_rir_df");
        check_positive_gain(gains.x_r, "elements_rir_df");
        const double worst_hop = std::max(in.sigma1_sq_mw / (in.p_t_mw * gains.x_t),
                                          in.sigma2_sq_mw / (in.p_r_mw * gains.x_r));
        const double base = target.gamma_lim / in.kappa * worst_hop;
        const double m_real = gains.quadratic_in_m ? std::sqrt(base) : base;
        return {ceil_elements(m_real), m_real, SizingBranch::rir_df};
    }

    SizingReport elements_rir_af(const SizingTarget &target, const RateInputs &in, RateMode mode)
    {
        check_target(target);
        const HopGains gains = rir_hop_gains(in, mode, "elements_rir_af");
        check_positive_gain(gains.x_t, "elements_rir_af");
        check_positive_gain(gains.x_r, "elements_rir_af");
        if (in.beta && !(*in.beta > 0.0))
            throw std::domain_error("elements_rir_af: beta must be > 0 for a finite element count");

        const auto solve = [&](double a, double b, double c) {
            const double root = solve_positive_quadratic(a, b, c);
            return gains.quadratic_in_m ? std::sqrt(root) : root;
        };

        if (in.beta)
        {
            const double beta = *in.beta;
            const double a = in.p_t_mw * beta * in.kappa * in.kappa * gains.x_t * gains.x_r;
            const double b = target.gamma_lim * beta * in.kappa * gains.x_r * in.sigma1_sq_mw;
            const double c = target.gamma_lim * in.sigma2_sq_mw;
            const double m_gain = solve(a, b, c);
            const double hop_t = gains.quadratic_in_m ? m_gain * m_gain * gains.x_t : m_gain * gains.x_t;
            const double cap = in.p_r_mw / (in.p_t_mw * in.kappa * hop_t + in.sigma1_sq_mw);
            if (beta <= cap)
                return {ceil_elements(m_gain), m_gain, SizingBranch::rir_af_gain_limited};
        }

        // Full-power branch: gamma1 gamma2 = gamma_lim (gamma1 + gamma2 + 1)
        // with per-hop slopes g = kappa p x / sigma^2.
        const double g1 = in.kappa * in.p_t_mw * gains.x_t / in.sigma1_sq_mw;
        const double g2 = in.kappa * in.p_r_mw * gains.x_r / in.sigma2_sq_mw;
        const double m_full = solve(g1 * g2, target.gamma_lim * (g1 + g2), target.gamma_lim);
        return {ceil_elements(m_full), m_full, SizingBranch::rir_af_power_limited};
    }

} // namespace rirsim
