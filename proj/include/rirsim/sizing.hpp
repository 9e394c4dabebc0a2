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

#ifndef RIRSIM_SIZING_HPP
#define RIRSIM_SIZING_HPP

#include "rirsim/rates.hpp"

namespace rirsim
{
    // Target spectral efficiency and the equivalent linear SNR threshold
    // gamma_lim = 2^R_lim - 1.
    struct SizingTarget
    {
        double r_lim_bps_hz = 0.0;
        double gamma_lim = 0.0;
    };

    SizingTarget make_sizing_target(double r_lim_bps_hz); // r_lim > 0

    // IRS element counts are reported per-surface-equivalent: with the two_m
    // convention the single IRS carries 2M elements so that comparisons against
    // the two-surface relay-aided link use the same total element budget.
    enum class IrsConvention
    {
        two_m,
        single_m
    };

    enum class SizingBranch
    {
        irs_2m,
        irs_m,
        rir_df,
        rir_af_gain_limited,
        rir_af_power_limited
    };

    const char *to_string(SizingBranch branch);
    const char *to_string(IrsConvention convention);

    struct SizingReport
    {
        std::int64_t m_required = 0; // ceiling of the real-valued solution, >= 1
        double m_real = 0.0;         // real-valued solution of the closed form
        SizingBranch branch = SizingBranch::rir_df;
    };

    // Positive root of a X^2 - b X - c = 0 (a > 0, c >= 0), i.e. the positive
    // M^2 solution of the quartic a M^4 - b M^2 - c.
    double solve_positive_quadratic(double a, double b, double c);

    // M = sqrt of the positive M^2 root of a M^4 - b M^2 - c = 0.
    double solve_positive_root(double a, double b, double c);

    // Minimum element count so that the corresponding rate operation meets the
    // target. Channel statistics in `in` are treated as fixed per-element
    // quantities; `in.elements` is ignored. Throws std::domain_error when the
    // target is infeasible (zero channel gain).
    SizingReport elements_irs(const SizingTarget &target, const RateInputs &in, RateMode mode,
                              IrsConvention convention = IrsConvention::two_m);
    SizingReport elements_rir_df(const SizingTarget &target, const RateInputs &in, RateMode mode);

    // AF sizing solves the gain-limited quadratic first, checks the gain
    // constraint at its root, and falls back to the full-power quadratic when
    // the requested beta exceeds the power budget at that size (a tie stays
    // gain-limited). Absent beta solves the full-power form directly.
    SizingReport elements_rir_af(const SizingTarget &target, const RateInputs &in, RateMode mode);

} // namespace rirsim

#endif
