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

#ifndef RIRSIM_RATES_HPP
#define RIRSIM_RATES_HPP

#include <cstdint>
#include <optional>

#include "rirsim/channel.hpp"

namespace rirsim
{
    // exact:       vector channel statistics (ChannelStats)
    // los:         scalar LOS path gains with near-field statistics (LosGains)
    // upper_bound: LOS path gains with the near-field gain at its
    //              energy-conservation maximum (no layout dependence)
    enum class RateMode
    {
        exact,
        los,
        upper_bound
    };

    enum class Direction
    {
        tx_side, // transmitter -> surface -> relay
        rx_side  // relay -> surface -> receiver
    };

    enum class RateBranch
    {
        exact,
        los,
        upper_bound,
        gain_limited, // AF: requested amplification applied as-is
        power_limited // AF: amplification clamped to the relay power budget
    };

    const char *to_string(RateMode mode);
    const char *to_string(RateBranch branch);

    // Scalar LOS inputs: UMi path gains of the two far-field hops, plus the
    // near-field aperture statistics of the surface-to-relay hops (only needed
    // in los mode).
    struct LosGains
    {
        double rho_t = 0.0;
        double rho_r = 0.0;
        double eta_t = 0.0;
        double eta_r = 0.0;
    };

    struct RateInputs
    {
        std::int64_t elements = 1; // element count M of each surface (0 allowed; zero rate)
        double kappa = 1.0;        // power reflection efficiency, in (0, 1]
        double p_t_mw = 100.0;     // transmit power
        double p_r_mw = 100.0;     // relay power budget
        double sigma1_sq_mw = 1.0; // relay-side noise power
        double sigma2_sq_mw = 1.0; // receiver-side noise power
        std::optional<double> beta;              // requested AF gain (linear); absent = full power
        std::optional<ChannelStats> stats;       // required for exact mode
        std::optional<LosGains> los;             // required for los / upper_bound modes
    };

    struct RateReport
    {
        double rate_bps_hz = 0.0;
        double snr = 0.0;
        RateBranch branch = RateBranch::exact;
    };

    // log2(1 + snr), evaluated through log1p so small SNRs keep precision.
    double rate_from_snr(double snr);

    // Classical single-surface IRS with optimal phase configuration:
    //   SNR = p_t kappa M^2 xi / sigma2^2
    // xi is xi_{t,r} (exact), rho_t rho_r (los), or the Cauchy-Schwarz bound
    // zeta_t zeta_r (upper_bound; falls back to rho_t rho_r without stats,
    // where the bound is met with equality).
    RateReport rate_irs(const RateInputs &in, RateMode mode);

    // Full-duplex decode-and-forward relay, single antenna per direction:
    //   SNR = min(p_t zeta_t / sigma1^2, p_r zeta_r / sigma2^2)
    RateReport rate_df_relay(const RateInputs &in, RateMode mode);

    // Full-duplex amplify-and-forward relay, single antenna per direction:
    //   SNR = p_t beta zeta_t zeta_r / (beta zeta_r sigma1^2 + sigma2^2)
    // The requested gain is clamped to the relay power budget
    // beta <= p_r / (p_t zeta_t + sigma1^2); at the cap the expression equals
    // the full-power form gamma1 gamma2 / (gamma1 + gamma2 + 1).
    RateReport rate_af_relay(const RateInputs &in, RateMode mode);

    // One hop of the relay-aided link with phase-conjugate surface weights:
    //   SNR_t = p_t kappa M^2 xi_circ_t / sigma1^2   (tx_side)
    //   SNR_r = p_r kappa M^2 xi_circ_r / sigma2^2   (rx_side)
    // los substitutes xi_circ = rho * eta; upper_bound reduces M^2 xi_circ to
    // M rho (near-field gain at the energy-conservation maximum).
    RateReport rate_rir_direction(const RateInputs &in, Direction direction, RateMode mode);

    // Relay-aided link, DF relay: min of the two hop SNRs above.
    RateReport rate_rir_df(const RateInputs &in, RateMode mode);

    // Relay-aided link, AF relay:
    //   SNR = p_t beta kappa^2 A_t A_r / (beta kappa A_r sigma1^2 + sigma2^2)
    // with per-hop factors A_t = M^2 xi_circ_t etc. (per mode, as above) and
    // gain constraint beta <= p_r / (p_t kappa A_t + sigma1^2).
    RateReport rate_rir_af(const RateInputs &in, RateMode mode);

    // Largest AF gain the relay power budget allows.
    double af_relay_gain_cap(const RateInputs &in, RateMode mode);
    double rir_af_gain_cap(const RateInputs &in, RateMode mode);

} // namespace rirsim

#endif
