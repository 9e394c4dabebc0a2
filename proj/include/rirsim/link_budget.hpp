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

#ifndef RIRSIM_LINK_BUDGET_HPP
#define RIRSIM_LINK_BUDGET_HPP

#include <optional>

namespace rirsim
{
    // dB <-> linear power ratio conversions. All internal math runs in linear
    // units (mW and unitless gains); dB only appears at interfaces.
    double db_to_linear(double value_db);
    double linear_to_db(double value); // value > 0, else std::domain_error
    double dbm_to_mw(double value_dbm);
    double mw_to_dbm(double value_mw); // value > 0, else std::domain_error

    // 3GPP UMi street-canyon LOS path loss in dB:
    //   32.4 + 21 log10(d_3D [m]) + 20 log10(fc [GHz])
    // The 3GPP model is specified for distances of 10 m and above; shorter
    // inputs are evaluated as-is, without clamping.
    double umi_pathloss_db(double distance_3d_m, double fc_ghz);

    // Thermal noise floor at 290 K (-174 dBm/Hz) plus noise figure.
    double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

    struct RadioConfig
    {
        double fc_ghz = 3.5;         // carrier frequency
        double bandwidth_hz = 100e6; // signal bandwidth
        double noise_figure_db = 8.0;
        double p_t_dbm = 20.0;         // transmitter power
        double p_r_dbm = 20.0;         // relay maximum power
        double kappa = 1.0;            // surface power reflection efficiency, in (0, 1]
        double horn_gain_linear = 10.0; // relay horn antenna gain over isotropic
        std::optional<double> af_gain_beta_db; // requested AF gain; absent = full power
    };

    void validate(const RadioConfig &config);

    // Noise power at the relay input (sigma1) and at the receiver (sigma2).
    // Identical under the default model (same bandwidth and noise figure).
    struct NoisePair
    {
        double sigma1_sq_dbm = 0.0;
        double sigma2_sq_dbm = 0.0;
    };

    NoisePair noise_pair(const RadioConfig &config);

} // namespace rirsim

#endif
