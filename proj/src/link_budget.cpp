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

#include "rirsim/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace rirsim
{

    double db_to_linear(double value_db)
    {
        return std::pow(10.0, value_db / 10.0);
    }

    double linear_to_db(double value)
    {
        if (!(value > 0.0))
            throw std::domain_error("linear_to_db: value must be > 0");
        return 10.0 * std::log10(value);
    }

    double dbm_to_mw(double value_dbm)
    {
        return db_to_linear(value_dbm);
    }

    double mw_to_dbm(double value_mw)
    {
        return linear_to_db(value_mw);
    }

    double umi_pathloss_db(double distance_3d_m, double fc_ghz)
    {
        if (!(distance_3d_m > 0.0))
            throw std::domain_error("umi_pathloss_db: distance must be > 0");
        if (!(fc_ghz > 0.0))
            throw std::domain_error("umi_pathloss_db: carrier frequency must be > 0");
        return 32.4 + 21.0 * std::log10(distance_3d_m) + 20.0 * std::log10(fc_ghz);
    }

    double noise_power_dbm(double bandwidth_hz, double noise_figure_db)
    {
        if (!(bandwidth_hz > 0.0))
            throw std::domain_error("noise_power_dbm: bandwidth must be > 0");
        return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
    }

    void validate(const RadioConfig &config)
    {
        if (!(config.fc_ghz > 0.0) || !std::isfinite(config.fc_ghz))
            throw std::invalid_argument("radio: fc_ghz must be finite and > 0");
        if (!(config.bandwidth_hz > 0.0) || !std::isfinite(config.bandwidth_hz))
            throw std::invalid_argument("radio: bandwidth_hz must be finite and > 0");
        if (!std::isfinite(config.noise_figure_db))
            throw std::invalid_argument("radio: noise_figure_db must be finite");
        if (!std::isfinite(config.p_t_dbm) || !std::isfinite(config.p_r_dbm))
            throw std::invalid_argument("radio: powers must be finite");
        if (!(config.kappa > 0.0) || config.kappa > 1.0)
            throw std::invalid_argument("radio: kappa must be in (0, 1]");
        if (!(config.horn_gain_linear >= 1.0) || !std::isfinite(config.horn_gain_linear))
            throw std::invalid_argument("radio: horn_gain_linear must be finite and >= 1");
        if (config.af_gain_beta_db && !std::isfinite(*config.af_gain_beta_db))
            throw std::invalid_argument("radio: af_gain_beta_db must be finite");
    }

    NoisePair noise_pair(const RadioConfig &config)
    {
        validate(config);
        const double noise = noise_power_dbm(config.bandwidth_hz, config.noise_figure_db);
        return {noise, noise};
    }

} // namespace rirsim
