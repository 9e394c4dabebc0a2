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

#include "rirsim/phase_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "rirsim/rng.hpp"

namespace rirsim
{
    namespace
    {
        constexpr double identity_tolerance = 1e-9;   // closed form vs beamformed
        constexpr double optimality_slack = 1e-12;    // fp slack for "never exceeds"
        constexpr int random_configs_per_trial = 100;

        struct TrialResult
        {
            double rel_error = 0.0;
            int violations = 0;
            std::int64_t elements = 0;
            std::int64_t clusters = 0;
        };

        TrialResult run_trial(std::uint64_t trial_seed, int m_max, int l_max)
        {
            SplitMix64 rng(trial_seed);
            TrialResult result;
            result.elements = rng.uniform_int(1, m_max);
            result.clusters = rng.uniform_int(1, l_max);

            const double fc_ghz = rng.uniform(1.0, 100.0);
            const double wavelength = wavelength_m(fc_ghz);
            const SurfaceLayout layout = make_surface_layout(
                result.elements, wavelength, 0.5,
                {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0), rng.uniform(2.0, 50.0)});

            std::vector<PathCluster> clusters(static_cast<std::size_t>(result.clusters));
            const double cluster_scale = 1.0 / std::sqrt(static_cast<double>(result.clusters));
            for (auto &cluster : clusters)
            {
                cluster.alpha = cluster_scale * rng.complex_gaussian();
                cluster.azimuth_rad = rng.uniform(0.0, 2.0 * std::numbers::pi);
                cluster.elevation_rad = rng.uniform(0.0, 2.0 * std::numbers::pi);
            }

            const double rho = rng.log_uniform(-14.0, -2.0);
            const double horn_gain = rng.uniform(1.0, 100.0);
            const FarFieldChannel h = far_field_channel(clusters, rho, layout, wavelength);
            const NearFieldChannel g = near_field_channel(layout, fc_ghz, horn_gain);
            const CompositeChannel h_circ = composite(h, g);

            const double kappa = rng.uniform(0.05, 1.0);
            const double p_mw = rng.log_uniform(0.0, 3.0);
            const double sigma_sq_mw = rng.log_uniform(-9.0, -6.0);

            const double m = static_cast<double>(result.elements);
            const double xi_circ = mean_abs_sq(std::span<const std::complex<double>>(h_circ.entries));
            const double closed_form = p_mw * kappa * m * m * xi_circ / sigma_sq_mw;

            const double beamformed = achieved_snr(h_circ, optimal_phases(h_circ, kappa), p_mw, sigma_sq_mw);
            result.rel_error = std::abs(beamformed - closed_form) / closed_form;
            if (result.rel_error > identity_tolerance)
                ++result.violations;

            PhaseConfig random_config;
            random_config.kappa = kappa;
            random_config.phases_rad.resize(h_circ.entries.size());
            for (int k = 0; k < random_configs_per_trial; ++k)
            {
                for (auto &phase : random_config.phases_rad)
                    phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
                if (achieved_snr(h_circ, random_config, p_mw, sigma_sq_mw) >
                    closed_form * (1.0 + optimality_slack))
                    ++result.violations;
            }
            return result;
        }
    } // namespace

    std::vector<std::complex<double>> psi_vector(const PhaseConfig &config)
    {
        if (!(config.kappa > 0.0) || config.kappa > 1.0)
            throw std::invalid_argument("psi_vector: kappa must be in (0, 1]");
        std::vector<std::complex<double>> psi;
        psi.reserve(config.phases_rad.size());
        const double amplitude = std::sqrt(config.kappa);
        for (double phase : config.phases_rad)
            psi.push_back(std::polar(amplitude, phase));
        return psi;
    }

    PhaseConfig optimal_phases(const CompositeChannel &channel, double kappa)
    {
        if (channel.entries.empty())
            throw std::invalid_argument("optimal_phases: empty channel");
        PhaseConfig config;
        config.kappa = kappa;
        config.phases_rad.reserve(channel.entries.size());
        for (const auto &entry : channel.entries)
            config.phases_rad.push_back(-std::arg(entry));
        return config;
    }

    double achieved_snr(const CompositeChannel &channel, const PhaseConfig &config, double p_mw,
                        double sigma_sq_mw)
    {
        if (channel.entries.size() != config.phases_rad.size())
            throw std::invalid_argument("achieved_snr: channel/phase length mismatch");
        if (!(p_mw > 0.0) || !(sigma_sq_mw > 0.0))
            throw std::invalid_argument("achieved_snr: power and noise must be > 0");
        const auto psi = psi_vector(config);
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t m = 0; m < psi.size(); ++m)
            sum += channel.entries[m] * psi[m];
        return p_mw * std::norm(sum) / sigma_sq_mw;
    }

    OracleRun monte_carlo_verify(std::uint64_t seed, int trials, int m_max, int l_max,
                                 std::ostream *per_trial_csv)
    {
        if (trials < 1)
            throw std::invalid_argument("monte_carlo_verify: trials must be >= 1");
        if (m_max < 1 || l_max < 1)
            throw std::invalid_argument("monte_carlo_verify: m_max and l_max must be >= 1");

        OracleRun run;
        run.seed = seed;
        run.trials = trials;
        if (per_trial_csv)
            *per_trial_csv << "trial,elements,clusters,rel_error,violations\n";
        for (int trial = 0; trial < trials; ++trial)
        {
            const TrialResult result = run_trial(derive_stream(seed, static_cast<std::uint64_t>(trial)),
                                                 m_max, l_max);
            run.max_rel_error = std::max(run.max_rel_error, result.rel_error);
            run.violations += result.violations;
            if (per_trial_csv)
                *per_trial_csv << trial << ',' << result.elements << ',' << result.clusters << ','
                               << result.rel_error << ',' << result.violations << '\n';
        }
        return run;
    }

} // namespace rirsim
