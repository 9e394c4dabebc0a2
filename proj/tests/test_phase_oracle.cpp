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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rirsim/phase_oracle.hpp"
#include "rirsim/rng.hpp"

using namespace rirsim;
using cplx = std::complex<double>;

namespace
{
    constexpr double pi = std::numbers::pi;

    CompositeChannel random_composite(SplitMix64 &rng, int m)
    {
        CompositeChannel channel;
        for (int i = 0; i < m; ++i)
            channel.entries.push_back(rng.log_uniform(-3, 0) * std::polar(1.0, rng.uniform(0.0, 2.0 * pi)));
        return channel;
    }

    double sum_magnitudes(const CompositeChannel &channel)
    {
        double sum = 0.0;
        for (const cplx &entry : channel.entries)
            sum += std::abs(entry);
        return sum;
    }
} // namespace

TEST_CASE("optimal_phases conjugates the channel phase")
{
    SUBCASE("real positive channel needs no phase shift")
    {
        const CompositeChannel channel{{{1.0, 0.0}, {0.5, 0.0}, {2.0, 0.0}}};
        for (double phase : optimal_phases(channel).phases_rad)
            CHECK(phase == 0.0);
    }

    SUBCASE("(1, -1) flips the second element by pi")
    {
        const CompositeChannel channel{{{1.0, 0.0}, {-1.0, 0.0}}};
        const PhaseConfig config = optimal_phases(channel);
        CHECK(config.phases_rad[0] == 0.0);
        CHECK(std::abs(std::abs(config.phases_rad[1]) - pi) < 1e-15);
        const auto psi = psi_vector(config);
        cplx sum{0.0, 0.0};
        for (std::size_t m = 0; m < psi.size(); ++m)
            sum += channel.entries[m] * psi[m];
        CHECK(std::abs(sum) == doctest::Approx(2.0).epsilon(1e-15));
    }

    SUBCASE("random channel: coherent sum of magnitudes")
    {
        SplitMix64 rng(9);
        const CompositeChannel channel = random_composite(rng, 16);
        const double kappa = 0.8;
        const auto psi = psi_vector(optimal_phases(channel, kappa));
        cplx sum{0.0, 0.0};
        for (std::size_t m = 0; m < psi.size(); ++m)
            sum += channel.entries[m] * psi[m];
        const double target = kappa * sum_magnitudes(channel) * sum_magnitudes(channel);
        CHECK(std::norm(sum) == doctest::Approx(target).epsilon(1e-12));
    }

    SUBCASE("empty channel is rejected")
    {
        CHECK_THROWS_AS(optimal_phases(CompositeChannel{}), std::invalid_argument);
    }
}

TEST_CASE("achieved_snr")
{
    SplitMix64 rng(13);
    const CompositeChannel channel = random_composite(rng, 24);
    const double kappa = 0.6;
    const double p = 2.5;
    const double sigma_sq = 0.3;
    const PhaseConfig best = optimal_phases(channel, kappa);

    SUBCASE("optimal phases reproduce the closed form")
    {
        const double m = static_cast<double>(channel.entries.size());
        const double xi_circ = mean_abs_sq(std::span<const cplx>(channel.entries));
        const double closed = p * kappa * m * m * xi_circ / sigma_sq;
        CHECK(achieved_snr(channel, best, p, sigma_sq) == doctest::Approx(closed).epsilon(1e-9));
    }

    SUBCASE("flipping the largest element by pi strictly hurts")
    {
        PhaseConfig flipped = best;
        const auto largest = std::max_element(
            channel.entries.begin(), channel.entries.end(),
            [](const cplx &a, const cplx &b) { return std::abs(a) < std::abs(b); });
        flipped.phases_rad[static_cast<std::size_t>(largest - channel.entries.begin())] += pi;
        CHECK(achieved_snr(channel, flipped, p, sigma_sq) < achieved_snr(channel, best, p, sigma_sq));
    }

    SUBCASE("halving kappa halves the SNR")
    {
        PhaseConfig half = best;
        half.kappa = kappa / 2.0;
        CHECK(achieved_snr(channel, half, p, sigma_sq) ==
              doctest::Approx(0.5 * achieved_snr(channel, best, p, sigma_sq)).epsilon(1e-15));
    }

    SUBCASE("scaling the channel scales the SNR quadratically")
    {
        CompositeChannel scaled = channel;
        const cplx factor{-1.7, 2.2};
        for (cplx &entry : scaled.entries)
            entry *= factor;
        // optimal phases change with the common rotation, but the optimal SNR
        // scales by |factor|^2 and the phase differences stay put
        const PhaseConfig scaled_best = optimal_phases(scaled, kappa);
        CHECK(achieved_snr(scaled, scaled_best, p, sigma_sq) ==
              doctest::Approx(std::norm(factor) * achieved_snr(channel, best, p, sigma_sq))
                  .epsilon(1e-12));
        for (std::size_t m = 1; m < best.phases_rad.size(); ++m)
        {
            const double diff_orig = best.phases_rad[m] - best.phases_rad[0];
            const double diff_scaled = scaled_best.phases_rad[m] - scaled_best.phases_rad[0];
            CHECK(std::abs(std::remainder(diff_orig - diff_scaled, 2.0 * pi)) < 1e-12);
        }
    }

    SUBCASE("length mismatch is rejected")
    {
        PhaseConfig bad = best;
        bad.phases_rad.pop_back();
        CHECK_THROWS_AS(achieved_snr(channel, bad, p, sigma_sq), std::invalid_argument);
    }
}

TEST_CASE("monte_carlo_verify")
{
    SUBCASE("seeded run passes with zero violations")
    {
        const OracleRun run = monte_carlo_verify(1, 200, 32, 4);
        CHECK(run.violations == 0);
        CHECK(run.max_rel_error <= 1e-9);
        CHECK(run.trials == 200);
    }

    SUBCASE("identical seeds give identical reports")
    {
        const OracleRun a = monte_carlo_verify(42, 100, 16, 3);
        const OracleRun b = monte_carlo_verify(42, 100, 16, 3);
        CHECK(a.max_rel_error == b.max_rel_error);
        CHECK(a.violations == b.violations);
    }

    SUBCASE("different seeds explore different channels")
    {
        const OracleRun a = monte_carlo_verify(1, 50, 16, 3);
        const OracleRun b = monte_carlo_verify(2, 50, 16, 3);
        CHECK(a.max_rel_error != b.max_rel_error);
    }

    SUBCASE("invalid arguments are rejected")
    {
        CHECK_THROWS_AS(monte_carlo_verify(1, 0, 16, 3), std::invalid_argument);
        CHECK_THROWS_AS(monte_carlo_verify(1, 10, 0, 3), std::invalid_argument);
    }

    SUBCASE("per-trial CSV has one line per trial plus a header")
    {
        std::ostringstream csv;
        monte_carlo_verify(7, 25, 8, 2, &csv);
        const std::string text = csv.str();
        CHECK(text.rfind("trial,elements,clusters,rel_error,violations\n", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 26);
    }
}
