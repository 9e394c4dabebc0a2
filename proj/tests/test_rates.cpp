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

#include <array>
#include <cmath>

#include "rirsim/link_budget.hpp"
#include "rirsim/phase_oracle.hpp"
#include "rirsim/rates.hpp"
#include "rirsim/rng.hpp"

using namespace rirsim;

namespace
{
    // Inputs normalized so that SNR terms can be dialed in directly.
    RateInputs unit_inputs()
    {
        RateInputs in;
        in.elements = 1;
        in.kappa = 1.0;
        in.p_t_mw = 1.0;
        in.p_r_mw = 1.0;
        in.sigma1_sq_mw = 1.0;
        in.sigma2_sq_mw = 1.0;
        return in;
    }

    LosGains los(double rho_t, double rho_r, double eta_t = 0.0, double eta_r = 0.0)
    {
        return {rho_t, rho_r, eta_t, eta_r};
    }

    ChannelStats random_stats(SplitMix64 &rng)
    {
        ChannelStats stats;
        stats.zeta_t = rng.log_uniform(-8, 0);
        stats.zeta_r = rng.log_uniform(-8, 0);
        stats.xi_tr = stats.zeta_t * stats.zeta_r * rng.uniform(0.05, 1.0); // Cauchy-Schwarz
        stats.xi_circ_t = rng.log_uniform(-8, 0);
        stats.xi_circ_r = rng.log_uniform(-8, 0);
        stats.eta_t = rng.uniform(0.1, 1.0);
        stats.eta_r = rng.uniform(0.1, 1.0);
        return stats;
    }
} // namespace

TEST_CASE("rate_from_snr is the binary log of 1 + snr")
{
    CHECK(rate_from_snr(1.0) == doctest::Approx(1.0));
    CHECK(rate_from_snr(3.0) == doctest::Approx(2.0));
    CHECK(rate_from_snr(0.0) == 0.0);
    // log1p keeps precision at tiny SNR where log2(1 + x) would round
    CHECK(rate_from_snr(1e-14) == doctest::Approx(1e-14 / std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("rate_irs")
{
    SUBCASE("unit-normalized SNR of one gives 1 bps/Hz")
    {
        RateInputs in = unit_inputs();
        in.los = los(1.0, 1.0);
        const RateReport report = rate_irs(in, RateMode::los);
        CHECK(report.snr == doctest::Approx(1.0));
        CHECK(report.rate_bps_hz == doctest::Approx(1.0));
        CHECK(report.branch == RateBranch::los);
    }

    SUBCASE("doubling the element count quadruples the SNR")
    {
        RateInputs in = unit_inputs();
        in.elements = 2;
        in.los = los(1.0, 1.0);
        const RateReport report = rate_irs(in, RateMode::los);
        CHECK(report.snr == doctest::Approx(4.0));
        CHECK(report.rate_bps_hz == doctest::Approx(std::log2(5.0)).epsilon(1e-12));
    }

    SUBCASE("exact mode consumes xi_tr, upper bound the zeta product")
    {
        RateInputs in = unit_inputs();
        ChannelStats stats;
        stats.zeta_t = 0.5;
        stats.zeta_r = 0.5;
        stats.xi_tr = 0.2;
        in.stats = stats;
        CHECK(rate_irs(in, RateMode::exact).snr == doctest::Approx(0.2));
        CHECK(rate_irs(in, RateMode::upper_bound).snr == doctest::Approx(0.25));
        CHECK(rate_irs(in, RateMode::upper_bound).snr >= rate_irs(in, RateMode::exact).snr);
    }

    SUBCASE("missing channel description is rejected")
    {
        CHECK_THROWS_AS(rate_irs(unit_inputs(), RateMode::exact), std::invalid_argument);
        CHECK_THROWS_AS(rate_irs(unit_inputs(), RateMode::los), std::invalid_argument);
    }
}

TEST_CASE("rate_df_relay selects the weaker hop")
{
    RateInputs in = unit_inputs();
    in.p_t_mw = 3.0;
    in.p_r_mw = 8.0;
    in.los = los(1.0, 1.0);
    const RateReport report = rate_df_relay(in, RateMode::los);
    CHECK(report.snr == doctest::Approx(3.0));
    CHECK(report.rate_bps_hz == doctest::Approx(2.0));

    SUBCASE("symmetric hops")
    {
        RateInputs sym = unit_inputs();
        sym.los = los(0.7, 0.7);
        CHECK(rate_df_relay(sym, RateMode::los).snr == doctest::Approx(0.7));
    }

    SUBCASE("a dead hop kills the link")
    {
        RateInputs dead = unit_inputs();
        dead.los = los(0.0, 5.0);
        CHECK(rate_df_relay(dead, RateMode::los).rate_bps_hz == 0.0);
    }
}

TEST_CASE("rate_af_relay")
{
    SUBCASE("full power with symmetric hop SNR 3 gives log2(16/7)")
    {
        // gamma1 = gamma2 = 3, so gamma1 gamma2 / (gamma1 + gamma2 + 1) = 9/7.
        RateInputs in = unit_inputs();
        in.p_t_mw = 3.0;
        in.p_r_mw = 3.0;
        in.los = los(1.0, 1.0);
        const RateReport report = rate_af_relay(in, RateMode::los);
        CHECK(report.branch == RateBranch::power_limited);
        CHECK(report.snr == doctest::Approx(9.0 / 7.0).epsilon(1e-12));
        CHECK(report.rate_bps_hz == doctest::Approx(std::log2(16.0 / 7.0)).epsilon(1e-12));
    }

    SUBCASE("zero gain means zero rate")
    {
        RateInputs in = unit_inputs();
        in.los = los(0.0, 0.0);
        CHECK(rate_af_relay(in, RateMode::los).rate_bps_hz == 0.0);
    }

    SUBCASE("requested beta below the cap is applied as-is")
    {
        RateInputs in = unit_inputs();
        in.los = los(1.0, 1.0);
        in.beta = 0.1;
        const RateReport report = rate_af_relay(in, RateMode::los);
        CHECK(report.branch == RateBranch::gain_limited);
        CHECK(report.snr == doctest::Approx(0.1 / (0.1 + 1.0)).epsilon(1e-12));
    }

    SUBCASE("full-power AF never beats DF")
    {
        SplitMix64 rng(5);
        for (int i = 0; i < 1000; ++i)
        {
            RateInputs in = unit_inputs();
            in.p_t_mw = rng.log_uniform(-2, 4);
            in.p_r_mw = rng.log_uniform(-2, 4);
            in.sigma1_sq_mw = rng.log_uniform(-3, 1);
            in.sigma2_sq_mw = rng.log_uniform(-3, 1);
            in.los = los(rng.log_uniform(-6, 0), rng.log_uniform(-6, 0));
            CHECK(rate_af_relay(in, RateMode::los).rate_bps_hz <=
                  rate_df_relay(in, RateMode::los).rate_bps_hz);
        }
    }
}

TEST_CASE("rate_rir_direction")
{
    SUBCASE("single element, unit everything")
    {
        RateInputs in = unit_inputs();
        ChannelStats stats;
        stats.xi_circ_t = 1.0;
        stats.xi_circ_r = 1.0;
        in.stats = stats;
        CHECK(rate_rir_direction(in, Direction::tx_side, RateMode::exact).rate_bps_hz ==
              doctest::Approx(1.0));
    }

    SUBCASE("all-ones composite with M = 10 and p/sigma^2 = 0.01")
    {
        RateInputs in = unit_inputs();
        in.elements = 10;
        in.p_t_mw = 0.01;
        ChannelStats stats;
        stats.xi_circ_t = 1.0;
        stats.xi_circ_r = 1.0;
        in.stats = stats;
        const RateReport report = rate_rir_direction(in, Direction::tx_side, RateMode::exact);
        CHECK(report.snr == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.rate_bps_hz == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("rx side uses the relay power and receiver noise")
    {
        RateInputs in = unit_inputs();
        in.p_t_mw = 2.0;
        in.p_r_mw = 8.0;
        in.sigma2_sq_mw = 2.0;
        ChannelStats stats;
        stats.xi_circ_t = 1.0;
        stats.xi_circ_r = 1.0;
        in.stats = stats;
        CHECK(rate_rir_direction(in, Direction::rx_side, RateMode::exact).snr == doctest::Approx(4.0));
    }
}

TEST_CASE("rate_rir_df")
{
    SUBCASE("kappa M^2 times the weaker per-element hop SNR")
    {
        RateInputs in = unit_inputs();
        in.elements = 10;
        ChannelStats stats;
        stats.xi_circ_t = 0.03;
        stats.xi_circ_r = 0.05;
        in.stats = stats;
        const RateReport report = rate_rir_df(in, RateMode::exact);
        CHECK(report.snr == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(report.rate_bps_hz == doctest::Approx(2.0).epsilon(1e-12));
    }

    SUBCASE("upper bound mode is linear in M")
    {
        RateInputs in = unit_inputs();
        in.elements = 50;
        in.los = los(0.02, 0.5);
        const RateReport report = rate_rir_df(in, RateMode::upper_bound);
        CHECK(report.snr == doctest::Approx(1.0).epsilon(1e-12)); // kappa M min(rho p / sigma) = 50 * 0.02
        CHECK(report.rate_bps_hz == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.branch == RateBranch::upper_bound);
    }

    SUBCASE("bound dominates the LOS form whenever M eta <= 1")
    {
        SplitMix64 rng(17);
        for (int i = 0; i < 500; ++i)
        {
            RateInputs in = unit_inputs();
            in.elements = rng.uniform_int(1, 1000);
            in.kappa = rng.uniform(0.1, 1.0);
            in.p_t_mw = rng.log_uniform(-1, 3);
            in.p_r_mw = rng.log_uniform(-1, 3);
            in.sigma1_sq_mw = rng.log_uniform(-8, -4);
            in.sigma2_sq_mw = rng.log_uniform(-8, -4);
            // energy conservation: the aperture statistic cannot exceed 1/M
            const double eta_cap = 1.0 / static_cast<double>(in.elements);
            in.los = los(rng.log_uniform(-10, -4), rng.log_uniform(-10, -4),
                         eta_cap * rng.uniform(0.01, 1.0), eta_cap * rng.uniform(0.01, 1.0));
            CHECK(rate_rir_df(in, RateMode::los).rate_bps_hz <=
                  rate_rir_df(in, RateMode::upper_bound).rate_bps_hz * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("rate_rir_af")
{
    SUBCASE("full power with symmetric per-hop SNR 3 gives log2(16/7)")
    {
        // kappa M^2 p xi / sigma^2 = 3 on both hops, so the power-capped
        // combination is 9/7, the same algebra as the standalone AF relay.
        RateInputs in = unit_inputs();
        in.elements = 2;
        ChannelStats stats;
        stats.xi_circ_t = 0.75;
        stats.xi_circ_r = 0.75;
        in.stats = stats;
        const RateReport report = rate_rir_af(in, RateMode::exact);
        CHECK(report.branch == RateBranch::power_limited);
        CHECK(report.snr == doctest::Approx(9.0 / 7.0).epsilon(1e-12));
        CHECK(report.rate_bps_hz == doctest::Approx(std::log2(16.0 / 7.0)).epsilon(1e-12));
    }

    SUBCASE("huge requested beta clamps to the cap and equals the full-power form")
    {
        RateInputs in = unit_inputs();
        in.elements = 4;
        in.los = los(0.1, 0.2, 0.2, 0.1);
        RateInputs unconstrained = in;
        in.beta = 1e12;
        const RateReport clamped = rate_rir_af(in, RateMode::los);
        const RateReport full = rate_rir_af(unconstrained, RateMode::los);
        CHECK(clamped.branch == RateBranch::power_limited);
        CHECK(clamped.snr == doctest::Approx(full.snr).epsilon(1e-15));
    }

    SUBCASE("zero beta gives zero rate")
    {
        RateInputs in = unit_inputs();
        in.elements = 4;
        in.beta = 0.0;
        in.los = los(0.1, 0.2, 0.2, 0.1);
        const RateReport report = rate_rir_af(in, RateMode::los);
        CHECK(report.rate_bps_hz == 0.0);
        CHECK(report.branch == RateBranch::gain_limited);
    }

    SUBCASE("gain constraint ties stay gain-limited")
    {
        RateInputs in = unit_inputs();
        in.elements = 4;
        in.los = los(0.1, 0.2, 0.2, 0.1);
        in.beta = rir_af_gain_cap(in, RateMode::los);
        CHECK(rate_rir_af(in, RateMode::los).branch == RateBranch::gain_limited);
    }
}

TEST_CASE("full-power RIR-AF never beats RIR-DF")
{
    SplitMix64 rng(23);
    for (int i = 0; i < 1000; ++i)
    {
        RateInputs in = unit_inputs();
        in.elements = rng.uniform_int(1, 4096);
        in.kappa = rng.uniform(0.05, 1.0);
        in.p_t_mw = rng.log_uniform(-2, 4);
        in.p_r_mw = rng.log_uniform(-2, 4);
        in.sigma1_sq_mw = rng.log_uniform(-9, -3);
        in.sigma2_sq_mw = rng.log_uniform(-9, -3);
        in.stats = random_stats(rng);
        CHECK(rate_rir_af(in, RateMode::exact).rate_bps_hz <=
              rate_rir_df(in, RateMode::exact).rate_bps_hz);
    }
}

TEST_CASE("rates are monotone in the physical knobs")
{
    SplitMix64 rng(29);
    for (int i = 0; i < 300; ++i)
    {
        RateInputs in = unit_inputs();
        in.elements = rng.uniform_int(1, 2000);
        in.kappa = rng.uniform(0.05, 0.5);
        in.p_t_mw = rng.log_uniform(-1, 3);
        in.p_r_mw = rng.log_uniform(-1, 3);
        in.sigma1_sq_mw = rng.log_uniform(-8, -3);
        in.sigma2_sq_mw = rng.log_uniform(-8, -3);
        in.stats = random_stats(rng);
        in.los = los(rng.log_uniform(-10, -4), rng.log_uniform(-10, -4), 0.5, 0.5);
        if (rng.uniform() < 0.5)
            in.beta = rng.log_uniform(0, 3);

        const auto rates_of = [](const RateInputs &inputs) {
            return std::array<double, 6>{
                rate_irs(inputs, RateMode::exact).rate_bps_hz,
                rate_df_relay(inputs, RateMode::exact).rate_bps_hz,
                rate_af_relay(inputs, RateMode::exact).rate_bps_hz,
                rate_rir_df(inputs, RateMode::exact).rate_bps_hz,
                rate_rir_af(inputs, RateMode::exact).rate_bps_hz,
                rate_rir_df(inputs, RateMode::upper_bound).rate_bps_hz,
            };
        };
        const auto base = rates_of(in);

        RateInputs more = in;
        more.elements = in.elements * 2;
        auto bumped = rates_of(more);
        for (std::size_t k = 0; k < base.size(); ++k)
            CHECK(bumped[k] >= base[k] * (1.0 - 1e-12));

        more = in;
        more.p_t_mw *= 2.0;
        bumped = rates_of(more);
        for (std::size_t k = 0; k < base.size(); ++k)
            CHECK(bumped[k] >= base[k] * (1.0 - 1e-12));

        more = in;
        more.p_r_mw *= 2.0;
        bumped = rates_of(more);
        for (std::size_t k = 0; k < base.size(); ++k)
            CHECK(bumped[k] >= base[k] * (1.0 - 1e-12));

        more = in;
        more.kappa = std::min(1.0, in.kappa * 2.0);
        bumped = rates_of(more);
        for (std::size_t k = 0; k < base.size(); ++k)
            CHECK(bumped[k] >= base[k] * (1.0 - 1e-12));

        more = in;
        more.sigma1_sq_mw *= 2.0;
        more.sigma2_sq_mw *= 2.0;
        bumped = rates_of(more);
        for (std::size_t k = 0; k < base.size(); ++k)
            CHECK(bumped[k] <= base[k] * (1.0 + 1e-12));
    }
}

TEST_CASE("reported rate is exactly the log of the reported SNR")
{
    SplitMix64 rng(41);
    for (int i = 0; i < 200; ++i)
    {
        RateInputs in = unit_inputs();
        in.elements = rng.uniform_int(1, 100);
        in.stats = random_stats(rng);
        in.los = los(rng.log_uniform(-8, 0), rng.log_uniform(-8, 0), 0.3, 0.3);
        for (const RateReport &report :
             {rate_irs(in, RateMode::exact), rate_df_relay(in, RateMode::los),
              rate_af_relay(in, RateMode::los), rate_rir_df(in, RateMode::exact),
              rate_rir_af(in, RateMode::exact),
              rate_rir_direction(in, Direction::tx_side, RateMode::exact)})
            CHECK(report.rate_bps_hz == rate_from_snr(report.snr));
    }
}

TEST_CASE("full-pipeline IRS rate matches explicit phase-conjugate beamforming")
{
    // 3.5 GHz, 400 m scenario: stats computed from built channel vectors must
    // reproduce the SNR of an explicitly beamformed product channel.
    const double fc_ghz = 3.5;
    const double wavelength = wavelength_m(fc_ghz);
    const NodePositions pos = place_nodes({400.0, 10.0, 10.0, 1.0, 10.0});
    const double rho_t = db_to_linear(-umi_pathloss_db(link_distance(pos.tx, pos.node), fc_ghz));
    const double rho_r = db_to_linear(-umi_pathloss_db(link_distance(pos.node, pos.rx), fc_ghz));
    const double sigma_mw = dbm_to_mw(noise_power_dbm(100e6, 8.0));

    SplitMix64 rng(4242);
    for (std::int64_t m : {std::int64_t{4}, std::int64_t{64}, std::int64_t{289}})
    {
        const SurfaceLayout layout = make_surface_layout(m, wavelength);
        // one LOS cluster plus up to three scattered ones
        std::vector<PathCluster> clusters{{std::complex<double>{1.0, 0.0}, 0.4, 0.1}};
        const auto extra = rng.uniform_int(0, 3);
        for (std::int64_t l = 0; l < extra; ++l)
            clusters.push_back({0.3 * rng.complex_gaussian(), rng.uniform(0.0, 6.28), rng.uniform(0.0, 6.28)});
        const FarFieldChannel h_t = far_field_channel(clusters, rho_t, layout, wavelength);
        clusters.resize(1);
        const FarFieldChannel h_r = far_field_channel(clusters, rho_r, layout, wavelength);

        RateInputs in = unit_inputs();
        in.elements = m;
        in.p_t_mw = dbm_to_mw(20.0);
        in.p_r_mw = dbm_to_mw(20.0);
        in.sigma1_sq_mw = in.sigma2_sq_mw = sigma_mw;
        in.stats = pair_stats(h_t, h_r);
        const RateReport closed = rate_irs(in, RateMode::exact);

        // the single surface applies the conjugate of the elementwise product
        CompositeChannel product;
        for (std::size_t i = 0; i < h_t.entries.size(); ++i)
            product.entries.push_back(h_t.entries[i] * h_r.entries[i]);
        const double beamformed =
            achieved_snr(product, optimal_phases(product, in.kappa), in.p_t_mw, sigma_mw);
        CHECK(closed.snr == doctest::Approx(beamformed).epsilon(1e-9));
    }
}

TEST_CASE("input validation")
{
    RateInputs in = unit_inputs();
    in.los = los(1.0, 1.0);
    in.kappa = 1.5;
    CHECK_THROWS_AS(rate_irs(in, RateMode::los), std::invalid_argument);
    in = unit_inputs();
    in.los = los(1.0, 1.0);
    in.p_t_mw = 0.0;
    CHECK_THROWS_AS(rate_irs(in, RateMode::los), std::invalid_argument);
    in = unit_inputs();
    in.los = los(1.0, 1.0);
    in.elements = -1;
    CHECK_THROWS_AS(rate_irs(in, RateMode::los), std::invalid_argument);
    in = unit_inputs();
    in.los = los(1.0, 1.0); // eta missing
    CHECK_THROWS_AS(rate_rir_df(in, RateMode::los), std::invalid_argument);
}
