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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rirsim/phase_oracle.hpp"
#include "rirsim/sweep.hpp"

namespace
{
    // --out flag wins, then the config's output_path, then RIRSIM_OUT_DIR (or
    // the current directory) with a per-command default name.
    std::string resolve_output(const std::string &flag, const std::string &config_path,
                               const std::string &default_name)
    {
        if (!flag.empty())
            return flag;
        if (!config_path.empty())
            return config_path;
        return rirsim::default_output_dir() + "/" + default_name;
    }

    int write_rows(const std::vector<rirsim::SweepRow> &rows, const std::string &path)
    {
        rirsim::emit_csv(rows, path);
        std::cout << "wrote " << rows.size() << " rows to " << path << "\n";
        return 0;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"rate and element-count simulator for IRS and relay-aided IRS links"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int workers = 1;

    auto *rates = app.add_subcommand("rates", "run a rate sweep from a JSON config");
    rates->add_option("--config", config_path, "sweep config (JSON)")->required();
    rates->add_option("--out", out_path, "output CSV path");
    rates->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    auto *sizing = app.add_subcommand("sizing", "run an element-count sweep from a JSON config");
    double target_rate = 0.0;
    sizing->add_option("--config", config_path, "sweep config (JSON)")->required();
    auto *target_opt = sizing->add_option("--target", target_rate, "target spectral efficiency (bps/Hz)");
    sizing->add_option("--out", out_path, "output CSV path");
    sizing->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    auto *verify = app.add_subcommand("verify", "brute-force check of the phase-optimization algebra");
    std::uint64_t seed = 1;
    int trials = 1000;
    int m_max = 64;
    int l_max = 4;
    std::string trial_csv;
    verify->add_option("--seed", seed, "run seed");
    verify->add_option("--trials", trials, "number of random channels")->check(CLI::PositiveNumber);
    verify->add_option("--m-max", m_max, "largest element count")->check(CLI::PositiveNumber);
    verify->add_option("--l-max", l_max, "largest cluster count")->check(CLI::PositiveNumber);
    verify->add_option("--csv", trial_csv, "optional per-trial CSV path");

    auto *figure = app.add_subcommand("figure", "run a bundled sweep preset");
    int figure_id = 0;
    figure->add_option("--id", figure_id, "preset id (4, 5 or 6)")->required();
    figure->add_option("--out", out_path, "output CSV path");
    figure->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (rates->parsed())
        {
            const rirsim::SweepConfig cfg = rirsim::load_config_file(config_path);
            return write_rows(rirsim::run_rate_sweep(cfg, workers),
                              resolve_output(out_path, cfg.output_path, "rates.csv"));
        }
        if (sizing->parsed())
        {
            rirsim::SweepConfig cfg = rirsim::load_config_file(config_path);
            if (target_opt->count() > 0)
                cfg.target_rate_bps_hz = target_rate;
            return write_rows(rirsim::run_sizing_sweep(cfg, workers),
                              resolve_output(out_path, cfg.output_path, "sizing.csv"));
        }
        if (verify->parsed())
        {
            std::ofstream csv_stream;
            if (!trial_csv.empty())
            {
                csv_stream.open(trial_csv, std::ios::binary);
                if (!csv_stream)
                    throw std::runtime_error("verify: cannot open \"" + trial_csv + "\" for writing");
            }
            const rirsim::OracleRun run = rirsim::monte_carlo_verify(
                seed, trials, m_max, l_max, trial_csv.empty() ? nullptr : &csv_stream);
            std::cout << "oracle seed=" << run.seed << " trials=" << run.trials
                      << " violations=" << run.violations << " max_rel_error=" << run.max_rel_error
                      << (run.violations == 0 ? " [PASS]" : " [FAIL]") << "\n";
            return run.violations == 0 ? 0 : 1;
        }
        // figure
        const rirsim::SweepConfig cfg = rirsim::figure_preset(figure_id);
        const std::string default_name = "figure" + std::to_string(figure_id) + ".csv";
        const auto rows = rirsim::is_sizing_config(cfg) ? rirsim::run_sizing_sweep(cfg, workers)
                                                        : rirsim::run_rate_sweep(cfg, workers);
        return write_rows(rows, resolve_output(out_path, cfg.output_path, default_name));
    }
    catch (const std::exception &err)
    {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
