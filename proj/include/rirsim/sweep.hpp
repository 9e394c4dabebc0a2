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

#ifndef RIRSIM_SWEEP_HPP
#define RIRSIM_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rirsim/link_budget.hpp"
#include "rirsim/sizing.hpp"

namespace rirsim
{
    enum class Architecture
    {
        irs,
        df_relay,
        af_relay,
        rir_df,
        rir_af
    };

    enum class SweepAxis
    {
        elements,
        distance
    };

    const char *to_string(Architecture architecture);
    const char *to_string(SweepAxis axis);

    // Configuration / input validation failure; the message names the
    // offending field.
    class config_error : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct SweepConfig
    {
        ScenarioGeometry geometry;
        RadioConfig radio;
        double element_pitch_wavelengths = 0.5;
        Point3 relay_offset_wavelengths{0.0, 0.0, 10.0};
        SweepAxis sweep_axis = SweepAxis::elements;
        std::vector<double> axis_values;
        std::vector<Architecture> architectures;
        std::vector<double> beta_values_db; // finite AF gains to sweep
        bool include_max_beta = true;       // add a full-power AF curve
        RateMode mode = RateMode::upper_bound;
        std::optional<double> target_rate_bps_hz; // sizing sweeps
        IrsConvention irs_convention = IrsConvention::two_m;
        std::int64_t elements = 0;                  // fixed M for distance rate sweeps
        std::int64_t stats_reference_elements = 1024; // layout size for exact/los sizing stats
        std::string output_path;                    // optional default output file
    };

    // Strict parse: unknown keys are rejected, errors carry field paths.
    SweepConfig load_config(const nlohmann::json &document);
    SweepConfig load_config_file(const std::string &path);

    // Bundled sweep presets:
    //   4 - rates vs element count, 3.5 GHz / 100 MHz, 400 m link
    //   5 - rates vs distance, 60 GHz / 1 GHz, 50k elements per surface
    //   6 - element count vs distance for a 2 bps/Hz target, 60 GHz / 1 GHz
    SweepConfig figure_preset(int id);

    // True when the preset (or config) is a sizing run.
    bool is_sizing_config(const SweepConfig &config);

    struct SweepRow
    {
        double axis_value = 0.0;
        Architecture architecture = Architecture::irs;
        std::optional<double> beta_db;        // blank = full power / not applicable
        std::optional<double> rate_bps_hz;    // rate sweeps
        std::optional<std::int64_t> m_required; // sizing sweeps
        std::optional<double> m_real;
        std::string branch;
    };

    // One row per (axis value x architecture x beta variant), ordered by axis
    // value, then architecture, then finite betas ascending with the
    // full-power variant last. Deterministic for any worker count.
    std::vector<SweepRow> run_rate_sweep(const SweepConfig &config, int workers = 1);
    std::vector<SweepRow> run_sizing_sweep(const SweepConfig &config, int workers = 1);

    // CSV contract: UTF-8, LF line endings, header
    //   axis,architecture,beta_db,rate_bps_hz,m_required,m_real,branch
    // and numbers printed with 10 significant digits.
    std::string csv_string(const std::vector<SweepRow> &rows);
    void emit_csv(const std::vector<SweepRow> &rows, const std::string &path);
    std::vector<SweepRow> parse_csv(std::istream &input);

    // $RIRSIM_OUT_DIR when set, otherwise the current directory.
    std::string default_output_dir();

} // namespace rirsim

#endif
