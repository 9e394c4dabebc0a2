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

#include "rirsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace rirsim
{
    namespace
    {
        using nlohmann::json;

        // ---------------------------------------------------------------- //
        // Config parsing

        void reject_unknown_keys(const json &j, const std::string &ctx,
                                 std::initializer_list<std::string_view> allowed)
        {
            for (auto it = j.begin(); it != j.end(); ++it)
            {
                if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
                    throw config_error("config: unknown key \"" +
                                       (ctx.empty() ? it.key() : ctx + "." + it.key()) + "\"");
            }
        }

        double number_field(const std::string &path, const json &value)
        {
            if (!value.is_number())
                throw config_error("config: " + path + " must be a number");
            return value.get<double>();
        }

        double number_or(const json &j, const std::string &ctx, const char *key, double fallback)
        {
            if (!j.contains(key))
                return fallback;
            return number_field(ctx.empty() ? key : ctx + "." + key, j.at(key));
        }

        Architecture architecture_from_string(const std::string &name)
        {
            if (name == "irs")
                return Architecture::irs;
            if (name == "df_relay")
                return Architecture::df_relay;
            if (name == "af_relay")
                return Architecture::af_relay;
            if (name == "rir_df")
                return Architecture::rir_df;
            if (name == "rir_af")
                return Architecture::rir_af;
            throw config_error("config: unknown architecture \"" + name + "\"");
        }

        RateMode mode_from_string(const std::string &name)
        {
            if (name == "exact")
                return RateMode::exact;
            if (name == "los")
                return RateMode::los;
            if (name == "upper_bound")
                return RateMode::upper_bound;
            throw config_error("config: mode must be \"exact\", \"los\" or \"upper_bound\"");
        }

        ScenarioGeometry parse_geometry(const json &j)
        {
            reject_unknown_keys(j, "geometry", {"d_x_m", "d_y_m", "h_tx_m", "h_rx_m", "h_node_m"});
            ScenarioGeometry geom;
            geom.d_x_m = number_or(j, "geometry", "d_x_m", geom.d_x_m);
            geom.d_y_m = number_or(j, "geometry", "d_y_m", geom.d_y_m);
            geom.h_tx_m = number_or(j, "geometry", "h_tx_m", geom.h_tx_m);
            geom.h_rx_m = number_or(j, "geometry", "h_rx_m", geom.h_rx_m);
            geom.h_node_m = number_or(j, "geometry", "h_node_m", geom.h_node_m);
            return geom;
        }

        RadioConfig parse_radio(const json &j)
        {
            reject_unknown_keys(j, "radio",
                                {"fc_ghz", "bandwidth_hz", "noise_figure_db", "p_t_dbm", "p_r_dbm",
                                 "kappa", "horn_gain_linear", "af_gain_beta_db"});
            RadioConfig radio;
            radio.fc_ghz = number_or(j, "radio", "fc_ghz", radio.fc_ghz);
            radio.bandwidth_hz = number_or(j, "radio", "bandwidth_hz", radio.bandwidth_hz);
            radio.noise_figure_db = number_or(j, "radio", "noise_figure_db", radio.noise_figure_db);
            radio.p_t_dbm = number_or(j, "radio", "p_t_dbm", radio.p_t_dbm);
            radio.p_r_dbm = number_or(j, "radio", "p_r_dbm", radio.p_r_dbm);
            radio.kappa = number_or(j, "radio", "kappa", radio.kappa);
            radio.horn_gain_linear = number_or(j, "radio", "horn_gain_linear", radio.horn_gain_linear);
            if (j.contains("af_gain_beta_db"))
                radio.af_gain_beta_db = number_field("radio.af_gain_beta_db", j.at("af_gain_beta_db"));
            return radio;
        }

        // ---------------------------------------------------------------- //
        // Per-point evaluation

        struct LinkPoint
        {
            double rho_t = 0.0;
            double rho_r = 0.0;
            double p_t_mw = 0.0;
            double p_r_mw = 0.0;
            double sigma1_mw = 0.0;
            double sigma2_mw = 0.0;
            NodePositions positions;
        };

        LinkPoint link_point(const SweepConfig &cfg, double d_x)
        {
            ScenarioGeometry geom = cfg.geometry;
            geom.d_x_m = d_x;
            LinkPoint point;
            point.positions = place_nodes(geom);
            const double d_t = link_distance(point.positions.tx, point.positions.node);
            const double d_r = link_distance(point.positions.node, point.positions.rx);
            point.rho_t = db_to_linear(-umi_pathloss_db(d_t, cfg.radio.fc_ghz));
            point.rho_r = db_to_linear(-umi_pathloss_db(d_r, cfg.radio.fc_ghz));
            const NoisePair noise = noise_pair(cfg.radio);
            point.sigma1_mw = dbm_to_mw(noise.sigma1_sq_dbm);
            point.sigma2_mw = dbm_to_mw(noise.sigma2_sq_dbm);
            point.p_t_mw = dbm_to_mw(cfg.radio.p_t_dbm);
            point.p_r_mw = dbm_to_mw(cfg.radio.p_r_dbm);
            return point;
        }

        RateInputs base_inputs(const SweepConfig &cfg, const LinkPoint &point, std::int64_t elements)
        {
            RateInputs in;
            in.elements = elements;
            in.kappa = cfg.radio.kappa;
            in.p_t_mw = point.p_t_mw;
            in.p_r_mw = point.p_r_mw;
            in.sigma1_sq_mw = point.sigma1_mw;
            in.sigma2_sq_mw = point.sigma2_mw;
            return in;
        }

        // Steering angles of the node->endpoint directions, used only to build
        // far-field vectors in exact mode; the consumed statistics are
        // magnitude-only and do not depend on them.
        PathCluster los_cluster(const Point3 &from, const Point3 &to)
        {
            const Point3 v = to - from;
            return {{1.0, 0.0}, std::atan2(v.y, v.x), std::atan2(v.z, std::hypot(v.x, v.y))};
        }

        SurfaceLayout sweep_layout(const SweepConfig &cfg, std::int64_t elements)
        {
            return make_surface_layout(elements, wavelength_m(cfg.radio.fc_ghz),
                                       cfg.element_pitch_wavelengths, cfg.relay_offset_wavelengths);
        }

        ChannelStats exact_stats(const SweepConfig &cfg, const LinkPoint &point, std::int64_t elements,
                                 bool with_near_field)
        {
            const double wavelength = wavelength_m(cfg.radio.fc_ghz);
            const SurfaceLayout layout = sweep_layout(cfg, elements);
            const PathCluster cluster_t = los_cluster(point.positions.node, point.positions.tx);
            const PathCluster cluster_r = los_cluster(point.positions.node, point.positions.rx);
            const FarFieldChannel h_t =
                far_field_channel(std::span(&cluster_t, 1), point.rho_t, layout, wavelength);
            const FarFieldChannel h_r =
                far_field_channel(std::span(&cluster_r, 1), point.rho_r, layout, wavelength);
            if (!with_near_field)
                return pair_stats(h_t, h_r);
            const NearFieldChannel g = near_field_channel(layout, cfg.radio.fc_ghz, cfg.radio.horn_gain_linear);
            return link_stats(h_t, h_r, g, g);
        }

        LosGains los_gains(const SweepConfig &cfg, const LinkPoint &point, std::int64_t elements,
                           bool with_eta)
        {
            LosGains los;
            los.rho_t = point.rho_t;
            los.rho_r = point.rho_r;
            if (with_eta)
            {
                const NearFieldChannel g =
                    near_field_channel(sweep_layout(cfg, elements), cfg.radio.fc_ghz, cfg.radio.horn_gain_linear);
                los.eta_t = los.eta_r = eta(g);
            }
            return los;
        }

        void attach_channel(RateInputs &in, const SweepConfig &cfg, const LinkPoint &point,
                            std::int64_t stat_elements, bool near_field)
        {
            switch (cfg.mode)
            {
            case RateMode::exact:
                in.stats = exact_stats(cfg, point, stat_elements, near_field);
                break;
            case RateMode::los:
                in.los = los_gains(cfg, point, stat_elements, near_field);
                break;
            default:
                in.los = los_gains(cfg, point, stat_elements, false);
                break;
            }
        }

        struct Task
        {
            double axis_value = 0.0;
            Architecture architecture = Architecture::irs;
            std::optional<double> beta_db;
        };

        bool uses_beta(Architecture architecture)
        {
            return architecture == Architecture::af_relay || architecture == Architecture::rir_af;
        }

        std::vector<Task> make_tasks(const SweepConfig &cfg)
        {
            std::vector<double> axis = cfg.axis_values;
            std::sort(axis.begin(), axis.end());

            std::vector<Architecture> archs = cfg.architectures;
            std::sort(archs.begin(), archs.end());
            archs.erase(std::unique(archs.begin(), archs.end()), archs.end());

            std::vector<double> betas = cfg.beta_values_db;
            std::sort(betas.begin(), betas.end());
            betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

            std::vector<Task> tasks;
            for (double value : axis)
                for (Architecture arch : archs)
                {
                    if (uses_beta(arch))
                    {
                        for (double beta : betas)
                            tasks.push_back({value, arch, beta});
                        if (cfg.include_max_beta || betas.empty())
                            tasks.push_back({value, arch, std::nullopt});
                    }
                    else
                    {
                        tasks.push_back({value, arch, std::nullopt});
                    }
                }
            return tasks;
        }

        void run_tasks(std::vector<SweepRow> &rows, int workers,
                       const std::function<SweepRow(const Task &)> &eval, const std::vector<Task> &tasks)
        {
            rows.resize(tasks.size());
            const auto run_one = [&](std::size_t i) { rows[i] = eval(tasks[i]); };
            if (workers <= 1 || tasks.size() <= 1)
            {
                for (std::size_t i = 0; i < tasks.size(); ++i)
                    run_one(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            const auto worker = [&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
                {
                    try
                    {
                        run_one(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        return;
                    }
                }
            };
            std::vector<std::thread> pool;
            const int thread_count = static_cast<int>(
                std::min<std::size_t>(static_cast<std::size_t>(workers), tasks.size()));
            pool.reserve(static_cast<std::size_t>(thread_count));
            for (int w = 0; w < thread_count; ++w)
                pool.emplace_back(worker);
            for (auto &thread : pool)
                thread.join();
            if (failure)
                std::rethrow_exception(failure);
        }

        std::string format_number(double value)
        {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "%.10g", value);
            return buffer;
        }

        void validate_common(const SweepConfig &cfg)
        {
            try
            {
                validate(cfg.geometry);
                validate(cfg.radio);
            }
            catch (const std::invalid_argument &err)
            {
                throw config_error(std::string("config: ") + err.what());
            }
            if (!(cfg.element_pitch_wavelengths > 0.0))
                throw config_error("config: surface.element_pitch_wavelengths must be > 0");
            if (cfg.axis_values.empty())
                throw config_error("config: axis_values must be a non-empty list");
            for (double value : cfg.axis_values)
            {
                if (!std::isfinite(value) || !(value > 0.0))
                    throw config_error("config: axis_values entries must be finite and > 0");
                if (cfg.sweep_axis == SweepAxis::elements && value != std::floor(value))
                    throw config_error("config: axis_values must be integers for an elements sweep");
            }
            if (cfg.architectures.empty())
                throw config_error("config: architectures must be a non-empty list");
            for (double beta : cfg.beta_values_db)
                if (!std::isfinite(beta))
                    throw config_error("config: beta_values_db entries must be finite");
            if (cfg.stats_reference_elements < 1)
                throw config_error("config: stats_reference_elements must be >= 1");
        }
    } // namespace

    const char *to_string(Architecture architecture)
    {
        switch (architecture)
        {
        case Architecture::irs:
            return "irs";
        case Architecture::df_relay:
            return "df_relay";
        case Architecture::af_relay:
            return "af_relay";
        case Architecture::rir_df:
            return "rir_df";
        default:
            return "rir_af";
        }
    }

    const char *to_string(SweepAxis axis)
    {
        return axis == SweepAxis::elements ? "elements" : "distance";
    }

    SweepConfig load_config(const json &document)
    {
        if (!document.is_object())
            throw config_error("config: document root must be a JSON object");
        reject_unknown_keys(document, "",
                            {"geometry", "radio", "surface", "sweep_axis", "axis_values",
                             "architectures", "beta_values_db", "include_max_beta", "mode",
                             "target_rate_bps_hz", "irs_element_convention", "elements",
                             "stats_reference_elements", "output_path"});

        SweepConfig cfg;
        if (document.contains("geometry"))
            cfg.geometry = parse_geometry(document.at("geometry"));
        if (document.contains("radio"))
            cfg.radio = parse_radio(document.at("radio"));
        if (document.contains("surface"))
        {
            const json &surface = document.at("surface");
            reject_unknown_keys(surface, "surface",
                                {"element_pitch_wavelengths", "relay_offset_wavelengths"});
            cfg.element_pitch_wavelengths =
                number_or(surface, "surface", "element_pitch_wavelengths", cfg.element_pitch_wavelengths);
            if (surface.contains("relay_offset_wavelengths"))
            {
                const json &offset = surface.at("relay_offset_wavelengths");
                if (!offset.is_array() || offset.size() != 3)
                    throw config_error("config: surface.relay_offset_wavelengths must be a 3-element array");
                cfg.relay_offset_wavelengths = {number_field("surface.relay_offset_wavelengths[0]", offset[0]),
                                                number_field("surface.relay_offset_wavelengths[1]", offset[1]),
                                                number_field("surface.relay_offset_wavelengths[2]", offset[2])};
            }
        }

        if (!document.contains("sweep_axis"))
            throw config_error("config: sweep_axis is required");
        const std::string axis = document.at("sweep_axis").get<std::string>();
        if (axis == "elements")
            cfg.sweep_axis = SweepAxis::elements;
        else if (axis == "distance")
            cfg.sweep_axis = SweepAxis::distance;
        else
            throw config_error("config: sweep_axis must be \"elements\" or \"distance\"");

        if (!document.contains("axis_values") || !document.at("axis_values").is_array())
            throw config_error("config: axis_values must be an array");
        for (const auto &value : document.at("axis_values"))
            cfg.axis_values.push_back(number_field("axis_values", value));

        if (!document.contains("architectures") || !document.at("architectures").is_array())
            throw config_error("config: architectures must be an array");
        for (const auto &value : document.at("architectures"))
            cfg.architectures.push_back(architecture_from_string(value.get<std::string>()));

        if (document.contains("beta_values_db"))
        {
            if (!document.at("beta_values_db").is_array())
                throw config_error("config: beta_values_db must be an array");
            for (const auto &value : document.at("beta_values_db"))
                cfg.beta_values_db.push_back(number_field("beta_values_db", value));
        }
        else if (cfg.radio.af_gain_beta_db)
        {
            cfg.beta_values_db.push_back(*cfg.radio.af_gain_beta_db);
        }

        if (document.contains("include_max_beta"))
        {
            if (!document.at("include_max_beta").is_boolean())
                throw config_error("config: include_max_beta must be a boolean");
            cfg.include_max_beta = document.at("include_max_beta").get<bool>();
        }
        if (document.contains("mode"))
            cfg.mode = mode_from_string(document.at("mode").get<std::string>());
        if (document.contains("target_rate_bps_hz"))
        {
            cfg.target_rate_bps_hz =
                number_field("target_rate_bps_hz", document.at("target_rate_bps_hz"));
            if (!(*cfg.target_rate_bps_hz > 0.0))
                throw config_error("config: target_rate_bps_hz must be > 0");
        }
        if (document.contains("irs_element_convention"))
        {
            const std::string convention = document.at("irs_element_convention").get<std::string>();
            if (convention == "2m")
                cfg.irs_convention = IrsConvention::two_m;
            else if (convention == "m")
                cfg.irs_convention = IrsConvention::single_m;
            else
                throw config_error("config: irs_element_convention must be \"2m\" or \"m\"");
        }
        if (document.contains("elements"))
        {
            const double elements = number_field("elements", document.at("elements"));
            if (!(elements >= 1.0) || elements != std::floor(elements))
                throw config_error("config: elements must be a positive integer");
            cfg.elements = static_cast<std::int64_t>(elements);
        }
        if (document.contains("stats_reference_elements"))
        {
            const double reference =
                number_field("stats_reference_elements", document.at("stats_reference_elements"));
            if (!(reference >= 1.0) || reference != std::floor(reference))
                throw config_error("config: stats_reference_elements must be a positive integer");
            cfg.stats_reference_elements = static_cast<std::int64_t>(reference);
        }
        if (document.contains("output_path"))
            cfg.output_path = document.at("output_path").get<std::string>();

        validate_common(cfg);
        return cfg;
    }

    SweepConfig load_config_file(const std::string &path)
    {
        std::ifstream input(path);
        if (!input)
            throw config_error("config: cannot open \"" + path + "\"");
        json document;
        try
        {
            input >> document;
        }
        catch (const json::parse_error &err)
        {
            throw config_error("config: invalid JSON in \"" + path + "\": " + err.what());
        }
        return load_config(document);
    }

    SweepConfig figure_preset(int id)
    {
        SweepConfig cfg;
        switch (id)
        {
        case 4:
            cfg.geometry.d_x_m = 400.0;
            cfg.radio.fc_ghz = 3.5;
            cfg.radio.bandwidth_hz = 100e6;
            cfg.sweep_axis = SweepAxis::elements;
            // 25 log-spaced element counts over [1e2, 1e5] (reconstructed axis).
            for (int k = 0; k <= 24; ++k)
                cfg.axis_values.push_back(std::round(std::pow(10.0, 2.0 + 3.0 * k / 24.0)));
            cfg.architectures = {Architecture::irs, Architecture::rir_df, Architecture::rir_af};
            cfg.beta_values_db = {10.0, 15.0, 20.0};
            cfg.include_max_beta = true;
            break;
        case 5:
            cfg.radio.fc_ghz = 60.0;
            cfg.radio.bandwidth_hz = 1e9;
            cfg.sweep_axis = SweepAxis::distance;
            for (int d = 25; d <= 400; d += 25)
                cfg.axis_values.push_back(static_cast<double>(d));
            cfg.architectures = {Architecture::irs, Architecture::df_relay, Architecture::af_relay,
                                 Architecture::rir_df, Architecture::rir_af};
            cfg.include_max_beta = true; // AF variants at the full-power gain
            cfg.elements = 50000;
            break;
        case 6:
            cfg.radio.fc_ghz = 60.0;
            cfg.radio.bandwidth_hz = 1e9;
            cfg.sweep_axis = SweepAxis::distance;
            for (int d = 25; d <= 150; d += 5)
                cfg.axis_values.push_back(static_cast<double>(d));
            cfg.architectures = {Architecture::irs, Architecture::rir_df, Architecture::rir_af};
            cfg.beta_values_db = {15.0, 20.0};
            cfg.include_max_beta = false;
            cfg.target_rate_bps_hz = 2.0;
            break;
        default:
            throw config_error("figure: id must be 4, 5 or 6");
        }
        cfg.mode = RateMode::upper_bound;
        validate_common(cfg);
        return cfg;
    }

    bool is_sizing_config(const SweepConfig &config)
    {
        return config.target_rate_bps_hz.has_value();
    }

    std::vector<SweepRow> run_rate_sweep(const SweepConfig &cfg, int workers)
    {
        validate_common(cfg);
        if (cfg.sweep_axis == SweepAxis::distance && cfg.elements < 1)
            throw config_error("config: elements is required for a distance rate sweep");

        const auto eval = [&cfg](const Task &task) {
            const double d_x =
                cfg.sweep_axis == SweepAxis::distance ? task.axis_value : cfg.geometry.d_x_m;
            const std::int64_t m = cfg.sweep_axis == SweepAxis::elements
                                       ? static_cast<std::int64_t>(std::llround(task.axis_value))
                                       : cfg.elements;
            const LinkPoint point = link_point(cfg, d_x);

            SweepRow row;
            row.axis_value = task.axis_value;
            row.architecture = task.architecture;
            row.beta_db = task.beta_db;

            RateInputs in = base_inputs(cfg, point, m);
            if (task.beta_db)
                in.beta = db_to_linear(*task.beta_db);

            RateReport report;
            switch (task.architecture)
            {
            case Architecture::irs:
                in.elements = cfg.irs_convention == IrsConvention::two_m ? 2 * m : m;
                attach_channel(in, cfg, point, in.elements, false);
                report = rate_irs(in, cfg.mode);
                break;
            case Architecture::df_relay:
                in.elements = 1;
                attach_channel(in, cfg, point, 1, false);
                report = rate_df_relay(in, cfg.mode);
                break;
            case Architecture::af_relay:
                in.elements = 1;
                attach_channel(in, cfg, point, 1, false);
                report = rate_af_relay(in, cfg.mode);
                break;
            case Architecture::rir_df:
                attach_channel(in, cfg, point, m, true);
                report = rate_rir_df(in, cfg.mode);
                break;
            case Architecture::rir_af:
                attach_channel(in, cfg, point, m, true);
                report = rate_rir_af(in, cfg.mode);
                break;
            }
            row.rate_bps_hz = report.rate_bps_hz;
            row.branch = to_string(report.branch);
            return row;
        };

        std::vector<SweepRow> rows;
        run_tasks(rows, workers, eval, make_tasks(cfg));
        return rows;
    }

    std::vector<SweepRow> run_sizing_sweep(const SweepConfig &cfg, int workers)
    {
        validate_common(cfg);
        if (!cfg.target_rate_bps_hz)
            throw config_error("config: target_rate_bps_hz is required for a sizing sweep");
        if (cfg.sweep_axis != SweepAxis::distance)
            throw config_error("config: sizing sweeps use sweep_axis = \"distance\"");
        for (Architecture arch : cfg.architectures)
            if (arch == Architecture::df_relay || arch == Architecture::af_relay)
                throw config_error("config: single-antenna relays have no element count to size");

        const SizingTarget target = make_sizing_target(*cfg.target_rate_bps_hz);
        const auto eval = [&cfg, target](const Task &task) {
            const LinkPoint point = link_point(cfg, task.axis_value);

            SweepRow row;
            row.axis_value = task.axis_value;
            row.architecture = task.architecture;
            row.beta_db = task.beta_db;

            RateInputs in = base_inputs(cfg, point, 1);
            if (task.beta_db)
                in.beta = db_to_linear(*task.beta_db);

            try
            {
                SizingReport report;
                switch (task.architecture)
                {
                case Architecture::irs:
                    attach_channel(in, cfg, point, cfg.stats_reference_elements, false);
                    report = elements_irs(target, in, cfg.mode, cfg.irs_convention);
                    break;
                case Architecture::rir_df:
                    attach_channel(in, cfg, point, cfg.stats_reference_elements, true);
                    report = elements_rir_df(target, in, cfg.mode);
                    break;
                default:
                    attach_channel(in, cfg, point, cfg.stats_reference_elements, true);
                    report = elements_rir_af(target, in, cfg.mode);
                    break;
                }
                row.m_required = report.m_required;
                row.m_real = report.m_real;
                row.branch = to_string(report.branch);
            }
            catch (const std::domain_error &)
            {
                row.branch = "infeasible";
            }
            return row;
        };

        std::vector<SweepRow> rows;
        run_tasks(rows, workers, eval, make_tasks(cfg));
        return rows;
    }

    std::string csv_string(const std::vector<SweepRow> &rows)
    {
        std::string out = "axis,architecture,beta_db,rate_bps_hz,m_required,m_real,branch\n";
        for (const SweepRow &row : rows)
        {
            out += format_number(row.axis_value);
            out += ',';
            out += to_string(row.architecture);
            out += ',';
            if (row.beta_db)
                out += format_number(*row.beta_db);
            out += ',';
            if (row.rate_bps_hz)
                out += format_number(*row.rate_bps_hz);
            out += ',';
            if (row.m_required)
                out += std::to_string(*row.m_required);
            out += ',';
            if (row.m_real)
                out += format_number(*row.m_real);
            out += ',';
            out += row.branch;
            out += '\n';
        }
        return out;
    }

    void emit_csv(const std::vector<SweepRow> &rows, const std::string &path)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("emit_csv: cannot open \"" + path + "\" for writing");
        out << csv_string(rows);
        if (!out)
            throw std::runtime_error("emit_csv: write failed for \"" + path + "\"");
    }

    std::vector<SweepRow> parse_csv(std::istream &input)
    {
        std::string line;
        if (!std::getline(input, line) ||
            line != "axis,architecture,beta_db,rate_bps_hz,m_required,m_real,branch")
            throw std::runtime_error("parse_csv: missing or malformed header");

        std::vector<SweepRow> rows;
        while (std::getline(input, line))
        {
            if (line.empty())
                continue;
            std::vector<std::string> fields;
            std::size_t start = 0;
            for (std::size_t pos = 0; pos <= line.size(); ++pos)
            {
                if (pos == line.size() || line[pos] == ',')
                {
                    fields.push_back(line.substr(start, pos - start));
                    start = pos + 1;
                }
            }
            if (fields.size() != 7)
                throw std::runtime_error("parse_csv: expected 7 fields, got " +
                                         std::to_string(fields.size()));
            SweepRow row;
            row.axis_value = std::stod(fields[0]);
            row.architecture = architecture_from_string(fields[1]);
            if (!fields[2].empty())
                row.beta_db = std::stod(fields[2]);
            if (!fields[3].empty())
                row.rate_bps_hz = std::stod(fields[3]);
            if (!fields[4].empty())
                row.m_required = std::stoll(fields[4]);
            if (!fields[5].empty())
                row.m_real = std::stod(fields[5]);
            row.branch = fields[6];
            rows.push_back(std::move(row));
        }
        return rows;
    }

    std::string default_output_dir()
    {
        const char *dir = std::getenv("RIRSIM_OUT_DIR");
        return dir && *dir ? dir : ".";
    }

} // namespace rirsim
