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

#include "rirsim/channel.hpp"

#include <cmath>
#include <numbers>

namespace rirsim
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void check_same_length(std::size_t a, std::size_t b, const char *what)
        {
            if (a == 0 || b == 0)
                throw std::invalid_argument(std::string(what) + ": empty channel vector");
            if (a != b)
                throw std::invalid_argument(std::string(what) + ": channel length mismatch");
        }
    } // namespace

    std::vector<std::complex<double>> array_response(double azimuth_rad, double elevation_rad,
                                                     const SurfaceLayout &layout, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw std::invalid_argument("array_response: wavelength must be > 0");
        const Point3 u{std::cos(elevation_rad) * std::cos(azimuth_rad),
                       std::cos(elevation_rad) * std::sin(azimuth_rad), std::sin(elevation_rad)};
        const double wavenumber = 2.0 * pi / wavelength;
        std::vector<std::complex<double>> response;
        for (const Point3 &p : element_positions(layout))
            response.push_back(std::polar(1.0, wavenumber * (p.x * u.x + p.y * u.y + p.z * u.z)));
        return response;
    }

    FarFieldChannel far_field_channel(std::span<const PathCluster> clusters, double rho,
                                      const SurfaceLayout &layout, double wavelength)
    {
        if (clusters.empty())
            throw std::invalid_argument("far_field_channel: at least one cluster required");
        if (!(rho >= 0.0) || !std::isfinite(rho))
            throw std::invalid_argument("far_field_channel: rho must be finite and >= 0");
        FarFieldChannel channel;
        channel.rho = rho;
        channel.entries.assign(static_cast<std::size_t>(layout.element_count), {0.0, 0.0});
        const double amplitude = std::sqrt(rho);
        for (const PathCluster &cluster : clusters)
        {
            const auto steering = array_response(cluster.azimuth_rad, cluster.elevation_rad, layout, wavelength);
            for (std::size_t m = 0; m < steering.size(); ++m)
                channel.entries[m] += amplitude * cluster.alpha * steering[m];
        }
        return channel;
    }

    double nearfield_c_term(double x, double y, double d)
    {
        const double xs = x / d;
        const double ys = y / d;
        return (xs * ys) / std::sqrt(xs * xs + ys * ys + 1.0);
    }

    double near_field_magnitude(const Point3 &element, const Point3 &relay, double fc_ghz,
                                double horn_gain_linear)
    {
        if (!(fc_ghz > 0.0))
            throw std::domain_error("near_field_magnitude: carrier frequency must be > 0");
        if (!(horn_gain_linear > 0.0))
            throw std::domain_error("near_field_magnitude: horn gain must be > 0");
        const double d = std::abs(element.z - relay.z);
        if (!(d > 0.0))
            throw std::domain_error("near_field_magnitude: relay height over the element plane is zero");

        // Effective element aperture half-side; side 2s encloses an area of
        // lambda^2 / (4 pi).
        const double s = speed_of_light_m_s / (4.0 * fc_ghz * 1e9 * std::sqrt(pi));
        const double xs[2] = {s + (element.x - relay.x), s - (element.x - relay.x)};
        const double ys[2] = {s + (element.y - relay.y), s - (element.y - relay.y)};

        double sum = 0.0;
        for (double x : xs)
            for (double y : ys)
            {
                const double c = nearfield_c_term(x, y, d);
                sum += c / (3.0 * (y * y / (d * d) + 1.0)) + (2.0 / 3.0) * std::atan(c);
            }

        const double power = horn_gain_linear / (4.0 * pi) * sum;
        if (!(power > 0.0))
            throw model_validity_error("near_field_magnitude: non-positive captured power (degenerate geometry)");
        return std::sqrt(power);
    }

    std::complex<double> spherical_phase(const Point3 &element, const Point3 &relay, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw std::invalid_argument("spherical_phase: wavelength must be > 0");
        return std::polar(1.0, 2.0 * pi / wavelength * link_distance(element, relay));
    }

    NearFieldChannel near_field_channel(const SurfaceLayout &layout, double fc_ghz,
                                        double horn_gain_linear)
    {
        const double wavelength = wavelength_m(fc_ghz);
        NearFieldChannel channel;
        channel.magnitudes.reserve(static_cast<std::size_t>(layout.element_count));
        channel.phases.reserve(static_cast<std::size_t>(layout.element_count));
        for (const Point3 &p : element_positions(layout))
        {
            channel.magnitudes.push_back(near_field_magnitude(p, layout.relay_offset_m, fc_ghz, horn_gain_linear));
            channel.phases.push_back(spherical_phase(p, layout.relay_offset_m, wavelength));
        }
        return channel;
    }

    CompositeChannel composite(const FarFieldChannel &h, const NearFieldChannel &g)
    {
        check_same_length(h.entries.size(), g.magnitudes.size(), "composite");
        check_same_length(g.magnitudes.size(), g.phases.size(), "composite");
        CompositeChannel out;
        out.entries.reserve(h.entries.size());
        for (std::size_t m = 0; m < h.entries.size(); ++m)
            out.entries.push_back(h.entries[m] * g.magnitudes[m] * g.phases[m]);
        return out;
    }

    double mean_power(std::span<const std::complex<double>> v)
    {
        if (v.empty())
            throw std::invalid_argument("mean_power: empty channel vector");
        double sum = 0.0;
        for (const auto &e : v)
            sum += std::norm(e);
        return sum / static_cast<double>(v.size());
    }

    double mean_abs_sq(std::span<const std::complex<double>> v)
    {
        if (v.empty())
            throw std::invalid_argument("mean_abs_sq: empty channel vector");
        double sum = 0.0;
        for (const auto &e : v)
            sum += std::abs(e);
        const double mean = sum / static_cast<double>(v.size());
        return mean * mean;
    }

    double mean_abs_sq(std::span<const double> magnitudes)
    {
        if (magnitudes.empty())
            throw std::invalid_argument("mean_abs_sq: empty magnitude vector");
        double sum = 0.0;
        for (double e : magnitudes)
            sum += std::abs(e);
        const double mean = sum / static_cast<double>(magnitudes.size());
        return mean * mean;
    }

    double mean_abs_product_sq(std::span<const std::complex<double>> a,
                               std::span<const std::complex<double>> b)
    {
        check_same_length(a.size(), b.size(), "mean_abs_product_sq");
        double sum = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m)
            sum += std::abs(a[m]) * std::abs(b[m]);
        const double mean = sum / static_cast<double>(a.size());
        return mean * mean;
    }

    double eta(const NearFieldChannel &g)
    {
        const double value = mean_abs_sq(std::span<const double>(g.magnitudes));
        if (value > static_cast<double>(g.magnitudes.size()))
            throw model_validity_error("eta: near-field aperture gain exceeds the element count");
        return value;
    }

    ChannelStats pair_stats(const FarFieldChannel &h_t, const FarFieldChannel &h_r)
    {
        check_same_length(h_t.entries.size(), h_r.entries.size(), "pair_stats");
        ChannelStats stats;
        stats.zeta_t = mean_power(h_t.entries);
        stats.zeta_r = mean_power(h_r.entries);
        stats.xi_tr = mean_abs_product_sq(h_t.entries, h_r.entries);
        return stats;
    }

    ChannelStats link_stats(const FarFieldChannel &h_t, const FarFieldChannel &h_r,
                            const NearFieldChannel &g_t, const NearFieldChannel &g_r)
    {
        ChannelStats stats = pair_stats(h_t, h_r);
        stats.xi_circ_t = mean_abs_sq(std::span<const std::complex<double>>(composite(h_t, g_t).entries));
        stats.xi_circ_r = mean_abs_sq(std::span<const std::complex<double>>(composite(h_r, g_r).entries));
        stats.eta_t = eta(g_t);
        stats.eta_r = eta(g_r);
        return stats;
    }

} // namespace rirsim
