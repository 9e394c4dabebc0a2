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

#ifndef RIRSIM_CHANNEL_HPP
#define RIRSIM_CHANNEL_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "rirsim/geometry.hpp"

namespace rirsim
{
    inline constexpr double speed_of_light_m_s = 299792458.0;

    inline double wavelength_m(double fc_ghz) { return speed_of_light_m_s / (fc_ghz * 1e9); }

    // Raised when a computed channel violates a physical validity condition of
    // the model (e.g. the near-field aperture gain exceeding the element count).
    class model_validity_error : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // One propagation cluster of the geometric far-field model: complex gain
    // plus azimuth/elevation angles in [0, 2*pi).
    struct PathCluster
    {
        std::complex<double> alpha{1.0, 0.0};
        double azimuth_rad = 0.0;
        double elevation_rad = 0.0;
    };

    // Far-field channel between a surface and the transmitter or receiver.
    // In the single-cluster LOS case with unit gain, every entry has magnitude
    // sqrt(rho).
    struct FarFieldChannel
    {
        std::vector<std::complex<double>> entries;
        double rho = 1.0; // linear path gain, 10^(-pathloss_dB / 10)
    };

    // Near-field channel between a surface and the relay antenna, split into
    // per-element magnitudes (strictly positive) and unit-modulus spherical
    // phase factors.
    struct NearFieldChannel
    {
        std::vector<double> magnitudes;
        std::vector<std::complex<double>> phases;
    };

    // Hadamard composite of a far-field and a near-field channel.
    struct CompositeChannel
    {
        std::vector<std::complex<double>> entries;
    };

    // Planar-array steering vector: entry m = exp(j 2pi/lambda <p_m, u(az, el)>)
    // with u = (cos el cos az, cos el sin az, sin el). All entries unit modulus;
    // boresight (u along +z) gives the all-ones vector for the z = 0 grid.
    std::vector<std::complex<double>> array_response(double azimuth_rad, double elevation_rad,
                                                     const SurfaceLayout &layout, double wavelength);

    // Geometric multipath channel h = sum_l sqrt(rho) alpha_l a(az_l, el_l).
    FarFieldChannel far_field_channel(std::span<const PathCluster> clusters, double rho,
                                      const SurfaceLayout &layout, double wavelength);

    // Geometry term of the near-field magnitude: (xy/d^2)/sqrt(x^2/d^2 + y^2/d^2 + 1).
    double nearfield_c_term(double x, double y, double d);

    // Per-element magnitude of the surface-to-relay channel. Aggregates the
    // free-space loss, polarization mismatch, and effective aperture of an
    // element whose effective area is lambda^2 / (4 pi):
    //   sqrt( G/(4pi) * sum_{x in X} sum_{y in Y}
    //         [ C_{x,y} / (3 (y^2/d^2 + 1)) + (2/3) atan C_{x,y} ] )
    // with X = { s + (x_m - x_0), s - (x_m - x_0) } (same for Y),
    // s = c/(4 f sqrt(pi)) the aperture half-side and d = |z_m - z_0| the
    // relay height over the surface plane. Converges to the Friis aperture
    // form G * (lambda^2/4pi) / (4 pi d^2) on boresight for d >> lambda.
    double near_field_magnitude(const Point3 &element, const Point3 &relay, double fc_ghz,
                                double horn_gain_linear);

    // Spherical-wave phase factor exp(j 2pi/lambda * |element - relay|).
    std::complex<double> spherical_phase(const Point3 &element, const Point3 &relay, double wavelength);

    // Builds the full surface-to-relay channel for a layout: magnitudes via
    // near_field_magnitude, phases via spherical_phase, relay antenna at
    // layout.relay_offset_m.
    NearFieldChannel near_field_channel(const SurfaceLayout &layout, double fc_ghz,
                                        double horn_gain_linear);

    // Elementwise product h o sigma o Theta. Lengths must match.
    CompositeChannel composite(const FarFieldChannel &h, const NearFieldChannel &g);

    // Per-element channel statistics.
    double mean_power(std::span<const std::complex<double>> v);          // (1/M) sum |v_m|^2
    double mean_abs_sq(std::span<const std::complex<double>> v);         // ((1/M) sum |v_m|)^2
    double mean_abs_sq(std::span<const double> magnitudes);              // same, on magnitudes
    double mean_abs_product_sq(std::span<const std::complex<double>> a,  // ((1/M) sum |a_m||b_m|)^2
                               std::span<const std::complex<double>> b);

    // Near-field aperture statistic ((1/M) sum sigma_m)^2. Throws
    // model_validity_error when it exceeds the element count.
    double eta(const NearFieldChannel &g);

    // Scalar statistics consumed by the rate and sizing engines. Fields that a
    // builder cannot provide are left at zero and rejected when an operation
    // actually needs them.
    struct ChannelStats
    {
        double zeta_t = 0.0;   // mean per-element power of the transmit-side far-field channel
        double zeta_r = 0.0;   // same, receive side
        double xi_tr = 0.0;    // ((1/M) sum |h_t||h_r|)^2, single-surface statistic
        double xi_circ_t = 0.0; // ((1/M) sum |h_t o g_t|)^2, composite statistic
        double xi_circ_r = 0.0; // same, receive side
        double eta_t = 0.0;    // near-field magnitude statistic of g_t
        double eta_r = 0.0;    // same, g_r
    };

    // Far-field-only statistics (classical IRS and single-antenna relays).
    ChannelStats pair_stats(const FarFieldChannel &h_t, const FarFieldChannel &h_r);

    // Full statistics for the two-surface link, composites included.
    ChannelStats link_stats(const FarFieldChannel &h_t, const FarFieldChannel &h_r,
                            const NearFieldChannel &g_t, const NearFieldChannel &g_r);

} // namespace rirsim

#endif
