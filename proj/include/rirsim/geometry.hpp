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

#ifndef RIRSIM_GEOMETRY_HPP
#define RIRSIM_GEOMETRY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace rirsim
{
    // Cartesian point in meters. Frame convention used throughout: x runs along
    // the transmitter-receiver baseline, y points towards the surface/relay
    // node, z is height above ground.
    struct Point3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;
    };

    inline Point3 operator+(const Point3 &a, const Point3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    inline Point3 operator-(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    inline Point3 operator*(double s, const Point3 &p) { return {s * p.x, s * p.y, s * p.z}; }

    // Euclidean 3D distance in meters.
    double link_distance(const Point3 &a, const Point3 &b);

    // Scenario layout: transmitter and receiver share the same y coordinate and
    // are separated by d_x along the x axis; the IRS/relay node sits halfway
    // between them in x, at a lateral offset d_y.
    struct ScenarioGeometry
    {
        double d_x_m = 400.0;  // Tx-Rx horizontal separation
        double d_y_m = 10.0;   // lateral offset of the surface/relay node
        double h_tx_m = 10.0;  // transmitter height
        double h_rx_m = 1.0;   // receiver height
        double h_node_m = 10.0; // surface/relay node height
    };

    // Throws std::invalid_argument when a field is out of range
    // (d_x >= 0, d_y > 0, all heights > 0, everything finite).
    void validate(const ScenarioGeometry &geom);

    struct NodePositions
    {
        Point3 tx;
        Point3 rx;
        Point3 node;
    };

    // tx = (0, 0, h_tx), rx = (d_x, 0, h_rx), node = (d_x/2, d_y, h_node).
    NodePositions place_nodes(const ScenarioGeometry &geom);

    // Planar reflecting surface described in its local frame: elements on a
    // centered rectangular grid in the local x-y plane (all at z = 0), and the
    // relay antenna phase center at relay_offset_m from the surface center.
    struct SurfaceLayout
    {
        std::int64_t element_count = 1;
        double element_pitch_m = 0.0;
        std::int64_t grid_rows = 1;
        std::int64_t grid_cols = 1;
        Point3 relay_offset_m{0.0, 0.0, 0.0};
    };

    // Factor pair closest to a square: rows is the largest divisor of m that is
    // <= sqrt(m), cols = m / rows. Prime m degenerates to a 1 x m strip.
    std::pair<std::int64_t, std::int64_t> grid_dims(std::int64_t m);

    // Default layout: half-wavelength pitch and the relay antenna on boresight
    // ten wavelengths above the surface center. Both are overridable and only
    // influence the near-field statistics; the upper-bound rate/sizing modes do
    // not depend on them.
    SurfaceLayout make_surface_layout(std::int64_t element_count, double wavelength_m,
                                      double pitch_wavelengths = 0.5,
                                      Point3 relay_offset_wavelengths = {0.0, 0.0, 10.0});

    // Throws std::invalid_argument on inconsistent grid dimensions,
    // non-positive pitch, or a relay offset with zero height.
    void validate(const SurfaceLayout &layout);

    // Element centers of the grid; the centroid is the origin (surface center).
    // Row-major order, size equals layout.element_count.
    std::vector<Point3> element_positions(const SurfaceLayout &layout);

} // namespace rirsim

#endif
