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

#include "rirsim/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace rirsim
{

    double link_distance(const Point3 &a, const Point3 &b)
    {
        const double dx = a.x - b.x;
        const double dy = a.y - b.y;
        const double dz = a.z - b.z;
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    void validate(const ScenarioGeometry &geom)
    {
        if (!std::isfinite(geom.d_x_m) || geom.d_x_m < 0.0)
            throw std::invalid_argument("geometry: d_x_m must be finite and >= 0");
        if (!std::isfinite(geom.d_y_m) || geom.d_y_m <= 0.0)
            throw std::invalid_argument("geometry: d_y_m must be finite and > 0");
        if (!std::isfinite(geom.h_tx_m) || geom.h_tx_m <= 0.0)
            throw std::invalid_argument("geometry: h_tx_m must be finite and > 0");
        if (!std::isfinite(geom.h_rx_m) || geom.h_rx_m <= 0.0)
            throw std::invalid_argument("geometry: h_rx_m must be finite and > 0");
        if (!std::isfinite(geom.h_node_m) || geom.h_node_m <= 0.0)
            throw std::invalid_argument("geometry: h_node_m must be finite and > 0");
    }

    NodePositions place_nodes(const ScenarioGeometry &geom)
    {
        validate(geom);
        NodePositions pos;
        pos.tx = {0.0, 0.0, geom.h_tx_m};
        pos.rx = {geom.d_x_m, 0.0, geom.h_rx_m};
        pos.node = {0.5 * geom.d_x_m, geom.d_y_m, geom.h_node_m};
        return pos;
    }

    std::pair<std::int64_t, std::int64_t> grid_dims(std::int64_t m)
    {
        if (m < 1)
            throw std::invalid_argument("grid_dims: element count must be >= 1");
        auto rows = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
        while (rows > 1 && m % rows != 0)
            --rows;
        return {rows, m / rows};
    }

    SurfaceLayout make_surface_layout(std::int64_t element_count, double wavelength_m,
                                      double pitch_wavelengths, Point3 relay_offset_wavelengths)
    {
        if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
            throw std::invalid_argument("make_surface_layout: wavelength must be finite and > 0");
        SurfaceLayout layout;
        layout.element_count = element_count;
        layout.element_pitch_m = pitch_wavelengths * wavelength_m;
        std::tie(layout.grid_rows, layout.grid_cols) = grid_dims(element_count);
        layout.relay_offset_m = wavelength_m * relay_offset_wavelengths;
        validate(layout);
        return layout;
    }

    void validate(const SurfaceLayout &layout)
    {
        if (layout.element_count < 1)
            throw std::invalid_argument("layout: element_count must be >= 1");
        if (!(layout.element_pitch_m > 0.0) || !std::isfinite(layout.element_pitch_m))
            throw std::invalid_argument("layout: element_pitch_m must be finite and > 0");
        if (layout.grid_rows < 1 || layout.grid_cols < 1 ||
            layout.grid_rows * layout.grid_cols != layout.element_count)
            throw std::invalid_argument("layout: grid_rows * grid_cols must equal element_count");
        if (!(std::abs(layout.relay_offset_m.z) > 0.0))
            throw std::invalid_argument("layout: relay antenna must sit above the surface plane (offset z != 0)");
    }

    std::vector<Point3> element_positions(const SurfaceLayout &layout)
    {
        validate(layout);
        std::vector<Point3> positions;
        positions.reserve(static_cast<std::size_t>(layout.element_count));
        const double row_center = 0.5 * static_cast<double>(layout.grid_rows - 1);
        const double col_center = 0.5 * static_cast<double>(layout.grid_cols - 1);
        for (std::int64_t r = 0; r < layout.grid_rows; ++r)
            for (std::int64_t c = 0; c < layout.grid_cols; ++c)
                positions.push_back({(static_cast<double>(c) - col_center) * layout.element_pitch_m,
                                     (static_cast<double>(r) - row_center) * layout.element_pitch_m, 0.0});
        return positions;
    }

} // namespace rirsim
