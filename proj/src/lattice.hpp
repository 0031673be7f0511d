// lattice.hpp — periodic mode lattice: one photon mode per cell

#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace pcol {

// Regular grid of cells covering a dims-dimensional torus of edge length
// cells_per_axis * cell_size. Cell centers sit at (i + 1/2) * cell_size per
// axis. Cells are flattened with axis 0 fastest:
//   index = i0 + n*(i1 + n*i2).
// Immutable after construction.
class ModeLattice {
public:
    ModeLattice(int dims, int cells_per_axis, double cell_size);

    int dims() const noexcept { return dims_; }
    int cells_per_axis() const noexcept { return cells_per_axis_; }
    double cell_size() const noexcept { return cell_size_; }
    std::size_t cell_count() const noexcept { return centers_.size(); }

    // Torus edge length L = cells_per_axis * cell_size.
    double edge_length() const noexcept { return edge_; }
    // cell_size^dims (integration weight of one cell).
    double cell_volume() const noexcept { return cell_volume_; }
    // cell_count * cell_volume, exactly.
    double volume() const noexcept { return volume_; }

    // Center of a cell; unused axes are zero.
    const std::array<double, 3>& center(std::size_t cell) const;

    // Squared distance between cell centers under the minimal-image
    // convention on the torus.
    double distance_sq(std::size_t i, std::size_t j) const;

private:
    int dims_;
    int cells_per_axis_;
    double cell_size_;
    double edge_;
    double cell_volume_;
    double volume_;
    std::vector<std::array<double, 3>> centers_;
};

}  // namespace pcol
