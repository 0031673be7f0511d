#include "lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pcol {

ModeLattice::ModeLattice(int dims, int cells_per_axis, double cell_size)
    : dims_(dims), cells_per_axis_(cells_per_axis), cell_size_(cell_size) {
    if (dims < 1 || dims > 3) {
        throw std::invalid_argument("ModeLattice: dims must be 1, 2 or 3 (got " +
                                    std::to_string(dims) + ")");
    }
    if (cells_per_axis < 1) {
        throw std::invalid_argument("ModeLattice: cells_per_axis must be >= 1");
    }
    if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
        throw std::invalid_argument("ModeLattice: cell_size must be positive and finite");
    }

    edge_ = cells_per_axis * cell_size;
    cell_volume_ = 1.0;
    for (int d = 0; d < dims; ++d) cell_volume_ *= cell_size;

    std::size_t count = 1;
    for (int d = 0; d < dims; ++d) count *= static_cast<std::size_t>(cells_per_axis);
    volume_ = static_cast<double>(count) * cell_volume_;

    centers_.reserve(count);
    const int n = cells_per_axis;
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::array<double, 3> c{0.0, 0.0, 0.0};
        std::size_t rem = idx;
        for (int d = 0; d < dims; ++d) {
            const auto i = static_cast<int>(rem % static_cast<std::size_t>(n));
            rem /= static_cast<std::size_t>(n);
            c[static_cast<std::size_t>(d)] = (i + 0.5) * cell_size;
        }
        centers_.push_back(c);
    }
}

const std::array<double, 3>& ModeLattice::center(std::size_t cell) const {
    if (cell >= centers_.size()) {
        throw std::out_of_range("ModeLattice::center: cell index out of range");
    }
    return centers_[cell];
}

double ModeLattice::distance_sq(std::size_t i, std::size_t j) const {
    const auto& a = center(i);
    const auto& b = center(j);
    double d2 = 0.0;
    for (int d = 0; d < dims_; ++d) {
        double diff = a[static_cast<std::size_t>(d)] - b[static_cast<std::size_t>(d)];
        diff -= edge_ * std::round(diff / edge_);
        d2 += diff * diff;
    }
    return d2;
}

}  // namespace pcol
