// fock.hpp — truncated Fock basis, states and sparse operators on it

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "lattice.hpp"

namespace pcol {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Occupation = std::vector<std::uint32_t>;

// Multimode bosonic Hilbert space truncated by total photon number, tensored
// with an optional finite matter factor (matter_dim == 1 means photons only).
//
// Photon basis order: occupation vectors grouped by total photon number,
// ascending; within one total, compositions run in reverse-lexicographic
// order. Two modes with cutoff 2 enumerate 00, 10, 01, 20, 11, 02.
// Joint indices are matter-major: index = matter * photon_dim + photon.
// The enumeration is deterministic; it defines all matrix indices.
class FockBasis {
public:
    static constexpr std::size_t kDefaultDimLimit = 200000;

    FockBasis(std::shared_ptr<const ModeLattice> lattice, int max_total, int matter_dim,
              std::size_t dim_limit = kDefaultDimLimit);

    const std::shared_ptr<const ModeLattice>& lattice() const noexcept { return lattice_; }
    int max_total() const noexcept { return max_total_; }
    int matter_dim() const noexcept { return matter_dim_; }
    std::size_t photon_dim() const noexcept { return occupations_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t mode_count() const noexcept { return lattice_->cell_count(); }

    const Occupation& occupation(std::size_t photon_index) const;
    std::uint32_t total_occupancy(std::size_t photon_index) const;
    std::optional<std::size_t> photon_index_of(const Occupation& occ) const;

    std::size_t joint_index(std::size_t matter, std::size_t photon) const {
        return matter * photon_dim() + photon;
    }
    std::size_t matter_of(std::size_t joint) const { return joint / photon_dim(); }
    std::size_t photon_of(std::size_t joint) const { return joint % photon_dim(); }

private:
    std::shared_ptr<const ModeLattice> lattice_;
    int max_total_;
    int matter_dim_;
    std::size_t dim_;
    std::vector<Occupation> occupations_;
    std::vector<std::uint32_t> totals_;
    std::map<Occupation, std::size_t> index_of_;
};

std::shared_ptr<const ModeLattice> build_lattice(int dims, int cells_per_axis, double cell_size);
std::shared_ptr<const FockBasis> build_fock_basis(std::shared_ptr<const ModeLattice> lattice,
                                                  int max_total, int matter_dim,
                                                  std::size_t dim_limit = FockBasis::kDefaultDimLimit);

// Sparse complex matrix tied to a basis. Construction prunes explicit zeros.
class SparseOperator {
public:
    SparseOperator(std::shared_ptr<const FockBasis> basis, SparseMatrix matrix);

    const std::shared_ptr<const FockBasis>& basis() const noexcept { return basis_; }
    const SparseMatrix& matrix() const noexcept { return matrix_; }
    Eigen::Index dim() const noexcept { return matrix_.rows(); }

    bool is_diagonal() const;
    // Diagonal as a dense vector (implicit zeros included).
    Eigen::VectorXcd diagonal() const { return matrix_.diagonal(); }

    SparseOperator adjoint() const;
    double hermiticity_deviation() const;  // max |A - A^dagger| entry

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return matrix_ * v; }

private:
    std::shared_ptr<const FockBasis> basis_;
    SparseMatrix matrix_;
};

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(Complex scale, const SparseOperator& a);

// Normalized pure state. Factories reject zero vectors; amplitudes are
// renormalized so the 2-norm is 1.
class StateVector {
public:
    static StateVector from_amplitudes(std::shared_ptr<const FockBasis> basis,
                                       Eigen::VectorXcd amplitudes);
    // Definite occupation state |occ> x |matter_index>.
    static StateVector occupation_state(std::shared_ptr<const FockBasis> basis,
                                        const Occupation& occ, std::size_t matter_index = 0);

    const std::shared_ptr<const FockBasis>& basis() const noexcept { return basis_; }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    double norm() const { return amplitudes_.norm(); }

    Complex expectation(const SparseOperator& op) const;

private:
    StateVector(std::shared_ptr<const FockBasis> basis, Eigen::VectorXcd amplitudes)
        : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {}

    std::shared_ptr<const FockBasis> basis_;
    Eigen::VectorXcd amplitudes_;
};

// Dense density matrix with validation helpers. Checks are on demand; the
// integrators report deviations as diagnostics rather than re-projecting.
class DensityMatrix {
public:
    DensityMatrix(std::shared_ptr<const FockBasis> basis, Eigen::MatrixXcd matrix);
    static DensityMatrix pure(const StateVector& psi);

    const std::shared_ptr<const FockBasis>& basis() const noexcept { return basis_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

    double trace_deviation() const;        // |tr(rho) - 1|
    double hermiticity_deviation() const;  // max |rho - rho^dagger| entry
    double min_eigenvalue() const;
    double purity() const;

    // Reduced matter state (photons traced out).
    Eigen::MatrixXcd reduced_matter() const;

private:
    std::shared_ptr<const FockBasis> basis_;
    Eigen::MatrixXcd matrix_;
};

Eigen::MatrixXcd reduced_matter_of(const FockBasis& basis, const Eigen::VectorXcd& amplitudes);
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace pcol
