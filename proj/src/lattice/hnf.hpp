#pragma once

#include "lattice/int_matrix.hpp"

namespace deltavec {

/// True when m is lower triangular with positive diagonal and every
/// strictly-lower entry of row i lies in [0, m(i,i)).
bool satisfies_hnf_invariants(const IntMatrix& m);

/// A Hermite normal form A together with a unimodular U such that
/// original * U = A.
class HnfMatrix {
public:
    /// Wraps a matrix that is already in normal form; the transform is the
    /// identity. Throws InvalidArgument if the invariants do not hold.
    static HnfMatrix from_normal_form(IntMatrix m);

    const IntMatrix& matrix() const noexcept { return matrix_; }
    const IntMatrix& transform() const noexcept { return transform_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }

    /// Product of the diagonal, i.e. |det| of the original matrix.
    Integer diagonal_product() const;

    friend bool operator==(const HnfMatrix& a, const HnfMatrix& b) {
        return a.matrix_ == b.matrix_;
    }

private:
    friend HnfMatrix hermite_normal_form(const IntMatrix& m);
    HnfMatrix(IntMatrix matrix, IntMatrix transform)
        : matrix_(std::move(matrix)), transform_(std::move(transform)) {}

    IntMatrix matrix_;
    IntMatrix transform_;
};

/// Lower-triangular Hermite normal form under right multiplication by
/// unimodular matrices. Throws SingularMatrix for det(m) == 0.
HnfMatrix hermite_normal_form(const IntMatrix& m);

/// Same normal form for both inputs. Throws SingularMatrix.
bool unimodularly_equivalent(const IntMatrix& a, const IntMatrix& b);

/// Full-dimensional lattice simplex: the origin plus the rows of a
/// nonsingular matrix.
class Simplex {
public:
    explicit Simplex(IntMatrix vertices);

    const IntMatrix& vertices() const noexcept { return vertices_; }
    std::size_t dim() const noexcept { return vertices_.dim(); }
    /// |det|, the normalized volume.
    const Integer& normalized_volume() const noexcept { return volume_; }

private:
    IntMatrix vertices_;
    Integer volume_;
};

}  // namespace deltavec
