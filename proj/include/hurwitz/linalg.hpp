#ifndef HURWITZ_LINALG_HPP
#define HURWITZ_LINALG_HPP

#include <optional>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

using QMat = std::vector<QVec>;

int mat_rank(QMat m);

// Square matrix determinant, exact.
Rat mat_det(QMat m);

// Exact solution of m * x = rhs (m need not be square); nullopt if inconsistent.
// When the solution space is positive-dimensional an arbitrary member is returned.
std::optional<QVec> mat_solve(QMat m, QVec rhs);

// A nonzero vector x with m * x = 0; requires the nullspace to be nontrivial.
QVec mat_nullvector(QMat m, int ncols);

// Scale a nonzero rational vector to integer entries with gcd 1, same direction.
ZVec primitive_vector(const QVec& v);

Rat dot(const ZVec& a, const QVec& x);

// Row lattice of an integer matrix: rank, and when rank == cols the index of the
// lattice inside Z^cols (product of Hermite pivots).
struct LatticeForm {
    int rank = 0;
    Int index = 0;
};
LatticeForm row_lattice_form(std::vector<ZVec> rows, int cols);

// Incrementally maintained row space over Q.
class RowReducer {
public:
    explicit RowReducer(int ncols) : ncols_(ncols) {}

    // Reduce v against the stored rows; if a nonzero remainder survives it is
    // stored and true is returned (the rank grew).
    bool add(QVec v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int ncols_;
    std::vector<QVec> rows_;  // echelon: strictly increasing pivot columns
    std::vector<int> pivot_;
};

}  // namespace hurwitz

#endif
