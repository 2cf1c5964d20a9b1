#pragma once

#include <optional>

#include "polyhull/lattice.hpp"

namespace polyhull {

/** Raised for cones with a nontrivial lineality space; carries a basis of it. */
class NotPointedError : public InvalidArgument {
 public:
  explicit NotPointedError(Matrix<Rational> lineality)
      : InvalidArgument("cone is not pointed"), lineality_(std::move(lineality)) {}
  const Matrix<Rational>& lineality() const { return lineality_; }

 private:
  Matrix<Rational> lineality_;
};

struct HilbertBasis {
  Matrix<Rational> elements;  // primitive integer vectors, sorted
  Matrix<Rational> generators;  // the cone generators the basis was computed from
};

/**
 * Lattice points z = sum l_i g_i with 0 <= l_i < 1 (the half-open fundamental
 * parallelepiped), excluding 0.  With `max_height` only points whose first
 * coordinate is at most that value are produced.
 */
Matrix<Rational> parallelepiped_points(const Matrix<Rational>& generators, std::optional<Integer> max_height = std::nullopt);

/** Hilbert basis of the cone spanned by linearly independent integer generators. */
HilbertBasis hilbert_basis_simplicial(const Matrix<Rational>& generators);

/**
 * Hilbert basis of a pointed cone given by generators, via a placing
 * triangulation and per-simplex parallelepipeds.  With `max_height` only basis
 * elements of at most that first coordinate are computed (the first
 * coordinate must then be nonnegative on the cone).
 */
HilbertBasis hilbert_basis(const Cone<Rational>& c, std::optional<Integer> max_height = std::nullopt);

/** Lattice points of a bounded polytope as the height-1 Hilbert basis elements of its homogenization. */
LatticePointSet enumerate_via_hilbert(const Polytope<Rational>& p, const EnumerationOptions& opt = {});

}  // namespace polyhull
