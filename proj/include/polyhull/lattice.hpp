#pragma once

#include <optional>
#include <string_view>

#include "polyhull/polytope.hpp"

namespace polyhull {

enum class LatticeMethod { bbox, projection, hilbert, zero_one };

LatticeMethod parse_lattice_method(std::string_view s);
const char* to_string(LatticeMethod m);

/** Integer points as homogeneous rows (1, x), sorted lexicographically. */
struct LatticePointSet {
  Matrix<Rational> points;
  LatticeMethod method = LatticeMethod::bbox;
  std::size_t count = 0;
};

struct EnumerationOptions {
  /** Maximal number of points before PointLimitExceeded; defaults to the environment cap. */
  std::optional<std::size_t> point_limit;
  /** Workers for bounding-box filtering; the result does not depend on it. */
  unsigned workers = 1;
};

/**
 * Point cap derived from POLYHULL_MEM_LIMIT_BYTES (bytes / ((d+1) * 32)),
 * nullopt when the variable is unset.
 */
std::optional<std::size_t> default_point_limit(std::size_t d);

LatticePointSet enumerate_bbox(const Polytope<Rational>& p, const EnumerationOptions& opt = {});
LatticePointSet enumerate_projection(const Polytope<Rational>& p, const EnumerationOptions& opt = {});
/** 0/1 points of the region; the caller asserts that no other lattice points matter. */
LatticePointSet enumerate_zero_one(const HRep<Rational>& h, const EnumerationOptions& opt = {});

LatticePointSet enumerate(const Polytope<Rational>& p, LatticeMethod method, const EnumerationOptions& opt = {});
std::size_t count(const Polytope<Rational>& p, LatticeMethod method, const EnumerationOptions& opt = {});

/** Convex hull of the lattice points; empty when there are none. */
Polytope<Rational> integer_hull(const Polytope<Rational>& p, LatticeMethod method = LatticeMethod::bbox,
                                const EnumerationOptions& opt = {});

/**
 * One Fourier-Motzkin step: eliminates the last coordinate of a system of
 * inequalities (rows a0 + a.x >= 0) and returns rows on the remaining ones.
 */
Matrix<Rational> fourier_motzkin_last(const Matrix<Rational>& ineq);

}  // namespace polyhull
