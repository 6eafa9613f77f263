#pragma once

#include <string>
#include <vector>

#include "hopfbundle/bundle.hpp"
#include "hopfbundle/moebius.hpp"

namespace hopfbundle {

// Isomorphism type of one fiber of the glued surface over the base line:
// X0 when the fiber contraction is the plain homothety (the section value
// vanishes there), X1 otherwise.
enum class HopfClass { X0, X1 };

std::string to_string(HopfClass cls);

using FiberPoint = ProjPoint;

// Evaluates the section at the base point — through sigma0 at finite points,
// through sigma1 at infinity — and reads the class off the exact value.
HopfClass classify_fiber(const ManifoldSpec& spec, const FiberPoint& at);

// The X0 locus: zero together with all a-th roots of unity, a + 1 points in
// a fixed order. Each returned point is re-checked to classify as X0, and
// sample points off the locus (2 and infinity) are re-checked to classify
// as X1.
std::vector<FiberPoint> special_fibers(const ManifoldSpec& spec);

}  // namespace hopfbundle
