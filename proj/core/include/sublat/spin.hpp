#pragma once

#include <vector>

#include "sublat/context_lattice.hpp"
#include "sublat/projector.hpp"

namespace sublat::spin {

/// Projectors onto the up/down eigenlines of the three spin-1/2 measurement
/// axes. Index 1 is the +1 eigenline, index 2 the -1 eigenline.
Projector p1_z();
Projector p2_z();
Projector p1_x();
Projector p2_x();
Projector p1_y();
Projector p2_y();

MaximalContext context_z();
MaximalContext context_x();
MaximalContext context_y();
/// All three contexts, in z, x, y order.
std::vector<MaximalContext> contexts();

/// The six projector matrices in z, x, y order (index 1 before 2).
std::vector<ExactMatrix> generator_matrices();

/// {0}, the six eigenlines, and C^2: the union of the three context
/// lattices, which is closed under meet, join, and orthocomplement.
SubspaceLattice eigenline_lattice();

} // namespace sublat::spin
