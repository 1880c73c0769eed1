#include "sublat/spin.hpp"

namespace sublat::spin {

namespace {

const Rational half{1, 2};
const GaussianRational h{half};
const GaussianRational hi{Rational(0), half};

} // namespace

Projector p1_z() { return validate_projector(ExactMatrix{{1, 0}, {0, 0}}); }
Projector p2_z() { return validate_projector(ExactMatrix{{0, 0}, {0, 1}}); }
Projector p1_x() { return validate_projector(ExactMatrix{{h, h}, {h, h}}); }
Projector p2_x() { return validate_projector(ExactMatrix{{h, -h}, {-h, h}}); }
Projector p1_y() { return validate_projector(ExactMatrix{{h, -hi}, {hi, h}}); }
Projector p2_y() { return validate_projector(ExactMatrix{{h, hi}, {-hi, h}}); }

MaximalContext context_z() {
    const std::vector<ExactMatrix> ms{p1_z().matrix(), p2_z().matrix()};
    return validate_context("z", ms);
}

MaximalContext context_x() {
    const std::vector<ExactMatrix> ms{p1_x().matrix(), p2_x().matrix()};
    return validate_context("x", ms);
}

MaximalContext context_y() {
    const std::vector<ExactMatrix> ms{p1_y().matrix(), p2_y().matrix()};
    return validate_context("y", ms);
}

std::vector<MaximalContext> contexts() { return {context_z(), context_x(), context_y()}; }

std::vector<ExactMatrix> generator_matrices() {
    return {p1_z().matrix(), p2_z().matrix(), p1_x().matrix(),
            p2_x().matrix(), p1_y().matrix(), p2_y().matrix()};
}

SubspaceLattice eigenline_lattice() {
    std::vector<Subspace> elements{Subspace::zero(2)};
    for (const auto& m : generator_matrices()) elements.push_back(ran(validate_projector(m)));
    elements.push_back(Subspace::full(2));
    return SubspaceLattice::create(elements);
}

} // namespace sublat::spin
