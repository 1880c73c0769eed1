#include <doctest.h>

#include <vector>

#include "sublat/burnside.hpp"
#include "sublat/spin.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using sublat::AlgebraSpan;
using sublat::ExactMatrix;
using sublat::GaussianRational;
using sublat::IrreducibilityResult;
using sublat::Projector;
using sublat::Rational;
using sublat::Subspace;

namespace {
const GaussianRational h{Rational(1, 2)};
const GaussianRational I = GaussianRational::i();
} // namespace

TEST_SUITE("burnside") {
    TEST_CASE("closure dimensions match the brute-force word span") {
        const std::vector<ExactMatrix> zx{sublat::spin::p1_z().matrix(),
                                          sublat::spin::p1_x().matrix()};
        CHECK(sublat::algebra_closure(zx).dimension() == 4);
        CHECK(oracle::word_span_dimension(zx, 2, 3) == 4);

        const std::vector<ExactMatrix> diag{sublat::spin::p1_z().matrix(),
                                            sublat::spin::p2_z().matrix()};
        CHECK(sublat::algebra_closure(diag).dimension() == 2);
        CHECK(oracle::word_span_dimension(diag, 2, 3) == 2);

        CHECK(sublat::algebra_closure({}, 2).dimension() == 1);
    }

    TEST_CASE("the closure contains the identity and certifies products") {
        const AlgebraSpan s = sublat::algebra_closure(sublat::spin::generator_matrices());
        CHECK(s.dimension() == 4);
        CHECK(s.contains(ExactMatrix::identity(2)));
        for (const auto& b : s.basis())
            for (const auto& g : s.generators()) {
                CHECK(s.contains(b * g));
                CHECK(s.contains(g * b));
            }
    }

    TEST_CASE("round dimensions trace the breadth-first growth") {
        const AlgebraSpan six = sublat::algebra_closure(sublat::spin::generator_matrices());
        const std::vector<std::size_t> rounds(six.round_dimensions().begin(),
                                              six.round_dimensions().end());
        CHECK(rounds == std::vector<std::size_t>{4, 4});

        const std::vector<ExactMatrix> diag{sublat::spin::p1_z().matrix(),
                                            sublat::spin::p2_z().matrix()};
        const AlgebraSpan two = sublat::algebra_closure(diag);
        CHECK(two.round_dimensions().back() == 2);
    }

    TEST_CASE("closure input validation") {
        CHECK_THROWS_AS(sublat::algebra_closure({}), sublat::DimensionError);
        const std::vector<ExactMatrix> mixed{ExactMatrix::identity(2),
                                             ExactMatrix::identity(3)};
        CHECK_THROWS_AS(sublat::algebra_closure(mixed), sublat::DimensionError);
        CHECK_THROWS_AS(sublat::algebra_closure(std::vector<ExactMatrix>{ExactMatrix(2, 3)}),
                        sublat::DimensionError);
    }

    TEST_CASE("closure dimension is monotone in the generators") {
        gen::Rng rng(51);
        for (int k = 0; k < 10; ++k) {
            std::vector<ExactMatrix> gens{gen::random_projector(rng, 3).matrix()};
            std::size_t last = sublat::algebra_closure(gens, 3).dimension();
            for (int extra = 0; extra < 2; ++extra) {
                gens.push_back(gen::random_projector(rng, 3).matrix());
                const std::size_t next = sublat::algebra_closure(gens, 3).dimension();
                CHECK(next >= last);
                last = next;
            }
        }
    }

    TEST_CASE("the six spin projectors act irreducibly") {
        const IrreducibilityResult r = sublat::is_irreducible(sublat::spin::generator_matrices());
        CHECK(r.irreducible);
        CHECK(r.span.dimension() == 4);
        CHECK_FALSE(r.invariant_witness);
    }

    TEST_CASE("a single context is reducible with an eigenline witness") {
        const std::vector<ExactMatrix> diag{sublat::spin::p1_z().matrix(),
                                            sublat::spin::p2_z().matrix()};
        const auto candidates = sublat::spin::eigenline_lattice();
        const IrreducibilityResult r =
            sublat::is_irreducible(diag, candidates.elements());
        CHECK_FALSE(r.irreducible);
        CHECK(r.span.dimension() == 2);
        REQUIRE(r.invariant_witness);
        CHECK(r.invariant_witness->dim() == 1);
        for (const auto& g : diag) CHECK(sublat::is_invariant(*r.invariant_witness, g));
    }

    TEST_CASE("the identity alone is reducible") {
        const std::vector<ExactMatrix> one{ExactMatrix::identity(2)};
        CHECK_FALSE(sublat::is_irreducible(one).irreducible);
    }

    TEST_CASE("irreducibility is out of scope below dimension two") {
        const std::vector<ExactMatrix> tiny{ExactMatrix::identity(1)};
        CHECK_THROWS_AS(sublat::is_irreducible(tiny), sublat::OutOfScopeError);
        CHECK_THROWS_AS(sublat::is_irreducible({}, {}, 1), sublat::OutOfScopeError);
    }

    TEST_CASE("the invariant filter recovers per-context lattices") {
        const auto eigenlines = sublat::spin::eigenline_lattice();

        const auto trivial_only = sublat::common_invariant_filter(
            sublat::spin::generator_matrices(), eigenlines.elements());
        REQUIRE(trivial_only.size() == 2);
        CHECK(trivial_only.front() == Subspace::zero(2));
        CHECK(trivial_only.back() == Subspace::full(2));

        const auto ctx_z = sublat::spin::context_z();
        std::vector<ExactMatrix> zgens;
        for (const auto& p : ctx_z.members()) zgens.push_back(p.matrix());
        const auto z_only = sublat::common_invariant_filter(zgens, eigenlines.elements());
        CHECK(z_only.size() == 4);
        const auto lz = sublat::context_lattice(sublat::spin::context_z());
        for (const auto& s : z_only) CHECK(lz.contains(s));

        const auto everything =
            sublat::common_invariant_filter({}, eigenlines.elements());
        CHECK(everything.size() == eigenlines.size());
    }

    TEST_CASE("block-diagonal generators are reducible with the block surviving") {
        // Two projectors acting only inside span{e1, e2} of C^4.
        std::vector<GaussianRational> a(16);
        a[0] = GaussianRational(1);
        std::vector<GaussianRational> b(16);
        b[0] = h;
        b[1] = h;
        b[4] = h;
        b[5] = h;
        const std::vector<ExactMatrix> gens{ExactMatrix(4, 4, std::move(a)),
                                            ExactMatrix(4, 4, std::move(b))};
        const std::vector<sublat::ExactVector> block{sublat::ExactVector{1, 0, 0, 0},
                                                     sublat::ExactVector{0, 1, 0, 0}};
        const std::vector<Subspace> candidates{Subspace::from_span(block, 4)};
        const IrreducibilityResult r = sublat::is_irreducible(gens, candidates);
        CHECK_FALSE(r.irreducible);
        REQUIRE(r.invariant_witness);
        CHECK(*r.invariant_witness == candidates.front());
    }

    TEST_CASE("irreducible families leave only trivial candidates invariant") {
        gen::Rng rng(52);
        for (int k = 0; k < 10; ++k) {
            std::vector<Subspace> candidates;
            for (int c = 0; c < 5; ++c) candidates.push_back(gen::random_subspace(rng, 2));
            const auto surviving = sublat::common_invariant_filter(
                sublat::spin::generator_matrices(), candidates);
            for (const auto& s : surviving) CHECK((s.is_zero() || s.is_full()));
        }
    }

    TEST_CASE("pauli decomposition matches hand values") {
        const auto z = sublat::pauli_decompose(sublat::spin::p1_z().matrix());
        CHECK(z.c == h);
        CHECK(z.a_z == h);
        CHECK(z.a_x == GaussianRational(0));
        CHECK(z.a_y == GaussianRational(0));

        const auto id = sublat::pauli_decompose(ExactMatrix::identity(2));
        CHECK(id.c == GaussianRational(1));
        CHECK(id.a_z == GaussianRational(0));

        const auto raising = sublat::pauli_decompose(ExactMatrix{{0, 1}, {0, 0}});
        CHECK(raising.c == GaussianRational(0));
        CHECK(raising.a_x == h);
        CHECK(raising.a_y == I * h);
        CHECK(raising.a_z == GaussianRational(0));

        CHECK_THROWS_AS(sublat::pauli_decompose(ExactMatrix::identity(3)),
                        sublat::DimensionError);
    }

    TEST_CASE("pauli reassembly inverts decomposition") {
        gen::Rng rng(53);
        for (int k = 0; k < 50; ++k) {
            const ExactMatrix m = gen::random_matrix(rng, 2, 2);
            CHECK(sublat::pauli_reassemble(sublat::pauli_decompose(m)) == m);
        }
    }

    TEST_CASE("spin helpers expose the worked constants") {
        CHECK(sublat::spin::generator_matrices().size() == 6);
        CHECK(sublat::spin::contexts().size() == 3);
        CHECK(sublat::spin::p1_z().matrix() == ExactMatrix{{1, 0}, {0, 0}});
        CHECK(sublat::spin::p2_y().matrix() == ExactMatrix{{h, I * h}, {-I * h, h}});
        CHECK(sublat::spin::eigenline_lattice().size() == 8);
    }
}
