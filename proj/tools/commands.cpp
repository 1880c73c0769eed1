#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "sublat/burnside.hpp"
#include "sublat/context_lattice.hpp"
#include "sublat/lattice.hpp"
#include "sublat/spin.hpp"

namespace sublat::cli {

namespace {

std::vector<MaximalContext> validate_all_contexts(const OperatorSetDocument& doc) {
    std::vector<MaximalContext> out;
    out.reserve(doc.contexts.size());
    for (const auto& c : doc.contexts) out.push_back(validate_context(c.label, c.projectors));
    return out;
}

void append_elements(std::ostream& os, const SubspaceLattice& l) {
    for (std::size_t k = 0; k < l.size(); ++k)
        os << "  s" << k << ": dim " << l[k].dim() << "  " << l[k].str() << "\n";
}

nlohmann::ordered_json elements_to_json(const SubspaceLattice& l) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& s : l.elements()) out.push_back(subspace_to_json(s));
    return out;
}

void append_axiom_line(std::ostream& os, const AxiomReport& r) {
    os << "  " << axiom_name(r.axiom);
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << ": " << (r.holds ? "holds" : "FAILS") << "\n";
    if (r.counterexample) {
        const auto& ce = r.counterexample;
        os << "    witness elements (";
        for (std::size_t k = 0; k < ce->indices.size(); ++k)
            os << (k ? ", " : "") << "s" << ce->indices[k];
        os << "): lhs = " << ce->lhs.str();
        if (ce->rhs) os << ", rhs = " << ce->rhs->str();
        os << "\n";
    }
}

} // namespace

Report cmd_validate(const std::string& input_path) {
    const OperatorSetDocument doc = load_document(input_path);

    Report report;
    report.command = "validate";
    report.body["ambient_dim"] = doc.ambient_dim;
    report.body["contexts"] = nlohmann::ordered_json::array();

    std::ostringstream text;
    text << "validating " << doc.contexts.size() << " context"
         << (doc.contexts.size() == 1 ? "" : "s") << " (ambient dimension " << doc.ambient_dim
         << ")\n";
    bool all_valid = true;
    for (const auto& c : doc.contexts) {
        nlohmann::ordered_json jc;
        jc["label"] = c.label;
        try {
            const MaximalContext ctx = validate_context(c.label, c.projectors);
            jc["valid"] = true;
            nlohmann::ordered_json ranks = nlohmann::ordered_json::array();
            text << "  context '" << c.label << "': valid, " << ctx.size()
                 << " members with ranks";
            for (const auto& p : ctx.members()) {
                ranks.push_back(p.rank());
                text << " " << p.rank();
            }
            text << "\n";
            jc["ranks"] = std::move(ranks);
        } catch (const Error& e) {
            all_valid = false;
            jc["valid"] = false;
            jc["error"] = e.what();
            text << "  context '" << c.label << "': INVALID (" << e.what() << ")\n";
        }
        report.body["contexts"].push_back(std::move(jc));
    }
    report.body["all_valid"] = all_valid;
    text << (all_valid ? "all contexts valid\n" : "validation failed\n");
    report.text = text.str();
    report.exit_code = all_valid ? 0 : 1;
    return report;
}

Report cmd_context_lattice(const std::string& input_path, const std::string& label,
                           Format format) {
    const OperatorSetDocument doc = load_document(input_path);

    const ContextSpec* spec = nullptr;
    for (const auto& c : doc.contexts)
        if (c.label == label) {
            spec = &c;
            break;
        }
    if (!spec) throw SelectorError("unknown context label '" + label + "'");

    const MaximalContext ctx = validate_context(spec->label, spec->projectors);
    const SubspaceLattice l = context_lattice(ctx);

    const auto [closure_meet, closure_join] = check_closure(l.elements());
    const AxiomReport distributive = check_distributive(l);
    const AxiomReport orthomodular = check_orthomodular(l);

    Report report;
    report.command = "context-lattice";
    report.body["label"] = label;
    report.body["ambient_dim"] = doc.ambient_dim;
    report.body["elements"] = elements_to_json(l);
    report.body["axioms"] = nlohmann::ordered_json::array(
        {axiom_report_to_json(closure_meet), axiom_report_to_json(closure_join),
         axiom_report_to_json(distributive), axiom_report_to_json(orthomodular)});

    std::ostringstream text;
    text << "invariant-subspace lattice of context '" << label << "' (ambient dimension "
         << doc.ambient_dim << ")\n";
    text << "elements (" << l.size() << "):\n";
    append_elements(text, l);
    text << "axioms:\n";
    append_axiom_line(text, closure_meet);
    append_axiom_line(text, closure_join);
    append_axiom_line(text, distributive);
    append_axiom_line(text, orthomodular);
    report.text = text.str();
    if (format == Format::Dot) report.dot = hasse_dot(l);
    report.exit_code = 0;
    return report;
}

Report cmd_intersect(const std::string& input_path, Format format) {
    const OperatorSetDocument doc = load_document(input_path);
    const std::vector<MaximalContext> contexts = validate_all_contexts(doc);
    if (contexts.empty())
        throw ContextError(ContextError::Kind::InvalidMember,
                           "intersect: the document has no contexts");

    std::vector<SubspaceLattice> lattices;
    lattices.reserve(contexts.size());
    for (const auto& ctx : contexts) lattices.push_back(context_lattice(ctx));
    const SubspaceLattice common = intersect_lattices(lattices);
    const bool irreducible = common.size() == 2;

    Report report;
    report.command = "intersect";
    report.body["ambient_dim"] = doc.ambient_dim;
    report.body["lattices"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < contexts.size(); ++k) {
        nlohmann::ordered_json jl;
        jl["label"] = contexts[k].label();
        jl["size"] = lattices[k].size();
        report.body["lattices"].push_back(std::move(jl));
    }
    report.body["elements"] = elements_to_json(common);
    report.body["irreducible"] = irreducible;

    std::ostringstream text;
    text << "intersection of " << contexts.size() << " invariant-subspace lattice"
         << (contexts.size() == 1 ? "" : "s") << " (ambient dimension " << doc.ambient_dim
         << ")\n";
    for (std::size_t k = 0; k < contexts.size(); ++k)
        text << "  L(" << contexts[k].label() << "): " << lattices[k].size() << " elements\n";
    text << "intersection (" << common.size() << "):\n";
    append_elements(text, common);
    if (irreducible)
        text << "irreducible: only {0} and the full space are invariant under every context\n";
    report.text = text.str();
    if (format == Format::Dot) report.dot = hasse_dot(common);
    report.exit_code = 0;
    return report;
}

Report cmd_burnside(const std::string& input_path) {
    const OperatorSetDocument doc = load_document(input_path);
    if (doc.ambient_dim < 2)
        throw OutOfScopeError("burnside: the ambient dimension must be at least 2");
    const std::vector<MaximalContext> contexts = validate_all_contexts(doc);
    if (contexts.empty())
        throw ContextError(ContextError::Kind::InvalidMember,
                           "burnside: the document has no contexts");

    std::vector<ExactMatrix> generators;
    std::vector<Subspace> candidates;
    for (const auto& ctx : contexts) {
        for (const auto& p : ctx.members()) generators.push_back(p.matrix());
        const SubspaceLattice l = context_lattice(ctx);
        for (const auto& s : l.elements()) candidates.push_back(s);
    }
    const IrreducibilityResult result = is_irreducible(generators, candidates, doc.ambient_dim);

    Report report;
    report.command = "burnside";
    report.body["ambient_dim"] = doc.ambient_dim;
    report.body["generators"] = generators.size();
    report.body["rounds"] = std::vector<std::size_t>(result.span.round_dimensions().begin(),
                                                     result.span.round_dimensions().end());
    report.body["closure_dimension"] = result.span.dimension();
    report.body["full_dimension"] = doc.ambient_dim * doc.ambient_dim;
    report.body["irreducible"] = result.irreducible;
    if (result.invariant_witness)
        report.body["invariant_witness"] = subspace_to_json(*result.invariant_witness);

    std::ostringstream text;
    text << "algebra closure over " << generators.size() << " generators (ambient dimension "
         << doc.ambient_dim << ")\n";
    text << "round dimensions:";
    for (const std::size_t d : result.span.round_dimensions()) text << " " << d;
    text << "\nclosure dimension: " << result.span.dimension() << " of "
         << doc.ambient_dim * doc.ambient_dim << "\n";
    text << "verdict: " << (result.irreducible ? "irreducible" : "reducible") << "\n";
    if (result.invariant_witness)
        text << "invariant witness: " << result.invariant_witness->str() << "\n";
    report.text = text.str();
    report.exit_code = 0;
    return report;
}

Report cmd_axioms(const std::string& input_path, Format format) {
    const OperatorSetDocument doc = load_document(input_path);

    std::vector<Subspace> family;
    std::string source;
    if (!doc.subspaces.empty()) {
        source = "subspaces";
        for (const auto& s : doc.subspaces)
            family.push_back(Subspace::from_span(s.span, doc.ambient_dim));
    } else {
        source = "contexts";
        family.push_back(Subspace::zero(doc.ambient_dim));
        for (const auto& ctx : validate_all_contexts(doc))
            for (const auto& p : ctx.members()) family.push_back(ran(p));
        family.push_back(Subspace::full(doc.ambient_dim));
    }

    // Canonical order with duplicates dropped, so every witness index in
    // every report resolves against the one printed element list.
    std::sort(family.begin(), family.end(),
              [](const Subspace& a, const Subspace& b) { return compare(a, b) < 0; });
    family.erase(std::unique(family.begin(), family.end()), family.end());

    Report report;
    report.command = "axioms";
    report.body["ambient_dim"] = doc.ambient_dim;
    report.body["source"] = source;
    report.body["family_size"] = family.size();
    nlohmann::ordered_json jelements = nlohmann::ordered_json::array();
    for (const auto& s : family) jelements.push_back(subspace_to_json(s));
    report.body["elements"] = std::move(jelements);
    report.body["reports"] = nlohmann::ordered_json::array();

    std::ostringstream text;
    text << "axiom survey over " << family.size() << " subspaces (ambient dimension "
         << doc.ambient_dim << ", source: " << source << ")\n";
    text << "elements in canonical order:\n";
    for (std::size_t k = 0; k < family.size(); ++k)
        text << "  s" << k << ": dim " << family[k].dim() << "  " << family[k].str() << "\n";
    text << "axioms:\n";

    const auto [closure_meet, closure_join] = check_closure(family);
    report.body["reports"].push_back(axiom_report_to_json(closure_meet));
    report.body["reports"].push_back(axiom_report_to_json(closure_join));
    append_axiom_line(text, closure_meet);
    append_axiom_line(text, closure_join);

    if (!closure_meet.holds || !closure_join.holds) {
        text << "family is not closed; axiom checks skipped\n";
        report.body["checks_skipped"] = true;
        report.text = text.str();
        report.exit_code = 1;
        return report;
    }

    const SubspaceLattice l = SubspaceLattice::create(family);
    const AxiomReport distributive = check_distributive(l);
    const AxiomReport modular = check_modular_identity(l);
    report.body["reports"].push_back(axiom_report_to_json(distributive));
    report.body["reports"].push_back(axiom_report_to_json(modular));
    append_axiom_line(text, distributive);
    append_axiom_line(text, modular);
    if (l.has_complement_map()) {
        const AxiomReport orthomodular = check_orthomodular(l);
        report.body["reports"].push_back(axiom_report_to_json(orthomodular));
        append_axiom_line(text, orthomodular);
    } else {
        text << "  orthomodular: not applicable (family is not closed under orthocomplement)\n";
    }

    report.text = text.str();
    if (format == Format::Dot) report.dot = hasse_dot(l);
    report.exit_code = 0;
    return report;
}

namespace {

class DemoFailure : public Error {
public:
    using Error::Error;
};

void check(bool ok, const std::string& claim) {
    if (!ok) throw DemoFailure("assertion failed: " + claim);
}

} // namespace

Report cmd_demo_spin_half() {
    Report report;
    report.command = "demo";
    std::ostringstream text;
    std::size_t assertions = 0;
    auto assert_line = [&](bool ok, const std::string& claim) {
        ++assertions;
        check(ok, claim);
    };

    try {
        const Projector p1z = spin::p1_z();
        const Projector p2z = spin::p2_z();
        const Projector p1x = spin::p1_x();
        const Projector p2x = spin::p2_x();
        const Projector p1y = spin::p1_y();
        const Projector p2y = spin::p2_y();

        text << "spin-half walkthrough (ambient dimension 2)\n\n";
        text << "projectors:\n";
        text << "  P1(z) = " << p1z.matrix().str() << "\n";
        text << "  P2(z) = " << p2z.matrix().str() << "\n";
        text << "  P1(x) = " << p1x.matrix().str() << "\n";
        text << "  P2(x) = " << p2x.matrix().str() << "\n";
        text << "  P1(y) = " << p1y.matrix().str() << "\n";
        text << "  P2(y) = " << p2y.matrix().str() << "\n\n";

        const SubspaceLattice collection = spin::eigenline_lattice();
        text << "column-space collection L(C^2), canonical order:\n";
        append_elements(text, collection);
        assert_line(collection.size() == 8, "the collection has 8 elements");
        const std::vector<Subspace> expected{
            Subspace::zero(2), ran(p1z), ran(p2z), ran(p1x),
            ran(p2x),          ran(p1y), ran(p2y), Subspace::full(2)};
        for (const auto& s : expected)
            assert_line(collection.contains(s), "expected element " + s.str());
        text << "contains {0}, the six eigenlines, and C^2 ... ok\n\n";

        text << "meets of incompatible column spaces:\n";
        const Subspace m1 = meet(ran(p1z), ran(p1x));
        const Subspace m2 = meet(ran(p2z), ran(p1x));
        text << "  ran P1(z) ^ ran P1(x) = " << m1.str() << "\n";
        text << "  ran P2(z) ^ ran P1(x) = " << m2.str() << "\n";
        assert_line(m1.is_zero(), "ran P1(z) ^ ran P1(x) = {0}");
        assert_line(m2.is_zero(), "ran P2(z) ^ ran P1(x) = {0}");
        text << "both meets are {0} ... ok\n\n";

        text << "join via orthocomplements:\n";
        const Subspace c1 = orthocomplement(ran(p1z));
        const Subspace c2 = orthocomplement(ran(p2z));
        const Subspace inner = meet(c1, c2);
        const Subspace joined = orthocomplement(inner);
        text << "  ran P1(z)^perp = " << c1.str() << "\n";
        text << "  ran P2(z)^perp = " << c2.str() << "\n";
        text << "  their meet = " << inner.str() << "\n";
        text << "  complement of the meet = " << joined.str() << "\n";
        assert_line(joined == join(ran(p1z), ran(p2z)),
                    "the complement route agrees with the join");
        assert_line(joined.is_full(), "ran P1(z) v ran P2(z) = C^2");
        text << "join reaches C^2 ... ok\n\n";

        text << "distributive law at u = ran P1(x), v = ran P1(z), w = ran P2(z):\n";
        const Subspace lhs = meet(ran(p1x), join(ran(p1z), ran(p2z)));
        const Subspace rhs = join(meet(ran(p1x), ran(p1z)), meet(ran(p1x), ran(p2z)));
        text << "  u ^ (v v w) = " << lhs.str() << "\n";
        text << "  (u^v) v (u^w) = " << rhs.str() << "\n";
        assert_line(lhs == ran(p1x), "the left side is the ran P1(x) line");
        assert_line(rhs.is_zero(), "the right side is {0}");
        assert_line(lhs != rhs, "the distributive law fails at this triple");
        text << "sides differ, distributivity fails ... ok\n\n";

        text << "modular identity at u = ran P1(z), v = ran P2(z), w = ran P1(x):\n";
        const Subspace uw = meet(ran(p1z), ran(p1x));
        const Subspace U = join(uw, meet(ran(p2z), ran(p1x)));
        const Subspace V = meet(join(uw, ran(p2z)), ran(p1x));
        text << "  U = (u^w) v (v^w) = " << U.str() << "\n";
        text << "  V = ((u^w) v v) ^ w = " << V.str() << "\n";
        assert_line(U == V, "U = V");
        assert_line(U.is_zero(), "U = {0}");
        text << "the modular identity holds at the triple ... ok\n\n";

        text << "context lattices:\n";
        std::vector<SubspaceLattice> lattices;
        for (const auto& ctx : spin::contexts()) {
            const SubspaceLattice l = context_lattice(ctx);
            lattices.push_back(l);
            text << "  L(" << ctx.label() << "):";
            for (std::size_t k = 0; k < l.size(); ++k) text << (k ? ", " : " ") << l[k].str();
            text << "\n";
            assert_line(l.size() == 4, "L(" + ctx.label() + ") has 4 elements");
            assert_line(check_distributive(l).holds, "L(" + ctx.label() + ") is distributive");
            assert_line(check_orthomodular(l).holds, "L(" + ctx.label() + ") is orthomodular");
        }
        text << "each has 4 elements, distributive and orthomodular ... ok\n\n";

        text << "intersection of the context lattices:\n";
        const SubspaceLattice common = intersect_lattices(lattices);
        text << "  L =";
        for (std::size_t k = 0; k < common.size(); ++k)
            text << (k ? ", " : " ") << common[k].str();
        text << "\n";
        assert_line(common.size() == 2, "only {0} and C^2 survive");
        text << "only the trivial subspaces survive ... ok\n\n";

        text << "algebra generated by the six projectors:\n";
        const IrreducibilityResult burnside = is_irreducible(spin::generator_matrices());
        text << "  closure dimension " << burnside.span.dimension() << " of 4\n";
        assert_line(burnside.span.dimension() == 4, "the closure spans the full algebra");
        assert_line(burnside.irreducible, "the projector set acts irreducibly");
        text << "full matrix algebra, irreducible ... ok\n\n";

        text << "membership of the meet operands:\n";
        const bool in1 = common.contains(ran(p1z));
        const bool in2 = common.contains(ran(p1x));
        text << "  ran P1(z) in L: " << (in1 ? "yes" : "no") << "\n";
        text << "  ran P1(x) in L: " << (in2 ? "yes" : "no") << "\n";
        assert_line(!in1 && !in2, "both meet operands are outside L");
        text << "the meet ran P1(z) ^ ran P1(x) = {0} pairs operands absent from L ... ok\n\n";

        text << "all " << assertions << " assertions passed\n";
        report.exit_code = 0;
    } catch (const DemoFailure& e) {
        text << e.what() << "\n";
        report.exit_code = 1;
    }

    report.body["assertions"] = assertions;
    report.body["passed"] = report.exit_code == 0;
    report.text = text.str();
    return report;
}

} // namespace sublat::cli
