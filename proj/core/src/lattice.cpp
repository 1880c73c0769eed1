#include "sublat/lattice.hpp"

#include <sstream>

#include "sublat/errors.hpp"

namespace sublat {

std::string_view axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::ClosureMeet: return "closure-meet";
        case Axiom::ClosureJoin: return "closure-join";
        case Axiom::Distributive: return "distributive";
        case Axiom::ModularIdentity: return "modular-identity";
        case Axiom::Orthomodular: return "orthomodular";
    }
    return "unknown";
}

namespace {

struct OpTables {
    std::vector<std::vector<std::size_t>> meet_of;
    std::vector<std::vector<std::size_t>> join_of;
};

/// Index tables for meet and join; requires l closed under both.
OpTables build_tables(const SubspaceLattice& l) {
    const std::size_t k = l.size();
    OpTables t{std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k)),
               std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k))};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const auto m = l.index_of(meet(l[i], l[j]));
            const auto v = l.index_of(join(l[i], l[j]));
            if (!m || !v) {
                std::ostringstream os;
                os << "lattice: family is not closed under " << (m ? "join" : "meet")
                   << " at element pair (" << i << ", " << j << ")";
                throw LatticeError(LatticeError::Kind::NotClosed, os.str());
            }
            t.meet_of[i][j] = t.meet_of[j][i] = *m;
            t.join_of[i][j] = t.join_of[j][i] = *v;
        }
    return t;
}

bool family_contains(std::span<const Subspace> elements, const Subspace& s) {
    for (const auto& e : elements)
        if (e == s) return true;
    return false;
}

} // namespace

std::pair<AxiomReport, AxiomReport> check_closure(std::span<const Subspace> elements) {
    if (elements.empty())
        throw LatticeError(LatticeError::Kind::EmptyFamily, "closure: family is empty");
    const std::size_t ambient = elements.front().ambient_dim();
    for (const auto& s : elements)
        if (s.ambient_dim() != ambient)
            throw DimensionError("closure: elements have mixed ambient dimensions");

    AxiomReport meet_report{Axiom::ClosureMeet};
    AxiomReport join_report{Axiom::ClosureJoin};
    for (std::size_t i = 0; i < elements.size() && meet_report.holds; ++i)
        for (std::size_t j = i; j < elements.size() && meet_report.holds; ++j) {
            Subspace m = meet(elements[i], elements[j]);
            if (!family_contains(elements, m)) {
                meet_report.holds = false;
                meet_report.counterexample = Counterexample{{i, j}, std::move(m), std::nullopt};
            }
        }
    for (std::size_t i = 0; i < elements.size() && join_report.holds; ++i)
        for (std::size_t j = i; j < elements.size() && join_report.holds; ++j) {
            Subspace v = join(elements[i], elements[j]);
            if (!family_contains(elements, v)) {
                join_report.holds = false;
                join_report.counterexample = Counterexample{{i, j}, std::move(v), std::nullopt};
            }
        }
    return {std::move(meet_report), std::move(join_report)};
}

AxiomReport check_distributive(const SubspaceLattice& l) {
    const OpTables t = build_tables(l);
    AxiomReport report{Axiom::Distributive};
    for (std::size_t u = 0; u < l.size(); ++u)
        for (std::size_t v = 0; v < l.size(); ++v)
            for (std::size_t w = 0; w < l.size(); ++w) {
                const std::size_t lhs = t.meet_of[u][t.join_of[v][w]];
                const std::size_t rhs = t.join_of[t.meet_of[u][v]][t.meet_of[u][w]];
                if (lhs != rhs) {
                    report.holds = false;
                    report.counterexample = Counterexample{{u, v, w}, l[lhs], l[rhs]};
                    return report;
                }
            }
    return report;
}

AxiomReport check_modular_identity(const SubspaceLattice& l, const Subspace& u,
                                   const Subspace& v, const Subspace& w) {
    const auto iu = l.index_of(u);
    const auto iv = l.index_of(v);
    const auto iw = l.index_of(w);
    if (!iu || !iv || !iw)
        throw LatticeError(LatticeError::Kind::ElementNotInLattice,
                           "modular identity: triple members must be lattice elements");

    const Subspace uw = meet(u, w);
    Subspace lhs = join(uw, meet(v, w));
    Subspace rhs = meet(join(uw, v), w);

    AxiomReport report{Axiom::ModularIdentity};
    report.modular_form = ModularForm::FixedTriple;
    if (lhs != rhs) {
        report.holds = false;
        report.counterexample = Counterexample{{*iu, *iv, *iw}, std::move(lhs), std::move(rhs)};
    }
    return report;
}

AxiomReport check_modular_identity(const SubspaceLattice& l) {
    const OpTables t = build_tables(l);
    AxiomReport report{Axiom::ModularIdentity};
    report.modular_form = ModularForm::WholeLattice;
    report.note = "quantified over all triples with v <= w";
    for (std::size_t u = 0; u < l.size(); ++u)
        for (std::size_t v = 0; v < l.size(); ++v)
            for (std::size_t w = 0; w < l.size(); ++w) {
                if (t.meet_of[v][w] != v) continue;
                const std::size_t lhs = t.join_of[v][t.meet_of[u][w]];
                const std::size_t rhs = t.meet_of[t.join_of[v][u]][w];
                if (lhs != rhs) {
                    report.holds = false;
                    report.counterexample = Counterexample{{u, v, w}, l[lhs], l[rhs]};
                    return report;
                }
            }
    return report;
}

AxiomReport check_orthomodular(const SubspaceLattice& l) {
    AxiomReport report{Axiom::Orthomodular};
    for (std::size_t u = 0; u < l.size(); ++u) {
        const Subspace& cu = l[l.complement_index(u)];
        for (std::size_t v = 0; v < l.size(); ++v) {
            if (!leq(l[u], l[v])) continue;
            Subspace rebuilt = join(l[u], meet(l[v], cu));
            if (rebuilt != l[v]) {
                report.holds = false;
                report.counterexample = Counterexample{{u, v}, l[v], std::move(rebuilt)};
                return report;
            }
        }
    }
    return report;
}

bool replay_counterexample(std::span<const Subspace> elements, const AxiomReport& report) {
    if (report.holds) return !report.counterexample.has_value();
    if (!report.counterexample) return false;
    const Counterexample& ce = *report.counterexample;
    for (const std::size_t k : ce.indices)
        if (k >= elements.size()) return false;

    switch (report.axiom) {
        case Axiom::ClosureMeet:
        case Axiom::ClosureJoin: {
            if (ce.indices.size() != 2 || ce.rhs) return false;
            const Subspace& a = elements[ce.indices[0]];
            const Subspace& b = elements[ce.indices[1]];
            const Subspace out =
                report.axiom == Axiom::ClosureMeet ? meet(a, b) : join(a, b);
            return out == ce.lhs && !family_contains(elements, out);
        }
        case Axiom::Distributive: {
            if (ce.indices.size() != 3 || !ce.rhs) return false;
            const Subspace& u = elements[ce.indices[0]];
            const Subspace& v = elements[ce.indices[1]];
            const Subspace& w = elements[ce.indices[2]];
            const Subspace lhs = meet(u, join(v, w));
            const Subspace rhs = join(meet(u, v), meet(u, w));
            return lhs == ce.lhs && rhs == *ce.rhs && lhs != rhs;
        }
        case Axiom::ModularIdentity: {
            if (ce.indices.size() != 3 || !ce.rhs || !report.modular_form) return false;
            const Subspace& u = elements[ce.indices[0]];
            const Subspace& v = elements[ce.indices[1]];
            const Subspace& w = elements[ce.indices[2]];
            Subspace lhs = ce.lhs;
            Subspace rhs = *ce.rhs;
            if (*report.modular_form == ModularForm::FixedTriple) {
                const Subspace uw = meet(u, w);
                lhs = join(uw, meet(v, w));
                rhs = meet(join(uw, v), w);
            } else {
                if (!leq(v, w)) return false;
                lhs = join(v, meet(u, w));
                rhs = meet(join(v, u), w);
            }
            return lhs == ce.lhs && rhs == *ce.rhs && lhs != rhs;
        }
        case Axiom::Orthomodular: {
            if (ce.indices.size() != 2 || !ce.rhs) return false;
            const Subspace& u = elements[ce.indices[0]];
            const Subspace& v = elements[ce.indices[1]];
            if (!leq(u, v)) return false;
            const Subspace rebuilt = join(u, meet(v, orthocomplement(u)));
            return v == ce.lhs && rebuilt == *ce.rhs && rebuilt != v;
        }
    }
    return false;
}

std::string hasse_dot(const SubspaceLattice& l) {
    const std::size_t k = l.size();
    std::vector<std::vector<bool>> less(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            less[i][j] = i != j && leq(l[i], l[j]);

    std::ostringstream os;
    os << "digraph {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < k; ++i)
        os << "  s" << i << " [label=\"dim " << l[i].dim() << ": " << l[i].str() << "\"];\n";
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!less[i][j]) continue;
            bool covering = true;
            for (std::size_t m = 0; m < k && covering; ++m)
                if (less[i][m] && less[m][j]) covering = false;
            if (covering) os << "  s" << i << " -> s" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace sublat
