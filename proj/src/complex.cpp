#include "equilef/complex.hpp"

#include <algorithm>

#include "equilef/errors.hpp"

namespace equilef {

int StratumComponent::rank(std::size_t degree) const {
    return degree < chain_ranks.size() ? chain_ranks[degree] : 0;
}

std::optional<int> StratumComponent::local_index(int g) const {
    if (g < 0 || g >= static_cast<int>(weyl.project.size())) return std::nullopt;
    int p = weyl.project[g];
    if (p < 0) return std::nullopt;
    auto it = std::lower_bound(stabilizer.members.begin(), stabilizer.members.end(), p);
    if (it == stabilizer.members.end() || *it != p) return std::nullopt;
    return static_cast<int>(it - stabilizer.members.begin());
}

int StratumComponent::global_element(int q) const { return weyl.lift[stabilizer.members[q]]; }

StratumComponent make_component(const FiniteGroup& group, const std::vector<std::vector<Subgroup>>& classes,
                                std::string id, const Subgroup& isotropy,
                                const std::optional<Subgroup>& stabilizer_in_weyl, const Pi1Descriptor& pi1,
                                std::vector<int> chain_ranks) {
    if (subgroup_closure(group, isotropy.members) != isotropy)
        throw Error(ErrorKind::InvalidArgument, "isotropy of " + id + " is not a subgroup");
    StratumComponent c;
    c.id = std::move(id);
    c.isotropy = isotropy;
    c.isotropy_class = subgroup_class_index(group, classes, isotropy);
    c.weyl = weyl_group(group, isotropy);
    if (stabilizer_in_weyl) {
        if (subgroup_closure(c.weyl.quotient, stabilizer_in_weyl->members) != *stabilizer_in_weyl)
            throw Error(ErrorKind::InvalidArgument, "stabilizer of " + c.id + " is not a subgroup of the Weyl group");
        c.stabilizer = *stabilizer_in_weyl;
    } else {
        c.stabilizer = whole_group(c.weyl.quotient);
    }
    FiniteGroup fp = restrict_to(c.weyl.quotient, c.stabilizer);
    c.finite_ring = CoefficientGroup::finite(fp);
    if (pi1.rank == 0) {
        c.ring = c.finite_ring;
    } else {
        c.ring = CoefficientGroup::abelian_by_finite(fp, pi1.rank, pi1.action, pi1.cocycle);
    }
    for (int r : chain_ranks)
        if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative chain rank in " + c.id);
    c.chain_ranks = std::move(chain_ranks);
    for (std::size_t d = 0; d < c.chain_ranks.size(); ++d) {
        std::size_t below = d == 0 ? 0 : static_cast<std::size_t>(c.chain_ranks[d - 1]);
        c.boundaries.emplace_back(c.ring, below, static_cast<std::size_t>(c.chain_ranks[d]));
    }
    return c;
}

const ComponentMap* EquivariantMapData::find(const std::string& id) const {
    auto it = components.find(id);
    return it == components.end() ? nullptr : &it->second;
}

const StratumComponent* GCWBundle::find(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

void compare_matrices(ValidationReport& report, const char* kind, const std::string& component, int degree,
                      const GroupRingMatrix& lhs, const GroupRingMatrix& rhs, const std::string& what) {
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (!(lhs.at(i, j) == rhs.at(i, j)))
                report.issues.push_back({kind, component, degree, static_cast<int>(i), static_cast<int>(j), what});
}

bool shape_ok(ValidationReport& report, const std::string& component, int degree, const GroupRingMatrix& m,
              std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() == rows && m.cols() == cols) return true;
    report.issues.push_back({"ShapeMismatch", component, degree, -1, -1,
                             what + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                 std::to_string(rows) + "x" + std::to_string(cols)});
    return false;
}

}  // namespace

ValidationReport validate(const GCWBundle& bundle, const EquivariantMapData& map) {
    ValidationReport report;
    std::vector<std::string> seen;
    for (const auto& c : bundle.components) {
        if (std::find(seen.begin(), seen.end(), c.id) != seen.end())
            report.issues.push_back({"DuplicateComponent", c.id, -1, -1, -1, "component id used twice"});
        seen.push_back(c.id);
        if (c.isotropy_class >= bundle.subgroup_classes.size())
            report.issues.push_back({"UnknownIsotropyClass", c.id, -1, -1, -1, "isotropy class out of range"});

        bool shapes = c.boundaries.size() == c.chain_ranks.size();
        if (!shapes)
            report.issues.push_back({"ShapeMismatch", c.id, -1, -1, -1, "one boundary matrix per degree expected"});
        for (std::size_t d = 0; shapes && d < c.boundaries.size(); ++d) {
            if (c.boundaries[d].ring() != c.ring) {
                report.issues.push_back({"RingMismatch", c.id, static_cast<int>(d), -1, -1, "boundary over a foreign ring"});
                shapes = false;
                continue;
            }
            std::size_t below = d == 0 ? 0 : static_cast<std::size_t>(c.rank(d - 1));
            shapes &= shape_ok(report, c.id, static_cast<int>(d), c.boundaries[d], below,
                               static_cast<std::size_t>(c.rank(d)), "boundary");
        }
        if (shapes) {
            for (std::size_t d = 2; d < c.boundaries.size(); ++d) {
                GroupRingMatrix sq = c.boundaries[d - 1] * c.boundaries[d];
                GroupRingMatrix zero(c.ring, sq.rows(), sq.cols());
                compare_matrices(report, "BoundaryNotSquareZero", c.id, static_cast<int>(d), sq, zero,
                                 "boundary of boundary is nonzero");
            }
        }

        const ComponentMap* m = map.find(c.id);
        if (!m) {
            report.issues.push_back({"MissingMap", c.id, -1, -1, -1, "no map record for component"});
            continue;
        }
        if (!m->self_mapped) {
            if (!m->matrices.empty())
                report.issues.push_back({"UnexpectedMatrices", c.id, -1, -1, -1,
                                         "matrices given for a component that is not self-mapped"});
            continue;
        }
        auto bad = twist_violations(*c.ring, m->twist);
        for (const auto& msg : bad) report.issues.push_back({"TwistNotHomomorphism", c.id, -1, -1, -1, msg});
        if (m->matrices.size() != c.chain_ranks.size()) {
            report.issues.push_back({"ShapeMismatch", c.id, -1, -1, -1,
                                     "map has " + std::to_string(m->matrices.size()) + " degrees, complex has " +
                                         std::to_string(c.chain_ranks.size())});
            continue;
        }
        bool mshapes = true;
        for (std::size_t d = 0; d < m->matrices.size(); ++d) {
            if (m->matrices[d].ring() != c.ring) {
                report.issues.push_back({"RingMismatch", c.id, static_cast<int>(d), -1, -1, "map matrix over a foreign ring"});
                mshapes = false;
                continue;
            }
            auto r = static_cast<std::size_t>(c.rank(d));
            mshapes &= shape_ok(report, c.id, static_cast<int>(d), m->matrices[d], r, r, "map matrix");
        }
        if (!mshapes || !shapes || !bad.empty()) continue;
        auto phi = [&](const GroupElement& g) { return apply_twist(*c.ring, m->twist, g); };
        for (std::size_t d = 1; d < m->matrices.size(); ++d) {
            GroupRingMatrix lhs = c.boundaries[d] * m->matrices[d];
            GroupRingMatrix rhs = m->matrices[d - 1] * map_entries(c.boundaries[d], phi);
            compare_matrices(report, "ChainMapViolation", c.id, static_cast<int>(d), lhs, rhs,
                             "boundary∘f differs from f∘boundary");
        }
    }
    for (const auto& [id, m] : map.components)
        if (!bundle.find(id)) report.issues.push_back({"UnknownComponent", id, -1, -1, -1, "map names a missing component"});
    return report;
}

void require_valid(const GCWBundle& bundle, const EquivariantMapData& map) {
    auto report = validate(bundle, map);
    if (report.ok()) return;
    const auto& i = report.issues.front();
    throw Error(ErrorKind::ValidationFailed, i.kind + " in " + i.component + ": " + i.message);
}

int euler_characteristic_stratum(const StratumComponent& c) {
    int chi = 0;
    for (std::size_t d = 0; d < c.chain_ranks.size(); ++d) chi += d % 2 ? -c.chain_ranks[d] : c.chain_ranks[d];
    return chi;
}

EquivariantMapData identity_map(const GCWBundle& bundle) {
    EquivariantMapData m;
    for (const auto& c : bundle.components) {
        ComponentMap cm;
        cm.self_mapped = true;
        cm.twist = TwistData::identity(*c.ring);
        for (int r : c.chain_ranks) cm.matrices.push_back(GroupRingMatrix::identity(c.ring, static_cast<std::size_t>(r)));
        m.components.emplace(c.id, std::move(cm));
    }
    return m;
}

GroupRingMatrix project_to_finite(const StratumComponent& c, const GroupRingMatrix& m) {
    require_same_ring(m.ring(), c.ring, "projection to the finite part");
    GroupRingMatrix r(c.finite_ring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            RingElement e(c.finite_ring);
            for (const auto& [g, x] : m.at(i, j).terms()) e.add_term(GroupElement{g.q, {}}, x);
            r.set(i, j, std::move(e));
        }
    return r;
}

}  // namespace equilef
