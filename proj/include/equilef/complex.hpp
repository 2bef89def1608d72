#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equilef/classes.hpp"
#include "equilef/group.hpp"
#include "equilef/ring.hpp"

namespace equilef {

struct Pi1Descriptor {
    int rank = 0;
    std::vector<IntMatrix> action;   // per stabilizer element (local index)
    std::vector<IntVector> cocycle;  // q1 * |Q| + q2
};

struct StratumComponent {
    std::string id;
    Subgroup isotropy;
    std::size_t isotropy_class = 0;
    WeylGroup weyl;
    Subgroup stabilizer;         // subgroup of weyl.quotient
    RingPtr ring;                // over π₁ ⋊ stabilizer
    RingPtr finite_ring;         // over the stabilizer alone
    std::vector<int> chain_ranks;
    std::vector<GroupRingMatrix> boundaries;  // boundaries[d] : C_d → C_{d-1}; [0] is 0 × ranks[0]

    int rank(std::size_t degree) const;
    // G element in the normalizer → finite-part index, nullopt outside the stabilizer.
    std::optional<int> local_index(int g) const;
    // finite-part index → least G element of the coset
    int global_element(int q) const;
};

// Builds the Weyl data, stabilizer and rings; boundaries are left as zero matrices.
StratumComponent make_component(const FiniteGroup& group, const std::vector<std::vector<Subgroup>>& classes,
                                std::string id, const Subgroup& isotropy,
                                const std::optional<Subgroup>& stabilizer_in_weyl, const Pi1Descriptor& pi1,
                                std::vector<int> chain_ranks);

struct ComponentMap {
    bool self_mapped = false;
    TwistData twist;
    std::vector<GroupRingMatrix> matrices;  // by degree; empty unless self_mapped
};

struct EquivariantMapData {
    std::map<std::string, ComponentMap> components;

    const ComponentMap* find(const std::string& id) const;
};

struct GCWBundle {
    FiniteGroup group;
    std::vector<std::vector<Subgroup>> subgroup_classes;
    std::vector<StratumComponent> components;
    std::map<std::string, std::string> metadata;

    const StratumComponent* find(const std::string& id) const;
};

struct ValidationIssue {
    std::string kind;
    std::string component;
    int degree = -1;
    int row = -1;
    int col = -1;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
};

ValidationReport validate(const GCWBundle& bundle, const EquivariantMapData& map);
void require_valid(const GCWBundle& bundle, const EquivariantMapData& map);

int euler_characteristic_stratum(const StratumComponent& c);

// Identity on every component.
EquivariantMapData identity_map(const GCWBundle& bundle);

// Entrywise forgetting of the lattice part, landing over finite_ring.
GroupRingMatrix project_to_finite(const StratumComponent& c, const GroupRingMatrix& m);

}  // namespace equilef
