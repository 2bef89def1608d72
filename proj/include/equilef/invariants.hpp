#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equilef/classes.hpp"
#include "equilef/complex.hpp"
#include "equilef/rational.hpp"

namespace equilef {

class ExtendedInvariant {
public:
    using Key = std::pair<std::string, ClassLabel>;

    const std::map<Key, Rational>& entries() const { return entries_; }
    Rational coefficient(const std::string& component, const ClassLabel& label) const;
    bool is_zero() const { return entries_.empty(); }
    bool is_integral() const;

    void add(const std::string& component, const ClassLabel& label, const Rational& c);

    bool operator==(const ExtendedInvariant&) const = default;

private:
    std::map<Key, Rational> entries_;
};

struct BurnsideVector {
    std::map<std::size_t, Rational> coeffs;  // subgroup class index → coefficient

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const BurnsideVector&) const = default;
};

struct FixedPointRow {
    std::string component;
    GroupElement element;  // finite part only for Lefschetz tables
    std::int64_t index = 0;
    std::string note;
};

using FixedPointTable = std::vector<FixedPointRow>;

struct PhiCopy {
    IntMatrix lattice_map;  // target rank × source rank
    IntVector offset;
};

// One entry per ordered pair (source at larger isotropy, target at smaller);
// each copy is one embedding of the source stratum in the target stratum.
struct PhiEntry {
    std::string source;
    std::string target;
    std::vector<PhiCopy> copies;
};

// Classes of the finite part under ψ-twisted conjugacy.
Classifier lefschetz_classifier(const StratumComponent& c, const ComponentMap& m);
// Classes of the full coefficient group under the twisted relation.
Classifier reidemeister_classifier(const StratumComponent& c, const ComponentMap& m);

ExtendedInvariant extended_global_lefschetz(const GCWBundle& bundle, const EquivariantMapData& map);
// A non-null warnings list downgrades NonIntegralCoefficient to a warning.
ExtendedInvariant assemble_geometric_lefschetz(const GCWBundle& bundle, const EquivariantMapData& map,
                                               const FixedPointTable& table,
                                               std::vector<std::string>* warnings = nullptr);
// Identity-class coefficient per self-mapped component.
std::map<std::string, Rational> identity_coefficients(const ExtendedInvariant& ext, const GCWBundle& bundle);
BurnsideVector plain_global_lefschetz(const ExtendedInvariant& ext, const GCWBundle& bundle);

struct CrosscheckRow {
    std::string component;
    int element = 0;  // finite-part index
    Rational integer_trace;
    Rational predicted;

    bool ok() const { return integer_trace == predicted; }
};

struct CrosscheckReport {
    std::vector<CrosscheckRow> rows;

    bool ok() const;
};

CrosscheckReport crosscheck_specialization(const GCWBundle& bundle, const EquivariantMapData& map);

ExtendedInvariant extended_global_reidemeister(const GCWBundle& bundle, const EquivariantMapData& map);
ExtendedInvariant assemble_geometric_reidemeister(const GCWBundle& bundle, const EquivariantMapData& map,
                                                  const FixedPointTable& table,
                                                  std::vector<std::string>* warnings = nullptr);
// Keeps the classes meeting the identity coset.
ExtendedInvariant plain_reidemeister(const ExtendedInvariant& ext, const GCWBundle& bundle);
// Twisted class ↦ finite-part class.
ExtendedInvariant collapse_to_lefschetz(const ExtendedInvariant& reidemeister, const GCWBundle& bundle,
                                        const EquivariantMapData& map);

struct NielsenClass {
    ClassLabel label;
    Rational relative_index;
    Rational total_index;
    bool essential = false;
};

struct NielsenLevel {
    std::string component;
    std::vector<NielsenClass> classes;
};

struct NielsenFunction {
    std::map<std::size_t, std::int64_t> values;  // every subgroup class, zeros included
    std::vector<NielsenLevel> levels;

    bool is_zero() const;
};

NielsenFunction nielsen_number(const GCWBundle& bundle, const EquivariantMapData& map,
                               const std::vector<PhiEntry>& phi);

struct ZeroEquivalenceReport {
    bool extended_lefschetz_zero = false;
    bool plain_lefschetz_zero = false;       // every component's identity coefficient
    bool burnside_lefschetz_zero = false;    // summed over orbit types
    bool stratum_traces_zero = false;
    bool extended_reidemeister_zero = false;
    bool plain_reidemeister_zero = false;
    bool nielsen_zero = false;

    bool prenielsen_agree() const { return stratum_traces_zero == plain_lefschetz_zero; }
    bool nielsen_matches_plain() const { return nielsen_zero == plain_reidemeister_zero; }
    bool nielsen_matches_extended() const { return nielsen_zero == extended_reidemeister_zero; }
};

// Throws EquivalenceViolated when prenielsen_agree or nielsen_matches_plain fails.
ZeroEquivalenceReport zero_equivalence_report(const GCWBundle& bundle, const EquivariantMapData& map,
                                              const std::vector<PhiEntry>& phi);

}  // namespace equilef
