#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equilef/linalg.hpp"
#include "equilef/ring.hpp"

namespace equilef {

struct SmithNormalForm {
    IntMatrix input;
    IntVector d;  // min(rows, cols) invariant factors, nonnegative
    IntMatrix left;
    IntMatrix right;
    IntMatrix left_inverse;
    IntMatrix right_inverse;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// The endomorphism (q, v) ↦ (finite_twist[q], A·v + base_offset[q]).
struct TwistData {
    std::vector<int> finite_twist;
    IntMatrix lattice_twist;
    std::vector<IntVector> base_offset;

    static TwistData identity(const CoefficientGroup& ring);
    bool operator==(const TwistData&) const = default;
};

// Empty when the twist is a homomorphism of the coefficient group.
std::vector<std::string> twist_violations(const CoefficientGroup& ring, const TwistData& twist);
GroupElement apply_twist(const CoefficientGroup& ring, const TwistData& twist, const GroupElement& x);

struct ClassLabel {
    GroupElement rep;

    auto operator<=>(const ClassLabel&) const = default;
};

enum class ClassifierKind {
    PlainConjugacy,
    Twisted,
    // Only lattice moves: the semiconjugacy classes of the fundamental group
    // of the stratum itself.
    Nonequivariant,
};

class Classifier {
public:
    const RingPtr& ring() const { return ring_; }
    ClassifierKind kind() const { return kind_; }
    const TwistData& twist() const { return twist_; }

    ClassLabel canonicalize(const GroupElement& x) const;
    // h⁻¹·x·φ(h)
    GroupElement move(const GroupElement& x, const GroupElement& h) const;
    bool allows_move(const GroupElement& h) const;

    // nullopt when infinitely many classes; UnboundedOrbit past the bound.
    std::optional<std::size_t> class_count(std::size_t bound = 1'000'000) const;
    // Same, restricted to classes with the given finite part.
    std::optional<std::size_t> class_count_at(int q, std::size_t bound = 1'000'000) const;
    // |{h ∈ Q : h⁻¹·q·ψ(h) = q}|
    int stabilizer_order(int q) const;

    std::string format(const ClassLabel& label) const { return ring_->format(label.rep); }

private:
    friend Classifier plain_conjugacy_classifier(RingPtr ring);
    friend Classifier twisted_classifier(RingPtr ring, TwistData twist);
    friend Classifier nonequivariant_classifier(RingPtr ring, TwistData twist);

    Classifier(RingPtr ring, ClassifierKind kind, TwistData twist);
    IntVector reduce(int q, const IntVector& v) const;
    std::vector<IntVector> residues(int q, std::size_t bound) const;
    bool less(const GroupElement& a, const GroupElement& b) const;

    RingPtr ring_;
    ClassifierKind kind_;
    TwistData twist_;
    std::vector<SmithNormalForm> lattice_;  // per finite part q: SNF of ρ(q)A − I
};

Classifier plain_conjugacy_classifier(RingPtr ring);
Classifier twisted_classifier(RingPtr ring, TwistData twist);
Classifier nonequivariant_classifier(RingPtr ring, TwistData twist);

void require_classifier_ring(const Classifier& c, const RingPtr& ring);

using LabelMap = std::function<ClassLabel(const ClassLabel&)>;

// (q, v) ↦ (finite_map[q], lattice_map·v + offset), canonicalized at the target.
// An empty finite_map sends everything to the target identity.
LabelMap phi_pushforward(const Classifier& source, const Classifier& target, const IntMatrix& lattice_map,
                         const IntVector& offset, const std::vector<int>& finite_map = {});

}  // namespace equilef
