#pragma once

#include <map>
#include <vector>

#include "equilef/classes.hpp"
#include "equilef/rational.hpp"
#include "equilef/ring.hpp"

namespace equilef {

class ShadowVector {
public:
    const std::map<ClassLabel, Rational>& coeffs() const { return coeffs_; }
    Rational coefficient(const ClassLabel& label) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add(const ClassLabel& label, const Rational& c);
    ShadowVector& operator+=(const ShadowVector& other);
    ShadowVector scaled(const Rational& c) const;

    bool operator==(const ShadowVector&) const = default;

private:
    std::map<ClassLabel, Rational> coeffs_;
};

ShadowVector hattori_stallings_trace(const GroupRingMatrix& m, const Classifier& classifier);
ShadowVector alternating_chain_trace(const std::vector<GroupRingMatrix>& matrices, const Classifier& classifier);

// Integer trace of x ↦ f(x)·g⁻¹ on the underlying free abelian group, where f
// is ψ-semilinear for the given finite twist (identity when empty). A fixed
// point of f·g⁻¹ is a point x with f(x) = x·g.
Rational specialize_at(const GroupRingMatrix& m, int g, const std::vector<int>& finite_twist = {});
Rational alternating_specialization(const std::vector<GroupRingMatrix>& matrices, int g,
                                    const std::vector<int>& finite_twist = {});

// Alternating trace over ℤ[N], N the lattice, of the matrices viewed as maps of
// free ℤ[N]-modules on the basis e_i·(q, 0); labels from a Nonequivariant
// classifier.
ShadowVector lattice_trace(const std::vector<GroupRingMatrix>& matrices, const Classifier& nonequivariant);

}  // namespace equilef
