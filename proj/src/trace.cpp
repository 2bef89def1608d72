#include "equilef/trace.hpp"

#include "equilef/errors.hpp"

namespace equilef {

Rational ShadowVector::coefficient(const ClassLabel& label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void ShadowVector::add(const ClassLabel& label, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(label, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

ShadowVector& ShadowVector::operator+=(const ShadowVector& other) {
    for (const auto& [l, c] : other.coeffs_) add(l, c);
    return *this;
}

ShadowVector ShadowVector::scaled(const Rational& c) const {
    ShadowVector r;
    for (const auto& [l, x] : coeffs_) r.add(l, x * c);
    return r;
}

ShadowVector hattori_stallings_trace(const GroupRingMatrix& m, const Classifier& classifier) {
    require_classifier_ring(classifier, m.ring());
    if (!m.square()) throw Error(ErrorKind::ShapeMismatch, "trace of a non-square matrix");
    ShadowVector s;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [g, c] : m.at(i, i).terms()) s.add(classifier.canonicalize(g), c);
    return s;
}

ShadowVector alternating_chain_trace(const std::vector<GroupRingMatrix>& matrices, const Classifier& classifier) {
    ShadowVector s;
    for (std::size_t d = 0; d < matrices.size(); ++d)
        s += hattori_stallings_trace(matrices[d], classifier).scaled(d % 2 ? -1 : 1);
    return s;
}

Rational specialize_at(const GroupRingMatrix& m, int g, const std::vector<int>& finite_twist) {
    const auto& ring = *m.ring();
    if (!ring.is_finite()) throw Error(ErrorKind::WrongRingKind, "specialization needs a finite coefficient group");
    if (!m.square()) throw Error(ErrorKind::ShapeMismatch, "trace of a non-square matrix");
    const FiniteGroup& q = ring.finite_part();
    if (!finite_twist.empty() && static_cast<int>(finite_twist.size()) != q.order())
        throw Error(ErrorKind::InvalidTwist, "finite twist has the wrong size");
    Rational total = 0;
    for (int h = 0; h < q.order(); ++h) {
        int psi_h = finite_twist.empty() ? h : finite_twist[h];
        GroupElement y{q.mul(q.mul(h, g), q.inv(psi_h)), {}};
        for (std::size_t i = 0; i < m.rows(); ++i) total += m.at(i, i).coefficient(y);
    }
    return total;
}

Rational alternating_specialization(const std::vector<GroupRingMatrix>& matrices, int g,
                                    const std::vector<int>& finite_twist) {
    Rational total = 0;
    for (std::size_t d = 0; d < matrices.size(); ++d) {
        Rational t = specialize_at(matrices[d], g, finite_twist);
        total += d % 2 ? -t : t;
    }
    return total;
}

ShadowVector lattice_trace(const std::vector<GroupRingMatrix>& matrices, const Classifier& nonequivariant) {
    if (nonequivariant.kind() != ClassifierKind::Nonequivariant)
        throw Error(ErrorKind::ClassifierMismatch, "lattice trace needs a nonequivariant classifier");
    const auto& ring = *nonequivariant.ring();
    const int e = ring.finite_part().identity();
    ShadowVector s;
    for (std::size_t d = 0; d < matrices.size(); ++d) {
        const auto& m = matrices[d];
        require_classifier_ring(nonequivariant, m.ring());
        if (!m.square()) throw Error(ErrorKind::ShapeMismatch, "trace of a non-square matrix");
        const int sign = d % 2 ? -1 : 1;
        for (int q = 0; q < ring.finite_part().order(); ++q) {
            GroupElement s_q = ring.lift(q);
            GroupElement s_inv = ring.inverse(s_q);
            GroupElement phi_s = apply_twist(ring, nonequivariant.twist(), s_q);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (const auto& [y, c] : m.at(i, i).terms()) {
                    GroupElement z = ring.multiply(ring.multiply(s_inv, y), phi_s);
                    if (z.q == e) s.add(nonequivariant.canonicalize(z), c * sign);
                }
        }
    }
    return s;
}

}  // namespace equilef
