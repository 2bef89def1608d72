#include "equilef/classes.hpp"

#include <set>

#include "equilef/errors.hpp"

namespace equilef {

TwistData TwistData::identity(const CoefficientGroup& ring) {
    TwistData t;
    const int n = ring.finite_part().order();
    const auto r = static_cast<std::size_t>(ring.rank());
    for (int q = 0; q < n; ++q) t.finite_twist.push_back(q);
    t.lattice_twist = IntMatrix::identity(r);
    t.base_offset.assign(n, IntVector(r, 0));
    return t;
}

std::vector<std::string> twist_violations(const CoefficientGroup& ring, const TwistData& twist) {
    std::vector<std::string> out;
    const FiniteGroup& q = ring.finite_part();
    const int n = q.order();
    const auto r = static_cast<std::size_t>(ring.rank());
    if (static_cast<int>(twist.finite_twist.size()) != n) {
        out.push_back("finite twist must assign an image to each of the " + std::to_string(n) + " elements");
        return out;
    }
    for (int x : twist.finite_twist)
        if (x < 0 || x >= n) {
            out.push_back("finite twist image out of range");
            return out;
        }
    if (twist.lattice_twist.rows() != r || twist.lattice_twist.cols() != r)
        out.push_back("lattice twist must be " + std::to_string(r) + "x" + std::to_string(r));
    if (static_cast<int>(twist.base_offset.size()) != n) out.push_back("one base offset per finite-part element");
    for (const auto& b : twist.base_offset)
        if (b.size() != r) {
            out.push_back("base offset has the wrong length");
            break;
        }
    if (!out.empty()) return out;

    const auto& psi = twist.finite_twist;
    const auto& A = twist.lattice_twist;
    const auto& b = twist.base_offset;
    if (!is_zero(b[q.identity()])) out.push_back("base offset of the identity must vanish");
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (psi[q.mul(x, y)] != q.mul(psi[x], psi[y]))
                out.push_back("finite twist is not a homomorphism at (" + q.name(x) + ", " + q.name(y) + ")");
        if (!(A * ring.action(x) == ring.action(psi[x]) * A))
            out.push_back("lattice twist does not intertwine the action of " + q.name(x));
    }
    if (r > 0 && out.empty()) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                IntVector lhs = add(A * ring.cocycle(x, y), b[q.mul(x, y)]);
                IntVector rhs = add(add(b[x], ring.action(psi[x]) * b[y]), ring.cocycle(psi[x], psi[y]));
                if (lhs != rhs)
                    out.push_back("base offsets incompatible with the cocycle at (" + q.name(x) + ", " + q.name(y) + ")");
            }
    }
    return out;
}

GroupElement apply_twist(const CoefficientGroup& ring, const TwistData& twist, const GroupElement& x) {
    GroupElement r;
    r.q = twist.finite_twist[x.q];
    if (ring.rank() > 0) r.v = add(twist.lattice_twist * x.v, twist.base_offset[x.q]);
    return r;
}

Classifier::Classifier(RingPtr ring, ClassifierKind kind, TwistData twist)
    : ring_(std::move(ring)), kind_(kind), twist_(std::move(twist)) {
    auto bad = twist_violations(*ring_, twist_);
    if (!bad.empty()) throw Error(ErrorKind::InvalidTwist, bad.front());
    const auto n = static_cast<std::size_t>(ring_->rank());
    for (int q = 0; q < ring_->finite_part().order(); ++q) {
        IntMatrix m = n ? ring_->action(q) * twist_.lattice_twist - IntMatrix::identity(n) : IntMatrix();
        lattice_.push_back(smith_normal_form(m));
    }
}

Classifier plain_conjugacy_classifier(RingPtr ring) {
    if (!ring->is_finite()) throw Error(ErrorKind::WrongRingKind, "plain conjugacy needs a finite coefficient group");
    TwistData id = TwistData::identity(*ring);
    return Classifier(std::move(ring), ClassifierKind::PlainConjugacy, std::move(id));
}

Classifier twisted_classifier(RingPtr ring, TwistData twist) {
    return Classifier(std::move(ring), ClassifierKind::Twisted, std::move(twist));
}

Classifier nonequivariant_classifier(RingPtr ring, TwistData twist) {
    return Classifier(std::move(ring), ClassifierKind::Nonequivariant, std::move(twist));
}

void require_classifier_ring(const Classifier& c, const RingPtr& ring) {
    if (c.ring() != ring) throw Error(ErrorKind::ClassifierMismatch, "classifier built for a different ring");
}

IntVector Classifier::reduce(int q, const IntVector& v) const {
    if (v.empty()) return v;
    const auto& snf = lattice_[q];
    IntVector w = snf.left * v;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (snf.d[i] != 0) w[i] = floor_mod(w[i], snf.d[i]);
    return snf.left_inverse * w;
}

bool Classifier::less(const GroupElement& a, const GroupElement& b) const {
    const int e = ring_->finite_part().identity();
    bool an = a.q != e, bn = b.q != e;
    if (an != bn) return !an;
    return a < b;
}

GroupElement Classifier::move(const GroupElement& x, const GroupElement& h) const {
    return ring_->multiply(ring_->multiply(ring_->inverse(h), x), apply_twist(*ring_, twist_, h));
}

bool Classifier::allows_move(const GroupElement& h) const {
    return kind_ != ClassifierKind::Nonequivariant || h.q == ring_->finite_part().identity();
}

ClassLabel Classifier::canonicalize(const GroupElement& x) const {
    if (!ring_->contains(x)) throw Error(ErrorKind::ClassifierMismatch, "element outside the classifier's ring");
    if (kind_ == ClassifierKind::Nonequivariant) return ClassLabel{GroupElement{x.q, reduce(x.q, x.v)}};
    GroupElement best;
    bool have = false;
    for (int h = 0; h < ring_->finite_part().order(); ++h) {
        GroupElement y = move(x, ring_->lift(h));
        y.v = reduce(y.q, y.v);
        if (!have || less(y, best)) {
            best = std::move(y);
            have = true;
        }
    }
    return ClassLabel{best};
}

int Classifier::stabilizer_order(int q) const {
    const FiniteGroup& g = ring_->finite_part();
    if (kind_ == ClassifierKind::Nonequivariant) return 1;
    int c = 0;
    for (int h = 0; h < g.order(); ++h)
        if (g.mul(g.mul(g.inv(h), q), twist_.finite_twist[h]) == q) ++c;
    return c;
}

std::vector<IntVector> Classifier::residues(int q, std::size_t bound) const {
    const auto& snf = lattice_[q];
    std::vector<IntVector> out{IntVector(snf.d.size(), 0)};
    for (std::size_t i = 0; i < snf.d.size(); ++i) {
        std::vector<IntVector> next;
        for (std::int64_t k = 0; k < snf.d[i]; ++k)
            for (auto w : out) {
                w[i] = k;
                next.push_back(std::move(w));
                if (next.size() > bound) throw Error(ErrorKind::UnboundedOrbit, "class enumeration exceeds bound");
            }
        out = std::move(next);
    }
    for (auto& w : out) w = snf.left_inverse * w;
    return out;
}

std::optional<std::size_t> Classifier::class_count_at(int q, std::size_t bound) const {
    const auto& snf = lattice_[q];
    for (auto d : snf.d)
        if (d == 0) return std::nullopt;
    std::set<ClassLabel> labels;
    for (const auto& v : residues(q, bound)) labels.insert(canonicalize(GroupElement{q, v}));
    return labels.size();
}

std::optional<std::size_t> Classifier::class_count(std::size_t bound) const {
    std::set<ClassLabel> labels;
    for (int q = 0; q < ring_->finite_part().order(); ++q) {
        for (auto d : lattice_[q].d)
            if (d == 0) return std::nullopt;
        for (const auto& v : residues(q, bound)) {
            labels.insert(canonicalize(GroupElement{q, v}));
            if (labels.size() > bound) throw Error(ErrorKind::UnboundedOrbit, "class enumeration exceeds bound");
        }
    }
    return labels.size();
}

LabelMap phi_pushforward(const Classifier& source, const Classifier& target, const IntMatrix& lattice_map,
                         const IntVector& offset, const std::vector<int>& finite_map) {
    const auto& sring = *source.ring();
    const auto& tring = *target.ring();
    const auto ns = static_cast<std::size_t>(sring.rank());
    const auto nt = static_cast<std::size_t>(tring.rank());
    if (lattice_map.rows() != nt || lattice_map.cols() != ns)
        throw Error(ErrorKind::IncompatibleLevels, "lattice map must be " + std::to_string(nt) + "x" + std::to_string(ns));
    if (offset.size() != nt) throw Error(ErrorKind::IncompatibleLevels, "offset has the wrong length");
    const int qs = sring.finite_part().order();
    if (!finite_map.empty()) {
        if (static_cast<int>(finite_map.size()) != qs)
            throw Error(ErrorKind::IncompatibleLevels, "finite map must cover the source finite part");
        for (int x : finite_map)
            if (x < 0 || x >= tring.finite_part().order())
                throw Error(ErrorKind::IncompatibleLevels, "finite map image out of range");
    }
    const int te = tring.finite_part().identity();
    auto raw = [=, target = target](const GroupElement& x) {
        GroupElement y;
        y.q = finite_map.empty() ? te : finite_map[x.q];
        if (nt > 0) y.v = add(ns ? lattice_map * x.v : IntVector(nt, 0), offset);
        return target.canonicalize(y);
    };

    // Well-definedness on generating moves; the map is affine in v, so the
    // lattice moves need only be checked at v = 0.
    std::vector<IntVector> probes{IntVector(ns, 0)};
    for (std::size_t i = 0; i < ns; ++i) {
        IntVector e(ns, 0);
        e[i] = 1;
        probes.push_back(e);
    }
    for (int q = 0; q < qs; ++q) {
        for (std::size_t i = 0; i < ns; ++i) {
            IntVector gamma(ns, 0);
            gamma[i] = 1;
            GroupElement x = sring.lift(q);
            GroupElement moved = source.move(x, sring.translation(gamma));
            if (raw(x) != raw(moved))
                throw Error(ErrorKind::IncompatibleLevels, "lattice relation at " + sring.format(x) + " is not preserved");
        }
        if (source.kind() == ClassifierKind::Nonequivariant) continue;
        for (int h = 0; h < qs; ++h)
            for (const auto& v : probes) {
                GroupElement x{q, v};
                if (raw(x) != raw(source.move(x, sring.lift(h))))
                    throw Error(ErrorKind::IncompatibleLevels, "finite relation at " + sring.format(x) + " is not preserved");
            }
    }
    return [=, source = source](const ClassLabel& label) {
        return raw(source.canonicalize(label.rep).rep);
    };
}

}  // namespace equilef
