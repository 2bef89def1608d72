#include "equilef/ring.hpp"

#include "equilef/errors.hpp"

namespace equilef {

RingPtr CoefficientGroup::finite(FiniteGroup q) {
    auto r = std::shared_ptr<CoefficientGroup>(new CoefficientGroup());
    r->kind_ = Kind::Finite;
    const auto n = static_cast<std::size_t>(q.order());
    r->action_.assign(n, IntMatrix());
    r->cocycle_.assign(n * n, IntVector());
    r->finite_ = std::move(q);
    return r;
}

RingPtr CoefficientGroup::abelian_by_finite(FiniteGroup q, int rank, std::vector<IntMatrix> action,
                                            std::vector<IntVector> cocycle) {
    const int n = q.order();
    if (rank < 0) throw Error(ErrorKind::InvalidRing, "negative lattice rank");
    if (static_cast<int>(action.size()) != n) throw Error(ErrorKind::InvalidRing, "one action matrix per element");
    if (static_cast<int>(cocycle.size()) != n * n)
        throw Error(ErrorKind::InvalidRing, "one cocycle vector per ordered pair");
    const auto r_sz = static_cast<std::size_t>(rank);
    for (int a = 0; a < n; ++a) {
        if (action[a].rows() != r_sz || action[a].cols() != r_sz)
            throw Error(ErrorKind::InvalidRing, "action of " + q.name(a) + " has the wrong shape");
        auto det = determinant(action[a]);
        if (det != 1 && det != -1) throw Error(ErrorKind::InvalidRing, "action of " + q.name(a) + " is not invertible over Z");
    }
    for (const auto& c : cocycle)
        if (c.size() != r_sz) throw Error(ErrorKind::InvalidRing, "cocycle vector has the wrong length");
    if (!(action[q.identity()] == IntMatrix::identity(r_sz)))
        throw Error(ErrorKind::InvalidRing, "identity must act trivially");
    auto coc = [&](int a, int b) -> const IntVector& { return cocycle[a * n + b]; };
    for (int a = 0; a < n; ++a) {
        if (!is_zero(coc(q.identity(), a)) || !is_zero(coc(a, q.identity())))
            throw Error(ErrorKind::InvalidRing, "cocycle is not normalized");
        for (int b = 0; b < n; ++b) {
            if (!(action[q.mul(a, b)] == action[a] * action[b]))
                throw Error(ErrorKind::InvalidRing, "action is not a homomorphism at (" + q.name(a) + ", " + q.name(b) + ")");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                IntVector lhs = add(coc(a, b), coc(q.mul(a, b), c));
                IntVector rhs = add(action[a] * coc(b, c), coc(a, q.mul(b, c)));
                if (lhs != rhs)
                    throw Error(ErrorKind::InvalidRing, "cocycle identity fails at (" + q.name(a) + ", " + q.name(b) +
                                                            ", " + q.name(c) + ")");
            }

    auto r = std::shared_ptr<CoefficientGroup>(new CoefficientGroup());
    r->kind_ = Kind::AbelianByFinite;
    r->finite_ = std::move(q);
    r->rank_ = rank;
    r->action_ = std::move(action);
    r->cocycle_ = std::move(cocycle);
    return r;
}

GroupElement CoefficientGroup::identity() const { return lift(finite_.identity()); }

GroupElement CoefficientGroup::multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement r;
    r.q = finite_.mul(a.q, b.q);
    if (rank_ == 0) return r;
    r.v = add(add(a.v, action(a.q) * b.v), cocycle(a.q, b.q));
    return r;
}

GroupElement CoefficientGroup::inverse(const GroupElement& a) const {
    GroupElement r;
    r.q = finite_.inv(a.q);
    if (rank_ == 0) return r;
    r.v = negate(action(r.q) * add(a.v, cocycle(a.q, r.q)));
    return r;
}

bool CoefficientGroup::contains(const GroupElement& a) const {
    return a.q >= 0 && a.q < finite_.order() && a.v.size() == static_cast<std::size_t>(rank_);
}

std::string CoefficientGroup::format(const GroupElement& a) const {
    if (kind_ == Kind::Finite) return finite_.name(a.q);
    return "(" + finite_.name(a.q) + "," + format_vector(a.v) + ")";
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (a != b) throw Error(ErrorKind::RingMismatch, where);
}

RingElement::RingElement(RingPtr ring) : ring_(std::move(ring)) {}

RingElement::RingElement(RingPtr ring, const GroupElement& g, const Rational& c) : ring_(std::move(ring)) {
    add_term(g, c);
}

Rational RingElement::coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add_term(const GroupElement& g, const Rational& c) {
    if (c == 0) return;
    if (!ring_->contains(g)) throw Error(ErrorKind::RingMismatch, "group element outside the coefficient group");
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& other) {
    require_same_ring(ring_, other.ring_, "ring element sum");
    for (const auto& [g, c] : other.terms_) add_term(g, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    require_same_ring(ring_, other.ring_, "ring element difference");
    for (const auto& [g, c] : other.terms_) add_term(g, -c);
    return *this;
}

RingElement RingElement::operator-() const { return scaled(-1); }

RingElement RingElement::scaled(const Rational& c) const {
    RingElement r(ring_);
    if (c == 0) return r;
    for (const auto& [g, x] : terms_) r.terms_.emplace(g, x * c);
    return r;
}

bool RingElement::operator==(const RingElement& other) const {
    return ring_ == other.ring_ && terms_ == other.terms_;
}

RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

RingElement multiply(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring(), b.ring(), "ring element product");
    RingElement r(a.ring());
    for (const auto& [g, x] : a.terms())
        for (const auto& [h, y] : b.terms()) r.add_term(a.ring()->multiply(g, h), x * y);
    return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }

RingElement map_terms(const RingElement& a, const std::function<GroupElement(const GroupElement&)>& fn) {
    RingElement r(a.ring());
    for (const auto& [g, x] : a.terms()) r.add_term(fn(g), x);
    return r;
}

GroupRingMatrix::GroupRingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, RingElement(ring)) {}

GroupRingMatrix GroupRingMatrix::identity(RingPtr ring, std::size_t n) {
    GroupRingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, RingElement(ring, ring->identity()));
    return m;
}

void GroupRingMatrix::set(std::size_t i, std::size_t j, RingElement value) {
    require_same_ring(ring_, value.ring(), "matrix entry");
    entries_[i * cols_ + j] = std::move(value);
}

bool GroupRingMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool GroupRingMatrix::operator==(const GroupRingMatrix& other) const {
    return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

GroupRingMatrix multiply(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    require_same_ring(a.ring(), b.ring(), "matrix product");
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "group ring matrix product");
    GroupRingMatrix c(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RingElement s(a.ring());
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                s += a.at(i, k) * b.at(k, j);
            }
            c.set(i, j, std::move(s));
        }
    return c;
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) { return multiply(a, b); }

namespace {

GroupRingMatrix combine(const GroupRingMatrix& a, const GroupRingMatrix& b, bool subtract) {
    require_same_ring(a.ring(), b.ring(), "matrix sum");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "group ring matrix sum");
    GroupRingMatrix c(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, subtract ? a.at(i, j) - b.at(i, j) : a.at(i, j) + b.at(i, j));
    return c;
}

}  // namespace

GroupRingMatrix operator+(const GroupRingMatrix& a, const GroupRingMatrix& b) { return combine(a, b, false); }
GroupRingMatrix operator-(const GroupRingMatrix& a, const GroupRingMatrix& b) { return combine(a, b, true); }

GroupRingMatrix map_entries(const GroupRingMatrix& m, const std::function<GroupElement(const GroupElement&)>& fn) {
    GroupRingMatrix r(m.ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, map_terms(m.at(i, j), fn));
    return r;
}

}  // namespace equilef
