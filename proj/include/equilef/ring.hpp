#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "equilef/group.hpp"
#include "equilef/linalg.hpp"
#include "equilef/rational.hpp"

namespace equilef {

// (q, v) stands for (e, v)·(q, 0); v is empty over a Finite ring.
struct GroupElement {
    int q = 0;
    IntVector v;

    auto operator<=>(const GroupElement&) const = default;
};

class CoefficientGroup {
public:
    enum class Kind { Finite, AbelianByFinite };

    static std::shared_ptr<const CoefficientGroup> finite(FiniteGroup q);
    // action[q] is n×n, cocycle[q1 * |Q| + q2] an n-vector; both checked.
    static std::shared_ptr<const CoefficientGroup> abelian_by_finite(FiniteGroup q, int rank,
                                                                     std::vector<IntMatrix> action,
                                                                     std::vector<IntVector> cocycle);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const FiniteGroup& finite_part() const { return finite_; }
    int rank() const { return rank_; }
    const IntMatrix& action(int q) const { return action_[q]; }
    const IntVector& cocycle(int q1, int q2) const { return cocycle_[q1 * finite_.order() + q2]; }

    GroupElement identity() const;
    GroupElement lift(int q) const { return GroupElement{q, IntVector(rank_, 0)}; }
    GroupElement translation(const IntVector& v) const { return GroupElement{finite_.identity(), v}; }
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    bool contains(const GroupElement& a) const;

    std::string format(const GroupElement& a) const;

private:
    CoefficientGroup() = default;

    Kind kind_ = Kind::Finite;
    FiniteGroup finite_;
    int rank_ = 0;
    std::vector<IntMatrix> action_;
    std::vector<IntVector> cocycle_;
};

using RingPtr = std::shared_ptr<const CoefficientGroup>;

class RingElement {
public:
    explicit RingElement(RingPtr ring);
    RingElement(RingPtr ring, const GroupElement& g, const Rational& c = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<GroupElement, Rational>& terms() const { return terms_; }
    Rational coefficient(const GroupElement& g) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const GroupElement& g, const Rational& c);
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement operator-() const;
    RingElement scaled(const Rational& c) const;

    bool operator==(const RingElement& other) const;

private:
    RingPtr ring_;
    std::map<GroupElement, Rational> terms_;
};

RingElement operator+(RingElement a, const RingElement& b);
RingElement operator-(RingElement a, const RingElement& b);
RingElement multiply(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);
// Extends a map of group elements linearly.
RingElement map_terms(const RingElement& a, const std::function<GroupElement(const GroupElement&)>& fn);

class GroupRingMatrix {
public:
    GroupRingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static GroupRingMatrix identity(RingPtr ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, RingElement value);
    bool is_zero() const;

    bool operator==(const GroupRingMatrix& other) const;

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RingElement> entries_;
};

GroupRingMatrix multiply(const GroupRingMatrix& a, const GroupRingMatrix& b);
GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);
GroupRingMatrix operator+(const GroupRingMatrix& a, const GroupRingMatrix& b);
GroupRingMatrix operator-(const GroupRingMatrix& a, const GroupRingMatrix& b);
GroupRingMatrix map_entries(const GroupRingMatrix& m,
                            const std::function<GroupElement(const GroupElement&)>& fn);

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace equilef
