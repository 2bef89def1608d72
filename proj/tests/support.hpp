#pragma once

// Shared test helpers: fixture access, independent oracles and random data.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "equilef/classes.hpp"
#include "equilef/complex.hpp"
#include "equilef/errors.hpp"
#include "equilef/group.hpp"
#include "equilef/invariants.hpp"
#include "equilef/io.hpp"
#include "equilef/ring.hpp"
#include "equilef/trace.hpp"

namespace testing_support {

using namespace equilef;

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"circle_z2_deg3", "circle_z2_deg5", "s2_z2_map1", "s2_z2_map2",
                                                "s2_z3",          "torus_z2",       "circle_s3_deg4"};
    return names;
}

inline InputDocument load_fixture(const std::string& name) {
    return parse_document(std::string(EQUILEF_FIXTURE_DIR) + "/" + name + ".json");
}

// Cayley table from an explicit multiplication rule on 0..n-1.
inline FiniteGroup group_from_rule(int n, const std::function<int(int, int)>& mul, std::vector<std::string> names) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = mul(a, b);
    return FiniteGroup::from_cayley(t, std::move(names));
}

inline FiniteGroup cyclic(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "r" + std::to_string(i));
    return group_from_rule(n, [n](int a, int b) { return (a + b) % n; }, names);
}

inline FiniteGroup klein() {
    return group_from_rule(4, [](int a, int b) { return a ^ b; }, {"e", "x", "y", "xy"});
}

// S_3 as maps t -> eps*t + s/3 of the circle, composed "x then y"; names as in
// the circle fixture.
inline FiniteGroup s3() {
    static const int eps[6] = {1, 1, 1, -1, -1, -1};
    static const int sh[6] = {0, 1, 2, 0, 1, 2};
    auto mul = [](int x, int y) {
        int e = eps[x] * eps[y];
        int s = ((eps[y] * sh[x] + sh[y]) % 3 + 3) % 3;
        for (int k = 0; k < 6; ++k)
            if (eps[k] == e && sh[k] == s) return k;
        return -1;
    };
    return group_from_rule(6, mul, {"e", "a", "a2", "b", "ba", "ba2"});
}

// Dihedral group of order 2n as pairs (rotation, flip).
inline FiniteGroup dihedral(int n) {
    auto mul = [n](int x, int y) {
        int rx = x % n, fx = x / n, ry = y % n, fy = y / n;
        int r = fy ? ((ry - rx) % n + n) % n : (rx + ry) % n;
        return r + n * (fx ^ fy);
    };
    std::vector<std::string> names;
    for (int i = 0; i < 2 * n; ++i) names.push_back(i == 0 ? "e" : "d" + std::to_string(i));
    return group_from_rule(2 * n, mul, names);
}

// Every subset closed under multiplication, by brute force.
inline std::set<std::vector<int>> brute_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> out;
    const int n = g.order();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask >> g.identity() & 1)) continue;
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
            for (int b = 0; b < n && closed; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) closed = false;
        if (!closed) continue;
        std::vector<int> m;
        for (int a = 0; a < n; ++a)
            if (mask >> a & 1) m.push_back(a);
        out.insert(m);
    }
    return out;
}

// Union-find over a box of lattice elements, linked by single generator moves.
// Returns the number of components.
inline std::size_t orbit_count_in_box(const Classifier& cl, int radius, std::map<GroupElement, std::size_t>* comp = nullptr) {
    const auto& ring = *cl.ring();
    const int n = ring.finite_part().order();
    const auto r = static_cast<std::size_t>(ring.rank());
    std::vector<GroupElement> elems;
    std::vector<IntVector> box{IntVector{}};
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<IntVector> next;
        for (auto v : box)
            for (int k = -radius; k <= radius; ++k) {
                v.push_back(k);
                next.push_back(v);
                v.pop_back();
            }
        box = std::move(next);
    }
    for (int q = 0; q < n; ++q)
        for (const auto& v : box) elems.push_back(GroupElement{q, v});
    std::map<GroupElement, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    std::vector<std::size_t> parent(elems.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<GroupElement> gens;
    for (int q = 0; q < n; ++q) gens.push_back(ring.lift(q));
    for (std::size_t i = 0; i < r; ++i) {
        IntVector v(r, 0);
        v[i] = 1;
        gens.push_back(ring.translation(v));
        v[i] = -1;
        gens.push_back(ring.translation(v));
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& h : gens) {
            if (!cl.allows_move(h)) continue;
            auto it = index.find(cl.move(elems[i], h));
            if (it != index.end()) parent[find(i)] = find(it->second);
        }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < elems.size(); ++i) roots.insert(find(i));
    if (comp)
        for (std::size_t i = 0; i < elems.size(); ++i) (*comp)[elems[i]] = find(i);
    return roots.size();
}

// Integer matrix of x -> f(x)·g⁻¹ on the basis e_j·h, f being ψ-semilinear.
inline std::vector<std::vector<std::int64_t>> regular_matrix(const GroupRingMatrix& m, int g, const std::vector<int>& psi) {
    const FiniteGroup& G = m.ring()->finite_part();
    const int n = G.order();
    const auto k = m.rows();
    std::vector<std::vector<std::int64_t>> out(k * n, std::vector<std::int64_t>(k * n, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (int h = 0; h < n; ++h)
            for (std::size_t i = 0; i < k; ++i)
                for (const auto& [x, c] : m.at(i, j).terms()) {
                    int target = G.mul(G.mul(x.q, psi.empty() ? h : psi[h]), G.inv(g));
                    out[i * n + target][j * n + h] += static_cast<std::int64_t>(c);
                }
    return out;
}

inline std::int64_t int_trace(const std::vector<std::vector<std::int64_t>>& a) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// Random data ------------------------------------------------------------

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    bool coin() { return uniform(0, 1) == 1; }
};

inline GroupElement random_element(const CoefficientGroup& ring, Rng& rng, int spread = 2) {
    GroupElement g{rng.uniform(0, ring.finite_part().order() - 1), IntVector(static_cast<std::size_t>(ring.rank()))};
    for (auto& x : g.v) x = rng.uniform(-spread, spread);
    return g;
}

inline RingElement random_ring_element(const RingPtr& ring, Rng& rng, int terms = 3, int coeff = 3) {
    RingElement r(ring);
    int t = rng.uniform(0, terms);
    for (int i = 0; i < t; ++i) r.add_term(random_element(*ring, rng), rng.uniform(-coeff, coeff));
    return r;
}

inline GroupRingMatrix random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols, Rng& rng) {
    GroupRingMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_ring_element(ring, rng));
    return m;
}

inline RingElement unit(const RingPtr& ring, const GroupElement& g) { return RingElement(ring, g); }

inline GroupRingMatrix twisted(const GroupRingMatrix& m, const TwistData& t) {
    const auto& ring = *m.ring();
    return map_entries(m, [&](const GroupElement& g) { return apply_twist(ring, t, g); });
}

// I + r·E_ij and its inverse.
inline std::pair<GroupRingMatrix, GroupRingMatrix> elementary(const RingPtr& ring, std::size_t n, Rng& rng) {
    GroupRingMatrix e = GroupRingMatrix::identity(ring, n), inv = GroupRingMatrix::identity(ring, n);
    if (n < 2) {
        GroupElement g = random_element(*ring, rng);
        e.set(0, 0, unit(ring, g));
        inv.set(0, 0, unit(ring, ring->inverse(g)));
        return {e, inv};
    }
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    RingElement r = random_ring_element(ring, rng, 2, 2);
    e.set(i, j, r);
    inv.set(i, j, -r);
    return {e, inv};
}

// Lattice rings with a twist over a finite group: π₁ = ℤ with a sign character
// and zero cocycle, A = ±k; base offsets vanish.
struct RingWithTwist {
    RingPtr ring;
    TwistData twist;
};

inline RingWithTwist random_ring_with_twist(const FiniteGroup& q, Rng& rng, bool allow_lattice = true) {
    const int n = q.order();
    if (!allow_lattice || rng.uniform(0, 2) == 0) {
        RingPtr ring = CoefficientGroup::finite(q);
        TwistData t = TwistData::identity(*ring);
        return {ring, t};
    }
    // a homomorphism to {±1}, chosen at random among all of them
    std::vector<std::vector<int>> chars;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s(n);
        for (int x = 0; x < n; ++x) s[x] = (mask >> x & 1) ? -1 : 1;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (s[q.mul(a, b)] != s[a] * s[b]) ok = false;
        if (ok) chars.push_back(s);
    }
    const auto& sign = chars[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(chars.size()) - 1))];
    std::vector<IntMatrix> action;
    for (int x = 0; x < n; ++x) action.push_back(IntMatrix(1, 1, sign[x]));
    std::vector<IntVector> cocycle(static_cast<std::size_t>(n) * n, IntVector{0});
    RingPtr ring = CoefficientGroup::abelian_by_finite(q, 1, action, cocycle);
    TwistData t = TwistData::identity(*ring);
    int k = rng.uniform(2, 5);
    t.lattice_twist = IntMatrix(1, 1, rng.coin() ? k : -k);
    return {ring, t};
}

// Finite twist ψ: a random automorphism found by brute force over images of a
// small generating set, or the identity.
inline std::vector<int> random_automorphism(const FiniteGroup& g, Rng& rng) {
    std::vector<int> id(g.order());
    std::iota(id.begin(), id.end(), 0);
    if (rng.coin()) return id;
    // inner automorphisms are always available
    int c = rng.uniform(0, g.order() - 1);
    std::vector<int> psi(g.order());
    for (int x = 0; x < g.order(); ++x) psi[x] = g.conj(x, c);
    return psi;
}

// Random valid chain data on one component: elementary pieces (free cells
// with zero boundary, contractible pairs) conjugated by elementary changes of
// basis. Returns boundaries and matrices for degrees 0..top.
struct ChainData {
    std::vector<int> ranks;
    std::vector<GroupRingMatrix> boundaries;
    std::vector<GroupRingMatrix> matrices;
};

inline ChainData random_chain_data(const RingPtr& ring, const TwistData& twist, Rng& rng, int top = 2) {
    struct Piece {
        int degree;
        bool pair;
        GroupElement unit_g;  // boundary of the pair
        RingElement x;        // map on the upper cell
        RingElement y;        // map on the lower cell (or the single cell)
    };
    std::vector<Piece> pieces;
    int count = rng.uniform(1, 4);
    for (int i = 0; i < count; ++i) {
        Piece p{rng.uniform(0, top), false, ring->identity(), RingElement(ring), RingElement(ring)};
        if (p.degree < top && rng.coin()) {
            p.pair = true;
            p.unit_g = random_element(*ring, rng, 1);
            p.x = random_ring_element(ring, rng);
            // D F = F φ(D): u·x = y·φ(u)
            GroupElement phi_u = apply_twist(*ring, twist, p.unit_g);
            p.y = unit(ring, p.unit_g) * p.x * unit(ring, ring->inverse(phi_u));
        } else {
            p.y = random_ring_element(ring, rng);
        }
        pieces.push_back(std::move(p));
    }
    ChainData out;
    out.ranks.assign(static_cast<std::size_t>(top) + 1, 0);
    // cell lists per degree: (piece, upper?)
    std::vector<std::vector<std::pair<std::size_t, bool>>> cells(static_cast<std::size_t>(top) + 1);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        cells[static_cast<std::size_t>(p.degree)].push_back({i, false});
        if (p.pair) cells[static_cast<std::size_t>(p.degree) + 1].push_back({i, true});
    }
    for (int d = 0; d <= top; ++d) out.ranks[static_cast<std::size_t>(d)] = static_cast<int>(cells[static_cast<std::size_t>(d)].size());
    for (int d = 0; d <= top; ++d) {
        const auto& cd = cells[static_cast<std::size_t>(d)];
        std::size_t rows = d == 0 ? 0 : cells[static_cast<std::size_t>(d) - 1].size();
        GroupRingMatrix bd(ring, rows, cd.size());
        GroupRingMatrix f(ring, cd.size(), cd.size());
        for (std::size_t j = 0; j < cd.size(); ++j) {
            const auto& p = pieces[cd[j].first];
            f.set(j, j, cd[j].second ? p.x : p.y);
            if (cd[j].second) {
                const auto& lower = cells[static_cast<std::size_t>(d) - 1];
                for (std::size_t i = 0; i < lower.size(); ++i)
                    if (lower[i].first == cd[j].first && !lower[i].second) bd.set(i, j, unit(ring, p.unit_g));
            }
        }
        out.boundaries.push_back(bd);
        out.matrices.push_back(f);
    }
    // change of basis P_d in each degree: D'_d = P_{d-1}⁻¹ D_d P_d, F'_d = P_d⁻¹ F_d φ(P_d)
    for (int round = 0; round < 2; ++round)
        for (int d = 0; d <= top; ++d) {
            auto n = static_cast<std::size_t>(out.ranks[static_cast<std::size_t>(d)]);
            if (n == 0) continue;
            auto [p, pinv] = elementary(ring, n, rng);
            auto du = static_cast<std::size_t>(d);
            out.matrices[du] = pinv * out.matrices[du] * twisted(p, twist);
            if (out.boundaries[du].rows() > 0) out.boundaries[du] = out.boundaries[du] * p;
            if (du + 1 <= static_cast<std::size_t>(top) && out.boundaries[du + 1].cols() > 0)
                out.boundaries[du + 1] = pinv * out.boundaries[du + 1];
        }
    return out;
}

// Random bundle: a few components at distinct isotropy subgroups, each with
// random chain data and a random twisted self-map; phi entries for every
// strictly subconjugate pair of self-mapped components.
struct RandomCase {
    GCWBundle bundle;
    EquivariantMapData map;
    std::vector<PhiEntry> phi;
};

inline RandomCase random_case(Rng& rng) {
    static const std::vector<std::function<FiniteGroup()>> groups{
        [] { return cyclic(2); }, [] { return cyclic(3); }, [] { return klein(); }, [] { return s3(); }};
    RandomCase rc;
    GCWBundle& b = rc.bundle;
    b.group = groups[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(groups.size()) - 1))]();
    b.subgroup_classes = subgroup_conjugacy_classes(b.group);
    int ncomp = rng.uniform(1, 3);
    for (int i = 0; i < ncomp; ++i) {
        const auto& cls = b.subgroup_classes[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(b.subgroup_classes.size()) - 1))];
        const Subgroup& h = cls.front();
        WeylGroup w = weyl_group(b.group, h);
        auto rt = random_ring_with_twist(w.quotient, rng);
        Pi1Descriptor pi1;
        pi1.rank = rt.ring->rank();
        for (int q = 0; q < w.quotient.order(); ++q) {
            if (pi1.rank) pi1.action.push_back(rt.ring->action(q));
        }
        if (pi1.rank)
            for (int a = 0; a < w.quotient.order(); ++a)
                for (int c = 0; c < w.quotient.order(); ++c) pi1.cocycle.push_back(rt.ring->cocycle(a, c));
        rt.twist.finite_twist = random_automorphism(w.quotient, rng);
        if (!twist_violations(*rt.ring, rt.twist).empty()) rt.twist.finite_twist = TwistData::identity(*rt.ring).finite_twist;
        std::string id = "c" + std::to_string(i);
        StratumComponent c = make_component(b.group, b.subgroup_classes, id, h, std::nullopt, pi1, {0});
        // rebuild the twist over the component's own ring object
        TwistData twist = rt.twist;
        ChainData cd = random_chain_data(c.ring, twist, rng, rng.uniform(0, 2));
        c.chain_ranks = cd.ranks;
        c.boundaries = cd.boundaries;
        ComponentMap m;
        m.self_mapped = rng.uniform(0, 5) > 0;
        m.twist = twist;
        if (m.self_mapped) m.matrices = cd.matrices;
        b.components.push_back(std::move(c));
        rc.map.components[id] = std::move(m);
    }
    for (const auto& s : b.components)
        for (const auto& t : b.components) {
            if (&s == &t) continue;
            if (!rc.map.find(s.id)->self_mapped || !rc.map.find(t.id)->self_mapped) continue;
            if (s.isotropy == t.isotropy || !is_subconjugate(b.group, t.isotropy, s.isotropy)) continue;
            PhiEntry e{s.id, t.id, {}};
            int copies = rng.uniform(0, 2);
            for (int k = 0; k < copies; ++k) {
                PhiCopy pc;
                pc.lattice_map = IntMatrix(static_cast<std::size_t>(t.ring->rank()), static_cast<std::size_t>(s.ring->rank()));
                for (std::size_t i = 0; i < pc.lattice_map.rows(); ++i)
                    for (std::size_t j = 0; j < pc.lattice_map.cols(); ++j) pc.lattice_map(i, j) = 0;
                pc.offset.assign(static_cast<std::size_t>(t.ring->rank()), 0);
                for (auto& x : pc.offset) x = rng.uniform(-2, 2);
                e.copies.push_back(pc);
            }
            rc.phi.push_back(e);
        }
    return rc;
}

}  // namespace testing_support
