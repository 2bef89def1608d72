#include "equilef/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "equilef/errors.hpp"

namespace equilef {

FiniteGroup::FiniteGroup() : table_{{0}}, inverse_{0}, names_{"e"}, identity_(0) {}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty Cayley table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidGroup, "Cayley table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw Error(ErrorKind::InvalidGroup, "Cayley entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) identity = e;
    }
    if (identity < 0) throw Error(ErrorKind::InvalidGroup, "no two-sided identity");

    std::vector<int> inverse(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (table[x][y] == identity && table[y][x] == identity) {
                inverse[x] = y;
                break;
            }
    for (int x = 0; x < n; ++x)
        if (inverse[x] < 0) throw Error(ErrorKind::InvalidGroup, "element " + std::to_string(x) + " has no inverse");

    auto assoc = [&](int a, int b, int c) { return table[table[a][b]][c] == table[a][table[b][c]]; };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) throw Error(ErrorKind::InvalidGroup, "Cayley table is not associative");
    } else {
        std::mt19937 rng(20240601u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                throw Error(ErrorKind::InvalidGroup, "Cayley table is not associative");
    }

    if (names.empty()) {
        for (int x = 0; x < n; ++x) names.push_back(x == identity ? "e" : "g" + std::to_string(x));
    }
    if (static_cast<int>(names.size()) != n) throw Error(ErrorKind::InvalidGroup, "wrong number of element names");
    std::set<std::string> seen(names.begin(), names.end());
    if (static_cast<int>(seen.size()) != n) throw Error(ErrorKind::InvalidGroup, "duplicate element names");

    FiniteGroup g;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.names_ = std::move(names);
    g.identity_ = identity;
    return g;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

std::optional<int> FiniteGroup::find(std::string_view name) const {
    for (int x = 0; x < order(); ++x)
        if (names_[x] == name) return x;
    return std::nullopt;
}

FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators, int max_order,
                              const std::vector<std::string>& generator_names) {
    using Perm = std::vector<int>;
    std::size_t m = generators.empty() ? 0 : generators.front().size();
    for (const auto& p : generators) {
        if (p.size() != m) throw Error(ErrorKind::NonBijective, "generators act on sets of different sizes");
        std::vector<bool> hit(m, false);
        for (int x : p) {
            if (x < 0 || static_cast<std::size_t>(x) >= m || hit[x])
                throw Error(ErrorKind::NonBijective, "generator is not a bijection");
            hit[x] = true;
        }
    }
    if (!generator_names.empty() && generator_names.size() != generators.size())
        throw Error(ErrorKind::InvalidArgument, "generator names do not match generators");

    auto compose = [](const Perm& p, const Perm& q) {  // p then q
        Perm r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
        return r;
    };

    Perm id(m);
    for (std::size_t i = 0; i < m; ++i) id[i] = static_cast<int>(i);
    std::vector<Perm> elements{id};
    std::vector<std::string> names{"e"};
    std::map<Perm, int> index{{id, 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < generators.size(); ++k) {
            Perm next = compose(elements[cur], generators[k]);
            if (index.count(next)) continue;
            if (static_cast<int>(elements.size()) >= max_order)
                throw Error(ErrorKind::OrderBoundExceeded,
                            "permutation group exceeds order bound " + std::to_string(max_order));
            std::string gname = generator_names.empty() ? "g" + std::to_string(k) : generator_names[k];
            index.emplace(next, static_cast<int>(elements.size()));
            names.push_back(cur == 0 ? gname : names[cur] + gname);
            elements.push_back(std::move(next));
            queue.push_back(static_cast<int>(elements.size()) - 1);
        }
    }
    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
    return FiniteGroup::from_cayley(std::move(table), std::move(names));
}

bool Subgroup::contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
    std::vector<bool> in(g.order(), false);
    std::vector<int> members{g.identity()};
    in[g.identity()] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (int s : generators) {
            int y = g.mul(members[i], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{members};
}

Subgroup whole_group(const FiniteGroup& g) {
    Subgroup s;
    for (int x = 0; x < g.order(); ++x) s.members.push_back(x);
    return s;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x) {
    Subgroup r;
    for (int m : h.members) r.members.push_back(g.conj(m, x));
    std::sort(r.members.begin(), r.members.end());
    return r;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    Subgroup n;
    for (int x = 0; x < g.order(); ++x)
        if (conjugate(g, h, x) == h) n.members.push_back(x);
    return n;
}

bool is_subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    for (int x = 0; x < g.order(); ++x) {
        Subgroup c = conjugate(g, h, x);
        if (std::includes(k.members.begin(), k.members.end(), c.members.begin(), c.members.end())) return true;
    }
    return false;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<Subgroup> found;
    std::vector<Subgroup> frontier{subgroup_closure(g, {})};
    found.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier) {
            for (int x = 0; x < g.order(); ++x) {
                if (s.contains(x)) continue;
                std::vector<int> gens = s.members;
                gens.push_back(x);
                Subgroup t = subgroup_closure(g, gens);
                if (found.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
    return out;
}

std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<Subgroup>> classes;
    std::set<Subgroup> placed;
    for (const auto& h : all_subgroups(g)) {
        if (placed.count(h)) continue;
        std::set<Subgroup> cls;
        for (int x = 0; x < g.order(); ++x) cls.insert(conjugate(g, h, x));
        placed.insert(cls.begin(), cls.end());
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

std::size_t subgroup_class_index(const FiniteGroup& g, const std::vector<std::vector<Subgroup>>& classes,
                                 const Subgroup& h) {
    (void)g;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::find(classes[i].begin(), classes[i].end(), h) != classes[i].end()) return i;
    throw Error(ErrorKind::InvalidArgument, "not a subgroup of the ambient group");
}

WeylGroup weyl_group(const FiniteGroup& g, const Subgroup& h) {
    WeylGroup w;
    w.source = h;
    w.normalizer = normalizer(g, h);
    w.project.assign(g.order(), -1);
    for (int x : w.normalizer.members) {
        if (w.project[x] >= 0) continue;
        int idx = static_cast<int>(w.lift.size());
        w.lift.push_back(x);  // members are sorted, so x is least in its coset
        for (int m : h.members) w.project[g.mul(m, x)] = idx;
    }
    const int k = static_cast<int>(w.lift.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> names;
    for (int a = 0; a < k; ++a) {
        names.push_back(g.name(w.lift[a]));
        for (int b = 0; b < k; ++b) table[a][b] = w.project[g.mul(w.lift[a], w.lift[b])];
    }
    w.quotient = FiniteGroup::from_cayley(std::move(table), std::move(names));
    return w;
}

int centralizer_order(const FiniteGroup& g, int x) {
    int c = 0;
    for (int h = 0; h < g.order(); ++h)
        if (g.mul(h, x) == g.mul(x, h)) ++c;
    return c;
}

ConjClassPartition element_conjugacy(const FiniteGroup& g) {
    ConjClassPartition p;
    p.class_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (p.class_of[x] >= 0) continue;
        std::set<int> cls;
        for (int h = 0; h < g.order(); ++h) cls.insert(g.conj(x, h));
        int idx = static_cast<int>(p.classes.size());
        for (int y : cls) p.class_of[y] = idx;
        p.classes.emplace_back(cls.begin(), cls.end());
    }
    return p;
}

FiniteGroup restrict_to(const FiniteGroup& g, const Subgroup& h) {
    const int k = h.order();
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < k; ++i) local[h.members[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> names;
    for (int a = 0; a < k; ++a) {
        names.push_back(g.name(h.members[a]));
        for (int b = 0; b < k; ++b) {
            int y = local[g.mul(h.members[a], h.members[b])];
            if (y < 0) throw Error(ErrorKind::InvalidGroup, "subset is not closed under multiplication");
            table[a][b] = y;
        }
    }
    return FiniteGroup::from_cayley(std::move(table), std::move(names));
}

}  // namespace equilef
