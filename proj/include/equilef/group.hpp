#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace equilef {

class FiniteGroup {
public:
    FiniteGroup();

    // Validates closure, identity, inverses and associativity (exhaustive up to
    // order 64, seeded random triples above).
    static FiniteGroup from_cayley(std::vector<std::vector<int>> table,
                                   std::vector<std::string> names = {});
    static FiniteGroup trivial();

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g⁻¹xg
    int element_order(int a) const;

    const std::vector<std::vector<int>>& cayley() const { return table_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int a) const { return names_[a]; }
    std::optional<int> find(std::string_view name) const;

    bool operator==(const FiniteGroup& other) const { return table_ == other.table_ && names_ == other.names_; }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
    int identity_ = 0;
};

// Product convention: (p·q)(i) = q(p(i)), i.e. "p then q". Elements are listed
// in breadth-first word order, identity first; names are words in the
// generator names ("g0", "g1", ... unless given).
FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                              int max_order = 256,
                              const std::vector<std::string>& generator_names = {});

struct Subgroup {
    std::vector<int> members;  // sorted

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const;

    auto operator<=>(const Subgroup&) const = default;
};

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);
Subgroup whole_group(const FiniteGroup& g);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x);  // x⁻¹Hx
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
bool is_subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);  // some conjugate of h lies in k

// Ordered by (order, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
// Classes ordered by representative; the representative is listed first.
std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(const FiniteGroup& g);
std::size_t subgroup_class_index(const FiniteGroup& g,
                                 const std::vector<std::vector<Subgroup>>& classes,
                                 const Subgroup& h);

struct WeylGroup {
    Subgroup source;
    Subgroup normalizer;
    FiniteGroup quotient;     // cosets ordered by least member; named after it
    std::vector<int> project; // G element -> quotient element, -1 off the normalizer
    std::vector<int> lift;    // quotient element -> least coset member
};

WeylGroup weyl_group(const FiniteGroup& g, const Subgroup& h);

int centralizer_order(const FiniteGroup& g, int x);

struct ConjClassPartition {
    std::vector<std::vector<int>> classes;  // ordered by least member
    std::vector<int> class_of;
};

ConjClassPartition element_conjugacy(const FiniteGroup& g);

// Restriction of g to a subgroup, keeping element names; index i of the result
// is members[i].
FiniteGroup restrict_to(const FiniteGroup& g, const Subgroup& h);

}  // namespace equilef
