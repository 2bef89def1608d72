#include "equilef/invariants.hpp"

#include <set>

#include "equilef/errors.hpp"
#include "equilef/trace.hpp"

namespace equilef {

Rational ExtendedInvariant::coefficient(const std::string& component, const ClassLabel& label) const {
    auto it = entries_.find({component, label});
    return it == entries_.end() ? Rational(0) : it->second;
}

bool ExtendedInvariant::is_integral() const {
    for (const auto& [k, c] : entries_)
        if (!equilef::is_integral(c)) return false;
    return true;
}

void ExtendedInvariant::add(const std::string& component, const ClassLabel& label, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace({component, label}, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) entries_.erase(it);
}

Classifier lefschetz_classifier(const StratumComponent& c, const ComponentMap& m) {
    TwistData t = TwistData::identity(*c.finite_ring);
    if (t.finite_twist == m.twist.finite_twist) return plain_conjugacy_classifier(c.finite_ring);
    t.finite_twist = m.twist.finite_twist;
    return twisted_classifier(c.finite_ring, std::move(t));
}

Classifier reidemeister_classifier(const StratumComponent& c, const ComponentMap& m) {
    if (c.ring == c.finite_ring) return lefschetz_classifier(c, m);
    return twisted_classifier(c.ring, m.twist);
}

namespace {

const ComponentMap& self_map_of(const EquivariantMapData& map, const StratumComponent& c) {
    const ComponentMap* m = map.find(c.id);
    if (!m || !m->self_mapped) throw Error(ErrorKind::InvalidArgument, c.id + " is not self-mapped");
    return *m;
}

std::vector<GroupRingMatrix> projected(const StratumComponent& c, const ComponentMap& m) {
    std::vector<GroupRingMatrix> out;
    for (const auto& x : m.matrices) out.push_back(project_to_finite(c, x));
    return out;
}

void check_integral(ExtendedInvariant& out, std::vector<std::string>* warnings) {
    for (const auto& [key, c] : out.entries()) {
        if (is_integral(c)) continue;
        std::string msg = "coefficient " + format_rational(c) + " in " + key.first + " is not an integer";
        if (!warnings) throw Error(ErrorKind::NonIntegralCoefficient, msg);
        warnings->push_back(msg);
    }
}

ExtendedInvariant assemble(const GCWBundle& bundle, const EquivariantMapData& map, const FixedPointTable& table,
                           bool reidemeister, std::vector<std::string>* warnings) {
    // component → label → finite part → index sum
    std::map<std::string, std::map<ClassLabel, std::map<int, Rational>>> sums;
    std::map<std::string, Classifier> classifiers;
    for (const auto& row : table) {
        const StratumComponent* c = bundle.find(row.component);
        if (!c) throw Error(ErrorKind::InvalidArgument, "fixed point row names unknown component " + row.component);
        const ComponentMap& m = self_map_of(map, *c);
        auto it = classifiers.find(c->id);
        if (it == classifiers.end())
            it = classifiers.emplace(c->id, reidemeister ? reidemeister_classifier(*c, m) : lefschetz_classifier(*c, m)).first;
        if (!it->second.ring()->contains(row.element))
            throw Error(ErrorKind::InvalidArgument, "fixed point row element does not fit component " + c->id);
        sums[c->id][it->second.canonicalize(row.element)][row.element.q] += row.index;
    }
    ExtendedInvariant out;
    for (const auto& [id, labels] : sums) {
        const Classifier& cl = classifiers.at(id);
        for (const auto& [label, per_element] : labels) {
            const auto& [q0, s0] = *per_element.begin();
            for (const auto& [q, s] : per_element) {
                if (s == s0) continue;
                std::string msg = "fixed point indices disagree within class " + cl.format(label) + " of " + id;
                if (!warnings) throw Error(ErrorKind::NonIntegralCoefficient, msg);
                warnings->push_back(msg);
                break;
            }
            out.add(id, label, s0 / cl.stabilizer_order(q0));
        }
    }
    check_integral(out, warnings);
    return out;
}

}  // namespace

ExtendedInvariant extended_global_lefschetz(const GCWBundle& bundle, const EquivariantMapData& map) {
    require_valid(bundle, map);
    ExtendedInvariant out;
    for (const auto& c : bundle.components) {
        const ComponentMap* m = map.find(c.id);
        if (!m || !m->self_mapped) continue;
        Classifier cl = lefschetz_classifier(c, *m);
        ShadowVector tr = alternating_chain_trace(projected(c, *m), cl);
        for (const auto& [label, x] : tr.coeffs()) out.add(c.id, label, x);
    }
    check_integral(out, nullptr);
    return out;
}

ExtendedInvariant assemble_geometric_lefschetz(const GCWBundle& bundle, const EquivariantMapData& map,
                                               const FixedPointTable& table, std::vector<std::string>* warnings) {
    return assemble(bundle, map, table, false, warnings);
}

std::map<std::string, Rational> identity_coefficients(const ExtendedInvariant& ext, const GCWBundle& bundle) {
    std::map<std::string, Rational> out;
    for (const auto& c : bundle.components)
        out[c.id] = ext.coefficient(c.id, ClassLabel{GroupElement{c.finite_ring->finite_part().identity(), {}}});
    return out;
}

BurnsideVector plain_global_lefschetz(const ExtendedInvariant& ext, const GCWBundle& bundle) {
    BurnsideVector b;
    auto ids = identity_coefficients(ext, bundle);
    for (const auto& c : bundle.components) {
        Rational x = ids.at(c.id);
        if (x == 0) continue;
        auto& slot = b.coeffs[c.isotropy_class];
        slot += x;
        if (slot == 0) b.coeffs.erase(c.isotropy_class);
    }
    return b;
}

bool CrosscheckReport::ok() const {
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return true;
}

CrosscheckReport crosscheck_specialization(const GCWBundle& bundle, const EquivariantMapData& map) {
    ExtendedInvariant ext = extended_global_lefschetz(bundle, map);
    CrosscheckReport report;
    for (const auto& c : bundle.components) {
        const ComponentMap* m = map.find(c.id);
        if (!m || !m->self_mapped) continue;
        Classifier cl = lefschetz_classifier(c, *m);
        auto mats = projected(c, *m);
        for (int q = 0; q < c.finite_ring->finite_part().order(); ++q) {
            CrosscheckRow row;
            row.component = c.id;
            row.element = q;
            row.integer_trace = alternating_specialization(mats, q, m->twist.finite_twist);
            row.predicted = Rational(cl.stabilizer_order(q)) * ext.coefficient(c.id, cl.canonicalize(GroupElement{q, {}}));
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

ExtendedInvariant extended_global_reidemeister(const GCWBundle& bundle, const EquivariantMapData& map) {
    require_valid(bundle, map);
    ExtendedInvariant out;
    for (const auto& c : bundle.components) {
        const ComponentMap* m = map.find(c.id);
        if (!m || !m->self_mapped) continue;
        if (!c.ring->is_finite() && c.ring->kind() != CoefficientGroup::Kind::AbelianByFinite)
            throw Error(ErrorKind::UnsupportedPi1, c.id);
        Classifier cl = reidemeister_classifier(c, *m);
        ShadowVector tr = alternating_chain_trace(m->matrices, cl);
        for (const auto& [label, x] : tr.coeffs()) out.add(c.id, label, x);
    }
    check_integral(out, nullptr);
    return out;
}

ExtendedInvariant assemble_geometric_reidemeister(const GCWBundle& bundle, const EquivariantMapData& map,
                                                  const FixedPointTable& table, std::vector<std::string>* warnings) {
    return assemble(bundle, map, table, true, warnings);
}

ExtendedInvariant plain_reidemeister(const ExtendedInvariant& ext, const GCWBundle& bundle) {
    ExtendedInvariant out;
    for (const auto& [key, x] : ext.entries()) {
        const StratumComponent* c = bundle.find(key.first);
        if (c && key.second.rep.q == c->ring->finite_part().identity()) out.add(key.first, key.second, x);
    }
    return out;
}

ExtendedInvariant collapse_to_lefschetz(const ExtendedInvariant& reidemeister, const GCWBundle& bundle,
                                        const EquivariantMapData& map) {
    ExtendedInvariant out;
    for (const auto& [key, x] : reidemeister.entries()) {
        const StratumComponent* c = bundle.find(key.first);
        if (!c) throw Error(ErrorKind::InvalidArgument, "unknown component " + key.first);
        Classifier cl = lefschetz_classifier(*c, self_map_of(map, *c));
        out.add(key.first, cl.canonicalize(GroupElement{key.second.rep.q, {}}), x);
    }
    return out;
}

bool NielsenFunction::is_zero() const {
    for (const auto& [h, n] : values)
        if (n != 0) return false;
    return true;
}

NielsenFunction nielsen_number(const GCWBundle& bundle, const EquivariantMapData& map,
                               const std::vector<PhiEntry>& phi) {
    require_valid(bundle, map);
    std::vector<const StratumComponent*> mapped;
    std::map<std::string, Classifier> level;
    std::map<std::string, ShadowVector> relative, total;
    for (const auto& c : bundle.components) {
        const ComponentMap* m = map.find(c.id);
        if (!m || !m->self_mapped) continue;
        mapped.push_back(&c);
        Classifier cl = nonequivariant_classifier(c.ring, m->twist);
        relative.emplace(c.id, lattice_trace(m->matrices, cl));
        level.emplace(c.id, std::move(cl));
    }

    auto strictly_below = [&](const StratumComponent& x, const StratumComponent& y) {
        return x.isotropy.order() < y.isotropy.order() && is_subconjugate(bundle.group, x.isotropy, y.isotropy);
    };
    std::map<std::pair<std::string, std::string>, std::vector<LabelMap>> pushes;  // (source, target)
    for (const auto& entry : phi) {
        const StratumComponent* y = bundle.find(entry.source);
        const StratumComponent* x = bundle.find(entry.target);
        if (!y || !x) throw Error(ErrorKind::IncompatibleLevels, "phi entry names an unknown component");
        if (!level.count(y->id) || !level.count(x->id)) continue;
        if (!strictly_below(*x, *y))
            throw Error(ErrorKind::IncompatibleLevels,
                        "isotropy of " + x->id + " is not strictly subconjugate to that of " + y->id);
        auto& maps = pushes[{y->id, x->id}];
        if (!maps.empty()) throw Error(ErrorKind::IncompatibleLevels, "duplicate phi entry " + y->id + " -> " + x->id);
        for (const auto& copy : entry.copies)
            maps.push_back(phi_pushforward(level.at(y->id), level.at(x->id), copy.lattice_map, copy.offset));
        if (entry.copies.empty()) maps.push_back(nullptr);
    }
    for (const auto* x : mapped)
        for (const auto* y : mapped)
            if (strictly_below(*x, *y) && !pushes.count({y->id, x->id}))
                throw Error(ErrorKind::MissingPhiMap, y->id + " -> " + x->id);

    auto incoming = [&](const std::string& target) {
        std::vector<std::pair<std::string, const LabelMap*>> out;
        for (const auto& [key, maps] : pushes)
            if (key.second == target)
                for (const auto& f : maps)
                    if (f) out.emplace_back(key.first, &f);
        return out;
    };

    NielsenFunction result;
    for (std::size_t h = 0; h < bundle.subgroup_classes.size(); ++h) result.values[h] = 0;
    for (const auto* x : mapped) {
        ShadowVector t = relative.at(x->id);
        for (const auto& [source, f] : incoming(x->id))
            for (const auto& [delta, c] : relative.at(source).coeffs()) t.add((*f)(delta), c);
        total.emplace(x->id, std::move(t));
    }
    for (const auto* x : mapped) {
        NielsenLevel lvl;
        lvl.component = x->id;
        std::set<ClassLabel> labels;
        for (const auto& [l, c] : relative.at(x->id).coeffs()) labels.insert(l);
        for (const auto& [l, c] : total.at(x->id).coeffs()) labels.insert(l);
        auto in = incoming(x->id);
        for (const auto& alpha : labels) {
            NielsenClass nc{alpha, relative.at(x->id).coefficient(alpha), total.at(x->id).coefficient(alpha), false};
            nc.essential = nc.total_index != 0;
            for (const auto& [source, f] : in) {
                for (const auto& [delta, c] : total.at(source).coeffs())
                    if ((*f)(delta) == alpha) nc.essential = false;
            }
            if (nc.essential) ++result.values[x->isotropy_class];
            lvl.classes.push_back(std::move(nc));
        }
        result.levels.push_back(std::move(lvl));
    }
    return result;
}

ZeroEquivalenceReport zero_equivalence_report(const GCWBundle& bundle, const EquivariantMapData& map,
                                              const std::vector<PhiEntry>& phi) {
    ZeroEquivalenceReport r;
    ExtendedInvariant lef = extended_global_lefschetz(bundle, map);
    ExtendedInvariant reid = extended_global_reidemeister(bundle, map);
    r.extended_lefschetz_zero = lef.is_zero();
    r.plain_lefschetz_zero = true;
    for (const auto& [id, x] : identity_coefficients(lef, bundle))
        if (x != 0) r.plain_lefschetz_zero = false;
    r.burnside_lefschetz_zero = plain_global_lefschetz(lef, bundle).is_zero();
    r.stratum_traces_zero = true;
    for (const auto& c : bundle.components) {
        const ComponentMap* m = map.find(c.id);
        if (!m || !m->self_mapped) continue;
        if (alternating_specialization(projected(c, *m), c.finite_ring->finite_part().identity(),
                                       m->twist.finite_twist) != 0)
            r.stratum_traces_zero = false;
    }
    r.extended_reidemeister_zero = reid.is_zero();
    r.plain_reidemeister_zero = plain_reidemeister(reid, bundle).is_zero();
    r.nielsen_zero = nielsen_number(bundle, map, phi).is_zero();
    if (!r.prenielsen_agree())
        throw Error(ErrorKind::EquivalenceViolated, "stratum traces and plain Lefschetz coefficients disagree on zero");
    if (!r.nielsen_matches_plain())
        throw Error(ErrorKind::EquivalenceViolated, "Nielsen number and plain Reidemeister trace disagree on zero");
    return r;
}

}  // namespace equilef
