// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Red criteria are reported, not hidden; the exit status only reflects crashes.

#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace equilef;
using namespace testing_support;

namespace {

const Rational kTolerance = 0;  // every comparison is exact
constexpr int kPropertyCases = 1000;
constexpr int kRandomBundles = 50;

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> notes;
    bool ok = true;

    void check(bool cond, const std::string& what) {
        notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
        ok = ok && cond;
    }
    void expect(const Rational& got, const Rational& want, const std::string& what) {
        Rational d = got - want;
        if (d < 0) d = -d;
        check(d <= kTolerance, what + ": got " + format_rational(got) + ", expected " + format_rational(want));
    }
    void print() const {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title << "\n";
        for (const auto& n : notes) std::cout << "        " << n << "\n";
    }
};

template <class Fn>
void guarded(Criterion& c, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        c.check(false, std::string("exception: ") + e.what());
    }
}

Rational lef(const ExtendedInvariant& ext, const InputDocument& doc, const std::string& id, const std::string& name) {
    const auto* c = doc.bundle.find(id);
    Classifier cl = lefschetz_classifier(*c, *doc.map.find(id));
    return ext.coefficient(id, cl.canonicalize(c->finite_ring->lift(*c->finite_ring->finite_part().find(name))));
}

std::vector<Rational> coefficients(const ExtendedInvariant& ext, const std::string& id) {
    std::vector<Rational> out;
    for (const auto& [k, v] : ext.entries())
        if (k.first == id) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> nums(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.push_back(x);
    return out;
}

std::string isotropy_name(const InputDocument& doc, const std::string& id) {
    const auto* c = doc.bundle.find(id);
    std::string s = "{";
    for (int m : c->isotropy.members) s += (s.size() > 1 ? "," : "") + doc.bundle.group.name(m);
    return s + "}";
}

Criterion golden_lefschetz() {
    Criterion c{1, "golden extended global Lefschetz invariants", {}};
    guarded(c, [&] {
        auto d3 = load_fixture("circle_z2_deg3");
        auto l3 = extended_global_lefschetz(d3.bundle, d3.map);
        c.expect(lef(l3, d3, "free", "e"), -1, "circle deg 3 [e]");
        c.expect(lef(l3, d3, "free", "t"), -1, "circle deg 3 [t]");
        auto d5 = load_fixture("circle_z2_deg5");
        auto l5 = extended_global_lefschetz(d5.bundle, d5.map);
        c.expect(lef(l5, d5, "free", "e"), -2, "circle deg 5 [e]");
        c.expect(lef(l5, d5, "free", "t"), -2, "circle deg 5 [t]");

        for (int k : {1, 2}) {
            auto d = load_fixture("s2_z2_map" + std::to_string(k));
            auto l = extended_global_lefschetz(d.bundle, d.map);
            std::string tag = "S2/Z2 map " + std::to_string(k);
            c.expect(lef(l, d, "a1", "e"), -2, tag + " equator");
            c.expect(lef(l, d, "a2", "e"), k == 1 ? 3 : 0, tag + " free [e]");
            c.expect(lef(l, d, "a2", "t"), k == 1 ? 0 : 3, tag + " free [t]");
        }

        auto z3 = load_fixture("s2_z3");
        auto lz = extended_global_lefschetz(z3.bundle, z3.map);
        c.expect(lef(lz, z3, "a1", "e"), 1, "S2/Z3 pole 1");
        c.expect(lef(lz, z3, "a2", "e"), 1, "S2/Z3 pole 2");
        for (const char* g : {"e", "g", "g2"}) c.expect(lef(lz, z3, "a3", g), -1, std::string("S2/Z3 free [") + g + "]");

        auto tz = load_fixture("torus_z2");
        auto lt = extended_global_lefschetz(tz.bundle, tz.map);
        c.expect(lef(lt, tz, "a1", "e"), -2, "T2/Z2 first circle");
        c.expect(lef(lt, tz, "a2", "e"), -2, "T2/Z2 second circle");
        c.expect(lef(lt, tz, "a3", "e"), 2, "T2/Z2 free [e]");
        c.expect(lef(lt, tz, "a3", "t"), 0, "T2/Z2 free [t]");

        auto sc = load_fixture("circle_s3_deg4");
        auto ls = extended_global_lefschetz(sc.bundle, sc.map);
        std::set<std::string> isotropies;
        for (const char* id : {"a1", "a3", "a5"}) {
            c.expect(lef(ls, sc, id, "e"), 1, std::string("S1/S3 fixed stratum ") + isotropy_name(sc, id));
            isotropies.insert(isotropy_name(sc, id));
        }
        c.check(isotropies == std::set<std::string>{"{e,b}", "{e,ba}", "{e,ba2}"},
                "S1/S3 fixed strata are the three reflection orbit types");
        c.expect(lef(ls, sc, "a7", "e"), -1, "S1/S3 free [e]");
        c.expect(lef(ls, sc, "a7", "a"), -1, "S1/S3 free [a]");
        c.expect(lef(ls, sc, "a7", "b"), 2, "S1/S3 free [b]");
    });
    return c;
}

Criterion geometric_equals_global() {
    Criterion c{2, "geometric assembly from the fixed-point tables equals the global invariant", {}};
    guarded(c, [&] {
        for (const auto& name : fixture_names()) {
            auto doc = load_fixture(name);
            bool ok = doc.fixed_points &&
                      assemble_geometric_lefschetz(doc.bundle, doc.map, *doc.fixed_points) ==
                          extended_global_lefschetz(doc.bundle, doc.map);
            c.check(ok, name);
        }
    });
    return c;
}

Criterion golden_reidemeister() {
    Criterion c{3, "golden extended global Reidemeister invariants", {}};
    guarded(c, [&] {
        auto d3 = load_fixture("circle_z2_deg3");
        auto r3 = extended_global_reidemeister(d3.bundle, d3.map);
        c.check(coefficients(r3, "free") == nums({-1, -1}), "circle deg 3: two classes, both -1");
        c.check(reidemeister_classifier(*d3.bundle.find("free"), *d3.map.find("free")).class_count() == 2u,
                "circle deg 3: two labels");
        auto d5 = load_fixture("circle_z2_deg5");
        auto r5 = extended_global_reidemeister(d5.bundle, d5.map);
        c.check(coefficients(r5, "free") == nums({-1, -1, -1, -1}), "circle deg 5: four classes, all -1");

        auto tz = load_fixture("torus_z2");
        auto rt = extended_global_reidemeister(tz.bundle, tz.map);
        c.check(coefficients(rt, "a1") == nums({-1, -1}) && coefficients(rt, "a2") == nums({-1, -1}) &&
                    coefficients(rt, "a3") == nums({1, 1}) && rt.entries().size() == 6,
                "T2/Z2: six nonzero coefficients -1,-1,-1,-1,+1,+1");
        std::optional<std::size_t> labels = 0;
        for (const auto& comp : tz.bundle.components) {
            auto n = reidemeister_classifier(comp, *tz.map.find(comp.id)).class_count();
            labels = (labels && n) ? std::optional<std::size_t>(*labels + *n) : std::nullopt;
        }
        c.check(labels == 12u, "T2/Z2: twelve labels (got " + (labels ? std::to_string(*labels) : "infinitely many") + ")");

        auto sc = load_fixture("circle_s3_deg4");
        auto rs = extended_global_reidemeister(sc.bundle, sc.map);
        c.check(rs.entries().size() == 7, "S1/S3: seven nonzero terms");
        c.check(coefficients(rs, "a1") == nums({1}) && coefficients(rs, "a3") == nums({1}) &&
                    coefficients(rs, "a5") == nums({1}),
                "S1/S3: +1 on each fixed stratum");
        Classifier cl = reidemeister_classifier(*sc.bundle.find("a7"), *sc.map.find("a7"));
        Rational b_total = 0;
        std::size_t b_terms = 0;
        int b = *sc.bundle.find("a7")->ring->finite_part().find("b");
        for (const auto& [k, v] : rs.entries())
            if (k.first == "a7" && k.second.rep.q == b) {
                b_total += v;
                ++b_terms;
                c.expect(v, 1, "S1/S3: coefficient of " + cl.format(k.second));
            }
        c.check(b_terms == 2, "S1/S3: two distinct b classes");
        c.check(coefficients(rs, "a7") == nums({-1, -1, 1, 1}), "S1/S3: free level -[e]-[a]+[b,.]+[b,.]");

        for (const char* name : {"s2_z2_map1", "s2_z2_map2", "s2_z3"}) {
            auto d = load_fixture(name);
            c.check(collapse_to_lefschetz(extended_global_reidemeister(d.bundle, d.map), d.bundle, d.map) ==
                        extended_global_lefschetz(d.bundle, d.map),
                    std::string(name) + ": Reidemeister collapses to the Lefschetz invariant");
        }
    });
    return c;
}

Criterion class_counts() {
    Criterion c{4, "twisted class counts", {}};
    guarded(c, [&] {
        auto count = [](const std::string& name) -> std::optional<std::size_t> {
            auto doc = load_fixture(name);
            std::size_t total = 0;
            for (const auto& comp : doc.bundle.components) {
                const auto* m = doc.map.find(comp.id);
                if (!m || !m->self_mapped) continue;
                auto n = reidemeister_classifier(comp, *m).class_count();
                if (!n) return std::nullopt;
                total += *n;
            }
            return total;
        };
        auto show = [](std::optional<std::size_t> n) { return n ? std::to_string(*n) : std::string("infinite"); };
        for (auto [name, want] : std::vector<std::pair<std::string, std::size_t>>{
                 {"circle_z2_deg3", 2}, {"circle_z2_deg5", 4}, {"torus_z2", 12}, {"circle_s3_deg4", 13}}) {
            auto n = count(name);
            c.check(n == want, name + ": " + show(n) + " (expected " + std::to_string(want) + ")");
        }
    });
    return c;
}

Criterion properties() {
    Criterion c{5, "randomized property suites", {}};
    guarded(c, [&] {
        Rng rng(2024);
        auto group = [&]() -> FiniteGroup {
            switch (rng.uniform(0, 3)) {
            case 0: return cyclic(rng.uniform(1, 6));
            case 1: return klein();
            case 2: return s3();
            default: return dihedral(rng.uniform(2, 4));
            }
        };
        int bad = 0;
        for (int i = 0; i < kPropertyCases; ++i) {
            RingPtr r = CoefficientGroup::finite(group());
            Classifier cl = plain_conjugacy_classifier(r);
            auto k = static_cast<std::size_t>(rng.uniform(1, 3)), l = static_cast<std::size_t>(rng.uniform(1, 3));
            auto a = random_matrix(r, k, l, rng), b = random_matrix(r, l, k, rng);
            if (!(hattori_stallings_trace(a * b, cl) == hattori_stallings_trace(b * a, cl))) ++bad;
        }
        c.check(bad == 0, "trace cyclicity, " + std::to_string(kPropertyCases) + " cases");

        bad = 0;
        for (int i = 0; i < kPropertyCases; ++i) {
            FiniteGroup g = group();
            auto rt = random_ring_with_twist(g, rng);
            rt.twist.finite_twist = random_automorphism(g, rng);
            if (!twist_violations(*rt.ring, rt.twist).empty()) rt.twist.finite_twist = TwistData::identity(*rt.ring).finite_twist;
            Classifier cl = twisted_classifier(rt.ring, rt.twist);
            auto n = static_cast<std::size_t>(rng.uniform(1, 3));
            auto f = random_matrix(rt.ring, n, n, rng);
            auto [p, pinv] = elementary(rt.ring, n, rng);
            if (!(hattori_stallings_trace(pinv * f * twisted(p, rt.twist), cl) == hattori_stallings_trace(f, cl))) ++bad;
        }
        c.check(bad == 0, "conjugation invariance, " + std::to_string(kPropertyCases) + " cases");

        bad = 0;
        for (int i = 0; i < kPropertyCases; ++i) {
            FiniteGroup g = group();
            RingPtr r = CoefficientGroup::finite(g);
            Classifier cl = plain_conjugacy_classifier(r);
            auto n = static_cast<std::size_t>(rng.uniform(1, 3));
            auto m = random_matrix(r, n, n, rng);
            int x = rng.uniform(0, g.order() - 1);
            Rational s = specialize_at(m, x);
            Rational predicted = centralizer_order(g, x) * hattori_stallings_trace(m, cl).coefficient(cl.canonicalize(r->lift(x)));
            if (s != predicted || s != int_trace(regular_matrix(m, x, {}))) ++bad;
        }
        c.check(bad == 0, "specialization identity, " + std::to_string(kPropertyCases) + " cases");

        int bad_stab = 0, bad_euler = 0, bad_int = 0;
        for (int i = 0; i < kPropertyCases; ++i) {
            auto rc = random_case(rng);
            auto lef = extended_global_lefschetz(rc.bundle, rc.map);
            auto reid = extended_global_reidemeister(rc.bundle, rc.map);
            if (!lef.is_integral() || !reid.is_integral()) ++bad_int;
            auto id = identity_coefficients(extended_global_lefschetz(rc.bundle, identity_map(rc.bundle)), rc.bundle);
            for (const auto& comp : rc.bundle.components)
                if (id.at(comp.id) != euler_characteristic_stratum(comp)) ++bad_euler;
            // stabilize: a contractible pair in degrees 0 and 1 of the first component
            auto& comp = rc.bundle.components.front();
            auto& m = rc.map.components.at(comp.id);
            const RingPtr& r = comp.ring;
            if (comp.chain_ranks.size() < 2) {
                comp.chain_ranks.push_back(0);
                comp.boundaries.push_back(GroupRingMatrix(r, static_cast<std::size_t>(comp.chain_ranks[0]), 0));
                if (m.self_mapped) m.matrices.push_back(GroupRingMatrix(r, 0, 0));
            }
            GroupElement u = random_element(*r, rng, 1);
            RingElement x = random_ring_element(r, rng);
            RingElement y = unit(r, u) * x * unit(r, r->inverse(apply_twist(*r, m.twist, u)));
            auto grow = [&](const GroupRingMatrix& a, std::size_t dr, std::size_t dc, const RingElement* corner) {
                GroupRingMatrix out(r, a.rows() + dr, a.cols() + dc);
                for (std::size_t p = 0; p < a.rows(); ++p)
                    for (std::size_t q = 0; q < a.cols(); ++q) out.set(p, q, a.at(p, q));
                if (corner) out.set(a.rows(), a.cols(), *corner);
                return out;
            };
            RingElement ue = unit(r, u);
            comp.boundaries[0] = grow(comp.boundaries[0], 0, 1, nullptr);
            comp.boundaries[1] = grow(comp.boundaries[1], 1, 1, &ue);
            if (comp.boundaries.size() > 2) comp.boundaries[2] = grow(comp.boundaries[2], 1, 0, nullptr);
            comp.chain_ranks[0] += 1;
            comp.chain_ranks[1] += 1;
            if (m.self_mapped) {
                m.matrices[0] = grow(m.matrices[0], 1, 1, &y);
                m.matrices[1] = grow(m.matrices[1], 1, 1, &x);
            }
            if (!validate(rc.bundle, rc.map).ok() || !(extended_global_lefschetz(rc.bundle, rc.map) == lef) ||
                !(extended_global_reidemeister(rc.bundle, rc.map) == reid))
                ++bad_stab;
        }
        c.check(bad_stab == 0, "stabilization invariance, " + std::to_string(kPropertyCases) + " cases");
        c.check(bad_euler == 0, "identity map gives stratum Euler characteristics, " + std::to_string(kPropertyCases) + " cases");
        c.check(bad_int == 0, "integrality of final coefficients, " + std::to_string(kPropertyCases) + " cases");
    });
    return c;
}

Criterion zero_equivalence() {
    Criterion c{6, "zero-equivalence on fixtures and random bundles", {}};
    guarded(c, [&] {
        std::vector<std::pair<std::string, RandomCase>> cases;
        for (const auto& name : fixture_names()) {
            auto doc = load_fixture(name);
            cases.push_back({name, RandomCase{doc.bundle, doc.map, doc.phi.value_or(std::vector<PhiEntry>{})}});
        }
        Rng rng(77);
        for (int i = 0; i < kRandomBundles; ++i) cases.push_back({"random " + std::to_string(i), random_case(rng)});

        int prenielsen_bad = 0, nielsen_bad = 0, plain_bad = 0;
        std::string first_counterexample;
        for (const auto& [name, rc] : cases) {
            ZeroEquivalenceReport z;
            try {
                z = zero_equivalence_report(rc.bundle, rc.map, rc.phi);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::EquivalenceViolated) throw;
                ++prenielsen_bad;
                continue;
            }
            if (!z.prenielsen_agree()) ++prenielsen_bad;
            if (!z.nielsen_matches_plain()) ++plain_bad;
            if (!z.nielsen_matches_extended()) {
                ++nielsen_bad;
                if (first_counterexample.empty()) {
                    std::ostringstream s;
                    s << name << ": N = 0 but";
                    auto ext = extended_global_reidemeister(rc.bundle, rc.map);
                    for (const auto& [k, v] : ext.entries()) {
                        Classifier cl = reidemeister_classifier(*rc.bundle.find(k.first), *rc.map.find(k.first));
                        s << " " << format_rational(v) << "*(" << k.first << ", " << cl.format(k.second) << ")";
                    }
                    first_counterexample = s.str();
                }
            }
        }
        std::string n = std::to_string(cases.size()) + " cases";
        c.check(prenielsen_bad == 0, "stratum traces zero <=> plain Lefschetz zero, " + n);
        c.check(nielsen_bad == 0, "Nielsen zero <=> extended Reidemeister zero, " + n + ", " +
                                      std::to_string(nielsen_bad) + " counterexamples");
        if (!first_counterexample.empty()) c.notes.push_back("     e.g. " + first_counterexample);
        c.notes.push_back(std::string(plain_bad == 0 ? "ok   " : "FAIL ") +
                          "(informational) Nielsen zero <=> plain Reidemeister zero, " + n);
    });
    return c;
}

Criterion deterministic_reports() {
    Criterion c{7, "report runs end to end with byte-identical output", {}};
    guarded(c, [&] {
        for (const auto& name : fixture_names()) {
            auto first = run(Command::Report, load_fixture(name));
            auto second = run(Command::Report, load_fixture(name));
            c.check(first.exit_code == 0 && render_json(first.report) == render_json(second.report) &&
                        render_text(first.report) == render_text(second.report),
                    name);
        }
    });
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> all{golden_lefschetz(),  geometric_equals_global(), golden_reidemeister(), class_counts(),
                               properties(),        zero_equivalence(),        deterministic_reports()};
    int passed = 0;
    for (const auto& c : all) {
        c.print();
        passed += c.ok;
    }
    std::cout << passed << "/" << all.size() << " criteria pass\n";
    return 0;
}
