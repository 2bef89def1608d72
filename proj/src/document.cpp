#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "equilef/errors.hpp"
#include "equilef/io.hpp"

namespace equilef {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::SchemaError, path + ": " + msg);
}

void check_fields(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!obj.is_object()) schema(path, "expected an object");
    for (const auto& item : obj.items()) {
        bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return item.key() == a; });
        if (!ok) schema(path + "." + item.key(), "unknown field '" + item.key() + "'");
    }
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(path, std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array");
    return j;
}

Rational as_coefficient(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            schema(path, e.detail());
        }
    }
    schema(path, "expected an integer or a rational string");
}

IntVector as_int_vector(const Json& j, std::size_t size, const std::string& path) {
    as_array(j, path);
    if (j.size() != size) schema(path, "expected " + std::to_string(size) + " entries");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

IntMatrix as_int_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    as_array(j, path);
    if (j.size() != rows) schema(path, "expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        IntVector r = as_int_vector(j[i], cols, path + "[" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
    }
    return m;
}

int group_element(const FiniteGroup& g, const Json& j, const std::string& path) {
    std::string name = as_string(j, path);
    auto x = g.find(name);
    if (!x) schema(path, "unknown group element '" + name + "'");
    return *x;
}

// Finite-part index of a component from a G-element name (or a raw index).
struct LocalNames {
    const FiniteGroup* group;
    const WeylGroup* weyl;
    const Subgroup* stabilizer;

    int operator()(const Json& j, const std::string& path) const {
        if (j.is_number_integer()) {
            auto q = j.get<std::int64_t>();
            if (q < 0 || q >= stabilizer->order()) schema(path, "finite-part index out of range");
            return static_cast<int>(q);
        }
        int g = group_element(*group, j, path);
        int p = weyl->project[g];
        if (p < 0) schema(path, "'" + group->name(g) + "' is not in the normalizer of the isotropy group");
        auto it = std::lower_bound(stabilizer->members.begin(), stabilizer->members.end(), p);
        if (it == stabilizer->members.end() || *it != p)
            schema(path, "'" + group->name(g) + "' is not in the component stabilizer");
        return static_cast<int>(it - stabilizer->members.begin());
    }
};

LocalNames names_of(const GCWBundle& b, const StratumComponent& c) { return {&b.group, &c.weyl, &c.stabilizer}; }

RingElement parse_ring_element(const Json& j, const StratumComponent& c, const LocalNames& local,
                               const std::string& path) {
    RingElement r(c.ring);
    const auto n = static_cast<std::size_t>(c.ring->rank());
    if (c.ring->is_finite()) {
        if (!j.is_object()) schema(path, "expected an {element: coefficient} object");
        for (const auto& item : j.items()) {
            std::string p = path + "." + item.key();
            r.add_term(GroupElement{local(Json(item.key()), p), {}}, as_coefficient(item.value(), p));
        }
        return r;
    }
    as_array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        check_fields(j[i], {"q", "v", "c"}, p);
        GroupElement g{local(field(j[i], "q", p), p + ".q"), as_int_vector(field(j[i], "v", p), n, p + ".v")};
        r.add_term(g, as_coefficient(field(j[i], "c", p), p + ".c"));
    }
    return r;
}

GroupRingMatrix parse_matrix(const Json& j, const StratumComponent& c, const LocalNames& local, std::size_t rows,
                             std::size_t cols, const std::string& path) {
    as_array(j, path);
    std::size_t actual_cols = cols;
    if (!j.empty()) {
        as_array(j[0], path + "[0]");
        actual_cols = j[0].size();
    }
    GroupRingMatrix m(c.ring, j.size(), actual_cols);
    (void)rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string pr = path + "[" + std::to_string(i) + "]";
        as_array(j[i], pr);
        if (j[i].size() != actual_cols) schema(pr, "ragged matrix row");
        for (std::size_t k = 0; k < actual_cols; ++k)
            m.set(i, k, parse_ring_element(j[i][k], c, local, pr + "[" + std::to_string(k) + "]"));
    }
    return m;
}

FiniteGroup parse_group(const Json& j, const ParseOptions& options) {
    const std::string path = "group";
    check_fields(j, {"names", "cayley", "permutations", "generator_names"}, path);
    FiniteGroup g;
    if (j.contains("cayley")) {
        if (j.contains("permutations") || j.contains("generator_names"))
            schema(path, "give either a Cayley table or permutations");
        std::vector<std::vector<int>> table;
        for (const auto& row : as_array(j["cayley"], path + ".cayley")) {
            std::vector<int> r;
            for (const auto& x : as_array(row, path + ".cayley")) r.push_back(static_cast<int>(as_int(x, path + ".cayley")));
            table.push_back(std::move(r));
        }
        if (static_cast<int>(table.size()) > options.max_group_order)
            throw Error(ErrorKind::OrderBoundExceeded, "group order exceeds " + std::to_string(options.max_group_order));
        std::vector<std::string> names;
        if (j.contains("names"))
            for (const auto& x : as_array(j["names"], path + ".names")) names.push_back(as_string(x, path + ".names"));
        return FiniteGroup::from_cayley(std::move(table), std::move(names));
    }
    if (!j.contains("permutations")) schema(path, "missing field 'cayley' or 'permutations'");
    if (j.contains("names")) schema(path + ".names", "element names are derived from generator_names");
    std::vector<std::vector<int>> perms;
    for (const auto& p : as_array(j["permutations"], path + ".permutations")) {
        std::vector<int> r;
        for (const auto& x : as_array(p, path + ".permutations")) r.push_back(static_cast<int>(as_int(x, path + ".permutations")));
        perms.push_back(std::move(r));
    }
    std::vector<std::string> gen_names;
    if (j.contains("generator_names"))
        for (const auto& x : as_array(j["generator_names"], path + ".generator_names"))
            gen_names.push_back(as_string(x, path + ".generator_names"));
    return from_permutations(perms, options.max_group_order, gen_names);
}

StratumComponent parse_component(const Json& j, const GCWBundle& b, const std::string& path) {
    check_fields(j, {"id", "isotropy", "stabilizer", "pi1", "chain_ranks", "boundaries"}, path);
    std::string id = as_string(field(j, "id", path), path + ".id");
    std::vector<int> gens;
    if (j.contains("isotropy"))
        for (const auto& x : as_array(j["isotropy"], path + ".isotropy")) gens.push_back(group_element(b.group, x, path + ".isotropy"));
    Subgroup h = subgroup_closure(b.group, gens);
    WeylGroup w = weyl_group(b.group, h);
    std::optional<Subgroup> stab;
    if (j.contains("stabilizer")) {
        std::vector<int> sg;
        for (const auto& x : as_array(j["stabilizer"], path + ".stabilizer")) {
            int g = group_element(b.group, x, path + ".stabilizer");
            if (w.project[g] < 0) schema(path + ".stabilizer", "'" + b.group.name(g) + "' is not in the normalizer");
            sg.push_back(w.project[g]);
        }
        stab = subgroup_closure(w.quotient, sg);
    }
    Subgroup stabilizer = stab ? *stab : whole_group(w.quotient);
    LocalNames local{&b.group, &w, &stabilizer};
    const int qn = stabilizer.order();

    Pi1Descriptor pi1;
    if (j.contains("pi1")) {
        const Json& p = j["pi1"];
        const std::string pp = path + ".pi1";
        check_fields(p, {"rank", "action", "cocycle"}, pp);
        pi1.rank = static_cast<int>(as_int(field(p, "rank", pp), pp + ".rank"));
        if (pi1.rank < 0) schema(pp + ".rank", "negative rank");
        const auto n = static_cast<std::size_t>(pi1.rank);
        pi1.action.assign(qn, IntMatrix::identity(n));
        pi1.cocycle.assign(static_cast<std::size_t>(qn) * qn, IntVector(n, 0));
        if (p.contains("action")) {
            if (!p["action"].is_object()) schema(pp + ".action", "expected an {element: matrix} object");
            for (const auto& item : p["action"].items()) {
                std::string ap = pp + ".action." + item.key();
                pi1.action[local(Json(item.key()), ap)] = as_int_matrix(item.value(), n, n, ap);
            }
        }
        if (p.contains("cocycle")) {
            const auto& arr = as_array(p["cocycle"], pp + ".cocycle");
            for (std::size_t i = 0; i < arr.size(); ++i) {
                std::string cp = pp + ".cocycle[" + std::to_string(i) + "]";
                check_fields(arr[i], {"g", "h", "v"}, cp);
                int a = local(field(arr[i], "g", cp), cp + ".g");
                int c = local(field(arr[i], "h", cp), cp + ".h");
                pi1.cocycle[static_cast<std::size_t>(a) * qn + c] = as_int_vector(field(arr[i], "v", cp), n, cp + ".v");
            }
        }
    }

    std::vector<int> ranks;
    for (const auto& x : as_array(field(j, "chain_ranks", path), path + ".chain_ranks"))
        ranks.push_back(static_cast<int>(as_int(x, path + ".chain_ranks")));

    StratumComponent c;
    try {
        c = make_component(b.group, b.subgroup_classes, id, h, stab, pi1, ranks);
    } catch (const Error& e) {
        schema(path, e.detail());
    }
    if (j.contains("boundaries")) {
        const auto& arr = as_array(j["boundaries"], path + ".boundaries");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string bp = path + ".boundaries[" + std::to_string(i) + "]";
            check_fields(arr[i], {"degree", "matrix"}, bp);
            auto d = as_int(field(arr[i], "degree", bp), bp + ".degree");
            if (d < 1 || d >= static_cast<std::int64_t>(ranks.size())) schema(bp + ".degree", "degree out of range");
            auto du = static_cast<std::size_t>(d);
            c.boundaries[du] = parse_matrix(field(arr[i], "matrix", bp), c, local,
                                            static_cast<std::size_t>(ranks[du - 1]),
                                            static_cast<std::size_t>(ranks[du]), bp + ".matrix");
        }
    }
    return c;
}

ComponentMap parse_component_map(const Json& j, const GCWBundle& b, const StratumComponent& c, const std::string& path) {
    check_fields(j, {"self_mapped", "twist", "matrices"}, path);
    ComponentMap m;
    const Json& sm = field(j, "self_mapped", path);
    if (!sm.is_boolean()) schema(path + ".self_mapped", "expected a boolean");
    m.self_mapped = sm.get<bool>();
    m.twist = TwistData::identity(*c.ring);
    LocalNames local = names_of(b, c);
    const auto n = static_cast<std::size_t>(c.ring->rank());
    if (j.contains("twist")) {
        const Json& t = j["twist"];
        const std::string tp = path + ".twist";
        check_fields(t, {"finite", "lattice", "offsets"}, tp);
        if (t.contains("finite")) {
            if (!t["finite"].is_object()) schema(tp + ".finite", "expected an {element: element} object");
            for (const auto& item : t["finite"].items()) {
                std::string p = tp + ".finite." + item.key();
                m.twist.finite_twist[local(Json(item.key()), p)] = local(item.value(), p);
            }
        }
        if (t.contains("lattice")) m.twist.lattice_twist = as_int_matrix(t["lattice"], n, n, tp + ".lattice");
        if (t.contains("offsets")) {
            if (!t["offsets"].is_object()) schema(tp + ".offsets", "expected an {element: vector} object");
            for (const auto& item : t["offsets"].items()) {
                std::string p = tp + ".offsets." + item.key();
                m.twist.base_offset[local(Json(item.key()), p)] = as_int_vector(item.value(), n, p);
            }
        }
    }
    if (j.contains("matrices")) {
        const auto& arr = as_array(j["matrices"], path + ".matrices");
        for (std::size_t d = 0; d < arr.size(); ++d) {
            auto r = static_cast<std::size_t>(c.rank(d));
            m.matrices.push_back(parse_matrix(arr[d], c, local, r, r, path + ".matrices[" + std::to_string(d) + "]"));
        }
    }
    return m;
}

FixedPointTable parse_table(const Json& j, const GCWBundle& b, bool reidemeister, const std::string& path) {
    FixedPointTable table;
    as_array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        check_fields(j[i], {"component", "element", "index", "note"}, p);
        FixedPointRow row;
        row.component = as_string(field(j[i], "component", p), p + ".component");
        const StratumComponent* c = b.find(row.component);
        if (!c) schema(p + ".component", "unknown component '" + row.component + "'");
        LocalNames local = names_of(b, *c);
        const Json& el = field(j[i], "element", p);
        if (el.is_object()) {
            if (!reidemeister) schema(p + ".element", "expected an element name");
            check_fields(el, {"q", "v"}, p + ".element");
            row.element.q = local(field(el, "q", p + ".element"), p + ".element.q");
            row.element.v = as_int_vector(field(el, "v", p + ".element"), static_cast<std::size_t>(c->ring->rank()),
                                          p + ".element.v");
        } else {
            row.element.q = local(el, p + ".element");
            if (reidemeister) row.element.v.assign(static_cast<std::size_t>(c->ring->rank()), 0);
        }
        row.index = as_int(field(j[i], "index", p), p + ".index");
        if (j[i].contains("note")) row.note = as_string(j[i]["note"], p + ".note");
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<PhiEntry> parse_phi(const Json& j, const GCWBundle& b) {
    std::vector<PhiEntry> out;
    as_array(j, "phi");
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = "phi[" + std::to_string(i) + "]";
        check_fields(j[i], {"source", "target", "copies"}, p);
        PhiEntry e;
        e.source = as_string(field(j[i], "source", p), p + ".source");
        e.target = as_string(field(j[i], "target", p), p + ".target");
        const StratumComponent* s = b.find(e.source);
        const StratumComponent* t = b.find(e.target);
        if (!s) schema(p + ".source", "unknown component '" + e.source + "'");
        if (!t) schema(p + ".target", "unknown component '" + e.target + "'");
        const auto ns = static_cast<std::size_t>(s->ring->rank());
        const auto nt = static_cast<std::size_t>(t->ring->rank());
        const auto& copies = as_array(field(j[i], "copies", p), p + ".copies");
        for (std::size_t k = 0; k < copies.size(); ++k) {
            std::string cp = p + ".copies[" + std::to_string(k) + "]";
            check_fields(copies[k], {"lattice_map", "offset"}, cp);
            PhiCopy copy;
            copy.lattice_map = copies[k].contains("lattice_map")
                                   ? as_int_matrix(copies[k]["lattice_map"], nt, ns, cp + ".lattice_map")
                                   : IntMatrix(nt, ns);
            copy.offset = copies[k].contains("offset") ? as_int_vector(copies[k]["offset"], nt, cp + ".offset")
                                                       : IntVector(nt, 0);
            e.copies.push_back(std::move(copy));
        }
        out.push_back(std::move(e));
    }
    return out;
}

InputDocument parse_json(const Json& j, const ParseOptions& options) {
    check_fields(j, {"schema_version", "metadata", "group", "components", "map", "fixed_points",
                     "reidemeister_fixed_points", "phi"},
                 "document");
    InputDocument doc;
    doc.schema_version = static_cast<int>(as_int(field(j, "schema_version", "document"), "schema_version"));
    if (doc.schema_version != 1) schema("schema_version", "unsupported version " + std::to_string(doc.schema_version));
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) schema("metadata", "expected an object");
        for (const auto& item : j["metadata"].items())
            doc.bundle.metadata[item.key()] = as_string(item.value(), "metadata." + item.key());
    }
    GCWBundle& b = doc.bundle;
    b.group = parse_group(field(j, "group", "document"), options);
    b.subgroup_classes = subgroup_conjugacy_classes(b.group);
    const auto& comps = as_array(field(j, "components", "document"), "components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        StratumComponent c = parse_component(comps[i], b, "components[" + std::to_string(i) + "]");
        if (b.find(c.id)) schema("components[" + std::to_string(i) + "].id", "duplicate id '" + c.id + "'");
        b.components.push_back(std::move(c));
    }
    const Json& mp = field(j, "map", "document");
    if (!mp.is_object()) schema("map", "expected an object keyed by component id");
    for (const auto& item : mp.items()) {
        const StratumComponent* c = b.find(item.key());
        if (!c) schema("map." + item.key(), "unknown component '" + item.key() + "'");
        doc.map.components.emplace(item.key(), parse_component_map(item.value(), b, *c, "map." + item.key()));
    }
    if (j.contains("fixed_points")) doc.fixed_points = parse_table(j["fixed_points"], b, false, "fixed_points");
    if (j.contains("reidemeister_fixed_points"))
        doc.reidemeister_fixed_points = parse_table(j["reidemeister_fixed_points"], b, true, "reidemeister_fixed_points");
    if (j.contains("phi")) doc.phi = parse_phi(j["phi"], b);
    return doc;
}

std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json emit_element_name(const StratumComponent& c, int q) { return c.finite_ring->finite_part().name(q); }

Json emit_ring_element(const StratumComponent& c, const RingElement& e) {
    if (c.ring->is_finite()) {
        Json o = Json::object();
        for (const auto& [g, x] : e.terms()) o[c.finite_ring->finite_part().name(g.q)] = coefficient_json(x);
        return o;
    }
    Json a = Json::array();
    for (const auto& [g, x] : e.terms())
        a.push_back(Json{{"q", emit_element_name(c, g.q)}, {"v", g.v}, {"c", coefficient_json(x)}});
    return a;
}

Json emit_matrix(const StratumComponent& c, const GroupRingMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(emit_ring_element(c, m.at(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json emit_int_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

Json emit_table(const FixedPointTable& t, const GCWBundle& b, bool reidemeister) {
    Json a = Json::array();
    for (const auto& row : t) {
        const StratumComponent& c = *b.find(row.component);
        Json r;
        r["component"] = row.component;
        if (reidemeister && c.ring->rank() > 0)
            r["element"] = Json{{"q", emit_element_name(c, row.element.q)}, {"v", row.element.v}};
        else
            r["element"] = emit_element_name(c, row.element.q);
        r["index"] = row.index;
        if (!row.note.empty()) r["note"] = row.note;
        a.push_back(std::move(r));
    }
    return a;
}

}  // namespace

Json coefficient_json(const Rational& q) {
    if (is_integral(q)) {
        Integer n = boost::multiprecision::numerator(q);
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(n);
    }
    return format_rational(q);
}

InputDocument parse_document_text(const std::string& text, const ParseOptions& options) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, locate(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
    }
    return parse_json(j, options);
}

InputDocument parse_document(const std::filesystem::path& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document_text(ss.str(), options);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SchemaError)
            throw Error(e.kind(), path.filename().string() + ": " + e.detail());
        throw;
    }
}

Json emit_document(const InputDocument& doc) {
    const GCWBundle& b = doc.bundle;
    Json j;
    j["schema_version"] = doc.schema_version;
    if (!b.metadata.empty()) {
        Json m = Json::object();
        for (const auto& [k, v] : b.metadata) m[k] = v;
        j["metadata"] = m;
    }
    j["group"] = Json{{"names", b.group.names()}, {"cayley", b.group.cayley()}};
    Json comps = Json::array();
    for (const auto& c : b.components) {
        Json cj;
        cj["id"] = c.id;
        Json iso = Json::array();
        for (int x : c.isotropy.members)
            if (x != b.group.identity()) iso.push_back(b.group.name(x));
        cj["isotropy"] = iso;
        if (c.stabilizer.order() != c.weyl.quotient.order()) {
            Json st = Json::array();
            for (int w : c.stabilizer.members) st.push_back(b.group.name(c.weyl.lift[w]));
            cj["stabilizer"] = st;
        }
        if (c.ring->rank() > 0) {
            Json p;
            p["rank"] = c.ring->rank();
            Json act = Json::object();
            const int qn = c.ring->finite_part().order();
            for (int q = 0; q < qn; ++q) act[c.ring->finite_part().name(q)] = emit_int_matrix(c.ring->action(q));
            p["action"] = act;
            Json coc = Json::array();
            for (int a = 0; a < qn; ++a)
                for (int d = 0; d < qn; ++d)
                    if (!is_zero(c.ring->cocycle(a, d)))
                        coc.push_back(Json{{"g", c.ring->finite_part().name(a)},
                                           {"h", c.ring->finite_part().name(d)},
                                           {"v", c.ring->cocycle(a, d)}});
            p["cocycle"] = coc;
            cj["pi1"] = p;
        }
        cj["chain_ranks"] = c.chain_ranks;
        Json bd = Json::array();
        for (std::size_t d = 1; d < c.boundaries.size(); ++d)
            bd.push_back(Json{{"degree", d}, {"matrix", emit_matrix(c, c.boundaries[d])}});
        cj["boundaries"] = bd;
        comps.push_back(std::move(cj));
    }
    j["components"] = comps;
    Json mp = Json::object();
    for (const auto& c : b.components) {
        const ComponentMap* m = doc.map.find(c.id);
        if (!m) continue;
        Json mj;
        mj["self_mapped"] = m->self_mapped;
        if (m->self_mapped) {
            const auto& fp = c.ring->finite_part();
            Json t;
            Json fin = Json::object();
            for (int q = 0; q < fp.order(); ++q) fin[fp.name(q)] = fp.name(m->twist.finite_twist[q]);
            t["finite"] = fin;
            if (c.ring->rank() > 0) {
                t["lattice"] = emit_int_matrix(m->twist.lattice_twist);
                Json off = Json::object();
                for (int q = 0; q < fp.order(); ++q) off[fp.name(q)] = m->twist.base_offset[q];
                t["offsets"] = off;
            }
            mj["twist"] = t;
            Json mats = Json::array();
            for (const auto& x : m->matrices) mats.push_back(emit_matrix(c, x));
            mj["matrices"] = mats;
        }
        mp[c.id] = mj;
    }
    j["map"] = mp;
    if (doc.fixed_points) j["fixed_points"] = emit_table(*doc.fixed_points, b, false);
    if (doc.reidemeister_fixed_points) j["reidemeister_fixed_points"] = emit_table(*doc.reidemeister_fixed_points, b, true);
    if (doc.phi) {
        Json a = Json::array();
        for (const auto& e : *doc.phi) {
            Json copies = Json::array();
            for (const auto& c : e.copies)
                copies.push_back(Json{{"lattice_map", emit_int_matrix(c.lattice_map)}, {"offset", c.offset}});
            a.push_back(Json{{"source", e.source}, {"target", e.target}, {"copies", copies}});
        }
        j["phi"] = a;
    }
    return j;
}

}  // namespace equilef
