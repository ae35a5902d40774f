#include "gradalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gradalg {

using nlohmann::json;

FieldDesc parse_field_name(const std::string& name) {
    if (name == "Q") return FieldDesc::rational();
    if (name.size() > 1 && name[0] == 'F') {
        unsigned long p = 0;
        try {
            p = std::stoul(name.substr(1));
        } catch (...) {
            throw alg_error(errc::parse_error, "bad field name '" + name + "'");
        }
        if (!is_prime_u64(p)) throw alg_error(errc::validation_error, "field F" + std::to_string(p) + ": p is not prime");
        return FieldDesc::prime(p);
    }
    throw alg_error(errc::parse_error, "bad field name '" + name + "' (expected \"Q\" or \"F<p>\")");
}

namespace {

void require_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw alg_error(errc::parse_error, where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw alg_error(errc::validation_error, where + ": unknown key '" + it.key() + "'");
}

Scalar parse_scalar(const json& v, FieldDesc fd, const std::string& where) {
    if (v.is_number_integer()) return Scalar::from_int(fd, v.get<long>());
    if (v.is_string()) return Scalar::from_string(fd, v.get<std::string>());
    throw alg_error(errc::parse_error, where + ": expected an integer or a string literal");
}

QuiverPresentation parse_quiver(const json& obj, FieldDesc fd, const json* grading_overrides) {
    require_keys(obj, "presentation", {"vertices", "arrows", "relations", "path_length_bound"});
    QuiverPresentation p;
    p.field = fd;
    if (!obj.contains("vertices") || !obj["vertices"].is_array())
        throw alg_error(errc::parse_error, "presentation: missing vertex list");
    for (auto& v : obj["vertices"]) p.vertices.push_back(v.get<std::string>());
    if (obj.contains("arrows")) {
        for (auto& a : obj["arrows"]) {
            require_keys(a, "arrow", {"name", "source", "target", "degree"});
            Arrow ar;
            ar.name = a.at("name").get<std::string>();
            ar.source = a.at("source").get<std::string>();
            ar.target = a.at("target").get<std::string>();
            ar.degree = a.contains("degree") ? a["degree"].get<long>() : 0;
            p.arrows.push_back(std::move(ar));
        }
    }
    if (grading_overrides) {
        for (auto it = grading_overrides->begin(); it != grading_overrides->end(); ++it) {
            bool found = false;
            for (auto& ar : p.arrows)
                if (ar.name == it.key()) {
                    ar.degree = it.value().get<long>();
                    found = true;
                }
            if (!found)
                throw alg_error(errc::validation_error, "grading override names unknown arrow '" + it.key() + "'");
        }
    }
    if (obj.contains("relations")) {
        for (auto& r : obj["relations"]) {
            if (!r.is_array()) throw alg_error(errc::parse_error, "relation: expected an array of terms");
            Relation rel;
            for (auto& t : r) {
                require_keys(t, "relation term", {"coeff", "path"});
                Scalar c = t.contains("coeff") ? parse_scalar(t["coeff"], fd, "relation coeff") : Scalar::one(fd);
                std::vector<std::string> path;
                for (auto& s : t.at("path")) path.push_back(s.get<std::string>());
                rel.terms.emplace_back(c, std::move(path));
            }
            p.relations.push_back(std::move(rel));
        }
    }
    if (!obj.contains("path_length_bound"))
        throw alg_error(errc::parse_error, "presentation: missing path_length_bound");
    p.path_length_bound = obj["path_length_bound"].get<std::size_t>();
    return p;
}

GroupRep parse_group(const json& v, FieldDesc fd, std::size_t n, const std::string& where) {
    if (v.is_string()) {
        std::string name = v.get<std::string>();
        if (name == "trivial") return GroupRep::generate(fd, n, {});
        if (name == "pm1") {
            Mat neg(fd, n, n);
            for (std::size_t i = 0; i < n; ++i) neg.at(i, i) = -Scalar::one(fd);
            return GroupRep::generate(fd, n, {neg});
        }
        throw alg_error(errc::validation_error, where + ": unknown named group '" + name + "'");
    }
    require_keys(v, where, {"generators"});
    std::vector<Mat> gens;
    for (auto& gm : v.at("generators")) {
        if (!gm.is_array() || gm.empty())
            throw alg_error(errc::parse_error, where + ": generator must be a nonempty matrix");
        std::size_t rows = gm.size();
        Mat m(fd, rows, gm[0].size());
        for (std::size_t i = 0; i < rows; ++i) {
            if (gm[i].size() != m.cols()) throw alg_error(errc::parse_error, where + ": ragged matrix");
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = parse_scalar(gm[i][j], fd, where);
        }
        gens.push_back(std::move(m));
    }
    return GroupRep::generate(fd, n, gens);
}

PresentationInput parse_input_json(const json& doc, std::optional<FieldDesc> field_override) {
    require_keys(doc, "document",
                 {"field", "presentation", "grading", "construct", "base", "n", "group", "p", "invariants", "action"});
    if (!doc.contains("field")) throw alg_error(errc::parse_error, "document: missing 'field'");
    FieldDesc fd = field_override ? *field_override : parse_field_name(doc["field"].get<std::string>());

    const bool has_pres = doc.contains("presentation");
    const bool has_cons = doc.contains("construct");
    if (has_pres == has_cons)
        throw alg_error(errc::validation_error, "document: exactly one of 'presentation' or 'construct' is required");

    PresentationInput in;
    in.field = fd;
    if (has_pres) {
        const json* overrides = doc.contains("grading") ? &doc["grading"] : nullptr;
        in.content = parse_quiver(doc["presentation"], fd, overrides);
        return in;
    }

    ConstructDirective cd;
    cd.field = fd;
    std::string kind = doc["construct"].get<std::string>();
    if (kind == "trivext") {
        if (!doc.contains("base")) throw alg_error(errc::parse_error, "trivext: missing 'base' presentation");
        const json* overrides = doc.contains("grading") ? &doc["grading"] : nullptr;
        cd.kind = ConstructDirective::Kind::trivext;
        cd.base = parse_quiver(doc["base"], fd, overrides);
    } else if (kind == "exterior") {
        cd.kind = ConstructDirective::Kind::exterior;
        if (!doc.contains("n")) throw alg_error(errc::parse_error, "exterior: missing 'n'");
        cd.n = doc["n"].get<std::size_t>();
        cd.group = parse_group(doc.contains("group") ? doc["group"] : json("trivial"), fd, cd.n, "group");
    } else if (kind == "pgroup" || kind == "pgroup_semidirect") {
        cd.kind = kind == "pgroup" ? ConstructDirective::Kind::pgroup : ConstructDirective::Kind::pgroup_semidirect;
        if (!doc.contains("p") || !doc.contains("invariants"))
            throw alg_error(errc::parse_error, kind + ": missing 'p' or 'invariants'");
        cd.pgroup.p = doc["p"].get<unsigned long>();
        for (auto& e : doc["invariants"]) cd.pgroup.invariants.push_back(e.get<unsigned>());
        if (doc.contains("action")) {
            if (kind == "pgroup")
                throw alg_error(errc::validation_error, "pgroup: 'action' requires construct pgroup_semidirect");
            cd.pgroup.action = parse_group(doc["action"], fd, cd.pgroup.invariants.size(), "action");
        }
        if (kind == "pgroup_semidirect" && !doc.contains("action"))
            throw alg_error(errc::parse_error, "pgroup_semidirect: missing 'action'");
        if (doc.contains("twist"))
            throw alg_error(errc::unsupported, "twisted group algebras are not supported");
    } else {
        throw alg_error(errc::validation_error, "unknown construct '" + kind + "'");
    }
    in.content = std::move(cd);
    return in;
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw alg_error(errc::parse_error, "cannot open '" + path + "'");
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw alg_error(errc::parse_error, path + ": " + e.what());
    }
}

}  // namespace

PresentationInput parse_presentation_text(const std::string& text, std::optional<FieldDesc> field_override) {
    try {
        return parse_input_json(json::parse(text), field_override);
    } catch (const json::parse_error& e) {
        throw alg_error(errc::parse_error, e.what());
    }
}

PresentationInput parse_presentation_file(const std::string& path, std::optional<FieldDesc> field_override) {
    return parse_input_json(load_json(path), field_override);
}

DistanceTable parse_distance_table_file(const std::string& path) {
    json doc = load_json(path);
    require_keys(doc, "distance table", {"nodes", "f"});
    DistanceTable t;
    if (!doc.contains("nodes") || !doc.contains("f"))
        throw alg_error(errc::parse_error, "distance table: need 'nodes' and 'f'");
    for (auto& n : doc["nodes"]) t.nodes.push_back(n.get<std::string>());
    for (auto& row : doc["f"]) {
        std::vector<long> r;
        for (auto& x : row) r.push_back(x.get<long>());
        t.f.push_back(std::move(r));
    }
    return t;
}

std::vector<CataloguePair> parse_pairs_file(const std::string& path, std::optional<FieldDesc> field_override) {
    json doc = load_json(path);
    require_keys(doc, "catalogue", {"pairs"});
    std::vector<CataloguePair> out;
    for (auto& p : doc.at("pairs")) {
        require_keys(p, "pair", {"id", "left", "right"});
        CataloguePair cp{p.at("id").get<std::string>(), parse_input_json(p.at("left"), field_override),
                         parse_input_json(p.at("right"), field_override)};
        out.push_back(std::move(cp));
    }
    return out;
}

BuiltAlgebra realize(const PresentationInput& in) {
    BuiltAlgebra out;
    if (in.is_presentation()) {
        const auto& p = std::get<QuiverPresentation>(in.content);
        PresentedAlgebra built = build_from_presentation(p);
        out.algebra = std::move(built.algebra);
        out.grading = std::move(built.degrees);
        out.description = "quiver presentation, " + std::to_string(p.vertices.size()) + " vertices, " +
                          std::to_string(p.arrows.size()) + " arrows";
        return out;
    }
    const auto& cd = std::get<ConstructDirective>(in.content);
    switch (cd.kind) {
        case ConstructDirective::Kind::trivext: {
            PresentedAlgebra base = build_from_presentation(*cd.base);
            TrivialExtensionResult res = trivial_extension(base.algebra, base.degrees);
            out.algebra = std::move(res.algebra);
            out.grading = std::move(res.grading);
            out.form = std::move(res.form);
            out.description = "trivial extension of a quiver presentation";
            return out;
        }
        case ConstructDirective::Kind::exterior: {
            ExteriorSkewResult res = exterior_skew(cd.n, *cd.group);
            out.algebra = std::move(res.algebra);
            out.grading = std::move(res.grading);
            out.form = std::move(res.form);
            out.nakayama_data = res.nakayama;
            out.description = "exterior skew group algebra, n = " + std::to_string(cd.n) +
                              ", |G| = " + std::to_string(cd.group->order());
            return out;
        }
        case ConstructDirective::Kind::pgroup: {
            auto [alg, deg] = abelian_pgroup_algebra(cd.field, cd.pgroup);
            out.algebra = std::move(alg);
            out.grading = std::move(deg);
            out.description = "graded abelian p-group algebra";
            return out;
        }
        case ConstructDirective::Kind::pgroup_semidirect: {
            auto [alg, deg] = pgroup_semidirect(cd.field, cd.pgroup);
            out.algebra = std::move(alg);
            out.grading = std::move(deg);
            out.description = "graded p-group algebra with a coprime action";
            return out;
        }
    }
    throw alg_error(errc::internal, "unreachable construct kind");
}

}  // namespace gradalg
