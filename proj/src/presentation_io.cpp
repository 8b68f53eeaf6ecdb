#include "ufdlab/presentation_io.hpp"

#include <sstream>

namespace ufdlab {

using nlohmann::json;

std::string to_cas_text(const PresentedRing& ring) {
    std::ostringstream out;
    if (!ring.provenance.empty()) out << "# builder: " << ring.provenance << "\n";
    out << "field: " << ring.field.name() << "\n";
    out << "variables: ";
    for (std::size_t i = 0; i < ring.vars->size(); ++i) {
        out << (i ? ", " : "") << ring.vars->name(i);
        if (ring.vars->invertible(i)) out << " (invertible)";
    }
    out << "\n";
    if (ring.grading) {
        out << "weights: ";
        for (std::size_t i = 0; i < ring.vars->size(); ++i)
            out << (i ? ", " : "") << ring.vars->name(i) << "=" << ring.grading->weight(i).get_str();
        out << "\n";
    }
    for (const auto& r : ring.relations) out << "relation: " << r.to_string() << "\n";
    for (const auto& [k, v] : ring.notes) out << "note: " << k << " = " << v << "\n";
    return out.str();
}

json to_json(const PresentedRing& ring) {
    json j;
    j["field"] = ring.field.name();
    j["variables"] = ring.vars->names();
    std::vector<std::string> inv;
    for (std::size_t i = 0; i < ring.vars->size(); ++i)
        if (ring.vars->invertible(i)) inv.push_back(ring.vars->name(i));
    j["invertible"] = inv;
    if (ring.grading) {
        json w = json::object();
        for (std::size_t i = 0; i < ring.vars->size(); ++i) w[ring.vars->name(i)] = ring.grading->weight(i).get_str();
        j["weights"] = w;
    } else {
        j["weights"] = nullptr;
    }
    json rels = json::array();
    for (const auto& r : ring.relations) rels.push_back(r.to_string());
    j["relations"] = rels;
    j["provenance"] = ring.provenance;
    json notes = json::array();
    for (const auto& [k, v] : ring.notes) notes.push_back({k, v});
    j["notes"] = notes;
    return j;
}

namespace {

Int json_int(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw Error("expected an integer, got " + v.dump());
}

std::vector<std::string> string_list(const json& v, const char* what) {
    if (!v.is_array()) throw Error(std::string(what) + " must be a list of strings");
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get<std::string>());
    return out;
}

const json& need(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Field field_of(const json& j) { return Field::parse(j.value("field", std::string("QQ"))); }

}  // namespace

FieldElem parse_field_elem(const json& v, Field field) {
    if (v.is_number_integer()) return FieldElem(field, v.get<long>());
    if (v.is_string()) {
        Rational q(v.get<std::string>());
        q.canonicalize();
        return FieldElem(field, q);
    }
    throw Error("expected a field element, got " + v.dump());
}

PresentedRing presentation_from_json(const json& j) {
    Field field = field_of(j);
    auto names = string_list(need(j, "variables"), "variables");
    std::vector<bool> inv(names.size(), false);
    if (j.contains("invertible"))
        for (const auto& n : string_list(j.at("invertible"), "invertible")) {
            auto it = std::find(names.begin(), names.end(), n);
            if (it == names.end()) throw Error("unknown invertible variable " + n);
            inv[it - names.begin()] = true;
        }
    auto vars = make_vars(names, inv);
    std::optional<Grading> g;
    if (j.contains("weights") && !j.at("weights").is_null()) {
        std::map<std::string, Int> w;
        for (const auto& [k, v] : j.at("weights").items()) w[k] = json_int(v);
        g = Grading::from_map(vars, w);
    }
    std::vector<Polynomial> rels;
    if (j.contains("relations"))
        for (const auto& r : string_list(j.at("relations"), "relations")) rels.push_back(parse_polynomial(r, vars, field));
    PresentedRing ring(field, vars, rels, g, j.value("provenance", std::string()));
    if (j.contains("notes"))
        for (const auto& n : j.at("notes")) ring.notes.emplace_back(n.at(0).get<std::string>(), n.at(1).get<std::string>());
    return ring;
}

PresentedRing ring_from_spec(const json& spec) {
    std::string builder = spec.value("builder", std::string("presentation"));
    Field field = field_of(spec);
    if (builder == "presentation") return presentation_from_json(spec);
    if (builder == "free") {
        std::optional<std::vector<Int>> w;
        if (spec.contains("weights")) {
            w.emplace();
            for (const auto& x : spec.at("weights")) w->push_back(json_int(x));
        }
        return free_ring(field, string_list(need(spec, "variables"), "variables"), w);
    }
    if (builder == "samuel-extension" || builder == "radical-extension" || builder == "fourth-criterion") {
        json base = spec.contains("base") ? spec.at("base") : json{{"builder", "free"},
                                                                    {"field", field.name()},
                                                                    {"variables", need(spec, "variables")}};
        if (!spec.contains("base") && spec.contains("weights")) base["weights"] = spec.at("weights");
        PresentedRing A = ring_from_spec(base);
        if (builder == "samuel-extension")
            return present_extension(A, A.parse(need(spec, "a").get<std::string>()), A.parse(need(spec, "b").get<std::string>())).ring;
        if (builder == "radical-extension")
            return radical_extension(A, A.parse(need(spec, "F").get<std::string>()), need(spec, "c").get<long>());
        return fourth_criterion(A, A.parse(need(spec, "a").get<std::string>()), A.parse(need(spec, "b").get<std::string>()),
                                need(spec, "n").get<long>())
            .ring;
    }
    if (builder == "pham-brieskorn") return pham_brieskorn(field, need(spec, "exponents").get<std::vector<long>>()).ring;
    if (builder == "threefold") {
        ThreefoldData d;
        d.field = field;
        d.p = string_list(need(spec, "p"), "p");
        std::size_t n = d.p.size();
        for (std::size_t i = 0; i < n; ++i) {
            d.u.push_back(spec.contains("u") ? parse_field_elem(spec.at("u").at(i), field) : FieldElem(field, 1L));
            d.v.push_back(spec.contains("v") ? parse_field_elem(spec.at("v").at(i), field) : FieldElem(field, 1L));
        }
        d.a = need(spec, "a").get<std::vector<long>>();
        d.b = need(spec, "b").get<std::vector<long>>();
        return threefold_family(d).ring;
    }
    if (builder == "trinomial") {
        TrinomialData d;
        d.field = field;
        d.beta = need(spec, "beta").get<std::vector<std::vector<long>>>();
        for (const auto& l : need(spec, "lambda")) d.lambda.push_back(parse_field_elem(l, field));
        if (spec.contains("names")) d.names = spec.at("names").get<std::vector<std::vector<std::string>>>();
        return trinomial_ring(d).ring;
    }
    throw Error("unknown builder \"" + builder + "\"");
}

}  // namespace ufdlab
