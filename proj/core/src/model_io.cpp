#include "fanoslope/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fanoslope/errors.hpp"

namespace fanoslope::fanomodel {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw DataError("unknown field '" + it.key() + "' in " + where);
}

Rational rational_field(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw DataError("expected rational string in " + where);
}

DivisorClass class_from_json(const json& obj, const std::vector<std::string>& basis,
                             const std::string& where) {
    if (!obj.is_object()) throw DataError("expected {basis: rational} map in " + where);
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        auto pos = std::find(basis.begin(), basis.end(), it.key());
        if (pos == basis.end())
            throw DataError("unknown basis label '" + it.key() + "' in " + where);
        coords[static_cast<size_t>(pos - basis.begin())] = rational_field(it.value(), where);
    }
    return DivisorClass(std::move(coords));
}

json class_to_json(const DivisorClass& d, const std::vector<std::string>& basis) {
    json obj = json::object();
    for (size_t i = 0; i < basis.size(); ++i)
        if (!d.coords[i].is_zero()) obj[basis[i]] = d.coords[i].str();
    return obj;
}

IntersectionTensor tensor_from_json(const json& arr, unsigned dim,
                                    const std::vector<std::string>& basis,
                                    const std::string& where) {
    if (!arr.is_array()) throw DataError("tensor must be a list in " + where);
    IntersectionTensor t(dim, static_cast<unsigned>(basis.size()));
    for (const auto& e : arr) {
        reject_unknown_fields(e, {"indices", "value"}, where + " tensor entry");
        if (!e.contains("indices") || !e.contains("value"))
            throw DataError("tensor entry needs indices and value in " + where);
        std::istringstream is(e.at("indices").get<std::string>());
        std::vector<unsigned> key;
        std::string tok;
        while (is >> tok) {
            auto pos = std::find(basis.begin(), basis.end(), tok);
            if (pos == basis.end())
                throw DataError("unknown basis label '" + tok + "' in " + where + " tensor");
            key.push_back(static_cast<unsigned>(pos - basis.begin()));
        }
        if (key.size() != dim)
            throw DataError("tensor key arity mismatch in " + where);
        t.set(std::move(key), rational_field(e.at("value"), where + " tensor"));
    }
    return t;
}

json tensor_to_json(const IntersectionTensor& t, const std::vector<std::string>& basis) {
    json arr = json::array();
    for (const auto& [key, value] : t.entries()) {
        std::ostringstream os;
        for (size_t i = 0; i < key.size(); ++i) {
            if (i) os << " ";
            os << basis[key[i]];
        }
        arr.push_back(json{{"indices", os.str()}, {"value", value.str()}});
    }
    return arr;
}

RestrictionModel restriction_from_json(const json& obj, unsigned ambient_dim,
                                       const std::string& where) {
    reject_unknown_fields(obj,
                          {"codim", "basis", "tensor", "restricted_anticanonical",
                           "self_class", "seshadri_override", "conormal_flags"},
                          where);
    for (const char* field : {"codim", "basis", "tensor", "restricted_anticanonical",
                              "self_class"})
        if (!obj.contains(field))
            throw DataError(std::string("missing field '") + field + "' in " + where);
    RestrictionModel res;
    res.center_codim = obj.at("codim").get<unsigned>();
    res.basis = obj.at("basis").get<std::vector<std::string>>();
    res.lattice = tensor_from_json(obj.at("tensor"), ambient_dim - 1, res.basis, where);
    res.restricted_anticanonical =
        class_from_json(obj.at("restricted_anticanonical"), res.basis, where);
    res.self_class = class_from_json(obj.at("self_class"), res.basis, where);
    if (obj.contains("seshadri_override"))
        res.seshadri_override = rational_field(obj.at("seshadri_override"), where);
    if (obj.contains("conormal_flags")) {
        const json& f = obj.at("conormal_flags");
        reject_unknown_fields(
            f, {"conormal_nef", "conormal_ample", "self_square_effective_nonzero"},
            where + " conormal_flags");
        if (f.contains("conormal_nef"))
            res.conormal_flags.conormal_nef = f.at("conormal_nef").get<bool>();
        if (f.contains("conormal_ample"))
            res.conormal_flags.conormal_ample = f.at("conormal_ample").get<bool>();
        if (f.contains("self_square_effective_nonzero"))
            res.conormal_flags.self_square_effective_nonzero =
                f.at("self_square_effective_nonzero").get<bool>();
    }
    return res;
}

json restriction_to_json(const RestrictionModel& res) {
    json obj;
    obj["codim"] = res.center_codim;
    obj["basis"] = res.basis;
    obj["tensor"] = tensor_to_json(res.lattice, res.basis);
    obj["restricted_anticanonical"] = class_to_json(res.restricted_anticanonical, res.basis);
    obj["self_class"] = class_to_json(res.self_class, res.basis);
    if (res.seshadri_override) obj["seshadri_override"] = res.seshadri_override->str();
    if (!res.conormal_flags.empty()) {
        json f = json::object();
        if (res.conormal_flags.conormal_nef) f["conormal_nef"] = *res.conormal_flags.conormal_nef;
        if (res.conormal_flags.conormal_ample)
            f["conormal_ample"] = *res.conormal_flags.conormal_ample;
        if (res.conormal_flags.self_square_effective_nonzero)
            f["self_square_effective_nonzero"] =
                *res.conormal_flags.self_square_effective_nonzero;
        obj["conormal_flags"] = f;
    }
    return obj;
}

} // namespace

VarietyModel model_from_json(const json& doc) {
    if (!doc.is_object()) throw DataError("model document must be an object");
    reject_unknown_fields(doc,
                          {"name", "dim", "basis", "tensor", "anticanonical", "rays",
                           "effective_generators", "named_divisors", "restrictions"},
                          "model");
    for (const char* field : {"name", "dim", "basis", "tensor", "anticanonical", "rays"})
        if (!doc.contains(field))
            throw DataError(std::string("missing field '") + field + "' in model");

    VarietyModel m;
    m.name = doc.at("name").get<std::string>();
    m.dim = doc.at("dim").get<unsigned>();
    if (m.dim < 1) throw DataError("model dim must be >= 1");
    m.basis = doc.at("basis").get<std::vector<std::string>>();
    m.tensor = tensor_from_json(doc.at("tensor"), m.dim, m.basis, "model " + m.name);
    m.anticanonical =
        class_from_json(doc.at("anticanonical"), m.basis, "anticanonical of " + m.name);

    for (const auto& r : doc.at("rays")) {
        reject_unknown_fields(r, {"name", "pairings", "length"}, "ray of " + m.name);
        if (!r.contains("name") || !r.contains("pairings"))
            throw DataError("ray needs name and pairings in model " + m.name);
        Ray ray;
        ray.name = r.at("name").get<std::string>();
        DivisorClass p = class_from_json(r.at("pairings"), m.basis, "ray " + ray.name);
        ray.curve = CurveClass(std::move(p.coords));
        if (r.contains("length")) ray.length = r.at("length").get<long>();
        m.rays.push_back(std::move(ray));
    }
    if (doc.contains("effective_generators"))
        for (const auto& g : doc.at("effective_generators"))
            m.effective_generators.push_back(
                class_from_json(g, m.basis, "effective generator of " + m.name));
    if (doc.contains("named_divisors"))
        for (auto it = doc.at("named_divisors").begin(); it != doc.at("named_divisors").end();
             ++it)
            m.named_divisors[it.key()] =
                class_from_json(it.value(), m.basis, "divisor " + it.key());
    if (doc.contains("restrictions"))
        for (auto it = doc.at("restrictions").begin(); it != doc.at("restrictions").end(); ++it)
            m.restrictions[it.key()] =
                restriction_from_json(it.value(), m.dim, "restriction " + it.key());

    require_valid(m);
    return m;
}

VarietyModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open model file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw DataError("malformed model file '" + path + "': " + e.what());
    }
    return model_from_json(doc);
}

json model_to_json(const VarietyModel& m) {
    json doc;
    doc["name"] = m.name;
    doc["dim"] = m.dim;
    doc["basis"] = m.basis;
    doc["tensor"] = tensor_to_json(m.tensor, m.basis);
    doc["anticanonical"] = class_to_json(m.anticanonical, m.basis);
    json rays = json::array();
    for (const auto& r : m.rays) {
        json obj;
        obj["name"] = r.name;
        obj["pairings"] = class_to_json(DivisorClass(r.curve.pairings), m.basis);
        if (r.length) obj["length"] = *r.length;
        rays.push_back(obj);
    }
    doc["rays"] = rays;
    json gens = json::array();
    for (const auto& g : m.effective_generators) gens.push_back(class_to_json(g, m.basis));
    doc["effective_generators"] = gens;
    json named = json::object();
    for (const auto& [dname, cls] : m.named_divisors) named[dname] = class_to_json(cls, m.basis);
    doc["named_divisors"] = named;
    if (!m.restrictions.empty()) {
        json rs = json::object();
        for (const auto& [key, res] : m.restrictions) rs[key] = restriction_to_json(res);
        doc["restrictions"] = rs;
    }
    return doc;
}

DivisorClass parse_divisor_spec(const VarietyModel& m, const std::string& spec) {
    auto it = m.named_divisors.find(spec);
    if (it != m.named_divisors.end()) return it->second;
    if (spec.find(',') == std::string::npos)
        throw DataError("unknown divisor '" + spec + "' on model " + m.name +
                        " (and not a coordinate list)");
    std::vector<Rational> coords;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) coords.push_back(Rational::parse(tok));
    if (coords.size() != m.rank())
        throw DataError("coordinate list has wrong rank for model " + m.name);
    return DivisorClass(std::move(coords));
}

} // namespace fanoslope::fanomodel
