#include "weakhopf/presentation.hpp"

#include "weakhopf/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace weakhopf {

using json = nlohmann::json;

namespace {

ObjectWord word_of(const json& j, const std::map<std::string, std::size_t>& objects, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of object names");
    std::vector<Factor> fs;
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError(where + ": object names must be strings");
        auto it = objects.find(x.get<std::string>());
        if (it == objects.end()) throw ParseError(where + ": undeclared object '" + x.get<std::string>() + "'");
        fs.push_back({it->first, it->second});
    }
    return ObjectWord(fs);
}

Scalar scalar_of(const json& x, const FieldSpec& field, const std::string& where) {
    if (x.is_string()) return Scalar::parse(field, x.get<std::string>());
    if (x.is_number_integer()) return Scalar::from_int(field, x.get<long long>());
    throw ParseError(where + ": scalars must be strings or integers");
}

void flatten_roles(const json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_string())
            out[key] = it->get<std::string>();
        else if (it->is_object())
            flatten_roles(*it, key, out);
        else
            throw ParseError("role '" + key + "' must name a generator");
    }
}

json words_json(const ObjectWord& w) {
    json a = json::array();
    for (const auto& f : w.factors()) a.push_back(f.name);
    return a;
}

}  // namespace

const LinMap& Presentation::generator(const std::string& name) const {
    auto it = generators.find(name);
    if (it == generators.end()) throw ParseError("no generator named '" + name + "'");
    return it->second;
}

const LinMap& Presentation::role_map(const std::string& key) const {
    auto it = roles.find(key);
    if (it == roles.end()) throw ParseError("missing role '" + key + "'");
    return generator(it->second);
}

Presentation parse_presentation(const std::string& text, const std::optional<FieldSpec>& field) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    Presentation p;
    if (field)
        p.field = *field;
    else if (j.contains("field") && j["field"].is_string())
        p.field = FieldSpec::parse(j["field"].get<std::string>());
    else
        throw ParseError("missing field");

    if (!j.contains("objects") || !j["objects"].is_object()) throw ParseError("missing objects");
    for (auto it = j["objects"].begin(); it != j["objects"].end(); ++it) {
        if (!it->is_number_unsigned() || it->get<std::size_t>() == 0)
            throw ParseError("object '" + it.key() + "' needs a positive dimension");
        if (it.key() == "K") throw ParseError("'K' is reserved for the unit object");
        p.objects[it.key()] = it->get<std::size_t>();
    }

    if (!j.contains("generators") || !j["generators"].is_object()) throw ParseError("missing generators");
    for (auto it = j["generators"].begin(); it != j["generators"].end(); ++it) {
        const std::string where = "generator '" + it.key() + "'";
        const json& g = *it;
        if (!g.is_object() || !g.contains("dom") || !g.contains("cod") || !g.contains("matrix"))
            throw ParseError(where + " needs dom, cod and matrix");
        ObjectWord dom = word_of(g["dom"], p.objects, where), cod = word_of(g["cod"], p.objects, where);
        const json& rows = g["matrix"];
        if (!rows.is_array() || rows.size() != cod.dim())
            throw ShapeError(where + ": expected " + std::to_string(cod.dim()) + " rows");
        std::vector<std::vector<Scalar>> m;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != dom.dim())
                throw ShapeError(where + ": expected " + std::to_string(dom.dim()) + " columns");
            std::vector<Scalar> r;
            for (const auto& x : row) r.push_back(scalar_of(x, p.field, where));
            m.push_back(std::move(r));
        }
        p.generators.emplace(it.key(), LinMap::from_rows(p.field, dom, cod, m));
    }

    if (j.contains("roles")) {
        if (!j["roles"].is_object()) throw ParseError("roles must be an object");
        flatten_roles(j["roles"], "", p.roles);
        for (const auto& [key, name] : p.roles)
            if (!p.generators.count(name)) throw ParseError("role '" + key + "' names unknown generator '" + name + "'");
    }
    return p;
}

Presentation load_presentation(const std::string& path, const std::optional<FieldSpec>& field) {
    return parse_presentation(read_file(path), field);
}

void add_generator(Presentation& p, const std::string& name, const LinMap& m) {
    for (const ObjectWord* w : {&m.dom(), &m.cod()})
        for (const auto& f : w->factors()) {
            auto [it, fresh] = p.objects.emplace(f.name, f.dim);
            if (!fresh && it->second != f.dim) throw ShapeError("object '" + f.name + "' has two dimensions");
        }
    p.generators.insert_or_assign(name, m);
}

std::string dump_presentation(const Presentation& p) {
    json j;
    j["field"] = p.field.to_string();
    j["objects"] = json::object();
    for (const auto& [name, dim] : p.objects) j["objects"][name] = dim;
    j["generators"] = json::object();
    for (const auto& [name, m] : p.generators) {
        json rows = json::array();
        for (const auto& row : m.to_rows()) {
            json r = json::array();
            for (const auto& x : row) r.push_back(x.to_string());
            rows.push_back(std::move(r));
        }
        j["generators"][name] = {{"dom", words_json(m.dom())}, {"cod", words_json(m.cod())}, {"matrix", rows}};
    }
    json roles = json::object();
    for (const auto& [key, name] : p.roles) {
        std::string ptr = "/" + key;
        std::replace(ptr.begin(), ptr.end(), '.', '/');
        roles[json::json_pointer(ptr)] = name;
    }
    j["roles"] = roles;
    return j.dump(2) + "\n";
}

std::string dump_report(const VerdictReport& r, const std::string& version, const std::string& input_sha256,
                        long long millis) {
    json entries = json::array();
    for (const auto& e : r.entries()) {
        json x = {{"id", e.id}, {"status", to_string(e.status)}};
        if (e.witness)
            x["witness"] = {{"row", e.witness->row}, {"col", e.witness->col}, {"lhs", e.witness->lhs},
                            {"rhs", e.witness->rhs}};
        if (!e.note.empty()) x["note"] = e.note;
        entries.push_back(std::move(x));
    }
    json j = {{"version", version}, {"input_sha256", input_sha256}, {"entries", entries}, {"millis", millis}};
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace weakhopf
