#include "curvehodge/curve_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "curvehodge/errors.hpp"

namespace curvehodge {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path, std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) throw SchemaError(path + "." + key, "unknown field");
    }
}

std::optional<int> opt_int(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) return std::nullopt;
    if (!it->is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
    const auto v = it->get<long long>();
    if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw SchemaError(path + "." + key, "out of range");
    return static_cast<int>(v);
}

int req_int(const json& j, const std::string& key, const std::string& path) {
    auto v = opt_int(j, key, path);
    if (!v) throw SchemaError(path + "." + key, "required field missing");
    return *v;
}

std::optional<bool> opt_bool(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) return std::nullopt;
    if (!it->is_boolean()) throw SchemaError(path + "." + key, "expected true or false");
    return it->get<bool>();
}

std::string opt_string(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) return {};
    if (!it->is_string()) throw SchemaError(path + "." + key, "expected a string");
    return it->get<std::string>();
}

const json& req_array(const json& j, const std::string& key, const std::string& path, bool required) {
    static const json empty = json::array();
    auto it = j.find(key);
    if (it == j.end()) {
        if (required) throw SchemaError(path + "." + key, "required field missing");
        return empty;
    }
    if (!it->is_array()) throw SchemaError(path + "." + key, "expected an array");
    return *it;
}

// Ordinary germs need only `multiplicity`; other germs need mu, branches and multiplicity.
// A missing tjurina defaults to mu when the germ is weighted homogeneous (ordinary germs are);
// a missing weighted_homogeneous flag defaults to tjurina == mu.
Germ germ_from_json(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown(j, path, {"mu", "branches", "tjurina", "multiplicity", "ordinary", "weighted_homogeneous"});
    Germ g;
    g.ordinary = opt_bool(j, "ordinary", path).value_or(false);
    g.multiplicity = req_int(j, "multiplicity", path);
    const int m1 = g.multiplicity - 1;
    if (g.ordinary) {
        g.mu = opt_int(j, "mu", path).value_or(m1 * m1);
        g.branches = opt_int(j, "branches", path).value_or(g.multiplicity);
    } else {
        g.mu = req_int(j, "mu", path);
        g.branches = req_int(j, "branches", path);
    }
    const auto wh = opt_bool(j, "weighted_homogeneous", path);
    const auto tau = opt_int(j, "tjurina", path);
    if (tau) {
        g.tjurina = *tau;
    } else if (g.ordinary || wh.value_or(false)) {
        g.tjurina = g.mu;
    } else {
        throw SchemaError(path + ".tjurina", "required unless the germ is ordinary or weighted homogeneous");
    }
    g.weighted_homogeneous = wh.value_or(g.tjurina == g.mu);
    return g;
}

json germ_to_json(const Germ& g) {
    return json{{"mu", g.mu},
                {"branches", g.branches},
                {"tjurina", g.tjurina},
                {"multiplicity", g.multiplicity},
                {"ordinary", g.ordinary},
                {"weighted_homogeneous", g.weighted_homogeneous}};
}

}  // namespace

CurveSpec spec_from_json(const json& doc) {
    require_object(doc, "$");
    reject_unknown(doc, "$", {"components", "shared_points", "description"});
    if (auto it = doc.find("description"); it != doc.end() && !it->is_string()) {
        throw SchemaError("$.description", "expected a string");
    }
    CurveSpec spec;
    const json& comps = req_array(doc, "components", "$", true);
    for (std::size_t j = 0; j < comps.size(); ++j) {
        const std::string path = "components[" + std::to_string(j) + "]";
        const json& c = comps[j];
        require_object(c, path);
        reject_unknown(c, path, {"degree", "genus_check", "own_germs", "label"});
        Component comp;
        comp.degree = req_int(c, "degree", path);
        comp.genus_check = opt_int(c, "genus_check", path);
        comp.label = opt_string(c, "label", path);
        const json& germs = req_array(c, "own_germs", path, false);
        for (std::size_t k = 0; k < germs.size(); ++k) {
            comp.own_germs.push_back(germ_from_json(germs[k], path + ".own_germs[" + std::to_string(k) + "]"));
        }
        spec.components.push_back(std::move(comp));
    }
    const json& points = req_array(doc, "shared_points", "$", false);
    for (std::size_t b = 0; b < points.size(); ++b) {
        const std::string path = "shared_points[" + std::to_string(b) + "]";
        const json& p = points[b];
        require_object(p, path);
        reject_unknown(p, path, {"incidences", "transverse", "tjurina", "weighted_homogeneous", "label"});
        SharedPoint point;
        point.transverse = opt_bool(p, "transverse", path).value_or(false);
        point.tjurina = opt_int(p, "tjurina", path);
        point.weighted_homogeneous = opt_bool(p, "weighted_homogeneous", path);
        point.label = opt_string(p, "label", path);
        const json& incs = req_array(p, "incidences", path, true);
        for (std::size_t k = 0; k < incs.size(); ++k) {
            const std::string ipath = path + ".incidences[" + std::to_string(k) + "]";
            const json& inc = incs[k];
            require_object(inc, ipath);
            reject_unknown(inc, ipath, {"component", "germ"});
            Incidence incidence;
            const int index = req_int(inc, "component", ipath);
            if (index < 0) throw SchemaError(ipath + ".component", "must be a nonnegative index");
            incidence.component = static_cast<std::size_t>(index);
            if (auto it = inc.find("germ"); it != inc.end()) {
                if (it->is_string()) {
                    if (it->get<std::string>() != "smooth") {
                        throw SchemaError(ipath + ".germ", "expected \"smooth\" or a germ object");
                    }
                } else {
                    incidence.germ = germ_from_json(*it, ipath + ".germ");
                }
            }
            point.incidences.push_back(std::move(incidence));
        }
        spec.shared_points.push_back(std::move(point));
    }
    return spec;
}

CurveSpec parse_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("not valid JSON: ") + e.what());
    }
    return spec_from_json(doc);
}

CurveSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

json spec_to_json(const CurveSpec& spec) {
    json comps = json::array();
    for (const auto& c : spec.components) {
        json jc{{"degree", c.degree}, {"own_germs", json::array()}};
        for (const auto& g : c.own_germs) jc["own_germs"].push_back(germ_to_json(g));
        if (c.genus_check) jc["genus_check"] = *c.genus_check;
        if (!c.label.empty()) jc["label"] = c.label;
        comps.push_back(std::move(jc));
    }
    json points = json::array();
    for (const auto& p : spec.shared_points) {
        json jp{{"incidences", json::array()}, {"transverse", p.transverse}};
        for (const auto& inc : p.incidences) {
            jp["incidences"].push_back(
                json{{"component", inc.component}, {"germ", inc.germ ? germ_to_json(*inc.germ) : json("smooth")}});
        }
        if (p.tjurina) jp["tjurina"] = *p.tjurina;
        if (p.weighted_homogeneous) jp["weighted_homogeneous"] = *p.weighted_homogeneous;
        if (!p.label.empty()) jp["label"] = p.label;
        points.push_back(std::move(jp));
    }
    return json{{"components", std::move(comps)}, {"shared_points", std::move(points)}};
}

}  // namespace curvehodge
