#include "hopfcyc/presentation_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

using json = nlohmann::ordered_json;

namespace {

Rat jrat(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw SchemaError("expected rational (int or \"p/q\" string) at " + where);
}

json rat_json(const Rat& r) { return json(rat_str(r)); }

HopfPtr parse_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw SchemaError("presentation file must be an object with a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "group") {
        auto elements = j.at("elements").get<std::vector<std::string>>();
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        return group_algebra(std::move(elements), std::move(table));
    }
    if (kind == "lie") {
        LieAlgebra g;
        auto names = j.at("basis").get<std::vector<std::string>>();
        g.dim = (int)names.size();
        g.name = j.value("name", "lie");
        g.c.assign(g.dim, std::vector<std::vector<std::pair<int, Rat>>>(g.dim));
        for (auto& br : j.at("brackets")) {
            int a = br.at("i").get<int>(), b = br.at("j").get<int>();
            if (a < 0 || b < 0 || a >= g.dim || b >= g.dim || a >= b)
                throw SchemaError("bracket indices must satisfy 0 <= i < j < dim");
            for (auto& t : br.at("terms"))
                g.c[a][b].emplace_back(t.at(0).get<int>(), jrat(t.at(1), "brackets.terms"));
        }
        return enveloping(g);
    }
    if (kind == "symmetric") return symmetric_algebra(j.at("dim").get<int>());
    if (kind == "uq_sl2")
        return uq_sl2(jrat(j.at("q"), "q"), j.value("power_window", 2));
    if (kind == "table") {
        TableData d;
        d.name = j.value("name", "table");
        d.basis_names = j.at("basis").get<std::vector<std::string>>();
        int n = (int)d.basis_names.size();
        if (j.contains("weights")) d.weights = j.at("weights").get<std::vector<int>>();
        d.unit = j.at("unit").get<int>();
        d.mul.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
        const json& mul = j.at("mul");
        if ((int)mul.size() != n) throw SchemaError("mul table must have one row per basis key");
        for (int a = 0; a < n; ++a) {
            if ((int)mul[a].size() != n) throw SchemaError("mul row has wrong length");
            for (int b = 0; b < n; ++b)
                for (auto& t : mul[a][b])
                    d.mul[a][b].emplace_back(t.at(0).get<int>(), jrat(t.at(1), "mul"));
        }
        d.comul.resize(n);
        const json& com = j.at("comul");
        if ((int)com.size() != n) throw SchemaError("comul table must have one entry per basis key");
        for (int a = 0; a < n; ++a)
            for (auto& t : com[a])
                d.comul[a].emplace_back(t.at(0).get<int>(), t.at(1).get<int>(),
                                        jrat(t.at(2), "comul"));
        for (auto& t : j.at("counit")) d.counit.push_back(jrat(t, "counit"));
        d.antipode.resize(n);
        const json& ant = j.at("antipode");
        if ((int)ant.size() != n)
            throw SchemaError("antipode table must have one entry per basis key");
        for (int a = 0; a < n; ++a)
            for (auto& t : ant[a])
                d.antipode[a].emplace_back(t.at(0).get<int>(), jrat(t.at(1), "antipode"));
        if (j.contains("delta"))
            for (auto& t : j.at("delta")) d.delta_values.push_back(jrat(t, "delta"));
        d.sigma = j.value("sigma", -1);
        return table_presentation(std::move(d));
    }
    throw SchemaError("unknown presentation kind '" + kind + "'");
}

}  // namespace

HopfPtr parse_presentation(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error: ") + e.what());
    }
    return parse_json(j);
}

HopfPtr load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open presentation file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

std::string presentation_to_json(const Hopf& h) {
    json j;
    if (const UqData* u = uq_data_of(h)) {
        j["kind"] = "uq_sl2";
        j["q"] = rat_json(u->q);
        j["power_window"] = u->power_window;
        return j.dump(2) + "\n";
    }
    if (const LieAlgebra* g = lie_data_of(h)) {
        j["kind"] = "lie";
        j["name"] = g->name;
        std::vector<std::string> names;
        for (int i = 0; i < g->dim; ++i) names.push_back("e" + std::to_string(i + 1));
        j["basis"] = names;
        json brs = json::array();
        for (int a = 0; a < g->dim; ++a)
            for (int b = a + 1; b < g->dim; ++b) {
                if (g->c[a][b].empty()) continue;
                json terms = json::array();
                for (auto& [k, x] : g->c[a][b]) terms.push_back(json::array({k, rat_json(x)}));
                brs.push_back(json{{"i", a}, {"j", b}, {"terms", terms}});
            }
        j["brackets"] = brs;
        return j.dump(2) + "\n";
    }
    // finite-dimensional: emit the explicit table
    TableData d = tabulate(h);
    j["kind"] = "table";
    j["name"] = d.name;
    j["basis"] = d.basis_names;
    j["weights"] = d.weights;
    j["unit"] = d.unit;
    json mul = json::array();
    for (auto& row : d.mul) {
        json jrow = json::array();
        for (auto& cell : row) {
            json terms = json::array();
            for (auto& [k, c] : cell) terms.push_back(json::array({k, rat_json(c)}));
            jrow.push_back(terms);
        }
        mul.push_back(jrow);
    }
    j["mul"] = mul;
    json com = json::array();
    for (auto& cell : d.comul) {
        json terms = json::array();
        for (auto& [a, b, c] : cell) terms.push_back(json::array({a, b, rat_json(c)}));
        com.push_back(terms);
    }
    j["comul"] = com;
    json cou = json::array();
    for (auto& c : d.counit) cou.push_back(rat_json(c));
    j["counit"] = cou;
    json ant = json::array();
    for (auto& cell : d.antipode) {
        json terms = json::array();
        for (auto& [k, c] : cell) terms.push_back(json::array({k, rat_json(c)}));
        ant.push_back(terms);
    }
    j["antipode"] = ant;
    return j.dump(2) + "\n";
}

void save_presentation(const Hopf& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write presentation file '" + path + "'");
    out << presentation_to_json(h);
}

HopfPtr resolve_presentation(const std::string& spec, const Rat& q, int power_window) {
    if (spec.rfind("builtin:", 0) == 0) return make_builtin(spec.substr(8), q, power_window);
    return load_presentation(spec);
}

std::optional<Key> key_by_name(const Hopf& h, const std::string& name) {
    if (name == "1") return h.unit();
    if (const GroupData* g = group_data_of(h)) {
        for (int i = 0; i < (int)g->elements.size(); ++i)
            if (g->elements[i] == name) return Key{i};
    }
    if (uq_data_of(h)) {
        if (name == "E") return Key{1, 0, 0};
        if (name == "KF") return Key{0, 1, 0};
        if (name == "K") return Key{0, 0, 1};
        if (name == "Kinv" || name == "K^-1") return Key{0, 0, -1};
    }
    if (const LieAlgebra* g = lie_data_of(h)) {
        for (int i = 0; i < g->dim; ++i)
            if (name == "e" + std::to_string(i + 1)) {
                Key k(g->dim, 0);
                k[i] = 1;
                return k;
            }
    }
    if (const TableData* t = table_data_of(h)) {
        for (int i = 0; i < (int)t->basis_names.size(); ++i)
            if (t->basis_names[i] == name) return Key{i};
    }
    if (name.size() >= 2 && name.front() == '(' && name.back() == ')') {
        Key k;
        std::stringstream ss(name.substr(1, name.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) k.push_back(std::atoi(part.c_str()));
        return k;
    }
    return std::nullopt;
}

std::string key_name(const Hopf& h, const Key& k) {
    if (const GroupData* g = group_data_of(h)) return g->elements[k[0]];
    if (const TableData* t = table_data_of(h)) return t->basis_names[k[0]];
    if (uq_data_of(h)) {
        if (k == Key{1, 0, 0}) return "E";
        if (k == Key{0, 1, 0}) return "KF";
        if (k == Key{0, 0, 1}) return "K";
        if (k == Key{0, 0, -1}) return "Kinv";
        if (k == Key{0, 0, 0}) return "1";
    }
    return key_str(k);
}

Character character_by_name(const Hopf& h, const std::string& name) {
    if (name.empty() || name == "eps" || name == "counit") return Character::counit();
    if (name == "file-delta") {
        const TableData* t = table_data_of(h);
        if (!t || t->delta_values.empty())
            throw BadParameter("presentation file does not define a delta character");
        return Character::lie("file-delta", t->delta_values);
    }
    if (name.rfind("lie:", 0) == 0) {
        std::vector<Rat> vals;
        std::stringstream ss(name.substr(4));
        std::string part;
        while (std::getline(ss, part, ',')) vals.push_back(rat_parse(part));
        return Character::lie(name, std::move(vals));
    }
    throw BadParameter("unknown character '" + name + "'");
}

}  // namespace hopfcyc
