#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kform/chartab.hpp"
#include "kform/errors.hpp"

namespace kform {

TablePtr parse_table_json(const std::string& json_text, const std::string& name,
                          bool validated) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTable(std::string("table file is not valid JSON: ") + e.what());
    }

    auto t = std::make_shared<CharacterTable>();
    t->name = name;
    try {
        t->group_order = doc.at("group_order").get<long>();
        for (const auto& c : doc.at("classes")) {
            ConjugacyClass cls;
            cls.label = c.at("label").get<std::string>();
            cls.size = c.at("size").get<long>();
            cls.representative_order = c.at("order").get<long>();
            for (const auto& idx : c.at("power_map"))
                cls.power_map.push_back(idx.get<int>());
            t->classes.push_back(std::move(cls));
        }
        for (const auto& irr : doc.at("irreducibles")) {
            t->irreducible_names.push_back(irr.at("name").get<std::string>());
            std::vector<Cyclotomic> row;
            for (const auto& v : irr.at("values"))
                row.push_back(parse_cyclotomic_literal(v.get<std::string>()));
            t->irreducibles.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTable(std::string("table file schema error: ") + e.what());
    } catch (const ParseError& e) {
        throw MalformedTable(std::string("bad cyclotomic literal: ") + e.what());
    }

    // user tables are never trusted
    if (validated) {
        auto violations = validate_table(*t);
        if (!violations.empty()) {
            std::ostringstream os;
            os << "table fails validation:";
            for (const auto& v : violations) os << "\n  - " << v;
            throw MalformedTable(os.str());
        }
    }
    return t;
}

TablePtr load_table_file(const std::string& path, bool validated) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table_json(buf.str(), path, validated);
}

TablePtr resolve_group(const std::string& spec, const std::string& table_path) {
    if (!table_path.empty()) return load_table_file(table_path);
    if (spec == "q8") return builtin_quaternion8();
    if (spec.rfind("cyclic:", 0) == 0) {
        long m = 0;
        try {
            m = std::stol(spec.substr(7));
        } catch (const std::exception&) {
            throw Error("bad cyclic group spec: " + spec);
        }
        if (m < 1) throw Error("cyclic group order must be >= 1");
        return builtin_cyclic(m);
    }
    throw Error("unknown group spec '" + spec + "' (expected q8 or cyclic:<m>)");
}

}  // namespace kform
