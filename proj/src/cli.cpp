#include "kform/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kform/ktheory.hpp"

namespace kform {

namespace {

using Json = nlohmann::ordered_json;

// Arbitrary-precision values go into JSON as exact decimal strings.
std::string order_str(const std::optional<BigInt>& o) {
    return o ? o->str() : std::string("infinite");
}

std::string group_str(const AbelianGroupPresentation& p) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (p.free_rank == 1) {
        sep();
        os << "Z";
    } else if (p.free_rank > 1) {
        sep();
        os << "Z^" << p.free_rank;
    }
    for (const auto& d : p.invariant_factors) {
        sep();
        os << "Z/" << d.str();
    }
    if (first) os << "0";
    return os.str();
}

Json group_json(const AbelianGroupPresentation& p) {
    Json j;
    j["free_rank"] = p.free_rank;
    j["invariant_factors"] = Json::array();
    for (const auto& d : p.invariant_factors) j["invariant_factors"].push_back(d.str());
    j["rendered"] = group_str(p);
    return j;
}

Json coeffs_json(const std::vector<BigInt>& coeffs) {
    Json j = Json::array();
    for (const auto& c : coeffs) j.push_back(c.str());
    return j;
}

Json values_json(const std::vector<Cyclotomic>& values) {
    Json j = Json::array();
    for (const auto& v : values) j.push_back(v.to_string());
    return j;
}

struct TableLayout {
    std::vector<std::string> col_labels;
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;

    void print(std::ostream& out) const {
        std::size_t name_w = 0;
        for (const auto& r : rows) name_w = std::max(name_w, r.first.size());
        std::vector<std::size_t> col_w(col_labels.size());
        for (std::size_t c = 0; c < col_labels.size(); ++c) {
            col_w[c] = col_labels[c].size();
            for (const auto& r : rows) col_w[c] = std::max(col_w[c], r.second[c].size());
        }
        auto pad = [&](const std::string& s, std::size_t w) {
            return std::string(w - s.size(), ' ') + s;
        };
        out << std::string(name_w, ' ') << " |";
        for (std::size_t c = 0; c < col_labels.size(); ++c)
            out << ' ' << pad(col_labels[c], col_w[c]);
        out << '\n';
        out << std::string(name_w, '-') << "-+";
        for (std::size_t c = 0; c < col_labels.size(); ++c)
            out << std::string(col_w[c] + 1, '-');
        out << '\n';
        for (const auto& r : rows) {
            out << pad(r.first, name_w) << " |";
            for (std::size_t c = 0; c < col_labels.size(); ++c)
                out << ' ' << pad(r.second[c], col_w[c]);
            out << '\n';
        }
    }
};

std::vector<std::string> value_strings(const std::vector<Cyclotomic>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

int cmd_table_show(TablePtr t, const std::string& format, std::ostream& out) {
    const bool is_q8 = (t == builtin_quaternion8());
    std::vector<std::pair<std::string, std::vector<Cyclotomic>>> virtual_rows;
    if (is_q8) {
        for (const char* name : {"alpha", "beta", "gamma", "delta"})
            virtual_rows.emplace_back(name, named_q8_element(name).class_values());
    }

    if (format == "json") {
        Json j;
        j["group"] = t->name;
        j["group_order"] = t->group_order;
        j["classes"] = Json::array();
        for (const auto& c : t->classes) {
            Json jc;
            jc["label"] = c.label;
            jc["size"] = c.size;
            jc["order"] = c.representative_order;
            j["classes"].push_back(jc);
        }
        j["irreducibles"] = Json::array();
        for (std::size_t i = 0; i < t->n_irreducibles(); ++i) {
            Json ji;
            ji["name"] = t->irreducible_names[i];
            ji["values"] = values_json(t->irreducibles[i]);
            j["irreducibles"].push_back(ji);
        }
        if (is_q8) {
            j["virtual"] = Json::array();
            for (const auto& [name, values] : virtual_rows) {
                Json jv;
                jv["name"] = name;
                jv["values"] = values_json(values);
                j["virtual"].push_back(jv);
            }
        }
        out << j.dump(2) << '\n';
        return 0;
    }

    out << "group: " << t->name << " (order " << t->group_order << ")\n\n";
    TableLayout layout;
    for (const auto& c : t->classes) layout.col_labels.push_back(c.label);
    {
        std::vector<std::string> sizes;
        for (const auto& c : t->classes) sizes.push_back(std::to_string(c.size));
        layout.rows.emplace_back("size", sizes);
    }
    for (std::size_t i = 0; i < t->n_irreducibles(); ++i)
        layout.rows.emplace_back(t->irreducible_names[i],
                                 value_strings(t->irreducibles[i]));
    layout.print(out);
    if (is_q8) {
        out << "\nvirtual representations:\n";
        TableLayout vlayout;
        vlayout.col_labels = layout.col_labels;
        for (const auto& [name, values] : virtual_rows)
            vlayout.rows.emplace_back(name, value_strings(values));
        vlayout.print(out);
    }
    return 0;
}

int cmd_table_validate(const std::string& path, const std::string& format,
                       std::ostream& out) {
    auto t = load_table_file(path, /*validated=*/false);
    auto violations = validate_table(*t);
    if (format == "json") {
        Json j;
        j["table"] = path;
        j["valid"] = violations.empty();
        j["violations"] = violations;
        out << j.dump(2) << '\n';
    } else {
        if (violations.empty()) {
            out << "table " << path << ": ok\n";
        } else {
            out << "table " << path << ": " << violations.size() << " violation(s)\n";
            for (const auto& v : violations) out << "  - " << v << '\n';
        }
    }
    return violations.empty() ? 0 : 1;
}

int cmd_ring_eval(TablePtr t, const std::string& expr, const std::string& op,
                  const std::string& with_expr, const std::string& format,
                  std::ostream& out) {
    VirtualCharacter v = parse_rep_expression(expr, t);
    std::string op_desc = "none";
    if (!op.empty()) {
        if (op == "mul") {
            if (with_expr.empty())
                throw CLI::ValidationError("--op mul requires --with <expr>");
            v = multiply(v, parse_rep_expression(with_expr, t));
            op_desc = "mul " + with_expr;
        } else if (op.rfind("adams:", 0) == 0) {
            long k = std::stol(op.substr(6));
            v = adams(v, k);
            op_desc = op;
        } else if (op.rfind("lambda:", 0) == 0) {
            long q = std::stol(op.substr(7));
            v = exterior_power(v, q);
            op_desc = op;
        } else if (op == "lambda-minus-one") {
            v = lambda_minus_one(v);
            op_desc = op;
        } else {
            throw CLI::ValidationError("unknown --op '" + op + "'");
        }
    }

    if (format == "json") {
        Json j;
        j["group"] = t->name;
        j["expression"] = expr;
        j["op"] = op_desc;
        j["result"] = v.to_string();
        j["coefficients"] = coeffs_json(v.coeffs);
        j["class_values"] = values_json(v.class_values());
        j["augmentation"] = v.augmentation().str();
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "group: " << t->name << '\n';
    out << "expression: " << expr << '\n';
    out << "op: " << op_desc << '\n';
    out << "result: " << v.to_string() << '\n';
    out << "coefficients:";
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
        out << ' ' << t->irreducible_names[i] << '=' << v.coeffs[i].str();
    out << '\n';
    out << "class values:";
    auto values = v.class_values();
    for (std::size_t c = 0; c < values.size(); ++c)
        out << ' ' << t->classes[c].label << '=' << values[c].to_string();
    out << '\n';
    out << "augmentation: " << v.augmentation().str() << '\n';
    return 0;
}

int cmd_free(TablePtr t, const std::string& rep, const std::string& format,
             std::ostream& out) {
    VirtualCharacter v = parse_rep_expression(rep, t);
    if (!v.is_genuine())
        throw NonGenuineInput("freeness test needs a genuine character: " + v.to_string());
    auto verdict = is_free_on_sphere(v);
    if (format == "json") {
        Json j;
        j["group"] = t->name;
        j["rep"] = rep;
        j["free"] = verdict.free;
        j["witness_class"] = verdict.free ? Json(nullptr) : Json(verdict.witness_class);
        out << j.dump(2) << '\n';
    } else {
        out << "group: " << t->name << '\n';
        out << "rep: " << rep << '\n';
        out << "free: " << (verdict.free ? "yes" : "no") << '\n';
        if (!verdict.free) out << "witness class: " << verdict.witness_class << '\n';
    }
    return verdict.free ? 0 : 1;
}

void render_space_form(const SpaceFormResult& res, const std::string& format,
                       std::ostream& out) {
    if (format == "json") {
        Json j;
        j["group"] = res.table->name;
        j["rep"] = res.rep.to_string();
        j["sphere_dimension"] = res.sphere_dimension;
        j["free"] = res.free;
        j["lambda_minus_one"] = res.lambda_class.to_string();
        j["k0"] = group_json(res.full_k0);
        j["reduced_k0"] = group_json(res.reduced_k0);
        j["orders"] = Json::array();
        for (const auto& [name, ord] : res.named_orders) {
            Json jo;
            jo["element"] = name;
            jo["order"] = order_str(ord);
            j["orders"].push_back(jo);
        }
        j["torsion_order_snf"] = res.full_k0.torsion_order().str();
        j["torsion_order_hnf"] = res.hnf_torsion_order.str();
        out << j.dump(2) << '\n';
        return;
    }
    out << "group: " << res.table->name << '\n';
    out << "rep: " << res.rep.to_string() << '\n';
    out << "space form: S^" << res.sphere_dimension << "/" << res.table->name << '\n';
    out << "free: yes\n";
    out << "lambda_{-1}(V) = " << res.lambda_class.to_string() << '\n';
    out << "K^0 = " << group_str(res.full_k0) << '\n';
    out << "reduced K^0 = " << group_str(res.reduced_k0) << '\n';
    for (const auto& [name, ord] : res.named_orders)
        out << "order(" << name << ") = " << order_str(ord) << '\n';
    out << "torsion order (SNF path) = " << res.full_k0.torsion_order().str() << '\n';
    out << "torsion order (HNF path) = " << res.hnf_torsion_order.str() << '\n';
}

int cmd_counterexample(const std::string& format, std::ostream& out) {
    auto rep = counterexample_report();
    if (format == "json") {
        Json j;
        j["delta_order"] = rep.delta_order.str();
        j["complex_trivial_multiple"] = rep.complex_trivial_multiple.str();
        j["real_trivial_multiple"] = rep.real_trivial_multiple.str();
        j["normal_bundle_multiple"] = rep.normal_bundle_multiple.str();
        j["k"] = rep.k.str();
        j["parity"] = rep.k_parity;
        j["chern_obstruction_vanishes"] = rep.chern_obstruction_vanishes;
        j["verdict"] = rep.verdict;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "order of 2-y in K^0(S^7/Q8): " << rep.delta_order.str() << '\n';
    out << rep.complex_trivial_multiple.str() << "*eta = trivial bundle of rank "
        << BigInt(2 * rep.complex_trivial_multiple).str() << " in complex K-theory\n";
    out << rep.real_trivial_multiple.str()
        << "*eta_R is stably trivial in real K-theory (imported implication)\n";
    out << "stable normal bundle of S^7/Q8: " << rep.normal_bundle_multiple.str()
        << "*eta_R\n";
    out << "k = " << rep.k.str() << '\n';
    out << "parity = " << rep.k_parity << '\n';
    out << "c_2(2k*eta) vanishes: " << (rep.chern_obstruction_vanishes ? "yes" : "no")
        << '\n';
    out << "verdict: " << rep.verdict << '\n';
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact complex K-theory of spherical space forms S(V)/G"};
    app.name("kform");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string table_path;
    std::string group = "q8";
    std::string expr, rep_expr, op, with_expr;
    long family_n = 0;

    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--table", table_path, "character-table JSON file");

    auto* table_cmd = app.add_subcommand("table", "character-table operations");
    table_cmd->require_subcommand(1);
    auto* validate_cmd =
        table_cmd->add_subcommand("validate", "check every table invariant");
    auto* show_cmd = table_cmd->add_subcommand("show", "print the character table");
    show_cmd->add_option("--group", group, "q8 or cyclic:<m>");

    auto* ring_cmd = app.add_subcommand("ring", "representation-ring operations");
    ring_cmd->require_subcommand(1);
    auto* eval_cmd = ring_cmd->add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("--group", group, "q8 or cyclic:<m>");
    eval_cmd->add_option("--expr", expr, "virtual character expression")->required();
    eval_cmd->add_option("--op", op, "mul | adams:k | lambda:q | lambda-minus-one");
    eval_cmd->add_option("--with", with_expr, "second operand for --op mul");

    auto* free_cmd = app.add_subcommand("free", "freeness of the sphere action");
    free_cmd->add_option("--group", group, "q8 or cyclic:<m>");
    free_cmd->add_option("--rep", rep_expr, "genuine representation expression")
        ->required();

    auto* kform_cmd =
        app.add_subcommand("kform", "K-theory of S(V)/G via the quotient formula");
    kform_cmd->add_option("--group", group, "q8 or cyclic:<m>");
    kform_cmd->add_option("--rep", rep_expr, "genuine representation expression")
        ->required();

    auto* family_cmd =
        app.add_subcommand("kform-family", "the S^{4n+3}/Q8 family, V = (n+1)*y");
    family_cmd->add_option("--group", group, "must be q8");
    family_cmd->add_option("--n", family_n, "family index n >= 0")->required();

    auto* cex_cmd = app.add_subcommand("counterexample",
                                       "the degree-parity counterexample report");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (validate_cmd->parsed()) {
            if (table_path.empty())
                throw Error("table validate requires --table <file>");
            return cmd_table_validate(table_path, format, out);
        }
        if (show_cmd->parsed())
            return cmd_table_show(resolve_group(group, table_path), format, out);
        if (eval_cmd->parsed())
            return cmd_ring_eval(resolve_group(group, table_path), expr, op, with_expr,
                                 format, out);
        if (free_cmd->parsed())
            return cmd_free(resolve_group(group, table_path), rep_expr, format, out);
        if (kform_cmd->parsed()) {
            auto t = resolve_group(group, table_path);
            auto v = parse_rep_expression(rep_expr, t);
            if (!v.is_genuine())
                throw NonGenuineInput("kform needs a genuine representation: " +
                                      v.to_string());
            auto res = k_theory_of_space_form(v);
            render_space_form(res, format, out);
            return 0;
        }
        if (family_cmd->parsed()) {
            if (group != "q8" || !table_path.empty())
                throw Error("kform-family is defined for --group q8 only");
            auto res = quaternion_family(family_n);
            render_space_form(res, format, out);
            return 0;
        }
        if (cex_cmd->parsed()) return cmd_counterexample(format, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error at position " << e.position << ": " << e.what() << '\n';
        return 2;
    } catch (const NotFreeAction& e) {
        err << "error: " << e.what() << '\n';
        out << "free: no\n";
        out << "witness class: " << e.witness_class << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace kform
