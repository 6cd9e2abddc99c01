#include <cctype>

#include "kform/cli.hpp"
#include "kform/errors.hpp"

namespace kform {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^';
}

struct ExprParser {
    const std::string& s;
    TablePtr table;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    BigInt parse_int() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return BigInt(s.substr(start, pos - start));
    }

    std::string parse_name() {
        std::size_t start = pos;
        while (pos < s.size() && is_name_char(s[pos])) ++pos;
        if (pos == start) throw ParseError("expected irreducible name", start);
        return s.substr(start, pos - start);
    }

    // term := [int '*'] name | int
    VirtualCharacter parse_term() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("expected term", pos);
        BigInt count = 1;
        bool saw_int = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            count = parse_int();
            saw_int = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            } else {
                // bare integer: count copies of the trivial character
                return trivial_character(table).scaled(count);
            }
        }
        std::size_t name_pos = pos;
        std::string name = parse_name();
        for (std::size_t i = 0; i < table->n_irreducibles(); ++i) {
            if (table->irreducible_names[i] == name)
                return irreducible_character(table, i).scaled(count);
        }
        (void)saw_int;
        (void)name_pos;
        throw UnknownName("unknown irreducible '" + name + "'", name);
    }

    VirtualCharacter parse() {
        skip_ws();
        bool negate = false;
        if (pos < s.size() && s[pos] == '-') {
            negate = true;
            ++pos;
        }
        VirtualCharacter acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (s[pos] == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                throw ParseError("unexpected character in expression", pos);
            }
        }
        return acc;
    }
};

}  // namespace

VirtualCharacter parse_rep_expression(const std::string& text, TablePtr table) {
    ExprParser p{text, std::move(table)};
    return p.parse();
}

}  // namespace kform
