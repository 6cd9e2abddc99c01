#include "kform/chartab.hpp"

#include <sstream>

#include "kform/errors.hpp"

namespace kform {

BigInt CharacterTable::dimension(std::size_t i) const {
    return irreducibles.at(i).at(0).as_integer();
}

std::size_t CharacterTable::trivial_index() const {
    for (std::size_t i = 0; i < irreducibles.size(); ++i) {
        bool all_one = true;
        for (const auto& v : irreducibles[i])
            if (v != Cyclotomic(1)) {
                all_one = false;
                break;
            }
        if (all_one) return i;
    }
    throw MalformedTable("table has no trivial character");
}

int CharacterTable::class_index_of_label(const std::string& label) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].label == label) return static_cast<int>(c);
    return -1;
}

long table_exponent(const CharacterTable& t) {
    BigInt e = 1;
    for (const auto& c : t.classes) e = lcm(e, BigInt(c.representative_order));
    return static_cast<long>(e);
}

std::vector<std::string> validate_table(const CharacterTable& t) {
    const std::size_t n = t.classes.size();
    if (n == 0) throw MalformedTable("table has no classes");
    if (t.irreducibles.size() != t.irreducible_names.size())
        throw MalformedTable("irreducible name/row count mismatch");
    for (const auto& row : t.irreducibles)
        if (row.size() != n) throw MalformedTable("character row length != class count");
    for (const auto& c : t.classes) {
        if (c.representative_order < 1) throw MalformedTable("class order must be >= 1");
        if (c.power_map.size() != static_cast<std::size_t>(c.representative_order))
            throw MalformedTable("power map length != representative order");
        for (int idx : c.power_map)
            if (idx < 0 || idx >= static_cast<int>(n))
                throw MalformedTable("power map index out of range");
    }

    std::vector<std::string> violations;
    auto fail = [&violations](const std::string& what) { violations.push_back(what); };

    if (t.irreducibles.size() != n)
        fail("irreducible count != class count");

    if (t.classes[0].size != 1 || t.classes[0].representative_order != 1)
        fail("identity class must be first, of size 1 and order 1");

    BigInt size_sum = 0;
    for (const auto& c : t.classes) size_sum += c.size;
    if (size_sum != t.group_order)
        fail("class sizes sum to " + size_sum.str() + ", expected group order " +
             std::to_string(t.group_order));

    // power-map structure: g^0 identity, g^1 the class itself, and
    // composition (g^a)^b ~ g^{ab} with matching representative orders
    for (std::size_t c = 0; c < n; ++c) {
        const auto& cls = t.classes[c];
        if (cls.power_map[0] != 0)
            fail("power_map(0) of class " + cls.label + " is not the identity class");
        if (cls.representative_order > 1 && cls.power_map[1] != static_cast<int>(c))
            fail("power_map(1) of class " + cls.label + " is not the class itself");
        for (long a = 0; a < cls.representative_order; ++a) {
            const auto& target = t.classes[static_cast<std::size_t>(cls.power_class(a))];
            long expected_order =
                cls.representative_order /
                static_cast<long>(gcd(BigInt(a), BigInt(cls.representative_order)));
            if (target.representative_order != expected_order)
                fail("order of class " + target.label + " inconsistent with power " +
                     std::to_string(a) + " of class " + cls.label);
            for (long b = 0; b < expected_order; ++b) {
                if (target.power_class(b) != cls.power_class(a * b))
                    fail("power maps of classes " + cls.label + " and " + target.label +
                         " do not compose");
            }
        }
    }

    if (t.irreducibles.size() == n) {
        // dimensions positive, sum of squares = |G|
        BigInt dim_sq_sum = 0;
        bool dims_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            try {
                BigInt d = t.dimension(i);
                if (d < 1) {
                    fail("character " + t.irreducible_names[i] +
                         " has non-positive dimension");
                    dims_ok = false;
                } else {
                    dim_sq_sum += d * d;
                }
            } catch (const NotAnInteger&) {
                fail("character " + t.irreducible_names[i] +
                     " has non-integer value at the identity");
                dims_ok = false;
            }
        }
        if (dims_ok && dim_sq_sum != t.group_order)
            fail("sum of squared dimensions is " + dim_sq_sum.str() +
                 ", expected group order " + std::to_string(t.group_order));

        // row orthogonality: <chi_i, chi_j> = delta_ij
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Cyclotomic sum(0);
                for (std::size_t c = 0; c < n; ++c)
                    sum = sum + Cyclotomic(BigInt(t.classes[c].size)) *
                                    t.irreducibles[i][c] * t.irreducibles[j][c].conjugate();
                Cyclotomic expected(i == j ? BigInt(t.group_order) : BigInt(0));
                if (sum != expected)
                    fail("row orthogonality fails for <" + t.irreducible_names[i] + "," +
                         t.irreducible_names[j] + ">");
            }
        }

        // column orthogonality: sum_i chi_i(C) conj(chi_i(C')) = |G|/|C| delta
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t d = c; d < n; ++d) {
                Cyclotomic sum(0);
                for (std::size_t i = 0; i < n; ++i)
                    sum = sum + t.irreducibles[i][c] * t.irreducibles[i][d].conjugate();
                Cyclotomic expected(c == d ? BigInt(t.group_order / t.classes[c].size)
                                           : BigInt(0));
                if (sum != expected)
                    fail("column orthogonality fails for classes " + t.classes[c].label +
                         ", " + t.classes[d].label);
            }
        }
    }

    return violations;
}

TablePtr builtin_quaternion8() {
    static const TablePtr table = [] {
        auto t = std::make_shared<CharacterTable>();
        t->name = "q8";
        t->group_order = 8;
        t->classes = {
            {"1", 1, 1, {0}},
            {"-1", 1, 2, {0, 1}},
            {"+-i", 2, 4, {0, 2, 1, 2}},
            {"+-j", 2, 4, {0, 3, 1, 3}},
            {"+-k", 2, 4, {0, 4, 1, 4}},
        };
        t->irreducible_names = {"1", "x_i", "x_j", "x_k", "y"};
        auto row = [](long a, long b, long c, long d, long e) {
            return std::vector<Cyclotomic>{Cyclotomic(a), Cyclotomic(b), Cyclotomic(c),
                                           Cyclotomic(d), Cyclotomic(e)};
        };
        t->irreducibles = {
            row(1, 1, 1, 1, 1),
            row(1, 1, 1, -1, -1),
            row(1, 1, -1, 1, -1),
            row(1, 1, -1, -1, 1),
            row(2, -2, 0, 0, 0),
        };
        return t;
    }();
    return table;
}

TablePtr builtin_cyclic(long m) {
    if (m < 1) throw Error("cyclic group order must be >= 1");
    auto t = std::make_shared<CharacterTable>();
    t->name = "cyclic:" + std::to_string(m);
    t->group_order = m;
    for (long b = 0; b < m; ++b) {
        ConjugacyClass cls;
        cls.label = b == 0 ? "1" : (b == 1 ? "g" : "g^" + std::to_string(b));
        cls.size = 1;
        cls.representative_order =
            m / static_cast<long>(gcd(BigInt(b), BigInt(m)));
        for (long k = 0; k < cls.representative_order; ++k)
            cls.power_map.push_back(static_cast<int>((b * k) % m));
        t->classes.push_back(std::move(cls));
    }
    for (long a = 0; a < m; ++a) {
        t->irreducible_names.push_back(a == 0 ? "1"
                                              : (a == 1 ? "t" : "t^" + std::to_string(a)));
        std::vector<Cyclotomic> row;
        for (long b = 0; b < m; ++b)
            row.push_back(Cyclotomic::root_power(m, (a * b) % m));
        t->irreducibles.push_back(std::move(row));
    }
    return t;
}

}  // namespace kform
