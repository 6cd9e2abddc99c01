#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kform/cyclotomic.hpp"
#include "kform/numbers.hpp"

namespace kform {

struct ConjugacyClass {
    std::string label;
    long size = 1;
    long representative_order = 1;
    // power_map[k] = class index of g^k for a representative g,
    // k = 0 .. representative_order-1. Depends only on k mod the order.
    std::vector<int> power_map;

    int power_class(long k) const {
        long r = k % representative_order;
        if (r < 0) r += representative_order;
        return power_map[static_cast<std::size_t>(r)];
    }
};

// A finite group presented by class data and irreducible characters.
// Identity class is required at index 0. Immutable after construction.
struct CharacterTable {
    std::string name;  // "q8", "cyclic:5", or a file path
    long group_order = 1;
    std::vector<ConjugacyClass> classes;
    std::vector<std::string> irreducible_names;
    // irreducibles[i][c] = chi_i evaluated on class c
    std::vector<std::vector<Cyclotomic>> irreducibles;

    std::size_t n_classes() const { return classes.size(); }
    std::size_t n_irreducibles() const { return irreducibles.size(); }

    // chi_i(1) as an integer; throws NotAnInteger on malformed data.
    BigInt dimension(std::size_t i) const;

    // Index of the trivial character (all values 1); throws MalformedTable
    // if absent.
    std::size_t trivial_index() const;

    int class_index_of_label(const std::string& label) const;  // -1 if absent
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Runs every table invariant; returns the list of violations (empty = pass).
// Structural breakage (ragged rows, bad power-map lengths) throws
// MalformedTable instead.
std::vector<std::string> validate_table(const CharacterTable& t);

// The quaternion group Q8 = {+-1, +-i, +-j, +-k}: classes 1, -1, +-i, +-j,
// +-k and irreducibles 1, x_i, x_j, x_k, y. Shared immutable singleton.
TablePtr builtin_quaternion8();

// Cyclic group of order m: singleton classes 1, g, ..., g^{m-1} and
// characters t^a with t^a(g^b) = zeta_m^{ab}.
TablePtr builtin_cyclic(long m);

// lcm of representative orders; fixes the cyclotomic conductor.
long table_exponent(const CharacterTable& t);

// Character-table file format: a single JSON document (see README).
// Fully re-validated unless `validated` is false; a validation failure
// throws MalformedTable.
TablePtr load_table_file(const std::string& path, bool validated = true);
TablePtr parse_table_json(const std::string& json_text, const std::string& name,
                          bool validated = true);

// Resolve "q8", "cyclic:<m>" or load from --table.
TablePtr resolve_group(const std::string& spec, const std::string& table_path);

}  // namespace kform
