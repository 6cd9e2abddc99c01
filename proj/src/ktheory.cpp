#include "kform/ktheory.hpp"

#include <sstream>

namespace kform {

IntMatrix ideal_lattice(const std::vector<VirtualCharacter>& generators) {
    if (generators.empty()) throw Error("ideal_lattice needs at least one generator");
    TablePtr t = generators[0].table;
    for (const auto& g : generators)
        if (g.table != t) throw TableMismatch("ideal generators over different tables");
    const std::size_t r = t->n_irreducibles();
    // rows g*chi_i: the chi_i Z-span R(G), so these Z-span the ideal
    IntMatrix m(generators.size() * r, r);
    std::size_t row = 0;
    for (const auto& g : generators) {
        for (std::size_t i = 0; i < r; ++i, ++row) {
            auto prod = multiply(g, irreducible_character(t, i));
            for (std::size_t c = 0; c < r; ++c) m.at(row, c) = prod.coeffs[c];
        }
    }
    return m;
}

namespace {

// Coordinates of an augmentation-zero vector in the basis
// {chi_i - dim(chi_i) * 1 : i != trivial} of I(G): drop the trivial slot.
std::vector<BigInt> augmentation_coordinates(const CharacterTable& t,
                                             std::size_t trivial,
                                             const std::vector<BigInt>& coeffs) {
    std::vector<BigInt> out;
    out.reserve(coeffs.size() - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (i != trivial) out.push_back(coeffs[i]);
    return out;
}

BigInt hnf_torsion_order_of(const CharacterTable& t, const IntMatrix& ideal) {
    const std::size_t trivial = t.trivial_index();
    const std::size_t r = t.n_irreducibles();
    IntMatrix aug(ideal.rows(), r - 1);
    for (std::size_t row = 0; row < ideal.rows(); ++row) {
        auto coords = augmentation_coordinates(t, trivial, ideal.row(row));
        for (std::size_t c = 0; c + 1 < r; ++c) aug.at(row, c) = coords[c];
    }
    auto hnf = hermite_normal_form(aug);
    if (hnf.rank() < r - 1) return 0;  // infinite quotient of the augmentation ideal
    BigInt det = 1;
    for (std::size_t i = 0; i + 1 < r; ++i) det *= hnf.h.at(i, hnf.pivot_cols[i]);
    return det;
}

}  // namespace

SpaceFormResult k_theory_of_space_form(const VirtualCharacter& v) {
    if (!v.is_genuine())
        throw NonGenuineInput("space form needs a genuine representation: " +
                              v.to_string());
    if (v.augmentation() < 1)
        throw NonGenuineInput("space form needs a representation of dimension >= 1");

    SpaceFormResult res;
    res.table = v.table;
    res.rep = v;
    res.sphere_dimension = 2 * static_cast<long>(v.augmentation()) - 1;

    auto verdict = is_free_on_sphere(v);
    if (!verdict.free)
        throw NotFreeAction("action is not free on the sphere; class " +
                                verdict.witness_class + " has fixed vectors",
                            verdict.witness_class);
    res.free = true;

    res.lambda_class = lambda_minus_one(v);
    res.ideal = ideal_lattice({res.lambda_class});
    const std::size_t r = v.table->n_irreducibles();
    res.full_k0 = quotient_presentation(r, res.ideal);
    res.reduced_k0 = res.full_k0.torsion_part();
    res.hnf_torsion_order = hnf_torsion_order_of(*v.table, res.ideal);

    // named generator orders: 1-chi and dim(chi)-chi per nontrivial
    // irreducible, plus the standard basis for Q8
    const std::size_t trivial = v.table->trivial_index();
    auto order_of = [&](const VirtualCharacter& w) {
        return element_order_in_quotient(res.full_k0, w.coeffs);
    };
    auto unit = trivial_character(v.table);
    for (std::size_t i = 0; i < r; ++i) {
        if (i == trivial) continue;
        auto chi = irreducible_character(v.table, i);
        BigInt dim = v.table->dimension(i);
        auto one_minus = unit - chi;
        res.named_orders.emplace_back("1-" + v.table->irreducible_names[i],
                                      order_of(one_minus));
        if (dim != 1) {
            auto dim_minus = unit.scaled(dim) - chi;
            res.named_orders.emplace_back(dim.str() + "-" + v.table->irreducible_names[i],
                                          order_of(dim_minus));
        }
    }
    if (v.table == builtin_quaternion8()) {
        for (const char* name : {"alpha", "beta", "gamma", "delta"})
            res.named_orders.emplace_back(name, order_of(named_q8_element(name)));
    }
    return res;
}

SpaceFormResult quaternion_family(long n) {
    if (n < 0) throw Error("quaternion family index must be >= 0");
    auto t = builtin_quaternion8();
    auto y = irreducible_character(t, 4);
    return k_theory_of_space_form(y.scaled(n + 1));
}

std::optional<BigInt> order_of_reduced_class(const SpaceFormResult& res,
                                             const VirtualCharacter& v) {
    if (v.table != res.table)
        throw TableMismatch("class lives over a different table than the result");
    return element_order_in_quotient(res.full_k0, v.coeffs);
}

bool chern_vanishing_check(const BigInt& k) {
    // c_2(2k*eta) = 2k * c_2(eta) in Z/8
    BigInt r = (2 * k) % 8;
    return r == 0;
}

CounterexampleReport counterexample_report() {
    auto res = quaternion_family(1);  // S^7/Q8
    auto delta = named_q8_element("delta");
    auto order = order_of_reduced_class(res, delta);
    if (!order)
        throw InternalInconsistency("delta has infinite order in K0(S^7/Q8)");
    BigInt m = *order;
    // sanity: the order must be a power of 2, at least 8
    BigInt p = m;
    while (p % 2 == 0) p /= 2;
    if (p != 1 || m < 8)
        throw InternalInconsistency("order of delta is " + m.str() +
                                    ", not a power of 2 >= 8");

    CounterexampleReport rep;
    rep.delta_order = m;
    rep.complex_trivial_multiple = m;      // m*eta = trivial 2m-plane bundle in K0
    rep.real_trivial_multiple = m;         // imported: m*eta_R stably trivial over R
    rep.normal_bundle_multiple = m - 2;    // tangent + trivial line = 2*eta_R
    rep.k = m / 2 - 1;
    rep.k_parity = (rep.k % 2 == 0) ? "even" : "odd";
    rep.chern_obstruction_vanishes = chern_vanishing_check(rep.k);

    std::ostringstream verdict;
    verdict << "identity map of S^7/Q8 has degree 1 (odd); its stable normal bundle is "
            << rep.normal_bundle_multiple.str() << "*eta_R = 2k*eta_R with k = "
            << rep.k.str() << " (" << rep.k_parity
            << "), so the claim that such a map must have even degree fails";
    rep.verdict = verdict.str();
    return rep;
}

}  // namespace kform
