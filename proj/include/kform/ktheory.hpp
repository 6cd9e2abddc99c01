#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kform/lattice.hpp"
#include "kform/repring.hpp"

namespace kform {

// Rows are the coefficient vectors of g * chi_i for every generator g and
// every irreducible chi_i; these Z-span the ideal (g_1, ..., g_s) in R(G).
IntMatrix ideal_lattice(const std::vector<VirtualCharacter>& generators);

// K0(S(V)/G) = R(G)/(lambda_{-1}(V)) for a free linear action.
struct SpaceFormResult {
    TablePtr table;
    VirtualCharacter rep;          // genuine V
    long sphere_dimension = 0;     // 2*dim(V) - 1
    bool free = true;
    VirtualCharacter lambda_class;  // lambda_{-1}(V)
    IntMatrix ideal;
    AbelianGroupPresentation full_k0;
    AbelianGroupPresentation reduced_k0;  // torsion part of full_k0
    // Deterministic list: 1-chi and dim(chi)-chi for each nontrivial
    // irreducible, plus alpha/beta/gamma/delta for Q8. nullopt = infinite.
    std::vector<std::pair<std::string, std::optional<BigInt>>> named_orders;
    // Independent torsion-order witness: |det| of the HNF of the ideal
    // lattice in augmentation-ideal coordinates.
    BigInt hnf_torsion_order;
};

// Verifies freeness (NotFreeAction with witness class otherwise), computes
// lambda_{-1}(V), the ideal lattice and both quotient presentations.
SpaceFormResult k_theory_of_space_form(const VirtualCharacter& v);

// The S^{4n+3}/Q8 family: quotient by (delta^{n+1}) via V = (n+1)*y.
SpaceFormResult quaternion_family(long n);

// Order of the image of v in full K0 (equals the reduced-group order when
// augmentation(v) = 0). nullopt = infinite.
std::optional<BigInt> order_of_reduced_class(const SpaceFormResult& res,
                                             const VirtualCharacter& v);

// c_2(2k*eta) = 2k * c_2(eta) in H^4(S^7/Q8; Z) = Z/8 (taken as an axiom);
// vanishes iff k = 0 mod 4.
bool chern_vanishing_check(const BigInt& k);

// The arithmetic of the counterexample: from the order m of delta in
// K0(S^7/Q8), the stable normal bundle is (m-2) copies of eta_R, of the
// form 2k eta_R with k = m/2 - 1.
struct CounterexampleReport {
    BigInt delta_order;              // m
    BigInt complex_trivial_multiple; // m*eta is stably trivial in K0
    BigInt real_trivial_multiple;    // imported implication: m*eta_R stably trivial
    BigInt normal_bundle_multiple;   // m - 2, as a multiple of eta_R
    BigInt k;                        // m/2 - 1
    std::string k_parity;            // "odd" / "even"
    bool chern_obstruction_vanishes; // chern_vanishing_check(k)
    std::string verdict;
};

// Runs quaternion_family(1) and extracts the report; a delta order that is
// not a power of 2 >= 8 throws InternalInconsistency.
CounterexampleReport counterexample_report();

}  // namespace kform
