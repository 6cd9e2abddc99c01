#pragma once

#include <string>
#include <vector>

#include "kform/chartab.hpp"

namespace kform {

// An element of the representation ring R(G): an integer vector over the
// irreducible basis. "Genuine" means all coefficients are non-negative.
struct VirtualCharacter {
    TablePtr table;
    std::vector<BigInt> coeffs;

    VirtualCharacter() = default;
    VirtualCharacter(TablePtr t, std::vector<BigInt> c);

    bool is_genuine() const;
    bool is_zero() const;

    VirtualCharacter operator+(const VirtualCharacter& o) const;
    VirtualCharacter operator-(const VirtualCharacter& o) const;
    VirtualCharacter operator-() const;
    VirtualCharacter scaled(const BigInt& n) const;
    bool operator==(const VirtualCharacter& o) const;
    bool operator!=(const VirtualCharacter& o) const { return !(*this == o); }

    // Value at one class, or at every class in class order.
    Cyclotomic value_at(std::size_t class_index) const;
    std::vector<Cyclotomic> class_values() const;

    // Value at the identity class as an integer.
    BigInt augmentation() const;

    // Canonical rendering over irreducible names, e.g. "2 - y".
    std::string to_string() const;
};

VirtualCharacter zero_character(TablePtr t);
VirtualCharacter trivial_character(TablePtr t);        // the ring unit
VirtualCharacter irreducible_character(TablePtr t, std::size_t i);

// A convenient basis for the augmentation ideal of R(Q8):
//   alpha = 1 - x_i, beta = 1 - x_j, gamma = 3 - x_i - x_j - x_k,
//   delta = 2 - y.
VirtualCharacter named_q8_element(const std::string& name);

// Decompose a class function into integer irreducible coefficients via
// inner products; any non-integer coefficient throws NotAnInteger.
VirtualCharacter decompose_class_function(TablePtr t,
                                          const std::vector<Cyclotomic>& values);

// (1/|G|) sum over classes of size * u(C) * conj(v(C)), as an exact integer.
BigInt inner_product(const VirtualCharacter& u, const VirtualCharacter& v);

// Product in R(G): pointwise class values decomposed back into the basis.
VirtualCharacter multiply(const VirtualCharacter& u, const VirtualCharacter& v);

// Adams operation psi^k, evaluated directly from the power maps.
VirtualCharacter adams(const VirtualCharacter& v, long k);

// Exterior power lambda^q of a genuine character, via the Newton identity
//   q*lambda^q = sum_{m=1..q} (-1)^{m-1} psi^m * lambda^{q-m}.
// The division by q is an integrality self-check.
VirtualCharacter exterior_power(const VirtualCharacter& v, long q);

// lambda_{-1}(v) = sum_{q=0..dim v} (-1)^q lambda^q(v), v genuine.
VirtualCharacter lambda_minus_one(const VirtualCharacter& v);

// Dimension of the eigenvalue-1 subspace of a class representative acting
// on a genuine character: (1/ord) sum_{k<ord} v(power_map(k)).
BigInt fixed_subspace_dim(const VirtualCharacter& v, std::size_t class_index);

struct FreenessVerdict {
    bool free = false;
    std::string witness_class;  // offending class label when not free
};

// The action on the unit sphere S(V) is free iff no non-identity class
// fixes a nonzero subspace.
FreenessVerdict is_free_on_sphere(const VirtualCharacter& v);

}  // namespace kform
