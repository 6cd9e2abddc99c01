#pragma once

#include <optional>
#include <vector>

#include "kform/errors.hpp"
#include "kform/numbers.hpp"

namespace kform {

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<BigInt> row(std::size_t r) const;

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);

    // Exact determinant by fraction-free Gaussian elimination (Bareiss).
    BigInt determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> entries_;
};

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all >= 0.
struct SmithDecomposition {
    IntMatrix u, d, v;
    std::size_t source_rows = 0, source_cols = 0;

    std::vector<BigInt> diagonal() const;
};

// Deterministic SNF: pivot is always the least-|value| nonzero entry of the
// remaining submatrix, ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form with unimodular witness: u * A = h,
// pivots positive, entries above each pivot reduced into [0, pivot).
// Row span of h equals that of A (zero rows kept at the bottom).
struct HermiteForm {
    IntMatrix h, u;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row, ascending

    std::size_t rank() const { return pivot_cols.size(); }
};

HermiteForm hermite_normal_form(const IntMatrix& a);

// Membership of x in the row span of A over Z, by back-substitution
// through the HNF. Independent of the SNF path.
bool lattice_contains(const HermiteForm& hnf, const std::vector<BigInt>& x);
bool lattice_contains(const IntMatrix& a, const std::vector<BigInt>& x);

// Mutual row-span containment.
bool same_row_span(const IntMatrix& a, const IntMatrix& b);

// Z^r / rowspan(L) in invariant-factor form. Torsion coordinates come
// first in generator_images, then the free coordinates.
struct AbelianGroupPresentation {
    std::size_t ambient_rank = 0;
    std::size_t free_rank = 0;
    std::vector<BigInt> invariant_factors;  // each >= 2, each dividing the next
    // generator_images[i] = image of the i-th standard basis vector,
    // length invariant_factors.size() + free_rank.
    std::vector<std::vector<BigInt>> generator_images;

    BigInt torsion_order() const;  // product of invariant factors
    AbelianGroupPresentation torsion_part() const;
};

AbelianGroupPresentation quotient_presentation(std::size_t r, const IntMatrix& lattice);

// Smallest n >= 1 with n*x in the lattice; nullopt when no free coordinate
// of the image vanishes (infinite order).
std::optional<BigInt> element_order_in_quotient(const AbelianGroupPresentation& p,
                                                const std::vector<BigInt>& x);

}  // namespace kform
