#include "kform/lattice.hpp"

#include <algorithm>

namespace kform {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw DimensionMismatch("ragged row list");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
    std::vector<BigInt> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    IntMatrix m = *this;
    // Bareiss fraction-free elimination
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < rows_; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < rows_ && m.at(p, k) == 0) ++p;
            if (p == rows_) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i)
            for (std::size_t j = k + 1; j < rows_; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(rows_ - 1, rows_ - 1) : -m.at(rows_ - 1, rows_ - 1);
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
    std::vector<BigInt> out;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition s;
    s.source_rows = a.rows();
    s.source_cols = a.cols();
    s.d = a;
    s.u = IntMatrix::identity(a.rows());
    s.v = IntMatrix::identity(a.cols());
    IntMatrix& d = s.d;

    auto abs_val = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

    const std::size_t steps = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // pivot: least |value| nonzero in the remaining submatrix,
            // ties broken by lowest (row, col)
            bool found = false;
            std::size_t pr = 0, pc = 0;
            BigInt best;
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    BigInt v = abs_val(d.at(i, j));
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) {
                t = steps;  // remaining submatrix is zero
                break;
            }
            if (pr != t) {
                d.swap_rows(t, pr);
                s.u.swap_rows(t, pr);
            }
            if (pc != t) {
                d.swap_cols(t, pc);
                s.v.swap_cols(t, pc);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                BigInt q = d.at(i, t) / d.at(t, t);
                d.add_row_multiple(i, t, -q);
                s.u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                BigInt q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                s.v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the rest by the pivot
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols() && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        s.u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (t == steps) break;
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    return s;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
    HermiteForm h;
    h.h = a;
    h.u = IntMatrix::identity(a.rows());
    IntMatrix& m = h.h;

    auto abs_val = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        // Euclidean elimination in this column below row r
        for (;;) {
            bool found = false;
            std::size_t pivot_row = 0;
            BigInt best;
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                BigInt v = abs_val(m.at(i, col));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pivot_row = i;
                }
            }
            if (!found) break;
            if (pivot_row != r) {
                m.swap_rows(r, pivot_row);
                h.u.swap_rows(r, pivot_row);
            }
            bool clean = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                BigInt q = m.at(i, col) / m.at(r, col);
                m.add_row_multiple(i, r, -q);
                h.u.add_row_multiple(i, r, -q);
                if (m.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < m.rows() && m.at(r, col) != 0) {
            if (m.at(r, col) < 0) {
                m.negate_row(r);
                h.u.negate_row(r);
            }
            // reduce entries above the pivot into [0, pivot)
            for (std::size_t i = 0; i < r; ++i) {
                BigInt q = floor_div(m.at(i, col), m.at(r, col));
                m.add_row_multiple(i, r, -q);
                h.u.add_row_multiple(i, r, -q);
            }
            h.pivot_cols.push_back(col);
            ++r;
        }
    }
    return h;
}

bool lattice_contains(const HermiteForm& hnf, const std::vector<BigInt>& x) {
    if (x.size() != hnf.h.cols())
        throw DimensionMismatch("vector length != lattice ambient dimension");
    std::vector<BigInt> rem = x;
    for (std::size_t r = 0; r < hnf.rank(); ++r) {
        std::size_t col = hnf.pivot_cols[r];
        if (rem[col] == 0) continue;
        const BigInt& pivot = hnf.h.at(r, col);
        if (rem[col] % pivot != 0) return false;
        BigInt q = rem[col] / pivot;
        for (std::size_t c = col; c < rem.size(); ++c) rem[c] -= q * hnf.h.at(r, c);
    }
    for (const auto& v : rem)
        if (v != 0) return false;
    return true;
}

bool lattice_contains(const IntMatrix& a, const std::vector<BigInt>& x) {
    return lattice_contains(hermite_normal_form(a), x);
}

bool same_row_span(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) return false;
    auto ha = hermite_normal_form(a);
    auto hb = hermite_normal_form(b);
    for (std::size_t r = 0; r < b.rows(); ++r)
        if (!lattice_contains(ha, b.row(r))) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (!lattice_contains(hb, a.row(r))) return false;
    return true;
}

BigInt AbelianGroupPresentation::torsion_order() const {
    BigInt p = 1;
    for (const auto& d : invariant_factors) p *= d;
    return p;
}

AbelianGroupPresentation AbelianGroupPresentation::torsion_part() const {
    AbelianGroupPresentation t;
    t.ambient_rank = ambient_rank;
    t.free_rank = 0;
    t.invariant_factors = invariant_factors;
    for (const auto& img : generator_images)
        t.generator_images.emplace_back(img.begin(),
                                        img.begin() + static_cast<long>(invariant_factors.size()));
    return t;
}

AbelianGroupPresentation quotient_presentation(std::size_t r, const IntMatrix& lattice) {
    if (lattice.rows() > 0 && lattice.cols() != r)
        throw DimensionMismatch("lattice rows must live in Z^r");

    // rowspan(L) * V = rowspan(D), so x -> x*V carries Z^r/L to Z^r/D.
    auto snf = smith_normal_form(lattice.rows() == 0 ? IntMatrix(0, r) : lattice);
    std::vector<BigInt> diag(r, BigInt(0));
    {
        auto d = snf.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) diag[i] = d[i];
    }

    AbelianGroupPresentation p;
    p.ambient_rank = r;
    std::vector<std::size_t> torsion_coords, free_coords;
    for (std::size_t i = 0; i < r; ++i) {
        if (diag[i] == 0)
            free_coords.push_back(i);
        else if (diag[i] != 1)
            torsion_coords.push_back(i);
    }
    p.free_rank = free_coords.size();
    for (std::size_t i : torsion_coords) p.invariant_factors.push_back(diag[i]);

    const IntMatrix& v = snf.v;  // square r x r when lattice nonempty
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<BigInt> img;
        img.reserve(torsion_coords.size() + free_coords.size());
        auto coord = [&](std::size_t j) {
            return lattice.rows() == 0 ? (i == j ? BigInt(1) : BigInt(0)) : v.at(i, j);
        };
        for (std::size_t k = 0; k < torsion_coords.size(); ++k) {
            BigInt c = coord(torsion_coords[k]) % p.invariant_factors[k];
            if (c < 0) c += p.invariant_factors[k];
            img.push_back(c);
        }
        for (std::size_t j : free_coords) img.push_back(coord(j));
        p.generator_images.push_back(std::move(img));
    }
    return p;
}

std::optional<BigInt> element_order_in_quotient(const AbelianGroupPresentation& p,
                                                const std::vector<BigInt>& x) {
    if (x.size() != p.ambient_rank)
        throw DimensionMismatch("vector length != ambient rank");
    const std::size_t nt = p.invariant_factors.size();
    std::vector<BigInt> img(nt + p.free_rank, BigInt(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < img.size(); ++k)
            img[k] += x[i] * p.generator_images[i][k];
    }
    for (std::size_t k = nt; k < img.size(); ++k)
        if (img[k] != 0) return std::nullopt;  // infinite order
    BigInt order = 1;
    for (std::size_t k = 0; k < nt; ++k) {
        const BigInt& d = p.invariant_factors[k];
        BigInt c = img[k] % d;
        if (c < 0) c += d;
        order = lcm(order, d / gcd(d, c == 0 ? d : c));
    }
    return order;
}

}  // namespace kform
