#include <doctest.h>

#include <random>

#include "kform/lattice.hpp"

using namespace kform;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 6, int bound = 9) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    return m;
}

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// gcd of all k x k minors, by brute-force enumeration; oracle for the
// product of the first k invariant factors.
BigInt minor_gcd(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> rows_sel(k), cols_sel(k);
    BigInt g = 0;
    std::vector<std::size_t> rc(k), cc(k);
    // enumerate k-subsets of rows and columns
    std::vector<bool> rmask(a.rows(), false);
    std::fill(rmask.begin(), rmask.begin() + static_cast<long>(k), true);
    std::sort(rmask.begin(), rmask.end());
    do {
        std::vector<std::size_t> ridx;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (rmask[i]) ridx.push_back(i);
        std::vector<bool> cmask(a.cols(), false);
        std::fill(cmask.begin(), cmask.begin() + static_cast<long>(k), true);
        std::sort(cmask.begin(), cmask.end());
        do {
            std::vector<std::size_t> cidx;
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (cmask[j]) cidx.push_back(j);
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub.at(i, j) = a.at(ridx[i], cidx[j]);
            g = gcd(g, sub.determinant());
        } while (std::next_permutation(cmask.begin(), cmask.end()));
    } while (std::next_permutation(rmask.begin(), rmask.end()));
    return abs_val(g);
}

void check_snf_valid(const IntMatrix& a, const SmithDecomposition& s) {
    REQUIRE(s.u.rows() == a.rows());
    REQUIRE(s.v.rows() == a.cols());
    CHECK(abs_val(s.u.determinant()) == 1);
    CHECK(abs_val(s.v.determinant()) == 1);
    CHECK(s.u * a * s.v == s.d);
    // diagonal, non-negative, divisibility chain
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) CHECK(diag[i] >= 0);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] == 0) {
            CHECK(diag[i + 1] == 0);
        } else {
            CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
}

}  // namespace

TEST_CASE("SNF of simple matrices") {
    auto id = IntMatrix::identity(3);
    auto s = smith_normal_form(id);
    CHECK(s.d == id);

    IntMatrix d23(2, 2);
    d23.at(0, 0) = 2;
    d23.at(1, 1) = 3;
    s = smith_normal_form(d23);
    CHECK(s.diagonal() == std::vector<BigInt>{1, 6});
    check_snf_valid(d23, s);

    auto empty = IntMatrix(0, 0);
    CHECK(smith_normal_form(empty).diagonal().empty());
}

TEST_CASE("SNF determinism") {
    std::mt19937 rng(123);
    auto m = random_matrix(rng);
    auto s1 = smith_normal_form(m);
    auto s2 = smith_normal_form(m);
    CHECK(s1.d == s2.d);
    CHECK(s1.u == s2.u);
    CHECK(s1.v == s2.v);
}

TEST_CASE("SNF validity on random matrices") {
    std::mt19937 rng(20240813);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng);
        check_snf_valid(m, smith_normal_form(m));
    }
}

TEST_CASE("products of invariant factors equal minor gcds") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix m(4, 4);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = entry(rng);
        auto diag = smith_normal_form(m).diagonal();
        BigInt prod = 1;
        for (std::size_t k = 1; k <= 4; ++k) {
            prod *= diag[k - 1];
            CHECK(prod == minor_gcd(m, k));
        }
    }
}

TEST_CASE("HNF basics") {
    auto id = IntMatrix::identity(4);
    auto h = hermite_normal_form(id);
    CHECK(h.h == id);
    CHECK(h.rank() == 4);

    IntMatrix lens(1, 2);
    lens.at(0, 0) = 2;
    lens.at(0, 1) = -2;
    h = hermite_normal_form(lens);
    CHECK(h.h.at(0, 0) == 2);
    CHECK(h.h.at(0, 1) == -2);

    IntMatrix d23(2, 2);
    d23.at(0, 0) = 2;
    d23.at(1, 1) = 3;
    h = hermite_normal_form(d23);
    CHECK(h.h == d23);  // already HNF, while SNF is diag(1,6)
    CHECK(smith_normal_form(d23).diagonal() == std::vector<BigInt>{1, 6});
    CHECK(same_row_span(d23, d23));
}

TEST_CASE("HNF witness and span preservation") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_matrix(rng);
        auto h = hermite_normal_form(m);
        CHECK(abs_val(h.u.determinant()) == 1);
        CHECK(h.u * m == h.h);
        CHECK(same_row_span(m, h.h));
        // pivots positive, entries above reduced
        for (std::size_t r = 0; r < h.rank(); ++r) {
            const BigInt& p = h.h.at(r, h.pivot_cols[r]);
            CHECK(p > 0);
            for (std::size_t i = 0; i < r; ++i) {
                CHECK(h.h.at(i, h.pivot_cols[r]) >= 0);
                CHECK(h.h.at(i, h.pivot_cols[r]) < p);
            }
        }
    }
}

TEST_CASE("lattice membership") {
    IntMatrix m(2, 3);
    m.at(0, 0) = 2;
    m.at(0, 1) = 0;
    m.at(0, 2) = 0;
    m.at(1, 0) = 0;
    m.at(1, 1) = 3;
    m.at(1, 2) = 0;
    CHECK(lattice_contains(m, {4, 3, 0}));
    CHECK_FALSE(lattice_contains(m, {1, 0, 0}));
    CHECK_FALSE(lattice_contains(m, {0, 0, 1}));
    CHECK(lattice_contains(m, {0, 0, 0}));
}

TEST_CASE("quotient presentations") {
    IntMatrix l(2, 2);
    l.at(0, 0) = 2;
    l.at(1, 1) = 2;
    auto p = quotient_presentation(2, l);
    CHECK(p.free_rank == 0);
    CHECK(p.invariant_factors == std::vector<BigInt>{2, 2});
    CHECK(p.torsion_order() == 4);

    // empty lattice: free of full rank
    auto free3 = quotient_presentation(3, IntMatrix(0, 3));
    CHECK(free3.free_rank == 3);
    CHECK(free3.invariant_factors.empty());
}

TEST_CASE("element orders in quotients") {
    IntMatrix l(2, 2);
    l.at(0, 0) = 4;
    l.at(1, 1) = 6;
    auto p = quotient_presentation(2, l);
    CHECK(element_order_in_quotient(p, {0, 0}) == BigInt(1));
    CHECK(element_order_in_quotient(p, {1, 0}) == BigInt(4));
    CHECK(element_order_in_quotient(p, {2, 3}) == BigInt(2));
    CHECK(element_order_in_quotient(p, {1, 1}) == BigInt(12));

    // free coordinate survives
    IntMatrix row(1, 2);
    row.at(0, 0) = 2;
    row.at(0, 1) = 0;
    auto q = quotient_presentation(2, row);
    CHECK(q.free_rank == 1);
    CHECK_FALSE(element_order_in_quotient(q, {0, 1}).has_value());
}

TEST_CASE("element orders agree with the brute-force multiple-testing oracle") {
    std::mt19937 rng(20240814);
    std::uniform_int_distribution<int> entry(-4, 4);
    int done = 0;
    while (done < 100) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t r = dim(rng);
        IntMatrix l(dim(rng), r);
        for (std::size_t i = 0; i < l.rows(); ++i)
            for (std::size_t j = 0; j < r; ++j) l.at(i, j) = entry(rng);
        auto p = quotient_presentation(r, l);
        if (p.free_rank > 0) continue;  // oracle needs a finite quotient
        std::vector<BigInt> x;
        for (std::size_t j = 0; j < r; ++j) x.emplace_back(entry(rng));

        auto fast = element_order_in_quotient(p, x);
        REQUIRE(fast.has_value());

        auto hnf = hermite_normal_form(l);
        BigInt bound = p.torsion_order();
        BigInt oracle = 0;
        for (BigInt n = 1; n <= bound; ++n) {
            std::vector<BigInt> nx;
            for (const auto& c : x) nx.push_back(n * c);
            if (lattice_contains(hnf, nx)) {
                oracle = n;
                break;
            }
        }
        REQUIRE(oracle != 0);
        CHECK(*fast == oracle);
        ++done;
    }
}

TEST_CASE("quotient orders via SNF and HNF agree on random full-rank lattices") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> entry(-6, 6);
    int done = 0;
    while (done < 50) {
        std::size_t r = 1 + (rng() % 4);
        IntMatrix l(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) l.at(i, j) = entry(rng);
        BigInt det = l.determinant();
        if (det == 0) continue;
        auto p = quotient_presentation(r, l);
        CHECK(p.torsion_order() == abs_val(det));
        auto h = hermite_normal_form(l);
        BigInt hdet = 1;
        for (std::size_t i = 0; i < r; ++i) hdet *= h.h.at(i, h.pivot_cols[i]);
        CHECK(p.torsion_order() == hdet);
        ++done;
    }
}

TEST_CASE("dimension mismatches throw") {
    IntMatrix l(1, 3);
    CHECK_THROWS_AS(quotient_presentation(2, l), DimensionMismatch);
    auto p = quotient_presentation(3, l);
    CHECK_THROWS_AS(element_order_in_quotient(p, {1, 2}), DimensionMismatch);
}
