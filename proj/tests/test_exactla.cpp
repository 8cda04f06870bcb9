#include "doctest.h"

#include <random>
#include <vector>

#include "liepi/exactla.hpp"

using namespace liepi;

namespace {

// dense Gaussian elimination over the rationals, kept separate from the
// library code paths on purpose
long naive_rank(std::vector<std::vector<Rational>> a) {
    long rows = static_cast<long>(a.size());
    long cols = rows ? static_cast<long>(a[0].size()) : 0;
    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long p = -1;
        for (long r = rank; r < rows; ++r)
            if (a[r][c] != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(a[rank], a[p]);
        for (long r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational factor = a[r][c] / a[rank][c];
            for (long k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

RationalMatrix from_dense(const std::vector<std::vector<Rational>>& a) {
    long rows = static_cast<long>(a.size());
    long cols = rows ? static_cast<long>(a[0].size()) : 0;
    RationalMatrix m(0, cols);
    for (long r = 0; r < rows; ++r) m.append_row(make_sparse(a[r]));
    (void)rows;
    return m;
}

} // namespace

TEST_CASE("sparse rows store no zeros") {
    SparseRow r = make_sparse({Rational(0), Rational(2), Rational(0), Rational(-1, 3)});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == std::pair<long, Rational>{1, Rational(2)});
    CHECK(r[1] == std::pair<long, Rational>{3, Rational(-1, 3)});
}

TEST_CASE("to_primitive clears denominators and content") {
    SparseRow r = {{0, Rational(4, 6)}, {2, Rational(-2)}, {5, Rational(8, 3)}};
    IntRow p = to_primitive(r);
    REQUIRE(p.size() == 3);
    // (2/3, -2, 8/3) * 3 = (2, -6, 8), content 2 -> (1, -3, 4)
    CHECK(p[0] == std::pair<long, Integer>{0, 1});
    CHECK(p[1] == std::pair<long, Integer>{2, -3});
    CHECK(p[2] == std::pair<long, Integer>{5, 4});
}

TEST_CASE("matrix accessors and incremental updates") {
    RationalMatrix m(2, 3);
    m.set(0, 1, Rational(5));
    m.add_to(0, 1, Rational(-2));
    m.add_to(1, 0, Rational(1, 2));
    CHECK(m.at(0, 1) == 3);
    CHECK(m.at(1, 0) == Rational(1, 2));
    CHECK(m.at(1, 2) == 0);
    CHECK(m.nnz() == 2);
    m.set(0, 1, Rational(0));
    CHECK(m.nnz() == 1);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
}

TEST_CASE("rank on fixed matrices") {
    RationalMatrix z(3, 4);
    CHECK(z.rank() == 0);

    // two proportional rows and one independent
    RationalMatrix m(0, 3);
    m.append_row(make_sparse({Rational(1), Rational(2), Rational(3)}));
    m.append_row(make_sparse({Rational(2, 3), Rational(4, 3), Rational(2)}));
    m.append_row(make_sparse({Rational(0), Rational(1), Rational(0)}));
    CHECK(m.rank() == 2);
    CHECK(m.rank_uncached() == 2);
}

TEST_CASE("rank agrees with the dense oracle on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> sparse(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        long rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c)
                if (sparse(rng) == 0) {
                    a[r][c] = Rational(num(rng), den(rng));
                    a[r][c].canonicalize();
                }
        RationalMatrix m = from_dense(a);
        long expected = naive_rank(a);
        CAPTURE(trial);
        CHECK(m.rank_uncached() == expected);
        CHECK(m.rank() == expected);
    }
}

TEST_CASE("rank cache returns stable answers") {
    RationalMatrix m(0, 2);
    m.append_row(make_sparse({Rational(1), Rational(1)}));
    m.append_row(make_sparse({Rational(1), Rational(1)}));
    std::uint64_t h = m.content_hash();
    CHECK(m.rank() == 1);
    CHECK(RankCache::global().get(h) == 1);
    CHECK(m.rank() == 1);

    // permuting entries changes the content hash
    RationalMatrix m2(0, 2);
    m2.append_row(make_sparse({Rational(1), Rational(1)}));
    m2.append_row(make_sparse({Rational(1), Rational(2)}));
    CHECK(m2.content_hash() != h);
}

TEST_CASE("echelon reduction and span membership") {
    Echelon ech;
    CHECK(ech.insert(make_sparse({Rational(1), Rational(1), Rational(0)})));
    CHECK(ech.insert(make_sparse({Rational(0), Rational(2), Rational(1)})));
    CHECK_FALSE(ech.insert(make_sparse({Rational(2), Rational(4), Rational(1)})));
    CHECK(ech.rank() == 2);
    CHECK(ech.reduce(make_sparse({Rational(1), Rational(3), Rational(1)})).empty());
    CHECK_FALSE(ech.reduce(make_sparse({Rational(0), Rational(0), Rational(1)})).empty());

    RationalMatrix m(0, 3);
    m.append_row(make_sparse({Rational(1), Rational(1), Rational(0)}));
    m.append_row(make_sparse({Rational(0), Rational(2), Rational(1)}));
    CHECK(in_span(make_sparse({Rational(1), Rational(3), Rational(1)}), m));
    CHECK_FALSE(in_span(make_sparse({Rational(1), Rational(0), Rational(0)}), m));
    CHECK(in_span(SparseRow{}, m));
}

TEST_CASE("echelon rank agrees with matrix rank on random input") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        Echelon ech;
        RationalMatrix m(0, 6);
        for (int r = 0; r < 7; ++r) {
            std::vector<Rational> row(6);
            for (auto& v : row) v = Rational(num(rng));
            ech.insert(make_sparse(row));
            m.append_row(make_sparse(row));
        }
        CAPTURE(trial);
        CHECK(ech.rank() == m.rank_uncached());
    }
}

TEST_CASE("intersection dimensions via sums of subspaces") {
    // a = <e1, e2>, b = <e2, e3> inside Q^3
    RationalMatrix a(0, 3), b(0, 3);
    a.append_row(make_sparse({Rational(1), Rational(0), Rational(0)}));
    a.append_row(make_sparse({Rational(0), Rational(1), Rational(0)}));
    b.append_row(make_sparse({Rational(0), Rational(1), Rational(0)}));
    b.append_row(make_sparse({Rational(0), Rational(0), Rational(1)}));
    SubspaceDims d = dimension_of_intersection_complement(a, b);
    CHECK(d.dim_a == 2);
    CHECK(d.dim_b == 2);
    CHECK(d.dim_sum == 3);
    CHECK(d.dim_intersection() == 1);
}
