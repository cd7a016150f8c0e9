#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epkit/linalg.hpp"
#include "epkit/matrix.hpp"

using namespace epkit;

namespace {

Matrix<Rat> qmat(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix<Rat> m = Matrix<Rat>::zero(r, c, Rat(0));
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m.at(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

Matrix<Mod> nmat(std::uint64_t n, std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix<Mod> m = Matrix<Mod>::zero(r, c, Mod(0, n));
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m.at(i, j++) = Mod::from_signed(v, n);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic and star") {
    auto a = qmat({{0, 1}, {0, 1}});
    auto id = Matrix<Rat>::identity(2, Rat(0));
    CHECK(a * id == a);
    CHECK(a + (-a) == Matrix<Rat>::zero(2, 2, Rat(0)));
    CHECK(a.transpose() == qmat({{0, 0}, {1, 1}}));
    CHECK(a * a == a);  // idempotent

    Matrix<Gauss> b = Matrix<Gauss>::zero(2, 2, Gauss());
    b.at(0, 0) = Gauss(Rat(1));
    b.at(0, 1) = Gauss(Rat(0), Rat(1));
    Matrix<Gauss> bs = b.conj_transpose();
    CHECK(bs.at(0, 0) == Gauss(Rat(1)));
    CHECK(bs.at(1, 0) == Gauss(Rat(0), Rat(-1)));
    CHECK(bs.at(0, 1) == Gauss());
}

TEST_CASE("rref bases are canonical") {
    auto a = qmat({{0, 1}, {0, 1}});
    CHECK(row_basis(a) == qmat({{0, 1}}));
    CHECK(col_basis(a) == qmat({{1, 1}}));
    CHECK(null_basis(a) == qmat({{1, 0}}));
    CHECK(left_null_basis(a) == qmat({{1, -1}}));
    CHECK(rank(a) == 1);

    // bases of the same subspace from different spanning sets coincide
    auto two_rows = qmat({{0, 2}, {0, -3}});
    CHECK(row_basis(two_rows) == qmat({{0, 1}}));

    auto z = Matrix<Rat>::zero(2, 2, Rat(0));
    CHECK(row_basis(z).rows() == 0);
    CHECK(row_basis(z).cols() == 2);
    CHECK(null_basis(z) == Matrix<Rat>::identity(2, Rat(0)));
    CHECK(rank(z) == 0);
}

TEST_CASE("solve on both sides") {
    auto a = qmat({{0, 1}, {0, 1}});
    auto b = qmat({{1}, {1}});
    auto x = solve_right(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK(!solve_right(a, qmat({{1}, {0}})).has_value());

    auto c = qmat({{0, 1}});
    auto y = solve_left(a, c);
    REQUIRE(y.has_value());
    CHECK(*y * a == c);
    CHECK(!solve_left(qmat({{1, 0}, {2, 0}}), qmat({{0, 1}})).has_value());
}

TEST_CASE("field inverse over Q and GF(7)") {
    auto m = qmat({{1, 2}, {3, 4}});
    auto inv = field_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix<Rat>::identity(2, Rat(0)));
    CHECK(*inv * m == Matrix<Rat>::identity(2, Rat(0)));
    CHECK(!field_inverse(qmat({{1, 2}, {2, 4}})).has_value());

    auto f = nmat(7, {{1, 2}, {3, 4}});
    auto finv = field_inverse(f);
    REQUIRE(finv.has_value());
    CHECK(f * *finv == Matrix<Mod>::identity(2, Mod(0, 7)));
}

TEST_CASE("rank factorization reconstructs the matrix") {
    auto a = qmat({{0, 1}, {0, 1}});
    auto fac = rank_factor(a);
    CHECK(fac.c == qmat({{1}, {1}}));
    CHECK(fac.r == qmat({{0, 1}}));
    CHECK(fac.c * fac.r == a);

    // rank 0: empty factors still multiply back to the zero matrix
    auto z = Matrix<Rat>::zero(2, 2, Rat(0));
    auto zf = rank_factor(z);
    CHECK(zf.c.rows() == 2);
    CHECK(zf.c.cols() == 0);
    CHECK(zf.r.rows() == 0);
    CHECK(zf.c * zf.r == z);

    auto full = qmat({{1, 2}, {3, 4}});
    auto ff = rank_factor(full);
    CHECK(ff.c * ff.r == full);
    CHECK(ff.c.cols() == 2);
}

TEST_CASE("division-free determinant matches elimination") {
    auto v = qmat({{1, 1, 1, 1}, {1, 2, 4, 8}, {1, 3, 9, 27}, {1, 4, 16, 64}});
    CHECK(det_division_free(v) == Rat(12));

    auto m = qmat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    CHECK(det_division_free(m) == Rat(-3));

    // same matrix reduced mod 12 (no division available there)
    auto mm = nmat(12, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    CHECK(det_division_free(mm).v == 9);  // -3 mod 12
}

TEST_CASE("adjugate identity and inverse mod composite n") {
    auto m = nmat(12, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    Mod d = det_division_free(m);
    auto adj = adjugate(m);
    Matrix<Mod> di = Matrix<Mod>::identity(3, Mod(0, 12));
    for (auto& x : di.flat()) x = d * x;
    CHECK(adj * m == di);
    CHECK(m * adj == di);

    auto u = nmat(6, {{1, 1}, {0, 1}});
    auto uinv = mod_inverse(u);
    REQUIRE(uinv.has_value());
    CHECK(u * *uinv == Matrix<Mod>::identity(2, Mod(0, 6)));
    CHECK(*uinv * u == Matrix<Mod>::identity(2, Mod(0, 6)));

    CHECK(!mod_inverse(nmat(6, {{2, 0}, {0, 1}})).has_value());
}

TEST_CASE("matrix serialization") {
    CHECK(matrix_to_string(qmat({{0, 1}, {0, 1}})) == "[[0,1],[0,1]]");
    Matrix<Gauss> g = Matrix<Gauss>::zero(1, 2, Gauss());
    g.at(0, 0) = Gauss(Rat(1, 2), Rat(-1));
    g.at(0, 1) = Gauss(Rat(0), Rat(1));
    CHECK(matrix_to_string(g) == "[[1/2-1*i,1*i]]");
}
