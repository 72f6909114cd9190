#include <doctest.h>

#include <random>

#include "k3lattice/cases.hpp"
#include "k3lattice/normal_forms.hpp"
#include "k3lattice/numbers.hpp"

using namespace k3l;

namespace {

// Independent determinant oracle: plain cofactor expansion along the first
// row. Exponential, only for the small matrices the tests feed it.
Rational cofactor_det(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Rational term = m.at(0, j) * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

ExactMatrix random_int_matrix(std::mt19937& rng, int n, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(d(rng));
    return m;
}

}  // namespace

TEST_CASE("determinant: identity and reference matrices against the cofactor oracle") {
    CHECK(determinant(ExactMatrix::identity(6)) == Rational(1));

    ExactMatrix m1 = reference_gram(CaseId::c2i);
    CHECK(determinant(m1) == Rational(900));
    CHECK(cofactor_det(m1) == Rational(900));

    ExactMatrix m6 = reference_gram(CaseId::c2vi);
    CHECK(determinant(m6) == Rational(4800));
    CHECK(cofactor_det(m6) == Rational(4800));

    for (CaseId c : all_cases()) CHECK(determinant(reference_gram(c)) == cofactor_det(reference_gram(c)));
}

TEST_CASE("determinant: rational entries and error paths") {
    ExactMatrix m{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(1, 7)}};
    CHECK(determinant(m) == Rational(1, 14) - Rational(1, 15));
    CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("inverse: identity, printed reference inverses, singular input") {
    CHECK(inverse(ExactMatrix::identity(3)) == ExactMatrix::identity(3));

    ExactMatrix m1i = inverse(reference_gram(CaseId::c2i));
    CHECK(m1i.at(0, 0) == Rational(-23, 30));
    CHECK(m1i == reference_gram_inverse(CaseId::c2i));

    ExactMatrix m5i = inverse(reference_gram(CaseId::c2v));
    CHECK(m5i.at(5, 5) == Rational(-3, 20));
    CHECK(m5i == reference_gram_inverse(CaseId::c2v));

    ExactMatrix sing(2, 2);
    sing.at(0, 0) = Rational(1);
    sing.at(1, 0) = Rational(2);
    CHECK_THROWS_AS(inverse(sing), std::invalid_argument);
}

TEST_CASE("inverse: A * inverse(A) is exactly the identity on random matrices") {
    std::mt19937 rng(20240601);
    int done = 0;
    while (done < 200) {
        int n = 2 + static_cast<int>(rng() % 4);
        ExactMatrix a = random_int_matrix(rng, n);
        if (determinant(a).is_zero()) continue;
        CHECK(a * inverse(a) == ExactMatrix::identity(n));
        ++done;
    }
}

TEST_CASE("smith normal form: pinned examples") {
    auto f1 = invariant_factors(ExactMatrix::diagonal({Rational(2), Rational(4)}));
    CHECK(f1 == std::vector<Int>{2, 4});

    auto f2 = invariant_factors(ExactMatrix{{Rational(2), Rational(1)}, {Rational(0), Rational(2)}});
    CHECK(f2 == std::vector<Int>{4});  // gcd of entries 1, determinant 4

    auto f6 = invariant_factors(reference_gram(CaseId::c2vi));
    CHECK(f6 == std::vector<Int>{2, 2, 20, 60});

    CHECK_THROWS_AS(smith_normal_form(ExactMatrix{{Rational(1, 2)}}), std::invalid_argument);
}

TEST_CASE("smith normal form: transform contracts on random matrices") {
    std::mt19937 rng(777);
    for (int it = 0; it < 200; ++it) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 5);
        std::uniform_int_distribution<int> d(-6, 6);
        ExactMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) = Rational(d(rng));

        SmithDecomposition s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(abs(determinant(s.u)) == Rational(1));
        CHECK(abs(determinant(s.v)) == Rational(1));
        for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
            Int di = s.d.at(i, i).numerator(), dj = s.d.at(i + 1, i + 1).numerator();
            if (di != 0) CHECK(dj % di == 0);
            else CHECK(dj == 0);
        }
        if (rows == cols) {
            Rational det = determinant(a);
            Rational prod(1);
            for (int i = 0; i < rows; ++i) prod *= s.d.at(i, i);
            CHECK(prod == abs(det));
        }
    }
}

TEST_CASE("hermite normal form: pinned examples and span preservation") {
    CHECK(hermite_normal_form(ExactMatrix::identity(2)) == ExactMatrix::identity(2));

    // [[2,0],[0,3]] with the appended column [1,1] spans all of Z^2
    ExactMatrix a{{Rational(2), Rational(0), Rational(1)}, {Rational(0), Rational(3), Rational(1)}};
    ExactMatrix h = hermite_normal_form(a);
    CHECK(h == ExactMatrix::identity(2));
    CHECK(abs(determinant(h)) == Rational(1));

    CHECK_THROWS_AS(hermite_normal_form(ExactMatrix{{Rational(1, 3)}}), std::invalid_argument);
}

TEST_CASE("hermite normal form: integer column span is preserved on random input") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int it = 0; it < 200; ++it) {
        int rows = 2 + static_cast<int>(rng() % 3);
        int cols = 1 + static_cast<int>(rng() % 5);
        ExactMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a.at(i, j) = Rational(d(rng));
        ExactMatrix h = hermite_normal_form(a);
        // every original column is an integer combination of the HNF columns
        for (int j = 0; j < cols; ++j) {
            std::vector<Rational> col(rows);
            bool zero = true;
            for (int i = 0; i < rows; ++i) {
                col[i] = a.at(i, j);
                zero = zero && col[i].is_zero();
            }
            if (h.cols() == 0) {
                CHECK(zero);
                continue;
            }
            CHECK(in_integer_column_span(h, col));
        }
    }
}

TEST_CASE("residue reduction: pinned values") {
    CHECK(reduce_mod_Z(Rational(0)).rep == Rational(0));
    CHECK(reduce_mod_Z(Rational(-1, 5)).rep == Rational(4, 5));
    CHECK(reduce_mod_2Z(Rational(-17, 15)).rep == Rational(13, 15));
    CHECK(reduce_mod_2Z(Rational(-35, 30)).rep == Rational(25, 30));
    CHECK(reduce_mod_Z(Rational(7, 3)).rep == Rational(1, 3));
    CHECK(reduce_mod_2Z(Rational(5, 2)).rep == Rational(1, 2));
}

TEST_CASE("residue reduction is idempotent and additive") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
    for (int it = 0; it < 500; ++it) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng));
        CHECK(reduce_mod_Z(reduce_mod_Z(x).rep) == reduce_mod_Z(x));
        CHECK(reduce_mod_2Z(reduce_mod_2Z(x).rep) == reduce_mod_2Z(x));
        CHECK(reduce_mod_Z(x + y) == reduce_mod_Z(reduce_mod_Z(x).rep + reduce_mod_Z(y).rep));
        CHECK(reduce_mod_2Z(x + y) == reduce_mod_2Z(reduce_mod_2Z(x).rep + reduce_mod_2Z(y).rep));
        for (int k = -3; k <= 3; ++k) {
            CHECK(reduce_mod_Z(x + Rational(k)) == reduce_mod_Z(x));
            CHECK(reduce_mod_2Z(x + Rational(2 * k)) == reduce_mod_2Z(x));
        }
    }
}

TEST_CASE("zeta3 arithmetic: unit root identities") {
    Zeta3Number z = zeta3_power(1);
    CHECK(z * z == zeta3_power(2));
    CHECK(z * z * z == Zeta3Number{Rational(1)});
    CHECK(Zeta3Number{Rational(1)} + z + z * z == Zeta3Number{Rational(0)});
    CHECK(zeta3_power(3) == Zeta3Number{Rational(1)});
    CHECK(zeta3_power(-1) == zeta3_power(2));
    CHECK(!z.is_rational());
    CHECK((z + zeta3_power(2)).is_rational());
}

TEST_CASE("sqrt5 arithmetic: golden ratio relations") {
    Sqrt5Number g{Rational(1, 2), Rational(1, 2)};      // (1 + sqrt5)/2
    Sqrt5Number gbar{Rational(1, 2), Rational(-1, 2)};  // (1 - sqrt5)/2
    CHECK(g * gbar == Sqrt5Number{Rational(-1)});
    CHECK(g + gbar == Sqrt5Number{Rational(1)});
    CHECK(g * g == g + Sqrt5Number{Rational(1)});
    CHECK(!g.is_rational());
}

TEST_CASE("rational and matrix text format round trips") {
    CHECK(Rational(-23, 30).str() == "-23/30");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("-23/30") == Rational(-23, 30));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    ExactMatrix m = reference_gram_inverse(CaseId::c2iii);
    CHECK(matrix_from_text(to_text(m)) == m);
    CHECK(to_text(ExactMatrix::identity(2)) == "1 0\n0 1\n");
}
