#include <doctest.h>

#include "feuler/dirichlet.hpp"
#include "feuler/fe_engine.hpp"

using namespace feuler;

TEST_CASE("group sizes match Euler phi") {
    for (int d = 1; d <= 12; ++d) CHECK(DirichletGroup(d).size() == static_cast<int>(euler_phi(d)));
}

TEST_CASE("character axioms for every character of small modulus") {
    for (int d = 1; d <= 12; ++d) {
        for (const DirichletCharacter& chi : DirichletGroup(d).all()) {
            CHECK(chi(1) == CycloElem(Rational(1)));
            for (long a = 0; a < d; ++a) {
                bool unit = d == 1 || gcd_long(a, d) == 1;
                CHECK(chi(a).is_zero() == !unit);
                CHECK(chi(a + d) == chi(a)); // periodicity
                for (long b = 0; b < d; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
                if (unit) CHECK(pow_k(chi(a), chi.order()) == CycloElem(Rational(1)));
            }
        }
    }
}

TEST_CASE("principal characters") {
    for (int d : {1, 2, 3, 4, 5, 8}) {
        DirichletCharacter chi = DirichletCharacter::principal(d);
        CHECK(chi.is_principal());
        CHECK(chi.order() == 1);
        for (long a = 0; a < d; ++a)
            if (d == 1 || gcd_long(a, d) == 1) CHECK(chi(a) == CycloElem(Rational(1)));
    }
}

TEST_CASE("known small character tables") {
    // mod 2: only the principal pattern chi(0)=0, chi(1)=1
    DirichletGroup g2(2);
    CHECK(g2.size() == 1);
    CHECK(g2.character(0)(0).is_zero());
    CHECK(g2.character(0)(1) == CycloElem(Rational(1)));

    // mod 3: the nontrivial character is the quadratic one
    DirichletGroup g3(3);
    REQUIRE(g3.size() == 2);
    DirichletCharacter quad3 = g3.character(1);
    CHECK(quad3.order() == 2);
    CHECK(quad3.value_pm(2) == Rational(-1));

    // mod 4: nontrivial character sends 3 to -1
    DirichletCharacter quad4 = DirichletGroup(4).character(1);
    CHECK(quad4.order() == 2);
    CHECK(quad4.value_pm(3) == Rational(-1));

    // mod 5: orders are 1, 4, 2, 4 in some arrangement
    DirichletGroup g5(5);
    std::vector<int> orders;
    for (int i = 0; i < g5.size(); ++i) orders.push_back(g5.character(i).order());
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 2, 4, 4});

    // a character of order 4 is not {±1}-valued
    for (int i = 0; i < g5.size(); ++i)
        if (g5.character(i).order() == 4)
            CHECK_THROWS_AS(g5.character(i).value_pm(2), unsupported_character);
}

TEST_CASE("modulus 8 exercises the two-generator branch") {
    DirichletGroup g8(8);
    REQUIRE(g8.size() == 4);
    for (int i = 0; i < 4; ++i) {
        DirichletCharacter chi = g8.character(i);
        CHECK(chi.order() <= 2); // (Z/8)^* is C2 x C2
        for (long a : {1L, 3L, 5L, 7L})
            for (long b : {1L, 3L, 5L, 7L}) CHECK(chi(a * b) == chi(a) * chi(b));
    }
    // all four characters are distinct
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            bool differ = false;
            for (long a : {1L, 3L, 5L, 7L})
                if (!(g8.character(i)(a) == g8.character(j)(a))) differ = true;
            CHECK(differ);
        }
}
