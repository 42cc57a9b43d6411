#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kp/polynomial.hpp"
#include "oracles.hpp"

using kp::Exponents;
using kp::SparsePoly;

namespace {
SparsePoly x(int i) { return SparsePoly::variable(i); }
}  // namespace

TEST_CASE("ring basics") {
    CHECK(SparsePoly::monomial({2}).coeff({2, 0}) == 1);
    CHECK(SparsePoly::monomial({2}).coeff({1}) == 0);
    CHECK((x(1) + x(2)) * (x(1) - x(2)) == x(1) * x(1) - x(2) * x(2));
    CHECK((x(1) - x(1)).is_zero());
    CHECK(SparsePoly::constant(0).is_zero());

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly a = oracles::random_poly(rng, 3, 4, 4);
        SparsePoly b = oracles::random_poly(rng, 3, 4, 4);
        SparsePoly c = oracles::random_poly(rng, 3, 4, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == oracles::naive_mul(a, b));
    }
}

TEST_CASE("homogeneous structure") {
    SparsePoly f = x(1) * x(1) + x(2);
    CHECK_FALSE(f.is_homogeneous());
    auto parts = f.homogeneous_parts();
    CHECK(parts.size() == 2);
    CHECK(parts[1] == x(2));
    CHECK(parts[2] == x(1) * x(1));
    CHECK(f.total_degree() == 2);
    CHECK(f.max_var() == 2);
    CHECK(f.eval_ones() == 2);
}

TEST_CASE("variable swap") {
    SparsePoly sym = x(1) + x(2);
    CHECK(sym.apply_s(1) == sym);
    CHECK((x(1) * x(1) * x(2)).apply_s(1) == x(2) * x(2) * x(1));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        SparsePoly f = oracles::random_poly(rng, 4, 5, 5);
        CHECK(f.apply_s(2).apply_s(2) == f);
    }
}

TEST_CASE("divided differences") {
    CHECK((x(1) * x(2)).divided_difference(1).is_zero());
    CHECK((x(1) * x(1) * x(2)).divided_difference(1) == x(1) * x(2));
    CHECK(x(1).divided_difference(1) == SparsePoly::constant(1));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        SparsePoly f = oracles::random_poly(rng, 4, 6, 5);
        CHECK(f.divided_difference(1).divided_difference(1).is_zero());
        CHECK(f.divided_difference(2).divided_difference(2).is_zero());
    }
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly f = oracles::random_poly(rng, 5, 5, 4);
        CHECK(f.divided_difference(1).divided_difference(3) == f.divided_difference(3).divided_difference(1));
        CHECK(f.divided_difference(1).divided_difference(2).divided_difference(1) ==
              f.divided_difference(2).divided_difference(1).divided_difference(2));
    }
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly f = oracles::random_poly(rng, 3, 4, 3);
        SparsePoly g = oracles::random_poly(rng, 3, 4, 3);
        CHECK((f * g).divided_difference(1) ==
              f.divided_difference(1) * g + f.apply_s(1) * g.divided_difference(1));
    }
}

TEST_CASE("exact linear division") {
    CHECK(kp::divide_exact_linear(x(1) * x(1) - x(2) * x(2), 1, 2) == x(1) + x(2));
    CHECK_THROWS_AS(kp::divide_exact_linear(x(1) + SparsePoly::constant(1), 1, 2), std::logic_error);
    CHECK_THROWS_AS(kp::divide_exact_linear(x(3), 1, 2), std::logic_error);
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(kp::elementary_symmetric(0, 3) == SparsePoly::constant(1));
    CHECK(kp::elementary_symmetric(1, 2) == x(1) + x(2));
    CHECK(kp::elementary_symmetric(2, 3) == x(1) * x(2) + x(1) * x(3) + x(2) * x(3));
    CHECK(kp::elementary_symmetric(4, 3).is_zero());
}

TEST_CASE("partitions validate") {
    CHECK_NOTHROW(kp::Partition({3, 2, 1}));
    CHECK_NOTHROW(kp::Partition(std::vector<int>{}));
    CHECK_THROWS_AS(kp::Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(kp::Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("Schur functions of monomial alphabets") {
    // s_(1) sums the alphabet
    std::vector<Exponents> alphabet{{1}, {0, 1}};
    CHECK(kp::schur_at_monomials(kp::Partition({1}), alphabet) == x(1) + x(2));
    // s_(2) on {x1, x2} is the complete homogeneous h_2
    CHECK(kp::schur_at_monomials(kp::Partition({2}), alphabet) ==
          x(1) * x(1) + x(1) * x(2) + x(2) * x(2));
    // a column taller than the alphabet vanishes
    CHECK(kp::schur_at_monomials(kp::Partition({1, 1}), {{1}}).is_zero());
    // empty partition is the unit
    CHECK(kp::schur_at_monomials(kp::Partition(std::vector<int>{}), alphabet) == SparsePoly::constant(1));
}

TEST_CASE("Schur functions match the bialternant ratio") {
    for (int m = 1; m <= 3; ++m) {
        std::vector<Exponents> alphabet;
        for (int i = 1; i <= m; ++i) {
            Exponents e(static_cast<std::size_t>(i), 0);
            e.back() = 1;
            alphabet.push_back(e);
        }
        for (int l1 = 0; l1 <= 3; ++l1)
            for (int l2 = 0; l2 <= std::min(l1, 2); ++l2)
                for (int l3 = 0; l3 <= std::min(l2, 1); ++l3) {
                    std::vector<int> parts;
                    for (int v : {l1, l2, l3})
                        if (v > 0) parts.push_back(v);
                    kp::Partition lambda(parts);
                    CHECK(kp::schur_at_monomials(lambda, alphabet) == oracles::schur_bialternant(lambda, m));
                }
    }
}

TEST_CASE("monomial multisets") {
    SparsePoly f = kp::Int(2) * x(1) + x(2);
    auto ms = f.monomial_multiset();
    CHECK(ms.size() == 3);
    CHECK_THROWS_AS((x(1) - x(2)).monomial_multiset(), std::logic_error);
}

TEST_CASE("printing") {
    CHECK(SparsePoly().str() == "0");
    CHECK((x(1) * x(1) * x(2)).str() == "x1^2*x2");
    CHECK((SparsePoly::constant(1) - x(2)).str() == "1 - x2");
}
