#include <doctest.h>

#include <algorithm>

#include "spinrep/center.hpp"

using namespace spinrep;

namespace {

StrictPartition sp(std::initializer_list<int> parts) { return StrictPartition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("q function") {
    CHECK(q_value(0) == 0);
    CHECK(q_value(1) == 2);
    CHECK(q_value(2) == 6);
    for (long long m = -100; m <= 100; ++m) CHECK(q_value(m) == q_value(-m - 1));
}

TEST_CASE("casimir scalar") {
    CHECK(casimir_value(sp({3, 1})) == Fraction(2));
    CHECK(casimir_value(sp({1})) == Fraction(0));
    CHECK(casimir_value(sp({3})) == Fraction(2));
    CHECK(casimir_value(sp({4})) == Fraction(5));
}

TEST_CASE("casimir matrix acts by the scalar") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lam : enumerate_strict_partitions(n)) {
            const SuperRep rep = build(lam);
            const CMatrix got = casimir_matrix(rep);
            const CMatrix want = CMatrix::identity(static_cast<int>(rep.total_dim)) *
                                 cplx{casimir_value(lam).as_double(), 0.0};
            INFO("lambda=", lam.str());
            CHECK(residual(got, want) < 1e-9);
        }
    }
}

TEST_CASE("central character values") {
    const auto chi = central_character(Partition::parse("5,3,2"));
    std::vector<Fraction> want{{-2, 1}, {-1, 1}, {-1, 1}, {-1, 2}, {0, 1},
                               {0, 1},  {1, 2},  {1, 1},  {1, 1},  {2, 1}};
    std::sort(want.begin(), want.end());
    CHECK(chi.values == want);

    CHECK(central_character(Partition::parse("1")).values == std::vector<Fraction>{{0, 1}});
    CHECK(central_character(Partition::parse("3")).values ==
          std::vector<Fraction>{{-1, 1}, {0, 1}, {1, 1}});
}

TEST_CASE("central characters are negation symmetric") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : enumerate_strict_partitions(n)) {
            const auto chi = central_character(lam.as_partition());
            CHECK(chi.values.size() == static_cast<size_t>(n));
            auto negated = chi.values;
            for (auto& v : negated) v = -v;
            std::sort(negated.begin(), negated.end());
            CHECK(negated == chi.values);
        }
}

TEST_CASE("power sums of the character") {
    CHECK(eval_powersum(central_character(Partition::parse("3")), 2) == Fraction(2));
    CHECK(eval_powersum(central_character(Partition::parse("5,3,2")), 2) == Fraction(25, 2));
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : enumerate_strict_partitions(n))
            for (int m = 0; m <= 5; ++m)
                CHECK(eval_powersum(central_character(lam.as_partition()), 2 * m + 1).is_zero());
}

TEST_CASE("power sum values on both sides") {
    CHECK(twisted_power_value(sp({3}), 1) == Fraction(8));
    CHECK(twisted_power_value(sp({3}), 2) == Fraction(40));
    CHECK(twisted_power_value(sp({1}), 3) == Fraction(0));
    CHECK(hecke_power_value(sp({3}), 1) == Fraction(8));
    CHECK(hecke_power_value(sp({3}), 2) == Fraction(40));
    CHECK(hecke_power_value(sp({1}), 4) == Fraction(0));
}

TEST_CASE("central identity holds exactly up to n=10") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : enumerate_strict_partitions(n))
            for (int m = 1; m <= 5; ++m) {
                INFO("lambda=", lam.str(), " m=", m);
                CHECK(twisted_power_value(lam, m) == hecke_power_value(lam, m));
            }
}

TEST_CASE("single factor check on 3,1") {
    const auto c = vogan_check(sp({3, 1}), {1});
    CHECK(c.equal);
    CHECK(c.twisted == Fraction(8));
    CHECK(c.hecke == Fraction(8));
}

TEST_CASE("product identities") {
    const auto check = vogan_check(sp({5, 2}), {1, 2});
    CHECK(check.equal);
    CHECK(check.twisted == twisted_power_value(sp({5, 2}), 1) * twisted_power_value(sp({5, 2}), 2));

    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : enumerate_strict_partitions(n))
            for (int m1 = 1; m1 <= 3; ++m1)
                for (int m2 = m1; m2 <= 3; ++m2)
                    for (int m3 = m2; m3 <= 3; ++m3)
                        CHECK(vogan_check(lam, {m1, m2, m3}).equal);

    CHECK_THROWS_AS(vogan_check(sp({2}), {}), std::invalid_argument);
}

TEST_CASE("matrix route agrees with the scalar route") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : enumerate_strict_partitions(n)) {
            const SuperRep rep = build(lam);
            for (int m = 1; m <= 3; ++m) {
                const CMatrix got = twisted_power_matrix(rep, m);
                const CMatrix want = CMatrix::identity(static_cast<int>(rep.total_dim)) *
                                     cplx{twisted_power_value(lam, m).as_double(), 0.0};
                INFO("lambda=", lam.str(), " m=", m);
                CHECK(residual(got, want) < 1e-9);
            }
            const auto fullcheck = vogan_check(lam, {1, 2}, &rep);
            CHECK(fullcheck.equal);
            CHECK(fullcheck.matrix_residual >= 0.0);
            CHECK(fullcheck.matrix_residual < 1e-6);
        }
}

TEST_CASE("fraction plumbing") {
    CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
    CHECK(Fraction(-4, 8).str() == "-1/2");
    CHECK((Fraction(2, 3) * Fraction(3, 2)).as_int() == 1);
    CHECK(Fraction(7).pow(0) == Fraction(1));
    CHECK(Fraction(2, 3).pow(3) == Fraction(8, 27));
    CHECK_THROWS_AS(Fraction(1, 0), std::domain_error);
    CHECK_THROWS_AS(Fraction(1, 2).as_int(), std::domain_error);
    CHECK(Fraction(1, 2).as_double() == 0.5);
}
