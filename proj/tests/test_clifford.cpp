#include <doctest.h>

#include <complex>

#include "spinrep/clifford.hpp"

using namespace spinrep;

TEST_CASE("rank 2 generators are the standard pair") {
    auto rep = build_clifford(2);
    CHECK(rep.dim == 2);
    CHECK(rep.kind == 'M');
    CHECK(rep.parity == std::vector<int>{0, 1});
    CHECK(rep.gens[0].at(0, 0) == cplx{0, 0});
    CHECK(rep.gens[0].at(0, 1) == cplx{1, 0});
    CHECK(rep.gens[0].at(1, 0) == cplx{1, 0});
    CHECK(rep.gens[1].at(0, 1) == cplx{0, 1});
    CHECK(rep.gens[1].at(1, 0) == cplx{0, -1});
}

TEST_CASE("rank 0 and odd ranks") {
    auto r0 = build_clifford(0);
    CHECK(r0.dim == 1);
    CHECK(r0.gens.empty());
    CHECK(r0.kind == 'M');

    auto r3 = build_clifford(3);
    CHECK(r3.dim == 4);
    CHECK(r3.kind == 'Q');
    CHECK(verify_clifford(r3, 1e-12).pass(1e-12));
}

TEST_CASE("relations hold up to rank 10") {
    for (int r = 0; r <= 10; ++r) {
        auto rep = build_clifford(r);
        CHECK(rep.dim == 1 << ((r + 1) / 2));
        auto rpt = verify_clifford(rep, 1e-12);
        INFO("rank ", r, ": ", rpt.summary());
        CHECK(rpt.passed);
    }
    // every entry is one of 0, +-1, +-i, so the rank 2 relations are exact
    CHECK(verify_clifford(build_clifford(2), 1e-9).worst() == 0.0);
}

TEST_CASE("corrupted generator is caught") {
    auto rep = build_clifford(2);
    rep.gens[0] = rep.gens[0] * cplx{2.0, 0.0};
    auto rpt = verify_clifford(rep, 1e-9);
    CHECK_FALSE(rpt.pass(1e-9));
    CHECK(rpt.relation_residual == doctest::Approx(3.0));  // |(2c)^2/2 - 1| on the (1,1) pair
}

TEST_CASE("supertrace") {
    std::vector<int> par{0, 1};
    CHECK(supertrace(CMatrix::identity(2), par) == cplx{0, 0});

    auto rep = build_clifford(2);
    CHECK(std::abs(supertrace(rep.gens[0], rep.parity)) == 0.0);

    CMatrix d(2);
    d.at(0, 0) = 2.0;
    d.at(1, 1) = 3.0;
    CHECK(supertrace(d, par) == cplx{-1.0, 0.0});

    CHECK_THROWS_AS(supertrace(CMatrix::identity(3), par), std::invalid_argument);
}

TEST_CASE("supertrace vanishes below the top product") {
    // str(c_{k_1} ... c_{k_s}) = 0 for distinct generators unless the product
    // uses all of them; the full product has nonzero supertrace, which is
    // what makes the even-rank module faithful.
    for (int r = 2; r <= 6; r += 2) {
        auto rep = build_clifford(r);
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            CMatrix prod = CMatrix::identity(rep.dim);
            int count = 0;
            for (int k = 0; k < r; ++k)
                if (mask >> k & 1) {
                    prod = prod * rep.gens[k];
                    ++count;
                }
            const double st = std::abs(supertrace(prod, rep.parity));
            if (count < r)
                CHECK(st < 1e-12);
            else
                CHECK(st == doctest::Approx(rep.dim));
        }
    }
}

TEST_CASE("generator products have the parity of their length") {
    auto rep = build_clifford(5);
    auto is_homogeneous = [&](const CMatrix& m, int want) {
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j)
                if (std::abs(m.at(i, j)) > 1e-12 &&
                    (rep.parity[i] + rep.parity[j]) % 2 != want)
                    return false;
        return true;
    };
    for (int k = 0; k < 5; ++k) {
        CHECK(is_homogeneous(rep.gens[k], 1));
        for (int l = 0; l < 5; ++l)
            if (l != k) CHECK(is_homogeneous(rep.gens[k] * rep.gens[l], 0));
    }
}

TEST_CASE("volume involution anticommutes with everything") {
    for (int r = 2; r <= 6; r += 2) {
        auto rep = build_clifford(r);
        const CMatrix v = volume_involution(rep);
        CHECK(residual(v * v, CMatrix::identity(rep.dim)) < 1e-12);
        CHECK(residual(v, v.adjoint()) < 1e-12);
        for (const auto& c : rep.gens) CHECK((v * c + c * v).max_abs() < 1e-12);
    }
    CHECK_THROWS_AS(volume_involution(build_clifford(3)), std::invalid_argument);
}
