// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "spinrep/branching.hpp"
#include "spinrep/center.hpp"
#include "spinrep/rep.hpp"

using namespace spinrep;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("criterion %d: %-52s %s%s%s\n", id, what.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    constexpr double tol = 1e-9;

    // 1. full relation suite for every strict shape with n <= 7
    {
        const auto t0 = clock::now();
        double worst = 0.0;
        bool ok = true;
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : enumerate_strict_partitions(n)) {
                const RelationReport rpt = verify_relations(build(lam), tol);
                worst = std::max(worst, rpt.worst());
                ok = ok && rpt.pass(tol);
            }
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        report(1, "relation suite, all strict shapes n<=7", ok && secs < 60.0,
               "worst residual " + fmt(worst) + ", " + fmt(secs) + " s");
    }

    // 2. joint squared spectrum equals the content targets q(c)/2
    {
        bool ok = true;
        double worst = 0.0;
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : enumerate_strict_partitions(n)) {
                const SuperRep rep = build(lam);
                const auto expect = scont(lam);
                ok = ok && rep.blocks == expect;
                for (size_t b = 0; b < expect.size() && ok; ++b)
                    for (int k = 1; k <= n; ++k) {
                        const BlockOp sq = rep.jm[k - 1] * rep.jm[k - 1];
                        CMatrix diff = CMatrix::identity(rep.block_dim) *
                                       cplx{q_value(expect[b][k - 1]) / 2.0, 0.0};
                        if (const CMatrix* got =
                                sq.find(static_cast<int>(b), static_cast<int>(b)))
                            diff -= *got;
                        worst = std::max(worst, diff.max_abs());
                        for (const auto& [rc, m] : sq.blocks())
                            if (rc.first != rc.second) worst = std::max(worst, m.max_abs());
                    }
            }
        report(2, "squared spectrum = shifted content data, n<=7", ok && worst <= tol,
               "worst residual " + fmt(worst));
    }

    // 3. branching multiplicities match the closed form
    {
        bool ok = true;
        for (int n = 2; n <= 7 && ok; ++n)
            for (const auto& lam : enumerate_strict_partitions(n))
                ok = ok && branch_multiplicities(lam) == expected_branching(lam);
        const auto sp = [](const char* s) { return StrictPartition::parse(s); };
        ok = ok && branch_multiplicities(sp("3,1")) ==
                       std::map<StrictPartition, int>{{sp("2,1"), 1}, {sp("3"), 1}};
        ok = ok && branch_multiplicities(sp("4")) == std::map<StrictPartition, int>{{sp("3"), 2}};
        ok = ok &&
             branch_multiplicities(sp("2,1")) == std::map<StrictPartition, int>{{sp("2"), 1}};
        report(3, "branching = closed form incl. last-box exception, n<=7", ok);
    }

    // 4. dimension formula against construction, and the factorial sum rule
    {
        bool ok = true;
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : enumerate_strict_partitions(n))
                ok = ok && build(lam).total_dim == rep_dim(lam);
        for (int n = 1; n <= 9; ++n) {
            long long sum = 0;
            for (const auto& lam : enumerate_strict_partitions(n)) {
                const long long d = rep_dim(lam);
                sum += (rep_type(lam) == 'Q') ? d * d / 2 : d * d;
            }
            ok = ok && sum == factorial(n);
        }
        report(4, "dimension formula n<=7 and sum rule n<=9", ok);
    }

    // 5. Casimir acts by the content scalar
    {
        bool ok = casimir_value(StrictPartition::parse("3,1")) == Fraction(2);
        double worst = 0.0;
        for (int n = 1; n <= 7; ++n)
            for (const auto& lam : enumerate_strict_partitions(n)) {
                const SuperRep rep = build(lam);
                const CMatrix want = CMatrix::identity(static_cast<int>(rep.total_dim)) *
                                     cplx{casimir_value(lam).as_double(), 0.0};
                worst = std::max(worst, residual(casimir_matrix(rep), want));
            }
        report(5, "Casimir identity n<=7, scalar 2 for 3,1", ok && worst <= tol,
               "worst residual " + fmt(worst));
    }

    // 6. central power-sum identity, exactly, including triple products
    {
        bool ok = true;
        for (int n = 1; n <= 10 && ok; ++n)
            for (const auto& lam : enumerate_strict_partitions(n))
                for (int m = 1; m <= 5 && ok; ++m)
                    ok = twisted_power_value(lam, m) == hecke_power_value(lam, m);
        for (int n = 1; n <= 10 && ok; ++n)
            for (const auto& lam : enumerate_strict_partitions(n))
                for (int m1 = 1; m1 <= 5 && ok; ++m1)
                    for (int m2 = m1; m2 <= 5 && ok; ++m2) {
                        ok = vogan_check(lam, {m1, m2}).equal;
                        for (int m3 = m2; m3 <= 5 && ok; ++m3)
                            ok = vogan_check(lam, {m1, m2, m3}).equal;
                    }
        ok = ok && twisted_power_value(StrictPartition::parse("3"), 1) == Fraction(8);
        ok = ok && hecke_power_value(StrictPartition::parse("3"), 1) == Fraction(8);
        for (int n = 1; n <= 10 && ok; ++n)
            for (const auto& lam : enumerate_strict_partitions(n))
                for (int m = 0; m <= 5 && ok; ++m)
                    ok = eval_powersum(central_character(lam.as_partition()), 2 * m + 1)
                             .is_zero();
        report(6, "power-sum identity n<=10, m<=5, products<=3", ok);
    }

    // 7. reduction rule and exponent bookkeeping
    {
        bool ok = true;
        for (int n = 1; n <= 12 && ok; ++n)
            for (const auto& lam : enumerate_strict_partitions(n)) {
                const auto red = gp_reduction(lam.as_partition());
                ok = ok && red.size() == static_cast<size_t>(lam.length());
                for (int i = 0; i < lam.length() && ok; ++i) {
                    std::vector<int> want = lam.parts();
                    --want[i];
                    while (!want.empty() && want.back() == 0) want.pop_back();
                    ok = red[i] == Partition(want) && qres_exponent(lam, i + 1) == 2 * i;
                }
            }
        const auto red22 = gp_reduction(Partition::parse("2,2"));
        ok = ok && red22.size() == 2 && red22[0] == Partition::parse("2,1") &&
             red22[1] == Partition::parse("2,1");
        report(7, "reduction rule = box removal n<=12, exponent 2i-2", ok);
    }

    // 8. structural reproduction of the 4-dimensional worked example
    {
        const SuperRep rep = build(StrictPartition::parse("3,1"));
        bool ok = rep.blocks.size() == 2 && rep.total_dim == 4 && rep.kind == 'M';
        int even = 0;
        for (int p : rep.parity)
            if (p == 0) ++even;
        ok = ok && even == 2;
        const RelationReport rpt = verify_relations(rep, tol);
        ok = ok && rpt.pass(tol) && rpt.parity_odd <= tol;
        report(8, "worked 3,1 structure: 2 blocks, dim 4, type M, even dim 2", ok);
    }

    // 9. hook-length count against exhaustive enumeration
    {
        const auto t0 = clock::now();
        bool ok = true;
        for (int n = 1; n <= 12 && ok; ++n)
            for (const auto& lam : enumerate_strict_partitions(n))
                ok = schur_count(lam) ==
                     static_cast<long long>(standard_shifted_tableaux(lam).size());
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        report(9, "hook count = tableau enumeration n<=12", ok && secs < 10.0,
               fmt(secs) + " s");
    }

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
