#include "spinrep/center.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrep {

namespace {

/// Contents of the shifted diagram, row by row: row i carries 0..lambda_i-1.
std::vector<int> shifted_contents(const StrictPartition& shape) {
    std::vector<int> out;
    for (int p : shape.parts())
        for (int c = 0; c < p; ++c) out.push_back(c);
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Fraction casimir_value(const StrictPartition& shape) {
    Fraction s = 0;
    for (int c : shifted_contents(shape)) s += Fraction(q_value(c), 4);
    return s;
}

CMatrix casimir_matrix(const SuperRep& rep) {
    BlockOp acc(static_cast<int>(rep.blocks.size()), rep.block_dim);
    for (const auto& m : rep.jm) acc = acc + m * m;
    return (acc * cplx{0.5, 0.0}).dense();
}

CentralCharacter central_character(const Partition& shape) {
    CentralCharacter chi;
    chi.shape = shape;
    for (int m : shape.parts())
        for (int j = 1; j <= m; ++j) chi.values.push_back(Fraction(2 * j - m - 1, 2));
    std::sort(chi.values.begin(), chi.values.end());
    return chi;
}

Fraction eval_powersum(const CentralCharacter& chi, int k) {
    if (k < 0) throw std::invalid_argument("eval_powersum: negative power");
    Fraction s = 0;
    for (const auto& v : chi.values) s += v.pow(k);
    return s;
}

Fraction twisted_power_value(const StrictPartition& shape, int m) {
    if (m < 1) throw std::invalid_argument("twisted_power_value: need m >= 1");
    Fraction s = 0;
    for (int c : shifted_contents(shape)) s += Fraction(q_value(c)).pow(m);
    return s;
}

CMatrix twisted_power_matrix(const SuperRep& rep, int m) {
    if (m < 1) throw std::invalid_argument("twisted_power_matrix: need m >= 1");
    const int f = static_cast<int>(rep.blocks.size());
    BlockOp acc(f, rep.block_dim);
    for (const auto& mi : rep.jm) {
        BlockOp term = mi * mi * cplx{2.0, 0.0};
        BlockOp p = term;
        for (int k = 1; k < m; ++k) p = p * term;
        acc = acc + p;
    }
    return acc.dense();
}

Fraction hecke_power_value(const StrictPartition& shape, int m) {
    if (m < 1) throw std::invalid_argument("hecke_power_value: need m >= 1");
    const CentralCharacter chi = central_character(shape.as_partition());
    Fraction s = 0;
    for (int j = 0; 2 * j <= m; ++j) {
        Fraction inner = 0;
        for (const auto& v : chi.values) inner += (Fraction(2) * v).pow(2 * m - 2 * j);
        s += Fraction(binomial(m, 2 * j)) * inner;
    }
    return s;
}

VoganCheck vogan_check(const StrictPartition& shape, const std::vector<int>& factors,
                       const SuperRep* rep) {
    if (factors.empty()) throw std::invalid_argument("vogan_check: no factors");
    VoganCheck out;
    out.factors = factors;
    out.twisted = 1;
    out.hecke = 1;
    for (int m : factors) {
        out.twisted *= twisted_power_value(shape, m);
        out.hecke *= hecke_power_value(shape, m);
    }
    out.equal = (out.twisted == out.hecke);
    if (rep) {
        CMatrix prod = CMatrix::identity(static_cast<int>(rep->total_dim));
        for (int m : factors) prod = prod * twisted_power_matrix(*rep, m);
        const CMatrix want =
            CMatrix::identity(static_cast<int>(rep->total_dim)) * cplx{out.twisted.as_double(), 0.0};
        out.matrix_residual = residual(prod, want);
    }
    return out;
}

}  // namespace spinrep
