#include "spinrep/clifford.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace spinrep {

CliffordRep build_clifford(int r) {
    if (r < 0) throw std::invalid_argument("build_clifford: negative rank");
    CliffordRep rep;
    rep.rank = r;
    const int m = (r + 1) / 2;  // tensor factors
    rep.dim = 1 << m;
    rep.kind = (r % 2 == 0) ? 'M' : 'Q';
    rep.parity.resize(rep.dim);
    for (int x = 0; x < rep.dim; ++x) rep.parity[x] = std::popcount(unsigned(x)) % 2;

    // Factor j of a basis index is its j-th highest bit. Generator 2j+1 acts
    // as [[0,1],[1,0]] on factor j, generator 2j+2 as [[0,i],[-i,0]], both
    // behind a diag(1,-1) string on factors 0..j-1.
    for (int k = 1; k <= r; ++k) {
        const int j = (k - 1) / 2;
        const bool second = (k % 2 == 0);
        CMatrix c(rep.dim);
        for (int x = 0; x < rep.dim; ++x) {
            const int bitpos = m - 1 - j;
            const int y = x ^ (1 << bitpos);  // flip factor j
            double sign = 1.0;
            for (int s = 0; s < j; ++s)
                if (x >> (m - 1 - s) & 1) sign = -sign;
            if (!second) {
                c.at(y, x) = sign;
            } else {
                // column x, row y: entries i above the diagonal, -i below
                const bool x_low = !(x >> bitpos & 1);
                c.at(y, x) = sign * (x_low ? cplx{0.0, -1.0} : cplx{0.0, 1.0});
            }
        }
        rep.gens.push_back(std::move(c));
    }
    return rep;
}

cplx supertrace(const CMatrix& a, const std::vector<int>& parity) {
    if (static_cast<int>(parity.size()) != a.dim())
        throw std::invalid_argument("supertrace: parity vector length mismatch");
    cplx t = 0.0;
    for (int i = 0; i < a.dim(); ++i) t += (parity[i] == 0 ? 1.0 : -1.0) * a.at(i, i);
    return t;
}

double CliffordReport::worst() const {
    return std::max({relation_residual, hermiticity_residual, parity_residual});
}

std::string CliffordReport::summary() const {
    std::ostringstream os;
    os << "relations " << relation_residual << "  hermiticity " << hermiticity_residual
       << "  parity " << parity_residual;
    return os.str();
}

CliffordReport verify_clifford(const CliffordRep& rep, double tol) {
    CliffordReport rpt;
    rpt.tol = tol;
    const int r = rep.rank;
    for (int k = 0; k < r; ++k) {
        for (int l = k; l < r; ++l) {
            CMatrix anti = rep.gens[k] * rep.gens[l] + rep.gens[l] * rep.gens[k];
            anti = anti * cplx{0.5, 0.0};
            if (k == l) anti -= CMatrix::identity(rep.dim);
            rpt.relation_residual = std::max(rpt.relation_residual, anti.max_abs());
        }
    }
    for (const auto& c : rep.gens) {
        rpt.hermiticity_residual =
            std::max(rpt.hermiticity_residual, residual(c, c.adjoint()));
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j)
                if (rep.parity[i] == rep.parity[j])
                    rpt.parity_residual = std::max(rpt.parity_residual, std::abs(c.at(i, j)));
    }
    rpt.passed = rpt.worst() <= tol;
    return rpt;
}

CMatrix volume_involution(const CliffordRep& rep) {
    if (rep.rank % 2 != 0)
        throw std::invalid_argument("volume_involution: rank must be even");
    CMatrix v = CMatrix::identity(rep.dim);
    for (const auto& c : rep.gens) v = v * c;
    const int phase = (rep.rank * (rep.rank - 1) / 2) % 4;
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return v * ipow[phase];
}

}  // namespace spinrep
