#pragma once

#include <string>
#include <vector>

#include "spinrep/cmatrix.hpp"

namespace spinrep {

/// Matrix model of the rank-r Clifford algebra with positive form,
/// c_k c_l + c_l c_k = 2 delta_{kl}, acting on its simple supermodule of
/// dimension 2^ceil(r/2). Generators are hermitian involutions and odd with
/// respect to the parity grading.
struct CliffordRep {
    int rank = 0;
    int dim = 1;
    std::vector<CMatrix> gens;  // c_1 .. c_rank
    std::vector<int> parity;    // 0 even / 1 odd per basis vector
    char kind = 'M';            // M when rank is even, Q when odd
};

/// Deterministic tensor-recursive construction. Pair 2j-1, 2j of generators
/// acts on tensor factor j with a sign string on the earlier factors, so the
/// dimension doubles once per generator pair:
///   c_1 = [[0,1],[1,0]],  c_2 = [[0,i],[-i,0]]  on the first factor.
/// Basis vector e_x is even iff x has an even number of set bits; each
/// generator flips exactly one bit, hence is parity odd.
CliffordRep build_clifford(int r);

/// Trace over even-marked basis vectors minus trace over odd-marked ones.
cplx supertrace(const CMatrix& a, const std::vector<int>& parity);

struct CliffordReport {
    double relation_residual = 0.0;     // max over pairs of |(c_k c_l + c_l c_k)/2 - delta|
    double hermiticity_residual = 0.0;  // max over generators of |c - c^dagger|
    double parity_residual = 0.0;       // largest entry of a generator inside one parity class
    double tol = 0.0;
    bool passed = false;  // worst() <= tol
    double worst() const;
    bool pass(double t) const { return worst() <= t; }
    std::string summary() const;
};

CliffordReport verify_clifford(const CliffordRep& rep, double tol);

/// Hermitian involution anticommuting with every generator of an even-rank
/// model: i^{m(m-1)/2} c_1 ... c_m. Throws for odd rank (no such element
/// exists inside the algebra there).
CMatrix volume_involution(const CliffordRep& rep);

}  // namespace spinrep
