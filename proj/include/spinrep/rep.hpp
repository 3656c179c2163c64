#pragma once

#include <string>
#include <vector>

#include "spinrep/blockop.hpp"
#include "spinrep/clifford.hpp"
#include "spinrep/fraction.hpp"
#include "spinrep/shifted.hpp"

namespace spinrep {

/// q(m) = m(m+1); the squared-eigenvalue profile of the anticommuting family.
inline long long q_value(long long m) { return m * (m + 1); }

/// The M_i operator restricted to the eigenblock with content vector `a`
/// (1-based position i): zero when a_i = 0, otherwise sqrt(q(a_i)/2) times
/// the Clifford generator for the slot of position i. Its square is
/// q(a_i)/2 times the identity.
CMatrix jm_block(const ContentVector& a, int i);

/// 1 - 2(q(a_i)+q(a_{i+1})) / (q(a_i)-q(a_{i+1}))^2, exactly. Zero precisely
/// when swapping entries i, i+1 leaves the set of shifted content vectors.
Fraction coupling_strength_sq(const ContentVector& a, int i);

/// Unitary hermitian involution P coupling the blocks of `a` and of the
/// swapped vector. It anticommutes with every M_j for j outside {i, i+1} and
/// intertwines the diagonal parts of the generator with a sign flip.
struct Intertwiner {
    ContentVector source;
    ContentVector target;
    CMatrix P;
    double b = 0.0;     // coupling magnitude, in (0, 1]
    bool volume = false;  // true when the swap moves a diagonal label
};

/// Throws std::domain_error("no intertwiner: non-standard swap") when the
/// swapped vector is not a shifted content vector.
Intertwiner intertwiner(const ContentVector& a, int i);

/// Action of the i-th generator on the eigenblock of `a`, together with the
/// coupled partner block when the swap is standard. `op` is block_dim x
/// block_dim when uncoupled and twice that when coupled, ordered (a, swap).
/// The coupling sign here is the local canonical one; the full build may
/// flip it for global consistency.
struct TauBlock {
    bool coupled = false;
    ContentVector alpha;
    ContentVector beta;  // swap partner when coupled
    CMatrix op;
};

TauBlock tau_block(const ContentVector& a, int i);

/// Assembled supermodule: one Clifford block per shifted content vector,
/// operators stored blockwise.
struct SuperRep {
    StrictPartition shape;
    int n = 0;
    std::vector<ContentVector> blocks;  // scont(shape), tableau order
    int block_dim = 0;                  // 2^ceil((n-l)/2)
    long long total_dim = 0;            // block_dim * schur_count
    std::vector<BlockOp> jm;            // M_1 .. M_n
    std::vector<BlockOp> gens;          // tau_1 .. tau_{n-1}
    std::vector<int> parity;            // 0/1 per basis vector of the full space
    char kind = 'M';                    // M iff n - length even
};

/// Builds V_lambda. Coupling signs are resolved globally: parallel coupling
/// operators around commuting squares and braid hexagons are only consistent
/// for one sign class, which a small GF(2) system pins down; remaining free
/// signs default to +1 so builds are reproducible.
SuperRep build(const StrictPartition& shape);

long long rep_dim(const StrictPartition& shape);  // 2^ceil((n-l)/2) * schur_count
char rep_type(const StrictPartition& shape);      // 'Q' iff n - length odd

struct RelationReport {
    double tau_square = 0.0;       // tau_i^2 = 1
    double braid = 0.0;            // (tau_i tau_{i+1})^3 = 1
    double distant = 0.0;          // (tau_i tau_j)^2 = -1 for |i-j| >= 2
    double jm_anticommute = 0.0;   // M_k M_l + M_l M_k = 0, k != l
    double jm_square = 0.0;        // M_k^2 = q(a_k)/2 per block
    double recursion = 0.0;        // M_{i+1} = tau_i - tau_i M_i tau_i
    double jm_cross = 0.0;         // M_j tau_i = -tau_i M_j, j outside {i,i+1}
    double parity_odd = 0.0;       // all generators odd for the grading
    double tol = 0.0;
    bool passed = false;           // worst() <= tol

    double worst() const;
    bool pass(double t) const { return worst() <= t; }
    std::string summary() const;  // one line per check
};

RelationReport verify_relations(const SuperRep& rep, double tol = 1e-9);

}  // namespace spinrep
