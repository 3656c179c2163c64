#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinrep/rep.hpp"

namespace spinrep {

/// The rank n-1 operator family living on the same space: M_n and the last
/// generator dropped, everything else unchanged.
struct RestrictedRep {
    StrictPartition parent;
    int n = 0;  // parent rank minus one
    std::vector<ContentVector> blocks;  // parent blocks (full length)
    int block_dim = 0;
    long long total_dim = 0;
    std::vector<BlockOp> jm;    // M_1 .. M_n
    std::vector<BlockOp> gens;  // tau_1 .. tau_{n-1}
};

RestrictedRep restrict_rep(const SuperRep& rep);  // throws for n = 1

/// Joint eigenspaces of M_1^2 .. M_n^2 of the restricted family, keyed by the
/// recovered content prefix. Eigenvalues are read off the operator blocks and
/// matched against the exact targets q(c)/2; dimensions sum to the total.
std::map<ContentVector, int> eigenblock_decomposition(const RestrictedRep& res,
                                                      double tol = 1e-9);

/// Multiplicity of each strict shape of n-1 in the restriction, via dimension
/// ratios of the eigenblock groups. Throws std::logic_error if a ratio fails
/// to be an integer.
std::map<StrictPartition, int> branch_multiplicities(const StrictPartition& shape);

/// Closed-form multiplicities: over the strict single-box removals of shape,
/// all 1 when n-r is even; when n-r is odd all 2, except that removing the
/// final box of a last row of size 1 contributes 1.
std::map<StrictPartition, int> expected_branching(const StrictPartition& shape);

struct BranchingGraph {
    struct Node {
        StrictPartition shape;
        int n = 0;
        long long dim = 0;
        char kind = 'M';
    };
    struct Edge {
        int from = 0;  // node indices
        int to = 0;
        int mult = 0;
    };
    std::vector<Node> nodes;  // ranks 1..N, decreasing lex within each rank
    std::vector<Edge> edges;
};

BranchingGraph branching_graph(int max_n);

std::string export_dot(const BranchingGraph& g);
std::string export_json(const BranchingGraph& g);

}  // namespace spinrep
