#include "spinrep/branching.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinrep {

RestrictedRep restrict_rep(const SuperRep& rep) {
    if (rep.n < 2) throw std::invalid_argument("restrict_rep: nothing below rank 1");
    RestrictedRep res;
    res.parent = rep.shape;
    res.n = rep.n - 1;
    res.blocks = rep.blocks;
    res.block_dim = rep.block_dim;
    res.total_dim = rep.total_dim;
    res.jm.assign(rep.jm.begin(), rep.jm.end() - 1);
    res.gens.assign(rep.gens.begin(), rep.gens.end() - 1);
    return res;
}

namespace {

/// Invert v = q(c)/2 over small nonnegative contents; -1 if nothing matches.
int content_from_eigenvalue(double v, double tol) {
    for (int c = 0;; ++c) {
        const double target = static_cast<double>(q_value(c)) / 2.0;
        if (std::abs(v - target) <= tol) return c;
        if (target > v + 1.0) return -1;
    }
}

}  // namespace

std::map<ContentVector, int> eigenblock_decomposition(const RestrictedRep& res, double tol) {
    std::map<ContentVector, int> out;
    const int f = static_cast<int>(res.blocks.size());
    const int d = res.block_dim;
    std::vector<BlockOp> squares;
    squares.reserve(res.n);
    for (int k = 0; k < res.n; ++k) squares.push_back(res.jm[k] * res.jm[k]);
    for (int b = 0; b < f; ++b) {
        ContentVector prefix(res.n);
        for (int k = 0; k < res.n; ++k) {
            double v = 0.0;
            if (const CMatrix* blk = squares[k].find(b, b)) {
                v = blk->at(0, 0).real();
                CMatrix diff = *blk - CMatrix::identity(d) * cplx{v, 0.0};
                if (diff.max_abs() > tol)
                    throw std::logic_error("eigenblock_decomposition: block not scalar");
            }
            const int c = content_from_eigenvalue(v, tol);
            if (c < 0) throw std::logic_error("eigenblock_decomposition: eigenvalue off target");
            prefix[k] = c;
        }
        out[prefix] += d;
    }
    return out;
}

std::map<StrictPartition, int> branch_multiplicities(const StrictPartition& shape) {
    if (shape.n() < 2) throw std::invalid_argument("branch_multiplicities: need n >= 2");
    const SuperRep rep = build(shape);
    const auto eig = eigenblock_decomposition(restrict_rep(rep));
    std::map<StrictPartition, long long> grouped;
    for (const auto& [prefix, dim] : eig) grouped[shape_of(prefix)] += dim;
    std::map<StrictPartition, int> out;
    for (const auto& [mu, total] : grouped) {
        const long long dmu = rep_dim(mu);
        if (total % dmu != 0)
            throw std::logic_error("branch_multiplicities: non-integer multiplicity for " +
                                   mu.str());
        out[mu] = static_cast<int>(total / dmu);
    }
    return out;
}

std::map<StrictPartition, int> expected_branching(const StrictPartition& shape) {
    std::map<StrictPartition, int> out;
    const int r = shape.length();
    const int n = shape.n();
    for (int i = 0; i < r; ++i) {
        std::vector<int> parts = shape.parts();
        --parts[i];
        if (parts[i] == 0) parts.pop_back();
        bool strict = true;
        for (size_t k = 1; k < parts.size(); ++k)
            if (parts[k - 1] <= parts[k]) strict = false;
        if (!strict) continue;
        const StrictPartition mu(parts);
        if ((n - r) % 2 == 0)
            out[mu] = 1;
        else
            out[mu] = (i == r - 1 && shape.part(r - 1) == 1) ? 1 : 2;
    }
    return out;
}

BranchingGraph branching_graph(int max_n) {
    if (max_n < 1) throw std::invalid_argument("branching_graph: need max_n >= 1");
    BranchingGraph g;
    std::map<StrictPartition, int> node_at;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& lam : enumerate_strict_partitions(n)) {
            node_at.emplace(lam, static_cast<int>(g.nodes.size()));
            g.nodes.push_back({lam, n, rep_dim(lam), rep_type(lam)});
        }
    }
    for (const auto& node : g.nodes) {
        if (node.n < 2) continue;
        for (const auto& [mu, mult] : expected_branching(node.shape))
            g.edges.push_back({node_at.at(node.shape), node_at.at(mu), mult});
    }
    return g;
}

std::string export_dot(const BranchingGraph& g) {
    std::ostringstream os;
    os << "digraph branching {\n";
    os << "  rankdir=BT;\n";
    for (const auto& node : g.nodes)
        os << "  \"" << node.shape.str() << "\" [label=\"" << node.shape.str() << " | "
           << node.dim << " | " << node.kind << "\"];\n";
    for (const auto& e : g.edges)
        os << "  \"" << g.nodes[e.from].shape.str() << "\" -> \"" << g.nodes[e.to].shape.str()
           << "\" [label=\"" << e.mult << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const BranchingGraph& g) {
    std::ostringstream os;
    os << "{\"nodes\":[";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        if (i) os << ',';
        os << "{\"partition\":\"" << n.shape.str() << "\",\"n\":" << n.n << ",\"dim\":" << n.dim
           << ",\"kind\":\"" << n.kind << "\"}";
    }
    os << "],\"edges\":[";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (i) os << ',';
        os << "{\"from\":\"" << g.nodes[e.from].shape.str() << "\",\"to\":\""
           << g.nodes[e.to].shape.str() << "\",\"mult\":" << e.mult << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace spinrep
