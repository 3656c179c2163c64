#include "spinrep/rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinrep {

namespace {

int nonzero_rank(const ContentVector& a) {
    int r = 0;
    for (int v : a)
        if (v != 0) ++r;
    return r;
}

/// Slot of 1-based position i: its rank among the nonzero positions.
int slot_of(const ContentVector& a, int i) {
    int k = 0;
    for (int p = 0; p < i; ++p)
        if (a[p] != 0) ++k;
    return k;
}

ContentVector swapped(const ContentVector& a, int i) {
    ContentVector s = a;
    std::swap(s[i - 1], s[i]);
    return s;
}

void check_position(const ContentVector& a, int i, int span) {
    if (i < 1 || i > static_cast<int>(a.size()) - span)
        throw std::out_of_range("position index out of range");
}

CMatrix jm_block_in(const ContentVector& a, int i, const CliffordRep& cl) {
    if (a[i - 1] == 0) return CMatrix(cl.dim);
    const int k = slot_of(a, i);
    const double scale = std::sqrt(static_cast<double>(q_value(a[i - 1])) / 2.0);
    return cl.gens[k - 1] * cplx{scale, 0.0};
}

/// Diagonal part of the i-th generator on one block:
/// 2 (M_i - M_{i+1}) / (q(a_i) - q(a_{i+1})). Squares to the identity minus
/// the coupling strength.
CMatrix x_part(const ContentVector& a, int i, const CliffordRep& cl) {
    const long long qa = q_value(a[i - 1]);
    const long long qb = q_value(a[i]);
    if (qa == qb) throw std::logic_error("x_part: equal adjacent contents");
    CMatrix x = jm_block_in(a, i, cl) - jm_block_in(a, i + 1, cl);
    return x * cplx{2.0 / static_cast<double>(qa - qb), 0.0};
}

/// Even-rounded Clifford model: for odd rank the simple supermodule has the
/// same dimension as the rank+1 model, whose last generator provides the
/// anticommuting volume-type involution that an odd-rank algebra lacks.
CliffordRep rounded_clifford(const ContentVector& a) {
    const int r = nonzero_rank(a);
    return build_clifford(r + (r % 2));
}

CMatrix slot_swap_involution(const CliffordRep& cl, int k) {
    return (cl.gens[k - 1] - cl.gens[k]) * cplx{1.0 / std::sqrt(2.0), 0.0};
}

// ---- GF(2) machinery for the coupling signs ----

class Gf2System {
public:
    explicit Gf2System(int nvars) : nvars_(nvars), words_((nvars + 63) / 64) {}

    void add_equation(const std::vector<int>& vars, int rhs) {
        std::vector<uint64_t> mask(words_, 0);
        for (int v : vars) mask[v / 64] ^= uint64_t(1) << (v % 64);
        int b = rhs & 1;
        for (;;) {
            const int hi = highest_bit(mask);
            if (hi < 0) {
                if (b != 0) throw std::logic_error("coupling sign system inconsistent");
                return;
            }
            auto it = pivots_.find(hi);
            if (it == pivots_.end()) {
                pivots_.emplace(hi, Row{std::move(mask), b});
                return;
            }
            for (int w = 0; w < words_; ++w) mask[w] ^= it->second.mask[w];
            b ^= it->second.rhs;
        }
    }

    /// Solution with all free variables zero.
    std::vector<int> solve() const {
        std::vector<int> x(nvars_, 0);
        for (const auto& [pv, row] : pivots_) {  // ascending pivot order
            int v = row.rhs;
            for (int w = 0; w < words_; ++w) {
                uint64_t bits = row.mask[w];
                while (bits) {
                    const int b = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (b != pv) v ^= x[b];
                }
            }
            x[pv] = v;
        }
        return x;
    }

private:
    struct Row {
        std::vector<uint64_t> mask;
        int rhs;
    };
    int nvars_;
    int words_;
    std::map<int, Row> pivots_;

    static int highest_bit(const std::vector<uint64_t>& mask) {
        for (int w = static_cast<int>(mask.size()) - 1; w >= 0; --w)
            if (mask[w]) return w * 64 + 63 - std::countl_zero(mask[w]);
        return -1;
    }
};

struct Edge {
    int i;   // generator index, 1-based
    int lo;  // coupled block indices, lo < hi
    int hi;
    bool volume;
    double b;
    CMatrix P;
};

struct Assembly {
    int n = 0;
    int d = 0;
    std::vector<ContentVector> blocks;
    std::map<ContentVector, int> index;
    CliffordRep cl;
    std::vector<Edge> edges;
    std::map<std::pair<int, int>, int> edge_at;  // (i, either endpoint) -> edge id

    int other_end(int eid, int v) const {
        const Edge& e = edges[eid];
        return e.lo == v ? e.hi : e.lo;
    }
};

Assembly make_assembly(const StrictPartition& shape) {
    Assembly as;
    as.n = shape.n();
    as.blocks = scont(shape);
    for (size_t b = 0; b < as.blocks.size(); ++b) as.index.emplace(as.blocks[b], b);
    const int r = as.n - shape.length();
    as.cl = build_clifford(r + (r % 2));
    as.d = as.cl.dim;
    const CMatrix vol = r > 0 ? volume_involution(as.cl) : CMatrix::identity(as.d);

    for (int i = 1; i < as.n; ++i) {
        for (size_t b = 0; b < as.blocks.size(); ++b) {
            const ContentVector& a = as.blocks[b];
            auto it = as.index.find(swapped(a, i));
            if (it == as.index.end() || it->second < static_cast<int>(b)) continue;
            Edge e;
            e.i = i;
            e.lo = static_cast<int>(b);
            e.hi = it->second;
            e.volume = (a[i - 1] == 0 || a[i] == 0);
            const Fraction b2 = coupling_strength_sq(a, i);
            if (b2.is_zero() || b2.as_double() < 0)
                throw std::logic_error("standard swap with vanishing coupling");
            e.b = std::sqrt(b2.as_double());
            e.P = e.volume ? vol : slot_swap_involution(as.cl, slot_of(a, i));
            as.edge_at.emplace(std::make_pair(i, e.lo), static_cast<int>(as.edges.size()));
            as.edge_at.emplace(std::make_pair(i, e.hi), static_cast<int>(as.edges.size()));
            as.edges.push_back(std::move(e));
        }
    }
    return as;
}

/// Dense generator on a subset of blocks, with one optionally flipped edge.
/// Used to probe braid hexagons before committing signs.
CMatrix local_generator(const Assembly& as, int g, const std::vector<int>& comp, int flip_eid) {
    const int d = as.d;
    const int m = static_cast<int>(comp.size());
    std::map<int, int> pos;
    for (int t = 0; t < m; ++t) pos.emplace(comp[t], t);
    CMatrix T(m * d);
    auto put = [&](int br, int bc, const CMatrix& blk) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) T.at(br * d + i, bc * d + j) = blk.at(i, j);
    };
    for (int t = 0; t < m; ++t) put(t, t, x_part(as.blocks[comp[t]], g, as.cl));
    for (size_t eid = 0; eid < as.edges.size(); ++eid) {
        const Edge& e = as.edges[eid];
        if (e.i != g || !pos.count(e.lo) || !pos.count(e.hi)) continue;
        const double s = (static_cast<int>(eid) == flip_eid) ? -e.b : e.b;
        const CMatrix c = e.P * cplx{s, 0.0};
        put(pos[e.hi], pos[e.lo], c);
        put(pos[e.lo], pos[e.hi], c);
    }
    return T;
}

std::vector<int> solve_signs(const Assembly& as) {
    Gf2System sys(static_cast<int>(as.edges.size()));

    // Distant generators anticommute. Around a full square of swaps the two
    // composite paths cancel by themselves when at least one coupling is a
    // slot swap (the operators anticommute), but volume-type couplings
    // commute, so there the four signs must multiply to -1.
    for (size_t e1 = 0; e1 < as.edges.size(); ++e1) {
        for (size_t e2 = e1 + 1; e2 < as.edges.size(); ++e2) {
            const Edge& a = as.edges[e1];
            const Edge& b = as.edges[e2];
            if (std::abs(a.i - b.i) < 2) continue;
            int shared = -1;
            for (int v : {a.lo, a.hi})
                if (v == b.lo || v == b.hi) shared = v;
            if (shared < 0) continue;
            const int vb = as.other_end(static_cast<int>(e1), shared);
            const int vc = as.other_end(static_cast<int>(e2), shared);
            if (shared > vb || shared > vc) continue;  // visit each square once
            auto itd = as.index.find(swapped(as.blocks[vb], b.i));
            if (itd == as.index.end())
                throw std::logic_error("swap square missing its fourth corner");
            const int vd = itd->second;
            if (shared > vd) continue;
            const int e3 = as.edge_at.at({b.i, vb});
            const int e4 = as.edge_at.at({a.i, vc});
            sys.add_equation({static_cast<int>(e1), static_cast<int>(e2), e3, e4},
                             (a.volume && b.volume) ? 1 : 0);
        }
    }

    // Braid constraints bind signs only on full hexagonal orbits of a pair of
    // adjacent swaps. Each hexagon fixes the product of its six signs; probe
    // the two classes numerically on the isolated six-block subspace.
    for (int i = 1; i + 1 < as.n; ++i) {
        std::set<int> done;
        for (size_t b = 0; b < as.blocks.size(); ++b) {
            if (done.count(static_cast<int>(b))) continue;
            std::vector<int> comp{static_cast<int>(b)};
            std::set<int> seen{static_cast<int>(b)};
            std::vector<int> hex_edges;
            for (size_t t = 0; t < comp.size(); ++t) {
                for (int g : {i, i + 1}) {
                    auto it = as.edge_at.find({g, comp[t]});
                    if (it == as.edge_at.end()) continue;
                    const int o = as.other_end(it->second, comp[t]);
                    if (!seen.count(o)) {
                        seen.insert(o);
                        comp.push_back(o);
                    }
                    if (as.edges[it->second].lo == comp[t]) hex_edges.push_back(it->second);
                }
            }
            for (int v : comp) done.insert(v);
            if (hex_edges.size() < comp.size()) continue;  // tree orbit: signs are gauge
            if (comp.size() != 6 || hex_edges.size() != 6)
                throw std::logic_error("unexpected braid orbit shape");
            std::sort(comp.begin(), comp.end());
            std::sort(hex_edges.begin(), hex_edges.end());
            int rhs = -1;
            for (int trial = 0; trial < 2; ++trial) {
                const int flip = trial ? hex_edges.front() : -1;
                const CMatrix bi = local_generator(as, i, comp, flip);
                const CMatrix bj = local_generator(as, i + 1, comp, flip);
                const CMatrix prod = bi * bj;
                const double res = residual(prod * prod * prod, CMatrix::identity(prod.dim()));
                if (res < 1e-6) {
                    rhs = trial;
                    break;
                }
            }
            if (rhs < 0) throw std::logic_error("braid hexagon admits no sign assignment");
            sys.add_equation(hex_edges, rhs);
        }
    }
    return sys.solve();
}

int zero_position_parity(const ContentVector& a) {
    int s = 0;
    for (size_t p = 0; p < a.size(); ++p)
        if (a[p] == 0) s += static_cast<int>(p) + 1;
    return s % 2;
}

}  // namespace

CMatrix jm_block(const ContentVector& a, int i) {
    if (!is_content_vector(a)) throw std::invalid_argument("jm_block: not a content vector");
    check_position(a, i, 0);
    const int r = nonzero_rank(a);
    return jm_block_in(a, i, build_clifford(r));
}

Fraction coupling_strength_sq(const ContentVector& a, int i) {
    check_position(a, i, 1);
    const long long qa = q_value(a[i - 1]);
    const long long qb = q_value(a[i]);
    if (qa == qb) throw std::logic_error("coupling_strength_sq: equal adjacent contents");
    return Fraction(1) - Fraction(2 * (qa + qb)) / (Fraction(qa - qb) * Fraction(qa - qb));
}

Intertwiner intertwiner(const ContentVector& a, int i) {
    if (!is_content_vector(a)) throw std::invalid_argument("intertwiner: not a content vector");
    check_position(a, i, 1);
    const ContentVector sw = swapped(a, i);
    if (!is_content_vector(sw)) throw std::domain_error("no intertwiner: non-standard swap");
    Intertwiner out;
    out.source = a;
    out.target = sw;
    out.volume = (a[i - 1] == 0 || a[i] == 0);
    out.b = std::sqrt(coupling_strength_sq(a, i).as_double());
    const CliffordRep cl = rounded_clifford(a);
    out.P = out.volume ? volume_involution(cl) : slot_swap_involution(cl, slot_of(a, i));
    return out;
}

TauBlock tau_block(const ContentVector& a, int i) {
    if (!is_content_vector(a)) throw std::invalid_argument("tau_block: not a content vector");
    check_position(a, i, 1);
    if (a[i - 1] == a[i]) throw std::logic_error("tau_block: equal adjacent contents");
    const CliffordRep cl = rounded_clifford(a);
    TauBlock out;
    out.alpha = a;
    const ContentVector sw = swapped(a, i);
    if (!is_content_vector(sw)) {
        out.coupled = false;
        out.op = x_part(a, i, cl);
        return out;
    }
    out.coupled = true;
    out.beta = sw;
    const Intertwiner iw = intertwiner(a, i);
    const int d = cl.dim;
    CMatrix op(2 * d);
    const CMatrix xa = x_part(a, i, cl);
    const CMatrix xb = x_part(sw, i, cl);
    const CMatrix c = iw.P * cplx{iw.b, 0.0};
    for (int r = 0; r < d; ++r) {
        for (int cc = 0; cc < d; ++cc) {
            op.at(r, cc) = xa.at(r, cc);
            op.at(d + r, d + cc) = xb.at(r, cc);
            op.at(d + r, cc) = c.at(r, cc);
            op.at(r, d + cc) = c.at(r, cc);
        }
    }
    out.op = op;
    return out;
}

long long rep_dim(const StrictPartition& shape) {
    const int r = shape.n() - shape.length();
    return (1LL << ((r + 1) / 2)) * schur_count(shape);
}

char rep_type(const StrictPartition& shape) {
    return ((shape.n() - shape.length()) % 2 == 0) ? 'M' : 'Q';
}

SuperRep build(const StrictPartition& shape) {
    if (shape.length() == 0) throw std::invalid_argument("build: empty shape");
    Assembly as = make_assembly(shape);
    const std::vector<int> signs = solve_signs(as);

    SuperRep rep;
    rep.shape = shape;
    rep.n = as.n;
    rep.blocks = as.blocks;
    rep.block_dim = as.d;
    rep.total_dim = static_cast<long long>(as.d) * static_cast<long long>(as.blocks.size());
    rep.kind = rep_type(shape);

    const int f = static_cast<int>(as.blocks.size());
    for (int i = 1; i <= as.n; ++i) {
        BlockOp m(f, as.d);
        for (int b = 0; b < f; ++b) {
            if (as.blocks[b][i - 1] == 0) continue;
            m.set(b, b, jm_block_in(as.blocks[b], i, as.cl));
        }
        rep.jm.push_back(std::move(m));
    }
    for (int i = 1; i < as.n; ++i) {
        BlockOp t(f, as.d);
        for (int b = 0; b < f; ++b) t.set(b, b, x_part(as.blocks[b], i, as.cl));
        for (size_t eid = 0; eid < as.edges.size(); ++eid) {
            const Edge& e = as.edges[eid];
            if (e.i != i) continue;
            const double s = signs[eid] ? -e.b : e.b;
            const CMatrix c = e.P * cplx{s, 0.0};
            t.set(e.hi, e.lo, c);
            t.set(e.lo, e.hi, c);
        }
        rep.gens.push_back(std::move(t));
    }

    rep.parity.resize(rep.total_dim);
    const int base = zero_position_parity(as.blocks[0]);
    for (int b = 0; b < f; ++b) {
        const int flip = (zero_position_parity(as.blocks[b]) - base + 2) % 2;
        for (int j = 0; j < as.d; ++j)
            rep.parity[b * as.d + j] = (as.cl.parity[j] + flip) % 2;
    }
    return rep;
}

double RelationReport::worst() const {
    return std::max({tau_square, braid, distant, jm_anticommute, jm_square, recursion, jm_cross,
                     parity_odd});
}

std::string RelationReport::summary() const {
    std::ostringstream os;
    os << "tau^2=1            : " << tau_square << '\n'
       << "(t_i t_{i+1})^3=1  : " << braid << '\n'
       << "(t_i t_j)^2=-1     : " << distant << '\n'
       << "{M_k,M_l}=0        : " << jm_anticommute << '\n'
       << "M_k^2=q/2          : " << jm_square << '\n'
       << "M_{i+1} recursion  : " << recursion << '\n'
       << "{M_j,tau_i}=0      : " << jm_cross << '\n'
       << "parity odd         : " << parity_odd << '\n';
    return os.str();
}

RelationReport verify_relations(const SuperRep& rep, double tol) {
    RelationReport rpt;
    rpt.tol = tol;
    const int n = rep.n;
    const int f = static_cast<int>(rep.blocks.size());
    const int d = rep.block_dim;
    const BlockOp id = BlockOp::identity(f, d);

    for (int i = 0; i + 1 < n; ++i) {
        const BlockOp& t = rep.gens[i];
        rpt.tau_square = std::max(rpt.tau_square, (t * t - id).max_abs());
    }
    for (int i = 0; i + 2 < n; ++i) {
        const BlockOp p = rep.gens[i] * rep.gens[i + 1];
        rpt.braid = std::max(rpt.braid, (p * p * p - id).max_abs());
    }
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = i + 2; j + 1 < n; ++j) {
            const BlockOp p = rep.gens[i] * rep.gens[j];
            rpt.distant = std::max(rpt.distant, (p * p + id).max_abs());
        }
    }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            rpt.jm_anticommute = std::max(
                rpt.jm_anticommute,
                (rep.jm[k] * rep.jm[l] + rep.jm[l] * rep.jm[k]).max_abs());
    for (int k = 0; k < n; ++k) {
        const BlockOp sq = rep.jm[k] * rep.jm[k];
        for (int b = 0; b < f; ++b) {
            const double want = static_cast<double>(q_value(rep.blocks[b][k])) / 2.0;
            CMatrix diff = CMatrix::identity(d) * cplx{want, 0.0};
            if (const CMatrix* got = sq.find(b, b)) diff -= *got;
            rpt.jm_square = std::max(rpt.jm_square, diff.max_abs());
        }
        for (const auto& [rc, m] : sq.blocks())
            if (rc.first != rc.second)
                rpt.jm_square = std::max(rpt.jm_square, m.max_abs());
    }
    for (int i = 0; i + 1 < n; ++i) {
        const BlockOp& t = rep.gens[i];
        const BlockOp want = t - t * rep.jm[i] * t;
        rpt.recursion = std::max(rpt.recursion, (rep.jm[i + 1] - want).max_abs());
    }
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i || j == i + 1) continue;
            rpt.jm_cross = std::max(
                rpt.jm_cross,
                (rep.jm[j] * rep.gens[i] + rep.gens[i] * rep.jm[j]).max_abs());
        }

    auto parity_check = [&](const BlockOp& op) {
        for (const auto& [rc, m] : op.blocks())
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (rep.parity[rc.first * d + i] == rep.parity[rc.second * d + j])
                        rpt.parity_odd = std::max(rpt.parity_odd, std::abs(m.at(i, j)));
    };
    for (const auto& op : rep.jm) parity_check(op);
    for (const auto& op : rep.gens) parity_check(op);
    rpt.passed = rpt.worst() <= tol;
    return rpt;
}

}  // namespace spinrep
