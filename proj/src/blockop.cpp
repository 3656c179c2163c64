#include "spinrep/blockop.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrep {

BlockOp BlockOp::identity(int nblocks, int bdim) {
    BlockOp op(nblocks, bdim);
    for (int b = 0; b < nblocks; ++b) op.set(b, b, CMatrix::identity(bdim));
    return op;
}

void BlockOp::add(int r, int c, const CMatrix& m) {
    auto it = blk_.find({r, c});
    if (it == blk_.end())
        blk_.emplace(std::make_pair(r, c), m);
    else
        it->second += m;
}

const CMatrix* BlockOp::find(int r, int c) const {
    auto it = blk_.find({r, c});
    return it == blk_.end() ? nullptr : &it->second;
}

BlockOp BlockOp::operator*(const BlockOp& o) const {
    if (nb_ != o.nb_ || bd_ != o.bd_)
        throw std::invalid_argument("BlockOp: shape mismatch in product");
    BlockOp r(nb_, bd_);
    for (const auto& [rc, m] : blk_) {
        for (int c = 0; c < nb_; ++c) {
            const CMatrix* om = o.find(rc.second, c);
            if (om) r.add(rc.first, c, m * *om);
        }
    }
    return r;
}

BlockOp BlockOp::operator+(const BlockOp& o) const {
    if (nb_ != o.nb_ || bd_ != o.bd_) throw std::invalid_argument("BlockOp: shape mismatch in sum");
    BlockOp r = *this;
    for (const auto& [rc, m] : o.blk_) r.add(rc.first, rc.second, m);
    return r;
}

BlockOp BlockOp::operator-(const BlockOp& o) const { return *this + o * cplx{-1.0, 0.0}; }

BlockOp BlockOp::operator*(cplx s) const {
    BlockOp r = *this;
    for (auto& [rc, m] : r.blk_) m = m * s;
    return r;
}

double BlockOp::max_abs() const {
    double v = 0.0;
    for (const auto& [rc, m] : blk_) v = std::max(v, m.max_abs());
    return v;
}

CMatrix BlockOp::dense() const {
    CMatrix m(dim());
    for (const auto& [rc, b] : blk_)
        for (int i = 0; i < bd_; ++i)
            for (int j = 0; j < bd_; ++j)
                m.at(rc.first * bd_ + i, rc.second * bd_ + j) = b.at(i, j);
    return m;
}

}  // namespace spinrep
