#pragma once

#include <map>
#include <utility>

#include "spinrep/cmatrix.hpp"

namespace spinrep {

/// Operator on a space split into `nblocks` blocks of uniform dimension
/// `bdim`, stored as a sparse map of nonzero blocks. The generators built in
/// this project touch at most two blocks per block row, which keeps the
/// relation suite cheap even when the full space has a few thousand
/// dimensions.
class BlockOp {
public:
    BlockOp() = default;
    BlockOp(int nblocks, int bdim) : nb_(nblocks), bd_(bdim) {}

    static BlockOp identity(int nblocks, int bdim);

    int nblocks() const { return nb_; }
    int bdim() const { return bd_; }
    int dim() const { return nb_ * bd_; }

    void set(int r, int c, CMatrix m) { blk_[{r, c}] = std::move(m); }
    void add(int r, int c, const CMatrix& m);
    const CMatrix* find(int r, int c) const;

    BlockOp operator*(const BlockOp& o) const;
    BlockOp operator+(const BlockOp& o) const;
    BlockOp operator-(const BlockOp& o) const;
    BlockOp operator*(cplx s) const;

    double max_abs() const;
    CMatrix dense() const;

    const std::map<std::pair<int, int>, CMatrix>& blocks() const { return blk_; }

private:
    int nb_ = 0;
    int bd_ = 0;
    std::map<std::pair<int, int>, CMatrix> blk_;
};

}  // namespace spinrep
