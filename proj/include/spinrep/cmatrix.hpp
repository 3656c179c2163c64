#pragma once

#include <complex>
#include <vector>

namespace spinrep {

using cplx = std::complex<double>;

/// Dense square complex matrix, row major. Operators in this project are
/// small (a few hundred rows at most), so naive arithmetic is all we need.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static CMatrix identity(int n);

    int dim() const { return n_; }

    cplx& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    const cplx& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(cplx s) const;
    friend CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }
    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);

    CMatrix adjoint() const;

    /// Largest entry modulus. Used as the residual norm throughout: it bounds
    /// no operator norm from above, but a zero operator is zero entrywise and
    /// the tolerances here are only ever compared against near-zero residuals.
    double max_abs() const;

    bool empty() const { return n_ == 0; }

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

inline double residual(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

}  // namespace spinrep
