#include "spinrep/cmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrep {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CMatrix: dimension mismatch in product");
    CMatrix r(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const cplx v = at(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    CMatrix r = *this;
    r += o;
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    CMatrix r = *this;
    r -= o;
    return r;
}

CMatrix CMatrix::operator*(cplx s) const {
    CMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (n_ != o.n_) throw std::invalid_argument("CMatrix: dimension mismatch in sum");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (n_ != o.n_) throw std::invalid_argument("CMatrix: dimension mismatch in difference");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace spinrep
