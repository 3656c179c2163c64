#pragma once

#include <string>
#include <vector>

#include "spinrep/fraction.hpp"
#include "spinrep/rep.hpp"

namespace spinrep {

/// Sum of q(content)/4 over the shifted diagram; the scalar by which the
/// Casimir acts on V_lambda. Exact.
Fraction casimir_value(const StrictPartition& shape);

/// (1/2) sum_k M_k^2 as a dense matrix; agrees with casimir_value times the
/// identity up to the verification tolerance.
CMatrix casimir_matrix(const SuperRep& rep);

/// Evaluation point of the centre attached to a (not necessarily strict)
/// partition: each part m contributes the arithmetic string
/// -(m-1)/2, -(m-3)/2, ..., (m-1)/2.
struct CentralCharacter {
    Partition shape;
    std::vector<Fraction> values;  // n entries, one per cell, sorted
};

CentralCharacter central_character(const Partition& shape);

/// Sum of v^k over the character's values. Vanishes identically for odd k.
Fraction eval_powersum(const CentralCharacter& chi, int k);

/// Scalar of the even power-sum element sum_i (2 M_i^2)^m on V_lambda:
/// sum of q(content)^m over the shifted diagram.
Fraction twisted_power_value(const StrictPartition& shape, int m);

/// The same element as a matrix.
CMatrix twisted_power_matrix(const SuperRep& rep, int m);

/// The matching central element on the Hecke side, evaluated at the central
/// character: sum_{j <= m/2} C(m,2j) * sum_v (2v)^{2m-2j}.
Fraction hecke_power_value(const StrictPartition& shape, int m);

/// Compares products of power-sum elements along both routes. The scalar
/// comparison is exact rational; when a representation is supplied the
/// twisted side is also evaluated on matrices and the residual against the
/// scalar reported.
struct VoganCheck {
    std::vector<int> factors;
    Fraction twisted;
    Fraction hecke;
    bool equal = false;
    double matrix_residual = -1.0;  // negative when no matrix route was run
};

VoganCheck vogan_check(const StrictPartition& shape, const std::vector<int>& factors,
                       const SuperRep* rep = nullptr);

}  // namespace spinrep
