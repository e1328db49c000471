#pragma once

#include <complex>
#include <span>
#include <vector>

#include "diagsynth/types.hpp"

namespace diagsynth {

MonomialOperator identity_operator(int n);

MonomialOperator gate_to_monomial(const Gate& g, int n);

/// Matrix product after * before (before acts first on states).
MonomialOperator compose(const MonomialOperator& after,
                         const MonomialOperator& before);

/// Fold of the circuit's gates in application order.
MonomialOperator evaluate(const Circuit& c);

/// True iff the permutation part is the identity.
bool is_diagonal(const MonomialOperator& m);

/// Block angles gamma of a diagonal tail: gamma[j] = phase at basis index 2j,
/// checked against -phase at 2j+1 (the blocks must be special unitary).
/// Throws std::invalid_argument when m is not diagonal, sequence_error
/// "not special-unitary blocks" when the antisymmetry fails beyond tol.
std::vector<double> tail_block_angles(const MonomialOperator& m,
                                      double tol = 1e-10);

/// Max over basis states of the angular distance (mod 2*pi) between
/// phase[x] + global and the target phase. Requires m diagonal.
double max_phase_error(const MonomialOperator& m, const PhaseVector& target);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// Gate matrix assembled literally from the definitions; independent of the
/// monomial bookkeeping above.
ComplexMatrix dense_gate(const Gate& g, int n);

/// Literal product of dense gate matrices, capped at n <= 8.
ComplexMatrix dense_matrix(const Circuit& c);

ComplexMatrix to_dense(const MonomialOperator& m);

}  // namespace diagsynth
