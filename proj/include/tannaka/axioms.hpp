#pragma once

// Convolution on End(E) and the axiom suites for the reconstructed structure.
// Weak axioms follow Boehm-Nill-Szlachanyi; sigma is the symmetry of the
// matrix model.

#include "tannaka/exactlin.hpp"
#include "tannaka/reconstruct.hpp"
#include "tannaka/report.hpp"

namespace tannaka::axioms {

using lin::Matrix;
using recon::StructureMaps;

/// f * g = mu o (f (x) g) o delta
Matrix convolve(const Matrix& f, const Matrix& g, const StructureMaps& maps);

/// Associativity and both unit laws of (mu, eta).
AxiomReport suite_monoid(const StructureMaps& maps);
/// Coassociativity and both counit laws of (delta, eps).
AxiomReport suite_comonoid(const StructureMaps& maps);
/// B1 eps o eta = 1; B2 delta o eta = eta (x) eta; B3 eps o mu = eps (x) eps;
/// B4 delta o mu = (mu (x) mu)(id (x) sigma (x) id)(delta (x) delta).
AxiomReport suite_bialgebra_strong(const StructureMaps& maps);
/// WB-mult (= B4), WB-u1, WB-u2, WB-c1, WB-c2.
AxiomReport suite_weak_bialgebra(const StructureMaps& maps);
/// S * id = eta o eps and id * S = eta o eps. Throws ConstructionError when
/// there is no antipode.
AxiomReport suite_hopf(const StructureMaps& maps);
/// WH1 id * S = eps_t, WH2 S * id = eps_s, WH3 S * id * S = S. If the
/// source/target pairing fails but the swapped pairing holds, WH1/WH2 pass
/// with a note saying so.
AxiomReport suite_weak_hopf(const StructureMaps& maps);

}  // namespace tannaka::axioms
