#pragma once

#include "lefschetz/cohomology.hpp"
#include "lefschetz/lie.hpp"

#include <random>
#include <vector>

namespace lefschetz {

/// Degree-2 decomposition, H^(k,0) ∩ H^(0,2k) = {0}, H^(r,s) = L^r H^(0,s),
/// the full ⇒ direct duality implication, and (unimodular only) dim H^(r,0) = 1.
std::vector<TheoremCheck> theorem_suite(const SymplecticCohomology &c, const LieProperties &p);

/// HLC ⇔ dd^Λ-lemma, the d^Λ duality dimensions, the dd^Λ ones when the cup
/// pairing is well defined (unimodular algebras), the Lefschetz
/// property of H_{d+d^Λ}, and the consequences of HLC for H^(r,s).
std::vector<TheoremCheck> equivalence_suite(const SymplecticCohomology &c);

/// For unimodular algebras: b_k = b_{2n−k}, the cup pairing is well defined and
/// non-degenerate. Empty otherwise.
std::vector<TheoremCheck> duality_suite(const SymplecticCohomology &c, const LieProperties &p);

/// A non-abelian nilpotent algebra never satisfies HLC. Empty unless nilpotent.
std::vector<TheoremCheck> nilpotent_suite(const SymplecticCohomology &c, const LieProperties &p);

/// Lefschetz decomposition of `per_degree` random forms in every degree: the
/// printed formula agrees with the linear solve, components are primitive,
/// and the reassembled form equals the input.
std::vector<TheoremCheck> reassembly_suite(const SymplecticStructure &s, std::mt19937_64 &rng, int per_degree = 2);

/// operator_identities() as TheoremChecks.
std::vector<TheoremCheck> identity_suite(const SymplecticStructure &s);

/// All of the above except reassembly, in a fixed order.
std::vector<TheoremCheck> all_theorem_checks(const SymplecticCohomology &c, const LieProperties &p);

} // namespace lefschetz
