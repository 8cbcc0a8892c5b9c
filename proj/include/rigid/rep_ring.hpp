#pragma once
#include <map>
#include <string>
#include <utility>

#include "rigid/local_data.hpp"

namespace rigid {

// Virtual integer combination of pairs (character, [n]) where [n] is the
// n-dimensional irreducible of SL2.  A local monodromy class embeds by
// sending each Jordan block chi (x) J(n) to +1 * (chi, [n]); a unipotent
// generator then acts on [n] as a single Jordan block, so counting blocks
// with trivial character counts inertia invariants.
struct RepRingElement {
    std::map<std::pair<Character, int>, long long> terms; // zero coeffs never stored

    bool operator==(const RepRingElement& o) const { return terms == o.terms; }

    long long dim() const;
    bool is_actual() const; // all coefficients >= 0
    std::string str() const;
};

RepRingElement from_local_monodromy(const LocalMonodromy& m);

RepRingElement add(const RepRingElement& a, const RepRingElement& b, long long scale = 1);
RepRingElement tensor(const RepRingElement& a, const RepRingElement& b);
RepRingElement dual(const RepRingElement& a);

// Adams operation: characters are raised to the k-th power, the SL2 factor is
// evaluated at q -> q^k and re-decomposed into irreducibles.
RepRingElement adams(const RepRingElement& a, long long k);

// Newton formulas lambda^2 = (psi1^2 - psi2)/2 and
// lambda^3 = (psi1^3 - 3 psi1 psi2 + 2 psi3)/6, with exact integer division.
// Virtual input is refused (math_error).
RepRingElement lambda2(const RepRingElement& a);
RepRingElement lambda3(const RepRingElement& a);

// Total coefficient at the trivial character: each block (1, [n]) fixes a
// line under the inertia generator.  Virtual input refused.
long long inertia_invariant_dim(const RepRingElement& a);

// Centralizer dimension of a degree-7 class inside G2, computed from
// Lambda^2 V = V + g2 as invariants(lambda2) - invariants.  Inputs that do
// not lie in the catalog of G2 classes are refused (math_error).
long long g2_centralizer_dim(const LocalMonodromy& m);

} // namespace rigid
