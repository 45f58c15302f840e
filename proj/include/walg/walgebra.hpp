// The projection pr : U(g) -> U(p) along the left ideal generated by
// {x - chi(x) | x in m}, the W-algebra membership test, and the Miura
// transform mu = eta . xi (kill the strictly positive part, then shift
// diagonal generators by rho_{col}).
#pragma once

#include <optional>

#include "walg/uea.hpp"

namespace walg {

// Per-monomial suffix rule: (p-prefix)(m-suffix) -> p-prefix * prod chi(m-gen).
// Requires PBW normal form under the m-last basis order (guaranteed for every
// UEAElement built through this library).
UEAElement pr(const UEAElement& x);

struct WMembership {
    bool in_w = false;
    std::optional<GenId> witness_generator;  // offending m-basis element
    UEAElement residue;                      // nonzero pr([f, x]) on failure
};

// x must lie in U(p); tests pr([f, x]) = 0 for every m-basis element f.
WMembership check_w_membership(const UEAElement& x);
bool is_in_w(const UEAElement& x);

// Algebra homomorphism U(p) ->> U(h) induced by p ->> h (kills positive part).
UEAElement xi(const UEAElement& x);
// Automorphism of U(h): f_{a,b} -> f_{a,b} - delta_{a,b} rho_{col(a)}.
UEAElement eta(const UEAElement& x);
// mu = eta . xi on U(p).
UEAElement miura(const UEAElement& x);

}  // namespace walg
