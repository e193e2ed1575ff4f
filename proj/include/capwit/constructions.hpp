// The witness groups: the Easterfield-style split metabelian p-groups
// K(p, r) = (C_{p^r} × C_{p^r} × C_{p^{r-1}}^{p-2}) ⋊ C_p with the shift
// action twisted by binomial coefficients on the last generator, and the
// dihedral 2-groups C_2 ⋉ C_n with the inversion action.
#pragma once

#include "capwit/group.hpp"

namespace capwit {

struct EasterfieldSpec {
  Int p = 2;
  Int r = 1;
};

/// Exact binomial coefficient; throws group_error if the exact value
/// does not fit the intermediate arithmetic.
Int binomial(Int n, Int k);

/// Validates p prime and r >= 1.
void validate(const EasterfieldSpec& spec);

/// p^{1 + 2r + (r-1)(p-2)}.
std::uint64_t easterfield_order(const EasterfieldSpec& spec);

/// K(p, r): generators y (order p) and x0, …, x_{p-1} with
///   orders(x0) = orders(x1) = p^r, orders(x2…x_{p-1}) = p^{r-1},
///   y^{-1} x_i y = x_i x_{i+1} for i < p-1, and
///   y^{-1} x_{p-1} y = x1^{-C(p,1)} ··· x_{p-2}^{-C(p,p-2)} x_{p-1}^{1-C(p,p-1)}.
SplitGroup easterfield(const EasterfieldSpec& spec);

/// The subgroup ⟨y, x1, …, x_{p-1}⟩ of K(p, r) as a split group in its
/// own right (x0 row and column dropped from the action).
SplitGroup easterfield_subgroup(const EasterfieldSpec& spec);

/// Dihedral group of order 2n: C_2 ⋉ C_n with the inversion action.
/// Requires n a power of 2, n >= 4.
SplitGroup dihedral(Int n);

}  // namespace capwit
