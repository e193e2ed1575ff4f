#pragma once

#include <string>

#include "capwit/group.hpp"

namespace capwit {

/// Deterministic plain-text presentation of K(p, r): generator list with
/// orders, power relations, the shift conjugation relations and the
/// binomial relation for the last generator (printed with its literal,
/// unreduced exponents). Trivial generators are omitted from relators
/// and noted in a comment line. Byte-stable across runs.
std::string presentation_text(Int p, Int r);

}  // namespace capwit
