// Subgroups as explicit element sets, plus the structural computations
// built on them: closures, lower central series, center, quotient orders
// and Frattini rank. Everything is exhaustive by design; operations that
// may touch the whole group take an enumeration cap and refuse loudly
// past it.
#pragma once

#include <cstdint>
#include <vector>

#include "capwit/group.hpp"

namespace capwit {

/// A subgroup stored as the sorted set of element ranks together with
/// generator witnesses (a set that generates it as a group).
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<std::uint64_t> sorted_ranks,
           std::vector<GroupElement> generators);

  static Subgroup whole_group(const SplitGroup& g,
                              std::uint64_t cap = kDefaultEnumerationCap);
  static Subgroup trivial(const SplitGroup& g);

  std::uint64_t size() const { return ranks_.size(); }
  const std::vector<std::uint64_t>& ranks() const { return ranks_; }
  const std::vector<GroupElement>& generators() const { return gens_; }

  bool contains_rank(std::uint64_t r) const;
  bool contains(const SplitGroup& g, const GroupElement& e) const;
  std::vector<GroupElement> elements(const SplitGroup& g) const;

  /// Set equality (same underlying group assumed).
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ranks_ == b.ranks_;
  }

 private:
  std::vector<std::uint64_t> ranks_;
  std::vector<GroupElement> gens_;
};

bool is_subset(const Subgroup& a, const Subgroup& b);

/// ⟨gens⟩: smallest subgroup containing the given elements, by
/// breadth-first closure under right multiplication.
Subgroup subgroup_closure(const SplitGroup& g, std::vector<GroupElement> gens,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// ⟨gens⟩^G: smallest normal subgroup containing the given elements,
/// by alternating closure with conjugation by the distinguished
/// generators until stable.
Subgroup normal_closure(const SplitGroup& g, std::vector<GroupElement> gens,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// True when conjugation by every distinguished generator maps s into
/// itself.
bool is_normal(const SplitGroup& g, const Subgroup& s);

/// [G_1, G_2, …, G_{c+1}] with G_1 = G, G_{n+1} = [G_n, G], ending at the
/// first trivial term; the nilpotency class is the list length minus one.
/// Throws not_nilpotent_error if the series stabilizes before reaching
/// the trivial subgroup.
std::vector<Subgroup> lower_central_series(
    const SplitGroup& g, std::uint64_t cap = kDefaultEnumerationCap);

/// [G, G] = G_2.
Subgroup derived_subgroup(const SplitGroup& g,
                          std::uint64_t cap = kDefaultEnumerationCap);

/// Z(G): elements commuting with every distinguished generator.
Subgroup center(const SplitGroup& g,
                std::uint64_t cap = kDefaultEnumerationCap);

/// Order of the coset a·S in G/S. S must be normal (verified).
std::uint64_t order_mod_subgroup(const SplitGroup& g, const GroupElement& a,
                                 const Subgroup& s);

/// Minimal number of generators of a finite p-group: d with
/// p^d = |G| / |Φ(G)|, Φ(G) = G^p·[G,G]. Rejects groups whose order is
/// not a prime power.
std::uint64_t frattini_rank(const SplitGroup& g,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// Minimal number of generators of the quotient G/N of a finite p-group,
/// evaluated in G: d with p^d = |G| / |Φ-pullback| where the pullback is
/// ⟨generator p-th powers, [G,G], N⟩. N must be normal.
std::uint64_t frattini_rank_mod(const SplitGroup& g, const Subgroup& n,
                                std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace capwit
