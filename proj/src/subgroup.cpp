#include "capwit/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace capwit {

Subgroup::Subgroup(std::vector<std::uint64_t> sorted_ranks,
                   std::vector<GroupElement> generators)
    : ranks_(std::move(sorted_ranks)), gens_(std::move(generators)) {}

Subgroup Subgroup::whole_group(const SplitGroup& g, std::uint64_t cap) {
  require_within_cap(g, cap);
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(g.order()));
  for (std::uint64_t i = 0; i < g.order(); ++i) ranks[i] = i;
  return Subgroup(std::move(ranks), g.generators());
}

Subgroup Subgroup::trivial(const SplitGroup& g) {
  return Subgroup({g.rank_of(g.identity())}, {});
}

bool Subgroup::contains_rank(std::uint64_t r) const {
  return std::binary_search(ranks_.begin(), ranks_.end(), r);
}

bool Subgroup::contains(const SplitGroup& g, const GroupElement& e) const {
  return contains_rank(g.rank_of(e));
}

std::vector<GroupElement> Subgroup::elements(const SplitGroup& g) const {
  std::vector<GroupElement> out;
  out.reserve(ranks_.size());
  for (std::uint64_t r : ranks_) out.push_back(g.element_at(r));
  return out;
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.ranks().begin(), b.ranks().end(), a.ranks().begin(),
                       a.ranks().end());
}

namespace {

std::vector<GroupElement> drop_identity_dups(const SplitGroup& g,
                                             std::vector<GroupElement> gens) {
  std::vector<GroupElement> out;
  std::unordered_set<std::uint64_t> seen;
  const GroupElement e = g.identity();
  for (auto& x : gens) {
    if (x == e) continue;
    if (seen.insert(g.rank_of(x)).second) out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::uint64_t> bfs_closure(const SplitGroup& g,
                                       const std::vector<GroupElement>& gens) {
  std::unordered_set<std::uint64_t> seen;
  std::deque<GroupElement> frontier;
  const GroupElement e = g.identity();
  seen.insert(g.rank_of(e));
  frontier.push_back(e);
  while (!frontier.empty()) {
    GroupElement cur = std::move(frontier.front());
    frontier.pop_front();
    for (const GroupElement& s : gens) {
      GroupElement next = mul(g, cur, s);
      if (seen.insert(g.rank_of(next)).second) frontier.push_back(next);
    }
  }
  std::vector<std::uint64_t> ranks(seen.begin(), seen.end());
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

}  // namespace

Subgroup subgroup_closure(const SplitGroup& g, std::vector<GroupElement> gens,
                          std::uint64_t cap) {
  require_within_cap(g, cap);
  gens = drop_identity_dups(g, std::move(gens));
  // Right multiplication by generators reaches every word in the
  // generators; inverses come for free in a finite group.
  return Subgroup(bfs_closure(g, gens), std::move(gens));
}

Subgroup normal_closure(const SplitGroup& g, std::vector<GroupElement> gens,
                        std::uint64_t cap) {
  require_within_cap(g, cap);
  std::vector<GroupElement> working = drop_identity_dups(g, std::move(gens));
  const std::vector<GroupElement> conjugators = g.generators();
  for (;;) {
    Subgroup c = subgroup_closure(g, working, cap);
    bool grew = false;
    std::size_t known = working.size();
    for (std::size_t i = 0; i < known; ++i) {
      for (const GroupElement& t : conjugators) {
        GroupElement u = mul(g, mul(g, inv(g, t), working[i]), t);
        if (!c.contains(g, u)) {
          working.push_back(u);
          grew = true;
        }
      }
    }
    if (!grew) return Subgroup(c.ranks(), std::move(working));
    working = drop_identity_dups(g, std::move(working));
  }
}

bool is_normal(const SplitGroup& g, const Subgroup& s) {
  for (std::uint64_t r : s.ranks()) {
    GroupElement x = g.element_at(r);
    for (const GroupElement& t : g.generators()) {
      if (!s.contains(g, mul(g, mul(g, inv(g, t), x), t))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> lower_central_series(const SplitGroup& g,
                                           std::uint64_t cap) {
  require_within_cap(g, cap);
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole_group(g, cap));
  if (g.order() == 1) return series;
  const std::vector<GroupElement> group_gens = g.generators();
  const GroupElement e = g.identity();
  for (;;) {
    const Subgroup& prev = series.back();
    // [G_n, G] is the normal closure of the commutators of the two
    // generating sets; prev.generators() generates G_n as a group.
    std::vector<GroupElement> comms;
    for (const GroupElement& s : prev.generators())
      for (const GroupElement& t : group_gens) {
        GroupElement c = comm(g, s, t);
        if (!(c == e)) comms.push_back(std::move(c));
      }
    Subgroup next = normal_closure(g, std::move(comms), cap);
    if (next.size() == prev.size()) throw not_nilpotent_error(next.size());
    bool done = next.size() == 1;
    series.push_back(std::move(next));
    if (done) return series;
  }
}

Subgroup derived_subgroup(const SplitGroup& g, std::uint64_t cap) {
  require_within_cap(g, cap);
  std::vector<GroupElement> comms;
  const std::vector<GroupElement> gens = g.generators();
  for (const GroupElement& s : gens)
    for (const GroupElement& t : gens) comms.push_back(comm(g, s, t));
  return normal_closure(g, std::move(comms), cap);
}

Subgroup center(const SplitGroup& g, std::uint64_t cap) {
  require_within_cap(g, cap);
  const std::vector<GroupElement> gens = g.generators();
  const GroupElement e = g.identity();
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    GroupElement x = g.element_at(r);
    bool central = true;
    for (const GroupElement& s : gens) {
      if (!(comm(g, x, s) == e)) {
        central = false;
        break;
      }
    }
    if (central) ranks.push_back(r);
  }
  std::vector<GroupElement> witnesses;
  witnesses.reserve(ranks.size());
  for (std::uint64_t r : ranks) witnesses.push_back(g.element_at(r));
  return Subgroup(std::move(ranks), std::move(witnesses));
}

std::uint64_t order_mod_subgroup(const SplitGroup& g, const GroupElement& a,
                                 const Subgroup& s) {
  if (!is_normal(g, s))
    throw group_error("order_mod_subgroup requires a normal subgroup");
  std::uint64_t n = element_order(g, a);
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t d : divisors)
    if (s.contains(g, pow(g, a, static_cast<Int>(d)))) return d;
  throw group_error("coset order not found (subgroup misses the identity?)");
}

namespace {

std::uint64_t log_base(std::uint64_t value, Int p, const char* what) {
  std::uint64_t e = 0;
  while (value % static_cast<std::uint64_t>(p) == 0) {
    value /= static_cast<std::uint64_t>(p);
    ++e;
  }
  if (value != 1)
    throw group_error(std::string(what) + " is not a power of " +
                      std::to_string(p));
  return e;
}

std::uint64_t frattini_quotient_rank(const SplitGroup& g,
                                     const Subgroup* extra,
                                     std::uint64_t cap) {
  auto pk = prime_power_base(static_cast<Int>(g.order()));
  if (g.order() != 1 && !pk)
    throw group_error("Frattini rank needs a p-group; group order " +
                      std::to_string(g.order()) + " is not a prime power");
  if (g.order() == 1) return 0;
  Int p = pk->first;
  // Φ(G) = G^p·[G,G]; modulo [G,G] the p-th power map is a homomorphism,
  // so generator p-th powers suffice.
  std::vector<GroupElement> seeds;
  for (const GroupElement& s : g.generators()) seeds.push_back(pow(g, s, p));
  Subgroup der = derived_subgroup(g, cap);
  for (const GroupElement& s : der.generators()) seeds.push_back(s);
  if (extra)
    for (std::uint64_t r : extra->ranks()) seeds.push_back(g.element_at(r));
  Subgroup phi = subgroup_closure(g, std::move(seeds), cap);
  return log_base(g.order() / phi.size(), p, "Frattini index");
}

}  // namespace

std::uint64_t frattini_rank(const SplitGroup& g, std::uint64_t cap) {
  require_within_cap(g, cap);
  return frattini_quotient_rank(g, nullptr, cap);
}

std::uint64_t frattini_rank_mod(const SplitGroup& g, const Subgroup& n,
                                std::uint64_t cap) {
  require_within_cap(g, cap);
  if (!is_normal(g, n))
    throw group_error("frattini_rank_mod requires a normal subgroup");
  return frattini_quotient_rank(g, &n, cap);
}

}  // namespace capwit
