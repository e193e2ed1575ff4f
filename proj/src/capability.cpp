#include "capwit/capability.hpp"

#include <algorithm>

namespace capwit {

Int exponent_gap(Int p, Int c) {
  if (p < 2) throw group_error("exponent_gap: p must be >= 2");
  if (c < 1) throw group_error("exponent_gap: c must be >= 1");
  return (c - 1) / (p - 1);
}

std::vector<PredictedGens> expected_lcs(Int p, Int r) {
  if (!is_prime(p)) throw group_error("expected_lcs: p must be prime");
  if (r < 1) throw group_error("expected_lcs: r must be >= 1");
  std::vector<PredictedGens> terms;
  Int nterms = 1 + (r - 1) * (p - 1);
  for (Int j = 0; j < nterms; ++j) {
    Int k = j / (p - 1);
    Int raised = j % (p - 1);  // generators x1..x_raised already at p^{k+1}
    PredictedGens gens;
    for (Int i = 1; i < p; ++i) {
      Int exp = (i - 1 < raised) ? k + 1 : k;
      gens.emplace_back(static_cast<std::size_t>(i), checked_pow(p, exp));
    }
    terms.push_back(std::move(gens));
  }
  return terms;
}

std::vector<PredictedGens> dihedral_expected_lcs(Int c) {
  if (c < 1) throw group_error("dihedral_expected_lcs: c must be >= 1");
  std::vector<PredictedGens> terms;
  for (Int n = 2; n <= c + 1; ++n)
    terms.push_back({{0, checked_pow(2, n - 1)}});
  return terms;
}

bool check_lemma(Int p, Int r, std::uint64_t cap) {
  SplitGroup g = easterfield({p, r});
  require_within_cap(g, cap);
  GroupElement probe = pow(g, g.h_generator(0), checked_pow(p, r - 1));
  return !(comm(g, probe, g.top_generator()) == g.identity());
}

namespace {

Int log_prime(Int p, std::uint64_t n) {
  Int e = 0;
  while (n % static_cast<std::uint64_t>(p) == 0) {
    n /= static_cast<std::uint64_t>(p);
    ++e;
  }
  if (n != 1)
    throw group_error("coset order " + std::to_string(n) +
                      " is not a power of p = " + std::to_string(p));
  return e;
}

}  // namespace

WitnessReport verify_witness(const SplitGroup& g, const WitnessTask& task,
                             std::uint64_t cap) {
  require_within_cap(g, cap);
  WitnessReport rep;
  rep.p = task.p;
  rep.construction = task.construction;
  rep.params = task.params;
  rep.group_order = g.order();
  rep.class_expected = task.expected_class;

  std::vector<Subgroup> series = lower_central_series(g, cap);
  rep.class_computed = static_cast<Int>(series.size()) - 1;
  if (rep.class_computed < 2)
    throw group_error("witness verification expects class >= 2, got " +
                      std::to_string(rep.class_computed));

  Subgroup z = center(g, cap);
  rep.center_order = z.size();

  const GroupElement y = g.top_generator();
  const GroupElement x0 = g.h_generator(0);
  rep.order_y_mod_center = order_mod_subgroup(g, y, z);
  rep.order_x0_mod_center = order_mod_subgroup(g, x0, z);
  rep.quotient_min_generators =
      static_cast<Int>(frattini_rank_mod(g, z, cap));

  Int ey = log_prime(task.p, rep.order_y_mod_center);
  Int ex = log_prime(task.p, rep.order_x0_mod_center);
  rep.a_exponent = std::min(ey, ex);
  rep.b_exponent = std::max(ey, ex);
  // c is the class of the capable quotient G/Z, one less than class(G).
  Int c = rep.class_computed - 1;
  rep.bound_rhs = rep.a_exponent + exponent_gap(task.p, c);
  rep.equality_attained = rep.b_exponent == rep.bound_rhs;

  rep.lcs_matches_prediction =
      series.size() == task.predicted_lcs.size() + 2;
  if (rep.lcs_matches_prediction) {
    for (std::size_t j = 0; j < task.predicted_lcs.size(); ++j) {
      std::vector<GroupElement> gens;
      for (const auto& [idx, exp] : task.predicted_lcs[j])
        gens.push_back(pow(g, g.h_generator(idx), exp));
      if (!(subgroup_closure(g, std::move(gens), cap) == series[j + 1])) {
        rep.lcs_matches_prediction = false;
        break;
      }
    }
  }

  rep.lemma_holds = !(comm(g, task.lemma_element, y) == g.identity());
  return rep;
}

WitnessReport verify_easterfield(const EasterfieldSpec& spec,
                                 std::uint64_t cap) {
  validate(spec);
  SplitGroup g = easterfield(spec);
  WitnessTask task;
  task.construction = "easterfield";
  task.params = spec.r;
  task.p = spec.p;
  task.expected_class = 2 + (spec.r - 1) * (spec.p - 1);
  task.predicted_lcs = expected_lcs(spec.p, spec.r);
  task.lemma_element =
      pow(g, g.h_generator(0), checked_pow(spec.p, spec.r - 1));
  return verify_witness(g, task, cap);
}

WitnessReport verify_dihedral(Int c, std::uint64_t cap) {
  if (c < 1) throw group_error("dihedral witness parameter c must be >= 1");
  SplitGroup g = dihedral(checked_pow(2, c + 1));  // order 2^{c+2}
  WitnessTask task;
  task.construction = "dihedral";
  task.params = c;
  task.p = 2;
  task.expected_class = c + 1;
  task.predicted_lcs = dihedral_expected_lcs(c);
  task.lemma_element = pow(g, g.h_generator(0), checked_pow(2, c - 1));
  return verify_witness(g, task, cap);
}

bool all_checks_pass(const WitnessReport& rep) {
  std::uint64_t expected_x0_coset =
      static_cast<std::uint64_t>(checked_pow(rep.p, rep.params));
  return rep.class_computed == rep.class_expected &&
         rep.order_y_mod_center == static_cast<std::uint64_t>(rep.p) &&
         rep.order_x0_mod_center == expected_x0_coset &&
         rep.quotient_min_generators == 2 && rep.lcs_matches_prediction &&
         rep.lemma_holds && rep.equality_attained;
}

std::vector<ScanEntry> scan(Int p, Int r_max, std::uint64_t cap) {
  if (!is_prime(p)) throw group_error("scan: p must be prime");
  if (r_max < 1) throw group_error("scan: r_max must be >= 1");
  std::vector<ScanEntry> entries;
  for (Int r = 1; r <= r_max; ++r) {
    ScanEntry entry;
    entry.r = r;
    try {
      entry.report = verify_easterfield({p, r}, cap);
      entry.ok = true;
    } catch (const group_error& e) {
      entry.ok = false;
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace capwit
