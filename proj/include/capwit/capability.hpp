// Evaluation of the generator-order bound b <= a + floor((c-1)/(p-1))
// for capable p-groups, prediction of the witness groups' lower central
// series chains, and the full verification pipeline producing a
// WitnessReport per witness group.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capwit/constructions.hpp"
#include "capwit/group.hpp"
#include "capwit/subgroup.hpp"

namespace capwit {

/// Everything the verification pipeline establishes about one witness
/// group K: its class and series, the center, the orders of the two
/// distinguished generators in K/Z(K), and whether the pair attains
/// equality in the bound evaluated at the class of K/Z(K).
struct WitnessReport {
  Int p = 0;
  std::string construction;  // "easterfield" | "dihedral"
  Int params = 0;            // r for easterfield, c for dihedral
  std::uint64_t group_order = 0;
  Int class_expected = 0;
  Int class_computed = 0;
  std::uint64_t center_order = 0;
  std::uint64_t order_y_mod_center = 0;
  std::uint64_t order_x0_mod_center = 0;
  Int quotient_min_generators = 0;
  Int a_exponent = 0;   // log_p of the smaller quotient generator order
  Int b_exponent = 0;   // log_p of the larger
  Int bound_rhs = 0;    // a + floor((c-1)/(p-1)), c = class_computed - 1
  bool equality_attained = false;
  bool lcs_matches_prediction = false;
  bool lemma_holds = false;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

/// floor((c-1)/(p-1)) — the bound's slack term. p >= 2, c >= 1.
Int exponent_gap(Int p, Int c);

/// One predicted generating set: (H-generator index, exponent) pairs.
using PredictedGens = std::vector<std::pair<std::size_t, Int>>;

/// Predicted generating sets of K_2 … K_{2+(r-1)(p-1)} for K(p, r):
/// starting from ⟨x1,…,x_{p-1}⟩, each successive term raises the next
/// generator (left to right, cyclically) to its p-th power, so the term
/// 2+k(p-1) has every generator at exponent p^k.
std::vector<PredictedGens> expected_lcs(Int p, Int r);

/// Predicted generating sets of K_2 … K_{class} for the dihedral group
/// of order 2^{c+2}: K_n = ⟨x0^{2^{n-1}}⟩.
std::vector<PredictedGens> dihedral_expected_lcs(Int c);

/// True iff x0^{p^{r-1}} does not commute with y in K(p, r).
bool check_lemma(Int p, Int r, std::uint64_t cap = kDefaultEnumerationCap);

/// Inputs for the generic verification: construction tag, parameter, the
/// predicted series chain and the element whose non-centrality the
/// witness's lemma asserts.
struct WitnessTask {
  std::string construction;
  Int params = 0;
  Int p = 0;
  Int expected_class = 0;
  std::vector<PredictedGens> predicted_lcs;
  GroupElement lemma_element;
};

/// Runs the whole pipeline on G: lower central series, center, coset
/// orders of y and x0 modulo the center, Frattini rank of G/Z(G),
/// series-vs-prediction comparison, lemma check, and the bound equality
/// with c = class(G) - 1.
WitnessReport verify_witness(const SplitGroup& g, const WitnessTask& task,
                             std::uint64_t cap = kDefaultEnumerationCap);

/// Builds K(p, r) and verifies it.
WitnessReport verify_easterfield(const EasterfieldSpec& spec,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// Builds the dihedral witness of order 2^{c+2} and verifies it.
WitnessReport verify_dihedral(Int c, std::uint64_t cap = kDefaultEnumerationCap);

/// True iff every check in the report passed (class matches, quotient
/// 2-generated, coset orders as constructed, chain matches, lemma holds,
/// equality attained).
bool all_checks_pass(const WitnessReport& report);

/// One scan row: either a report or the error that prevented it.
struct ScanEntry {
  Int r = 0;
  bool ok = false;
  WitnessReport report;  // valid iff ok
  std::string error;     // nonempty iff !ok
};

/// Reports for easterfield(p, r), r = 1…r_max. Per-r cap errors are
/// recorded in the entry instead of aborting the scan.
std::vector<ScanEntry> scan(Int p, Int r_max,
                            std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace capwit
