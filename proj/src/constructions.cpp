#include "capwit/constructions.hpp"

#include <string>
#include <vector>

namespace capwit {

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(INT64_MAX);
  for (Int i = 1; i <= k; ++i) {
    // Multiply first, divide after: the running product stays integral.
    unsigned __int128 factor = static_cast<unsigned __int128>(n - k + i);
    if (acc > (~static_cast<unsigned __int128>(0)) / factor)
      throw group_error("binomial(" + std::to_string(n) + "," +
                        std::to_string(k) + ") overflows exact arithmetic");
    acc = acc * factor / static_cast<unsigned __int128>(i);
  }
  if (acc > limit)
    throw group_error("binomial(" + std::to_string(n) + "," +
                      std::to_string(k) + ") exceeds 2^63-1");
  return static_cast<Int>(acc);
}

void validate(const EasterfieldSpec& spec) {
  if (!is_prime(spec.p))
    throw group_error("p must be prime (got " + std::to_string(spec.p) + ")");
  if (spec.r < 1)
    throw group_error("r must be >= 1 (got " + std::to_string(spec.r) + ")");
}

std::uint64_t easterfield_order(const EasterfieldSpec& spec) {
  Int e = 1 + 2 * spec.r + (spec.r - 1) * (spec.p - 2);
  return static_cast<std::uint64_t>(checked_pow(spec.p, e));
}

namespace {

std::vector<std::string> easterfield_labels(Int p) {
  std::vector<std::string> labels{"y"};
  for (Int i = 0; i < p; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

// Columns of the twisted shift action on x_first..x_{p-1}; `first` is 0
// for the full group and 1 for the subgroup ⟨y, x1, …⟩.
std::vector<std::vector<Int>> action_columns(Int p, Int first) {
  std::size_t n = static_cast<std::size_t>(p - first);
  std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, 0));
  auto at = [&](std::vector<Int>& col, Int gen) -> Int& {
    return col[static_cast<std::size_t>(gen - first)];
  };
  for (Int i = first; i <= p - 2; ++i) {
    at(cols[static_cast<std::size_t>(i - first)], i) += 1;
    at(cols[static_cast<std::size_t>(i - first)], i + 1) += 1;
  }
  std::vector<Int>& last = cols[n - 1];
  for (Int k = 1; k <= p - 2; ++k) at(last, k) -= binomial(p, k);
  at(last, p - 1) += 1 - binomial(p, p - 1);
  return cols;
}

}  // namespace

SplitGroup easterfield(const EasterfieldSpec& spec) {
  validate(spec);
  const Int p = spec.p, r = spec.r;
  std::vector<Int> orders{checked_pow(p, r), checked_pow(p, r)};
  for (Int i = 0; i < p - 2; ++i) orders.push_back(checked_pow(p, r - 1));
  return make_group(p, CyclicOrders(std::move(orders)),
                    ActionMatrix(action_columns(p, 0)), easterfield_labels(p));
}

SplitGroup easterfield_subgroup(const EasterfieldSpec& spec) {
  validate(spec);
  const Int p = spec.p, r = spec.r;
  std::vector<Int> orders{checked_pow(p, r)};
  for (Int i = 0; i < p - 2; ++i) orders.push_back(checked_pow(p, r - 1));
  std::vector<std::string> labels{"y"};
  for (Int i = 1; i < p; ++i) labels.push_back("x" + std::to_string(i));
  return make_group(p, CyclicOrders(std::move(orders)),
                    ActionMatrix(action_columns(p, 1)), std::move(labels));
}

SplitGroup dihedral(Int n) {
  auto pk = prime_power_base(n);
  if (!pk || pk->first != 2 || pk->second < 2)
    throw group_error("dihedral rotation order must be a power of 2, >= 4 "
                      "(got " +
                      std::to_string(n) + ")");
  std::vector<std::vector<Int>> inversion{{-1}};
  return make_group(2, CyclicOrders({n}), ActionMatrix(std::move(inversion)),
                    {"y", "x0"});
}

}  // namespace capwit
