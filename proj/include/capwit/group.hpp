// Exact arithmetic for finite split metabelian groups C_m ⋉ H with H
// finite abelian. Elements are kept in the unique normal form y^t · h,
// h given as an exponent vector over the cyclic factors of H.
//
// A SplitGroup is immutable after construction; every operation here is
// a pure function of its inputs and safe to call concurrently.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capwit {

using Int = std::int64_t;

/// Largest group order the enumeration-style operations accept by default.
inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

struct group_error : std::runtime_error {
  explicit group_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation would enumerate a group past the cap.
struct cap_error : group_error {
  cap_error(std::uint64_t group_order_, std::uint64_t cap_);
  std::uint64_t group_order;
  std::uint64_t cap;
};

/// Thrown when the lower central series stabilizes at a nontrivial subgroup.
struct not_nilpotent_error : group_error {
  explicit not_nilpotent_error(std::uint64_t stuck_order);
};

bool is_prime(Int n);

/// n = p^k with p prime, k >= 1? Returns (p, k), or nullopt.
std::optional<std::pair<Int, int>> prime_power_base(Int n);

/// base^exp, throwing group_error on overflow past 2^63-1. exp >= 0.
Int checked_pow(Int base, Int exp);

/// Orders of the cyclic factors of H. Every entry is a power of one
/// common prime p (order-1 factors are allowed and kept in place).
class CyclicOrders {
 public:
  explicit CyclicOrders(std::vector<Int> orders);

  std::size_t size() const { return orders_.size(); }
  Int operator[](std::size_t i) const { return orders_[i]; }
  const std::vector<Int>& values() const { return orders_; }

  /// The common prime, or 0 when every factor is trivial.
  Int prime() const { return prime_; }

  /// |H|; throws group_error if the product exceeds 2^64-1.
  std::uint64_t product() const;

 private:
  std::vector<Int> orders_;
  Int prime_ = 0;
};

/// Square integer matrix describing an endomorphism of H column by
/// column: column j is the exponent vector of the image of generator j.
class ActionMatrix {
 public:
  ActionMatrix() = default;
  explicit ActionMatrix(std::vector<std::vector<Int>> columns);
  static ActionMatrix identity(std::size_t n);

  std::size_t dim() const { return cols_.size(); }
  const std::vector<Int>& column(std::size_t j) const { return cols_[j]; }
  std::vector<Int>& column(std::size_t j) { return cols_[j]; }

  friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;

 private:
  std::vector<std::vector<Int>> cols_;
};

/// Entry-wise canonical residues: row i reduced modulo orders[i].
ActionMatrix reduce_rows(const ActionMatrix& m, const CyclicOrders& orders);

/// Matrix product a·b, rows reduced modulo orders. Sound for well-defined
/// actions: reducing before or after multiplying yields the same map on H.
ActionMatrix multiply(const ActionMatrix& a, const ActionMatrix& b,
                      const CyclicOrders& orders);

/// m applied to an exponent vector, reduced modulo orders.
std::vector<Int> apply(const ActionMatrix& m, const std::vector<Int>& v,
                       const CyclicOrders& orders);

bool is_identity(const ActionMatrix& m, const CyclicOrders& orders);

/// Normal form y^t · x0^{v[0]} ··· x_{n-1}^{v[n-1]}; equality of normal
/// forms is exactly equality of group elements.
struct GroupElement {
  Int t = 0;
  std::vector<Int> v;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite split extension C_m ⋉_α H. Validates the action at construction
/// (well-definedness, invertibility, α^m = id) and precomputes α^0…α^{m-1}.
class SplitGroup {
 public:
  SplitGroup(Int m, CyclicOrders orders, ActionMatrix action,
             std::vector<std::string> generator_labels = {});

  Int top_order() const { return m_; }
  const CyclicOrders& orders() const { return orders_; }
  std::size_t dim() const { return orders_.size(); }
  const ActionMatrix& action() const { return powers_[m_ > 1 ? 1 : 0]; }
  /// α^k for any integer k (taken mod m).
  const ActionMatrix& action_power(Int k) const;
  std::uint64_t order() const { return order_; }
  std::uint64_t h_order() const { return h_order_; }
  const std::vector<std::string>& generator_labels() const { return labels_; }

  GroupElement identity() const;
  /// y (requires m > 1).
  GroupElement top_generator() const;
  /// x_i.
  GroupElement h_generator(std::size_t i) const;
  /// The distinguished generators: y when m > 1, then every x_i of
  /// nontrivial order. These generate the group by construction.
  std::vector<GroupElement> generators() const;

  /// Mixed-radix position of a normal form in the canonical enumeration
  /// (t major, then the exponent vector lexicographically).
  std::uint64_t rank_of(const GroupElement& g) const;
  GroupElement element_at(std::uint64_t rank) const;

  /// True when the normal form is valid for this group (dimension and
  /// residue ranges).
  bool in_normal_form(const GroupElement& g) const;

 private:
  Int m_;
  CyclicOrders orders_;
  std::vector<ActionMatrix> powers_;  // α^0 … α^{m-1}, rows reduced
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t h_order_ = 1;
  std::uint64_t order_ = 1;
};

/// Validating constructor mirroring SplitGroup's; rejects an action that
/// is not well-defined on H, not invertible, or of order not dividing m,
/// each with its own diagnostic.
SplitGroup make_group(Int m, CyclicOrders orders, ActionMatrix action,
                      std::vector<std::string> generator_labels = {});

GroupElement mul(const SplitGroup& g, const GroupElement& a,
                 const GroupElement& b);
GroupElement inv(const SplitGroup& g, const GroupElement& a);
/// a^k by repeated squaring; k may be negative.
GroupElement pow(const SplitGroup& g, const GroupElement& a, Int k);
/// [a,b] = a^{-1} b^{-1} a b.
GroupElement comm(const SplitGroup& g, const GroupElement& a,
                  const GroupElement& b);

/// Smallest k >= 1 with a^k = e (a divisor of |G|).
std::uint64_t element_order(const SplitGroup& g, const GroupElement& a);

/// All |G| normal forms, each exactly once, in canonical rank order.
std::vector<GroupElement> enumerate(const SplitGroup& g,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Throws cap_error unless |G| <= cap.
void require_within_cap(const SplitGroup& g, std::uint64_t cap);

}  // namespace capwit
