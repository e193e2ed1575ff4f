#include "capwit/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace capwit {

namespace {

Int mod_reduce(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b,
                              const char* what) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw group_error(std::string(what) + " exceeds 2^64-1");
  return static_cast<std::uint64_t>(p);
}

}  // namespace

cap_error::cap_error(std::uint64_t group_order_, std::uint64_t cap_)
    : group_error("group order " + std::to_string(group_order_) +
                  " exceeds the enumeration cap " + std::to_string(cap_)),
      group_order(group_order_),
      cap(cap_) {}

not_nilpotent_error::not_nilpotent_error(std::uint64_t stuck_order)
    : group_error("lower central series stabilized at a nontrivial subgroup "
                  "of order " +
                  std::to_string(stuck_order) + "; group is not nilpotent") {}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<Int, int>> prime_power_base(Int n) {
  if (n < 2) return std::nullopt;
  Int p = 0;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(n, 1);  // n itself prime
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

Int checked_pow(Int base, Int exp) {
  if (base < 0 || exp < 0) throw group_error("checked_pow: negative argument");
  unsigned __int128 acc = 1;
  for (Int i = 0; i < exp; ++i) {
    acc *= static_cast<unsigned __int128>(base);
    if (acc > static_cast<unsigned __int128>(INT64_MAX))
      throw group_error("integer overflow computing " + std::to_string(base) +
                        "^" + std::to_string(exp));
  }
  return static_cast<Int>(acc);
}

CyclicOrders::CyclicOrders(std::vector<Int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw group_error("orders sequence must be nonempty");
  for (Int o : orders_) {
    if (o < 1) throw group_error("cyclic factor orders must be positive");
    if (o == 1) continue;
    auto pk = prime_power_base(o);
    if (!pk)
      throw group_error("cyclic factor order " + std::to_string(o) +
                        " is not a prime power");
    if (prime_ == 0) {
      prime_ = pk->first;
    } else if (prime_ != pk->first) {
      throw group_error("cyclic factor orders mix primes " +
                        std::to_string(prime_) + " and " +
                        std::to_string(pk->first));
    }
  }
}

std::uint64_t CyclicOrders::product() const {
  std::uint64_t n = 1;
  for (Int o : orders_)
    n = checked_mul_u64(n, static_cast<std::uint64_t>(o), "order of H");
  return n;
}

ActionMatrix::ActionMatrix(std::vector<std::vector<Int>> columns)
    : cols_(std::move(columns)) {
  for (const auto& c : cols_)
    if (c.size() != cols_.size())
      throw group_error("action matrix must be square");
}

ActionMatrix ActionMatrix::identity(std::size_t n) {
  std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) cols[j][j] = 1;
  return ActionMatrix(std::move(cols));
}

ActionMatrix reduce_rows(const ActionMatrix& m, const CyclicOrders& orders) {
  std::size_t n = m.dim();
  std::vector<std::vector<Int>> cols(n, std::vector<Int>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      cols[j][i] = mod_reduce(m.column(j)[i], orders[i]);
  return ActionMatrix(std::move(cols));
}

ActionMatrix multiply(const ActionMatrix& a, const ActionMatrix& b,
                      const CyclicOrders& orders) {
  std::size_t n = a.dim();
  if (b.dim() != n || orders.size() != n)
    throw group_error("matrix dimension mismatch");
  std::vector<std::vector<Int>> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = apply(a, b.column(j), orders);
  return ActionMatrix(std::move(cols));
}

std::vector<Int> apply(const ActionMatrix& m, const std::vector<Int>& v,
                       const CyclicOrders& orders) {
  std::size_t n = m.dim();
  if (v.size() != n || orders.size() != n)
    throw group_error("matrix/vector dimension mismatch");
  std::vector<Int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    __int128 acc = 0;
    for (std::size_t k = 0; k < n; ++k)
      acc += static_cast<__int128>(mod_reduce(m.column(k)[i], orders[i])) *
             mod_reduce(v[k], orders[k]);
    Int r = static_cast<Int>(acc % orders[i]);
    out[i] = r < 0 ? r + orders[i] : r;
  }
  return out;
}

bool is_identity(const ActionMatrix& m, const CyclicOrders& orders) {
  std::size_t n = m.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Int want = (i == j) ? mod_reduce(1, orders[i]) : 0;
      if (mod_reduce(m.column(j)[i], orders[i]) != want) return false;
    }
  return true;
}

namespace {

// Checks α(x_j)^{orders[j]} = e coordinate-wise: orders[i] must divide
// entry(i,j)·orders[j].
bool action_well_defined(const ActionMatrix& m, const CyclicOrders& orders) {
  std::size_t n = m.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Int e = mod_reduce(m.column(j)[i], orders[i]);
      if ((e * orders[j]) % orders[i] != 0) return false;
    }
  return true;
}

// A well-defined endomorphism of a finite abelian p-group is an
// automorphism iff the induced map on H/H^p is invertible, i.e. iff the
// matrix restricted to the nontrivial factors is nonsingular mod p.
bool action_invertible(const ActionMatrix& m, const CyclicOrders& orders) {
  Int p = orders.prime();
  if (p == 0) return true;  // H trivial
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] > 1) idx.push_back(i);
  std::size_t s = idx.size();
  std::vector<std::vector<Int>> a(s, std::vector<Int>(s));
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c)
      a[r][c] = mod_reduce(m.column(idx[c])[idx[r]], p);
  auto mulmod = [p](Int x, Int y) {
    return static_cast<Int>(static_cast<__int128>(x) * y % p);
  };
  auto invmod = [p](Int x) {
    __int128 t = 0, nt = 1, r = p, nr = x % p;
    while (nr != 0) {
      __int128 q = r / nr;
      __int128 tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return mod_reduce(static_cast<Int>(t % p), p);
  };
  // Gaussian elimination over F_p.
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t piv = col;
    while (piv < s && a[piv][col] == 0) ++piv;
    if (piv == s) return false;
    std::swap(a[piv], a[col]);
    Int inv = invmod(a[col][col]);
    for (std::size_t c = col; c < s; ++c) a[col][c] = mulmod(a[col][c], inv);
    for (std::size_t r = 0; r < s; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Int f = a[r][col];
      for (std::size_t c = col; c < s; ++c)
        a[r][c] = mod_reduce(a[r][c] - mulmod(f, a[col][c]), p);
    }
  }
  return true;
}

}  // namespace

SplitGroup::SplitGroup(Int m, CyclicOrders orders, ActionMatrix action,
                       std::vector<std::string> generator_labels)
    : m_(m), orders_(std::move(orders)), labels_(std::move(generator_labels)) {
  if (m_ < 1) throw group_error("top factor order m must be >= 1");
  std::size_t n = orders_.size();
  if (action.dim() != n)
    throw group_error("action matrix dimension " +
                      std::to_string(action.dim()) +
                      " does not match the number of cyclic factors " +
                      std::to_string(n));
  ActionMatrix a = reduce_rows(action, orders_);
  if (!action_well_defined(a, orders_))
    throw group_error(
        "action is not well-defined on H: some generator image has order "
        "not dividing the generator's order");
  if (!action_invertible(a, orders_))
    throw group_error("action is not invertible on H");
  powers_.reserve(static_cast<std::size_t>(m_));
  powers_.push_back(ActionMatrix::identity(n));
  for (Int k = 1; k < m_; ++k)
    powers_.push_back(multiply(powers_.back(), a, orders_));
  ActionMatrix am = multiply(powers_.back(), a, orders_);
  if (!is_identity(am, orders_))
    throw group_error("action order does not divide m = " + std::to_string(m_));

  if (labels_.empty()) {
    labels_.push_back("y");
    for (std::size_t i = 0; i < n; ++i)
      labels_.push_back("x" + std::to_string(i));
  }
  if (labels_.size() != n + 1)
    throw group_error("expected one label for y plus one per cyclic factor");

  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;)
    strides_[i - 1] = checked_mul_u64(
        strides_[i], static_cast<std::uint64_t>(orders_[i]), "group order");
  h_order_ = checked_mul_u64(strides_[0], static_cast<std::uint64_t>(orders_[0]),
                             "group order");
  order_ = checked_mul_u64(h_order_, static_cast<std::uint64_t>(m_),
                           "group order");
}

const ActionMatrix& SplitGroup::action_power(Int k) const {
  return powers_[static_cast<std::size_t>(mod_reduce(k, m_))];
}

GroupElement SplitGroup::identity() const {
  return GroupElement{0, std::vector<Int>(dim(), 0)};
}

GroupElement SplitGroup::top_generator() const {
  if (m_ < 2) throw group_error("group has trivial top factor; no y generator");
  return GroupElement{1, std::vector<Int>(dim(), 0)};
}

GroupElement SplitGroup::h_generator(std::size_t i) const {
  if (i >= dim()) throw group_error("generator index out of range");
  GroupElement g{0, std::vector<Int>(dim(), 0)};
  g.v[i] = mod_reduce(1, orders_[i]);
  return g;
}

std::vector<GroupElement> SplitGroup::generators() const {
  std::vector<GroupElement> out;
  if (m_ > 1) out.push_back(top_generator());
  for (std::size_t i = 0; i < dim(); ++i)
    if (orders_[i] > 1) out.push_back(h_generator(i));
  return out;
}

std::uint64_t SplitGroup::rank_of(const GroupElement& g) const {
  std::uint64_t r = static_cast<std::uint64_t>(g.t) * h_order_;
  for (std::size_t i = 0; i < dim(); ++i)
    r += static_cast<std::uint64_t>(g.v[i]) * strides_[i];
  return r;
}

GroupElement SplitGroup::element_at(std::uint64_t rank) const {
  GroupElement g{static_cast<Int>(rank / h_order_), std::vector<Int>(dim())};
  std::uint64_t rem = rank % h_order_;
  for (std::size_t i = 0; i < dim(); ++i) {
    g.v[i] = static_cast<Int>(rem / strides_[i]);
    rem %= strides_[i];
  }
  return g;
}

bool SplitGroup::in_normal_form(const GroupElement& g) const {
  if (g.v.size() != dim()) return false;
  if (g.t < 0 || g.t >= m_) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (g.v[i] < 0 || g.v[i] >= orders_[i]) return false;
  return true;
}

SplitGroup make_group(Int m, CyclicOrders orders, ActionMatrix action,
                      std::vector<std::string> generator_labels) {
  return SplitGroup(m, std::move(orders), std::move(action),
                    std::move(generator_labels));
}

namespace {

void require_dim(const SplitGroup& g, const GroupElement& a) {
  if (a.v.size() != g.dim())
    throw group_error("element dimension " + std::to_string(a.v.size()) +
                      " does not match group dimension " +
                      std::to_string(g.dim()));
}

}  // namespace

GroupElement mul(const SplitGroup& g, const GroupElement& a,
                 const GroupElement& b) {
  require_dim(g, a);
  require_dim(g, b);
  // (y^t h)(y^s h') = y^{t+s} · α^s(h) h'
  GroupElement out{mod_reduce(a.t + b.t, g.top_order()),
                   apply(g.action_power(b.t), a.v, g.orders())};
  for (std::size_t i = 0; i < g.dim(); ++i)
    out.v[i] = mod_reduce(out.v[i] + b.v[i], g.orders()[i]);
  return out;
}

GroupElement inv(const SplitGroup& g, const GroupElement& a) {
  require_dim(g, a);
  Int s = mod_reduce(-a.t, g.top_order());
  GroupElement out{s, apply(g.action_power(s), a.v, g.orders())};
  for (std::size_t i = 0; i < g.dim(); ++i)
    out.v[i] = mod_reduce(-out.v[i], g.orders()[i]);
  return out;
}

GroupElement pow(const SplitGroup& g, const GroupElement& a, Int k) {
  if (k < 0) return pow(g, inv(g, a), -k);
  GroupElement acc = g.identity();
  GroupElement base = a;
  while (k > 0) {
    if (k & 1) acc = mul(g, acc, base);
    base = mul(g, base, base);
    k >>= 1;
  }
  return acc;
}

GroupElement comm(const SplitGroup& g, const GroupElement& a,
                  const GroupElement& b) {
  return mul(g, mul(g, inv(g, a), inv(g, b)), mul(g, a, b));
}

namespace {

GroupElement pow_u64(const SplitGroup& g, const GroupElement& a,
                     std::uint64_t k) {
  GroupElement acc = g.identity();
  GroupElement base = a;
  while (k > 0) {
    if (k & 1) acc = mul(g, acc, base);
    base = mul(g, base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace

std::uint64_t element_order(const SplitGroup& g, const GroupElement& a) {
  require_dim(g, a);
  std::uint64_t n = g.order();
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  GroupElement e = g.identity();
  for (std::uint64_t d : divisors)
    if (pow_u64(g, a, d) == e) return d;
  throw group_error("element order not found (corrupt normal form?)");
}

void require_within_cap(const SplitGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw cap_error(g.order(), cap);
}

std::vector<GroupElement> enumerate(const SplitGroup& g, std::uint64_t cap) {
  require_within_cap(g, cap);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (std::uint64_t r = 0; r < g.order(); ++r) out.push_back(g.element_at(r));
  return out;
}

}  // namespace capwit
