#include "capwit/presentation.hpp"

#include <sstream>
#include <vector>

#include "capwit/constructions.hpp"

namespace capwit {

namespace {

// One factor of a relator right-hand side, e.g. "x1^-3" or "x2".
void append_factor(std::string& out, const std::string& name, Int exp) {
  if (!out.empty()) out += "*";
  out += name;
  if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

std::string presentation_text(Int p, Int r) {
  validate(EasterfieldSpec{p, r});
  std::ostringstream os;

  std::vector<Int> orders{checked_pow(p, r), checked_pow(p, r)};
  for (Int i = 0; i < p - 2; ++i) orders.push_back(checked_pow(p, r - 1));
  auto name = [](Int i) { return "x" + std::to_string(i); };
  auto trivial = [&](Int i) { return orders[static_cast<std::size_t>(i)] == 1; };

  os << "presentation easterfield p=" << p << " r=" << r << "\n";
  os << "order " << easterfield_order({p, r}) << "\n";
  os << "gen y " << p << "\n";
  for (Int i = 0; i < p; ++i)
    if (!trivial(i)) os << "gen " << name(i) << " " << orders[i] << "\n";

  std::string trivial_list;
  for (Int i = 0; i < p; ++i)
    if (trivial(i)) trivial_list += (trivial_list.empty() ? "" : " ") + name(i);
  if (!trivial_list.empty())
    os << "# trivial generators omitted: " << trivial_list << "\n";

  os << "rel y^" << p << " = e\n";
  for (Int i = 0; i < p; ++i)
    if (!trivial(i)) os << "rel " << name(i) << "^" << orders[i] << " = e\n";

  // Shift relations y^-1*x_i*y = x_i*x_{i+1}, 0 <= i <= p-2.
  for (Int i = 0; i <= p - 2; ++i) {
    if (trivial(i)) continue;
    std::string rhs;
    append_factor(rhs, name(i), 1);
    if (!trivial(i + 1)) append_factor(rhs, name(i + 1), 1);
    os << "rel y^-1*" << name(i) << "*y = " << rhs << "\n";
  }

  // Binomial relation for x_{p-1}, with the literal exponents.
  if (!trivial(p - 1)) {
    std::string rhs;
    for (Int k = 1; k <= p - 2; ++k)
      if (!trivial(k)) append_factor(rhs, name(k), -binomial(p, k));
    append_factor(rhs, name(p - 1), 1 - binomial(p, p - 1));
    os << "rel y^-1*" << name(p - 1) << "*y = " << rhs << "\n";
  }

  return os.str();
}

}  // namespace capwit
