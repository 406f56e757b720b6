#include "fusionkit/recognize.hpp"

#include "fusionkit/algorithms.hpp"
#include "fusionkit/extension.hpp"
#include "fusionkit/linear.hpp"

namespace fusionkit
{

namespace
{

std::size_t count_of_order(std::map<std::size_t, std::size_t> const &stats, std::size_t k)
{
  auto it = stats.find(k);
  return it == stats.end() ? 0 : it->second;
}

bool central_quotient_is_s4(FiniteGroup const &g, Subgroup const &z)
{
  auto q = quotient(g, z);
  return find_isomorphism(symmetric_group(4), q.group).has_value();
}

std::string abelian_tag(std::size_t n, std::map<std::size_t, std::size_t> const &stats)
{
  if (count_of_order(stats, n) > 0)
    return "C" + std::to_string(n);
  if (stats.rbegin()->first == 2) {
    int k = 0;
    for (std::size_t m = n; m > 1; m /= 2)
      ++k;
    return "C2^" + std::to_string(k);
  }
  return "Abelian(" + std::to_string(n) + ")";
}

}  // namespace

std::string recognize(FiniteGroup const &g)
{
  std::size_t const n = g.order();
  if (n == 1)
    return "1";
  auto const whole = Subgroup::whole(g);
  auto const stats = order_statistics(whole);
  if (is_abelian(whole))
    return abelian_tag(n, stats);

  auto const z = center(g);
  std::size_t const involutions = count_of_order(stats, 2);

  if (n == 6)
    return "S3";
  if (n == 8)
    return involutions == 1 ? "Q8" : "D8";
  if (n == 16 && count_of_order(stats, 8) > 0) {
    if (involutions == 1)
      return "Q16";
    return involutions == 9 ? "D16" : "SD16";
  }
  for (std::size_t p : {3, 5, 7, 11}) {
    if (n == p * p * p && z.order() == p)
      return exponent(whole) == p ? "Extraspecial(p^3,exp p)" : "Extraspecial(p^3,exp p^2)";
  }
  if (n == 24) {
    if (z.order() == 1 && derived_subgroup(whole).order() == 12)
      return "S4";
    if (z.order() == 2 && involutions == 1 && count_of_order(stats, 3) == 8)
      return "SL2(F3)";
  }
  if (n == 48 && z.order() == 2 && central_quotient_is_s4(g, z))
    return involutions == 1 ? "O48" : "GL2(F3)";

  for (int p : {2, 3, 5, 7}) {
    for (LinearKind kind : {LinearKind::USL2, LinearKind::UGL2, LinearKind::SL2, LinearKind::GL2}) {
      std::size_t const q = static_cast<std::size_t>(p);
      std::size_t ref_order = 0;
      switch (kind) {
      case LinearKind::SL2:
        ref_order = q * (q * q - 1);
        break;
      case LinearKind::GL2:
        ref_order = q * (q - 1) * (q * q - 1);
        break;
      case LinearKind::USL2:
        ref_order = q * (q - 1);
        break;
      case LinearKind::UGL2:
        ref_order = q * (q - 1) * (q - 1);
        break;
      }
      if (ref_order != n)
        continue;
      LinearGroup ref(p, kind);
      if (find_isomorphism(ref.group(), g))
        return linear_kind_name(kind, p);
    }
  }
  return "unknown(" + std::to_string(n) + ")";
}

}  // namespace fusionkit
