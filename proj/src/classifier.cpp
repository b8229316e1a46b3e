#include "ulam/classifier.hpp"

#include <stdexcept>

#include "ulam/culam.hpp"

namespace ulam {

ClassifyResult classify_two_ones_detail(TwoOnesCoord c) {
  const std::uint64_t x = c.x, y = c.y, z = c.z;
  const std::uint64_t sum = x + z;

  if (y == 0) return {(sum & 1) == 1, ClassifyRoute::kEasyY0, 0, 0};
  if (y == 1) return {(sum & 1) == 1 && sum > 1, ClassifyRoute::kEasyY1, 0, 0};

  const ZumkellerForm form = zumkeller_form(y);
  const int k = form.k;
  const std::uint64_t period = std::uint64_t{1} << (k + 1);

  switch (form.kind) {
    case ZumkellerKind::kAllOnes: {
      const bool member = (sum % period == period - 1) && sum != period - 1;
      return {member, ClassifyRoute::kZumkellerAllOnes, k, 0};
    }
    case ZumkellerKind::kPowerMinusTwo: {
      const bool on_diagonal = (sum % period == period - 1) && sum != period - 1;
      const bool lower = sum == period - 2 && (x & 1) == 0 && (z & 1) == 0;
      const bool upper = sum == period && x > 0 && z > 0;
      return {on_diagonal || lower || upper, ClassifyRoute::kZumkellerPowerMinusTwo, k, 0};
    }
    case ZumkellerKind::kInteriorZero: {
      const int a = form.a;
      const std::uint64_t xt = x % period, zt = z % period;
      const bool impurity =
          sum == y && (x % (std::uint64_t{1} << (a + 1))) < (std::uint64_t{1} << a);
      const bool member = impurity || xt + zt == period - 1 ||
                          xt + zt == period + (std::uint64_t{1} << a) - 1;
      return {member, ClassifyRoute::kZumkellerInteriorZero, k, a};
    }
    case ZumkellerKind::kNotZumkeller:
      break;
  }
  const bool member = (sum & 1) == 1 && culam_fast(y, x, z) == CavemanCount(1);
  return {member, ClassifyRoute::kCulam, k, 0};
}

bool necessary_bounds(TwoOnesCoord c) {
  if (c.y == 0) throw std::invalid_argument("necessary_bounds: y must be >= 1");
  const std::uint64_t period = period_of(c.y);
  const std::uint64_t xt = c.x % period, zt = c.z % period;
  const bool in_band = xt + zt + 1 >= period && xt + zt + c.y + 2 <= 2 * period;
  if (in_band) return true;
  const std::uint64_t sum = c.x + c.z;
  return is_zumkeller(c.y) && sum >= c.y && sum <= c.y + 2;
}

bool guaranteed_member(TwoOnesCoord c) {
  if (c.y == 0) throw std::invalid_argument("guaranteed_member: y must be >= 1");
  const std::uint64_t period = period_of(c.y);
  const std::uint64_t sum = c.x + c.z;
  if ((c.y == period - 1 || c.y == period - 2) && sum == period - 1) return false;
  if (sum % period == period - 1) return true;
  std::uint64_t top = 2 * period - c.y - 2;
  if ((top & 1) == 0) --top;  // whichever of the two is odd
  return (c.x % period) + (c.z % period) == top;
}

}  // namespace ulam
