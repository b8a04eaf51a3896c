#pragma once

#include <string>
#include <vector>

namespace planecubic {

template <typename Visit>
void for_each_element(const FiniteQuadraticForm& form, std::uint64_t cap,
                      Visit&& visit) {
  const Integer total = form.group_order();
  if (total > cap) {
    throw Error(ErrorKind::kGroupTooLarge,
                "|A| = " + total.str() + " exceeds enumeration cap " +
                    std::to_string(cap));
  }
  const std::size_t r = form.generator_count();
  std::vector<Integer> x(r);
  while (true) {
    visit(static_cast<const std::vector<Integer>&>(x));
    std::size_t i = 0;
    while (i < r) {
      x[i] += 1;
      if (x[i] < form.orders()[i]) break;
      x[i] = 0;
      ++i;
    }
    if (i == r) return;
  }
}

}  // namespace planecubic
