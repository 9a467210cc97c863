#include "lambda3/padic3/cube_table.hpp"

#include <vector>

#include "lambda3/padic3/zeta9.hpp"

namespace lambda3 {

CubeTable::CubeTable() {
  std::vector<Zeta9Local> pi_pows;
  for (unsigned k = 0; k < 9; ++k) pi_pows.push_back(Zeta9Local::pi_pow(k, 9));
  for (std::uint32_t key = 0; key < kKeys; ++key) {
    if (key % 3 == 0) continue;  // digit 0 must be nonzero for a unit
    Zeta9Local w = Zeta9Local::from_int(0, 9);
    std::uint32_t t = key;
    for (int k = 0; k < 9; ++k, t /= 3) {
      if (t % 3 != 0) w = w + pi_pows[k].scale(t % 3).with_precision(9);
    }
    cubes_.set(pi9_key(w * w * w));
    ++units_;
  }
}

const CubeTable& CubeTable::instance() {
  static const CubeTable table;
  return table;
}

std::uint32_t pi9_key(const Zeta9Local& u) {
  const auto d = u.pi_digits(9);
  std::uint32_t key = 0;
  for (int k = 8; k >= 0; --k) key = 3 * key + static_cast<std::uint32_t>(d[k]);
  return key;
}

}  // namespace lambda3
