#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>

namespace lambda3 {

class Zeta9Local;

/// {w^3 mod pi^9 : w a unit}, keyed by the first nine pi-adic digits.
/// Built once on first use, read-only afterwards.
class CubeTable {
 public:
  static constexpr std::uint32_t kKeys = 19683;  // 3^9

  static const CubeTable& instance();

  bool contains(std::uint32_t key) const { return cubes_[key]; }
  std::size_t distinct_cubes() const { return cubes_.count(); }
  std::size_t units_enumerated() const { return units_; }

 private:
  CubeTable();
  std::bitset<kKeys> cubes_;
  std::size_t units_ = 0;
};

/// Base-3 key of the nine pi-digits of u mod pi^9.
std::uint32_t pi9_key(const Zeta9Local& u);

}  // namespace lambda3
