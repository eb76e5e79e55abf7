// Minimal free resolutions over a finite local algebra.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorentest/complex.hpp"

namespace gorentest {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = 200000;

struct FreeResolution {
  FinModule target;
  std::size_t depth;
  ChainComplex complex;       // P_0 <- ... <- P_len, len <= depth
  ChainMap augmentation;      // P -> target[0]
  bool terminated;            // some syzygy vanished; P is the whole resolution
  std::vector<std::size_t> betti;
};

/// Cover by minimal generators and take kernels, up to P_depth. Throws
/// ResourceError once the total k-dimension of the free modules would exceed
/// `budget`.
FreeResolution minimal_resolution(const FinModule& m, std::size_t depth,
                                  std::size_t budget = kDefaultBudget);

/// Every differential has entries in the maximal ideal.
bool is_minimal(const FreeResolution& p);

enum class ScreenVerdict { gorenstein, non_gorenstein_unconfirmed, inconclusive };
std::string to_string(ScreenVerdict v);

struct Screen {
  ScreenVerdict verdict;
  FreeResolution resolution;  // of E(k)
};

Screen betti_gorenstein_screen(const AlgebraPtr& r, std::size_t depth,
                               std::size_t budget = kDefaultBudget);

}  // namespace gorentest
