// The dualizing module E(k) = Hom_k(R, k) of a finite local algebra.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gorentest/module.hpp"

namespace gorentest {

struct DualizingModule {
  AlgebraPtr algebra;
  FinModule module;  // (r.f)(s) = f(rs)
};

DualizingModule matlis_dual(const AlgebraPtr& r);

/// Same module with explicit action matrices, so Hom and tensor take the
/// generic linear-algebra path instead of the canonical identifications.
FinModule as_general(const FinModule& m);

struct DualizingReport {
  bool homothety_bijective = false;    // R -> Hom_R(D, D)
  std::size_t socle_dim = 0;           // dim_k Hom_R(k, D)
  std::vector<std::size_t> ext_k;      // dim H_{-i} Hom(Q', D), i = 0..N-1
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Q' is the minimal free resolution of k truncated at N.
DualizingReport check_dualizing_axioms(const DualizingModule& d, std::size_t depth);

}  // namespace gorentest
