// Bounded chain complexes of FinModules and chain maps between them.

#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "gorentest/module.hpp"

namespace gorentest {

class ComplexError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// X_lo <- ... <- X_hi, zero outside [lo, hi]. differential(n) : X_n -> X_{n-1}.
/// `complete` marks complexes that are the exact object they model rather
/// than a truncation; every degree of a complete complex is trusted.
class ChainComplex {
 public:
  /// diffs[k] is the differential out of degree lo + k + 1. Checks shapes
  /// and d o d = 0; throws ComplexError.
  ChainComplex(int lo, std::vector<FinModule> modules, std::vector<FieldMatrix> diffs,
               bool complete = false);
  static ChainComplex concentrated(const FinModule& m, int degree = 0);

  int lo() const { return data_->lo; }
  int hi() const { return data_->lo + static_cast<int>(data_->modules.size()) - 1; }
  bool complete() const { return data_->complete; }
  const AlgebraPtr& algebra() const { return data_->modules.front().algebra(); }
  const PrimeField& field() const { return data_->modules.front().field(); }

  bool in_window(int n) const { return n >= lo() && n <= hi(); }
  /// Module in degree n (the zero module outside the window).
  FinModule module(int n) const;
  std::size_t dim(int n) const { return in_window(n) ? data_->modules[index(n)].dim() : 0; }
  /// Differential X_n -> X_{n-1} (a zero matrix of the right shape off-window).
  FieldMatrix differential(int n) const;
  /// Cached rank of differential(n).
  std::size_t differential_rank(int n) const;

  /// Degrees whose homology is trusted under guard g.
  std::pair<int, int> trusted(int guard) const;

 private:
  struct Data {
    int lo;
    bool complete;
    std::vector<FinModule> modules;
    std::vector<FieldMatrix> diffs;
    mutable std::vector<long long> ranks;  // -1 = not computed
  };
  std::size_t index(int n) const { return static_cast<std::size_t>(n - data_->lo); }
  std::shared_ptr<const Data> data_;
};

/// Degree-preserving chain map; component(n) : S_n -> T_n.
class ChainMap {
 public:
  /// comps[k] is the component at degree source.lo() + k. Checks shapes and
  /// the chain-map identity on every degree; throws ComplexError.
  ChainMap(ChainComplex source, ChainComplex target, std::vector<FieldMatrix> comps);
  static ChainMap identity(const ChainComplex& x);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  FieldMatrix component(int n) const;
  /// Every component is a square invertible matrix and the windows match in dimension.
  bool is_degreewise_iso() const;
  /// Every component commutes with the module actions.
  bool is_linear() const;

 private:
  ChainComplex source_, target_;
  std::vector<FieldMatrix> comps_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

struct Homology {
  FinModule module;
  std::size_t dim;
  bool boundary;  // computed at a window edge of a truncated complex
};

/// Homology as a module (materializes; for small complexes).
Homology homology(const ChainComplex& x, int n);
/// dim_k H_n from ranks only.
std::size_t homology_dim(const ChainComplex& x, int n);

/// Sigma^k X: (Sigma X)_n = X_{n-1}, differential negated once per shift.
ChainComplex suspension(const ChainComplex& x, int k = 1);
ChainMap suspension(const ChainMap& f, int k = 1);

struct Cone {
  ChainComplex complex;
  ChainMap into;    // Y -> Cone(f)
  ChainMap out;     // Cone(f) -> Sigma X
};

/// Cone(f)_n = Y_n (+) X_{n-1}, differential [[dY, f], [0, -dX]].
Cone mapping_cone(const ChainMap& f);

struct Truncation {
  ChainComplex complex;
  ChainMap map;  // X -> truncation
};

/// B_i = X_i for i < n, B_n = coker d_{n+1}, zero above n.
Truncation soft_truncate_left(const ChainComplex& x, int n);

struct DegreeReport {
  int degree;
  std::size_t source_dim;   // dim H_n(S)
  std::size_t target_dim;   // dim H_n(T)
  std::size_t induced_rank; // rank H_n(f)
  std::size_t cone_dim;     // dim H_n(Cone f)
};

struct QuasiIsoReport {
  bool quasi_iso;
  std::vector<DegreeReport> degrees;
};

/// Induced-map test at each trusted degree, cross-checked against the cone
/// through the long exact sequence (a mismatch throws ComplexError).
QuasiIsoReport is_quasi_iso(const ChainMap& f, int guard = 1);

/// (degree, dim H) at every trusted degree.
std::vector<std::pair<int, std::size_t>> acyclicity_report(const ChainComplex& x, int guard = 1);

}  // namespace gorentest
