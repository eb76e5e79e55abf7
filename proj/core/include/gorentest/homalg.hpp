// Hom and tensor of complexes, with the canonical morphisms between them.
//
// Sign conventions:
//   Hom(X, Y)_n = (+)_j Hom(X_j, Y_{j+n}),  d(phi) = dY phi - (-1)^n phi dX
//   (X (x) Y)_n = (+)_i X_i (x) Y_{n-i},    d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy

#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "gorentest/complex.hpp"

namespace gorentest {

struct HomSlot {
  int j;             // Hom(X_j, Y_{j+n})
  HomSpace space;
  std::size_t offset;
};

class HomComplex {
 public:
  const ChainComplex& complex() const { return data_->complex; }
  const ChainComplex& source() const { return data_->x; }
  const ChainComplex& target() const { return data_->y; }
  /// Nonzero constituents of degree n, in increasing j.
  const std::vector<HomSlot>& slots(int n) const;
  const HomSlot* slot(int n, int j) const;

  /// k-matrix X_j -> Y_{j+n} of the degree-n element v.
  FieldMatrix component(int n, const Vec& v, int j) const;
  /// Degree-n element with the given components (absent j are zero).
  Vec encode(int n, const std::vector<std::pair<int, FieldMatrix>>& parts) const;
  /// Inclusion of the constituent at j into degree n.
  FieldMatrix embedding(int n, int j) const;

 private:
  friend HomComplex hom_complex(const ChainComplex&, const ChainComplex&);
  struct Data {
    ChainComplex x, y, complex;
    std::vector<std::vector<HomSlot>> slots;  // by degree - complex.lo()
  };
  std::shared_ptr<const Data> data_;
};

struct TensorSlot {
  int i;             // X_i (x) Y_{n-i}
  TensorSpace space;
  std::size_t offset;
};

class TensorComplex {
 public:
  const ChainComplex& complex() const { return data_->complex; }
  const ChainComplex& left() const { return data_->x; }
  const ChainComplex& right() const { return data_->y; }
  const std::vector<TensorSlot>& slots(int n) const;
  const TensorSlot* slot(int n, int i) const;
  /// Coordinates in degree n of x (x) y, x in X_i (index a), y in Y_{n-i} (index b).
  Vec pure(int n, int i, std::size_t a, std::size_t b) const;
  FieldMatrix embedding(int n, int i) const;

 private:
  friend TensorComplex tensor_complex(const ChainComplex&, const ChainComplex&);
  struct Data {
    ChainComplex x, y, complex;
    std::vector<std::vector<TensorSlot>> slots;
  };
  std::shared_ptr<const Data> data_;
};

HomComplex hom_complex(const ChainComplex& x, const ChainComplex& y);
TensorComplex tensor_complex(const ChainComplex& x, const ChainComplex& y);

/// Hom(X, g) : Hom(X, Y) -> Hom(X, Y').
ChainMap hom_post(const HomComplex& from, const HomComplex& to, const ChainMap& g);
/// Hom(f, Y) : Hom(X, Y) -> Hom(X', Y) for f : X' -> X.
ChainMap hom_pre(const HomComplex& from, const HomComplex& to, const ChainMap& f);
/// f (x) Y : X (x) Y -> X' (x) Y.
ChainMap tensor_left(const TensorComplex& from, const TensorComplex& to, const ChainMap& f);
/// X (x) g : X (x) Y -> X (x) Y'.
ChainMap tensor_right(const TensorComplex& from, const TensorComplex& to, const ChainMap& g);

/// chi : R[0] -> Hom(X, X), r -> r id.
ChainMap homothety(const HomComplex& end);

/// eps : Hom(P, D) (x) P -> D, phi (x) p -> phi(p). `t` must be
/// tensor_complex(hom.complex(), hom.source()).
ChainMap evaluation(const HomComplex& hom, const TensorComplex& t);

struct Omega {
  HomComplex hom_px;      // Hom(P, X)
  TensorComplex source;   // Hom(P, X) (x) B
  TensorComplex x_b;      // X (x) B
  HomComplex target;      // Hom(P, X (x) B)
  ChainMap map;           // phi (x) b -> (p -> (-1)^{|p||b|} phi(p) (x) b)
};

/// Tensor evaluation; P must be degreewise free.
Omega tensor_evaluation_omega(const ChainComplex& p, const ChainComplex& x, const ChainComplex& b);

struct Adjunction {
  TensorComplex xy;       // X (x) Y
  HomComplex source;      // Hom(X (x) Y, Z)
  HomComplex hyz;         // Hom(Y, Z)
  HomComplex target;      // Hom(X, Hom(Y, Z))
  ChainMap map;           // f -> (x -> (y -> f(x (x) y)))
};

Adjunction adjunction(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z);

/// Hom(X, E) for a module E placed in degree 0.
HomComplex dualize(const ChainComplex& x, const FinModule& e);

struct DoubleDual {
  HomComplex dual;    // Hom(X, E)
  HomComplex bidual;  // Hom(Hom(X, E), E)
  ChainMap map;       // x -> (phi -> (-1)^{|x||phi|} phi(x))
};

DoubleDual double_dual(const ChainComplex& x, const FinModule& e);

/// Hom(R[0], Y) -> Y, phi -> phi(1).
ChainMap hom_unitor(const HomComplex& h);
/// X (x) R[0] -> X, x (x) r -> r x.
ChainMap tensor_unitor(const TensorComplex& t);

}  // namespace gorentest
