// Finite-dimensional commutative local algebras over F_p.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorentest/field_matrix.hpp"
#include "gorentest/presentation.hpp"

namespace gorentest {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A commutative local F_p-algebra R given by structure constants on a basis
/// e_0 = 1, e_1, ..., e_{d-1}, where e_1..e_{d-1} span the maximal ideal m.
class FinLocalAlgebra {
 public:
  /// constants[(i * d + j) * d + k] is the coefficient of e_k in e_i * e_j.
  /// Verifies unit, commutativity, associativity (all basis triples), that
  /// span(e_1..e_{d-1}) is an ideal and that each e_i (i > 0) is nilpotent.
  /// Throws AlgebraError.
  FinLocalAlgebra(PrimeField field, std::size_t dim, std::vector<Elem> constants,
                  std::vector<std::string> labels = {});

  static std::shared_ptr<const FinLocalAlgebra> from_presentation(
      const RingPresentation& pres, std::size_t dim_cap = 64);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Elem constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }

  /// Matrix of left multiplication by e_i: column j holds e_i * e_j.
  const FieldMatrix& mult_matrix(std::size_t i) const { return mult_[i]; }
  /// Matrix of multiplication by an arbitrary element r (coordinates).
  FieldMatrix mult_matrix(const Vec& r) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec unit() const;
  Vec basis_element(std::size_t i) const;

  /// Number of nonzero generators of m / m^2 (embedding dimension).
  std::size_t embedding_dimension() const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Elem> constants_;
  std::vector<std::string> labels_;
  std::vector<FieldMatrix> mult_;
};

using AlgebraPtr = std::shared_ptr<const FinLocalAlgebra>;

/// Basis (as columns, d x s) of the socle {r : r * m = 0}.
FieldMatrix socle(const FinLocalAlgebra& r);
/// R is Gorenstein iff its socle is one-dimensional.
bool gorenstein_socle_oracle(const FinLocalAlgebra& r);

}  // namespace gorentest
