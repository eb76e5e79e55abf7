// Finitely generated modules over a FinLocalAlgebra, presented as F_p-spaces
// with one action matrix per algebra basis element.
//
// A module is stored as `copies` copies of a block. The block is either the
// regular module R, the Matlis dual E = Hom_k(R, k) with (r.f)(s) = f(rs), or
// an arbitrary module given by explicit action matrices. Free modules R^b and
// injective modules E^b therefore never materialize their (large, block
// diagonal) action matrices, and Hom / tensor between them use the canonical
// identifications Hom(R^a, N) = N^a, Hom(E^a, E^b) = R^{ab}, R^a (x) N = N^a,
// M (x) R^b = M^b. Everything else is solved by linear algebra.

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gorentest/algebra.hpp"
#include "gorentest/field_matrix.hpp"

namespace gorentest {

enum class BlockKind { regular, dual, general };

class FinModule {
 public:
  static FinModule free(AlgebraPtr r, std::size_t rank);
  /// E^copies, where E = Hom_k(R, k) is the injective hull of k.
  static FinModule injective_hull(AlgebraPtr r, std::size_t copies = 1);
  static FinModule residue_field(AlgebraPtr r);
  static FinModule zero(AlgebraPtr r) { return free(std::move(r), 0); }
  /// Module with the given action matrices (one per basis element of R).
  /// Throws AlgebraError when the module axioms fail.
  static FinModule from_action(AlgebraPtr r, std::vector<FieldMatrix> action);

  const AlgebraPtr& algebra() const { return algebra_; }
  const FinLocalAlgebra& ring() const { return *algebra_; }
  const PrimeField& field() const { return algebra_->field(); }
  BlockKind kind() const { return kind_; }
  std::size_t copies() const { return copies_; }
  std::size_t block_dim() const { return block_dim_; }
  std::size_t dim() const { return block_dim_ * copies_; }
  bool is_zero() const { return dim() == 0; }
  bool is_free() const { return kind_ == BlockKind::regular; }

  /// True when both modules are sums of the same block.
  bool same_block(const FinModule& o) const;
  FinModule with_copies(std::size_t copies) const;

  const FieldMatrix& block_action(std::size_t i) const { return (*block_action_)[i]; }
  FieldMatrix block_act_by(const Vec& r) const;
  /// Full action matrix of e_i (materialized; intended for small modules).
  FieldMatrix action(std::size_t i) const;
  FieldMatrix act_by(const Vec& r) const;
  /// r . x without materializing the full action.
  Vec act(const Vec& r, const Vec& x) const;
  /// A(r) * X computed copy by copy.
  FieldMatrix act_on(const Vec& r, const FieldMatrix& x) const;
  /// out[r0.., c0..] += scale * A(r), written copy by copy.
  void add_action(FieldMatrix& out, std::size_t r0, std::size_t c0, const Vec& r,
                  Elem scale = 1) const;

  /// Exhaustive check of the module axioms on the block.
  bool satisfies_axioms() const;

 private:
  FinModule(AlgebraPtr r, BlockKind kind, std::size_t copies,
            std::shared_ptr<const std::vector<FieldMatrix>> block_action);

  AlgebraPtr algebra_;
  BlockKind kind_;
  std::size_t copies_;
  std::size_t block_dim_;
  std::shared_ptr<const std::vector<FieldMatrix>> block_action_;
};

/// Direct sum in the given order; merges into copies when all nonzero
/// summands share a block, otherwise materializes a general module.
FinModule direct_sum(const std::vector<FinModule>& parts);

/// k-linear dual Hom_k(M, k) with action (r.f)(m) = f(r m).
FinModule k_dual(const FinModule& m);

struct ModuleMap {
  FinModule source;
  FinModule target;
  FieldMatrix matrix;  // target.dim() x source.dim()

  ModuleMap(FinModule s, FinModule t, FieldMatrix m);
  static ModuleMap identity(const FinModule& m);
  static ModuleMap zero(const FinModule& s, const FinModule& t);

  /// Commutes with every action matrix.
  bool is_linear() const;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// Entry r_{ts} of the R-matrix of f : X^a -> X^b where X is R or E on both
/// sides (every such R-linear map is given by a b x a matrix over R).
Vec r_entry(const FinModule& source, const FieldMatrix& f, std::size_t t, std::size_t s);

struct Submodule {
  FinModule module;
  FieldMatrix inclusion;  // parent.dim() x module.dim()
};

struct QuotientModule {
  FinModule module;
  FieldMatrix projection;  // module.dim() x parent.dim()
  FieldMatrix section;     // parent.dim() x module.dim(), projection * section = I
};

Submodule kernel_module(const ModuleMap& f);
QuotientModule cokernel_module(const ModuleMap& f);
/// Submodule spanned by the columns of `span` (closed under the action).
Submodule submodule(const FinModule& parent, const FieldMatrix& span);
QuotientModule quotient_module(const FinModule& parent, const FieldMatrix& span);

struct Generators {
  std::size_t count = 0;  // dim_k M / mM
  FieldMatrix lifts;      // M.dim() x count, lifting a basis of M / mM
};

Generators min_gens(const FinModule& m);

enum class HomRule { free_source, dual_dual, solved };

/// Hom_R(M, N) as a module with (r.phi)(x) = r.phi(x), together with the
/// coordinate system identifying its elements with k-linear maps.
class HomSpace {
 public:
  const FinModule& module() const { return module_; }
  const FinModule& source() const { return source_; }
  const FinModule& target() const { return target_; }
  HomRule rule() const { return rule_; }
  std::size_t dim() const { return module_.dim(); }

  /// k-matrix (target.dim x source.dim) of the map with these coordinates.
  FieldMatrix to_map(const Vec& coords) const;
  FieldMatrix basis_map(std::size_t q) const;
  /// Coordinates of an R-linear map; throws std::invalid_argument otherwise.
  Vec from_map(const FieldMatrix& f) const;

 private:
  friend HomSpace hom_module(const FinModule&, const FinModule&);
  HomSpace(FinModule source, FinModule target);

  FinModule source_, target_, module_;
  HomRule rule_ = HomRule::solved;
  std::shared_ptr<const FieldMatrix> basis_;    // vec(phi) columns, solved rule
  std::shared_ptr<const FieldMatrix> coords_;   // left inverse of basis_
};

HomSpace hom_module(const FinModule& m, const FinModule& n);
/// Hom(M, g) : Hom(M, N) -> Hom(M, N') for g : N -> N'.
FieldMatrix hom_post(const HomSpace& from, const HomSpace& to, const FieldMatrix& g);
/// Hom(f, N) : Hom(M', N) -> Hom(M, N) for f : M -> M'.
FieldMatrix hom_pre(const HomSpace& from, const HomSpace& to, const FieldMatrix& f);

enum class TensorRule { left_free, right_free, quotient };

struct TensorTerm {
  Elem coef;
  std::size_t left;   // basis index in M
  std::size_t right;  // basis index in N
};

/// M (x)_R N together with the projection from M (x)_k N.
class TensorSpace {
 public:
  const FinModule& module() const { return module_; }
  const FinModule& left() const { return left_; }
  const FinModule& right() const { return right_; }
  TensorRule rule() const { return rule_; }
  std::size_t dim() const { return module_.dim(); }

  /// Coordinates of m_i (x) n_j.
  Vec pure(std::size_t i, std::size_t j) const;
  /// A pure-tensor expression of basis element q.
  std::vector<TensorTerm> representative(std::size_t q) const;
  /// Projection M (x)_k N -> M (x)_R N; k-tensor index i * N.dim() + j.
  FieldMatrix projection() const;

 private:
  friend TensorSpace tensor_module(const FinModule&, const FinModule&);
  TensorSpace(FinModule left, FinModule right);

  FinModule left_, right_, module_;
  TensorRule rule_ = TensorRule::quotient;
  std::shared_ptr<const FieldMatrix> projection_;   // quotient rule
  std::vector<std::size_t> section_units_;          // quotient rule
};

TensorSpace tensor_module(const FinModule& m, const FinModule& n);
/// f (x) N : M (x) N -> M' (x) N.
FieldMatrix tensor_left(const TensorSpace& from, const TensorSpace& to, const FieldMatrix& f);
/// M (x) g : M (x) N -> M (x) N'.
FieldMatrix tensor_right(const TensorSpace& from, const TensorSpace& to, const FieldMatrix& g);

}  // namespace gorentest
