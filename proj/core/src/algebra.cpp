#include "gorentest/algebra.hpp"

#include <utility>

namespace gorentest {

FinLocalAlgebra::FinLocalAlgebra(PrimeField field, std::size_t dim,
                                 std::vector<Elem> constants,
                                 std::vector<std::string> labels)
    : field_(field), dim_(dim), constants_(std::move(constants)), labels_(std::move(labels)) {
  const std::size_t d = dim_;
  if (d == 0) throw AlgebraError("algebra must have dimension at least 1");
  if (constants_.size() != d * d * d)
    throw AlgebraError("structure constants must have d^3 entries");
  for (auto& c : constants_)
    if (c >= field_.characteristic()) throw AlgebraError("structure constant out of range");
  if (labels_.empty()) {
    labels_.push_back("1");
    for (std::size_t i = 1; i < d; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != d) throw AlgebraError("label count differs from dimension");

  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const Elem delta = j == k ? 1 : 0;
      if (constant(0, j, k) != delta || constant(j, 0, k) != delta)
        throw AlgebraError("basis element e_0 is not a two-sided unit");
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (constant(i, j, k) != constant(j, i, k)) throw AlgebraError("product is not commutative");

  mult_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    FieldMatrix m(field_, d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m.set(k, j, constant(i, j, k));
    mult_.push_back(std::move(m));
  }

  // (e_i e_j) e_l == e_i (e_j e_l) for every basis triple.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec prod = mult_[i].column(j);
      const FieldMatrix lhs = mult_matrix(prod);
      const FieldMatrix rhs = compose(mult_[i], mult_[j]);
      if (!(lhs == rhs)) throw AlgebraError("product is not associative");
    }

  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (constant(i, j, 0) != 0)
        throw AlgebraError("non-local: span(e_1..e_{d-1}) is not an ideal (e_" +
                           std::to_string(i) + " * e_" + std::to_string(j) +
                           " has a unit component)");
  for (std::size_t i = 1; i < d; ++i) {
    Vec power = basis_element(i);
    for (std::size_t step = 0; step < d; ++step) power = multiply(power, basis_element(i));
    for (auto c : power)
      if (c != 0)
        throw AlgebraError("non-local: basis element " + labels_[i] + " is not nilpotent");
  }
}

std::shared_ptr<const FinLocalAlgebra> FinLocalAlgebra::from_presentation(
    const RingPresentation& pres, std::size_t dim_cap) {
  StandardBasis sb = standard_basis(pres, dim_cap);
  const std::size_t d = sb.monomials.size();
  return std::make_shared<const FinLocalAlgebra>(pres.field, d, std::move(sb.constants),
                                                 std::move(sb.labels));
}

FieldMatrix FinLocalAlgebra::mult_matrix(const Vec& r) const {
  FieldMatrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (r[i]) m.add_block(0, 0, mult_[i], r[i]);
  return m;
}

Vec FinLocalAlgebra::multiply(const Vec& a, const Vec& b) const {
  return mult_matrix(a).apply(b);
}

Vec FinLocalAlgebra::unit() const { return basis_element(0); }

Vec FinLocalAlgebra::basis_element(std::size_t i) const {
  Vec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

std::size_t FinLocalAlgebra::embedding_dimension() const {
  if (dim_ == 1) return 0;
  FieldMatrix squares(field_, dim_, (dim_ - 1) * (dim_ - 1));
  for (std::size_t i = 1; i < dim_; ++i)
    for (std::size_t j = 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        squares.set(k, (i - 1) * (dim_ - 1) + (j - 1), constant(i, j, k));
  return dim_ - 1 - rank(squares);
}

FieldMatrix socle(const FinLocalAlgebra& r) {
  const std::size_t d = r.dim();
  if (d == 1) return FieldMatrix::identity(r.field(), 1);
  FieldMatrix stacked(r.field(), (d - 1) * d, d);
  for (std::size_t i = 1; i < d; ++i) stacked.add_block((i - 1) * d, 0, r.mult_matrix(i));
  return rank_profile(stacked).kernel_basis;
}

bool gorenstein_socle_oracle(const FinLocalAlgebra& r) { return socle(r).cols() == 1; }

}  // namespace gorentest
