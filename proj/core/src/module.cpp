#include "gorentest/module.hpp"

#include <stdexcept>
#include <utility>

namespace gorentest {

namespace {

std::shared_ptr<const std::vector<FieldMatrix>> regular_block(const FinLocalAlgebra& r) {
  auto v = std::make_shared<std::vector<FieldMatrix>>();
  for (std::size_t i = 0; i < r.dim(); ++i) v->push_back(r.mult_matrix(i));
  return v;
}

std::shared_ptr<const std::vector<FieldMatrix>> dual_block(const FinLocalAlgebra& r) {
  auto v = std::make_shared<std::vector<FieldMatrix>>();
  for (std::size_t i = 0; i < r.dim(); ++i) v->push_back(r.mult_matrix(i).transpose());
  return v;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

// Row-major vectorization of a matrix.
Vec vectorize(const FieldMatrix& f) {
  Vec v(f.rows() * f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) v[r * f.cols() + c] = f.at(r, c);
  return v;
}

FieldMatrix unvectorize(const PrimeField& k, const Vec& v, std::size_t rows, std::size_t cols) {
  FieldMatrix f(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (v[r * cols + c]) f.set(r, c, v[r * cols + c]);
  return f;
}

void add_vector(FieldMatrix& out, std::size_t col, const Vec& v, Elem scale) {
  const PrimeField& k = out.field();
  for (std::size_t r = 0; r < v.size(); ++r)
    if (v[r]) out.add_at(r, col, k.mul(v[r], scale));
}

}  // namespace

FinModule::FinModule(AlgebraPtr r, BlockKind kind, std::size_t copies,
                     std::shared_ptr<const std::vector<FieldMatrix>> block_action)
    : algebra_(std::move(r)),
      kind_(kind),
      copies_(copies),
      block_dim_(block_action->front().rows()),
      block_action_(std::move(block_action)) {
  if (block_dim_ == 0) {
    kind_ = BlockKind::regular;
    copies_ = 0;
    block_action_ = regular_block(*algebra_);
    block_dim_ = algebra_->dim();
  }
}

FinModule FinModule::free(AlgebraPtr r, std::size_t rank) {
  auto block = regular_block(*r);
  return FinModule(std::move(r), BlockKind::regular, rank, std::move(block));
}

FinModule FinModule::injective_hull(AlgebraPtr r, std::size_t copies) {
  auto block = dual_block(*r);
  return FinModule(std::move(r), BlockKind::dual, copies, std::move(block));
}

FinModule FinModule::residue_field(AlgebraPtr r) {
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < r->dim(); ++i) {
    FieldMatrix m(r->field(), 1, 1);
    if (i == 0) m.set(0, 0, 1);
    action.push_back(std::move(m));
  }
  return from_action(std::move(r), std::move(action));
}

FinModule FinModule::from_action(AlgebraPtr r, std::vector<FieldMatrix> action) {
  if (action.size() != r->dim()) throw AlgebraError("need one action matrix per basis element");
  const std::size_t n = action.front().rows();
  for (const auto& a : action)
    if (a.rows() != n || a.cols() != n) throw AlgebraError("action matrices must be square");
  FinModule m(r, BlockKind::general, 1,
              std::make_shared<const std::vector<FieldMatrix>>(std::move(action)));
  if (!m.satisfies_axioms()) throw AlgebraError("module axioms violated");
  return m;
}

bool FinModule::same_block(const FinModule& o) const {
  if (algebra_ != o.algebra_ || kind_ != o.kind_) return false;
  return kind_ != BlockKind::general || block_action_ == o.block_action_;
}

FinModule FinModule::with_copies(std::size_t copies) const {
  FinModule m(*this);
  m.copies_ = copies;
  return m;
}

FieldMatrix FinModule::block_act_by(const Vec& r) const {
  FieldMatrix m(field(), block_dim_, block_dim_);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) m.add_block(0, 0, block_action(i), r[i]);
  return m;
}

FieldMatrix FinModule::action(std::size_t i) const {
  return repeat_diagonal(block_action(i), copies_);
}

FieldMatrix FinModule::act_by(const Vec& r) const {
  return repeat_diagonal(block_act_by(r), copies_);
}

Vec FinModule::act(const Vec& r, const Vec& x) const {
  const FieldMatrix b = block_act_by(r);
  Vec out(dim(), 0);
  Vec slice(block_dim_);
  for (std::size_t c = 0; c < copies_; ++c) {
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(c * block_dim_),
              x.begin() + static_cast<std::ptrdiff_t>((c + 1) * block_dim_), slice.begin());
    const Vec y = b.apply(slice);
    std::copy(y.begin(), y.end(), out.begin() + static_cast<std::ptrdiff_t>(c * block_dim_));
  }
  return out;
}

FieldMatrix FinModule::act_on(const Vec& r, const FieldMatrix& x) const {
  const FieldMatrix b = block_act_by(r);
  FieldMatrix out(field(), dim(), x.cols());
  for (std::size_t c = 0; c < copies_; ++c)
    out.add_block(c * block_dim_, 0, compose(b, x.block(c * block_dim_, 0, block_dim_, x.cols())));
  return out;
}

void FinModule::add_action(FieldMatrix& out, std::size_t r0, std::size_t c0, const Vec& r,
                           Elem scale) const {
  const FieldMatrix b = block_act_by(r);
  for (std::size_t c = 0; c < copies_; ++c)
    out.add_block(r0 + c * block_dim_, c0 + c * block_dim_, b, scale);
}

bool FinModule::satisfies_axioms() const {
  const FinLocalAlgebra& r = ring();
  const std::size_t d = r.dim();
  if (!(block_action(0) == FieldMatrix::identity(field(), block_dim_))) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const FieldMatrix lhs = compose(block_action(i), block_action(j));
      if (!(lhs == block_act_by(r.mult_matrix(i).column(j)))) return false;
    }
  return true;
}

FinModule direct_sum(const std::vector<FinModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no modules");
  std::vector<const FinModule*> nz;
  for (const auto& p : parts)
    if (!p.is_zero()) nz.push_back(&p);
  if (nz.empty()) return FinModule::zero(parts.front().algebra());
  bool uniform = true;
  std::size_t copies = 0;
  for (const auto* p : nz) {
    uniform = uniform && p->same_block(*nz.front());
    copies += p->copies();
  }
  if (uniform) return nz.front()->with_copies(copies);
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < parts.front().ring().dim(); ++i) {
    FieldMatrix a = nz.front()->action(i);
    for (std::size_t k = 1; k < nz.size(); ++k) a = direct_sum(a, nz[k]->action(i));
    action.push_back(std::move(a));
  }
  return FinModule::from_action(parts.front().algebra(), std::move(action));
}

FinModule k_dual(const FinModule& m) {
  if (m.is_zero()) return m;
  if (m.kind() == BlockKind::regular) return FinModule::injective_hull(m.algebra(), m.copies());
  if (m.kind() == BlockKind::dual) return FinModule::free(m.algebra(), m.copies());
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < m.ring().dim(); ++i) action.push_back(m.block_action(i).transpose());
  return FinModule::from_action(m.algebra(), std::move(action)).with_copies(m.copies());
}

ModuleMap::ModuleMap(FinModule s, FinModule t, FieldMatrix m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw std::invalid_argument("module map matrix has the wrong shape");
}

ModuleMap ModuleMap::identity(const FinModule& m) {
  return ModuleMap(m, m, FieldMatrix::identity(m.field(), m.dim()));
}

ModuleMap ModuleMap::zero(const FinModule& s, const FinModule& t) {
  return ModuleMap(s, t, FieldMatrix(s.field(), t.dim(), s.dim()));
}

bool ModuleMap::is_linear() const {
  const FinModule dual_source = k_dual(source);
  const FieldMatrix mt = matrix.transpose();
  for (std::size_t i = 1; i < source.ring().dim(); ++i) {
    const Vec e = source.ring().basis_element(i);
    const FieldMatrix lhs = target.act_on(e, matrix);
    const FieldMatrix rhs = dual_source.act_on(e, mt).transpose();
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  return ModuleMap(f.source, g.target, compose(g.matrix, f.matrix));
}

Vec r_entry(const FinModule& source, const FieldMatrix& f, std::size_t t, std::size_t s) {
  const std::size_t d = source.ring().dim();
  Vec r(d);
  if (source.kind() == BlockKind::regular) {
    for (std::size_t c = 0; c < d; ++c) r[c] = f.at(t * d + c, s * d);
  } else if (source.kind() == BlockKind::dual) {
    for (std::size_t c = 0; c < d; ++c) r[c] = f.at(t * d, s * d + c);
  } else {
    throw std::invalid_argument("r_entry needs a free or injective source");
  }
  return r;
}

Submodule submodule(const FinModule& parent, const FieldMatrix& span) {
  const RankProfile rp = rank_profile(span);
  const FieldMatrix& basis = rp.image_basis;
  if (rp.rank == 0) return {FinModule::zero(parent.algebra()), basis};
  const FieldMatrix left = left_inverse(basis);
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < parent.ring().dim(); ++i) {
    const FieldMatrix moved = parent.act_on(parent.ring().basis_element(i), basis);
    FieldMatrix a = compose(left, moved);
    if (!(compose(basis, a) == moved))
      throw std::invalid_argument("span is not closed under the action");
    action.push_back(std::move(a));
  }
  return {FinModule::from_action(parent.algebra(), std::move(action)), basis};
}

QuotientModule quotient_module(const FinModule& parent, const FieldMatrix& span) {
  const PrimeField& k = parent.field();
  const FieldMatrix img = rank_profile(span).image_basis;
  const auto units = complement_units(img);
  const std::size_t n = parent.dim(), r = img.cols(), q = units.size();
  FieldMatrix section(k, n, q);
  for (std::size_t j = 0; j < q; ++j) section.set(units[j], j, 1);
  if (q == 0) return {FinModule::zero(parent.algebra()), FieldMatrix(k, 0, n), section};
  FieldMatrix full(k, n, n);
  full.add_block(0, 0, img);
  full.add_block(0, r, section);
  const FieldMatrix projection = inverse(full)->block(r, 0, q, n);
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < parent.ring().dim(); ++i)
    action.push_back(compose(projection, parent.act_on(parent.ring().basis_element(i), section)));
  return {FinModule::from_action(parent.algebra(), std::move(action)), projection, section};
}

Submodule kernel_module(const ModuleMap& f) {
  return submodule(f.source, rank_profile(f.matrix).kernel_basis);
}

QuotientModule cokernel_module(const ModuleMap& f) {
  return quotient_module(f.target, f.matrix);
}

Generators min_gens(const FinModule& m) {
  const PrimeField& k = m.field();
  const std::size_t d = m.ring().dim();
  if (m.is_zero()) return {0, FieldMatrix(k, 0, 0)};
  const std::size_t bd = m.block_dim();
  std::vector<std::size_t> block_units;
  if (m.kind() == BlockKind::regular) {
    block_units = {0};
  } else if (d == 1) {
    for (std::size_t i = 0; i < bd; ++i) block_units.push_back(i);
  } else {
    std::vector<FieldMatrix> images;
    for (std::size_t i = 1; i < d; ++i) images.push_back(m.block_action(i));
    block_units = complement_units(rank_profile(hstack(images)).image_basis);
  }
  const std::size_t per = block_units.size();
  Generators g{per * m.copies(), FieldMatrix(k, m.dim(), per * m.copies())};
  for (std::size_t c = 0; c < m.copies(); ++c)
    for (std::size_t u = 0; u < per; ++u) g.lifts.set(c * bd + block_units[u], c * per + u, 1);
  return g;
}

// ---------------------------------------------------------------- Hom

HomSpace::HomSpace(FinModule source, FinModule target)
    : source_(std::move(source)), target_(std::move(target)), module_(FinModule::zero(source_.algebra())) {}

HomSpace hom_module(const FinModule& m, const FinModule& n) {
  if (m.algebra() != n.algebra()) throw std::invalid_argument("modules over different rings");
  HomSpace h(m, n);
  const AlgebraPtr& r = m.algebra();
  const PrimeField& k = m.field();
  const std::size_t d = r->dim();
  if (m.kind() == BlockKind::regular || m.is_zero() || n.is_zero()) {
    h.rule_ = HomRule::free_source;
    h.module_ = (m.is_zero() || n.is_zero()) ? FinModule::zero(r)
                                             : n.with_copies(n.copies() * m.copies());
    if (m.kind() != BlockKind::regular) h.source_ = FinModule::zero(r);
    if (n.is_zero()) h.target_ = FinModule::zero(r);
    return h;
  }
  if (m.kind() == BlockKind::dual && n.kind() == BlockKind::dual) {
    h.rule_ = HomRule::dual_dual;
    h.module_ = FinModule::free(r, m.copies() * n.copies());
    return h;
  }
  // General case: solve A_N(e_i) phi = phi A_M(e_i) for i >= 1.
  h.rule_ = HomRule::solved;
  const std::size_t sd = m.dim(), td = n.dim();
  FieldMatrix system(k, (d - 1) * sd * td, sd * td);
  const FieldMatrix is = FieldMatrix::identity(k, sd), it = FieldMatrix::identity(k, td);
  for (std::size_t i = 1; i < d; ++i) {
    system.add_block((i - 1) * sd * td, 0, kronecker(n.action(i), is));
    system.add_block((i - 1) * sd * td, 0, kronecker(it, m.action(i).transpose()), k.neg(1));
  }
  auto basis = std::make_shared<const FieldMatrix>(rank_profile(system).kernel_basis);
  h.basis_ = basis;
  if (basis->cols() == 0) {
    h.module_ = FinModule::zero(r);
    h.coords_ = std::make_shared<const FieldMatrix>(k, 0, sd * td);
    return h;
  }
  h.coords_ = std::make_shared<const FieldMatrix>(left_inverse(*basis));
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < d; ++i) {
    FieldMatrix a(k, basis->cols(), basis->cols());
    for (std::size_t q = 0; q < basis->cols(); ++q)
      a.set_column(q, h.from_map(n.act_on(r->basis_element(i), h.basis_map(q))));
    action.push_back(std::move(a));
  }
  h.module_ = FinModule::from_action(r, std::move(action));
  return h;
}

FieldMatrix HomSpace::to_map(const Vec& coords) const {
  const PrimeField& k = source_.field();
  const std::size_t d = source_.ring().dim();
  FieldMatrix f(k, target_.dim(), source_.dim());
  switch (rule_) {
    case HomRule::free_source: {
      const std::size_t td = target_.dim();
      for (std::size_t s = 0; s < source_.copies() && td; ++s) {
        const Vec y(coords.begin() + static_cast<std::ptrdiff_t>(s * td),
                    coords.begin() + static_cast<std::ptrdiff_t>((s + 1) * td));
        for (std::size_t c = 0; c < d; ++c) f.set_column(s * d + c, target_.act(source_.ring().basis_element(c), y));
      }
      return f;
    }
    case HomRule::dual_dual: {
      const std::size_t b = target_.copies();
      for (std::size_t s = 0; s < source_.copies(); ++s)
        for (std::size_t t = 0; t < b; ++t) {
          const Vec r(coords.begin() + static_cast<std::ptrdiff_t>((s * b + t) * d),
                      coords.begin() + static_cast<std::ptrdiff_t>((s * b + t + 1) * d));
          f.add_block(t * d, s * d, target_.block_act_by(r));
        }
      return f;
    }
    case HomRule::solved:
      return unvectorize(k, basis_->apply(coords), target_.dim(), source_.dim());
  }
  return f;
}

FieldMatrix HomSpace::basis_map(std::size_t q) const {
  // The solved rule calls this before module_ is assigned.
  const std::size_t n = rule_ == HomRule::solved ? basis_->cols() : dim();
  return to_map(unit_vector(n, q));
}

Vec HomSpace::from_map(const FieldMatrix& f) const {
  if (f.rows() != target_.dim() || f.cols() != source_.dim())
    throw std::invalid_argument("from_map: map has the wrong shape");
  const std::size_t d = source_.ring().dim();
  Vec coords(dim(), 0);
  switch (rule_) {
    case HomRule::free_source: {
      const std::size_t td = target_.dim();
      for (std::size_t s = 0; s < source_.copies() && td; ++s)
        for (std::size_t y = 0; y < td; ++y) coords[s * td + y] = f.at(y, s * d);
      break;
    }
    case HomRule::dual_dual: {
      const std::size_t b = target_.copies();
      for (std::size_t s = 0; s < source_.copies(); ++s)
        for (std::size_t t = 0; t < b; ++t)
          for (std::size_t c = 0; c < d; ++c) coords[(s * b + t) * d + c] = f.at(t * d, s * d + c);
      break;
    }
    case HomRule::solved:
      coords = coords_->apply(vectorize(f));
      break;
  }
  if (!(to_map(coords) == f)) throw std::invalid_argument("from_map: map is not R-linear");
  return coords;
}

FieldMatrix hom_post(const HomSpace& from, const HomSpace& to, const FieldMatrix& g) {
  const PrimeField& k = from.source().field();
  FieldMatrix out(k, to.dim(), from.dim());
  if (from.dim() == 0 || to.dim() == 0) return out;
  if (from.rule() == HomRule::free_source && to.rule() == HomRule::free_source)
    return repeat_diagonal(g, from.source().copies());
  if (from.rule() == HomRule::dual_dual && to.rule() == HomRule::dual_dual) {
    const FinLocalAlgebra& r = from.source().ring();
    const std::size_t d = r.dim(), a = from.source().copies();
    const std::size_t b = from.target().copies(), b2 = to.target().copies();
    for (std::size_t t2 = 0; t2 < b2; ++t2)
      for (std::size_t t = 0; t < b; ++t) {
        const FieldMatrix m = r.mult_matrix(r_entry(from.target(), g, t2, t));
        if (m.is_zero()) continue;
        for (std::size_t s = 0; s < a; ++s) out.add_block((s * b2 + t2) * d, (s * b + t) * d, m);
      }
    return out;
  }
  for (std::size_t q = 0; q < from.dim(); ++q)
    out.set_column(q, to.from_map(compose(g, from.basis_map(q))));
  return out;
}

FieldMatrix hom_pre(const HomSpace& from, const HomSpace& to, const FieldMatrix& f) {
  const PrimeField& k = from.source().field();
  FieldMatrix out(k, to.dim(), from.dim());
  if (from.dim() == 0 || to.dim() == 0) return out;
  const std::size_t d = from.source().ring().dim();
  if (from.rule() == HomRule::free_source && to.rule() == HomRule::free_source) {
    const FinModule& n = from.target();
    const std::size_t nd = n.dim();
    for (std::size_t s = 0; s < to.source().copies(); ++s)
      for (std::size_t t = 0; t < from.source().copies(); ++t) {
        const Vec r = r_entry(to.source(), f, t, s);
        bool nonzero = false;
        for (auto c : r) nonzero = nonzero || c;
        if (nonzero) n.add_action(out, s * nd, t * nd, r);
      }
    return out;
  }
  if (from.rule() == HomRule::dual_dual && to.rule() == HomRule::dual_dual) {
    const FinLocalAlgebra& r = from.source().ring();
    const std::size_t a = to.source().copies(), a2 = from.source().copies();
    const std::size_t b = from.target().copies();
    for (std::size_t s = 0; s < a; ++s)
      for (std::size_t s2 = 0; s2 < a2; ++s2) {
        const FieldMatrix m = r.mult_matrix(r_entry(to.source(), f, s2, s));
        if (m.is_zero()) continue;
        for (std::size_t t = 0; t < b; ++t) out.add_block((s * b + t) * d, (s2 * b + t) * d, m);
      }
    return out;
  }
  for (std::size_t q = 0; q < from.dim(); ++q)
    out.set_column(q, to.from_map(compose(from.basis_map(q), f)));
  return out;
}

// ---------------------------------------------------------------- tensor

TensorSpace::TensorSpace(FinModule left, FinModule right)
    : left_(std::move(left)), right_(std::move(right)), module_(FinModule::zero(left_.algebra())) {}

TensorSpace tensor_module(const FinModule& m, const FinModule& n) {
  if (m.algebra() != n.algebra()) throw std::invalid_argument("modules over different rings");
  TensorSpace t(m, n);
  const AlgebraPtr& r = m.algebra();
  const PrimeField& k = m.field();
  const std::size_t d = r->dim();
  if (m.kind() == BlockKind::regular) {
    t.rule_ = TensorRule::left_free;
    t.module_ = n.with_copies(n.copies() * m.copies());
    return t;
  }
  if (n.kind() == BlockKind::regular) {
    t.rule_ = TensorRule::right_free;
    t.module_ = m.with_copies(m.copies() * n.copies());
    return t;
  }
  t.rule_ = TensorRule::quotient;
  const std::size_t md = m.dim(), nd = n.dim();
  FieldMatrix relations(k, md * nd, (d - 1) * md * nd);
  const FieldMatrix im = FieldMatrix::identity(k, md), in = FieldMatrix::identity(k, nd);
  for (std::size_t i = 1; i < d; ++i) {
    relations.add_block(0, (i - 1) * md * nd, kronecker(m.action(i), in));
    relations.add_block(0, (i - 1) * md * nd, kronecker(im, n.action(i)), k.neg(1));
  }
  const FieldMatrix img = rank_profile(relations).image_basis;
  t.section_units_ = complement_units(img);
  const std::size_t q = t.section_units_.size();
  if (q == 0) {
    t.projection_ = std::make_shared<const FieldMatrix>(k, 0, md * nd);
    return t;
  }
  FieldMatrix full(k, md * nd, md * nd);
  full.add_block(0, 0, img);
  for (std::size_t j = 0; j < q; ++j) full.set(t.section_units_[j], img.cols() + j, 1);
  auto proj = std::make_shared<const FieldMatrix>(inverse(full)->block(img.cols(), 0, q, md * nd));
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < d; ++i) {
    const FieldMatrix lifted = kronecker(m.action(i), in);
    FieldMatrix a(k, q, q);
    for (std::size_t j = 0; j < q; ++j) a.set_column(j, proj->apply(lifted.column(t.section_units_[j])));
    action.push_back(std::move(a));
  }
  t.projection_ = proj;
  t.module_ = FinModule::from_action(r, std::move(action));
  return t;
}

Vec TensorSpace::pure(std::size_t i, std::size_t j) const {
  const std::size_t d = left_.ring().dim();
  Vec out(dim(), 0);
  switch (rule_) {
    case TensorRule::left_free: {
      const std::size_t s = i / d, c = i % d, nd = right_.dim();
      const Vec y = right_.act(left_.ring().basis_element(c), unit_vector(nd, j));
      std::copy(y.begin(), y.end(), out.begin() + static_cast<std::ptrdiff_t>(s * nd));
      break;
    }
    case TensorRule::right_free: {
      const std::size_t t = j / d, c = j % d, md = left_.dim();
      const Vec x = left_.act(left_.ring().basis_element(c), unit_vector(md, i));
      std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(t * md));
      break;
    }
    case TensorRule::quotient:
      out = projection_->column(i * right_.dim() + j);
      break;
  }
  return out;
}

std::vector<TensorTerm> TensorSpace::representative(std::size_t q) const {
  const std::size_t d = left_.ring().dim();
  switch (rule_) {
    case TensorRule::left_free: {
      const std::size_t nd = right_.dim();
      return {{1, (q / nd) * d, q % nd}};
    }
    case TensorRule::right_free: {
      const std::size_t md = left_.dim();
      return {{1, q % md, (q / md) * d}};
    }
    case TensorRule::quotient: {
      const std::size_t u = section_units_.at(q);
      return {{1, u / right_.dim(), u % right_.dim()}};
    }
  }
  return {};
}

FieldMatrix TensorSpace::projection() const {
  if (rule_ == TensorRule::quotient) return *projection_;
  const std::size_t md = left_.dim(), nd = right_.dim();
  FieldMatrix p(left_.field(), dim(), md * nd);
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t j = 0; j < nd; ++j) p.set_column(i * nd + j, pure(i, j));
  return p;
}

namespace {

// Generic (f (x) g) on basis representatives, for small modules.
FieldMatrix tensor_generic(const TensorSpace& from, const TensorSpace& to, const FieldMatrix& f,
                           const FieldMatrix& g) {
  FieldMatrix out(from.left().field(), to.dim(), from.dim());
  const PrimeField& k = out.field();
  for (std::size_t q = 0; q < from.dim(); ++q)
    for (const auto& term : from.representative(q))
      for (std::size_t i2 = 0; i2 < f.rows(); ++i2) {
        const Elem a = f.at(i2, term.left);
        if (!a) continue;
        for (std::size_t j2 = 0; j2 < g.rows(); ++j2) {
          const Elem b = g.at(j2, term.right);
          if (b) add_vector(out, q, to.pure(i2, j2), k.mul(term.coef, k.mul(a, b)));
        }
      }
  return out;
}

}  // namespace

FieldMatrix tensor_left(const TensorSpace& from, const TensorSpace& to, const FieldMatrix& f) {
  const PrimeField& k = from.left().field();
  if (from.dim() == 0 || to.dim() == 0) return FieldMatrix(k, to.dim(), from.dim());
  if (from.rule() == TensorRule::left_free && to.rule() == TensorRule::left_free) {
    FieldMatrix out(k, to.dim(), from.dim());
    const FinModule& n = from.right();
    const std::size_t nd = n.dim();
    for (std::size_t t = 0; t < to.left().copies(); ++t)
      for (std::size_t s = 0; s < from.left().copies(); ++s) {
        const Vec r = r_entry(from.left(), f, t, s);
        bool nonzero = false;
        for (auto c : r) nonzero = nonzero || c;
        if (nonzero) n.add_action(out, t * nd, s * nd, r);
      }
    return out;
  }
  if (from.rule() == TensorRule::right_free && to.rule() == TensorRule::right_free)
    return repeat_diagonal(f, from.right().copies());
  return tensor_generic(from, to, f, FieldMatrix::identity(k, from.right().dim()));
}

FieldMatrix tensor_right(const TensorSpace& from, const TensorSpace& to, const FieldMatrix& g) {
  const PrimeField& k = from.left().field();
  if (from.dim() == 0 || to.dim() == 0) return FieldMatrix(k, to.dim(), from.dim());
  if (from.rule() == TensorRule::left_free && to.rule() == TensorRule::left_free)
    return repeat_diagonal(g, from.left().copies());
  if (from.rule() == TensorRule::right_free && to.rule() == TensorRule::right_free) {
    FieldMatrix out(k, to.dim(), from.dim());
    const FinModule& m = from.left();
    const std::size_t md = m.dim();
    for (std::size_t t2 = 0; t2 < to.right().copies(); ++t2)
      for (std::size_t t = 0; t < from.right().copies(); ++t) {
        const Vec r = r_entry(from.right(), g, t2, t);
        bool nonzero = false;
        for (auto c : r) nonzero = nonzero || c;
        if (nonzero) m.add_action(out, t2 * md, t * md, r);
      }
    return out;
  }
  return tensor_generic(from, to, FieldMatrix::identity(k, from.left().dim()), g);
}

}  // namespace gorentest
