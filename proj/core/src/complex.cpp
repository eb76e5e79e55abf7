#include "gorentest/complex.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace gorentest {

namespace {

std::mutex rank_mutex;

std::string deg(int n) { return std::to_string(n); }

}  // namespace

ChainComplex::ChainComplex(int lo, std::vector<FinModule> modules, std::vector<FieldMatrix> diffs,
                           bool complete) {
  if (modules.empty()) throw ComplexError("complex needs at least one degree");
  if (diffs.size() + 1 != modules.size()) throw ComplexError("differential count mismatch");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].rows() != modules[k].dim() || diffs[k].cols() != modules[k + 1].dim())
      throw ComplexError("differential out of degree " + deg(lo + static_cast<int>(k) + 1) +
                         " has the wrong shape");
    if (modules[k].algebra() != modules.front().algebra())
      throw ComplexError("modules over different rings");
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!compose(diffs[k], diffs[k + 1]).is_zero())
      throw ComplexError("d o d != 0 at degree " + deg(lo + static_cast<int>(k) + 2));
  auto data = std::make_shared<Data>();
  data->lo = lo;
  data->complete = complete;
  data->ranks.assign(diffs.size(), -1);
  data->modules = std::move(modules);
  data->diffs = std::move(diffs);
  data_ = std::move(data);
}

ChainComplex ChainComplex::concentrated(const FinModule& m, int degree) {
  return ChainComplex(degree, {m}, {}, true);
}

FinModule ChainComplex::module(int n) const {
  return in_window(n) ? data_->modules[index(n)] : FinModule::zero(algebra());
}

FieldMatrix ChainComplex::differential(int n) const {
  if (n > lo() && n <= hi()) return data_->diffs[index(n) - 1];
  return FieldMatrix(field(), dim(n - 1), dim(n));
}

std::size_t ChainComplex::differential_rank(int n) const {
  if (!(n > lo() && n <= hi())) return 0;
  const std::size_t k = index(n) - 1;
  {
    std::lock_guard<std::mutex> lock(rank_mutex);
    if (data_->ranks[k] >= 0) return static_cast<std::size_t>(data_->ranks[k]);
  }
  const std::size_t r = rank(data_->diffs[k]);
  std::lock_guard<std::mutex> lock(rank_mutex);
  data_->ranks[k] = static_cast<long long>(r);
  return r;
}

std::pair<int, int> ChainComplex::trusted(int guard) const {
  if (complete()) return {lo(), hi()};
  return {lo() + guard, hi() - guard};
}

// ---------------------------------------------------------------- maps

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<FieldMatrix> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
  if (source_.algebra() != target_.algebra()) throw ComplexError("chain map between rings");
  if (comps_.size() != static_cast<std::size_t>(source_.hi() - source_.lo() + 1))
    throw ComplexError("chain map needs one component per source degree");
  for (int n = source_.lo(); n <= source_.hi(); ++n) {
    const FieldMatrix& c = comps_[static_cast<std::size_t>(n - source_.lo())];
    if (c.rows() != target_.dim(n) || c.cols() != source_.dim(n))
      throw ComplexError("chain map component at degree " + deg(n) + " has the wrong shape");
  }
  const int a = std::min(source_.lo(), target_.lo()), b = std::max(source_.hi(), target_.hi()) + 1;
  for (int n = a; n <= b; ++n) {
    if (source_.dim(n) == 0 && source_.dim(n - 1) == 0) continue;
    const FieldMatrix lhs = compose(target_.differential(n), component(n));
    const FieldMatrix rhs = compose(component(n - 1), source_.differential(n));
    if (!(lhs == rhs)) throw ComplexError("not a chain map at degree " + deg(n));
  }
}

ChainMap ChainMap::identity(const ChainComplex& x) {
  std::vector<FieldMatrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n) comps.push_back(FieldMatrix::identity(x.field(), x.dim(n)));
  return ChainMap(x, x, std::move(comps));
}

FieldMatrix ChainMap::component(int n) const {
  if (source_.in_window(n)) return comps_[static_cast<std::size_t>(n - source_.lo())];
  return FieldMatrix(source_.field(), target_.dim(n), source_.dim(n));
}

bool ChainMap::is_degreewise_iso() const {
  const int a = std::min(source_.lo(), target_.lo()), b = std::max(source_.hi(), target_.hi());
  for (int n = a; n <= b; ++n) {
    if (source_.dim(n) != target_.dim(n)) return false;
    if (rank(component(n)) != source_.dim(n)) return false;
  }
  return true;
}

bool ChainMap::is_linear() const {
  for (int n = source_.lo(); n <= source_.hi(); ++n)
    if (!ModuleMap(source_.module(n), target_.module(n), component(n)).is_linear()) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::vector<FieldMatrix> comps;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n)
    comps.push_back(compose(g.component(n), f.component(n)));
  return ChainMap(f.source(), g.target(), std::move(comps));
}

// ---------------------------------------------------------------- homology

Homology homology(const ChainComplex& x, int n) {
  const bool boundary = !x.complete() && (n - 1 < x.lo() || n + 1 > x.hi());
  const FinModule cn = x.module(n);
  const Submodule z = kernel_module(ModuleMap(cn, x.module(n - 1), x.differential(n)));
  if (z.module.is_zero()) return {z.module, 0, boundary};
  const FieldMatrix boundaries =
      compose(left_inverse(z.inclusion), x.differential(n + 1));
  const QuotientModule h = quotient_module(z.module, boundaries);
  return {h.module, h.module.dim(), boundary};
}

std::size_t homology_dim(const ChainComplex& x, int n) {
  return x.dim(n) - x.differential_rank(n) - x.differential_rank(n + 1);
}

ChainComplex suspension(const ChainComplex& x, int k) {
  std::vector<FinModule> mods;
  std::vector<FieldMatrix> diffs;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    mods.push_back(x.module(n));
    if (n > x.lo()) diffs.push_back(k % 2 ? x.differential(n).scaled(x.field().neg(1)) : x.differential(n));
  }
  return ChainComplex(x.lo() + k, std::move(mods), std::move(diffs), x.complete());
}

ChainMap suspension(const ChainMap& f, int k) {
  std::vector<FieldMatrix> comps;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) comps.push_back(f.component(n));
  return ChainMap(suspension(f.source(), k), suspension(f.target(), k), std::move(comps));
}

Cone mapping_cone(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const PrimeField& k = x.field();
  const int lo = std::min(y.lo(), x.lo() + 1), hi = std::max(y.hi(), x.hi() + 1);
  std::vector<FinModule> mods;
  std::vector<FieldMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    mods.push_back(direct_sum({y.module(n), x.module(n - 1)}));
    if (n == lo) continue;
    FieldMatrix d(k, y.dim(n - 1) + x.dim(n - 2), y.dim(n) + x.dim(n - 1));
    d.add_block(0, 0, y.differential(n));
    d.add_block(0, y.dim(n), f.component(n - 1));
    d.add_block(y.dim(n - 1), y.dim(n), x.differential(n - 1), k.neg(1));
    diffs.push_back(std::move(d));
  }
  ChainComplex cone(lo, std::move(mods), std::move(diffs), x.complete() && y.complete());

  std::vector<FieldMatrix> into, out;
  for (int n = y.lo(); n <= y.hi(); ++n) {
    FieldMatrix m(k, cone.dim(n), y.dim(n));
    m.add_block(0, 0, FieldMatrix::identity(k, y.dim(n)));
    into.push_back(std::move(m));
  }
  const ChainComplex sx = suspension(x);
  for (int n = lo; n <= hi; ++n) {
    FieldMatrix m(k, sx.dim(n), cone.dim(n));
    m.add_block(0, y.dim(n), FieldMatrix::identity(k, x.dim(n - 1)));
    out.push_back(std::move(m));
  }
  ChainMap into_map(y, cone, std::move(into));
  ChainMap out_map(cone, sx, std::move(out));
  return {std::move(cone), std::move(into_map), std::move(out_map)};
}

Truncation soft_truncate_left(const ChainComplex& x, int n) {
  if (!x.in_window(n)) throw ComplexError("truncation degree outside the window");
  const PrimeField& k = x.field();
  const QuotientModule q =
      quotient_module(x.module(n), x.differential(n + 1));
  std::vector<FinModule> mods;
  std::vector<FieldMatrix> diffs, comps;
  for (int i = x.lo(); i <= n; ++i) {
    mods.push_back(i == n ? q.module : x.module(i));
    if (i > x.lo()) diffs.push_back(i == n ? compose(x.differential(n), q.section) : x.differential(i));
  }
  ChainComplex b(x.lo(), std::move(mods), std::move(diffs), x.complete());
  for (int i = x.lo(); i <= x.hi(); ++i) {
    if (i < n) comps.push_back(FieldMatrix::identity(k, x.dim(i)));
    else if (i == n) comps.push_back(q.projection);
    else comps.push_back(FieldMatrix(k, 0, x.dim(i)));
  }
  ChainMap map(x, b, std::move(comps));
  return {std::move(b), std::move(map)};
}

namespace {

std::pair<int, int> trusted_range(const ChainComplex& s, const ChainComplex& t, int guard) {
  if (s.complete() && t.complete()) return {std::min(s.lo(), t.lo()), std::max(s.hi(), t.hi())};
  if (s.complete()) return t.trusted(guard);
  if (t.complete()) return s.trusted(guard);
  const auto a = s.trusted(guard), b = t.trusted(guard);
  return {std::max(a.first, b.first), std::min(a.second, b.second)};
}

struct Induced {
  std::size_t source_dim, target_dim, rank;
};

Induced induced_map(const ChainMap& f, int n) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  const FieldMatrix cycles = rank_profile(s.differential(n)).kernel_basis;
  const FieldMatrix image = compose(f.component(n), cycles);
  const FieldMatrix bounds = t.differential(n + 1);
  const FieldMatrix parts[] = {bounds, image};
  const std::size_t rb = t.differential_rank(n + 1);
  return {homology_dim(s, n), homology_dim(t, n), rank(hstack(parts)) - rb};
}

}  // namespace

QuasiIsoReport is_quasi_iso(const ChainMap& f, int guard) {
  const Cone cone = mapping_cone(f);
  const auto [a, b] = trusted_range(f.source(), f.target(), guard);
  QuasiIsoReport report{true, {}};
  if (a > b) return report;
  std::vector<Induced> ind;
  for (int n = a - 1; n <= b; ++n) ind.push_back(induced_map(f, n));
  for (int n = a; n <= b; ++n) {
    const Induced& cur = ind[static_cast<std::size_t>(n - a + 1)];
    const Induced& prev = ind[static_cast<std::size_t>(n - a)];
    const std::size_t cdim = homology_dim(cone.complex, n);
    // Long exact sequence: H_n(Cone) = coker H_n(f) (+) ker H_{n-1}(f).
    const std::size_t expected = (cur.target_dim - cur.rank) + (prev.source_dim - prev.rank);
    if (cdim != expected)
      throw ComplexError("cone homology disagrees with the induced map at degree " + deg(n));
    const bool iso = cur.rank == cur.source_dim && cur.rank == cur.target_dim;
    report.quasi_iso = report.quasi_iso && iso;
    report.degrees.push_back({n, cur.source_dim, cur.target_dim, cur.rank, cdim});
  }
  return report;
}

std::vector<std::pair<int, std::size_t>> acyclicity_report(const ChainComplex& x, int guard) {
  std::vector<std::pair<int, std::size_t>> out;
  const auto [a, b] = x.trusted(guard);
  for (int n = a; n <= b; ++n) out.emplace_back(n, homology_dim(x, n));
  return out;
}

}  // namespace gorentest
