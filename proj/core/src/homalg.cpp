#include "gorentest/homalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorentest {

namespace {

Vec slice(const Vec& v, std::size_t offset, std::size_t n) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(offset),
             v.begin() + static_cast<std::ptrdiff_t>(offset + n));
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

FinModule sum_of(const AlgebraPtr& r, const std::vector<FinModule>& parts) {
  return parts.empty() ? FinModule::zero(r) : direct_sum(parts);
}

void add_scaled(Vec& out, std::size_t offset, const Vec& v, Elem s, const PrimeField& k) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) out[offset + i] = k.add(out[offset + i], k.mul(v[i], s));
}

}  // namespace

// ---------------------------------------------------------------- Hom

const std::vector<HomSlot>& HomComplex::slots(int n) const {
  static const std::vector<HomSlot> none;
  if (!complex().in_window(n)) return none;
  return data_->slots[static_cast<std::size_t>(n - complex().lo())];
}

const HomSlot* HomComplex::slot(int n, int j) const {
  for (const auto& s : slots(n))
    if (s.j == j) return &s;
  return nullptr;
}

FieldMatrix HomComplex::component(int n, const Vec& v, int j) const {
  const HomSlot* s = slot(n, j);
  if (!s) return FieldMatrix(complex().field(), target().dim(j + n), source().dim(j));
  return s->space.to_map(slice(v, s->offset, s->space.dim()));
}

Vec HomComplex::encode(int n, const std::vector<std::pair<int, FieldMatrix>>& parts) const {
  Vec v(complex().dim(n), 0);
  for (const auto& [j, m] : parts) {
    const HomSlot* s = slot(n, j);
    if (!s) {
      if (!m.is_zero()) throw std::invalid_argument("encode: no constituent at this slot");
      continue;
    }
    const Vec c = s->space.from_map(m);
    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(s->offset));
  }
  return v;
}

FieldMatrix HomComplex::embedding(int n, int j) const {
  const HomSlot* s = slot(n, j);
  const std::size_t w = s ? s->space.dim() : 0;
  FieldMatrix e(complex().field(), complex().dim(n), w);
  for (std::size_t q = 0; q < w; ++q) e.set(s->offset + q, q, 1);
  return e;
}

HomComplex hom_complex(const ChainComplex& x, const ChainComplex& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("complexes over different rings");
  const PrimeField& k = x.field();
  const int lo = y.lo() - x.hi(), hi = y.hi() - x.lo();
  std::vector<std::vector<HomSlot>> slots;
  std::vector<FinModule> mods;
  for (int n = lo; n <= hi; ++n) {
    std::vector<HomSlot> row;
    std::vector<FinModule> parts;
    std::size_t offset = 0;
    for (int j = x.lo(); j <= x.hi(); ++j) {
      if (x.dim(j) == 0 || y.dim(j + n) == 0) continue;
      HomSpace h = hom_module(x.module(j), y.module(j + n));
      if (h.dim() == 0) continue;
      parts.push_back(h.module());
      const std::size_t w = h.dim();
      row.push_back({j, std::move(h), offset});
      offset += w;
    }
    mods.push_back(sum_of(x.algebra(), parts));
    slots.push_back(std::move(row));
  }
  auto find = [&](int n, int j) -> const HomSlot* {
    for (const auto& s : slots[static_cast<std::size_t>(n - lo)])
      if (s.j == j) return &s;
    return nullptr;
  };
  std::vector<FieldMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    FieldMatrix d(k, mods[static_cast<std::size_t>(n - 1 - lo)].dim(),
                  mods[static_cast<std::size_t>(n - lo)].dim());
    const Elem pre_sign = k.neg(k.sign(n));
    for (const auto& s : slots[static_cast<std::size_t>(n - lo)]) {
      if (const HomSlot* t = find(n - 1, s.j))
        d.add_block(t->offset, s.offset, hom_post(s.space, t->space, y.differential(s.j + n)));
      if (const HomSlot* t = find(n - 1, s.j + 1))
        d.add_block(t->offset, s.offset, hom_pre(s.space, t->space, x.differential(s.j + 1)),
                    pre_sign);
    }
    diffs.push_back(std::move(d));
  }
  HomComplex h;
  auto data = std::make_shared<HomComplex::Data>(HomComplex::Data{
      x, y, ChainComplex(lo, std::move(mods), std::move(diffs), x.complete() && y.complete()),
      std::move(slots)});
  h.data_ = std::move(data);
  return h;
}

// ---------------------------------------------------------------- tensor

const std::vector<TensorSlot>& TensorComplex::slots(int n) const {
  static const std::vector<TensorSlot> none;
  if (!complex().in_window(n)) return none;
  return data_->slots[static_cast<std::size_t>(n - complex().lo())];
}

const TensorSlot* TensorComplex::slot(int n, int i) const {
  for (const auto& s : slots(n))
    if (s.i == i) return &s;
  return nullptr;
}

Vec TensorComplex::pure(int n, int i, std::size_t a, std::size_t b) const {
  Vec v(complex().dim(n), 0);
  const TensorSlot* s = slot(n, i);
  if (!s) return v;
  const Vec c = s->space.pure(a, b);
  std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(s->offset));
  return v;
}

FieldMatrix TensorComplex::embedding(int n, int i) const {
  const TensorSlot* s = slot(n, i);
  const std::size_t w = s ? s->space.dim() : 0;
  FieldMatrix e(complex().field(), complex().dim(n), w);
  for (std::size_t q = 0; q < w; ++q) e.set(s->offset + q, q, 1);
  return e;
}

TensorComplex tensor_complex(const ChainComplex& x, const ChainComplex& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("complexes over different rings");
  const PrimeField& k = x.field();
  const int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
  std::vector<std::vector<TensorSlot>> slots;
  std::vector<FinModule> mods;
  for (int n = lo; n <= hi; ++n) {
    std::vector<TensorSlot> row;
    std::vector<FinModule> parts;
    std::size_t offset = 0;
    for (int i = x.lo(); i <= x.hi(); ++i) {
      if (x.dim(i) == 0 || y.dim(n - i) == 0) continue;
      TensorSpace t = tensor_module(x.module(i), y.module(n - i));
      if (t.dim() == 0) continue;
      parts.push_back(t.module());
      const std::size_t w = t.dim();
      row.push_back({i, std::move(t), offset});
      offset += w;
    }
    mods.push_back(sum_of(x.algebra(), parts));
    slots.push_back(std::move(row));
  }
  auto find = [&](int n, int i) -> const TensorSlot* {
    for (const auto& s : slots[static_cast<std::size_t>(n - lo)])
      if (s.i == i) return &s;
    return nullptr;
  };
  std::vector<FieldMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    FieldMatrix d(k, mods[static_cast<std::size_t>(n - 1 - lo)].dim(),
                  mods[static_cast<std::size_t>(n - lo)].dim());
    for (const auto& s : slots[static_cast<std::size_t>(n - lo)]) {
      if (const TensorSlot* t = find(n - 1, s.i - 1))
        d.add_block(t->offset, s.offset, tensor_left(s.space, t->space, x.differential(s.i)));
      if (const TensorSlot* t = find(n - 1, s.i))
        d.add_block(t->offset, s.offset, tensor_right(s.space, t->space, y.differential(n - s.i)),
                    k.sign(s.i));
    }
    diffs.push_back(std::move(d));
  }
  TensorComplex t;
  t.data_ = std::make_shared<TensorComplex::Data>(TensorComplex::Data{
      x, y, ChainComplex(lo, std::move(mods), std::move(diffs), x.complete() && y.complete()),
      std::move(slots)});
  return t;
}

// ---------------------------------------------------------------- functoriality

ChainMap hom_post(const HomComplex& from, const HomComplex& to, const ChainMap& g) {
  const ChainComplex& a = from.complex();
  std::vector<FieldMatrix> comps;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    FieldMatrix c(a.field(), to.complex().dim(n), a.dim(n));
    for (const auto& s : from.slots(n))
      if (const HomSlot* t = to.slot(n, s.j))
        c.add_block(t->offset, s.offset, hom_post(s.space, t->space, g.component(s.j + n)));
    comps.push_back(std::move(c));
  }
  return ChainMap(a, to.complex(), std::move(comps));
}

ChainMap hom_pre(const HomComplex& from, const HomComplex& to, const ChainMap& f) {
  const ChainComplex& a = from.complex();
  std::vector<FieldMatrix> comps;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    FieldMatrix c(a.field(), to.complex().dim(n), a.dim(n));
    for (const auto& s : from.slots(n))
      if (const HomSlot* t = to.slot(n, s.j))
        c.add_block(t->offset, s.offset, hom_pre(s.space, t->space, f.component(s.j)));
    comps.push_back(std::move(c));
  }
  return ChainMap(a, to.complex(), std::move(comps));
}

ChainMap tensor_left(const TensorComplex& from, const TensorComplex& to, const ChainMap& f) {
  const ChainComplex& a = from.complex();
  std::vector<FieldMatrix> comps;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    FieldMatrix c(a.field(), to.complex().dim(n), a.dim(n));
    for (const auto& s : from.slots(n))
      if (const TensorSlot* t = to.slot(n, s.i))
        c.add_block(t->offset, s.offset, tensor_left(s.space, t->space, f.component(s.i)));
    comps.push_back(std::move(c));
  }
  return ChainMap(a, to.complex(), std::move(comps));
}

ChainMap tensor_right(const TensorComplex& from, const TensorComplex& to, const ChainMap& g) {
  const ChainComplex& a = from.complex();
  std::vector<FieldMatrix> comps;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    FieldMatrix c(a.field(), to.complex().dim(n), a.dim(n));
    for (const auto& s : from.slots(n))
      if (const TensorSlot* t = to.slot(n, s.i))
        c.add_block(t->offset, s.offset, tensor_right(s.space, t->space, g.component(n - s.i)));
    comps.push_back(std::move(c));
  }
  return ChainMap(a, to.complex(), std::move(comps));
}

// ---------------------------------------------------------------- morphisms

ChainMap homothety(const HomComplex& end) {
  const ChainComplex& x = end.source();
  const AlgebraPtr& r = x.algebra();
  const ChainComplex unit = ChainComplex::concentrated(FinModule::free(r, 1));
  FieldMatrix c(x.field(), end.complex().dim(0), r->dim());
  for (std::size_t e = 0; e < r->dim(); ++e) {
    std::vector<std::pair<int, FieldMatrix>> parts;
    for (int j = x.lo(); j <= x.hi(); ++j)
      if (x.dim(j)) parts.emplace_back(j, x.module(j).act_by(r->basis_element(e)));
    c.set_column(e, end.encode(0, parts));
  }
  return ChainMap(unit, end.complex(), {std::move(c)});
}

ChainMap evaluation(const HomComplex& hom, const TensorComplex& t) {
  const ChainComplex& src = t.complex();
  const ChainComplex& d = hom.target();
  const PrimeField& k = src.field();
  std::vector<FieldMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    FieldMatrix c(k, d.dim(n), src.dim(n));
    for (const auto& s : t.slots(n)) {
      const int i = s.i, j = n - s.i;
      const std::size_t hdim = hom.complex().dim(i);
      for (std::size_t q = 0; q < s.space.dim(); ++q) {
        Vec col(d.dim(n), 0);
        for (const auto& term : s.space.representative(q)) {
          const FieldMatrix phi = hom.component(i, unit_vector(hdim, term.left), j);
          add_scaled(col, 0, phi.column(term.right), term.coef, k);
        }
        c.set_column(s.offset + q, col);
      }
    }
    comps.push_back(std::move(c));
  }
  return ChainMap(src, d, std::move(comps));
}

Omega tensor_evaluation_omega(const ChainComplex& p, const ChainComplex& x, const ChainComplex& b) {
  for (int j = p.lo(); j <= p.hi(); ++j)
    if (!p.module(j).is_free()) throw std::invalid_argument("omega needs a complex of free modules");
  HomComplex hom_px = hom_complex(p, x);
  TensorComplex source = tensor_complex(hom_px.complex(), b);
  TensorComplex x_b = tensor_complex(x, b);
  HomComplex target = hom_complex(p, x_b.complex());
  const ChainComplex& src = source.complex();
  const PrimeField& k = src.field();
  std::vector<FieldMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    FieldMatrix c(k, target.complex().dim(n), src.dim(n));
    for (const auto& s : source.slots(n)) {
      const int i = s.i;
      for (std::size_t q = 0; q < s.space.dim(); ++q) {
        Vec col(target.complex().dim(n), 0);
        for (const auto& term : s.space.representative(q)) {
          const HomSlot* h = nullptr;
          for (const auto& cand : hom_px.slots(i))
            if (term.left >= cand.offset && term.left < cand.offset + cand.space.dim()) h = &cand;
          if (!h) continue;
          const int j = h->j;
          const FieldMatrix phi = h->space.basis_map(term.left - h->offset);
          FieldMatrix g(k, x_b.complex().dim(j + n), p.dim(j));
          for (std::size_t pc = 0; pc < p.dim(j); ++pc) {
            const Vec v = phi.column(pc);
            Vec out(g.rows(), 0);
            for (std::size_t xi = 0; xi < v.size(); ++xi)
              if (v[xi]) add_scaled(out, 0, x_b.pure(j + n, j + i, xi, term.right), v[xi], k);
            g.set_column(pc, out);
          }
          const Elem sign = k.mul(term.coef, k.sign(static_cast<long long>(j) * (n - i)));
          add_scaled(col, 0, target.encode(n, {{j, g}}), sign, k);
        }
        c.set_column(s.offset + q, col);
      }
    }
    comps.push_back(std::move(c));
  }
  ChainMap map(src, target.complex(), std::move(comps));
  return {std::move(hom_px), std::move(source), std::move(x_b), std::move(target), std::move(map)};
}

Adjunction adjunction(const ChainComplex& x, const ChainComplex& y, const ChainComplex& z) {
  TensorComplex xy = tensor_complex(x, y);
  HomComplex source = hom_complex(xy.complex(), z);
  HomComplex hyz = hom_complex(y, z);
  HomComplex target = hom_complex(x, hyz.complex());
  const ChainComplex& src = source.complex();
  const PrimeField& k = src.field();
  std::vector<FieldMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    FieldMatrix c(k, target.complex().dim(n), src.dim(n));
    for (std::size_t q = 0; q < src.dim(n); ++q) {
      const Vec f = unit_vector(src.dim(n), q);
      std::vector<std::pair<int, FieldMatrix>> parts;
      for (int a = x.lo(); a <= x.hi(); ++a) {
        if (x.dim(a) == 0 || hyz.complex().dim(a + n) == 0) continue;
        FieldMatrix g(k, hyz.complex().dim(a + n), x.dim(a));
        std::vector<std::pair<int, FieldMatrix>> fm;
        for (int bdeg = y.lo(); bdeg <= y.hi(); ++bdeg)
          fm.emplace_back(bdeg, source.component(n, f, a + bdeg));
        for (std::size_t xi = 0; xi < x.dim(a); ++xi) {
          std::vector<std::pair<int, FieldMatrix>> inner;
          for (const auto& [bdeg, fab] : fm) {
            if (y.dim(bdeg) == 0 || z.dim(a + bdeg + n) == 0) continue;
            FieldMatrix h(k, z.dim(a + bdeg + n), y.dim(bdeg));
            for (std::size_t yi = 0; yi < y.dim(bdeg); ++yi)
              h.set_column(yi, fab.apply(xy.pure(a + bdeg, a, xi, yi)));
            inner.emplace_back(bdeg, std::move(h));
          }
          g.set_column(xi, hyz.encode(a + n, inner));
        }
        parts.emplace_back(a, std::move(g));
      }
      c.set_column(q, target.encode(n, parts));
    }
    comps.push_back(std::move(c));
  }
  ChainMap map(src, target.complex(), std::move(comps));
  return {std::move(xy), std::move(source), std::move(hyz), std::move(target), std::move(map)};
}

HomComplex dualize(const ChainComplex& x, const FinModule& e) {
  return hom_complex(x, ChainComplex::concentrated(e));
}

DoubleDual double_dual(const ChainComplex& x, const FinModule& e) {
  HomComplex dual = dualize(x, e);
  HomComplex bidual = dualize(dual.complex(), e);
  const PrimeField& k = x.field();
  std::vector<FieldMatrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    FieldMatrix c(k, bidual.complex().dim(n), x.dim(n));
    const std::size_t dd = dual.complex().dim(-n);
    std::vector<FieldMatrix> phis;
    for (std::size_t q = 0; q < dd; ++q) phis.push_back(dual.component(-n, unit_vector(dd, q), n));
    for (std::size_t xi = 0; xi < x.dim(n); ++xi) {
      FieldMatrix g(k, e.dim(), dd);
      for (std::size_t q = 0; q < dd; ++q) g.set_column(q, phis[q].column(xi));
      if (n % 2) g = g.scaled(k.neg(1));
      c.set_column(xi, bidual.encode(n, {{-n, g}}));
    }
    comps.push_back(std::move(c));
  }
  ChainMap map(x, bidual.complex(), std::move(comps));
  return {std::move(dual), std::move(bidual), std::move(map)};
}

ChainMap hom_unitor(const HomComplex& h) {
  const ChainComplex& src = h.complex();
  const ChainComplex& y = h.target();
  std::vector<FieldMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    FieldMatrix c(src.field(), y.dim(n), src.dim(n));
    for (std::size_t q = 0; q < src.dim(n); ++q)
      c.set_column(q, h.component(n, unit_vector(src.dim(n), q), 0).column(0));
    comps.push_back(std::move(c));
  }
  return ChainMap(src, y, std::move(comps));
}

ChainMap tensor_unitor(const TensorComplex& t) {
  const ChainComplex& src = t.complex();
  const ChainComplex& x = t.left();
  const PrimeField& k = src.field();
  std::vector<FieldMatrix> comps;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    FieldMatrix c(k, x.dim(n), src.dim(n));
    if (const TensorSlot* s = t.slot(n, n)) {
      const FinModule m = x.module(n);
      for (std::size_t q = 0; q < s->space.dim(); ++q) {
        Vec col(x.dim(n), 0);
        for (const auto& term : s->space.representative(q))
          add_scaled(col, 0, m.act(m.ring().basis_element(term.right), unit_vector(m.dim(), term.left)),
                     term.coef, k);
        c.set_column(s->offset + q, col);
      }
    }
    comps.push_back(std::move(c));
  }
  return ChainMap(src, x, std::move(comps));
}

}  // namespace gorentest
