#include "gorentest/resolve.hpp"

namespace gorentest {

namespace {

// Columns s*d + c hold e_c . lift_s.
FieldMatrix cover_map(const FinModule& m, const Generators& g) {
  const FinLocalAlgebra& r = m.ring();
  const std::size_t d = r.dim();
  FieldMatrix c(m.field(), m.dim(), g.count * d);
  for (std::size_t s = 0; s < g.count; ++s) {
    const Vec lift = g.lifts.column(s);
    for (std::size_t e = 0; e < d; ++e) c.set_column(s * d + e, m.act(r.basis_element(e), lift));
  }
  return c;
}

}  // namespace

FreeResolution minimal_resolution(const FinModule& m, std::size_t depth, std::size_t budget) {
  if (depth < 1) throw std::invalid_argument("resolution depth must be at least 1");
  const AlgebraPtr& r = m.algebra();
  const std::size_t d = r->dim();
  std::vector<std::size_t> betti;
  std::vector<FinModule> mods;
  std::vector<FieldMatrix> diffs;
  std::size_t total = 0;

  auto add_free = [&](std::size_t b) {
    total += b * d;
    if (total > budget)
      throw ResourceError("resolution exceeds the dimension budget of " + std::to_string(budget) +
                          " at degree " + std::to_string(betti.size()));
    betti.push_back(b);
    mods.push_back(FinModule::free(r, b));
  };

  Generators g = min_gens(m);
  add_free(g.count);
  const FieldMatrix aug = cover_map(m, g);
  Submodule syz = kernel_module(ModuleMap(mods[0], m, aug));
  bool terminated = syz.module.is_zero();
  for (std::size_t i = 1; i <= depth && !terminated; ++i) {
    g = min_gens(syz.module);
    add_free(g.count);
    const FieldMatrix cover = cover_map(syz.module, g);
    diffs.push_back(compose(syz.inclusion, cover));
    syz = kernel_module(ModuleMap(mods[i], syz.module, cover));
    terminated = syz.module.is_zero();
  }
  std::vector<FieldMatrix> comps{aug};
  for (std::size_t i = 1; i < mods.size(); ++i) comps.emplace_back(m.field(), 0, mods[i].dim());
  ChainComplex p(0, std::move(mods), std::move(diffs), terminated);
  ChainMap augmentation(p, ChainComplex::concentrated(m), std::move(comps));
  return {m, depth, std::move(p), std::move(augmentation), terminated, std::move(betti)};
}

bool is_minimal(const FreeResolution& p) {
  const ChainComplex& c = p.complex;
  for (int i = c.lo() + 1; i <= c.hi(); ++i) {
    const FieldMatrix dmat = c.differential(i);
    const FinModule src = c.module(i);
    for (std::size_t s = 0; s < src.copies(); ++s)
      for (std::size_t t = 0; t < c.module(i - 1).copies(); ++t)
        if (r_entry(src, dmat, t, s)[0] != 0) return false;
  }
  return true;
}

std::string to_string(ScreenVerdict v) {
  switch (v) {
    case ScreenVerdict::gorenstein: return "gorenstein";
    case ScreenVerdict::non_gorenstein_unconfirmed: return "non_gorenstein_unconfirmed";
    case ScreenVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Screen betti_gorenstein_screen(const AlgebraPtr& r, std::size_t depth, std::size_t budget) {
  FreeResolution p = minimal_resolution(FinModule::injective_hull(r), depth, budget);
  ScreenVerdict v = ScreenVerdict::inconclusive;
  if (p.terminated) v = ScreenVerdict::gorenstein;
  else if (p.betti.front() > 1) v = ScreenVerdict::non_gorenstein_unconfirmed;
  return {v, std::move(p)};
}

}  // namespace gorentest
