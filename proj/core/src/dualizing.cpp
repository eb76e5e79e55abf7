#include "gorentest/dualizing.hpp"

#include "gorentest/homalg.hpp"
#include "gorentest/resolve.hpp"

namespace gorentest {

DualizingModule matlis_dual(const AlgebraPtr& r) { return {r, FinModule::injective_hull(r)}; }

FinModule as_general(const FinModule& m) {
  if (m.is_zero()) return m;
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < m.ring().dim(); ++i) action.push_back(m.action(i));
  return FinModule::from_action(m.algebra(), std::move(action));
}

DualizingReport check_dualizing_axioms(const DualizingModule& d, std::size_t depth) {
  DualizingReport rep;
  const AlgebraPtr& r = d.algebra;
  const FinModule e = as_general(d.module);

  const HomSpace end = hom_module(e, e);
  FieldMatrix chi(r->field(), end.dim(), r->dim());
  for (std::size_t i = 0; i < r->dim(); ++i)
    chi.set_column(i, end.from_map(e.act_by(r->basis_element(i))));
  rep.homothety_bijective = end.dim() == r->dim() && rank(chi) == r->dim();
  if (!rep.homothety_bijective) rep.violations.push_back("homothety R -> Hom(D, D) is not bijective");

  rep.socle_dim = hom_module(FinModule::residue_field(r), e).dim();
  if (rep.socle_dim != 1) rep.violations.push_back("dim Hom(k, D) != 1");

  const FreeResolution q = minimal_resolution(FinModule::residue_field(r), depth);
  const HomComplex h = hom_complex(q.complex, ChainComplex::concentrated(d.module));
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t dim = homology_dim(h.complex(), -static_cast<int>(i));
    rep.ext_k.push_back(dim);
    if (i == 0 && dim != 1) rep.violations.push_back("dim H_0 Hom(Q', D) != 1");
    if (i > 0 && dim != 0)
      rep.violations.push_back("H_-" + std::to_string(i) + " Hom(Q', D) != 0");
  }
  return rep;
}

}  // namespace gorentest
