#include "gorentest/detector.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

namespace gorentest {

namespace {

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

std::vector<Evidence> report(const ChainComplex& x, int guard) {
  std::vector<Evidence> out;
  for (const auto& [n, dim] : acyclicity_report(x, guard)) out.push_back({n, dim});
  return out;
}

bool all_zero(const std::vector<Evidence>& ev) {
  return std::all_of(ev.begin(), ev.end(), [](const Evidence& e) { return e.dim == 0; });
}

// E[0] -> Hom(P', P' (x) E), e -> (p -> p (x) e).
ChainComplex build_omega_route(const Bundle& b) {
  const ChainComplex& p = b.resolution.complex;
  const ChainComplex e0 = ChainComplex::concentrated(b.e);
  const TensorComplex pe = tensor_complex(p, e0);
  const HomComplex target = hom_complex(p, pe.complex());
  const PrimeField& k = p.field();
  FieldMatrix eta(k, target.complex().dim(0), b.e.dim());
  for (std::size_t e = 0; e < b.e.dim(); ++e) {
    std::vector<std::pair<int, FieldMatrix>> parts;
    for (int j = p.lo(); j <= p.hi(); ++j) {
      FieldMatrix g(k, pe.complex().dim(j), p.dim(j));
      for (std::size_t c = 0; c < p.dim(j); ++c) g.set_column(c, pe.pure(j, j, c, e));
      parts.emplace_back(j, std::move(g));
    }
    eta.set_column(e, target.encode(0, parts));
  }
  const ChainMap map(e0, target.complex(), {std::move(eta)});
  return mapping_cone(map).complex;
}

}  // namespace

struct Bundle::Derived {
  std::once_flag f_kte, f_omega, f_khr, f_hem, f_heke;
  std::optional<ChainComplex> kte, omega, khr, hem, heke;
};

const ChainComplex& Bundle::k_tensor_e() const {
  std::call_once(derived->f_kte, [&] {
    derived->kte = tensor_complex(k.complex, ChainComplex::concentrated(e)).complex();
  });
  return *derived->kte;
}

const ChainComplex& Bundle::omega_route() const {
  std::call_once(derived->f_omega, [&] { derived->omega = build_omega_route(*this); });
  return *derived->omega;
}

const ChainComplex& Bundle::k_hom_r() const {
  std::call_once(derived->f_khr, [&] {
    derived->khr =
        hom_complex(k.complex, ChainComplex::concentrated(FinModule::free(ring, 1))).complex();
  });
  return *derived->khr;
}

const ChainComplex& Bundle::hom_e_m() const {
  std::call_once(derived->f_hem, [&] {
    derived->hem = hom_complex(ChainComplex::concentrated(e), m.complex).complex();
  });
  return *derived->hem;
}

const ChainComplex& Bundle::hom_e_k_e() const {
  std::call_once(derived->f_heke, [&] {
    const HomComplex dual = dualize(k.complex, e);
    derived->heke = hom_complex(ChainComplex::concentrated(e), dual.complex()).complex();
  });
  return *derived->heke;
}

std::size_t bundle_size_estimate(const std::vector<std::size_t>& betti, std::size_t ring_dim) {
  std::size_t s = 0;
  for (auto b : betti) s += b * b;
  return s * ring_dim;
}

Bundle build_bundle(const AlgebraPtr& r, std::size_t depth, int guard, std::size_t budget) {
  if (depth < 2) throw std::invalid_argument("bundle depth must be at least 2");
  FinModule e = FinModule::injective_hull(r);
  FreeResolution res = minimal_resolution(e, depth, budget);
  const std::size_t est = bundle_size_estimate(res.betti, r->dim());
  if (est > budget)
    throw ResourceError("test complexes need about " + std::to_string(est) +
                        " dimensions in degree 0, over the budget of " + std::to_string(budget));
  const ChainComplex& p = res.complex;
  const ChainComplex e0 = ChainComplex::concentrated(e);
  HomComplex end = hom_complex(p, p);
  ChainMap chi = homothety(end);
  Cone k = mapping_cone(chi);
  HomComplex hom_pe = hom_complex(p, e0);
  TensorComplex t = tensor_complex(hom_pe.complex(), p);
  ChainMap eps = evaluation(hom_pe, t);
  Cone m = mapping_cone(eps);
  HomComplex end_e = hom_complex(e0, e0);
  ChainMap chi_e = homothety(end_e);
  Cone c = mapping_cone(chi_e);
  return Bundle{r,      depth,         guard,          std::move(e),     std::move(res),
                std::move(end), std::move(chi), std::move(k), std::move(hom_pe), std::move(t),
                std::move(eps), std::move(m),   std::move(end_e), std::move(chi_e), std::move(c),
                std::make_shared<Bundle::Derived>()};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::gorenstein: return "gorenstein";
    case Verdict::not_gorenstein: return "not_gorenstein";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::skipped: return "skipped";
  }
  return "inconclusive";
}

// ---------------------------------------------------------------- measurements

std::vector<Evidence> k_tensor_dims(const Bundle& b) {
  const std::vector<Evidence> direct = report(b.k_tensor_e(), b.guard);
  for (const auto& ev : direct)
    if (homology_dim(b.omega_route(), ev.degree) != ev.dim)
      throw InternalError("K (x) E: direct and tensor-evaluation routes disagree at degree " +
                          std::to_string(ev.degree));
  return direct;
}

std::vector<Evidence> k_hom_dims(const Bundle& b) { return report(b.k_hom_r(), b.guard); }

std::vector<Evidence> m_dims(const Bundle& b) { return report(b.hom_e_m(), b.guard); }

std::vector<Evidence> k_hom_e_dims(const Bundle& b) {
  const std::vector<Evidence> ev = report(b.hom_e_k_e(), b.guard);
  for (const auto& x : ev)
    if (homology_dim(b.k_tensor_e(), -x.degree) != x.dim)
      throw InternalError("Hom(E, Hom(K, E)) disagrees with Hom(K (x) E, E) at degree " +
                          std::to_string(x.degree));
  return ev;
}

// ---------------------------------------------------------------- verdicts

DetectorResult judge(std::string name, const Bundle& b, std::vector<Evidence> now,
                     std::vector<Evidence> before) {
  DetectorResult r;
  r.name = std::move(name);
  r.depth = b.depth;
  std::vector<Evidence> order = now;
  std::stable_sort(order.begin(), order.end(), [](const Evidence& x, const Evidence& y) {
    const int ax = std::abs(x.degree), ay = std::abs(y.degree);
    return ax != ay ? ax < ay : x.degree < y.degree;
  });
  if (b.resolution.terminated) {
    // Complete complexes: the evidence is exact and depth-independent.
    for (const auto& e : order)
      if (e.dim && !r.witness) r.witness = e;
    r.stable = true;
    r.persistent = r.witness.has_value();
    r.verdict = r.witness ? Verdict::not_gorenstein : Verdict::gorenstein;
  } else {
    auto earlier = [&](int n) -> std::optional<std::size_t> {
      for (const auto& e : before)
        if (e.degree == n) return e.dim;
      return std::nullopt;
    };
    for (const auto& e : order) {
      if (!e.dim) continue;
      const auto prev = earlier(e.degree);
      if (prev && *prev) r.persistent = true;
      if (!r.stable && prev && *prev == e.dim) {
        r.witness = e;
        r.stable = true;
      }
    }
    if (!r.witness)
      for (const auto& e : order)
        if (e.dim && !r.witness) r.witness = e;
    r.verdict = r.stable ? Verdict::not_gorenstein : Verdict::inconclusive;
  }
  r.evidence = std::move(now);
  r.evidence_prev = std::move(before);
  return r;
}

namespace {

template <class F>
DetectorResult run_detector(const char* name, const Bundle& b, const Bundle* prev, F dims) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Evidence> now = dims(b);
  std::vector<Evidence> before;
  if (!b.resolution.terminated && prev) before = dims(*prev);
  DetectorResult r = judge(name, b, std::move(now), std::move(before));
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

DetectorResult detect_K_tensor(const Bundle& b, const Bundle* prev) {
  return run_detector("K_tensor", b, prev, k_tensor_dims);
}
DetectorResult detect_K_hom(const Bundle& b, const Bundle* prev) {
  return run_detector("K_hom", b, prev, k_hom_dims);
}
DetectorResult detect_M(const Bundle& b, const Bundle* prev) {
  return run_detector("M", b, prev, m_dims);
}
DetectorResult detect_K_hom_e(const Bundle& b, const Bundle* prev) {
  return run_detector("K_hom_e", b, prev, k_hom_e_dims);
}

// ---------------------------------------------------------------- comparison

ComparisonReport check_comparison_dims(const Bundle& b) {
  ComparisonReport rep;
  const ChainComplex& k = b.k.complex;
  const ChainComplex hm = hom_complex(b.m.complex, ChainComplex::concentrated(b.e)).complex();
  rep.dims_match = k.lo() == hm.lo() + 1 && k.hi() == hm.hi() + 1;
  for (int n = std::min(k.lo(), hm.lo() + 1); n <= std::max(k.hi(), hm.hi() + 1); ++n)
    if (k.dim(n) != hm.dim(n - 1)) {
      rep.dims_match = false;
      rep.problems.push_back("dimension mismatch at degree " + std::to_string(n));
    }
  return rep;
}

ComparisonReport check_comparison_iso(const Bundle& b) {
  ComparisonReport rep = check_comparison_dims(b);
  const ChainComplex& kc = b.k.complex;
  const HomComplex hm = hom_complex(b.m.complex, ChainComplex::concentrated(b.e));
  const ChainComplex target = suspension(hm.complex());
  const PrimeField& f = kc.field();
  const std::size_t d = b.ring->dim();
  const ChainComplex& endc = b.end.complex();
  const ChainComplex& tc = b.t.complex();

  std::vector<FieldMatrix> comps;
  for (int n = kc.lo(); n <= kc.hi(); ++n) {
    FieldMatrix phi(f, target.dim(n), kc.dim(n));
    const std::size_t tdim = tc.dim(-n);
    const std::size_t edim = (1 - n == 0) ? b.e.dim() : 0;  // E[0] part of M'_{1-n}
    // Pure-tensor data of each basis element of T_{-n}: (slot j, phi matrix, p index).
    struct Term {
      Elem coef;
      int j;
      const FieldMatrix* phi;
      std::size_t p;
    };
    std::vector<std::vector<Term>> terms(tdim);
    std::vector<std::unique_ptr<FieldMatrix>> phis;
    for (const auto& s : b.t.slots(-n)) {
      const int j = -s.i;
      const std::size_t hdim = b.hom_pe.complex().dim(s.i);
      for (std::size_t q = 0; q < s.space.dim(); ++q)
        for (const auto& term : s.space.representative(q)) {
          phis.push_back(std::make_unique<FieldMatrix>(
              b.hom_pe.component(s.i, unit_vector(hdim, term.left), j)));
          terms[s.offset + q].push_back({term.coef, j, phis.back().get(), term.right});
        }
    }
    const Elem sn = f.sign(n);
    for (std::size_t col = 0; col < kc.dim(n); ++col) {
      FieldMatrix g(f, b.e.dim(), edim + tdim);
      if (col < endc.dim(n)) {
        const Vec psi = unit_vector(endc.dim(n), col);
        std::map<int, FieldMatrix> parts;
        for (std::size_t q = 0; q < tdim; ++q) {
          Vec v(b.e.dim(), 0);
          for (const auto& tm : terms[q]) {
            // theta(psi)(phi (x) p) = (-1)^{|phi||psi|} phi(psi(p)), |phi| = -j.
            auto it = parts.find(tm.j);
            if (it == parts.end())
              it = parts.emplace(tm.j, b.end.component(n, psi, tm.j - n)).first;
            const Vec image = tm.phi->apply(it->second.column(tm.p));
            const Elem s = f.mul(tm.coef, f.mul(f.sign(static_cast<long long>(tm.j) * n), sn));
            for (std::size_t y = 0; y < v.size(); ++y) v[y] = f.add(v[y], f.mul(image[y], s));
          }
          g.set_column(edim + q, v);
        }
      } else {
        const Vec r = unit_vector(d, col - endc.dim(n));
        g.add_block(0, 0, b.e.act_by(r));
      }
      phi.set_column(col, hm.encode(n - 1, {{1 - n, g}}));
    }
    comps.push_back(std::move(phi));
  }
  try {
    const ChainMap map(kc, target, std::move(comps));
    rep.chain_map = true;
    rep.isomorphism = map.is_degreewise_iso();
    if (!rep.isomorphism) rep.problems.push_back("comparison map is not degreewise invertible");
  } catch (const ComplexError& err) {
    rep.problems.push_back(err.what());
  }
  return rep;
}

// ---------------------------------------------------------------- complete flat

CompleteFlatReport check_complete_flat(const Bundle& b) {
  CompleteFlatReport rep;
  rep.screen_gorenstein = b.resolution.terminated;
  rep.k_tensor_acyclic = all_zero(k_tensor_dims(b));
  // Injectives over an artinian local ring are sums of E, and (x) commutes with them.
  rep.complete_flat = rep.k_tensor_acyclic;
  const ChainComplex ce = tensor_complex(b.c.complex, ChainComplex::concentrated(b.e)).complex();
  rep.c_tensor_acyclic = all_zero(report(ce, b.guard));
  rep.equivalence_holds =
      rep.screen_gorenstein == rep.k_tensor_acyclic && rep.k_tensor_acyclic == rep.complete_flat;
  return rep;
}

Aggregate aggregate(const std::vector<DetectorResult>& results, bool socle_gorenstein) {
  Aggregate agg;
  bool any = false;
  for (const auto& r : results) {
    if (r.verdict == Verdict::skipped) continue;
    any = true;
    if (r.verdict == Verdict::inconclusive) {
      agg.warnings.push_back(r.name + ": inconclusive");
      continue;
    }
    agg.all_inconclusive = false;
    const bool says = r.verdict == Verdict::gorenstein;
    if (says != socle_gorenstein) {
      agg.consistent = false;
      agg.warnings.push_back(r.name + ": verdict " + to_string(r.verdict) +
                             " contradicts the socle oracle (suspected implementation bug)");
    }
  }
  if (!any) agg.all_inconclusive = false;
  return agg;
}

}  // namespace gorentest
