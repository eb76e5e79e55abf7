// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "gorentest/detector.hpp"
#include "gorentest/dualizing.hpp"
#include "pipeline.hpp"
#include "support.hpp"

using namespace gorentest;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

bool naive_iso(const ChainMap& f) {
  const int lo = std::min(f.source().lo(), f.target().lo());
  const int hi = std::max(f.source().hi(), f.target().hi());
  for (int n = lo; n <= hi; ++n) {
    const std::size_t s = f.source().dim(n);
    if (s != f.target().dim(n)) return false;
    if (s && naive_rank(f.component(n)) != s) return false;
  }
  return true;
}

bool commutes(const ChainMap& f) {
  for (int n = f.source().lo(); n <= f.source().hi() + 1; ++n) {
    if (!f.source().dim(n) || !f.target().dim(n - 1)) continue;
    if (!(compose(f.target().differential(n), f.component(n)) ==
          compose(f.component(n - 1), f.source().differential(n))))
      return false;
  }
  return true;
}

bool dd_zero(const ChainComplex& c) {
  for (int n = c.lo() + 2; n <= c.hi(); ++n)
    if (c.dim(n) && c.dim(n - 2) && !compose(c.differential(n - 1), c.differential(n)).is_zero()) return false;
  return true;
}

bool rank_nullity(const FieldMatrix& a, bool naive) {
  if (a.empty()) return true;
  const RankProfile rp = rank_profile(a);
  if (rp.rank + rp.kernel_basis.cols() != a.cols()) return false;
  if (!compose(a, rp.kernel_basis).is_zero()) return false;
  if (rank(a) != rp.rank) return false;
  return !naive || naive_rank(a) == rp.rank;
}

std::string dims_str(const std::vector<Evidence>& ev) {
  std::ostringstream s;
  for (const auto& e : ev) s << "(" << e.degree << "," << e.dim << ")";
  return s.str();
}

const NamedRing& find(const std::vector<NamedRing>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  throw std::runtime_error("no ring " + id);
}

// ------------------------------------------------------------------------

Outcome corpus_agreement(const std::vector<NamedRing>& rings, cli::CorpusResult& keep) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  keep = cli::run_corpus(corpus_dir(), cli::RunOptions{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t built = 0, decided = 0;
  for (const auto& run : keep.runs) {
    const auto& rep = run.report;
    const auto& nr = find(rings, rep["ring_id"].get<std::string>());
    o.require(run.exit_code != cli::kInconsistent && run.exit_code != cli::kInputError &&
                  run.exit_code != cli::kResourceCap,
              nr.id + " exit " + std::to_string(run.exit_code));
    o.require(rep["aggregate"]["consistent"].get<bool>(), nr.id + " inconsistent");
    if (!rep["bundle"]["built"].get<bool>()) continue;
    ++built;
    for (const auto& d : rep["detectors"]) {
      const std::string v = d["verdict"];
      if (v == "inconclusive") continue;
      ++decided;
      o.require((v == "gorenstein") == nr.gorenstein, nr.id + " " + d["name"].get<std::string>() + " says " + v);
    }
  }
  o.require(keep.runs.size() == 8, "expected 8 corpus rings");
  o.require(built == 7, "expected K built on 7 rings, got " + std::to_string(built));
  o.require(secs < 600, "runtime over 10 minutes");
  if (o.pass) o.detail << built << " rings with K, " << decided << " decided verdicts agree, " << secs << " s";
  return o;
}

Outcome gorenstein_split_exact(const std::vector<NamedRing>& rings) {
  Outcome o;
  std::size_t count = 0;
  for (const auto& nr : rings) {
    if (!nr.gorenstein) continue;
    ++count;
    const Bundle b = build_bundle(nr.r, 5, 1);
    for (const auto* c : {&b.k.complex, &b.m.complex, &b.c.complex}) {
      const auto [lo, hi] = c->trusted(1);
      for (int n = lo; n <= hi; ++n)
        o.require(naive_homology_dim(*c, n) == 0, nr.id + " H_" + std::to_string(n) + " nonzero");
    }
    o.require(naive_iso(b.chi) && commutes(b.chi), nr.id + " chi^P not an isomorphism");
    o.require(naive_iso(b.eps) && commutes(b.eps), nr.id + " eps not an isomorphism");
  }
  if (o.pass) o.detail << count << " Gorenstein rings: K, M, C exact; chi^P, eps isomorphisms";
  return o;
}

Outcome non_gorenstein_witnesses(const std::vector<NamedRing>& rings) {
  Outcome o;
  for (const char* id : {"f2_m2_xy", "f2_x2_y3_xy"}) {
    const auto& nr = find(rings, id);
    const Bundle b4 = build_bundle(nr.r, 4, 1);
    const Bundle b5 = build_bundle(nr.r, 5, 1);
    const std::vector<std::pair<std::string, std::function<std::vector<Evidence>(const Bundle&)>>> probes{
        {"Hom(K,R)", k_hom_dims}, {"K(x)E", k_tensor_dims}, {"Hom(E,M)", m_dims}};
    for (const auto& [name, dims] : probes) {
      const auto at4 = dims(b4), at5 = dims(b5);
      bool found = false;
      for (const auto& e5 : at5)
        for (const auto& e4 : at4)
          found = found || (e5.degree == e4.degree && e5.dim > 0 && e5.dim == e4.dim);
      o.require(found, std::string(id) + " " + name + " no stable witness: N=4 " + dims_str(at4) + " N=5 " +
                           dims_str(at5));
    }
  }
  return o;
}

Outcome omega_instances(const std::vector<NamedRing>& rings) {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::size_t total = 0, identity_cases = 0, signed_cases = 0;
  for (const auto& nr : rings) {
    std::size_t here = 0;
    auto check = [&](const ChainComplex& p, const ChainComplex& x, const ChainComplex& b, const std::string& tag) {
      const Omega om = tensor_evaluation_omega(p, x, b);
      o.require(naive_iso(om.map) && commutes(om.map), nr.id + " " + tag);
      ++here;
    };
    auto resolution = [&](std::size_t depth) {
      const std::size_t n = 1 + depth % 3;
      return minimal_resolution(random_module(nr.r, rng), nr.r->embedding_dimension() > 2 ? std::min<std::size_t>(n, 2) : n)
          .complex;
    };
    // B = R[0]: omega is the identity through the unitors.
    {
      const auto p = resolution(rng());
      const auto x = random_complex(nr.r, rng);
      check(p, x, ChainComplex::concentrated(FinModule::free(nr.r, 1), 0), "B = R");
      ++identity_cases;
    }
    // Odd |p| against odd |b|: the sign is visible when p != 2.
    if (nr.r->field().characteristic() == 3) {
      const auto p = minimal_resolution(FinModule::residue_field(nr.r), 3).complex;
      const auto f1 = FinModule::free(nr.r, 1);
      const ChainComplex b(0, {f1, f1}, {nr.r->mult_matrix(nr.r->basis_element(1))});
      check(p, ChainComplex::concentrated(FinModule::injective_hull(nr.r), 0), b, "signed char 3");
      ++signed_cases;
    }
    while (here < 20) check(resolution(rng()), random_complex(nr.r, rng), random_complex(nr.r, rng), "random");
    total += here;
  }
  o.require(identity_cases == rings.size(), "missing B = R case");
  o.require(signed_cases > 0, "missing characteristic 3 case");
  if (o.pass)
    o.detail << total << " instances over " << rings.size() << " rings, " << signed_cases
             << " characteristic 3 signed cases";
  return o;
}

Outcome duality_identity(const std::vector<NamedRing>& rings) {
  Outcome o;
  for (const auto& nr : rings) {
    // The (x, y, z)^2 ring only fits under the default budget at small depth.
    const std::size_t depth = nr.r->embedding_dimension() > 2 ? 3 : 5;
    const Bundle b = build_bundle(nr.r, depth, 1);
    const auto [lo, hi] = b.k_hom_r().trusted(1);
    for (int i = lo; i <= hi; ++i) {
      const auto tl = b.k_tensor_e().trusted(1);
      if (-i < tl.first || -i > tl.second) continue;
      o.require(homology_dim(b.k_hom_r(), i) == homology_dim(b.k_tensor_e(), -i),
                nr.id + " degree " + std::to_string(i));
    }
  }
  if (o.pass) o.detail << "all " << rings.size() << " rings (depth 5, depth 3 for embedding dimension 3)";
  return o;
}

Outcome comparison_iso(const std::vector<NamedRing>& rings) {
  Outcome o;
  std::size_t count = 0;
  for (const auto& nr : rings) {
    if (nr.r->embedding_dimension() > 2) continue;
    ++count;
    const auto rep = check_comparison_iso(build_bundle(nr.r, 3, 1));
    o.require(rep.dims_match && rep.chain_map && rep.isomorphism, nr.id);
  }
  if (o.pass) o.detail << count << " rings at N = 3";
  return o;
}

Outcome dualizing_axioms(const std::vector<NamedRing>& rings) {
  Outcome o;
  for (const auto& nr : rings) {
    const auto e = FinModule::injective_hull(nr.r);
    // Socle of E by naive rank: elements killed by every e_i, i > 0.
    Dense rows;
    for (std::size_t i = 1; i < nr.r->dim(); ++i) {
      const Dense a = to_dense(e.action(i));
      rows.insert(rows.end(), a.begin(), a.end());
    }
    o.require(e.dim() - naive_rank(rows, nr.r->field().characteristic()) == 1, nr.id + " dim Hom(k,E) != 1");
    o.require(hom_module(FinModule::residue_field(nr.r), e).dim() == 1, nr.id + " Hom(k,E) module");
    const auto rep = check_dualizing_axioms(matlis_dual(nr.r), 5);
    o.require(rep.homothety_bijective && rep.ok(), nr.id + " homothety");
    // Homothety R -> Hom(E, E) through the generic solver.
    const auto gen = as_general(e);
    const auto h = hom_module(gen, gen);
    FieldMatrix chi(nr.r->field(), h.dim(), nr.r->dim());
    for (std::size_t i = 0; i < nr.r->dim(); ++i) chi.set_column(i, h.from_map(gen.action(i)));
    o.require(h.dim() == nr.r->dim() && naive_rank(chi) == nr.r->dim(), nr.id + " R -> Hom(E,E) not bijective");
    const auto res = minimal_resolution(e, 5);
    const auto hom = dualize(res.complex, e);
    for (int i = 1; i <= 4; ++i)
      o.require(naive_homology_dim(hom.complex(), -i) == 0, nr.id + " Ext^" + std::to_string(i) + "(E,E) != 0");
  }
  if (o.pass) o.detail << rings.size() << " rings";
  return o;
}

Outcome bounded_acyclic_tensor(const std::vector<NamedRing>& rings) {
  Outcome o;
  std::mt19937_64 rng(99);
  std::size_t cases = 0;
  for (const auto& nr : rings) {
    const auto e = FinModule::injective_hull(nr.r);
    const auto e0 = ChainComplex::concentrated(e, 0);
    const auto chi_e = homothety(hom_complex(e0, e0));
    const auto p = minimal_resolution(FinModule::residue_field(nr.r), 3).complex;
    const std::vector<ChainComplex> acyclic{mapping_cone(chi_e).complex,
                                            mapping_cone(ChainMap::identity(p)).complex};
    std::vector<FinModule> mods{e, FinModule::free(nr.r, 1), FinModule::residue_field(nr.r), random_cyclic(nr.r, rng),
                                k_dual(random_cyclic(nr.r, rng))};
    for (const auto& c : acyclic) {
      for (int n = c.lo(); n <= c.hi(); ++n) o.require(naive_homology_dim(c, n) == 0, nr.id + " C not acyclic");
      for (const auto& m : mods) {
        const auto t = tensor_complex(c, ChainComplex::concentrated(m, 0)).complex();
        for (int n = t.lo(); n <= t.hi(); ++n)
          o.require(naive_homology_dim(t, n) == 0, nr.id + " C(x)M H_" + std::to_string(n));
        ++cases;
      }
    }
  }
  if (o.pass) o.detail << cases << " (C, M') pairs";
  return o;
}

Outcome infrastructure(const std::vector<NamedRing>& rings, const cli::CorpusResult& first) {
  Outcome o;
  std::size_t matrices = 0, complexes = 0;
  auto audit = [&](const ChainComplex& c, bool naive, const std::string& what) {
    ++complexes;
    o.require(dd_zero(c), what + " d o d != 0");
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
      ++matrices;
      o.require(rank_nullity(c.differential(n), naive), what + " rank-nullity");
    }
  };
  for (const auto& nr : rings) {
    for (const auto& target : {FinModule::residue_field(nr.r), FinModule::injective_hull(nr.r)}) {
      const auto res = minimal_resolution(target, 5);
      audit(res.complex, true, nr.id + " resolution");
      o.require(is_minimal(res), nr.id + " resolution not minimal");
      o.require(naive_homology_dim(res.complex, 0) == target.dim(), nr.id + " H_0");
      const int top = res.terminated ? res.complex.hi() : res.complex.hi() - 1;
      for (int n = 1; n <= top; ++n) o.require(naive_homology_dim(res.complex, n) == 0, nr.id + " not exact");
    }
    if (nr.r->embedding_dimension() > 2) continue;
    const Bundle b = build_bundle(nr.r, 3, 1);
    for (const auto* c : {&b.resolution.complex, &b.end.complex(), &b.k.complex, &b.hom_pe.complex(),
                          &b.t.complex(), &b.m.complex, &b.end_e.complex(), &b.c.complex, &b.k_tensor_e(),
                          &b.k_hom_r(), &b.hom_e_m(), &b.omega_route()})
      audit(*c, c->dim(0) < 600, nr.id + " bundle");
  }
  const auto second = cli::run_corpus(corpus_dir(), cli::RunOptions{.timings = false});
  const auto third = cli::run_corpus(corpus_dir(), cli::RunOptions{.timings = false});
  o.require(cli::emit_corpus(second, cli::Format::json) == cli::emit_corpus(third, cli::Format::json),
            "corpus summary differs between runs");
  for (std::size_t i = 0; i < second.runs.size(); ++i)
    o.require(cli::emit(second.runs[i].report, cli::Format::json) == cli::emit(third.runs[i].report, cli::Format::json),
              "report differs between runs");
  // Timed and untimed runs agree on everything but the timings.
  for (std::size_t i = 0; i < first.runs.size() && i < second.runs.size(); ++i) {
    auto a = first.runs[i].report, b = second.runs[i].report;
    for (auto* r : {&a, &b}) {
      r->erase("millis");
      if (r->contains("detectors"))
        for (auto& d : (*r)["detectors"]) d["millis"] = 0.0;
    }
    o.require(a == b, "timed run differs from untimed run");
  }
  if (o.pass) o.detail << complexes << " complexes, " << matrices << " differentials, reports bitwise stable";
  return o;
}

}  // namespace

int main() {
  const auto rings = corpus_rings();
  cli::CorpusResult first;
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, [&] { return corpus_agreement(rings, first); }},
      {2, [&] { return gorenstein_split_exact(rings); }},
      {3, [&] { return non_gorenstein_witnesses(rings); }},
      {4, [&] { return omega_instances(rings); }},
      {5, [&] { return duality_identity(rings); }},
      {6, [&] { return comparison_iso(rings); }},
      {7, [&] { return dualizing_axioms(rings); }},
      {8, [&] { return bounded_acyclic_tensor(rings); }},
      {9, [&] { return infrastructure(rings, first); }},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "ACCEPTANCE " << id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << out.detail.str() << std::endl;
    failed += !out.pass;
  }
  return failed ? 1 : 0;
}
