// Shared fixtures and independent oracles for the test suites.
//
// The oracles here never call the library's elimination: ranks come from a
// separate mod-p Gaussian elimination on plain integer arrays.

#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "gorentest/algebra.hpp"
#include "gorentest/complex.hpp"
#include "gorentest/module.hpp"
#include "gorentest/presentation.hpp"

namespace testing_support {

using namespace gorentest;

using Dense = std::vector<std::vector<std::int64_t>>;

inline Dense to_dense(const FieldMatrix& m) {
  Dense d(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.at(r, c);
  return d;
}

inline std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Row reduction mod p, inverses through Fermat.
inline std::size_t naive_rank(Dense a, std::int64_t p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = pow_mod(((a[rank][c] % p) + p) % p, p - 2, p);
    for (auto& x : a[rank]) x = ((x % p) + p) % p * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] % p == 0) continue;
      const std::int64_t f = ((a[r][c] % p) + p) % p;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::size_t naive_rank(const FieldMatrix& m) {
  return naive_rank(to_dense(m), m.field().characteristic());
}

/// dim H_n from naive ranks of the differentials.
inline std::size_t naive_homology_dim(const ChainComplex& x, int n) {
  const std::size_t d = x.dim(n);
  const std::size_t out = x.dim(n - 1) && d ? naive_rank(x.differential(n)) : 0;
  const std::size_t in = x.dim(n + 1) && d ? naive_rank(x.differential(n + 1)) : 0;
  return d - out - in;
}

inline AlgebraPtr ring(std::uint64_t p, std::vector<std::string> vars,
                       const std::vector<std::string>& rels) {
  const PrimeField f(p);
  RingPresentation pres{f, vars, {}};
  for (const auto& r : rels) pres.relations.push_back(parse_poly(r, vars, f));
  return FinLocalAlgebra::from_presentation(pres);
}

struct NamedRing {
  std::string id;
  AlgebraPtr r;
  bool gorenstein;  // socle dimension one, verified by hand
};

/// The bundled corpus rings, in the order of the corpus directory listing.
inline std::vector<NamedRing> corpus_rings() {
  return {
      {"f2_m2_xy", ring(2, {"x", "y"}, {"x^2", "x*y", "y^2"}), false},
      {"f2_m2_xyz", ring(2, {"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"}), false},
      {"f2_x2", ring(2, {"x"}, {"x^2"}), true},
      {"f2_x2_y3_xy", ring(2, {"x", "y"}, {"x^2", "y^3", "x*y"}), false},
      {"f2_x3", ring(2, {"x"}, {"x^3"}), true},
      {"f3_ci_x2_y2", ring(3, {"x", "y"}, {"x^2", "y^2"}), true},
      {"f3_gor_x2my2_xy", ring(3, {"x", "y"}, {"x^2 - y^2", "x*y"}), true},
      {"f3_x3", ring(3, {"x"}, {"x^3"}), true},
  };
}

inline Vec random_element(const FinLocalAlgebra& r, std::mt19937_64& rng, bool in_max_ideal) {
  Vec v(r.dim());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = r.field().reduce(static_cast<std::int64_t>(rng() % r.field().characteristic()));
  if (in_max_ideal) v[0] = 0;
  return v;
}

/// R / (a), a random cyclic module.
inline FinModule random_cyclic(const AlgebraPtr& r, std::mt19937_64& rng) {
  const FinModule free = FinModule::free(r, 1);
  const Vec a = random_element(*r, rng, true);
  return quotient_module(free, r->mult_matrix(a)).module;
}

/// A random module from a small menu: R, E, k, R/(a), or a sum of two of them.
inline FinModule random_module(const AlgebraPtr& r, std::mt19937_64& rng) {
  switch (rng() % 6) {
    case 0: return FinModule::free(r, 1 + rng() % 2);
    case 1: return FinModule::injective_hull(r, 1 + rng() % 2);
    case 2: return FinModule::residue_field(r);
    case 3: return random_cyclic(r, rng);
    case 4: return direct_sum({FinModule::residue_field(r), FinModule::free(r, 1)});
    default: return direct_sum({random_cyclic(r, rng), FinModule::injective_hull(r, 1)});
  }
}

/// A random bounded complex: a module in one degree, or R --a--> R, or
/// R --a--> R --b--> R with ab = 0 when such a pair exists.
inline ChainComplex random_complex(const AlgebraPtr& r, std::mt19937_64& rng) {
  const int lo = static_cast<int>(rng() % 3) - 1;
  const auto kind = rng() % 3;
  if (kind == 0 || r->dim() < 2) return ChainComplex::concentrated(random_module(r, rng), lo);
  const FinModule f1 = FinModule::free(r, 1);
  const Vec a = random_element(*r, rng, true);
  if (kind == 1) return ChainComplex(lo, {f1, f1}, {r->mult_matrix(a)});
  // b annihilates a: pick from the kernel of multiplication by a.
  const auto ann = rank_profile(r->mult_matrix(a)).kernel_basis;
  Vec b(r->dim(), 0);
  for (std::size_t c = 0; c < ann.cols(); ++c) {
    const Elem s = r->field().reduce(static_cast<std::int64_t>(rng() % r->field().characteristic()));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = r->field().add(b[i], r->field().mul(s, ann.at(i, c)));
  }
  return ChainComplex(lo, {f1, f1, f1}, {r->mult_matrix(b), r->mult_matrix(a)});
}

inline std::filesystem::path corpus_dir() { return GORENTEST_CORPUS_DIR; }

}  // namespace testing_support
