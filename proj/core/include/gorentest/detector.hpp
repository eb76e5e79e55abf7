// Test complexes K' = Cone(R -> Hom(P', P')), M' = Cone(Hom(P', E) (x) P' -> E)
// and C = Cone(R -> Hom(E, E)) built from a truncated minimal resolution P'
// of E = E(k), and the Gorensteinness detectors run on them.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorentest/homalg.hpp"
#include "gorentest/resolve.hpp"

namespace gorentest {

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Bundle {
  AlgebraPtr ring;
  std::size_t depth;
  int guard;
  FinModule e;
  FreeResolution resolution;  // of E
  HomComplex end;             // Hom(P', P')
  ChainMap chi;               // R[0] -> Hom(P', P')
  Cone k;
  HomComplex hom_pe;          // Hom(P', E)
  TensorComplex t;            // Hom(P', E) (x) P'
  ChainMap eps;               // T -> E[0]
  Cone m;
  HomComplex end_e;           // Hom(E, E)
  ChainMap chi_e;
  Cone c;

  // Derived complexes, built on first use.
  const ChainComplex& k_tensor_e() const;      // K' (x) E
  const ChainComplex& omega_route() const;     // Cone(E -> Hom(P', P' (x) E))
  const ChainComplex& k_hom_r() const;         // Hom(K', R)
  const ChainComplex& hom_e_m() const;         // Hom(E, M')
  const ChainComplex& hom_e_k_e() const;       // Hom(E, Hom(K', E))

  struct Derived;
  std::shared_ptr<Derived> derived;
};

/// k-dimension of Hom(P', P')_0 for the given Betti numbers.
std::size_t bundle_size_estimate(const std::vector<std::size_t>& betti, std::size_t ring_dim);

/// Throws ResourceError when the resolution or the estimated bundle size
/// exceeds `budget`.
Bundle build_bundle(const AlgebraPtr& r, std::size_t depth, int guard = 1,
                    std::size_t budget = kDefaultBudget);

enum class Verdict { gorenstein, not_gorenstein, inconclusive, skipped };
std::string to_string(Verdict v);

struct Evidence {
  int degree;
  std::size_t dim;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct DetectorResult {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  std::vector<Evidence> evidence;       // trusted window at depth N
  std::vector<Evidence> evidence_prev;  // trusted window at depth N - 1
  std::optional<Evidence> witness;      // first nonzero degree by |n|, then n
  bool stable = false;                  // witness has the same dim at N - 1 and N
  bool persistent = false;              // some degree nonzero at both depths
  std::size_t depth = 0;
  double millis = 0;
};

/// Homology of K' (x) E, computed directly and through the tensor-evaluation
/// isomorphism; a disagreement throws InternalError.
std::vector<Evidence> k_tensor_dims(const Bundle& b);
std::vector<Evidence> k_hom_dims(const Bundle& b);
std::vector<Evidence> m_dims(const Bundle& b);
/// Cross-checked against the K' (x) E dims through adjunction and duality.
std::vector<Evidence> k_hom_e_dims(const Bundle& b);

/// `prev` is the bundle at depth N - 1 (unused when P' terminated).
DetectorResult detect_K_tensor(const Bundle& b, const Bundle* prev);
DetectorResult detect_K_hom(const Bundle& b, const Bundle* prev);
DetectorResult detect_M(const Bundle& b, const Bundle* prev);
DetectorResult detect_K_hom_e(const Bundle& b, const Bundle* prev);

/// Verdict from per-depth evidence.
DetectorResult judge(std::string name, const Bundle& b, std::vector<Evidence> now,
                     std::vector<Evidence> before);

struct ComparisonReport {
  bool dims_match = false;   // dim K'_n = dim Hom(M', E)_{n-1}
  bool chain_map = false;
  bool isomorphism = false;
  std::vector<std::string> problems;
};

/// Graded dimensions only (cheap).
ComparisonReport check_comparison_dims(const Bundle& b);
/// Explicit comparison K' -> Sigma Hom(M', E), checked to be an isomorphism.
ComparisonReport check_comparison_iso(const Bundle& b);

struct CompleteFlatReport {
  bool screen_gorenstein = false;
  bool k_tensor_acyclic = false;
  bool complete_flat = false;
  bool c_tensor_acyclic = false;
  bool equivalence_holds = false;
};

CompleteFlatReport check_complete_flat(const Bundle& b);

struct Aggregate {
  bool consistent = true;
  bool all_inconclusive = true;
  std::vector<std::string> warnings;
};

Aggregate aggregate(const std::vector<DetectorResult>& results, bool socle_gorenstein);

}  // namespace gorentest
