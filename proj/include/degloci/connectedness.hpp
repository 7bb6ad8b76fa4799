#pragma once

#include <string>
#include <vector>

#include "degloci/degeneracy.hpp"

namespace degloci {

enum class Provenance { MonomialComputed, UserSuppliedVerified };

/// Irreducible components V(P_i) of V(I), given by their ideals.
struct ComponentSet {
  Ideal ambient;
  std::vector<Ideal> components;
  std::vector<int> dims;
  Provenance provenance = Provenance::MonomialComputed;
};

/// Minimal primes of a monomial ideal: (x_i : i in C) for the minimal vertex
/// covers C of the supports of the generators.
ComponentSet monomial_minimal_primes(const Ideal& I);

/// Checks P_i ⊇ I, ∩P_i ⊆ √I and that no
/// candidate contains another. Throws PreconditionError naming the failure.
/// Primality is assumed, not checked.
ComponentSet verify_component_set(const Ideal& I, std::vector<Ideal> candidates);

struct ConnectednessResult {
  int d = 0;
  bool connected = false;
  /// dim(P_i + P_j), -1 when the components do not meet.
  std::vector<std::vector<int>> intersection_dims;
  /// When connected: for each component, a path of indices from component 0
  /// with consecutive intersections of dimension >= d.
  std::vector<std::vector<int>> paths;
  /// When not connected: a side label (0/1) per component with every
  /// cross intersection of dimension < d.
  std::vector<int> bipartition;
  /// Set when a component of dimension <= d decided the answer.
  int small_component = -1;
  bool conditional_on_primality = false;
};

/// Component-graph criterion: components i, j are adjacent when
/// dim(P_i ∩ P_j) >= d. With `strict`, a component of dimension <= d raises
/// HypothesisError; otherwise such a component makes the answer "not
/// connected" (removing its intersection with the rest separates it, and a
/// single component of dimension <= d fails dim Y > d).
ConnectednessResult connected_in_dimension(const ComponentSet& c, int d, bool strict = true);

/// Checks a certificate against the intersection dimensions.
bool certificate_valid(const ConnectednessResult& r);

struct ConnectednessReport {
  BoundReport bound;
  int d = 0;
  int target_d = 0;
  ConnectednessResult result;
  Verdict verdict = Verdict::Holds;
  std::vector<Diagnostic> diagnostics;
};

/// For a map f with t <= min ranks: D_t(f) should be connected in dimension
/// d - τ when A is connected in dimension d and M, N have isolated
/// singularities. `components` lists the components of D_t(f); empty means
/// the locus ideal is monomial and its minimal primes are computed.
ConnectednessReport verify_connectedness_bound(const ModuleMap& f, int t, int d, const std::vector<Ideal>& components,
                                               const BoundOptions& opts = {});

}  // namespace degloci
