#pragma once

#include <string>
#include <vector>

namespace tabhom {

/// Where composite homomorphisms are evaluated: coordinates in the tabloid
/// basis of M^la, or the standard basis of H_n.
enum class OracleRoute { tabloid, hecke };

struct PropsOptions {
  int max_n = 6;
  /// Largest entry in any tableau; 0 means n.
  int max_value = 0;
  OracleRoute route = OracleRoute::tabloid;
  int jobs = 1;
  /// Counterexamples recorded per identity.
  std::size_t max_examples = 5;
};

struct PropReport {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return failures == 0; }
};

/// Exhaustive checks of the composition identities behind the Garnir
/// relation, both sides evaluated exactly:
///   merge:   phi_B phi_C for B the (m)-tableau of type (r, m-r)
///   merge2:  phi_B phi_C for B of shape (r+u, v+t) and type (r,u,v,t)
///   split:   phi_D phi_E = sum_C phi_C, D with rows 1, 2, 2, 3
///   compose: phi_B phi_D phi_E = sum over (U,V) of the Garnir coefficients
std::vector<PropReport> verify_composition_props(const PropsOptions& options = {});

}  // namespace tabhom
