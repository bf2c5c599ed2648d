#pragma once

#include <string>
#include <vector>

#include "szlenklab/sparse_vec.hpp"

namespace szlenklab {

enum class SpaceKind { tsirelson, schlumprecht, baernstein, orlicz };

// Identifies the norm a certificate lives in. The Orlicz parameters are
// the general M(t) = A t^4 + B t^2 pair; ignored for the other spaces.
struct SpaceRef {
  SpaceKind kind = SpaceKind::tsirelson;
  double orlicz_A = 1.0;
  double orlicz_B = 1.0;
};

std::string space_name(const SpaceRef& space);

struct PerturbationPair {
  SparseVec plus;
  SparseVec minus;
};

// Finite-resolution membership witness for the eps-derivation of the dual
// ball: every pair stays inside the unit ball, every pair is eps-separated,
// and the pairs converge to the point coordinatewise (checked up to
// coord_horizon, with perturbation supports marching rightwards as the
// stand-in for weak*-null). A proxy at finite resolution, not a proof.
struct DerivationCertificate {
  SparseVec point;
  double eps = 0.0;  // in (0,2)
  std::vector<PerturbationPair> pairs;
  SpaceRef space;
  int coord_horizon = 1;
};

}  // namespace szlenklab
