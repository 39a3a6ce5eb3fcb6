#pragma once

#include "pglsym/triangulation.hpp"

#include <string>
#include <vector>

namespace pglsym {

struct Check {
  std::string id;
  std::string ref; // the property being checked, in words
  bool passed = false;
  std::string details;
};

struct VerificationReport {
  std::string triangulation;
  int n = 0;
  std::vector<Check> checks;

  bool pass() const;
  void add(std::string id, std::string ref, bool passed, std::string details = {});
  void append(const VerificationReport &other);
};

/// Rank of (A|B), omega-orthogonality of gluing and cusp rows, cusp-cusp
/// products against the intersection form times the Cartan matrix.
VerificationReport verify_symplectic(const Triangulation &tri, int n);
/// Chain identities and homology of the complex against the predicted groups.
VerificationReport verify_homology(const Triangulation &tri, int n);
/// delta / delta' / gamma identities on the boundary cellulations.
VerificationReport verify_boundary_maps(const Triangulation &tri, int n);
/// Quad, hexagon and stokes relations.
VerificationReport verify_relations(const Triangulation &tri, int n);

VerificationReport verify_all(const Triangulation &tri, int n);
/// verify_all for every n in [n_min, n_max], evaluated concurrently.
std::vector<VerificationReport> verify_range(const Triangulation &tri, int n_min, int n_max);

} // namespace pglsym
