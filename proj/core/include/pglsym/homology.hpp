#pragma once

#include "pglsym/int_matrix.hpp"
#include "pglsym/triangulation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pglsym {

/// U * M * V = D with D diagonal, d_1 | d_2 | ... and U, V unimodular.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> diagonal; // the nonzero diagonal entries, positive
  std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix &m);
std::size_t matrix_rank(const IntMatrix &m);

/// Decides x in Im(M) over the integers, reusing one factorization.
class ImageSolver {
public:
  explicit ImageSolver(const IntMatrix &m);
  std::optional<IntVector> preimage(const IntVector &x) const;
  bool contains(const IntVector &x) const { return preimage(x).has_value(); }
  std::size_t rank() const noexcept { return diagonal_.size(); }

private:
  std::size_t rows_, cols_;
  std::vector<IntVector> u_; // dense rows of U
  IntMatrix v_;
  std::vector<Integer> diagonal_;
};

std::optional<IntVector> image_membership(const IntMatrix &m, const IntVector &x);

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion; // invariant factors, each >= 2, d_i | d_{i+1}

  /// Normalizes arbitrary cyclic orders (0 meaning Z, 1 dropped).
  static AbelianGroup from_cyclic(const std::vector<Integer> &orders);
  static AbelianGroup cyclic(const Integer &order) { return from_cyclic({order}); }
  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  AbelianGroup torsion_part() const { return {0, torsion}; }
  bool operator==(const AbelianGroup &) const = default;
};

std::string to_string(const AbelianGroup &g);

/// Homology of C_0 -> C_1 -> ... -> C_k given the maps in application order;
/// one group per space C_0..C_k. Throws NotAComplex if a composite is nonzero.
std::vector<AbelianGroup> chain_homology(const std::vector<IntMatrix> &maps);

AbelianGroup tensor(const AbelianGroup &g, const Integer &m);
AbelianGroup tor(const AbelianGroup &g, const Integer &m);
AbelianGroup hom_to_cyclic(const AbelianGroup &g, const Integer &m);
/// H_k(-; Z/m) = H_k (x) Z/m + Tor(H_{k-1}, Z/m).
AbelianGroup coefficient_homology(const AbelianGroup &hk, const AbelianGroup &hk_minus_1,
                                  const Integer &m);

/// Dual spine presentation: face classes modulo edge-cycle words, plus the
/// face-crossing words of the given closed segment paths.
struct DualSpine {
  IntMatrix boundary2; // relations -> face classes
  IntMatrix boundary1; // face classes -> tetrahedra
};

DualSpine dual_spine(const Triangulation &tri, const std::vector<SegmentPath> &extra_relations = {});
/// Face-crossing word of a closed path in the dual graph.
IntVector crossing_word(const Triangulation &tri, const SegmentPath &path);

/// H_1(M) from the dual spine alone.
AbelianGroup manifold_homology(const Triangulation &tri);
/// H_1 of the manifold with every boundary component coned off.
AbelianGroup mhat_homology(const Triangulation &tri);

} // namespace pglsym
