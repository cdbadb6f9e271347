// Subgroups of GL_2(F_q) sorted by their image in PGL_2: irreducible with
// SL_2 of a subfield inside, reducible, dihedral, A4/S4/A5, or small.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prymcheck/group.hpp"
#include "prymcheck/ring.hpp"

namespace prymcheck {

enum class DicksonTag { ContainsSL2, Reducible, Dihedral, Exceptional, ProjectivelySmall };
enum class ExceptionalType { A4, S4, A5 };

std::string tag_name(DicksonTag t);
std::string exceptional_name(ExceptionalType e);

struct DicksonClass {
  DicksonTag tag = DicksonTag::ProjectivelySmall;
  std::uint32_t q0 = 0;                       // ContainsSL2 only
  std::optional<ExceptionalType> exceptional;  // Exceptional only
  std::size_t order = 0;                      // |H|
  std::size_t projective_order = 0;           // |PH|
  // ContainsSL2 certificate: H' has order q0(q0^2-1), lies in SL_2, is perfect.
  std::size_t derived_order = 0;
  bool derived_perfect = false;
  bool derived_in_subfield = false;  // H' literally equals SL_2(F_q0) (identity conjugator)
  /// |PH| / |PSL_2(F_q0)|, 1 or 2 when H sits between SL_2 and scalars * GL_2.
  std::size_t projective_index = 0;
  std::string to_string() const;
};

/// Order statistics fingerprints of A4, S4, A5.
std::optional<ExceptionalType> match_exceptional(const std::vector<std::pair<std::size_t, std::size_t>>& stats);

/// True if all generators fix a common line of F_q^2.
bool has_common_line(const FiniteLocalRing& F, const std::vector<RingMatrix>& gens);

/// Generators are 2x2 matrices over F = F_q with q odd.  Throws ClosureOverflow.
DicksonClass dickson_classify(RingPtr F, const std::vector<RingMatrix>& gens);

struct TaylorWilesReport {
  DicksonClass classification;
  std::size_t derived_order = 0;
  bool perfect = false;             // [H', H'] = H'
  std::size_t kernel_order = 0;     // |ker chi|
  bool kernel_irreducible = false;  // no common eigenvector over F_q or F_{q^2}
  bool ok() const { return perfect && kernel_irreducible; }
};

using Character = std::function<FiniteLocalRing::Elem(const RingMatrix&)>;

/// Requires dickson_classify() == ContainsSL2 (PreconditionError otherwise).
/// `chi` defaults to the determinant.
TaylorWilesReport taylor_wiles_check(RingPtr F, const std::vector<RingMatrix>& gens, Character chi = {});

}  // namespace prymcheck
