// Span/Nakayama core of the Faltings-Serre method over a finite group model:
// if the images (rho + rho')(g), g in a test set, span the same R-module as the
// whole image, trace agreement on the set forces it everywhere.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prymcheck/group.hpp"
#include "prymcheck/ring.hpp"

namespace prymcheck {

/// Elementary divisor profile of a finitely generated submodule of R^n.
struct ModuleProfile {
  std::vector<std::uint32_t> valuations;  // one per nonzero invariant factor l^v
  /// log_{|k|} of the module size: sum of (m - v).
  std::uint32_t log_size = 0;
  /// Dimension of the image in k^n (number of unit invariant factors).
  std::uint32_t residue_rank = 0;
};

/// Smith form over the chain ring R with minimal-valuation pivoting.
ModuleProfile module_profile(const FiniteLocalRing& R, std::vector<std::vector<FiniteLocalRing::Elem>> rows,
                             std::size_t ncols);

struct SpanCertificate {
  bool spans = false;
  ModuleProfile full;   // span of the whole image
  ModuleProfile frob;   // span of the images of the test set
  /// Test-set elements (group indices) whose images already generate the
  /// test-set span, chosen greedily in input order.
  std::vector<std::size_t> basis;
};

/// Compares the R-spans of {(rho(g), rho'(g))} in M_d(R)^2 for g in frob_set
/// and for g in the whole group.  Throws std::invalid_argument on an empty set
/// or mismatched representations.
SpanCertificate span_check(const GroupRep& rho, const GroupRep& rho_p, const std::vector<std::size_t>& frob_set);

enum class TraceStatus { Verified, TracesDiffer, NotSpanning, Counterexample };
std::string status_name(TraceStatus s);

struct TraceConclusion {
  TraceStatus status = TraceStatus::Verified;
  SpanCertificate certificate;
  std::size_t elements_checked = 0;
  std::optional<std::size_t> witness;  // first element with differing traces
};

/// Runs span_check and, when the hypotheses hold, compares traces on every
/// group element.  A Counterexample status would contradict the lemma.
TraceConclusion trace_conclusion_check(const GroupRep& rho, const GroupRep& rho_p,
                                       const std::vector<std::size_t>& frob_set);

/// How rho' is obtained from rho in a random instance.
enum class PairKind { Conjugate, DetTwist, Contragredient, Unrelated };
std::string pair_kind_name(PairKind k);

struct FaltingsSerreInstance {
  RingPtr ring;
  std::shared_ptr<const MatrixGroup> group;  // generated by blockdiag(A_i, A'_i)
  GroupRep rho, rho_p;
  std::vector<std::size_t> frob_set;
  PairKind kind = PairKind::Conjugate;
  int twist = 0;  // exponent k of det^k for DetTwist
  bool frob_in_kernel = false;
};

/// Rings used by the randomized instances: F_q and Z/l^m with l^m <= 27.
std::vector<RingPtr> instance_rings();

/// Random 2-dimensional pair with |G| <= max_order.  Deterministic in `rng`.
FaltingsSerreInstance random_instance(std::mt19937_64& rng, RingPtr R, std::size_t max_order = 2000);

/// Pair built from explicit generators of rho and a rule for rho'.
FaltingsSerreInstance make_instance(RingPtr R, const std::vector<RingMatrix>& gens, PairKind kind,
                                    const RingMatrix& conjugator = {}, int twist = 1,
                                    std::size_t max_order = kClosureCap);

}  // namespace prymcheck
