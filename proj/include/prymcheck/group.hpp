// Finite matrix groups by closure, and representations of them.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "prymcheck/ring.hpp"

namespace prymcheck {

inline constexpr std::size_t kClosureCap = 100000;

class ClosureOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input was valid but an operation's stated precondition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Canonical representative map, e.g. modulo scalars.  Must be compatible
/// with multiplication.
using Normalizer = std::function<RingMatrix(const RingMatrix&)>;

/// Scales a matrix over a field so its first nonzero entry is 1.
Normalizer projective_normalizer(RingPtr R);

class MatrixGroup {
 public:
  /// Breadth-first closure; element 0 is the identity.  Throws ClosureOverflow
  /// past `cap` elements and std::invalid_argument on non-invertible generators.
  static MatrixGroup closure(RingPtr R, std::vector<RingMatrix> gens, std::size_t cap = kClosureCap,
                             Normalizer norm = {});

  const RingPtr& ring() const { return ring_; }
  int dim() const { return d_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<RingMatrix>& generators() const { return gens_; }
  const RingMatrix& element(std::size_t i) const { return elems_[i]; }
  const std::vector<RingMatrix>& elements() const { return elems_; }
  bool projective() const { return static_cast<bool>(norm_); }

  std::optional<std::size_t> find(const RingMatrix& A) const;
  bool contains(const RingMatrix& A) const { return find(A).has_value(); }
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;
  std::size_t element_order(std::size_t i) const;
  /// Element i = gens[w[0]] gens[w[1]] ... (empty word for the identity).
  std::vector<int> word(std::size_t i) const;
  /// For i > 0, element i = element(parent(i)) * gens[parent_gen(i)].
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  int parent_gen(std::size_t i) const { return parent_gen_[i]; }

  bool is_abelian() const;
  /// Histogram order -> count.
  std::vector<std::pair<std::size_t, std::size_t>> order_statistics() const;

 private:
  RingMatrix canon(const RingMatrix& A) const { return norm_ ? norm_(A) : A; }

  RingPtr ring_;
  int d_ = 0;
  Normalizer norm_;
  std::vector<RingMatrix> gens_;
  std::vector<RingMatrix> elems_;
  std::vector<std::size_t> parent_;
  std::vector<int> parent_gen_;
  std::unordered_map<RingMatrix, std::size_t, RingMatrixHash> index_;
};

/// Commutator subgroup as the normal closure of generator commutators.
MatrixGroup commutator_subgroup(const MatrixGroup& G, std::size_t cap = kClosureCap);
/// Commutator subgroup generated by [a,b] over all pairs of elements.
MatrixGroup commutator_subgroup_exhaustive(const MatrixGroup& G);
bool is_perfect(const MatrixGroup& G);

/// Elements satisfying a predicate, closed again as a group.
MatrixGroup subgroup_where(const MatrixGroup& G, const std::function<bool(const RingMatrix&)>& keep);

/// A d-dimensional representation of the abstract group underlying `group`,
/// given by images of its generators.  Images of all elements are built along
/// the closure tree and the homomorphism property is checked on every
/// (element, generator) edge.
class GroupRep {
 public:
  static GroupRep make(std::shared_ptr<const MatrixGroup> group, RingPtr R, std::vector<RingMatrix> gen_images);
  /// Restriction of a block-diagonal group to the block at `offset`.
  static GroupRep block_projection(std::shared_ptr<const MatrixGroup> group, int offset, int d);

  const MatrixGroup& group() const { return *group_; }
  const std::shared_ptr<const MatrixGroup>& group_ptr() const { return group_; }
  const RingPtr& ring() const { return ring_; }
  int dim() const { return d_; }
  const RingMatrix& image(std::size_t i) const { return images_[i]; }
  FiniteLocalRing::Elem trace(std::size_t i) const { return mat_trace(*ring_, images_[i]); }

 private:
  std::shared_ptr<const MatrixGroup> group_;
  RingPtr ring_;
  int d_ = 0;
  std::vector<RingMatrix> images_;
};

}  // namespace prymcheck
