#include "prymcheck/group.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace prymcheck {

Normalizer projective_normalizer(RingPtr R) {
  if (!R->is_field()) throw std::invalid_argument("projective normalization needs a field");
  return [R](const RingMatrix& A) {
    for (auto x : A.e)
      if (x != 0) return x == 1 ? A : mat_scale(*R, A, R->inv(x));
    return A;
  };
}

MatrixGroup MatrixGroup::closure(RingPtr R, std::vector<RingMatrix> gens, std::size_t cap, Normalizer norm) {
  MatrixGroup G;
  G.ring_ = std::move(R);
  G.norm_ = std::move(norm);
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  G.d_ = gens.front().d;
  for (auto& g : gens) {
    if (g.d != G.d_) throw std::invalid_argument("generators of mixed dimension");
    if (!G.ring_->is_unit(mat_det(*G.ring_, g))) throw std::invalid_argument("generator is not invertible");
    g = G.canon(g);
  }
  G.gens_ = std::move(gens);
  const RingMatrix id = G.canon(identity_matrix(G.d_));
  G.elems_.push_back(id);
  G.parent_.push_back(0);
  G.parent_gen_.push_back(-1);
  G.index_.emplace(id, 0);
  for (std::size_t i = 0; i < G.elems_.size(); ++i) {
    for (std::size_t k = 0; k < G.gens_.size(); ++k) {
      RingMatrix P = G.canon(mat_mul(*G.ring_, G.elems_[i], G.gens_[k]));
      if (G.index_.count(P)) continue;
      if (G.elems_.size() >= cap)
        throw ClosureOverflow("group closure exceeds " + std::to_string(cap) + " elements");
      G.index_.emplace(P, G.elems_.size());
      G.elems_.push_back(std::move(P));
      G.parent_.push_back(i);
      G.parent_gen_.push_back(static_cast<int>(k));
    }
  }
  return G;
}

std::optional<std::size_t> MatrixGroup::find(const RingMatrix& A) const {
  auto it = index_.find(canon(A));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::mul(std::size_t i, std::size_t j) const {
  auto k = find(mat_mul(*ring_, elems_[i], elems_[j]));
  if (!k) throw std::logic_error("group is not closed under multiplication");
  return *k;
}

std::size_t MatrixGroup::inverse(std::size_t i) const {
  auto k = find(mat_inverse(*ring_, elems_[i]));
  if (!k) throw std::logic_error("group is not closed under inversion");
  return *k;
}

std::size_t MatrixGroup::element_order(std::size_t i) const {
  std::size_t n = 1;
  RingMatrix P = elems_[i];
  while (canon(P) != elems_[0]) {
    P = mat_mul(*ring_, P, elems_[i]);
    ++n;
  }
  return n;
}

std::vector<int> MatrixGroup::word(std::size_t i) const {
  std::vector<int> w;
  while (i != 0) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool MatrixGroup::is_abelian() const {
  for (std::size_t a = 0; a < gens_.size(); ++a)
    for (std::size_t b = a + 1; b < gens_.size(); ++b)
      if (canon(mat_mul(*ring_, gens_[a], gens_[b])) != canon(mat_mul(*ring_, gens_[b], gens_[a]))) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> MatrixGroup::order_statistics() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t i = 0; i < size(); ++i) ++h[element_order(i)];
  return {h.begin(), h.end()};
}

namespace {

RingMatrix commutator(const FiniteLocalRing& R, const RingMatrix& a, const RingMatrix& b) {
  return mat_mul(R, mat_mul(R, a, b), mat_mul(R, mat_inverse(R, a), mat_inverse(R, b)));
}

MatrixGroup closure_like(const MatrixGroup& G, std::vector<RingMatrix> gens, std::size_t cap) {
  if (gens.empty()) gens.push_back(identity_matrix(G.dim()));
  return MatrixGroup::closure(G.ring(), std::move(gens), cap,
                              G.projective() ? projective_normalizer(G.ring()) : Normalizer{});
}

}  // namespace

MatrixGroup commutator_subgroup(const MatrixGroup& G, std::size_t cap) {
  const auto& R = *G.ring();
  const auto& gens = G.generators();
  std::vector<RingMatrix> S;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      RingMatrix c = commutator(R, gens[a], gens[b]);
      if (G.find(c) != std::optional<std::size_t>(0)) S.push_back(c);
    }
  MatrixGroup N = closure_like(G, S, cap);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<RingMatrix> fresh;
    for (const auto& g : gens) {
      const RingMatrix gi = mat_inverse(R, g);
      for (const auto& s : N.generators()) {
        RingMatrix c = mat_mul(R, mat_mul(R, g, s), gi);
        if (!N.contains(c)) fresh.push_back(std::move(c));
      }
    }
    if (!fresh.empty()) {
      S.insert(S.end(), fresh.begin(), fresh.end());
      N = closure_like(G, S, cap);
      changed = true;
    }
  }
  return N;
}

MatrixGroup commutator_subgroup_exhaustive(const MatrixGroup& G) {
  if (G.size() > 5000) throw std::invalid_argument("exhaustive commutators limited to groups of order <= 5000");
  std::vector<std::size_t> inv(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) inv[i] = G.inverse(i);
  std::vector<char> seen(G.size(), 0);
  std::vector<RingMatrix> S;
  for (std::size_t a = 0; a < G.size(); ++a)
    for (std::size_t b = 0; b < G.size(); ++b) {
      const std::size_t c = G.mul(G.mul(a, b), G.mul(inv[a], inv[b]));
      if (!seen[c]) {
        seen[c] = 1;
        S.push_back(G.element(c));
      }
    }
  // Every commutator is a generator; the closure adds only products of them.
  return closure_like(G, S, G.size());
}

bool is_perfect(const MatrixGroup& G) { return commutator_subgroup(G, G.size()).size() == G.size(); }

MatrixGroup subgroup_where(const MatrixGroup& G, const std::function<bool(const RingMatrix&)>& keep) {
  std::vector<RingMatrix> gens;
  MatrixGroup K = closure_like(G, {}, G.size());
  for (const auto& A : G.elements()) {
    if (!keep(A) || K.contains(A)) continue;
    gens.push_back(A);
    K = closure_like(G, gens, G.size());
  }
  return K;
}

GroupRep GroupRep::make(std::shared_ptr<const MatrixGroup> group, RingPtr R, std::vector<RingMatrix> gen_images) {
  const MatrixGroup& G = *group;
  if (gen_images.size() != G.generators().size())
    throw std::invalid_argument("need one image per generator");
  GroupRep rho;
  rho.d_ = gen_images.front().d;
  for (const auto& A : gen_images) {
    if (A.d != rho.d_) throw std::invalid_argument("images of mixed dimension");
    if (!R->is_unit(mat_det(*R, A))) throw std::invalid_argument("image matrix is not invertible");
  }
  rho.images_.resize(G.size());
  rho.images_[0] = identity_matrix(rho.d_);
  for (std::size_t i = 1; i < G.size(); ++i)
    rho.images_[i] = mat_mul(*R, rho.images_[G.parent(i)], gen_images[static_cast<std::size_t>(G.parent_gen(i))]);
  std::vector<std::size_t> gen_index;
  for (const auto& g : G.generators()) gen_index.push_back(*G.find(g));
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t k = 0; k < gen_index.size(); ++k) {
      const std::size_t j = G.mul(i, gen_index[k]);
      if (mat_mul(*R, rho.images_[i], gen_images[k]) != rho.images_[j])
        throw std::invalid_argument("generator images do not define a homomorphism");
    }
  rho.group_ = std::move(group);
  rho.ring_ = std::move(R);
  return rho;
}

GroupRep GroupRep::block_projection(std::shared_ptr<const MatrixGroup> group, int offset, int d) {
  std::vector<RingMatrix> imgs;
  for (const auto& g : group->generators()) imgs.push_back(block(g, offset, d));
  RingPtr R = group->ring();
  return make(std::move(group), std::move(R), std::move(imgs));
}

}  // namespace prymcheck
