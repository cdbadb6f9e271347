#include "prymcheck/dickson.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace prymcheck {

std::string tag_name(DicksonTag t) {
  switch (t) {
    case DicksonTag::ContainsSL2: return "ContainsSL2";
    case DicksonTag::Reducible: return "Reducible";
    case DicksonTag::Dihedral: return "Dihedral";
    case DicksonTag::Exceptional: return "Exceptional";
    case DicksonTag::ProjectivelySmall: return "ProjectivelySmall";
  }
  return "?";
}

std::string exceptional_name(ExceptionalType e) {
  switch (e) {
    case ExceptionalType::A4: return "A4";
    case ExceptionalType::S4: return "S4";
    case ExceptionalType::A5: return "A5";
  }
  return "?";
}

std::string DicksonClass::to_string() const {
  std::ostringstream os;
  os << tag_name(tag);
  if (tag == DicksonTag::ContainsSL2) os << "(q0=" << q0 << ")";
  if (exceptional) os << "(" << exceptional_name(*exceptional) << ")";
  if (tag == DicksonTag::ProjectivelySmall) os << "(" << projective_order << ")";
  return os.str();
}

std::optional<ExceptionalType> match_exceptional(const std::vector<std::pair<std::size_t, std::size_t>>& stats) {
  using Stats = std::vector<std::pair<std::size_t, std::size_t>>;
  static const Stats a4{{1, 1}, {2, 3}, {3, 8}};
  static const Stats s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  static const Stats a5{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  if (stats == a4) return ExceptionalType::A4;
  if (stats == s4) return ExceptionalType::S4;
  if (stats == a5) return ExceptionalType::A5;
  return std::nullopt;
}

bool has_common_line(const FiniteLocalRing& F, const std::vector<RingMatrix>& gens) {
  // Lines spanned by (1, t) and (0, 1).
  auto fixes = [&](const RingMatrix& A, FiniteLocalRing::Elem x, FiniteLocalRing::Elem y) {
    const auto u = F.add(F.mul(A(0, 0), x), F.mul(A(0, 1), y));
    const auto w = F.add(F.mul(A(1, 0), x), F.mul(A(1, 1), y));
    return F.sub(F.mul(u, y), F.mul(w, x)) == 0;
  };
  auto common = [&](FiniteLocalRing::Elem x, FiniteLocalRing::Elem y) {
    for (const auto& A : gens)
      if (!fixes(A, x, y)) return false;
    return true;
  };
  if (common(0, 1)) return true;
  for (FiniteLocalRing::Elem t = 0; t < F.size(); ++t)
    if (common(1, t)) return true;
  return false;
}

namespace {

void validate(const RingPtr& F, const std::vector<RingMatrix>& gens) {
  if (!F->is_field()) throw std::invalid_argument("classification needs a finite field");
  if (F->ell() < 3) throw std::invalid_argument("classification needs odd characteristic");
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  for (const auto& g : gens)
    if (g.d != 2) throw std::invalid_argument("generators must be 2x2");
}

bool in_subfield(const FiniteLocalRing& F, const MatrixGroup& G, std::uint32_t q0) {
  for (const auto& A : G.elements())
    for (auto x : A.e)
      if (F.pow(x, q0) != x) return false;
  return true;
}

}  // namespace

DicksonClass dickson_classify(RingPtr F, const std::vector<RingMatrix>& gens) {
  validate(F, gens);
  DicksonClass out;
  const MatrixGroup H = MatrixGroup::closure(F, gens);
  const MatrixGroup PH = MatrixGroup::closure(F, gens, kClosureCap, projective_normalizer(F));
  out.order = H.size();
  out.projective_order = PH.size();

  if (has_common_line(*F, gens) || H.is_abelian()) {
    out.tag = DicksonTag::Reducible;
    return out;
  }
  const std::uint32_t p = F->ell();
  const auto stats = PH.order_statistics();

  if (PH.size() % p == 0) {
    const MatrixGroup D = commutator_subgroup(H);
    out.derived_order = D.size();
    for (std::uint32_t e = 1; e <= F->f(); ++e) {
      if (F->f() % e) continue;
      std::uint64_t q0 = 1;
      for (std::uint32_t i = 0; i < e; ++i) q0 *= p;
      if (D.size() != q0 * (q0 * q0 - 1)) continue;
      if (!is_perfect(D)) continue;
      bool in_sl2 = true;
      for (const auto& A : D.elements()) in_sl2 = in_sl2 && mat_det(*F, A) == 1;
      if (!in_sl2) continue;
      out.tag = DicksonTag::ContainsSL2;
      out.q0 = static_cast<std::uint32_t>(q0);
      out.derived_perfect = true;
      out.derived_in_subfield = in_subfield(*F, D, out.q0);
      const std::size_t psl = q0 * (q0 * q0 - 1) / 2;
      out.projective_index = PH.size() % psl == 0 ? PH.size() / psl : 0;
      return out;
    }
  }
  if (auto ex = match_exceptional(stats)) {
    out.tag = DicksonTag::Exceptional;
    out.exceptional = ex;
    return out;
  }
  if (PH.size() % 2 == 0 && PH.size() >= 4)
    for (const auto& [ord, count] : stats)
      if (ord == PH.size() / 2 && count > 0) {
        out.tag = DicksonTag::Dihedral;
        return out;
      }
  out.tag = DicksonTag::ProjectivelySmall;
  return out;
}

TaylorWilesReport taylor_wiles_check(RingPtr F, const std::vector<RingMatrix>& gens, Character chi) {
  TaylorWilesReport out;
  out.classification = dickson_classify(F, gens);
  if (out.classification.tag != DicksonTag::ContainsSL2)
    throw PreconditionError("Taylor-Wiles check needs an image containing SL_2, got " +
                            out.classification.to_string());
  if (!chi) chi = [F](const RingMatrix& A) { return mat_det(*F, A); };
  const MatrixGroup H = MatrixGroup::closure(F, gens);
  const MatrixGroup D = commutator_subgroup(H);
  out.derived_order = D.size();
  out.perfect = is_perfect(D);
  const MatrixGroup K = subgroup_where(H, [&](const RingMatrix& A) { return chi(A) == 1; });
  out.kernel_order = K.size();
  out.kernel_irreducible = !has_common_line(*F, K.generators()) && !K.is_abelian();
  return out;
}

}  // namespace prymcheck
