#include "prymcheck/galrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace prymcheck {

using Elem = FiniteLocalRing::Elem;

ModuleProfile module_profile(const FiniteLocalRing& R, std::vector<std::vector<Elem>> a, std::size_t ncols) {
  ModuleProfile out;
  const std::uint32_t m = R.m();
  std::size_t rows = a.size();
  for (std::size_t step = 0; step < std::min(rows, ncols); ++step) {
    std::uint32_t best = m;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = step; i < rows && best > 0; ++i)
      for (std::size_t j = step; j < ncols; ++j) {
        if (a[i][j] == 0) continue;
        const auto v = R.valuation(a[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best == m) break;
    std::swap(a[step], a[bi]);
    for (auto& row : a) std::swap(row[step], row[bj]);
    const Elem uinv = R.inv(R.divide_by_ell_power(a[step][step], best));
    // Entries in the pivot row and column all have valuation >= best, so
    // clearing the column and dropping the pivot row loses nothing.
    for (std::size_t i = step + 1; i < rows; ++i) {
      const Elem x = a[i][step];
      if (x == 0) continue;
      const Elem factor = R.mul(R.divide_by_ell_power(x, best), uinv);
      for (std::size_t j = step; j < ncols; ++j) a[i][j] = R.sub(a[i][j], R.mul(factor, a[step][j]));
    }
    out.valuations.push_back(best);
    out.log_size += m - best;
    if (best == 0) ++out.residue_rank;
  }
  return out;
}

namespace {

std::vector<Elem> flatten(const GroupRep& rho, const GroupRep& rho_p, std::size_t g) {
  std::vector<Elem> v(rho.image(g).e);
  const auto& w = rho_p.image(g).e;
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

void check_pair(const GroupRep& rho, const GroupRep& rho_p, const std::vector<std::size_t>& frob_set) {
  if (frob_set.empty()) throw std::invalid_argument("test set is empty");
  if (rho.group_ptr() != rho_p.group_ptr()) throw std::invalid_argument("representations of different groups");
  if (rho.ring() != rho_p.ring() && rho.ring()->name() != rho_p.ring()->name())
    throw std::invalid_argument("representations over different rings");
  for (auto g : frob_set)
    if (g >= rho.group().size()) throw std::invalid_argument("test element index out of range");
}

}  // namespace

SpanCertificate span_check(const GroupRep& rho, const GroupRep& rho_p, const std::vector<std::size_t>& frob_set) {
  check_pair(rho, rho_p, frob_set);
  const auto& R = *rho.ring();
  const std::size_t n = static_cast<std::size_t>(rho.dim() * rho.dim() + rho_p.dim() * rho_p.dim());
  SpanCertificate cert;

  std::vector<std::vector<Elem>> all;
  for (std::size_t g = 0; g < rho.group().size(); ++g) all.push_back(flatten(rho, rho_p, g));
  cert.full = module_profile(R, std::move(all), n);

  std::vector<std::vector<Elem>> fr;
  for (auto g : frob_set) fr.push_back(flatten(rho, rho_p, g));
  cert.frob = module_profile(R, fr, n);
  cert.spans = cert.frob.log_size == cert.full.log_size;

  std::vector<std::vector<Elem>> chosen;
  std::uint32_t have = 0;
  for (std::size_t k = 0; k < frob_set.size() && have < cert.frob.log_size; ++k) {
    chosen.push_back(fr[k]);
    const auto size = module_profile(R, chosen, n).log_size;
    if (size > have) {
      have = size;
      cert.basis.push_back(frob_set[k]);
    } else {
      chosen.pop_back();
    }
  }
  return cert;
}

std::string status_name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Verified: return "verified";
    case TraceStatus::TracesDiffer: return "traces differ on test set";
    case TraceStatus::NotSpanning: return "set not spanning";
    case TraceStatus::Counterexample: return "counterexample";
  }
  return "?";
}

TraceConclusion trace_conclusion_check(const GroupRep& rho, const GroupRep& rho_p,
                                       const std::vector<std::size_t>& frob_set) {
  check_pair(rho, rho_p, frob_set);
  TraceConclusion out;
  for (auto g : frob_set)
    if (rho.trace(g) != rho_p.trace(g)) {
      out.status = TraceStatus::TracesDiffer;
      out.witness = g;
      return out;
    }
  out.certificate = span_check(rho, rho_p, frob_set);
  if (!out.certificate.spans) {
    out.status = TraceStatus::NotSpanning;
    return out;
  }
  for (std::size_t g = 0; g < rho.group().size(); ++g) {
    ++out.elements_checked;
    if (rho.trace(g) != rho_p.trace(g)) {
      out.status = TraceStatus::Counterexample;
      out.witness = g;
      return out;
    }
  }
  out.status = TraceStatus::Verified;
  return out;
}

std::string pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::Conjugate: return "conjugate";
    case PairKind::DetTwist: return "det-twist";
    case PairKind::Contragredient: return "contragredient";
    case PairKind::Unrelated: return "unrelated";
  }
  return "?";
}

std::vector<RingPtr> instance_rings() {
  std::vector<RingPtr> out;
  for (const char* s : {"F_3", "F_4", "F_5", "F_7", "F_8", "F_9", "F_11", "F_13", "F_25", "Z/4", "Z/8", "Z/9", "Z/16",
                        "Z/25", "Z/27"})
    out.push_back(FiniteLocalRing::parse(s));
  return out;
}

namespace {

Elem random_elem(std::mt19937_64& rng, const FiniteLocalRing& R) { return static_cast<Elem>(rng() % R.size()); }

Elem random_unit(std::mt19937_64& rng, const FiniteLocalRing& R) {
  for (;;) {
    const Elem x = random_elem(rng, R);
    if (R.is_unit(x)) return x;
  }
}

RingMatrix random_gl2(std::mt19937_64& rng, const FiniteLocalRing& R) {
  for (;;) {
    RingMatrix A(2);
    for (auto& x : A.e) x = random_elem(rng, R);
    if (R.is_unit(mat_det(R, A))) return A;
  }
}

// Generators of small subgroups: tori, monomials, unipotents.
RingMatrix random_structured(std::mt19937_64& rng, const FiniteLocalRing& R) {
  RingMatrix A(2);
  switch (rng() % 4) {
    case 0:
      A(0, 0) = random_unit(rng, R);
      A(1, 1) = random_unit(rng, R);
      break;
    case 1:
      A(0, 1) = random_unit(rng, R);
      A(1, 0) = random_unit(rng, R);
      break;
    case 2:
      A(0, 0) = A(1, 1) = R.from_int(1);
      A(0, 1) = random_elem(rng, R);
      break;
    default:
      A(0, 0) = A(1, 1) = R.from_int(1);
      A(1, 0) = random_elem(rng, R);
      break;
  }
  return A;
}

RingMatrix partner(const FiniteLocalRing& R, const RingMatrix& A, PairKind kind, const RingMatrix& C,
                   const RingMatrix& Cinv, int twist, const RingMatrix& other) {
  switch (kind) {
    case PairKind::Conjugate: return mat_mul(R, mat_mul(R, C, A), Cinv);
    case PairKind::DetTwist: return mat_scale(R, A, R.pow(mat_det(R, A), static_cast<std::uint64_t>(twist)));
    case PairKind::Contragredient: return mat_transpose(mat_inverse(R, A));
    case PairKind::Unrelated: return other;
  }
  return A;
}

}  // namespace

FaltingsSerreInstance make_instance(RingPtr R, const std::vector<RingMatrix>& gens, PairKind kind,
                                    const RingMatrix& conjugator, int twist, std::size_t max_order) {
  if (gens.empty()) throw std::invalid_argument("need generators");
  RingMatrix C = conjugator.d ? conjugator : identity_matrix(gens.front().d);
  if (kind == PairKind::Unrelated) throw std::invalid_argument("unrelated pairs need explicit partner images");
  const RingMatrix Cinv = mat_inverse(*R, C);
  std::vector<RingMatrix> big;
  for (const auto& A : gens) big.push_back(block_diagonal(A, partner(*R, A, kind, C, Cinv, twist, A)));
  FaltingsSerreInstance inst;
  inst.ring = R;
  inst.kind = kind;
  inst.twist = twist;
  inst.group = std::make_shared<const MatrixGroup>(MatrixGroup::closure(R, big, max_order));
  const int d = gens.front().d;
  inst.rho = GroupRep::block_projection(inst.group, 0, d);
  inst.rho_p = GroupRep::block_projection(inst.group, d, d);
  return inst;
}

FaltingsSerreInstance random_instance(std::mt19937_64& rng, RingPtr R, std::size_t max_order) {
  const auto& F = *R;
  for (int attempt = 0;; ++attempt) {
    const PairKind kind = static_cast<PairKind>(rng() % 4);
    const int twist = 1 + static_cast<int>(rng() % 3);
    const RingMatrix C = random_gl2(rng, F), Cinv = mat_inverse(F, C);
    // Later attempts lean on structured generators, which close up faster.
    const int mode = attempt < 20 ? static_cast<int>(rng() % 3) : 2;
    const int ngens = 2;
    std::vector<RingMatrix> gens;
    for (int i = 0; i < ngens; ++i) {
      const bool structured = mode == 2 || (mode == 1 && i == 0);
      gens.push_back(structured ? random_structured(rng, F) : random_gl2(rng, F));
    }
    if (mode == 2 && rng() % 2) {
      // Hide the structure behind a change of basis.
      const RingMatrix P = random_gl2(rng, F), Pinv = mat_inverse(F, P);
      for (auto& g : gens) g = mat_mul(F, mat_mul(F, P, g), Pinv);
    }
    std::vector<RingMatrix> big;
    for (const auto& A : gens) {
      const RingMatrix other = mode == 2 ? random_structured(rng, F) : random_gl2(rng, F);
      big.push_back(block_diagonal(A, partner(F, A, kind, C, Cinv, twist, other)));
    }
    std::shared_ptr<const MatrixGroup> G;
    try {
      G = std::make_shared<const MatrixGroup>(MatrixGroup::closure(R, big, max_order));
    } catch (const ClosureOverflow&) {
      if (attempt > 2000) throw;
      continue;
    }
    if (G->size() < 2) continue;
    FaltingsSerreInstance inst;
    inst.ring = R;
    inst.kind = kind;
    inst.twist = twist;
    inst.group = G;
    inst.rho = GroupRep::block_projection(G, 0, 2);
    inst.rho_p = GroupRep::block_projection(G, 2, 2);

    std::vector<std::size_t> pool;
    const int set_mode = static_cast<int>(rng() % 4);
    if (kind == PairKind::DetTwist && set_mode == 0) {
      inst.frob_in_kernel = true;
      for (std::size_t g = 0; g < G->size(); ++g)
        if (F.pow(mat_det(F, inst.rho.image(g)), static_cast<std::uint64_t>(twist)) == F.from_int(1)) pool.push_back(g);
    } else {
      pool.resize(G->size());
      for (std::size_t g = 0; g < G->size(); ++g) pool[g] = g;
    }
    if (set_mode == 3 && !inst.frob_in_kernel) {
      inst.frob_set = pool;
    } else {
      const std::size_t want = 1 + rng() % std::min<std::size_t>(pool.size(), 24);
      for (std::size_t k = 0; k < want; ++k) std::swap(pool[k], pool[k + rng() % (pool.size() - k)]);
      inst.frob_set.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(want));
    }
    return inst;
  }
}

}  // namespace prymcheck
