#include "pg5/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace pg5 {
namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

/// Edge consistency between layers d-1 and d under candidate permutations.
bool edges_match(const Bigraph& a, const Bigraph& b, int depth,
                 const std::vector<int>& perm_d, const std::vector<int>& perm_prev) {
  for (int v = 0; v < a.layer_size(depth); ++v)
    for (int u = 0; u < a.layer_size(depth - 1); ++u)
      if (a.mult(depth, v, u) != b.mult(depth, perm_d[v], perm_prev[u])) return false;
  return true;
}

bool duals_match(const Bigraph& a, const Bigraph& b, int depth, const std::vector<int>& perm) {
  for (int v = 0; v < a.layer_size(depth); ++v)
    if (perm[a.dual_of(depth, v)] != b.dual_of(depth, perm[v])) return false;
  return true;
}

struct Searcher {
  const BigraphPair& p;
  const BigraphPair& q;
  int max_depth;
  std::vector<std::vector<int>> plus_perm, minus_perm;

  bool descend(int depth) {
    if (depth > max_depth) return true;
    const bool in_plus = depth <= p.plus.max_depth();
    const bool in_minus = depth <= p.minus.max_depth();
    if (depth % 2 == 1) {
      // One shared permutation on the identified odd layer.
      const int n = in_plus ? p.plus.layer_size(depth) : p.minus.layer_size(depth);
      for (const auto& perm : all_permutations(n)) {
        if (in_plus && !edges_match(p.plus, q.plus, depth, perm, plus_perm[depth - 1])) continue;
        if (in_minus && !edges_match(p.minus, q.minus, depth, perm, minus_perm[depth - 1]))
          continue;
        plus_perm[depth] = perm;
        minus_perm[depth] = perm;
        if (descend(depth + 1)) return true;
      }
      return false;
    }
    // Even depth: independent permutations per graph, each preserving duals.
    auto candidates = [&](const Bigraph& a, const Bigraph& b,
                          const std::vector<int>& prev) {
      std::vector<std::vector<int>> out;
      for (const auto& perm : all_permutations(a.layer_size(depth)))
        if ((depth == 0 || edges_match(a, b, depth, perm, prev)) && duals_match(a, b, depth, perm))
          out.push_back(perm);
      return out;
    };
    const auto plus_cands = in_plus
        ? candidates(p.plus, q.plus, depth ? plus_perm[depth - 1] : std::vector<int>{})
        : std::vector<std::vector<int>>{{}};
    const auto minus_cands = in_minus
        ? candidates(p.minus, q.minus, depth ? minus_perm[depth - 1] : std::vector<int>{})
        : std::vector<std::vector<int>>{{}};
    for (const auto& pp : plus_cands)
      for (const auto& mp : minus_cands) {
        plus_perm[depth] = pp;
        minus_perm[depth] = mp;
        if (descend(depth + 1)) return true;
      }
    return false;
  }
};

std::optional<PairIso> match(const BigraphPair& p, const BigraphPair& q) {
  if (p.plus.max_depth() != q.plus.max_depth() || p.minus.max_depth() != q.minus.max_depth())
    return std::nullopt;
  for (int d = 0; d <= p.plus.max_depth(); ++d)
    if (p.plus.layer_size(d) != q.plus.layer_size(d)) return std::nullopt;
  for (int d = 0; d <= p.minus.max_depth(); ++d)
    if (p.minus.layer_size(d) != q.minus.layer_size(d)) return std::nullopt;

  Searcher s{p, q, std::max(p.plus.max_depth(), p.minus.max_depth()), {}, {}};
  s.plus_perm.resize(s.max_depth + 1);
  s.minus_perm.resize(s.max_depth + 1);
  if (!s.descend(0)) return std::nullopt;
  s.plus_perm.resize(p.plus.max_depth() + 1);
  s.minus_perm.resize(p.minus.max_depth() + 1);
  return PairIso{std::move(s.plus_perm), std::move(s.minus_perm), false};
}

}  // namespace

Bigraph relabel(const Bigraph& g, const std::vector<std::vector<int>>& perms) {
  std::vector<std::vector<std::vector<int>>> rows(g.max_depth());
  for (int d = 1; d <= g.max_depth(); ++d) {
    rows[d - 1].assign(g.layer_size(d), std::vector<int>(g.layer_size(d - 1), 0));
    for (int v = 0; v < g.layer_size(d); ++v)
      for (int u = 0; u < g.layer_size(d - 1); ++u)
        rows[d - 1][perms[d][v]][perms[d - 1][u]] = g.mult(d, v, u);
  }
  std::vector<std::vector<int>> duals(g.num_even_layers());
  for (int k = 0; k < g.num_even_layers(); ++k) {
    const int depth = 2 * k;
    duals[k].assign(g.layer_size(depth), 0);
    for (int v = 0; v < g.layer_size(depth); ++v)
      duals[k][perms[depth][v]] = perms[depth][g.dual_of(depth, v)];
  }
  return Bigraph(std::move(rows), std::move(duals));
}

BigraphPair apply_iso(const BigraphPair& p, const PairIso& iso) {
  return BigraphPair{relabel(p.plus, iso.plus), relabel(p.minus, iso.minus)};
}

std::optional<PairIso> pair_isomorphic(const BigraphPair& p, const BigraphPair& q,
                                       bool allow_opposite) {
  if (auto iso = match(p, q)) return iso;
  if (allow_opposite) {
    if (auto iso = match(p, opposite(q))) {
      iso->swapped = true;
      return iso;
    }
  }
  return std::nullopt;
}

BigraphPair random_relabel(const BigraphPair& p, std::mt19937_64& rng) {
  const int max_depth = std::max(p.plus.max_depth(), p.minus.max_depth());
  auto random_perm = [&rng](int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
  };
  std::vector<std::vector<int>> plus_perms(p.plus.max_depth() + 1);
  std::vector<std::vector<int>> minus_perms(p.minus.max_depth() + 1);
  for (int d = 0; d <= max_depth; ++d) {
    if (d % 2 == 1) {
      const int n = d <= p.plus.max_depth() ? p.plus.layer_size(d) : p.minus.layer_size(d);
      auto perm = random_perm(n);
      if (d <= p.plus.max_depth()) plus_perms[d] = perm;
      if (d <= p.minus.max_depth()) minus_perms[d] = perm;
    } else {
      if (d <= p.plus.max_depth()) plus_perms[d] = random_perm(p.plus.layer_size(d));
      if (d <= p.minus.max_depth()) minus_perms[d] = random_perm(p.minus.layer_size(d));
    }
  }
  return BigraphPair{relabel(p.plus, plus_perms), relabel(p.minus, minus_perms)};
}

}  // namespace pg5
