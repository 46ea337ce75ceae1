#include "pg5/graph_ops.hpp"

#include <algorithm>
#include <stdexcept>

#include "pg5/isomorphism.hpp"

namespace pg5 {

std::optional<StarProfile> star_profile(const Bigraph& g) {
  for (int d = 1; d <= g.max_depth(); ++d)
    for (int v = 0; v < g.layer_size(d); ++v)
      for (int m : g.row(d, v))
        if (m > 1) return std::nullopt;
  if (g.edge_count() != g.total_vertices() - 1) return std::nullopt;  // not a tree

  std::optional<VertexRef> center;
  for (int d = 0; d <= g.max_depth(); ++d)
    for (int v = 0; v < g.layer_size(d); ++v) {
      if (g.degree({d, v}) < 3) continue;
      if (center) return std::nullopt;  // more than one branch vertex
      center = VertexRef{d, v};
    }
  if (!center) return std::nullopt;

  StarProfile out;
  const VertexRef star{0, 0};
  for (VertexRef first : g.neighbors(*center)) {
    int len = 1;
    bool has_star = (first == star);
    VertexRef prev = *center, cur = first;
    while (true) {
      std::vector<VertexRef> next;
      for (VertexRef w : g.neighbors(cur))
        if (!(w == prev)) next.push_back(w);
      if (next.empty()) break;
      prev = cur;
      cur = next.front();
      ++len;
      if (cur == star) has_star = true;
    }
    out.arms.push_back(len);
    if (has_star) out.star_arm = len;
  }
  std::sort(out.arms.begin(), out.arms.end());
  out.star_on_longest = !out.arms.empty() && out.star_arm == out.arms.back();
  return out;
}

std::optional<SpokeParams> spoke_2n_params(const Bigraph& g) {
  const auto prof = star_profile(g);
  if (!prof) return std::nullopt;
  if (prof->star_arm != 2) return std::nullopt;
  for (int a : prof->arms)
    if (a != 2) return std::nullopt;
  return SpokeParams{prof->num_arms(), prof->num_arms() + 1};
}

namespace {

Bigraph translate_graph(const Bigraph& g, int k) {
  std::vector<std::vector<std::vector<int>>> rows;
  rows.reserve(g.max_depth() + k);
  for (int d = 1; d <= k; ++d) rows.push_back({{1}});
  for (const auto& layer : g.rows()) rows.push_back(layer);
  std::vector<std::vector<int>> duals;
  duals.reserve(g.num_even_layers() + k / 2);
  for (int d = 0; d < k / 2; ++d) duals.push_back({0});
  for (const auto& perm : g.duals()) duals.push_back(perm);
  return Bigraph(std::move(rows), std::move(duals));
}

}  // namespace

BigraphPair translate(const BigraphPair& p, int k) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("translate: k must be even and >= 0");
  if (k == 0) return p;
  return BigraphPair{translate_graph(p.plus, k), translate_graph(p.minus, k)};
}

bool stable_at_depth(const Bigraph& g, int n) {
  if (n < 0 || n >= g.max_depth()) throw std::invalid_argument("stable_at_depth: need 0 <= n < max depth");
  for (int v = 0; v < g.layer_size(n); ++v) {
    int up = 0, up_vertices = 0;
    for (int w = 0; w < g.layer_size(n + 1); ++w) {
      const int m = g.mult(n + 1, w, v);
      up += m;
      if (m > 0) ++up_vertices;
    }
    if (up > 1 || up_vertices > 1) return false;
  }
  for (int w = 0; w < g.layer_size(n + 1); ++w) {
    int down = 0;
    for (int m : g.row(n + 1, w)) down += m;
    if (down != 1) return false;
  }
  return true;
}

namespace {

/// A pendant chain hanging off `root` in the deepest layer, `len` edges long.
struct Chain {
  int root;
  int len;
};

/// Appends the chains in list order: the new layer at each depth holds the
/// still-active chains in that order, so the order fixes the odd-vertex
/// identification across a pair. New even layers get identity duals.
Bigraph extend_with_chains(const Bigraph& g, int from, const std::vector<Chain>& chains) {
  auto rows = g.rows();
  auto duals = g.duals();
  std::vector<int> parents, remaining;
  for (const Chain& c : chains)
    if (c.len > 0) {
      parents.push_back(c.root);
      remaining.push_back(c.len);
    }
  int prev_size = g.layer_size(from);
  int depth = from;
  while (!parents.empty()) {
    ++depth;
    std::vector<std::vector<int>> layer;
    std::vector<int> next_parents, next_remaining;
    for (std::size_t i = 0; i < parents.size(); ++i) {
      std::vector<int> row(prev_size, 0);
      row[parents[i]] = 1;
      layer.push_back(std::move(row));
      if (remaining[i] > 1) {
        next_parents.push_back(static_cast<int>(layer.size()) - 1);
        next_remaining.push_back(remaining[i] - 1);
      }
    }
    prev_size = static_cast<int>(layer.size());
    rows.push_back(std::move(layer));
    if (depth % 2 == 0) {
      std::vector<int> identity(prev_size);
      for (int i = 0; i < prev_size; ++i) identity[i] = i;
      duals.push_back(std::move(identity));
    }
    parents = std::move(next_parents);
    remaining = std::move(next_remaining);
  }
  return Bigraph(std::move(rows), std::move(duals));
}

void enumerate_plans(int slots, int budget, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == slots) {
    out.push_back(cur);
    return;
  }
  for (int len = 0; len <= budget; ++len) {
    cur.push_back(len);
    enumerate_plans(slots, budget, cur, out);
    cur.pop_back();
  }
}

std::vector<Chain> active_chains(const std::vector<int>& plan) {
  std::vector<Chain> chains;
  for (int v = 0; v < static_cast<int>(plan.size()); ++v)
    if (plan[v] > 0) chains.push_back({v, plan[v]});
  return chains;
}

}  // namespace

std::vector<BigraphPair> stable_extensions(const BigraphPair& p, int extra_depths) {
  if (extra_depths < 0 || extra_depths > 8)
    throw std::invalid_argument("stable_extensions: extra_depths must be in [0, 8]");
  const int top = std::max(p.plus.max_depth(), p.minus.max_depth());
  const int slots_plus = p.plus.max_depth() == top ? p.plus.layer_size(top) : 0;
  const int slots_minus = p.minus.max_depth() == top ? p.minus.layer_size(top) : 0;

  std::vector<std::vector<int>> plans_plus, plans_minus;
  std::vector<int> cur;
  enumerate_plans(slots_plus, extra_depths, cur, plans_plus);
  enumerate_plans(slots_minus, extra_depths, cur, plans_minus);

  std::vector<BigraphPair> out;
  auto emit = [&](BigraphPair ext) {
    ext.plus.validate();
    ext.minus.validate();
    for (const auto& prior : out)
      if (pair_isomorphic(ext, prior, false)) return;
    out.push_back(std::move(ext));
  };

  for (const auto& pp : plans_plus) {
    const std::vector<Chain> chains_plus = active_chains(pp);
    for (const auto& pm : plans_minus) {
      std::vector<Chain> chains_minus = active_chains(pm);
      if (chains_minus.size() != chains_plus.size()) continue;
      // The chain order fixes which minus chain each plus chain is identified
      // with; enumerate every length-preserving matching (lockstep only).
      std::sort(chains_minus.begin(), chains_minus.end(),
                [](const Chain& a, const Chain& b) { return a.root < b.root; });
      do {
        bool lengths_match = true;
        for (std::size_t i = 0; i < chains_plus.size(); ++i)
          if (chains_plus[i].len != chains_minus[i].len) lengths_match = false;
        if (!lengths_match) continue;
        emit(BigraphPair{extend_with_chains(p.plus, top, chains_plus),
                         extend_with_chains(p.minus, top, chains_minus)});
      } while (std::next_permutation(
          chains_minus.begin(), chains_minus.end(),
          [](const Chain& a, const Chain& b) { return a.root < b.root; }));
    }
  }
  return out;
}

}  // namespace pg5
