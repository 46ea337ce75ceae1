#include "pg5/bigraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace pg5 {
namespace {

constexpr const char* kPrefix = "bwd";
constexpr const char* kDuals = "duals";

}  // namespace

int Bigraph::degree(VertexRef v) const {
  int deg = 0;
  if (v.depth >= 1)
    for (int m : row(v.depth, v.index)) deg += m;
  if (v.depth < max_depth())
    for (int w = 0; w < layer_size(v.depth + 1); ++w) deg += mult(v.depth + 1, w, v.index);
  return deg;
}

std::vector<VertexRef> Bigraph::neighbors(VertexRef v) const {
  std::vector<VertexRef> out;
  if (v.depth >= 1)
    for (int u = 0; u < layer_size(v.depth - 1); ++u)
      if (mult(v.depth, v.index, u) > 0) out.push_back({v.depth - 1, u});
  if (v.depth < max_depth())
    for (int w = 0; w < layer_size(v.depth + 1); ++w)
      if (mult(v.depth + 1, w, v.index) > 0) out.push_back({v.depth + 1, w});
  return out;
}

int Bigraph::edge_count() const {
  int e = 0;
  for (int d = 1; d <= max_depth(); ++d)
    for (int v = 0; v < layer_size(d); ++v)
      for (int m : row(d, v)) e += m;
  return e;
}

void Bigraph::validate() const {
  for (int d = 1; d <= max_depth(); ++d) {
    if (layer_size(d) == 0) throw ValidationError("empty layer at depth " + std::to_string(d));
    for (int v = 0; v < layer_size(d); ++v) {
      const auto& r = row(d, v);
      if (static_cast<int>(r.size()) != layer_size(d - 1))
        throw ValidationError("row length mismatch at depth " + std::to_string(d) + ", vertex " +
                              std::to_string(v + 1) + ": " + std::to_string(r.size()) +
                              " slots but depth " + std::to_string(d - 1) + " has " +
                              std::to_string(layer_size(d - 1)) + " vertices");
      int deg_down = 0;
      for (int m : r) {
        if (m < 0) throw ValidationError("negative multiplicity");
        deg_down += m;
      }
      if (deg_down == 0)
        throw ValidationError("vertex at depth " + std::to_string(d) +
                              " has no edge to depth " + std::to_string(d - 1));
    }
  }
  const int even_layers = max_depth() / 2 + 1;
  if (static_cast<int>(duals_.size()) != even_layers)
    throw ValidationError("expected " + std::to_string(even_layers) +
                          " dual layers, got " + std::to_string(duals_.size()));
  for (int k = 0; k < even_layers; ++k) {
    const auto& perm = duals_[k];
    const int n = layer_size(2 * k);
    if (static_cast<int>(perm.size()) != n)
      throw ValidationError("dual permutation at depth " + std::to_string(2 * k) +
                            " has wrong length");
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
      if (perm[v] < 0 || perm[v] >= n)
        throw ValidationError("dual entry out of range at depth " + std::to_string(2 * k));
      seen[perm[v]] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw ValidationError("dual at depth " + std::to_string(2 * k) + " is not a permutation");
    for (int v = 0; v < n; ++v)
      if (perm[perm[v]] != v)
        throw ValidationError("dual at depth " + std::to_string(2 * k) + " is not an involution");
  }
  // Connectivity over the whole graded graph.
  std::vector<std::vector<bool>> visited;
  visited.emplace_back(1, false);
  for (int d = 1; d <= max_depth(); ++d) visited.emplace_back(layer_size(d), false);
  std::queue<VertexRef> q;
  q.push({0, 0});
  visited[0][0] = true;
  int count = 0;
  while (!q.empty()) {
    VertexRef v = q.front();
    q.pop();
    ++count;
    for (VertexRef w : neighbors(v))
      if (!visited[w.depth][w.index]) {
        visited[w.depth][w.index] = true;
        q.push(w);
      }
  }
  if (count != total_vertices()) throw ValidationError("graph is not connected");
}

Bigraph parse_bigraph(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, pos); };

  if (text.rfind(kPrefix, 0) != 0) throw fail("expected prefix \"bwd\"");
  pos = 3;
  const std::size_t duals_at = text.find(kDuals, pos);
  if (duals_at == std::string::npos) throw fail("missing \"duals\" section");

  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t at = s.find(sep, start);
      parts.push_back(s.substr(start, at == std::string::npos ? at : at - start));
      if (at == std::string::npos) break;
      start = at + 1;
    }
    return parts;
  };

  const std::string graph_part = text.substr(pos, duals_at - pos);
  if (graph_part.empty()) throw fail("empty graph body");

  std::vector<std::vector<std::vector<int>>> rows;
  {
    std::size_t layer_pos = pos;
    for (const std::string& layer_str : split(graph_part, 'v')) {
      std::vector<std::vector<int>> layer;
      std::size_t vertex_pos = layer_pos;
      if (layer_str.empty()) {
        pos = layer_pos;
        throw fail("empty layer");
      }
      for (const std::string& vertex_str : split(layer_str, 'p')) {
        std::vector<int> r;
        std::size_t digit_pos = vertex_pos;
        if (vertex_str.empty()) {
          pos = vertex_pos;
          throw fail("empty vertex");
        }
        for (const std::string& digit_str : split(vertex_str, 'x')) {
          pos = digit_pos;
          if (digit_str.size() != 1 || digit_str[0] < '0' || digit_str[0] > '9')
            throw fail("expected a single digit multiplicity");
          r.push_back(digit_str[0] - '0');
          digit_pos += digit_str.size() + 1;
        }
        layer.push_back(std::move(r));
        vertex_pos += vertex_str.size() + 1;
      }
      rows.push_back(std::move(layer));
      layer_pos += layer_str.size() + 1;
    }
  }

  pos = duals_at + 5;
  if (pos >= text.size()) throw fail("empty duals section");
  const std::string duals_part = text.substr(pos);

  std::vector<std::vector<int>> duals;
  {
    std::size_t layer_pos = pos;
    for (const std::string& layer_str : split(duals_part, 'v')) {
      std::vector<int> perm;
      std::size_t entry_pos = layer_pos;
      if (layer_str.empty()) {
        pos = layer_pos;
        throw fail("empty dual layer");
      }
      for (const std::string& entry_str : split(layer_str, 'x')) {
        pos = entry_pos;
        if (entry_str.empty() ||
            entry_str.find_first_not_of("0123456789") != std::string::npos)
          throw fail("expected a 1-based dual index");
        perm.push_back(std::stoi(entry_str) - 1);
        entry_pos += entry_str.size() + 1;
      }
      duals.push_back(std::move(perm));
      layer_pos += layer_str.size() + 1;
    }
  }

  Bigraph g(std::move(rows), std::move(duals));
  g.validate();
  return g;
}

std::string serialize_bigraph(const Bigraph& g) {
  std::ostringstream os;
  os << kPrefix;
  for (int d = 1; d <= g.max_depth(); ++d) {
    if (d > 1) os << 'v';
    for (int v = 0; v < g.layer_size(d); ++v) {
      if (v > 0) os << 'p';
      const auto& r = g.row(d, v);
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) os << 'x';
        if (r[i] > 9) throw ValidationError("multiplicity >= 10 not representable");
        os << r[i];
      }
    }
  }
  os << kDuals;
  for (int k = 0; k < g.num_even_layers(); ++k) {
    if (k > 0) os << 'v';
    const auto& perm = g.dual_layer(k);
    for (std::size_t v = 0; v < perm.size(); ++v) {
      if (v > 0) os << 'x';
      os << perm[v] + 1;
    }
  }
  return os.str();
}

BigraphPair make_pair(Bigraph plus, Bigraph minus) {
  plus.validate();
  minus.validate();
  const int max_odd = std::max(plus.max_depth(), minus.max_depth());
  for (int d = 1; d <= max_odd; d += 2)
    if (plus.layer_size(d) != minus.layer_size(d))
      throw ValidationError("odd-layer counts differ at depth " + std::to_string(d) + ": " +
                            std::to_string(plus.layer_size(d)) + " vs " +
                            std::to_string(minus.layer_size(d)));
  if (std::abs(plus.max_depth() - minus.max_depth()) > 1)
    throw ValidationError("maximum depths differ by more than 1");
  return BigraphPair{std::move(plus), std::move(minus)};
}

BigraphPair parse_pair(const std::string& plus_text, const std::string& minus_text) {
  return make_pair(parse_bigraph(plus_text), parse_bigraph(minus_text));
}

BigraphPair opposite(const BigraphPair& p) { return BigraphPair{p.minus, p.plus}; }

}  // namespace pg5
