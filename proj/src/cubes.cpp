#include "scatterlab/cubes.hpp"

#include "scatterlab/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace scatterlab {

bool touches(const Box& a, const Box& b) {
  if (a.corner.size() != b.corner.size()) fail(ErrorKind::dimension_mismatch, "boxes of different dimension");
  for (size_t i = 0; i < a.corner.size(); ++i)
    if (a.corner[i] > b.corner[i] + b.edge || b.corner[i] > a.corner[i] + a.edge) return false;
  return true;
}

namespace {

void check_dims(const BoxUnion& u) {
  for (auto& b : u.boxes)
    if (static_cast<int>(b.corner.size()) != u.dimension)
      fail(ErrorKind::dimension_mismatch, "box dimension differs from the union's");
}

struct Dsu {
  std::vector<size_t> parent;
  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Boustrophedon order of the cells of a k^n grid: consecutive cells differ by
// one step along one axis.
std::vector<std::vector<int>> snake(int k, int n) {
  if (n == 0) return {{}};
  auto inner = snake(k, n - 1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < k; ++i) {
    for (size_t j = 0; j < inner.size(); ++j) {
      auto cell = inner[i % 2 == 0 ? j : inner.size() - 1 - j];
      cell.push_back(i);
      out.push_back(std::move(cell));
    }
  }
  return out;
}

// If the boxes form a full k^n grid of equal cubes, a Hamiltonian path through them.
std::optional<std::vector<size_t>> grid_path(const BoxUnion& u, const std::vector<size_t>& comp) {
  const Box& first = u.boxes[comp.front()];
  int n = u.dimension;
  std::vector<Rat> lo = first.corner;
  for (size_t i : comp) {
    if (u.boxes[i].edge != first.edge) return std::nullopt;
    for (int d = 0; d < n; ++d) lo[d] = min(lo[d], u.boxes[i].corner[d]);
  }
  std::map<std::vector<int>, size_t> at;
  int k = 0;
  for (size_t i : comp) {
    std::vector<int> cell;
    for (int d = 0; d < n; ++d) {
      Rat q = (u.boxes[i].corner[d] - lo[d]) / first.edge;
      if (!q.is_integer() || !q.num().fits_sint_p()) return std::nullopt;
      cell.push_back(static_cast<int>(q.num().get_si()));
      k = std::max(k, cell.back() + 1);
    }
    if (!at.emplace(cell, i).second) return std::nullopt;
  }
  size_t total = 1;
  for (int d = 0; d < n; ++d) total *= static_cast<size_t>(k);
  if (total != comp.size()) return std::nullopt;
  std::vector<size_t> path;
  for (auto& cell : snake(k, n)) path.push_back(at.at(cell));
  return path;
}

// Longest simple path by depth-first search; stops early on a Hamiltonian path.
std::vector<size_t> longest_path(const BoxUnion& u, const std::vector<size_t>& comp) {
  size_t m = comp.size();
  std::vector<std::vector<size_t>> adj(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (touches(u.boxes[comp[i]], u.boxes[comp[j]])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<size_t> best, cur;
  std::vector<bool> used(m, false);
  std::function<bool(size_t)> dfs = [&](size_t v) {
    used[v] = true;
    cur.push_back(v);
    if (cur.size() > best.size()) best = cur;
    if (best.size() == m) return true;
    for (size_t w : adj[v])
      if (!used[w] && dfs(w)) return true;
    used[v] = false;
    cur.pop_back();
    return false;
  };
  for (size_t s = 0; s < m && best.size() < m; ++s) {
    std::fill(used.begin(), used.end(), false);
    cur.clear();
    dfs(s);
  }
  std::vector<size_t> out;
  for (size_t v : best) out.push_back(comp[v]);
  return out;
}

}  // namespace

std::vector<std::vector<size_t>> box_components(const BoxUnion& u) {
  check_dims(u);
  Dsu dsu(u.boxes.size());
  for (size_t i = 0; i < u.boxes.size(); ++i)
    for (size_t j = i + 1; j < u.boxes.size(); ++j)
      if (touches(u.boxes[i], u.boxes[j])) dsu.unite(i, j);
  std::map<size_t, std::vector<size_t>> groups;  // keyed by the least index
  for (size_t i = 0; i < u.boxes.size(); ++i) groups[dsu.find(i)].push_back(i);
  std::vector<std::vector<size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<ChainInfo> chain_sizes(const BoxUnion& u) {
  std::vector<ChainInfo> out;
  for (auto& comp : box_components(u)) {
    ChainInfo info;
    info.size = comp.size();
    if (auto path = grid_path(u, comp)) {
      info.witness = std::move(*path);
    } else if (comp.size() <= 20) {
      info.witness = longest_path(u, comp);
    } else {
      fail(ErrorKind::chain_intractable, "component of " + std::to_string(comp.size()) + " boxes is not a full grid");
    }
    info.max_chain = info.witness.size();
    out.push_back(std::move(info));
  }
  return out;
}

int frame_holes(const FrameRegion& f) {
  if (f.outer.corner.size() != 2) fail(ErrorKind::dimension_mismatch, "frames are planar");
  for (size_t i = 0; i < f.holes.size(); ++i) {
    auto& h = f.holes[i];
    if (h.corner.size() != 2) fail(ErrorKind::dimension_mismatch, "hole " + std::to_string(i) + " is not planar");
    for (int d = 0; d < 2; ++d)
      if (!(h.corner[d] > f.outer.corner[d] && h.corner[d] + h.edge < f.outer.corner[d] + f.outer.edge))
        fail(ErrorKind::validation, "hole " + std::to_string(i) + " is not inside the interior of the frame");
    for (size_t j = 0; j < i; ++j)
      if (touches(f.holes[j], h))
        fail(ErrorKind::validation, "holes " + std::to_string(j) + " and " + std::to_string(i) + " meet");
  }
  return static_cast<int>(f.holes.size());
}

long frame_subcube_count(const FrameRegion& f, int m) {
  frame_holes(f);
  Rat l = f.outer.edge / Rat(2 * m + 1);
  long cells = static_cast<long>(2 * m + 1) * (2 * m + 1);
  long removed = 0;
  for (size_t i = 0; i < f.holes.size(); ++i) {
    auto& h = f.holes[i];
    Rat span = h.edge / l;
    Rat x = (h.corner[0] - f.outer.corner[0]) / l, y = (h.corner[1] - f.outer.corner[1]) / l;
    if (!span.is_integer() || !x.is_integer() || !y.is_integer())
      fail(ErrorKind::validation, "hole " + std::to_string(i) + " is not aligned with the grid");
    removed += span.num().get_si() * span.num().get_si();
  }
  return cells - removed;
}

std::set<int> recover_S_cubes(const CubeFamily& fam, int k_max) {
  if (k_max < 1) fail(ErrorKind::range, "k_max must be positive");
  Term x = lower(fam.scaffold);
  BoundaryTower tower(x);
  std::set<int> s;
  for (auto& c : fam.members) {
    const Box& b = c.box;
    bool shape_ok = static_cast<int>(b.corner.size()) == fam.dimension && b.edge == c.hi - c.lo &&
                    std::all_of(b.corner.begin(), b.corner.end(), [&](const Rat& v) { return v == c.lo; });
    if (!shape_ok) fail(ErrorKind::structural_mismatch, "member is not the cube over its label");
    if (!member(x, c.lo) || !member(x, c.hi) || !member(x, (c.lo + c.hi) / 2))
      fail(ErrorKind::structural_mismatch, "label is not a component of the scaffold");
    if (auto m = tower.recovery_index(c.lo, c.hi, k_max)) s.insert(*m);
  }
  return s;
}

}  // namespace scatterlab
