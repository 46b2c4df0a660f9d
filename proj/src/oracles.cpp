#include "tricompact/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>

namespace tricompact {

namespace {

class Clock {
 public:
  explicit Clock(double cap) : cap_(cap), start_(std::chrono::steady_clock::now()) {}
  void check() {
    if ((++ticks_ & 0xfff) != 0) return;
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (s > cap_) throw Error(ErrorKind::BudgetExceeded, "oracle time cap");
  }

 private:
  double cap_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t ticks_ = 0;
};

void require_budget(const Graph& g, const OracleBudget& b) {
  if (g.num_vertices() > b.max_vertices || g.num_edges() > b.max_edges)
    throw Error(ErrorKind::BudgetExceeded, "graph too large for oracle");
}

// Component label per vertex of g minus blocked, -1 for blocked/dead.
int label_components(const Graph& g, const std::vector<char>& blocked, std::vector<int>& comp) {
  comp.assign(g.id_bound(), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s : g.vertices()) {
    if (blocked[s] || comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (!blocked[y] && comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

bool reaches(const Graph& g, Vertex from, Vertex to, const std::vector<char>& blocked,
             std::vector<Vertex>* path) {
  std::vector<Vertex> parent(g.id_bound(), kNoVertex);
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    if (x == to) break;
    for (Vertex y : g.neighbors(x))
      if (!blocked[y] && parent[y] == kNoVertex) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (parent[to] == kNoVertex) return false;
  if (path) {
    path->clear();
    for (Vertex x = to; x != from; x = parent[x]) path->push_back(x);
    path->push_back(from);
    std::reverse(path->begin(), path->end());
  }
  return true;
}

}  // namespace

bool bf_is_connected(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> blocked(g.id_bound(), 0);
  for (Vertex v : removed) blocked[v] = 1;
  std::vector<int> comp;
  return label_components(g, blocked, comp) <= 1;
}

std::optional<PathPair> bf_two_disjoint_paths(const Graph& g, Vertex s1, Vertex t1, Vertex s2,
                                              Vertex t2, OracleBudget budget) {
  require_budget(g, budget);
  Clock clock(budget.time_cap_seconds);
  std::vector<char> used(g.id_bound(), 0);
  std::vector<Vertex> p1{s1};
  std::vector<Vertex> p2;
  used[s1] = used[s2] = used[t2] = 1;

  std::function<bool(Vertex)> extend = [&](Vertex x) -> bool {
    clock.check();
    if (x == t1) {
      used[s2] = used[t2] = 0;
      bool ok = reaches(g, s2, t2, used, &p2);
      used[s2] = used[t2] = 1;
      return ok;
    }
    for (Vertex y : g.neighbors(x)) {
      if (used[y]) continue;
      used[y] = 1;
      p1.push_back(y);
      if (extend(y)) return true;
      p1.pop_back();
      used[y] = 0;
    }
    return false;
  };
  if (extend(s1)) return PathPair{p1, p2};
  return std::nullopt;
}

bool bf_is_k_connected(const Graph& g, int k, OracleBudget budget) {
  require_budget(g, budget);
  if (k <= 0) return true;
  if (g.num_vertices() <= k) return false;
  Clock clock(budget.time_cap_seconds);
  const auto vs = g.vertices();
  std::vector<char> blocked(g.id_bound(), 0);
  std::vector<int> comp;
  std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int left) -> bool {
    clock.check();
    if (label_components(g, blocked, comp) > 1) return false;
    if (left == 0) return true;
    for (std::size_t i = start; i < vs.size(); ++i) {
      blocked[vs[i]] = 1;
      bool ok = rec(i + 1, left - 1);
      blocked[vs[i]] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, k - 1);
}

bool bf_is_3_connected(const Graph& g, OracleBudget budget) { return bf_is_k_connected(g, 3, budget); }

std::vector<Vertex> bf_cut_vertices(const Graph& g) {
  std::vector<char> blocked(g.id_bound(), 0);
  std::vector<int> comp;
  const int base = label_components(g, blocked, comp);
  std::vector<Vertex> out;
  for (Vertex v : g.vertices()) {
    blocked[v] = 1;
    if (label_components(g, blocked, comp) > base) out.push_back(v);
    blocked[v] = 0;
  }
  return out;
}

std::vector<BfCutOff> bf_all_3cuts(const Graph& g, std::span<const Vertex> terminals,
                                   OracleBudget budget) {
  require_budget(g, budget);
  Clock clock(budget.time_cap_seconds);
  const auto vs = g.vertices();
  std::vector<char> blocked(g.id_bound(), 0);
  std::vector<char> is_terminal(g.id_bound(), 0);
  for (Vertex t : terminals) is_terminal[t] = 1;
  std::vector<int> comp;
  std::vector<BfCutOff> out;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      for (std::size_t c = b + 1; c < vs.size(); ++c) {
        clock.check();
        blocked[vs[a]] = blocked[vs[b]] = blocked[vs[c]] = 1;
        int count = label_components(g, blocked, comp);
        if (count >= 2) {
          std::vector<std::vector<Vertex>> parts(count);
          std::vector<char> touches(count, 0);
          for (Vertex v : vs)
            if (comp[v] >= 0) {
              parts[comp[v]].push_back(v);
              if (is_terminal[v]) touches[comp[v]] = 1;
            }
          for (int i = 0; i < count; ++i)
            if (!touches[i]) out.push_back({{vs[a], vs[b], vs[c]}, parts[i]});
        }
        blocked[vs[a]] = blocked[vs[b]] = blocked[vs[c]] = 0;
      }
  return out;
}

std::vector<Edge> bf_strong_2cuts(const Graph& g, OracleBudget budget) {
  require_budget(g, budget);
  Clock clock(budget.time_cap_seconds);
  const auto vs = g.vertices();
  std::vector<char> blocked(g.id_bound(), 0);
  std::vector<int> comp;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Vertex x = vs[i], y = vs[j];
      blocked[x] = blocked[y] = 1;
      bool is_cut = label_components(g, blocked, comp) >= 2;
      blocked[x] = blocked[y] = 0;
      if (!is_cut) continue;
      // Three disjoint paths iff no small separator, by Menger.
      Graph h = g;
      int separator = 2;
      if (h.has_edge(x, y)) {
        h.remove_edge(x, y);
        separator = 1;
      }
      bool strong = reaches(h, x, y, blocked, nullptr);
      for (std::size_t a = 0; strong && a < vs.size(); ++a) {
        if (vs[a] == x || vs[a] == y) continue;
        blocked[vs[a]] = 1;
        if (!reaches(h, x, y, blocked, nullptr)) strong = false;
        for (std::size_t b = a + 1; strong && separator == 2 && b < vs.size(); ++b) {
          clock.check();
          if (vs[b] == x || vs[b] == y) continue;
          blocked[vs[b]] = 1;
          if (!reaches(h, x, y, blocked, nullptr)) strong = false;
          blocked[vs[b]] = 0;
        }
        blocked[vs[a]] = 0;
      }
      std::fill(blocked.begin(), blocked.end(), 0);
      if (strong) out.emplace_back(x, y);
    }
  return out;
}

int bf_max_disjoint_paths(const Graph& g, Vertex u, Vertex v, OracleBudget budget) {
  require_budget(g, budget);
  if (u == v) throw Error(ErrorKind::SameVertex, "u == v");
  if (g.id_bound() > 64) throw Error(ErrorKind::BudgetExceeded, "ids must fit a 64-bit mask");
  Clock clock(budget.time_cap_seconds);
  // Each path is recorded by the bitmask of its interior vertices.
  std::vector<std::uint64_t> interiors;
  std::vector<char> used(g.id_bound(), 0);
  std::uint64_t mask = 0;
  std::function<void(Vertex)> walk = [&](Vertex x) {
    clock.check();
    for (Vertex y : g.neighbors(x)) {
      if (y == v) {
        interiors.push_back(mask);
        continue;
      }
      if (used[y]) continue;
      used[y] = 1;
      mask |= std::uint64_t{1} << y;
      walk(y);
      mask &= ~(std::uint64_t{1} << y);
      used[y] = 0;
    }
  };
  used[u] = 1;
  walk(u);
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> pick = [&](std::size_t i, std::uint64_t taken,
                                                                   int count) {
    clock.check();
    best = std::max(best, count);
    if (count + static_cast<int>(interiors.size() - i) <= best) return;
    for (std::size_t j = i; j < interiors.size(); ++j)
      if ((interiors[j] & taken) == 0) pick(j + 1, taken | interiors[j], count + 1);
  };
  pick(0, 0, 0);
  return best;
}

int bf_min_vertex_cut(const Graph& g, Vertex u, Vertex v, OracleBudget budget) {
  require_budget(g, budget);
  if (u == v) throw Error(ErrorKind::SameVertex, "u == v");
  if (g.has_edge(u, v)) throw Error(ErrorKind::InvalidPayload, "adjacent vertices have no cut");
  std::vector<Vertex> others;
  for (Vertex w : g.vertices())
    if (w != u && w != v) others.push_back(w);
  std::vector<char> blocked(g.id_bound(), 0);
  const int n = static_cast<int>(others.size());
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      for (int i : pick) blocked[others[i]] = 1;
      bool cut = !reaches(g, u, v, blocked, nullptr);
      for (int i : pick) blocked[others[i]] = 0;
      if (cut) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

}  // namespace tricompact
