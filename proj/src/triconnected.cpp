// Triconnected components by path search over a palm tree, following the
// Hopcroft-Tarjan scheme with the Gutwenger-Mutzel corrections.

#include <algorithm>
#include <list>
#include <numeric>

#include "tricompact/decomposition.hpp"
#include "tricompact/stack.hpp"

namespace tricompact {

namespace {

enum class ArcType : unsigned char { Unseen, Tree, Frond, Removed };

class PathSearch {
 public:
  explicit PathSearch(const Graph& g);
  SplitComponents run();

 private:
  using Iter = std::list<int>::iterator;

  int new_edge(int u, int v);
  void dfs1(int v, int parent);
  void build_acceptable_adjacency();
  void path_finder(int v);
  void search(int v);

  int high(int v) const { return highpt_[v].empty() ? 0 : highpt_[v].front(); }
  void del_high(int e) {
    if (has_high_[e]) {
      highpt_[tgt_[e]].erase(in_high_[e]);
      has_high_[e] = 0;
    }
  }
  void del_adj(int e) {
    if (has_adj_[e]) {
      adj_[src_[e]].erase(in_adj_[e]);
      has_adj_[e] = 0;
    }
  }
  void set_adj(Iter it, int e) {
    *it = e;
    in_adj_[e] = it;
    has_adj_[e] = 1;
  }
  void ts_push(int h, int a, int b) {
    ts_h_.push_back(h);
    ts_a_.push_back(a);
    ts_b_.push_back(b);
  }
  void ts_push_eos() { ts_push(0, -1, 0); }
  void ts_pop() {
    ts_h_.pop_back();
    ts_a_.pop_back();
    ts_b_.pop_back();
  }
  bool ts_not_eos() const { return ts_a_.back() != -1; }
  int pop_edge() {
    int e = estack_.back();
    estack_.pop_back();
    return e;
  }
  SplitComponents::Component& new_comp(SplitKind kind) {
    comps_.push_back({kind, {}});
    return comps_.back();
  }

  int n_ = 0;
  std::vector<Vertex> original_;           // local index -> graph id
  std::vector<std::vector<int>> incident_;  // initial incident edges per vertex
  std::vector<int> src_, tgt_;
  std::vector<ArcType> type_;
  std::vector<char> start_, has_adj_, has_high_;
  std::vector<Iter> in_adj_, in_high_;
  std::vector<std::list<int>> adj_, highpt_;
  std::vector<int> number_, lowpt1_, lowpt2_, nd_, degree_, newnum_, nodeat_, father_, tree_arc_;
  int num_count_ = 0;
  bool new_path_ = true;
  int root_ = 0;
  std::vector<int> ts_h_, ts_a_, ts_b_, estack_;
  std::vector<SplitComponents::Component> comps_;
};

PathSearch::PathSearch(const Graph& g) {
  original_ = g.vertices();
  n_ = static_cast<int>(original_.size());
  std::vector<int> local(g.id_bound(), -1);
  for (int i = 0; i < n_; ++i) local[original_[i]] = i;
  incident_.resize(n_);
  for (const Edge& e : g.edges()) {
    const int id = new_edge(local[e.u], local[e.v]);
    incident_[local[e.u]].push_back(id);
    incident_[local[e.v]].push_back(id);
  }
}

int PathSearch::new_edge(int u, int v) {
  src_.push_back(u);
  tgt_.push_back(v);
  type_.push_back(ArcType::Unseen);
  start_.push_back(0);
  has_adj_.push_back(0);
  has_high_.push_back(0);
  in_adj_.emplace_back();
  in_high_.emplace_back();
  return static_cast<int>(src_.size()) - 1;
}

void PathSearch::dfs1(int v, int parent) {
  number_[v] = ++num_count_;
  father_[v] = parent;
  lowpt1_[v] = lowpt2_[v] = number_[v];
  nd_[v] = 1;
  for (int e : incident_[v]) {
    if (type_[e] != ArcType::Unseen) continue;
    const int w = src_[e] == v ? tgt_[e] : src_[e];
    src_[e] = v;
    tgt_[e] = w;
    if (number_[w] == 0) {
      type_[e] = ArcType::Tree;
      tree_arc_[w] = e;
      dfs1(w, v);
      if (lowpt1_[w] < lowpt1_[v]) {
        lowpt2_[v] = std::min(lowpt1_[v], lowpt2_[w]);
        lowpt1_[v] = lowpt1_[w];
      } else if (lowpt1_[w] == lowpt1_[v]) {
        lowpt2_[v] = std::min(lowpt2_[v], lowpt2_[w]);
      } else {
        lowpt2_[v] = std::min(lowpt2_[v], lowpt1_[w]);
      }
      nd_[v] += nd_[w];
    } else {
      type_[e] = ArcType::Frond;
      if (number_[w] < lowpt1_[v]) {
        lowpt2_[v] = lowpt1_[v];
        lowpt1_[v] = number_[w];
      } else if (number_[w] > lowpt1_[v]) {
        lowpt2_[v] = std::min(lowpt2_[v], number_[w]);
      }
    }
  }
}

void PathSearch::build_acceptable_adjacency() {
  const int max_key = 3 * n_ + 2;
  std::vector<std::vector<int>> bucket(max_key + 1);
  for (int e = 0; e < static_cast<int>(src_.size()); ++e) {
    const int v = src_[e], w = tgt_[e];
    int key;
    if (type_[e] == ArcType::Frond) key = 3 * number_[w] + 1;
    else if (lowpt2_[w] < number_[v]) key = 3 * lowpt1_[w];
    else key = 3 * lowpt1_[w] + 2;
    bucket[key].push_back(e);
  }
  for (const auto& b : bucket)
    for (int e : b) {
      adj_[src_[e]].push_back(e);
      in_adj_[e] = std::prev(adj_[src_[e]].end());
      has_adj_[e] = 1;
    }
}

void PathSearch::path_finder(int v) {
  newnum_[v] = num_count_ - nd_[v] + 1;
  for (int e : adj_[v]) {
    const int w = tgt_[e];
    if (new_path_) {
      new_path_ = false;
      start_[e] = 1;
    }
    if (type_[e] == ArcType::Tree) {
      path_finder(w);
      --num_count_;
    } else {
      highpt_[w].push_back(newnum_[v]);
      in_high_[e] = std::prev(highpt_[w].end());
      has_high_[e] = 1;
      new_path_ = true;
    }
  }
}

void PathSearch::search(int v) {
  const int vnum = newnum_[v];
  auto& adj = adj_[v];
  int outv = static_cast<int>(adj.size());
  for (auto it = adj.begin(); it != adj.end();) {
    auto next = std::next(it);
    const int e = *it;
    int w = tgt_[e];
    int wnum = newnum_[w];

    if (type_[e] == ArcType::Tree) {
      if (start_[e]) {
        int y = 0, b = 0;
        if (ts_a_.back() > lowpt1_[w]) {
          do {
            y = std::max(y, ts_h_.back());
            b = ts_b_.back();
            ts_pop();
          } while (ts_a_.back() > lowpt1_[w]);
          ts_push(std::max(y, wnum + nd_[w] - 1), lowpt1_[w], b);
        } else {
          ts_push(wnum + nd_[w] - 1, lowpt1_[w], vnum);
        }
        ts_push_eos();
      }

      search(w);
      estack_.push_back(tree_arc_[w]);

      auto degree_two_case = [&] {
        return degree_[w] == 2 && !adj_[w].empty() && newnum_[tgt_[adj_[w].front()]] > wnum;
      };
      while (vnum != 1 && (ts_a_.back() == vnum || degree_two_case())) {
        const int a = ts_a_.back();
        const int b = ts_b_.back();
        if (a == vnum && father_[nodeat_[b]] == nodeat_[a]) {
          ts_pop();
          continue;
        }
        int e_ab = -1;
        int e_virt = -1;
        int x = -1;
        if (degree_two_case()) {
          const int e1 = pop_edge();
          const int e2 = pop_edge();
          del_adj(e2);
          x = tgt_[e2];
          e_virt = new_edge(v, x);
          --degree_[x];
          --degree_[v];
          auto& c = new_comp(SplitKind::Polygon);
          c.edges = {e1, e2, e_virt};
          if (!estack_.empty()) {
            const int top = estack_.back();
            if (src_[top] == x && tgt_[top] == v) {
              e_ab = pop_edge();
              del_adj(e_ab);
              del_high(e_ab);
            }
          }
        } else {
          const int h = ts_h_.back();
          ts_pop();
          std::vector<int> taken;
          while (!estack_.empty()) {
            const int xy = estack_.back();
            const int xn = newnum_[src_[xy]], yn = newnum_[tgt_[xy]];
            if (!(a <= xn && xn <= h && a <= yn && yn <= h)) break;
            if ((xn == a && yn == b) || (yn == a && xn == b)) {
              e_ab = pop_edge();
              if (e_ab != *it) del_adj(e_ab);
              del_high(e_ab);
            } else {
              const int eh = pop_edge();
              if (eh != *it) {
                del_adj(eh);
                del_high(eh);
              }
              taken.push_back(eh);
              --degree_[src_[eh]];
              --degree_[tgt_[eh]];
            }
          }
          e_virt = new_edge(nodeat_[a], nodeat_[b]);
          taken.push_back(e_virt);
          new_comp(taken.size() >= 4 ? SplitKind::Rigid : SplitKind::Polygon).edges = std::move(taken);
          x = nodeat_[b];
        }
        if (e_ab >= 0) {
          auto& c = new_comp(SplitKind::Bond);
          c.edges = {e_ab, e_virt};
          e_virt = new_edge(v, x);
          c.edges.push_back(e_virt);
          --degree_[x];
          --degree_[v];
        }
        estack_.push_back(e_virt);
        set_adj(it, e_virt);
        ++degree_[x];
        ++degree_[v];
        father_[x] = v;
        tree_arc_[x] = e_virt;
        type_[e_virt] = ArcType::Tree;
        w = x;
        wnum = newnum_[w];
      }

      if (lowpt2_[w] >= vnum && lowpt1_[w] < vnum && (father_[v] != root_ || outv >= 2)) {
        std::vector<int> taken;
        int xn = 0, yn = 0;
        while (!estack_.empty()) {
          const int xy = estack_.back();
          xn = newnum_[src_[xy]];
          yn = newnum_[tgt_[xy]];
          if (!((wnum <= xn && xn < wnum + nd_[w]) || (wnum <= yn && yn < wnum + nd_[w]))) break;
          taken.push_back(pop_edge());
          del_high(xy);
          --degree_[src_[xy]];
          --degree_[tgt_[xy]];
        }
        const int low = nodeat_[lowpt1_[w]];
        int e_virt = new_edge(v, low);
        taken.push_back(e_virt);
        new_comp(taken.size() >= 4 ? SplitKind::Rigid : SplitKind::Polygon).edges = std::move(taken);

        if (!estack_.empty() && ((xn == vnum && yn == lowpt1_[w]) || (yn == vnum && xn == lowpt1_[w]))) {
          const int eh = pop_edge();
          if (eh != *it) del_adj(eh);
          auto& c = new_comp(SplitKind::Bond);
          c.edges = {eh, e_virt};
          e_virt = new_edge(v, low);
          c.edges.push_back(e_virt);
          if (has_high_[eh]) {
            in_high_[e_virt] = in_high_[eh];
            has_high_[e_virt] = 1;
            has_high_[eh] = 0;
          }
          --degree_[v];
          --degree_[low];
        }

        if (low != father_[v]) {
          estack_.push_back(e_virt);
          set_adj(it, e_virt);
          if (!has_high_[e_virt] && high(low) < vnum) {
            highpt_[low].push_front(vnum);
            in_high_[e_virt] = highpt_[low].begin();
            has_high_[e_virt] = 1;
          }
          ++degree_[v];
          ++degree_[low];
        } else {
          has_adj_[*it] = 0;
          adj.erase(it);
          auto& c = new_comp(SplitKind::Bond);
          c.edges.push_back(e_virt);
          e_virt = new_edge(low, v);
          c.edges.push_back(e_virt);
          const int eh = tree_arc_[v];
          c.edges.push_back(eh);
          tree_arc_[v] = e_virt;
          type_[e_virt] = ArcType::Tree;
          set_adj(in_adj_[eh], e_virt);
          has_adj_[eh] = 0;
        }
      }

      if (start_[e]) {
        while (ts_not_eos()) ts_pop();
        ts_pop();
      }
      while (ts_not_eos() && ts_b_.back() != vnum && high(v) > ts_h_.back()) ts_pop();
      --outv;
    } else {
      if (start_[e]) {
        int y = 0, b = 0;
        if (ts_a_.back() > wnum) {
          do {
            y = std::max(y, ts_h_.back());
            b = ts_b_.back();
            ts_pop();
          } while (ts_a_.back() > wnum);
          ts_push(y, wnum, b);
        } else {
          ts_push(vnum, wnum, vnum);
        }
      }
      estack_.push_back(e);
    }
    it = next;
  }
}

SplitComponents PathSearch::run() {
  const int m0 = static_cast<int>(src_.size());
  number_.assign(n_, 0);
  lowpt1_.assign(n_, 0);
  lowpt2_.assign(n_, 0);
  nd_.assign(n_, 0);
  father_.assign(n_, -1);
  tree_arc_.assign(n_, -1);
  newnum_.assign(n_, 0);
  nodeat_.assign(n_ + 1, -1);
  adj_.assign(n_, {});
  highpt_.assign(n_, {});
  degree_.assign(n_, 0);
  for (int v = 0; v < n_; ++v) degree_[v] = static_cast<int>(incident_[v].size());

  root_ = 0;
  num_count_ = 0;
  dfs1(root_, -1);
  build_acceptable_adjacency();
  num_count_ = n_;
  new_path_ = true;
  path_finder(root_);

  std::vector<int> old_to_new(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) old_to_new[number_[v]] = newnum_[v];
  for (int v = 0; v < n_; ++v) {
    nodeat_[newnum_[v]] = v;
    lowpt1_[v] = old_to_new[lowpt1_[v]];
    lowpt2_[v] = old_to_new[lowpt2_[v]];
  }

  ts_push_eos();
  search(root_);
  if (!estack_.empty()) {
    auto& c = new_comp(SplitKind::Polygon);
    c.edges = estack_;
    estack_.clear();
  }

  SplitComponents out;
  out.num_real = m0;
  out.edge_ends.reserve(src_.size());
  for (std::size_t e = 0; e < src_.size(); ++e)
    out.edge_ends.emplace_back(original_[src_[e]], original_[tgt_[e]]);

  // Classify by shape: a non-bond piece is a polygon exactly when it is a cycle.
  for (auto& c : comps_) {
    if (c.kind == SplitKind::Bond) continue;
    std::vector<Vertex> vs;
    for (int e : c.edges) {
      vs.push_back(out.edge_ends[e].u);
      vs.push_back(out.edge_ends[e].v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    c.kind = vs.size() == c.edges.size() ? SplitKind::Polygon : SplitKind::Rigid;
  }

  // Merge bonds with bonds and polygons with polygons across shared virtual edges.
  const int k = static_cast<int>(comps_.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::array<int, 2>> owners(src_.size(), {-1, -1});
  for (int i = 0; i < k; ++i)
    for (int e : comps_[i].edges) (owners[e][0] < 0 ? owners[e][0] : owners[e][1]) = i;
  std::vector<char> dissolved(src_.size(), 0);
  for (std::size_t e = m0; e < src_.size(); ++e) {
    const int a = owners[e][0], b = owners[e][1];
    if (a < 0 || b < 0) continue;
    if (comps_[a].kind == comps_[b].kind && comps_[a].kind != SplitKind::Rigid) {
      parent[find(a)] = find(b);
      dissolved[e] = 1;
    }
  }
  std::vector<int> slot(k, -1);
  for (int i = 0; i < k; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.components.size());
      out.components.push_back({comps_[i].kind, {}});
    }
    auto& dst = out.components[slot[r]].edges;
    for (int e : comps_[i].edges)
      if (!dissolved[e]) dst.push_back(e);
  }
  for (auto& c : out.components) std::sort(c.edges.begin(), c.edges.end());
  return out;
}

}  // namespace

SplitComponents triconnected_components(const Graph& g) {
  if (g.num_vertices() < 3 || !is_biconnected(g))
    throw Error(ErrorKind::Not2Connected, "triconnected components need a 2-connected graph");
  SplitComponents out;
  auto work = [&] {
    PathSearch ps(g);
    out = ps.run();
  };
  if (g.num_vertices() > 4000) run_with_stack(std::size_t{1} << 30, work);
  else work();
  return out;
}

bool is_triconnected(const Graph& g) {
  if (g.num_vertices() < 4 || !is_biconnected(g)) return false;
  const auto sc = triconnected_components(g);
  return sc.components.size() == 1 && sc.components[0].kind == SplitKind::Rigid;
}

}  // namespace tricompact
