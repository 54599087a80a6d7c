#include "oddpath/matching.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <queue>

namespace oddpath {
namespace {

// Port of the classic primal-dual blossom algorithm. Endpoint p of edge k is
// edges[k].u for p = 2k and edges[k].v for p = 2k+1.
class BlossomMatcher {
 public:
  BlossomMatcher(int n, const std::vector<IntEdge>& edges, bool maxcard)
      : nv_(n), edges_(edges), maxcard_(maxcard) {
    const int ne = static_cast<int>(edges_.size());
    std::int64_t maxw = 0;
    for (const auto& e : edges_) maxw = std::max(maxw, e.w);
    endpoint_.resize(2 * ne);
    for (int p = 0; p < 2 * ne; ++p) endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
    neighbend_.assign(nv_, {});
    for (int k = 0; k < ne; ++k) {
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }
    mate_.assign(nv_, -1);
    label_.assign(2 * nv_, 0);
    labelend_.assign(2 * nv_, -1);
    inblossom_.resize(nv_);
    for (int i = 0; i < nv_; ++i) inblossom_[i] = i;
    blossomparent_.assign(2 * nv_, -1);
    blossomchilds_.assign(2 * nv_, {});
    blossombase_.assign(2 * nv_, -1);
    for (int i = 0; i < nv_; ++i) blossombase_[i] = i;
    blossomendps_.assign(2 * nv_, {});
    bestedge_.assign(2 * nv_, -1);
    blossombestedges_.assign(2 * nv_, {});
    has_bestedges_.assign(2 * nv_, 0);
    for (int b = nv_; b < 2 * nv_; ++b) unused_.push_back(b);
    dualvar_.assign(2 * nv_, 0);
    for (int i = 0; i < nv_; ++i) dualvar_[i] = maxw;
    allowedge_.assign(ne, 0);
  }

  std::vector<int> run(MatchingDual* dual) {
    if (edges_.empty()) return std::vector<int>(nv_, -1);
    for (int stage = 0; stage < nv_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv_; b < 2 * nv_; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < nv_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        std::int64_t delta = 0;
        int deltaedge = -1, deltablossom = -1;
        if (!maxcard_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_);
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            std::int64_t d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * nv_; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            std::int64_t ks = slack(bestedge_[b]);
            assert(ks % 2 == 0);
            std::int64_t d = ks / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          delta = std::max<std::int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_));
        }
        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 1)
            dualvar_[v] -= delta;
          else if (label_[inblossom_[v]] == 2)
            dualvar_[v] += delta;
        }
        for (int b = nv_; b < 2 * nv_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }
        }
        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].u);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = nv_; b < 2 * nv_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }

    if (dual) {
      dual->vertex.assign(dualvar_.begin(), dualvar_.begin() + nv_);
      dual->blossom_vertices.clear();
      dual->blossom.clear();
      for (int b = nv_; b < 2 * nv_; ++b) {
        if (blossombase_[b] < 0) continue;
        dual->blossom_vertices.push_back(leaves(b));
        dual->blossom.push_back(dualvar_[b]);
      }
    }
    std::vector<int> out(nv_, -1);
    for (int v = 0; v < nv_; ++v)
      if (mate_[v] >= 0) out[v] = mate_[v] / 2;
    return out;
  }

 private:
  std::int64_t slack(int k) const {
    const IntEdge& e = edges_[k];
    return dualvar_[e.u] + dualvar_[e.v] - 2 * e.w;
  }

  void leaves_into(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int c : blossomchilds_[b]) leaves_into(c, out);
  }
  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves_into(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves_into(b, queue_);
    } else if (t == 2) {
      int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u, w = edges_[k].v;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int x : leaves(b)) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    }
    std::vector<int> bestedgeto(2 * nv_, -1);
    for (int child : path) {
      std::vector<std::vector<int>> nblists;
      if (!has_bestedges_[child]) {
        for (int x : leaves(child)) {
          std::vector<int> lst;
          for (int p : neighbend_[x]) lst.push_back(p / 2);
          nblists.push_back(std::move(lst));
        }
      } else {
        nblists.push_back(blossombestedges_[child]);
      }
      for (const auto& nbl : nblists) {
        for (int kk : nbl) {
          int i = edges_[kk].u, j = edges_[kk].v;
          if (inblossom_[j] == b) std::swap(i, j);
          int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
            bestedgeto[bj] = kk;
        }
      }
      blossombestedges_[child].clear();
      has_bestedges_[child] = 0;
      bestedge_[child] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto)
      if (kk != -1) blossombestedges_[b].push_back(kk);
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }

  void expand_blossom(int b, bool endstage) {
    std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int x : leaves(s)) inblossom_[x] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& ch = blossomchilds_[b];
      const auto& ep = blossomendps_[b];
      const int len = static_cast<int>(ch.size());
      auto at = [len](const std::vector<int>& vec, int idx) { return vec[((idx % len) + len) % len]; };
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[at(ep, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[at(ep, j - endptrick) / 2] = 1;
        j += jstep;
        p = at(ep, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = at(ch, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (at(ch, j) != entrychild) {
        bv = at(ch, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int v = -1;
        for (int x : leaves(bv)) {
          v = x;
          if (label_[x] != 0) break;
        }
        if (v >= 0 && label_[v] != 0) {
          label_[v] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(v, 2, labelend_[v]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& ch = blossomchilds_[b];
    auto& ep = blossomendps_[b];
    const int len = static_cast<int>(ch.size());
    auto at = [len](const std::vector<int>& vec, int idx) { return vec[((idx % len) + len) % len]; };
    int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(ch, j);
      int p = at(ep, j - endptrick) ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = at(ch, j);
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
  }

  void augment_matching(int k) {
    int v = edges_[k].u, w = edges_[k].v;
    std::pair<int, int> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (auto [s, p] : starts) {
      while (true) {
        int bs = inblossom_[s];
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_;
  const std::vector<IntEdge>& edges_;
  bool maxcard_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_;
  std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> blossombase_, bestedge_, unused_;
  std::vector<std::int64_t> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_matching(int n, const std::vector<IntEdge>& edges, bool max_cardinality,
                                     MatchingDual* dual) {
  for (const auto& e : edges)
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
      throw SolverError(Errc::Structural, "bad matching edge");
  BlossomMatcher m(n, edges, max_cardinality);
  return m.run(dual);
}

std::optional<std::string> check_perfect_matching_certificate(int n, const std::vector<IntEdge>& edges,
                                                              const std::vector<int>& mate_edge,
                                                              const MatchingDual& dual) {
  if (static_cast<int>(mate_edge.size()) != n) return "mate vector has wrong size";
  if (static_cast<int>(dual.vertex.size()) != n) return "vertex dual has wrong size";
  for (int v = 0; v < n; ++v) {
    int k = mate_edge[v];
    if (k < 0) return "vertex " + std::to_string(v) + " unmatched";
    if (edges[k].u != v && edges[k].v != v) return "mate edge not incident";
    int other = edges[k].u == v ? edges[k].v : edges[k].u;
    if (mate_edge[other] != k) return "matching not symmetric";
  }
  // membership lists per vertex
  std::vector<std::vector<int>> member(n);
  for (std::size_t b = 0; b < dual.blossom.size(); ++b) {
    if (dual.blossom[b] < 0) return "negative blossom dual";
    if (dual.blossom_vertices[b].size() % 2 != 1) return "blossom of even size";
    for (int v : dual.blossom_vertices[b]) member[v].push_back(static_cast<int>(b));
  }
  for (auto& lst : member) std::sort(lst.begin(), lst.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const IntEdge& e = edges[k];
    __int128 s = static_cast<__int128>(dual.vertex[e.u]) + dual.vertex[e.v] - 2 * static_cast<__int128>(e.w);
    std::vector<int> common;
    std::set_intersection(member[e.u].begin(), member[e.u].end(), member[e.v].begin(), member[e.v].end(),
                          std::back_inserter(common));
    for (int b : common) s += 2 * static_cast<__int128>(dual.blossom[b]);
    if (s < 0) return "negative slack on edge " + std::to_string(k);
    if (mate_edge[e.u] == static_cast<int>(k) && s != 0) return "matched edge " + std::to_string(k) + " not tight";
  }
  for (std::size_t b = 0; b < dual.blossom.size(); ++b) {
    if (dual.blossom[b] == 0) continue;
    const auto& vs = dual.blossom_vertices[b];
    std::vector<char> in(n, 0);
    for (int v : vs) in[v] = 1;
    std::size_t inside = 0;
    for (int v : vs) {
      const IntEdge& e = edges[mate_edge[v]];
      if (in[e.u] && in[e.v]) ++inside;
    }
    if (inside != vs.size() - 1) return "blossom with positive dual is not full";
  }
  return std::nullopt;
}

IntMatchingResult min_weight_perfect_matching_int(int n, const std::vector<IntEdge>& edges, bool certify) {
  IntMatchingResult res;
  if (n % 2 != 0) return res;
  if (n == 0) {
    res.perfect = true;
    return res;
  }
  std::int64_t maxw = std::numeric_limits<std::int64_t>::min();
  for (const auto& e : edges) maxw = std::max(maxw, e.w);
  std::vector<IntEdge> shifted = edges;
  std::int64_t K = edges.empty() ? 0 : checked_add(maxw, 1);
  for (auto& e : shifted) e.w = checked_add(K, -e.w);
  MatchingDual dual;
  auto mate = max_weight_matching(n, shifted, true, certify ? &dual : nullptr);
  for (int v = 0; v < n; ++v)
    if (mate[v] < 0) return res;
  res.perfect = true;
  for (int v = 0; v < n; ++v) {
    int k = mate[v];
    if (std::min(edges[k].u, edges[k].v) == v) {
      res.edges.push_back(k);
      res.weight = checked_add(res.weight, edges[k].w);
    }
  }
  std::sort(res.edges.begin(), res.edges.end());
  if (certify) res.certificate_error = check_perfect_matching_certificate(n, shifted, mate, dual);
  return res;
}

MatchingResult min_weight_perfect_matching(const WeightedGraph& g, bool certify) {
  MatchingResult out;
  if (g.n() % 2 != 0) return out;
  auto weights = g.weights();
  ScaledWeights sw = scale_to_integers(weights, static_cast<std::int64_t>(g.n()) + 2);
  std::vector<IntEdge> edges;
  edges.reserve(g.m());
  for (int i = 0; i < g.m(); ++i) edges.push_back({g.edge(i).u, g.edge(i).v, sw.values[i]});
  auto r = min_weight_perfect_matching_int(g.n(), edges, certify);
  if (!r.perfect) return out;
  out.status = Status::Found;
  out.edges = r.edges;
  out.weight = edge_set_weight(g, out.edges);
  out.certificate_error = r.certificate_error;
  return out;
}

namespace {

// Dijkstra over scaled non-negative integer weights; returns dist and parent edge.
void dijkstra(const WeightedGraph& g, const std::vector<std::int64_t>& w, int src, std::vector<std::int64_t>& dist,
              std::vector<int>& pedge) {
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  dist.assign(g.n(), inf);
  pedge.assign(g.n(), -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (auto [to, e] : g.adj(v)) {
      std::int64_t nd = d + w[e];
      if (nd < dist[to]) {
        dist[to] = nd;
        pedge[to] = e;
        pq.push({nd, to});
      }
    }
  }
}

}  // namespace

TJoinResult min_weight_t_join(const WeightedGraph& g, const std::vector<int>& t_set) {
  TJoinResult out;
  if (t_set.size() % 2 != 0) throw SolverError(Errc::InvalidInput, "T-join terminal set has odd size");
  for (const Edge& e : g.edges())
    if (e.w.is_negative()) throw SolverError(Errc::InvalidInput, "T-join needs non-negative weights");
  std::vector<char> seen(g.n(), 0);
  for (int v : t_set) {
    if (!g.valid_vertex(v) || seen[v]) throw SolverError(Errc::InvalidInput, "bad or repeated T-join terminal");
    seen[v] = 1;
  }
  if (t_set.empty()) {
    out.status = Status::Found;
    return out;
  }
  auto weights = g.weights();
  ScaledWeights sw = scale_to_integers(weights, static_cast<std::int64_t>(g.n()) * 2 + 2);
  const int k = static_cast<int>(t_set.size());
  std::vector<std::vector<std::int64_t>> dist(k);
  std::vector<std::vector<int>> pedge(k);
  for (int i = 0; i < k; ++i) dijkstra(g, sw.values, t_set[i], dist[i], pedge[i]);
  std::vector<IntEdge> closure;
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (dist[i][t_set[j]] != inf) closure.push_back({i, j, dist[i][t_set[j]]});
  auto r = min_weight_perfect_matching_int(k, closure, false);
  if (!r.perfect) return out;
  std::vector<char> parity(g.m(), 0);
  for (int idx : r.edges) {
    int i = closure[idx].u;
    int v = t_set[closure[idx].v];
    while (v != t_set[i]) {
      int e = pedge[i][v];
      parity[e] ^= 1;
      v = g.edge(e).other(v);
    }
  }
  out.status = Status::Found;
  for (int e = 0; e < g.m(); ++e)
    if (parity[e]) out.edges.push_back(e);
  out.weight = edge_set_weight(g, out.edges);
  return out;
}

int maximum_matching_size(const WeightedGraph& g, const std::vector<int>& edge_ids) {
  std::vector<int> local(g.n(), -1);
  std::vector<int> verts;
  for (int e : edge_ids)
    for (int x : {g.edge(e).u, g.edge(e).v})
      if (local[x] < 0) {
        local[x] = static_cast<int>(verts.size());
        verts.push_back(x);
      }
  const int k = static_cast<int>(verts.size());
  if (k == 0) return 0;
  std::vector<IntEdge> edges;
  for (int e : edge_ids) edges.push_back({local[g.edge(e).u], local[g.edge(e).v], -1});
  for (int i = 0; i < k; ++i) edges.push_back({i, k + i, 0});
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.push_back({k + i, k + j, 0});
  auto r = min_weight_perfect_matching_int(2 * k, edges, false);
  if (!r.perfect) throw SolverError(Errc::Structural, "padded matching instance has no perfect matching");
  return static_cast<int>(-r.weight);
}

}  // namespace oddpath
