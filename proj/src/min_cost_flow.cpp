#include "oddpath/min_cost_flow.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace oddpath {

int MinCostFlow::add_arc(int from, int to, std::int64_t cap, std::int64_t cost) {
  if (from < 0 || to < 0 || from >= n_ || to >= n_ || cap < 0) throw std::invalid_argument("bad arc");
  int id = static_cast<int>(arcs_.size() / 2);
  arcs_.push_back({to, head_[from], cap, cost});
  head_[from] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({from, head_[to], 0, -cost});
  head_[to] = static_cast<int>(arcs_.size()) - 1;
  return id;
}

MinCostFlow::Result MinCostFlow::solve() {
  Result res;
  std::vector<std::int64_t> excess = supply_;
  for (std::size_t i = 0; i < arcs_.size(); i += 2) {
    if (arcs_[i].cost < 0 && arcs_[i].cap > 0) {
      std::int64_t c = arcs_[i].cap;
      res.cost += c * arcs_[i].cost;
      excess[arcs_[i + 1].to] -= c;  // tail sent c it did not have
      excess[arcs_[i].to] += c;
      push(static_cast<int>(i), c);
    }
  }
  // super terminals
  const int S = n_, T = n_ + 1;
  const int total = n_ + 2;
  head_.resize(total, -1);
  std::size_t base = arcs_.size();
  auto add_raw = [&](int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap, 0});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  };
  std::int64_t need = 0;
  std::int64_t balance = 0;
  for (int v = 0; v < n_; ++v) {
    balance += excess[v];
    if (excess[v] > 0) {
      add_raw(S, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      add_raw(v, T, -excess[v]);
    }
  }
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> pot(total, 0), dist(total);
  std::vector<int> prev(total);
  std::int64_t sent = 0;
  using Item = std::pair<std::int64_t, int>;
  while (balance == 0 && sent < need) {
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(prev.begin(), prev.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[S] = 0;
    pq.push({0, S});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      for (int i = head_[v]; i != -1; i = arcs_[i].next) {
        const Arc& a = arcs_[i];
        if (a.cap <= 0) continue;
        std::int64_t nd = d + a.cost + pot[v] - pot[a.to];
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          prev[a.to] = i;
          pq.push({nd, a.to});
        }
      }
    }
    if (dist[T] >= inf) break;
    for (int v = 0; v < total; ++v)
      if (dist[v] < inf) pot[v] += dist[v];
    std::int64_t amount = need - sent;
    for (int v = T; v != S; v = arcs_[prev[v] ^ 1].to) amount = std::min(amount, arcs_[prev[v]].cap);
    for (int v = T; v != S; v = arcs_[prev[v] ^ 1].to) {
      push(prev[v], amount);
      res.cost += amount * arcs_[prev[v]].cost;
    }
    sent += amount;
  }
  res.feasible = balance == 0 && sent == need;
  // drop the super terminals so the object stays reusable for flow queries
  for (std::size_t i = arcs_.size(); i > base; i -= 2) {
    int from = arcs_[i - 1].to;
    int to = arcs_[i - 2].to;
    head_[from] = arcs_[i - 2].next;
    head_[to] = arcs_[i - 1].next;
  }
  arcs_.resize(base);
  head_.resize(n_);
  return res;
}

}  // namespace oddpath
