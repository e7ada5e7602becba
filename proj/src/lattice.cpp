#include "latmodel/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace latmodel {

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

Lattice Lattice::from_leq(std::vector<std::string> labels,
                          std::vector<char> leq) {
  Lattice l;
  l.n_ = static_cast<int>(labels.size());
  l.labels_ = std::move(labels);
  l.leq_ = std::move(leq);
  const int n = l.n_;

  // meet/join tables; failure here is the caller's NotALattice case.
  l.meet_.assign(n * n, -1);
  l.join_.assign(n * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ElementId m = -1;
      ElementId j = -1;
      for (int z = 0; z < n; ++z) {
        if (l.leq(z, x) && l.leq(z, y) && (m == -1 || l.leq(m, z))) m = z;
        if (l.leq(x, z) && l.leq(y, z) && (j == -1 || l.leq(z, j))) j = z;
      }
      // m is a maximal candidate; verify it dominates every lower bound.
      if (m != -1)
        for (int z = 0; z < n; ++z)
          if (l.leq(z, x) && l.leq(z, y) && !l.leq(z, m)) m = -1;
      if (j != -1)
        for (int z = 0; z < n; ++z)
          if (l.leq(x, z) && l.leq(y, z) && !l.leq(j, z)) j = -1;
      if (m == -1 || j == -1)
        throw Error(ErrorKind::not_a_lattice,
                    std::string("NotALattice: elements '") + l.labels_[x] +
                        "' and '" + l.labels_[y] + "' have no unique " +
                        (m == -1 ? "meet" : "join"));
      l.meet_[x * n + y] = m;
      l.join_[x * n + y] = j;
    }
  }

  // bottom/top
  l.bottom_ = 0;
  l.top_ = 0;
  for (int x = 0; x < n; ++x) {
    l.bottom_ = l.meet(l.bottom_, x);
    l.top_ = l.join(l.top_, x);
  }

  // covers
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!l.lt(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (l.lt(x, z) && l.lt(z, y)) direct = false;
      if (direct) l.covers_.emplace_back(x, y);
    }
  }
  std::sort(l.covers_.begin(), l.covers_.end());

  // rank = longest chain from bottom, via covers in topological sweeps
  l.rank_.assign(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [x, y] : l.covers_) {
      if (l.rank_[y] < l.rank_[x] + 1) {
        l.rank_[y] = l.rank_[x] + 1;
        changed = true;
      }
    }
  }

  // arrow index over non-identity comparable pairs, sorted by (src, tgt)
  l.arrow_index_.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.lt(x, y)) {
        l.arrow_index_[x * n + y] = static_cast<int>(l.arrows_.size());
        l.arrows_.push_back(Arrow{x, y});
      }

  l.grid_coord_.assign(n, {0, 0});
  return l;
}

int Lattice::arrow_index(Arrow f) const {
  if (f.src < 0 || f.src >= n_ || f.tgt < 0 || f.tgt >= n_)
    throw Error(ErrorKind::unknown_element,
                "UnknownElement: arrow endpoint out of range");
  const int idx = arrow_index_[f.src * n_ + f.tgt];
  if (idx < 0)
    throw Error(ErrorKind::not_comparable,
                "NotComparable: no non-identity arrow '" + labels_[f.src] +
                    "' -> '" + labels_[f.tgt] + "'");
  return idx;
}

int Lattice::arrow_index_or(Arrow f, int fallback) const {
  if (f.src < 0 || f.src >= n_ || f.tgt < 0 || f.tgt >= n_) return fallback;
  const int idx = arrow_index_[f.src * n_ + f.tgt];
  return idx < 0 ? fallback : idx;
}

bool Lattice::is_cover(Arrow f) const {
  return std::binary_search(covers_.begin(), covers_.end(),
                            std::make_pair(f.src, f.tgt));
}

Arrow Lattice::pullback(Arrow f, ElementId z) const {
  if (!leq(z, f.tgt))
    throw Error(ErrorKind::not_below_target,
                "NotBelowTarget: '" + labels_[z] + "' is not below '" +
                    labels_[f.tgt] + "'");
  return Arrow{meet(f.src, z), z};
}

Arrow Lattice::pushout(Arrow f, ElementId z) const {
  if (!leq(f.src, z))
    throw Error(ErrorKind::not_above_source,
                "NotAboveSource: '" + labels_[z] + "' is not above '" +
                    labels_[f.src] + "'");
  return Arrow{z, join(f.tgt, z)};
}

Lattice Lattice::chain(int n) {
  if (n < 0)
    throw Error(ErrorKind::precondition_violated, "chain: n must be >= 0");
  const int size = n + 1;
  std::vector<std::string> labels(size);
  std::vector<char> leq(size * size, 0);
  for (int i = 0; i < size; ++i) {
    labels[i] = std::to_string(i);
    for (int j = i; j < size; ++j) leq[i * size + j] = 1;
  }
  Lattice l = from_leq(std::move(labels), std::move(leq));
  l.set_family_spec("chain:" + std::to_string(n));
  return l;
}

Lattice Lattice::product(const Lattice& p, const Lattice& q) {
  const int np = p.size();
  const int nq = q.size();
  const int n = np * nq;
  std::vector<std::string> labels(n);
  std::vector<char> leq(n * n, 0);
  auto id = [nq](int i, int j) { return i * nq + j; };
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) labels[id(i, j)] = pair_label(p.label(i), q.label(j));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int k = 0; k < np; ++k)
        for (int m = 0; m < nq; ++m)
          if (p.leq(i, k) && q.leq(j, m)) leq[id(i, j) * n + id(k, m)] = 1;
  Lattice l = from_leq(std::move(labels), std::move(leq));

  // grid metadata when both factors are chains (covers == element count - 1
  // exactly characterizes a chain)
  const bool p_chain = static_cast<int>(p.covers().size()) == np - 1 &&
                       p.arrow_count() == np * (np - 1) / 2;
  const bool q_chain = static_cast<int>(q.covers().size()) == nq - 1 &&
                       q.arrow_count() == nq * (nq - 1) / 2;
  if (p_chain && q_chain) {
    l.grid_dims_ = std::make_pair(np - 1, nq - 1);
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < nq; ++j) l.grid_coord_[id(i, j)] = {i, j};
    l.set_family_spec("grid:" + std::to_string(np - 1) + "," +
                      std::to_string(nq - 1));
  }
  return l;
}

Lattice Lattice::parallel_composition(const Lattice& p, const Lattice& q) {
  if (p.size() < 2 || q.size() < 2)
    throw Error(ErrorKind::precondition_violated,
                "parallel_composition: both inputs need >= 2 elements");

  // Elements: all of p, plus q's non-extremes. q's bottom/top fold into p's.
  std::vector<int> qmap(q.size(), -1);
  std::vector<std::string> labels = p.labels();
  qmap[q.bottom()] = p.bottom();
  qmap[q.top()] = p.top();
  auto unique_label = [&labels](std::string s) {
    while (std::find(labels.begin(), labels.end(), s) != labels.end())
      s += "'";
    return s;
  };
  for (int x = 0; x < q.size(); ++x) {
    if (qmap[x] >= 0) continue;
    qmap[x] = static_cast<int>(labels.size());
    labels.push_back(unique_label(q.label(x)));
  }

  const int n = static_cast<int>(labels.size());
  std::vector<char> leq(n * n, 0);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) leq[x * n + y] = 1;
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y)
      if (q.leq(x, y)) leq[qmap[x] * n + qmap[y]] = 1;
  // the glued order is the union: every q-middle sits between the shared
  // bottom and top and is incomparable to p-middles, so no transitive
  // closure is needed; meets/joins may still fail, which from_leq reports.
  return from_leq(std::move(labels), std::move(leq));
}

Lattice Lattice::diamond(int n) {
  if (n < 1)
    throw Error(ErrorKind::precondition_violated, "diamond: n must be >= 1");
  std::vector<std::string> labels;
  labels.push_back("bot");
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  labels.push_back("top");
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= n; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, n + 1);
  }
  Lattice l = from_cover_relations(std::move(labels), std::move(covers));
  l.set_family_spec("diamond:" + std::to_string(n));
  return l;
}

Lattice Lattice::pentagon() {
  Lattice l = from_cover_relations(
      {"0", "a", "b", "c", "1"},
      {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
  l.set_family_spec("pentagon");
  return l;
}

Lattice Lattice::from_cover_relations(std::vector<std::string> labels,
                                      std::vector<std::pair<int, int>> covers) {
  const int n = static_cast<int>(labels.size());
  if (n == 0)
    throw Error(ErrorKind::not_a_lattice,
                "NotALattice: a lattice needs at least one element");
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw Error(ErrorKind::unknown_element,
                  "UnknownElement: cover index out of range");
    if (x == y)
      throw Error(ErrorKind::cycle,
                  "CycleError: self-loop at '" + labels[x] + "'");
  }

  std::vector<std::vector<int>> out(n);
  for (auto [x, y] : covers) out[x].push_back(y);

  // cycle detection, DFS with path recovery
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  auto cycle_error = [&](int from, int to) {
    std::string path = labels[to];
    for (int v = from; v != -1 && v != to; v = parent[v])
      path = labels[v] + " -> " + path;
    path = labels[to] + " -> " + path;
    return Error(ErrorKind::cycle, "CycleError: " + path);
  };
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == out[v].size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = out[v][i++];
      if (state[w] == 1) throw cycle_error(v, w);
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }

  // reflexive-transitive closure
  std::vector<char> leq(n * n, 0);
  for (int x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (auto [x, y] : covers) leq[x * n + y] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  // declared covers must be genuine covers of the closure
  for (auto [x, y] : covers)
    for (int z = 0; z < n; ++z)
      if (z != x && z != y && leq[x * n + z] && leq[z * n + y])
        throw Error(ErrorKind::non_cover,
                    "NonCover: '" + labels[x] + "' -> '" + labels[y] +
                        "' is implied transitively via '" + labels[z] + "'");

  return from_leq(std::move(labels), std::move(leq));
}

Lattice Lattice::dual() const {
  std::vector<char> leq(n_ * n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) leq[x * n_ + y] = leq_[y * n_ + x];
  return from_leq(labels_, std::move(leq));
}

std::vector<bool> Lattice::canonical_order_table() const {
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [this](int a, int b) {
    if (rank_[a] != rank_[b]) return rank_[a] < rank_[b];
    return labels_[a] < labels_[b];
  });
  std::vector<bool> table(n_ * n_, false);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      table[x * n_ + y] = leq(perm[x], perm[y]);
  return table;
}

}  // namespace latmodel
