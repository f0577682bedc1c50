#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace msb {

/// Pairwise l-infinity distances between the rows of P and the rows of Q.
template <typename A, typename B>
Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> linf_distances(const Eigen::MatrixBase<A>& P,
                                                                                 const Eigen::MatrixBase<B>& Q) {
  using Scalar = typename A::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> D(P.rows(), Q.rows());
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    D.row(i) = (Q.rowwise() - P.row(i)).cwiseAbs().rowwise().maxCoeff().transpose();
  return D;
}

/// Pairwise sum_k |p_k - q_k|^p, i.e. the p-th power of the l_p distance.
template <typename A, typename B>
Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> lp_power_distances(const Eigen::MatrixBase<A>& P,
                                                                                     const Eigen::MatrixBase<B>& Q,
                                                                                     typename A::Scalar p) {
  using Scalar = typename A::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> D(P.rows(), Q.rows());
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    const auto diff = (Q.rowwise() - P.row(i)).cwiseAbs().array();
    if (p == Scalar(1))
      D.row(i) = diff.rowwise().sum().transpose();
    else if (p == Scalar(2))
      D.row(i) = diff.square().rowwise().sum().transpose();
    else
      D.row(i) = diff.pow(p).rowwise().sum().transpose();
  }
  return D;
}

/// Maximum-cardinality bipartite matching (Hopcroft-Karp). adj[u] lists the
/// right vertices adjacent to left vertex u. Returns the mate of each left
/// vertex, -1 when unmatched.
class HopcroftKarp {
 public:
  HopcroftKarp(Eigen::Index right_size, std::span<const std::span<const Eigen::Index>> adj)
      : adj_(adj),
        mate_left_(adj.size(), -1),
        mate_right_(static_cast<std::size_t>(right_size), -1),
        dist_(adj.size()),
        next_(adj.size()) {}

  Eigen::Index run() {
    Eigen::Index matched = 0;
    // greedy warm start
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (Eigen::Index v : adj_[u]) {
        if (mate_right_[static_cast<std::size_t>(v)] < 0) {
          mate_left_[u] = v;
          mate_right_[static_cast<std::size_t>(v)] = static_cast<Eigen::Index>(u);
          ++matched;
          break;
        }
      }
    }
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t u = 0; u < adj_.size(); ++u)
        if (mate_left_[u] < 0 && dfs(u)) ++matched;
    }
    return matched;
  }

  const std::vector<Eigen::Index>& mate_left() const { return mate_left_; }

 private:
  static constexpr Eigen::Index kUnreached = std::numeric_limits<Eigen::Index>::max();

  bool bfs() {
    std::vector<std::size_t> queue;
    queue.reserve(adj_.size());
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (mate_left_[u] < 0) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kUnreached;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (Eigen::Index v : adj_[u]) {
        const Eigen::Index w = mate_right_[static_cast<std::size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(w)] == kUnreached) {
          dist_[static_cast<std::size_t>(w)] = dist_[u] + 1;
          queue.push_back(static_cast<std::size_t>(w));
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    const auto& nbrs = adj_[u];
    for (std::size_t& k = next_[u]; k < nbrs.size(); ++k) {
      const Eigen::Index v = nbrs[k];
      const Eigen::Index w = mate_right_[static_cast<std::size_t>(v)];
      if (w < 0 || (dist_[static_cast<std::size_t>(w)] == dist_[u] + 1 && dfs(static_cast<std::size_t>(w)))) {
        mate_left_[u] = v;
        mate_right_[static_cast<std::size_t>(v)] = static_cast<Eigen::Index>(u);
        return true;
      }
    }
    dist_[u] = kUnreached;
    return false;
  }

  std::span<const std::span<const Eigen::Index>> adj_;
  std::vector<Eigen::Index> mate_left_;
  std::vector<Eigen::Index> mate_right_;
  std::vector<Eigen::Index> dist_;
  std::vector<std::size_t> next_;
};

/// Minimum-cost perfect matching on a square cost matrix by shortest augmenting
/// paths with dual potentials (Hungarian method, O(K^3)). Rows are inserted in
/// index order, so the result is deterministic. Returns the column assigned to
/// each row.
template <typename Derived>
std::vector<Eigen::Index> min_cost_assignment(const Eigen::MatrixBase<Derived>& cost) {
  using Scalar = typename Derived::Scalar;
  using Eigen::Index;
  const Index n = cost.rows();
  if (cost.cols() != n) throw std::invalid_argument("min_cost_assignment: cost matrix must be square");
  const Scalar inf = std::numeric_limits<Scalar>::infinity();

  // 1-based potentials; column 0 is a virtual source
  std::vector<Scalar> u(static_cast<std::size_t>(n + 1), 0), v(static_cast<std::size_t>(n + 1), 0);
  std::vector<Index> owner(static_cast<std::size_t>(n + 1), 0), way(static_cast<std::size_t>(n + 1), 0);
  std::vector<Scalar> minv(static_cast<std::size_t>(n + 1));
  std::vector<char> used(static_cast<std::size_t>(n + 1));

  for (Index i = 1; i <= n; ++i) {
    owner[0] = i;
    Index j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const Index i0 = owner[static_cast<std::size_t>(j0)];
      Scalar delta = inf;
      Index j1 = 0;
      for (Index j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const Scalar cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (Index j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (owner[static_cast<std::size_t>(j0)] != 0);
    do {
      const Index j1 = way[static_cast<std::size_t>(j0)];
      owner[static_cast<std::size_t>(j0)] = owner[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<Index> assignment(static_cast<std::size_t>(n), -1);
  for (Index j = 1; j <= n; ++j) assignment[static_cast<std::size_t>(owner[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return assignment;
}

}  // namespace msb
