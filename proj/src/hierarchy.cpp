#include "srsc/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace srsc {
namespace {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  return detail::mix64(seed, stream);
}

Partition partition_from_top(const ClusterTree& tree) {
  Partition part;
  part.labels.assign(tree.n, -1);
  part.k = static_cast<int>(tree.top_nodes.size());
  for (std::size_t c = 0; c < tree.top_nodes.size(); ++c) {
    for (int p : tree.nodes[tree.top_nodes[c]].members) {
      part.labels[p] = static_cast<int>(c);
    }
  }
  return part;
}

}  // namespace

int count_roots(const RelationshipMatrix& matrix) {
  long long sum = 0;
  for (int i : matrix.points()) {
    for (auto [j, r] : matrix.row(i)) sum += r / 2;
  }
  return static_cast<int>(sum / 2);
}

ClusterResult cluster(const Dataset& data, const ClusterConfig& config) {
  const int n = static_cast<int>(data.size());
  if (config.k < 1 || config.k > n) {
    throw std::domain_error("cluster: K must be in [1, n]");
  }

  ClusterTree tree;
  tree.n = n;
  tree.nodes.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    tree.nodes.push_back(TreeNode{i, 0, i, {}, {i}});
  }
  tree.levels = 1;

  JitteredMetric metric(data, sub_seed(config.seed, 1), config.jitter_scale);
  BoundaryPairSet boundary;
  const BoundaryPairSet* boundary_ptr = nullptr;
  if (n >= 3) {
    const std::size_t sigma = config.sigma.value_or(default_sigma(data.size()));
    boundary = detect_boundary(data, sigma, metric, sub_seed(config.seed, 2));
    if (boundary.sigma() > 0) boundary_ptr = &boundary;
  }

  // (root point, node id) of the current top layer.
  std::vector<std::pair<int, int>> current;
  current.reserve(data.size());
  for (int i = 0; i < n; ++i) current.emplace_back(i, i);

  int level = 1;
  while (static_cast<int>(current.size()) > config.k) {
    std::vector<int> roots;
    roots.reserve(current.size());
    for (auto [r, node] : current) roots.push_back(r);

    const auto forest =
        build_forest(roots, metric, sub_seed(config.seed, 100 + level));
    const auto matrix = relationship_matrix(forest);
    const int next_count = static_cast<int>(forest.components.size());

    // Past the first level, a level that overshoots strictly below K is
    // discarded; the previous layer's cluster count is kept.
    if (next_count < config.k && level > 1) break;

    std::unordered_map<int, int> node_of;
    node_of.reserve(current.size());
    for (auto [r, node] : current) node_of[r] = node;

    std::vector<std::pair<int, int>> next;
    next.reserve(forest.components.size());
    for (std::size_t c = 0; c < forest.components.size(); ++c) {
      const auto pair = forest.rnn_pairs[c];
      const auto si = component_scores(matrix, forest, metric, pair.first);
      const auto sj = component_scores(matrix, forest, metric, pair.second);
      const int root =
          select_root(pair, si, sj, boundary_ptr, metric, config.mode);

      TreeNode node;
      node.id = static_cast<int>(tree.nodes.size());
      node.level = level;
      node.rep = root;
      for (int member : forest.components[c]) {
        const int child = node_of.at(member);
        node.children.push_back(child);
        const auto& sub = tree.nodes[child].members;
        node.members.insert(node.members.end(), sub.begin(), sub.end());
      }
      std::sort(node.members.begin(), node.members.end());
      next.emplace_back(root, node.id);
      tree.nodes.push_back(std::move(node));
    }
    current = std::move(next);
    tree.levels = level + 1;
    ++level;
    if (next_count <= config.k) break;
  }

  for (auto [r, node] : current) {
    tree.final_roots.push_back(r);
    tree.top_nodes.push_back(node);
  }

  ClusterResult result;
  result.partition = labeling(tree);
  if (config.exact_k) {
    const int have = static_cast<int>(current.size());
    if (have < config.k) {
      throw std::domain_error(
          "cluster: exact_k requested but only " + std::to_string(have) +
          " clusters are reachable (cannot split components)");
    }
    if (have > config.k) {
      result.partition = cut_to_k(tree, config.k, metric, boundary_ptr);
    }
  }
  result.tree = std::move(tree);
  return result;
}

Partition labeling(const ClusterTree& tree) { return partition_from_top(tree); }

Partition cut_to_k(const ClusterTree& tree, int k, const JitteredMetric& metric,
                   const BoundaryPairSet* boundary) {
  const int have = static_cast<int>(tree.top_nodes.size());
  if (k < 1 || k > have) {
    throw std::domain_error("cut_to_k: K must be in [1, final cluster count]");
  }

  struct Group {
    int rep;
    std::vector<int> clusters;  // indices into top_nodes
  };
  std::vector<Group> groups;
  groups.reserve(have);
  for (int c = 0; c < have; ++c) groups.push_back({tree.final_roots[c], {c}});

  for (int step = 0; step < have - k; ++step) {
    int best_a = -1, best_b = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a + 1 < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        const double d = metric(groups[a].rep, groups[b].rep);
        if (d < best_d) {
          best_d = d;
          best_a = static_cast<int>(a);
          best_b = static_cast<int>(b);
        }
      }
    }
    Group merged;
    const int ra = groups[best_a].rep;
    const int rb = groups[best_b].rep;
    // Winner between the two linked roots: nearer to the data boundary,
    // then smaller index.
    merged.rep = std::min(ra, rb);
    if (boundary != nullptr && boundary->sigma() > 0) {
      const double za = boundary_score(ra, *boundary, metric);
      const double zb = boundary_score(rb, *boundary, metric);
      if (za != zb) merged.rep = za > zb ? ra : rb;
    }
    merged.clusters = groups[best_a].clusters;
    merged.clusters.insert(merged.clusters.end(), groups[best_b].clusters.begin(),
                           groups[best_b].clusters.end());
    groups.erase(groups.begin() + best_b);
    groups.erase(groups.begin() + best_a);
    groups.push_back(std::move(merged));
  }

  Partition part;
  part.labels.assign(tree.n, -1);
  part.k = static_cast<int>(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int c : groups[g].clusters) {
      for (int p : tree.nodes[tree.top_nodes[c]].members) {
        part.labels[p] = static_cast<int>(g);
      }
    }
  }
  return part;
}

std::string export_tree(const ClusterTree& tree) {
  nlohmann::json j;
  j["n"] = tree.n;
  j["levels"] = tree.levels;
  j["nodes"] = nlohmann::json::array();
  for (const auto& node : tree.nodes) {
    j["nodes"].push_back({{"id", node.id},
                          {"level", node.level},
                          {"rep", node.rep},
                          {"children", node.children},
                          {"members", node.members}});
  }
  j["final_roots"] = tree.final_roots;
  return j.dump();
}

ClusterTree parse_tree(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  ClusterTree tree;
  tree.n = j.at("n").get<int>();
  tree.levels = j.at("levels").get<int>();
  for (const auto& jn : j.at("nodes")) {
    TreeNode node;
    node.id = jn.at("id").get<int>();
    node.level = jn.at("level").get<int>();
    node.rep = jn.at("rep").get<int>();
    node.children = jn.at("children").get<std::vector<int>>();
    node.members = jn.at("members").get<std::vector<int>>();
    tree.nodes.push_back(std::move(node));
  }
  tree.final_roots = j.at("final_roots").get<std::vector<int>>();

  // Top nodes are the ones no other node points to.
  std::vector<char> is_child(tree.nodes.size(), 0);
  for (const auto& node : tree.nodes) {
    for (int c : node.children) is_child[c] = 1;
  }
  for (const auto& node : tree.nodes) {
    if (!is_child[node.id]) tree.top_nodes.push_back(node.id);
  }
  return tree;
}

}  // namespace srsc
