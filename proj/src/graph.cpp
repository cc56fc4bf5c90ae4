#include "growthlab/graph.hpp"

#include <deque>
#include <sstream>

#include "growthlab/errors.hpp"

namespace growthlab {

LabeledGraph::LabeledGraph(std::vector<std::string> labels, std::size_t vertices)
    : labels_(std::move(labels)),
      names_(vertices),
      nbr_(vertices * labels_.size(), -1),
      boundary_(vertices, 0) {
  for (std::size_t v = 0; v < vertices; ++v) names_[v] = std::to_string(v);
}

void LabeledGraph::connect(int u, int v, int s) {
  nbr_[u * labels_.size() + s] = v;
  nbr_[v * labels_.size() + s] = u;
}

int LabeledGraph::step(int v, int s) const {
  int u = nbr(v, s);
  if (u < 0)
    throw TruncationBoundary("no " + labels_[s] + "-edge known at vertex " + names_[v]);
  return u;
}

LabelMask LabeledGraph::loops(int v) const {
  LabelMask m = 0;
  for (std::size_t s = 0; s < labels_.size(); ++s)
    if (nbr(v, static_cast<int>(s)) == v) m |= LabelMask(1u << s);
  return m;
}

bool LabeledGraph::is_consistent() const {
  const auto k = labels_.size();
  for (std::size_t v = 0; v < size(); ++v)
    for (std::size_t s = 0; s < k; ++s) {
      int u = nbr_[v * k + s];
      if (u < 0) {
        if (!boundary_[v]) return false;
        continue;
      }
      if (nbr_[u * k + s] != static_cast<int>(v)) return false;
    }
  return true;
}

std::string LabeledGraph::to_dot(const std::string& title) const {
  std::ostringstream out;
  out << "graph \"" << title << "\" {\n";
  for (std::size_t v = 0; v < size(); ++v) {
    out << "  v" << v << " [label=\"" << names_[v] << "\"";
    if (boundary_[v]) out << ", shape=box";
    out << "];\n";
  }
  const auto k = labels_.size();
  for (std::size_t v = 0; v < size(); ++v)
    for (std::size_t s = 0; s < k; ++s) {
      int u = nbr_[v * k + s];
      if (u >= static_cast<int>(v))
        out << "  v" << v << " -- v" << u << " [label=\"" << labels_[s] << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

Json LabeledGraph::to_json() const {
  Json j;
  j["labels"] = labels_;
  Json verts = Json::array();
  for (std::size_t v = 0; v < size(); ++v)
    verts.push_back({{"id", names_[v]}, {"boundary", static_cast<bool>(boundary_[v])}});
  j["vertices"] = verts;
  Json edges = Json::array();
  const auto k = labels_.size();
  for (std::size_t v = 0; v < size(); ++v)
    for (std::size_t s = 0; s < k; ++s) {
      int u = nbr_[v * k + s];
      if (u >= static_cast<int>(v)) edges.push_back({v, u, labels_[s]});
    }
  j["edges"] = edges;
  return j;
}

std::vector<int> distances(const LabeledGraph& g, int v, int radius) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (dist[u] == radius) continue;
    if (g.boundary(u))
      throw TruncationBoundary("ball of radius " + std::to_string(radius) + " around " +
                               g.name(v) + " reaches the truncation boundary");
    for (std::size_t s = 0; s < g.label_count(); ++s) {
      int w = g.nbr(u, static_cast<int>(s));
      if (w >= 0 && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

RootedBall ball(const LabeledGraph& g, int v, int radius) {
  auto dist = distances(g, v, radius);
  RootedBall b;
  b.radius = radius;
  std::vector<int> local(g.size(), -1);
  // Root first, then by distance and host index.
  for (int d = 0; d <= radius; ++d)
    for (std::size_t u = 0; u < g.size(); ++u)
      if (dist[u] == d) {
        local[u] = static_cast<int>(b.host.size());
        b.host.push_back(static_cast<int>(u));
      }
  b.graph = LabeledGraph(g.labels(), b.host.size());
  for (std::size_t i = 0; i < b.host.size(); ++i) {
    b.graph.set_name(static_cast<int>(i), g.name(b.host[i]));
    for (std::size_t s = 0; s < g.label_count(); ++s) {
      int w = g.nbr(b.host[i], static_cast<int>(s));
      if (w >= 0 && local[w] >= 0) b.graph.connect(static_cast<int>(i), local[w], static_cast<int>(s));
    }
  }
  return b;
}

}  // namespace growthlab
