#pragma once

// Serialization: JSON for point sets, triangulations, subdivisions, heights
// and regularity verdicts; DOT / GraphML / JSON adjacency for flip graphs,
// links, and the subdivision poset. All output is deterministic (nodes are
// already numbered by sorted canonical key).

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "fliplab/flipgraph.hpp"
#include "fliplab/regularity.hpp"

namespace fliplab {

using json = nlohmann::ordered_json;

enum class ExportFormat { Dot, GraphML, Json };

inline ExportFormat parse_format(const std::string& s) {
  if (s == "dot") return ExportFormat::Dot;
  if (s == "graphml") return ExportFormat::GraphML;
  if (s == "json") return ExportFormat::Json;
  throw GeomError("unknown format '" + s + "' (expected dot|graphml|json)");
}

// FNV-1a digest of a canonical key, for compact node labels.
inline std::string key_digest(const std::string& key) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline json point_set_json(const PointSet& ps) {
  json j;
  j["points"] = json::array();
  for (const Point& p : ps.points) j["points"].push_back({p.x, p.y});
  j["hull"] = ps.hull;
  j["inner"] = ps.inner;
  return j;
}

inline json graph_json_fields(const PlaneGraph& g) {
  json j;
  j["verts"] = g.vertex_list();
  j["edges"] = json::array();
  for (const Edge& e : g.edges) j["edges"].push_back({e.a, e.b});
  return j;
}

inline json triangulation_json(const Triangulation& t) {
  json j = graph_json_fields(t.g);
  j["key"] = canonical_key(t);
  return j;
}

inline json subdivision_json(const Subdivision& s) {
  json j = graph_json_fields(s.g);
  j["bystanders"] = s.bystanders();
  j["slack"] = slack(s);
  j["key"] = canonical_key(s);
  return j;
}

inline json height_json(const HeightFunction& w) {
  json j = json::object();
  for (const auto& [p, v] : w.h) j[std::to_string(p)] = rat_str(v);
  return j;
}

inline json regularity_json(const RegularityResult& r) {
  json j;
  j["regular"] = r.regular;
  if (r.regular) {
    j["witness"] = height_json(r.witness);
  } else {
    j["farkas"] = json::array();
    for (const Rat& y : r.farkas) j["farkas"].push_back(rat_str(y));
  }
  return j;
}

// --- graph export -------------------------------------------------------------

namespace detail {

// Common shape for exportable undirected graphs: node ids + labeled,
// optionally weighted edges.
struct ExportGraph {
  std::string name;
  std::vector<std::string> node_labels;
  struct E {
    int u, v;
    std::string label;
    int weight = 0;  // 0 = no weight attribute
  };
  std::vector<E> edges;
};

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  return out;
}

inline std::string render(const ExportGraph& g, ExportFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case ExportFormat::Dot:
      out << "graph " << g.name << " {\n";
      for (size_t i = 0; i < g.node_labels.size(); ++i)
        out << "  n" << i << " [label=\"" << g.node_labels[i] << "\"];\n";
      for (const auto& e : g.edges) {
        out << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.label << "\"";
        if (e.weight) out << ", weight=" << e.weight;
        out << "];\n";
      }
      out << "}\n";
      break;
    case ExportFormat::GraphML:
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
          << "<key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
          << "<key id=\"flip\" for=\"edge\" attr.name=\"flip\" attr.type=\"string\"/>\n"
          << "<key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
          << "<graph id=\"" << g.name << "\" edgedefault=\"undirected\">\n";
      for (size_t i = 0; i < g.node_labels.size(); ++i)
        out << "<node id=\"n" << i << "\"><data key=\"label\">"
            << xml_escape(g.node_labels[i]) << "</data></node>\n";
      for (const auto& e : g.edges) {
        out << "<edge source=\"n" << e.u << "\" target=\"n" << e.v
            << "\"><data key=\"flip\">" << xml_escape(e.label) << "</data>";
        if (e.weight) out << "<data key=\"weight\">" << e.weight << "</data>";
        out << "</edge>\n";
      }
      out << "</graph>\n</graphml>\n";
      break;
    case ExportFormat::Json: {
      json j;
      j["name"] = g.name;
      j["nodes"] = json::array();
      for (size_t i = 0; i < g.node_labels.size(); ++i)
        j["nodes"].push_back({{"id", i}, {"label", g.node_labels[i]}});
      j["edges"] = json::array();
      for (const auto& e : g.edges) {
        json je{{"u", e.u}, {"v", e.v}, {"label", e.label}};
        if (e.weight) je["weight"] = e.weight;
        j["edges"].push_back(std::move(je));
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace detail

inline std::string export_graph(const FlipGraph& g, ExportFormat fmt) {
  detail::ExportGraph eg;
  eg.name = g.kind == FlipGraph::Kind::Edge ? "edge_flip_graph" : "bistellar_flip_graph";
  for (const Triangulation& t : g.nodes)
    eg.node_labels.push_back(key_digest(canonical_key(t)));
  for (size_t u = 0; u < g.adj.size(); ++u)
    for (const auto& [v, lbl] : g.adj[u])
      if (static_cast<int>(u) < v) eg.edges.push_back({static_cast<int>(u), v, lbl, 0});
  return detail::render(eg, fmt);
}

inline std::string export_graph(const Link& l, ExportFormat fmt) {
  detail::ExportGraph eg;
  eg.name = l.kind == LinkKind::Full ? "full_link" : "partial_link";
  for (const FlipElement& x : l.nodes) eg.node_labels.push_back(x.label());
  for (const auto& e : l.edges)
    eg.edges.push_back({e.u, e.v, "cycle " + std::to_string(e.cycle.size()), e.weight});
  return detail::render(eg, fmt);
}

inline json poset_json(const Poset& po) {
  json j;
  j["height_max"] = po.height_max;
  j["nodes"] = json::array();
  for (size_t i = 0; i < po.nodes.size(); ++i) {
    json jn = subdivision_json(po.nodes[i]);
    jn["id"] = i;
    jn["height"] = po.height[i];
    j["nodes"].push_back(std::move(jn));
  }
  j["covers"] = json::array();  // Hasse edges, refinement below -> coarsening above
  for (size_t i = 0; i < po.coarsenings.size(); ++i)
    for (int c : po.coarsenings[i]) j["covers"].push_back({i, c});
  return j;
}

}  // namespace fliplab
