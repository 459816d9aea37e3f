#include "splitdit/caption_graph.hpp"

#include <set>
#include <tuple>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "splitdit/errors.hpp"

namespace splitdit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CaptionParseGraph assemble_graph(const std::string& caption, const PrimitiveSets& prims) {
  const int n = static_cast<int>(prims.objects.size());

  CaptionParseGraph g;
  g.caption = caption;
  g.nodes.reserve(prims.objects.size());
  for (int i = 0; i < n; ++i) {
    g.nodes.push_back(GraphNode{i, prims.objects[static_cast<std::size_t>(i)], {}});
  }

  std::set<std::tuple<int, int, std::string>> seen;
  for (std::size_t k = 0; k < prims.relations.size(); ++k) {
    const auto& r = prims.relations[k];
    if (r.subject < 0 || r.subject >= n || r.object < 0 || r.object >= n) {
      raise(ErrorKind::IndexOutOfRange,
            "relations[" + std::to_string(k) + "] references objects (" +
                std::to_string(r.subject) + "," + std::to_string(r.object) + ") outside [0," +
                std::to_string(n) + ")");
    }
    if (!seen.insert({r.subject, r.object, r.predicate}).second) {
      raise(ErrorKind::DuplicateTriple,
            "relations[" + std::to_string(k) + "] repeats (" + std::to_string(r.subject) + "," +
                std::to_string(r.object) + "," + r.predicate + ")");
    }
    g.edges.push_back(GraphEdge{r.subject, r.object, r.predicate});
  }

  for (std::size_t k = 0; k < prims.attributes.size(); ++k) {
    const auto& a = prims.attributes[k];
    if (a.object < 0 || a.object >= n) {
      raise(ErrorKind::IndexOutOfRange,
            "attributes[" + std::to_string(k) + "] references object " +
                std::to_string(a.object) + " outside [0," + std::to_string(n) + ")");
    }
    g.nodes[static_cast<std::size_t>(a.object)].attributes.push_back(a.attribute);
  }

  return g;
}

ValidationReport validate_graph(const CaptionParseGraph& g) {
  ValidationReport report;
  std::unordered_set<int> ids;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& node = g.nodes[i];
    const std::string locus = "nodes[" + std::to_string(i) + "]";
    if (!ids.insert(node.id).second) {
      report.push_back({locus, "duplicate node id " + std::to_string(node.id)});
    }
    if (trim(node.object).empty()) {
      report.push_back({locus, "object string empty after trimming"});
    }
  }

  std::set<std::tuple<int, int, std::string>> triples;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    const std::string locus = "edges[" + std::to_string(i) + "]";
    if (!ids.count(e.src)) {
      report.push_back({locus, "src " + std::to_string(e.src) + " is not a declared node"});
    }
    if (!ids.count(e.dst)) {
      report.push_back({locus, "dst " + std::to_string(e.dst) + " is not a declared node"});
    }
    if (e.relation.empty()) {
      report.push_back({locus, "relation label empty"});
    }
    if (!triples.insert({e.src, e.dst, e.relation}).second) {
      report.push_back({locus, "exact duplicate triple (" + std::to_string(e.src) + "," +
                                   std::to_string(e.dst) + "," + e.relation + ")"});
    }
  }
  return report;
}

int node_degree(const CaptionParseGraph& g, int id) {
  bool known = false;
  for (const auto& node : g.nodes) {
    if (node.id == id) {
      known = true;
      break;
    }
  }
  if (!known) {
    raise(ErrorKind::UnknownNode, "node " + std::to_string(id) + " not in graph");
  }
  int degree = 0;
  for (const auto& e : g.edges) {
    if (e.src == id) ++degree;
    if (e.dst == id) ++degree;
  }
  return degree;
}

std::string encode_graph_json(const CaptionParseGraph& g) {
  ordered_json doc;
  doc["caption"] = g.caption;
  doc["nodes"] = ordered_json::array();
  for (const auto& node : g.nodes) {
    ordered_json jn;
    jn["id"] = node.id;
    jn["object"] = node.object;
    jn["attributes"] = node.attributes;
    doc["nodes"].push_back(std::move(jn));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["relation"] = e.relation;
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump();
}

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& why) {
  raise(ErrorKind::SchemaError, path + ": " + why);
}

void require_fields(const ordered_json& obj, const std::string& path,
                    const std::vector<std::string>& fields) {
  if (!obj.is_object()) schema_fail(path, "expected object");
  for (const auto& f : fields) {
    if (!obj.contains(f)) schema_fail(path + "." + f, "missing field");
  }
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const auto& f : fields) {
      if (key == f) {
        known = true;
        break;
      }
    }
    if (!known) schema_fail(path + "." + key, "unknown field");
  }
}

}  // namespace

CaptionParseGraph decode_graph_json(const std::string& bytes) {
  ordered_json doc = ordered_json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) schema_fail("$", "not valid JSON");
  require_fields(doc, "$", {"caption", "nodes", "edges"});
  if (!doc["caption"].is_string()) schema_fail("caption", "expected string");
  if (!doc["nodes"].is_array()) schema_fail("nodes", "expected array");
  if (!doc["edges"].is_array()) schema_fail("edges", "expected array");

  CaptionParseGraph g;
  g.caption = doc["caption"].get<std::string>();

  for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
    const auto& jn = doc["nodes"][i];
    const std::string path = "nodes[" + std::to_string(i) + "]";
    require_fields(jn, path, {"id", "object", "attributes"});
    if (!jn["id"].is_number_integer()) schema_fail(path + ".id", "expected integer");
    if (!jn["object"].is_string()) schema_fail(path + ".object", "expected string");
    if (!jn["attributes"].is_array()) schema_fail(path + ".attributes", "expected array");
    GraphNode node;
    node.id = jn["id"].get<int>();
    node.object = jn["object"].get<std::string>();
    for (std::size_t k = 0; k < jn["attributes"].size(); ++k) {
      if (!jn["attributes"][k].is_string()) {
        schema_fail(path + ".attributes[" + std::to_string(k) + "]", "expected string");
      }
      node.attributes.push_back(jn["attributes"][k].get<std::string>());
    }
    g.nodes.push_back(std::move(node));
  }

  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& je = doc["edges"][i];
    const std::string path = "edges[" + std::to_string(i) + "]";
    require_fields(je, path, {"src", "dst", "relation"});
    if (!je["src"].is_number_integer()) schema_fail(path + ".src", "expected integer");
    if (!je["dst"].is_number_integer()) schema_fail(path + ".dst", "expected integer");
    if (!je["relation"].is_string()) schema_fail(path + ".relation", "expected string");
    g.edges.push_back(GraphEdge{je["src"].get<int>(), je["dst"].get<int>(),
                                je["relation"].get<std::string>()});
  }

  return g;
}

}  // namespace splitdit
