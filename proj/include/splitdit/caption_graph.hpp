#pragma once

#include <string>
#include <vector>

namespace splitdit {

/// A (subject, predicate, object) relation between two object indices.
struct RelationTriple {
  int subject = 0;
  std::string predicate;
  int object = 0;

  friend bool operator==(const RelationTriple&, const RelationTriple&) = default;
};

/// An attribute attached to the object at `object`.
struct AttributePair {
  int object = 0;
  std::string attribute;

  friend bool operator==(const AttributePair&, const AttributePair&) = default;
};

/// Ordered object / relation / attribute sets extracted from a caption.
/// Indices in relations and attributes refer to positions in `objects`.
struct PrimitiveSets {
  std::vector<std::string> objects;
  std::vector<RelationTriple> relations;
  std::vector<AttributePair> attributes;

  friend bool operator==(const PrimitiveSets&, const PrimitiveSets&) = default;
};

struct GraphNode {
  int id = 0;
  std::string object;
  std::vector<std::string> attributes;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  int src = 0;
  int dst = 0;
  std::string relation;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Caption parsing graph: one node per object with its attribute set,
/// one labeled edge per relation. The source caption stands in for the
/// root; it is not materialized as a node.
struct CaptionParseGraph {
  std::string caption;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;

  friend bool operator==(const CaptionParseGraph&, const CaptionParseGraph&) = default;
};

struct Violation {
  std::string locus;    // e.g. "edges[2]" or "nodes[0]"
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Build the graph from primitive sets. Node ids are dense integers equal
/// to the object's position. Throws IndexOutOfRange for a triple or
/// attribute referencing a missing object, DuplicateTriple for an exact
/// (src,dst,relation) repeat.
CaptionParseGraph assemble_graph(const std::string& caption, const PrimitiveSets& prims);

/// Every invariant violation with its locus; empty report means valid.
ValidationReport validate_graph(const CaptionParseGraph& g);

/// In-degree + out-degree of the node; parallel edges counted separately.
/// Throws UnknownNode.
int node_degree(const CaptionParseGraph& g, int id);

/// UTF-8 JSON with fixed field order:
/// {"caption": str, "nodes": [{"id", "object", "attributes"}], "edges": [{"src","dst","relation"}]}
std::string encode_graph_json(const CaptionParseGraph& g);

/// Strict decode: unknown fields, missing fields, and type mismatches are
/// rejected with SchemaError carrying the field path.
CaptionParseGraph decode_graph_json(const std::string& bytes);

}  // namespace splitdit
