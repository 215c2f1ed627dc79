#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "evgraph/error.hpp"

namespace evgraph {

struct NodeId {
  std::uint32_t value = 0;
  friend auto operator<=>(NodeId, NodeId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

// Interned label or property-key string, local to one Graph.
using Symbol = std::uint32_t;

// A property value: string, integer or none.
//
// Ordering and equality operators throw PropertyTypeError when the two values
// hold different types. Use `identical` for a type-aware structural check.
class PropertyValue {
 public:
  PropertyValue() = default;
  PropertyValue(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  PropertyValue(int v) : value_(std::int64_t{v}) {}  // NOLINT(google-explicit-constructor)
  PropertyValue(std::uint32_t v) : value_(std::int64_t{v}) {}  // NOLINT(google-explicit-constructor)
  PropertyValue(std::string v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  PropertyValue(std::string_view v) : value_(std::string(v)) {}  // NOLINT(google-explicit-constructor)
  PropertyValue(const char* v) : value_(std::string(v)) {}  // NOLINT(google-explicit-constructor)

  bool is_none() const noexcept { return std::holds_alternative<std::monostate>(value_); }
  bool is_int() const noexcept { return std::holds_alternative<std::int64_t>(value_); }
  bool is_string() const noexcept { return std::holds_alternative<std::string>(value_); }

  // Throw PropertyTypeError on the wrong type.
  std::int64_t as_int() const;
  const std::string& as_string() const;

  std::strong_ordering compare(const PropertyValue& other) const;
  bool identical(const PropertyValue& other) const noexcept { return value_ == other.value_; }
  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const PropertyValue& a, const PropertyValue& b) {
    return a.compare(b) == 0;
  }
  friend std::strong_ordering operator<=>(const PropertyValue& a, const PropertyValue& b) {
    return a.compare(b);
  }

 private:
  std::variant<std::monostate, std::int64_t, std::string> value_;
};

using PropertyList = std::vector<std::pair<std::string, PropertyValue>>;

struct Edge {
  NodeId src;
  NodeId dst;
};

struct GraphStats {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  // num_edges / num_nodes; 0 for an empty graph.
  double avg_degree = 0.0;
};

// Directed labeled property multigraph with a label index, an exact-match
// (label, key, value) node index and per-label adjacency lists.
//
// Append-only. After `freeze()` every mutation throws and the graph is safe to
// read from any number of threads.
class Graph {
 public:
  // `indexed_keys` restricts the property index to the given keys; nullopt
  // indexes every key. Lookups on other keys fall back to a label scan.
  explicit Graph(std::optional<std::vector<std::string>> indexed_keys = std::nullopt);

  Symbol intern(std::string_view name);
  std::optional<Symbol> symbol(std::string_view name) const;
  const std::string& name(Symbol s) const { return symbols_.at(s); }

  NodeId add_node(std::span<const Symbol> labels,
                  std::vector<std::pair<Symbol, PropertyValue>> props);
  NodeId add_node(std::initializer_list<std::string_view> labels, const PropertyList& props = {});

  EdgeId add_edge(NodeId src, NodeId dst, std::span<const Symbol> labels,
                  std::vector<std::pair<Symbol, PropertyValue>> props);
  EdgeId add_edge(NodeId src, NodeId dst, std::initializer_list<std::string_view> labels,
                  const PropertyList& props = {});

  void freeze() noexcept { frozen_ = true; }
  bool frozen() const noexcept { return frozen_; }

  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  // Nodes carrying `label` with property key == value, in ascending id order.
  std::vector<NodeId> find_nodes(std::string_view label, std::string_view key,
                                 const PropertyValue& value) const;
  std::span<const NodeId> nodes_with_label(std::string_view label) const;

  bool has_label(NodeId n, Symbol label) const;
  bool has_label(EdgeId e, Symbol label) const;
  std::vector<std::string_view> labels(NodeId n) const;
  std::vector<std::string_view> labels(EdgeId e) const;

  const PropertyValue* property(NodeId n, Symbol key) const;
  const PropertyValue* property(NodeId n, std::string_view key) const;
  const PropertyValue* property(EdgeId e, Symbol key) const;
  const PropertyValue* property(EdgeId e, std::string_view key) const;
  std::span<const std::pair<Symbol, PropertyValue>> properties(NodeId n) const;
  std::span<const std::pair<Symbol, PropertyValue>> properties(EdgeId e) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e.value).ends; }

  std::span<const EdgeId> out_edges(NodeId n, Symbol label) const;
  std::span<const EdgeId> out_edges(NodeId n, std::string_view label) const;
  std::span<const EdgeId> in_edges(NodeId n, Symbol label) const;
  std::span<const EdgeId> in_edges(NodeId n, std::string_view label) const;

  // Incoming plus outgoing incident edges.
  std::size_t degree(NodeId n) const;

  // Labels used by at least one node or edge, sorted.
  std::set<std::string> vocabulary() const;

  GraphStats stats() const;

  // One line per node, then one per edge:
  //   node <id> :L1:L2 {k: v, ...}
  //   edge <id> <src>-><dst> :L {k: v, ...}
  // Properties are printed in key order; strings are double-quoted.
  void dump(std::ostream& out) const;

 private:
  using Partition = std::vector<std::pair<Symbol, std::vector<EdgeId>>>;

  struct NodeRecord {
    std::uint32_t label_set;
    std::vector<std::pair<Symbol, PropertyValue>> props;
    Partition out;
    Partition in;
    std::uint32_t out_degree = 0;
    std::uint32_t in_degree = 0;
  };
  struct EdgeRecord {
    std::uint32_t label_set;
    std::vector<std::pair<Symbol, PropertyValue>> props;
    Edge ends;
  };
  struct IndexKey {
    Symbol label;
    Symbol key;
    PropertyValue value;
  };
  struct IndexKeyHash {
    std::size_t operator()(const IndexKey& k) const noexcept;
  };
  struct IndexKeyEq {
    bool operator()(const IndexKey& a, const IndexKey& b) const noexcept {
      return a.label == b.label && a.key == b.key && a.value.identical(b.value);
    }
  };

  void check_mutable() const;
  std::uint32_t intern_label_set(std::span<const Symbol> labels);
  const std::vector<Symbol>& label_set(std::uint32_t id) const { return label_sets_[id]; }
  bool key_indexed(Symbol key) const;
  static void append(Partition& p, Symbol label, EdgeId e);
  static std::span<const EdgeId> lookup(const Partition& p, Symbol label);

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> symbol_ids_;
  std::vector<std::vector<Symbol>> label_sets_;
  std::map<std::vector<Symbol>, std::uint32_t> label_set_ids_;
  std::vector<NodeRecord> nodes_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<Symbol, std::vector<NodeId>> label_index_;
  std::unordered_map<IndexKey, std::vector<NodeId>, IndexKeyHash, IndexKeyEq> property_index_;
  std::optional<std::vector<std::string>> indexed_key_names_;
  std::vector<bool> indexed_keys_;
  bool frozen_ = false;
};

}  // namespace evgraph
