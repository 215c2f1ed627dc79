#include "evgraph/lpg.hpp"

#include <algorithm>
#include <ostream>

#include "evgraph/error.hpp"

namespace evgraph {

namespace {

const char* type_name(const PropertyValue& v) {
  if (v.is_int()) return "integer";
  if (v.is_string()) return "string";
  return "none";
}

void write_quoted(std::ostream& out, std::string_view s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      default: out << c;
    }
  }
  out << '"';
}

}  // namespace

std::int64_t PropertyValue::as_int() const {
  if (const auto* v = std::get_if<std::int64_t>(&value_)) return *v;
  throw PropertyTypeError(std::string("expected integer property, found ") + type_name(*this));
}

const std::string& PropertyValue::as_string() const {
  if (const auto* v = std::get_if<std::string>(&value_)) return *v;
  throw PropertyTypeError(std::string("expected string property, found ") + type_name(*this));
}

std::strong_ordering PropertyValue::compare(const PropertyValue& other) const {
  if (value_.index() != other.value_.index()) {
    throw PropertyTypeError(std::string("cannot compare ") + type_name(*this) + " with " +
                            type_name(other));
  }
  if (is_int()) return std::get<std::int64_t>(value_) <=> std::get<std::int64_t>(other.value_);
  if (is_string()) {
    const int c = std::get<std::string>(value_).compare(std::get<std::string>(other.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::strong_ordering::equal;
}

std::size_t PropertyValue::hash() const noexcept {
  const std::size_t tag = value_.index() * 0x9e3779b97f4a7c15ULL;
  if (is_int()) return tag ^ std::hash<std::int64_t>{}(std::get<std::int64_t>(value_));
  if (is_string()) return tag ^ std::hash<std::string>{}(std::get<std::string>(value_));
  return tag;
}

std::string PropertyValue::to_string() const {
  if (is_int()) return std::to_string(std::get<std::int64_t>(value_));
  if (is_string()) return std::get<std::string>(value_);
  return "null";
}

std::size_t Graph::IndexKeyHash::operator()(const IndexKey& k) const noexcept {
  std::size_t h = k.value.hash();
  h ^= (std::size_t{k.label} << 32 | k.key) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Graph::Graph(std::optional<std::vector<std::string>> indexed_keys)
    : indexed_key_names_(std::move(indexed_keys)) {}

Symbol Graph::intern(std::string_view name) {
  if (auto it = symbol_ids_.find(std::string(name)); it != symbol_ids_.end()) return it->second;
  const auto id = static_cast<Symbol>(symbols_.size());
  symbols_.emplace_back(name);
  symbol_ids_.emplace(std::string(name), id);
  indexed_keys_.push_back(!indexed_key_names_ ||
                          std::find(indexed_key_names_->begin(), indexed_key_names_->end(),
                                    name) != indexed_key_names_->end());
  return id;
}

std::optional<Symbol> Graph::symbol(std::string_view name) const {
  if (auto it = symbol_ids_.find(std::string(name)); it != symbol_ids_.end()) return it->second;
  return std::nullopt;
}

bool Graph::key_indexed(Symbol key) const { return indexed_keys_[key]; }

void Graph::check_mutable() const {
  if (frozen_) throw GraphError("graph is frozen");
}

std::uint32_t Graph::intern_label_set(std::span<const Symbol> labels) {
  std::vector<Symbol> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (auto it = label_set_ids_.find(sorted); it != label_set_ids_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(label_sets_.size());
  label_sets_.push_back(sorted);
  label_set_ids_.emplace(std::move(sorted), id);
  return id;
}

namespace {

void check_unique_keys(const std::vector<std::pair<Symbol, PropertyValue>>& props) {
  for (std::size_t i = 0; i < props.size(); ++i) {
    for (std::size_t j = i + 1; j < props.size(); ++j) {
      if (props[i].first == props[j].first) throw GraphError("duplicate property key");
    }
  }
}

}  // namespace

NodeId Graph::add_node(std::span<const Symbol> labels,
                       std::vector<std::pair<Symbol, PropertyValue>> props) {
  check_mutable();
  if (labels.empty()) throw GraphError("a node needs at least one label");
  for (Symbol s : labels) {
    if (s >= symbols_.size()) throw GraphError("unknown label symbol");
  }
  check_unique_keys(props);

  const NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  const std::uint32_t set = intern_label_set(labels);
  for (Symbol label : label_set(set)) {
    label_index_[label].push_back(id);
    for (const auto& [key, value] : props) {
      if (key_indexed(key)) property_index_[IndexKey{label, key, value}].push_back(id);
    }
  }
  nodes_.push_back(NodeRecord{set, std::move(props), {}, {}});
  return id;
}

NodeId Graph::add_node(std::initializer_list<std::string_view> labels, const PropertyList& props) {
  std::vector<Symbol> syms;
  for (auto l : labels) syms.push_back(intern(l));
  std::vector<std::pair<Symbol, PropertyValue>> p;
  for (const auto& [k, v] : props) p.emplace_back(intern(k), v);
  return add_node(syms, std::move(p));
}

void Graph::append(Partition& p, Symbol label, EdgeId e) {
  for (auto& [l, list] : p) {
    if (l == label) {
      list.push_back(e);
      return;
    }
  }
  p.emplace_back(label, std::vector<EdgeId>{e});
}

std::span<const EdgeId> Graph::lookup(const Partition& p, Symbol label) {
  for (const auto& [l, list] : p) {
    if (l == label) return list;
  }
  return {};
}

EdgeId Graph::add_edge(NodeId src, NodeId dst, std::span<const Symbol> labels,
                       std::vector<std::pair<Symbol, PropertyValue>> props) {
  check_mutable();
  if (src.value >= nodes_.size() || dst.value >= nodes_.size()) {
    throw GraphError("edge endpoint does not exist");
  }
  for (Symbol s : labels) {
    if (s >= symbols_.size()) throw GraphError("unknown label symbol");
  }
  check_unique_keys(props);

  const EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  const std::uint32_t set = intern_label_set(labels);
  for (Symbol label : label_set(set)) {
    append(nodes_[src.value].out, label, id);
    append(nodes_[dst.value].in, label, id);
  }
  ++nodes_[src.value].out_degree;
  ++nodes_[dst.value].in_degree;
  edges_.push_back(EdgeRecord{set, std::move(props), Edge{src, dst}});
  return id;
}

EdgeId Graph::add_edge(NodeId src, NodeId dst, std::initializer_list<std::string_view> labels,
                       const PropertyList& props) {
  std::vector<Symbol> syms;
  for (auto l : labels) syms.push_back(intern(l));
  std::vector<std::pair<Symbol, PropertyValue>> p;
  for (const auto& [k, v] : props) p.emplace_back(intern(k), v);
  return add_edge(src, dst, syms, std::move(p));
}

std::vector<NodeId> Graph::find_nodes(std::string_view label, std::string_view key,
                                      const PropertyValue& value) const {
  const auto label_sym = symbol(label);
  const auto key_sym = symbol(key);
  if (!label_sym || !key_sym) return {};
  if (key_indexed(*key_sym)) {
    auto it = property_index_.find(IndexKey{*label_sym, *key_sym, value});
    if (it == property_index_.end()) return {};
    return it->second;
  }
  std::vector<NodeId> out;
  auto it = label_index_.find(*label_sym);
  if (it == label_index_.end()) return out;
  for (NodeId n : it->second) {
    const PropertyValue* v = property(n, *key_sym);
    if (v != nullptr && v->identical(value)) out.push_back(n);
  }
  return out;
}

std::span<const NodeId> Graph::nodes_with_label(std::string_view label) const {
  const auto sym = symbol(label);
  if (!sym) return {};
  auto it = label_index_.find(*sym);
  if (it == label_index_.end()) return {};
  return it->second;
}

bool Graph::has_label(NodeId n, Symbol label) const {
  const auto& set = label_set(nodes_.at(n.value).label_set);
  return std::binary_search(set.begin(), set.end(), label);
}

bool Graph::has_label(EdgeId e, Symbol label) const {
  const auto& set = label_set(edges_.at(e.value).label_set);
  return std::binary_search(set.begin(), set.end(), label);
}

std::vector<std::string_view> Graph::labels(NodeId n) const {
  std::vector<std::string_view> out;
  for (Symbol s : label_set(nodes_.at(n.value).label_set)) out.emplace_back(symbols_[s]);
  return out;
}

std::vector<std::string_view> Graph::labels(EdgeId e) const {
  std::vector<std::string_view> out;
  for (Symbol s : label_set(edges_.at(e.value).label_set)) out.emplace_back(symbols_[s]);
  return out;
}

namespace {

const PropertyValue* find_prop(const std::vector<std::pair<Symbol, PropertyValue>>& props,
                               Symbol key) {
  for (const auto& [k, v] : props) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace

const PropertyValue* Graph::property(NodeId n, Symbol key) const {
  return find_prop(nodes_[n.value].props, key);
}

const PropertyValue* Graph::property(NodeId n, std::string_view key) const {
  const auto sym = symbol(key);
  return sym ? find_prop(nodes_.at(n.value).props, *sym) : nullptr;
}

const PropertyValue* Graph::property(EdgeId e, Symbol key) const {
  return find_prop(edges_[e.value].props, key);
}

const PropertyValue* Graph::property(EdgeId e, std::string_view key) const {
  const auto sym = symbol(key);
  return sym ? find_prop(edges_.at(e.value).props, *sym) : nullptr;
}

std::span<const std::pair<Symbol, PropertyValue>> Graph::properties(NodeId n) const {
  return nodes_.at(n.value).props;
}

std::span<const std::pair<Symbol, PropertyValue>> Graph::properties(EdgeId e) const {
  return edges_.at(e.value).props;
}

std::span<const EdgeId> Graph::out_edges(NodeId n, Symbol label) const {
  return lookup(nodes_[n.value].out, label);
}

std::span<const EdgeId> Graph::out_edges(NodeId n, std::string_view label) const {
  const auto sym = symbol(label);
  return sym ? lookup(nodes_.at(n.value).out, *sym) : std::span<const EdgeId>{};
}

std::span<const EdgeId> Graph::in_edges(NodeId n, Symbol label) const {
  return lookup(nodes_[n.value].in, label);
}

std::span<const EdgeId> Graph::in_edges(NodeId n, std::string_view label) const {
  const auto sym = symbol(label);
  return sym ? lookup(nodes_.at(n.value).in, *sym) : std::span<const EdgeId>{};
}

std::size_t Graph::degree(NodeId n) const {
  const auto& rec = nodes_.at(n.value);
  return std::size_t{rec.in_degree} + rec.out_degree;
}

std::set<std::string> Graph::vocabulary() const {
  std::set<std::string> out;
  std::vector<bool> used(label_sets_.size(), false);
  for (const auto& n : nodes_) used[n.label_set] = true;
  for (const auto& e : edges_) used[e.label_set] = true;
  for (std::size_t i = 0; i < label_sets_.size(); ++i) {
    if (!used[i]) continue;
    for (Symbol s : label_sets_[i]) out.insert(symbols_[s]);
  }
  return out;
}

GraphStats Graph::stats() const {
  GraphStats s;
  s.num_nodes = nodes_.size();
  s.num_edges = edges_.size();
  s.avg_degree = s.num_nodes == 0
                     ? 0.0
                     : static_cast<double>(s.num_edges) / static_cast<double>(s.num_nodes);
  return s;
}

void Graph::dump(std::ostream& out) const {
  auto write_labels = [&](std::uint32_t set) {
    std::vector<std::string_view> names;
    for (Symbol s : label_set(set)) names.emplace_back(symbols_[s]);
    std::sort(names.begin(), names.end());
    for (auto n : names) out << ':' << n;
  };
  auto write_props = [&](const std::vector<std::pair<Symbol, PropertyValue>>& props) {
    std::vector<const std::pair<Symbol, PropertyValue>*> sorted;
    for (const auto& p : props) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return symbols_[a->first] < symbols_[b->first]; });
    out << " {";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0) out << ", ";
      out << symbols_[sorted[i]->first] << ": ";
      const PropertyValue& v = sorted[i]->second;
      if (v.is_string()) {
        write_quoted(out, v.as_string());
      } else {
        out << v.to_string();
      }
    }
    out << '}';
  };

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out << "node " << i << ' ';
    write_labels(nodes_[i].label_set);
    write_props(nodes_[i].props);
    out << '\n';
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    out << "edge " << i << ' ' << e.ends.src.value << "->" << e.ends.dst.value << ' ';
    write_labels(e.label_set);
    write_props(e.props);
    out << '\n';
  }
}

}  // namespace evgraph
