#include "congrlab/spec_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "congrlab/error.hpp"

namespace congrlab {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::size_t nesting_depth(const json& table) {
  std::size_t depth = 0;
  const json* cur = &table;
  while (cur->is_array()) {
    ++depth;
    if (cur->empty()) break;
    cur = &(*cur)[0];
  }
  return depth;
}

}  // namespace

AlgebraSpec parse_algebra_spec(const json& doc) {
  if (!doc.is_object()) parse_fail("algebra spec must be a JSON object");
  AlgebraSpec spec;
  spec.name = doc.value("name", std::string("unnamed"));
  const auto kind_text = doc.value("kind", std::string("bounded-lattice"));
  auto kind = kind_from_string(kind_text);
  if (!kind) parse_fail("unknown kind \"" + kind_text + "\"");
  spec.kind = *kind;

  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    parse_fail("\"elements\" must be an array of labels");
  }
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) parse_fail("element labels must be strings");
    spec.elements.push_back(e.get<std::string>());
  }
  if (doc.contains("cover")) {
    std::vector<std::pair<std::string, std::string>> cover;
    for (const auto& pair : doc["cover"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        parse_fail("each cover entry must be a [lo, hi] pair of labels");
      }
      cover.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    spec.cover = std::move(cover);
  }
  if (doc.contains("operations")) {
    if (!doc["operations"].is_object()) parse_fail("\"operations\" must be an object");
    for (const auto& [name, table] : doc["operations"].items()) {
      spec.operations[name] = table;
    }
  }
  if (doc.contains("constants")) {
    if (!doc["constants"].is_object()) parse_fail("\"constants\" must be an object");
    for (const auto& [name, value] : doc["constants"].items()) {
      if (!value.is_string()) parse_fail("constant \"" + name + "\" must name an element");
      spec.constants[name] = value.get<std::string>();
    }
  }
  return spec;
}

AlgebraSpec load_algebra_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  return parse_algebra_spec(doc);
}

json to_json(const AlgebraSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["kind"] = std::string(to_string(spec.kind));
  doc["elements"] = spec.elements;
  if (spec.cover) {
    json cover = json::array();
    for (const auto& [lo, hi] : *spec.cover) cover.push_back({lo, hi});
    doc["cover"] = cover;
  }
  if (!spec.operations.empty()) {
    json ops = json::object();
    for (const auto& [name, table] : spec.operations) ops[name] = table;
    doc["operations"] = ops;
  }
  if (!spec.constants.empty()) doc["constants"] = spec.constants;
  return doc;
}

// ---------------------------------------------------------------------------

FiniteAlgebra lattice_from_covers(std::string name, std::vector<std::string> labels,
                                  const std::vector<std::pair<Element, Element>>& covers,
                                  bool bounded) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty carrier");
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  std::vector<std::vector<Element>> succ(n);
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error(ErrorKind::TableError, "cover names an unknown element");
    if (lo == hi) {
      throw Error(ErrorKind::NotALattice, "cover relation has a loop at " + labels[lo]);
    }
    succ[lo].push_back(hi);
  }

  // Acyclicity first: a cycle would make the closure non-antisymmetric.
  std::vector<int> state(n, 0);
  std::function<void(Element)> visit = [&](Element v) {
    state[v] = 1;
    for (Element w : succ[v]) {
      if (state[w] == 1) {
        throw Error(ErrorKind::NotALattice,
                    "cover relation has a cycle through " + labels[v] + " and " + labels[w]);
      }
      if (state[w] == 0) visit(w);
    }
    state[v] = 2;
  };
  for (Element v = 0; v < n; ++v) {
    if (state[v] == 0) visit(v);
  }

  for (auto [lo, hi] : covers) leq[lo][hi] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = 1;
      }
    }
  }

  std::vector<Element> join_values(n * n);
  std::vector<Element> meet_values(n * n);
  auto bound = [&](Element a, Element b, bool upper) -> Element {
    std::vector<Element> candidates;
    for (Element c = 0; c < n; ++c) {
      if (upper ? (leq[a][c] && leq[b][c]) : (leq[c][a] && leq[c][b])) candidates.push_back(c);
    }
    for (Element c : candidates) {
      bool extreme = true;
      for (Element d : candidates) {
        if (upper ? !leq[c][d] : !leq[d][c]) {
          extreme = false;
          break;
        }
      }
      if (extreme) return c;
    }
    throw Error(ErrorKind::NotALattice, "pair (" + labels[a] + "," + labels[b] + ") has no " +
                                            (upper ? "least upper bound" : "greatest lower bound"));
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const Element j = bound(a, b, true);
      const Element m = bound(a, b, false);
      join_values[a * n + b] = join_values[b * n + a] = j;
      meet_values[a * n + b] = meet_values[b * n + a] = m;
    }
  }
  return make_lattice(std::move(name), std::move(labels), std::move(join_values),
                      std::move(meet_values), bounded);
}

std::vector<std::pair<Element, Element>> cover_pairs(const FiniteAlgebra& lattice) {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(lattice.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || !lattice.leq(a, b)) continue;
      bool cover = true;
      for (Element c = 0; c < n && cover; ++c) {
        if (c != a && c != b && lattice.leq(a, c) && lattice.leq(c, b)) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

Element lookup(const std::map<std::string, Element>& index, const std::string& label) {
  auto it = index.find(label);
  if (it == index.end()) throw Error(ErrorKind::TableError, "unknown element \"" + label + "\"");
  return it->second;
}

OperationTable table_from_json(const std::string& op, const json& table, std::size_t arity,
                               const std::map<std::string, Element>& index) {
  const std::size_t n = index.size();
  std::vector<Element> values;
  std::function<void(const json&, std::size_t)> walk = [&](const json& node, std::size_t depth) {
    if (depth == arity) {
      if (!node.is_string()) {
        throw Error(ErrorKind::TableError, "operation \"" + op + "\" has a non-label entry");
      }
      values.push_back(lookup(index, node.get<std::string>()));
      return;
    }
    if (!node.is_array() || node.size() != n) {
      throw Error(ErrorKind::TableError,
                  "operation \"" + op + "\" is not total: every row needs one entry per element");
    }
    for (const auto& child : node) walk(child, depth + 1);
  };
  walk(table, 0);
  return OperationTable(n, arity, std::move(values));
}

json table_to_json(const OperationTable& table, const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  std::size_t offset = 0;
  std::function<json(std::size_t)> build = [&](std::size_t depth) -> json {
    if (depth == table.arity()) return labels[table.values()[offset++]];
    json row = json::array();
    for (std::size_t i = 0; i < n; ++i) row.push_back(build(depth + 1));
    return row;
  };
  return build(0);
}

}  // namespace

FiniteAlgebra build_from_spec(const AlgebraSpec& spec) {
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    if (!index.emplace(spec.elements[i], static_cast<Element>(i)).second) {
      throw Error(ErrorKind::TableError, "duplicate element label \"" + spec.elements[i] + "\"");
    }
  }
  if (spec.elements.empty()) throw Error(ErrorKind::TableError, "no elements given");

  if (spec.kind == AlgebraKind::generic) {
    std::vector<OperationSymbol> symbols;
    std::vector<OperationTable> tables;
    for (const auto& [name, table] : spec.operations) {
      const auto arity = nesting_depth(table);
      symbols.push_back({name, arity});
      tables.push_back(table_from_json(name, table, arity, index));
    }
    for (const auto& [name, value] : spec.constants) {
      symbols.push_back({name, 0});
      tables.emplace_back(index.size(), 0, std::vector<Element>{lookup(index, value)});
    }
    return FiniteAlgebra(spec.name, spec.elements, Signature(std::move(symbols), spec.kind),
                         std::move(tables));
  }

  const bool bounded = spec.kind >= AlgebraKind::bounded_lattice;
  FiniteAlgebra lattice = [&] {
    if (spec.cover) {
      std::vector<std::pair<Element, Element>> covers;
      for (const auto& [lo, hi] : *spec.cover) {
        covers.emplace_back(lookup(index, lo), lookup(index, hi));
      }
      return lattice_from_covers(spec.name, spec.elements, covers, bounded);
    }
    auto join_it = spec.operations.find("join");
    auto meet_it = spec.operations.find("meet");
    if (join_it == spec.operations.end() || meet_it == spec.operations.end()) {
      throw Error(ErrorKind::KindError,
                  "lattice specs need a \"cover\" relation or \"join\"/\"meet\" tables");
    }
    auto j = table_from_json("join", join_it->second, 2, index);
    auto m = table_from_json("meet", meet_it->second, 2, index);
    return make_lattice(spec.name, spec.elements, {j.values().begin(), j.values().end()},
                        {m.values().begin(), m.values().end()}, bounded);
  }();

  if (spec.kind != AlgebraKind::residuated) return lattice;

  auto times_it = spec.operations.find("times");
  auto implies_it = spec.operations.find("implies");
  if (times_it == spec.operations.end() || implies_it == spec.operations.end()) {
    throw Error(ErrorKind::KindError, "residuated specs need \"times\" and \"implies\" tables");
  }
  const std::size_t n = spec.elements.size();
  std::vector<OperationTable> tables{
      lattice.table("join"),
      lattice.table("meet"),
      table_from_json("times", times_it->second, 2, index),
      table_from_json("implies", implies_it->second, 2, index),
      OperationTable(n, 0, {lattice.bottom()}),
      OperationTable(n, 0, {lattice.top()}),
  };
  return FiniteAlgebra(spec.name, spec.elements, Signature::residuated(), std::move(tables));
}

AlgebraSpec to_spec(const FiniteAlgebra& algebra) {
  AlgebraSpec spec;
  spec.name = algebra.name();
  spec.kind = algebra.kind();
  spec.elements = algebra.labels();
  if (algebra.is_lattice()) {
    std::vector<std::pair<std::string, std::string>> cover;
    for (auto [lo, hi] : cover_pairs(algebra)) {
      cover.emplace_back(algebra.label(lo), algebra.label(hi));
    }
    spec.cover = std::move(cover);
    if (algebra.kind() == AlgebraKind::residuated) {
      spec.operations["times"] = table_to_json(algebra.table("times"), algebra.labels());
      spec.operations["implies"] = table_to_json(algebra.table("implies"), algebra.labels());
    }
    return spec;
  }
  for (std::size_t i = 0; i < algebra.signature().size(); ++i) {
    const auto& op = algebra.signature()[i];
    if (op.arity == 0) {
      spec.constants[op.name] = algebra.label(algebra.table(i).constant());
    } else {
      spec.operations[op.name] = table_to_json(algebra.table(i), algebra.labels());
    }
  }
  return spec;
}

}  // namespace congrlab
