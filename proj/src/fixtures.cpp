#include "congrlab/fixtures.hpp"

#include <map>

#include "congrlab/error.hpp"

namespace congrlab {

namespace {

// Element order and labels follow the drawings; covers are listed lo -> hi.
constexpr const char* kFixtureSpecs[] = {
    R"({"name": "L1", "kind": "bounded-lattice", "elements": ["0"], "cover": []})",

    R"({"name": "L2", "kind": "bounded-lattice", "elements": ["0", "1"],
        "cover": [["0", "1"]]})",

    R"({"name": "L3", "kind": "bounded-lattice", "elements": ["0", "m", "1"],
        "cover": [["0", "m"], ["m", "1"]]})",

    R"({"name": "L2x2", "kind": "bounded-lattice", "elements": ["0", "u", "v", "1"],
        "cover": [["0", "u"], ["0", "v"], ["u", "1"], ["v", "1"]]})",

    R"({"name": "L2x3cube", "kind": "bounded-lattice",
        "elements": ["0", "a", "b", "c", "x", "y", "z", "1"],
        "cover": [["0", "a"], ["0", "b"], ["0", "c"],
                  ["a", "x"], ["b", "x"], ["a", "y"], ["c", "y"], ["b", "z"], ["c", "z"],
                  ["x", "1"], ["y", "1"], ["z", "1"]]})",

    R"({"name": "L2timesL3", "kind": "bounded-lattice",
        "elements": ["0", "p", "q", "r", "s", "1"],
        "cover": [["0", "p"], ["0", "q"], ["p", "r"], ["q", "r"], ["q", "s"],
                  ["r", "1"], ["s", "1"]]})",

    R"({"name": "D", "kind": "bounded-lattice", "elements": ["0", "a", "b", "c", "1"],
        "cover": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "1"], ["b", "1"], ["c", "1"]]})",

    R"({"name": "P", "kind": "bounded-lattice", "elements": ["0", "x", "y", "z", "1"],
        "cover": [["0", "x"], ["0", "y"], ["y", "z"], ["x", "1"], ["z", "1"]]})",

    R"({"name": "S", "kind": "bounded-lattice", "elements": ["0", "a", "b", "c", "x", "1"],
        "cover": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "x"], ["b", "x"], ["c", "x"],
                  ["x", "1"]]})",

    R"({"name": "R", "kind": "bounded-lattice",
        "elements": ["0", "a", "b", "c", "x", "y", "1"],
        "cover": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "x"], ["b", "x"], ["c", "x"],
                  ["x", "y"], ["y", "1"]]})",

    R"({"name": "T", "kind": "bounded-lattice",
        "elements": ["0", "z", "a", "b", "c", "x", "1"],
        "cover": [["0", "z"], ["z", "a"], ["z", "b"], ["z", "c"], ["a", "x"], ["b", "x"],
                  ["c", "x"], ["x", "1"]]})",

    R"({"name": "E", "kind": "bounded-lattice", "elements": ["0", "a", "b", "c", "d", "1"],
        "cover": [["0", "a"], ["0", "b"], ["0", "c"], ["b", "d"], ["a", "1"], ["d", "1"],
                  ["c", "1"]]})",

    R"({"name": "X", "kind": "bounded-lattice",
        "elements": ["0", "p", "q", "r", "s", "t", "u", "1"],
        "cover": [["0", "p"], ["0", "q"], ["p", "r"], ["q", "r"], ["r", "s"], ["r", "t"],
                  ["r", "u"], ["s", "1"], ["t", "1"], ["u", "1"]]})",

    R"({"name": "H", "kind": "bounded-lattice",
        "elements": ["0", "a", "b", "c", "x", "y", "z", "1"],
        "cover": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "y"], ["b", "y"], ["c", "y"],
                  ["c", "x"], ["y", "z"], ["z", "1"], ["x", "1"]]})",

    R"({"name": "R0", "kind": "residuated", "elements": ["0", "a", "b", "c", "1"],
        "cover": [["0", "c"], ["c", "a"], ["c", "b"], ["a", "1"], ["b", "1"]],
        "operations": {
          "times": [["0", "0", "0", "0", "0"],
                    ["0", "a", "c", "c", "a"],
                    ["0", "c", "b", "c", "b"],
                    ["0", "c", "c", "c", "c"],
                    ["0", "a", "b", "c", "1"]],
          "implies": [["1", "1", "1", "1", "1"],
                      ["0", "1", "b", "b", "1"],
                      ["0", "a", "1", "a", "1"],
                      ["0", "1", "1", "1", "1"],
                      ["0", "a", "b", "c", "1"]]}})",

    R"({"name": "L2osumL2x2", "kind": "bounded-lattice", "elements": ["0", "a", "b", "c", "1"],
        "cover": [["0", "c"], ["c", "a"], ["c", "b"], ["a", "1"], ["b", "1"]]})",

    R"({"name": "Z", "kind": "bounded-lattice",
        "elements": ["0", "x", "y", "z", "w", "u", "v", "1"],
        "cover": [["0", "x"], ["0", "y"], ["y", "z"], ["x", "w"], ["z", "w"], ["w", "u"],
                  ["w", "v"], ["u", "1"], ["v", "1"]]})",
};

const std::map<std::string, AlgebraSpec, std::less<>>& registry() {
  static const auto specs = [] {
    std::map<std::string, AlgebraSpec, std::less<>> out;
    for (const char* text : kFixtureSpecs) {
      auto spec = parse_algebra_spec(nlohmann::json::parse(text));
      out.emplace(spec.name, std::move(spec));
    }
    return out;
  }();
  return specs;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const auto names = [] {
    std::vector<std::string> out;
    for (const char* text : kFixtureSpecs) {
      out.push_back(nlohmann::json::parse(text)["name"].get<std::string>());
    }
    return out;
  }();
  return names;
}

AlgebraSpec fixture_spec(std::string_view name) {
  const auto& specs = registry();
  auto it = specs.find(name);
  if (it == specs.end()) {
    throw Error(ErrorKind::UnknownFixture, "no fixture named \"" + std::string(name) + "\"");
  }
  return it->second;
}

FiniteAlgebra fixture(std::string_view name) { return build_from_spec(fixture_spec(name)); }

std::optional<std::pair<std::string, std::string>> ordinal_sum_summands(std::string_view name) {
  static const std::map<std::string, std::pair<std::string, std::string>, std::less<>> sums{
      {"S", {"D", "L2"}},
      {"R", {"D", "L3"}},
      {"T", {"L2", "S"}},
      {"X", {"L2x2", "D"}},
      {"L2osumL2x2", {"L2", "L2x2"}},
      {"Z", {"P", "L2x2"}},
  };
  auto it = sums.find(name);
  if (it == sums.end()) return std::nullopt;
  return it->second;
}

}  // namespace congrlab
