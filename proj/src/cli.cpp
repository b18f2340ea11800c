#include "congrlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "congrlab/blp.hpp"
#include "congrlab/boolean_factor.hpp"
#include "congrlab/constructions.hpp"
#include "congrlab/error.hpp"
#include "congrlab/fixtures.hpp"
#include "congrlab/lifting.hpp"
#include "congrlab/quotient.hpp"
#include "congrlab/report.hpp"
#include "congrlab/spec_io.hpp"

namespace congrlab::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::vector<std::string> fixtures;
  std::vector<std::string> files;
  std::string format = "table";
  std::string by;
  std::string out;
  std::size_t max_size = kDefaultCarrierCap;
  std::string property;
  std::string fixture_name;
  bool emit_spec = false;
};

struct Input {
  FiniteAlgebra algebra;
  std::optional<std::string> fixture;
};

std::vector<Input> load_inputs(const Options& o) {
  std::vector<Input> in;
  for (const auto& name : o.fixtures) in.push_back({fixture(name), name});
  for (const auto& path : o.files) in.push_back({build_from_spec(load_algebra_spec(path)), {}});
  if (in.empty()) throw Error(ErrorKind::ParseError, "no input: give --fixture NAME or --file PATH");
  for (const auto& i : in) {
    if (i.algebra.size() > o.max_size) {
      throw Error(ErrorKind::SizeCap, i.algebra.name() + " has " +
                                          std::to_string(i.algebra.size()) +
                                          " elements, above --max-size " +
                                          std::to_string(o.max_size));
    }
  }
  return in;
}

Input single_input(const Options& o) {
  auto in = load_inputs(o);
  if (in.size() != 1) throw Error(ErrorKind::ParseError, "exactly one input algebra expected");
  return std::move(in.front());
}

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string spec_text(const FiniteAlgebra& a) { return dump(to_json(to_spec(a))); }

std::string algebra_table(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << a.name() << ": " << to_string(a.kind()) << ", " << a.size() << " elements\n";
  out << "elements:";
  for (const auto& l : a.labels()) out << " " << l;
  out << "\n";
  if (a.is_lattice()) {
    out << "covers:";
    for (auto [x, y] : cover_pairs(a)) out << " " << a.label(x) << "<" << a.label(y);
    out << "\n";
    if (auto name = identify(a)) out << "isomorphic to " << *name << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Verbs. Each returns the exit code and writes its output to `out`.

int con_verb(const Options& o, std::ostream& out) {
  auto in = single_input(o);
  const auto& a = in.algebra;
  auto cl = cached_congruences(a);
  if (o.format == "dot") {
    out << con_dot(a, cl);
    return kHolds;
  }
  auto center = boolean_center(cl);
  auto fc = factor_congruences(cl, center);
  if (o.format == "json") {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < cl.size(); ++i) {
      rows.push_back({{"index", i},
                      {"congruence", format(a, cl[i])},
                      {"blocks", cl[i].num_blocks()},
                      {"boolean", center.contains(i)},
                      {"factor", fc.contains(i)}});
    }
    out << dump({{"algebra", a.name()}, {"congruences", rows}});
    return kHolds;
  }
  out << "Con(" << a.name() << "): " << cl.size() << " congruences\n";
  std::size_t width = 0;
  for (const auto& c : cl.elements()) width = std::max(width, format(a, c).size());
  for (std::size_t i = 0; i < cl.size(); ++i) {
    out << std::right << std::setw(4) << i << "  " << std::left
        << std::setw(static_cast<int>(width) + 2) << format(a, cl[i]) << cl[i].num_blocks()
        << " blocks" << (center.contains(i) ? "  B" : "") << (fc.contains(i) ? "  FC" : "")
        << "\n";
  }
  return kHolds;
}

int center_verb(const Options& o, std::ostream& out, bool factors_only) {
  auto in = single_input(o);
  const auto& a = in.algebra;
  auto cl = cached_congruences(a);
  auto center = boolean_center(cl);
  auto fc = factor_congruences(cl, center);
  const auto& members = factors_only ? fc.members : center.members;
  if (o.format == "json") {
    auto rows = nlohmann::json::array();
    for (auto i : members) {
      rows.push_back({{"congruence", format(a, cl[i])},
                      {"complement", format(a, cl[center.neg(i)])}});
    }
    out << dump({{"algebra", a.name()}, {factors_only ? "fc" : "boolean_center", rows}});
    return kHolds;
  }
  out << (factors_only ? "FC(" : "B(Con(") << a.name() << (factors_only ? ")" : "))") << ": "
      << members.size() << " members\n";
  for (auto i : members) {
    out << "  " << format(a, cl[i]) << "  complement " << format(a, cl[center.neg(i)]) << "\n";
  }
  return kHolds;
}

int quotient_verb(const Options& o, std::ostream& out) {
  auto in = single_input(o);
  const auto& a = in.algebra;
  if (o.by.empty()) throw Error(ErrorKind::ParseError, "quotient needs --by \"BLOCKS\"");
  auto q = quotient(a, parse_congruence(a, o.by));
  if (o.format == "json") {
    out << spec_text(q.quotient);
    return kHolds;
  }
  out << algebra_table(q.quotient);
  return kHolds;
}

int construction_verb(const Options& o, std::ostream& out, const std::string& verb) {
  auto in = load_inputs(o);
  std::vector<FiniteAlgebra> algebras;
  for (auto& i : in) algebras.push_back(std::move(i.algebra));
  std::optional<FiniteAlgebra> result;
  std::string extra;
  if (verb == "dual") {
    if (algebras.size() != 1) throw Error(ErrorKind::ParseError, "dual takes one algebra");
    result = dual(algebras[0]);
  } else if (verb == "product") {
    if (algebras.empty()) throw Error(ErrorKind::ParseError, "product needs factors");
    result = direct_product(algebras, o.max_size);
    if (o.format != "json") {
      auto p = product_con_iso_check(algebras);
      extra = "|Con|=" + std::to_string(p.con_size) + ", |B|=" + std::to_string(p.boolean_size) +
              ", |FC|=" + std::to_string(p.fc_size) + ", Con transport: " + yes(p.holds()) + "\n";
    }
  } else {
    if (algebras.size() != 2) throw Error(ErrorKind::ParseError, "osum takes two algebras");
    result = ordinal_sum(algebras[0], algebras[1]);
    if (o.format != "json") {
      auto r = osum_con_iso_check(algebras[0], algebras[1]);
      extra = "|Con|=" + std::to_string(r.con_size) + ", Con transport: " + yes(r.bijective) +
              ", B transports: " + yes(r.boolean_transports) +
              ", FC transports: " + yes(r.fc_transports) + "\n";
    }
  }
  if (result->size() > o.max_size) {
    throw Error(ErrorKind::SizeCap, "result exceeds --max-size " + std::to_string(o.max_size));
  }
  if (o.format == "json") {
    out << spec_text(*result);
  } else {
    out << algebra_table(*result) << extra;
  }
  return kHolds;
}

int report_verb(const Options& o, std::ostream& out) {
  auto in = load_inputs(o);
  LiftingReport r;
  if (in.size() > 1) {
    std::vector<FiniteAlgebra> factors;
    for (auto& i : in) factors.push_back(std::move(i.algebra));
    r = build_product_report(factors);
  } else {
    const auto& a = in.front().algebra;
    if (o.format == "dot") {
      out << con_dot(a, cached_congruences(a));
      return kHolds;
    }
    r = build_report(a, cached_congruences(a), in.front().fixture);
  }
  out << (o.format == "json" ? dump(to_json(r)) : to_table(r));
  return kHolds;
}

struct Verdict {
  bool holds = false;
  std::string text;
  nlohmann::json evidence;
};

std::string failing(const char* what, const AlgebraLiftResult& r) {
  if (r.holds) return "";
  return std::string(what) + " fails at " + r.failing_congruence.value_or("?") +
         " (no preimage for " + r.failing_target.value_or("?") + ")\n";
}

nlohmann::json evidence(const AlgebraLiftResult& r) {
  return {{"failing_congruence", r.failing_congruence ? nlohmann::json(*r.failing_congruence)
                                                      : nlohmann::json(nullptr)},
          {"failing_target",
           r.failing_target ? nlohmann::json(*r.failing_target) : nlohmann::json(nullptr)}};
}

Verdict check_lifting(const FiniteAlgebra& a, const Options& o) {
  Analysis an(cached_congruences(a));
  const bool want_fc = o.property == "fclp";
  if (!o.by.empty()) {
    auto theta = parse_congruence(a, o.by);
    auto f = has_fclp(a, an, theta);
    auto c = has_cblp(a, an, theta);
    Verdict v{want_fc ? f.holds : c.holds,
              o.by + ": FCLP: " + yes(f.holds) + "; CBLP: " + yes(c.holds) + "\n", {}};
    const auto& chosen = want_fc ? f : c;
    if (chosen.failing_target) v.text += "no preimage for " + *chosen.failing_target + "\n";
    for (const auto& w : chosen.witnesses) v.text += "  " + w.target + " <- " + w.source + "\n";
    v.evidence = {{"fclp", f.holds}, {"cblp", c.holds}};
    return v;
  }
  auto f = algebra_fclp(a, an);
  auto c = algebra_cblp(a, an);
  Verdict v{want_fc ? f.holds : c.holds,
            std::string("FCLP: ") + yes(f.holds) + "; CBLP: " + yes(c.holds) + "\n", {}};
  v.text += failing("FCLP", f) + failing("CBLP", c);
  v.evidence = {{"fclp", evidence(f)}, {"cblp", evidence(c)}};
  return v;
}

Verdict check_normality(const FiniteAlgebra& a, bool fc) {
  Analysis an(cached_congruences(a));
  auto r = fc ? is_fc_normal(a, an) : is_b_normal(a, an);
  Verdict v{r.holds, std::string(fc ? "FC-normal: " : "B-normal: ") + yes(r.holds) + "\n", {}};
  if (r.failing_pair) {
    v.text += "no witness for (" + r.failing_pair->first + ", " + r.failing_pair->second + ")\n";
    v.evidence = {{"phi", r.failing_pair->first}, {"psi", r.failing_pair->second}};
  }
  return v;
}

Verdict check_blp(const FiniteAlgebra& a, const std::string& property) {
  AlgebraLiftResult r;
  std::string name = "BLP";
  std::string suffix;
  if (property == "blp") {
    r = algebra_blp(a);
  } else if (property == "filt-blp") {
    name = "Filt-BLP";
    r = has_filt_blp(a);
  } else {
    name = "Id-BLP";
    if (a.kind() == AlgebraKind::residuated) {
      r = has_id_blp(lattice_reduct(a));
      suffix = " (on the lattice reduct)";
    } else {
      r = has_id_blp(a);
    }
  }
  Verdict v{r.holds, name + ": " + yes(r.holds) + suffix + "\n", evidence(r)};
  if (!r.holds) {
    v.text += "fails at " + r.failing_congruence.value_or("?") + ": " +
              r.failing_target.value_or("?") + " has no complemented preimage\n";
  }
  return v;
}

Verdict check_crt(const FiniteAlgebra& a) {
  auto cl = cached_congruences(a);
  std::vector<std::size_t> all(cl.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const bool characterized = crt_characterization(cl, all);
  std::optional<CrtResult> direct;
  std::size_t k = 3;
  for (; k >= 2 && !direct; --k) {
    try {
      direct = crt_direct_check(cl, all, k);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeCap) throw;
    }
  }
  Verdict v{characterized, std::string("CRT on Con(A): ") + yes(characterized) + "\n", {}};
  v.evidence = {{"characterization", characterized}};
  if (direct) {
    v.text += "direct check up to k=" + std::to_string(k + 1) + ": " + yes(direct->holds) + "\n";
    v.evidence["direct"] = direct->holds;
    if (direct->witness) {
      std::string w = "witness:";
      for (auto t : direct->witness->thetas) w += " " + format(a, cl[t]) + ";";
      w += " elements";
      for (auto e : direct->witness->elements) w += " " + a.label(e);
      v.text += w + "\n";
    }
    if (direct->holds != characterized) {
      v.text += "implementation bug: the two CRT checks disagree\n";
    }
  } else {
    v.text += "direct check skipped: above the work cap\n";
  }
  return v;
}

int check_verb(const Options& o, std::ostream& out) {
  auto in = single_input(o);
  const auto& a = in.algebra;
  Verdict v;
  if (o.property == "fclp" || o.property == "cblp") {
    v = check_lifting(a, o);
  } else if (o.property == "fc-normal" || o.property == "b-normal") {
    v = check_normality(a, o.property == "fc-normal");
  } else if (o.property == "arithmetical") {
    auto cl = cached_congruences(a);
    const bool d = is_congruence_distributive(cl);
    const bool p = is_congruence_permutable(cl);
    v = {d && p,
         std::string("arithmetical: ") + yes(d && p) + " (distributive: " + yes(d) +
             ", permutable: " + yes(p) + ")\n",
         {{"distributive", d}, {"permutable", p}}};
  } else if (o.property == "crt") {
    v = check_crt(a);
  } else {
    v = check_blp(a, o.property);
  }
  if (o.format == "json") {
    out << dump({{"algebra", a.name()},
                 {"property", o.property},
                 {"holds", v.holds},
                 {"evidence", v.evidence}});
  } else {
    out << v.text;
  }
  return v.holds ? kHolds : kFails;
}

int fixture_verb(const Options& o, std::ostream& out) {
  if (o.fixture_name.empty()) {
    for (const auto& n : fixture_names()) out << n << "\n";
    return kHolds;
  }
  if (o.emit_spec || o.format == "json") {
    out << dump(to_json(fixture_spec(o.fixture_name)));
  } else {
    out << algebra_table(fixture(o.fixture_name));
  }
  return kHolds;
}

int regen_verb(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw Error(ErrorKind::ParseError, "regen needs --out DIR");
  fs::create_directories(o.out);
  std::size_t n = 0;
  for (const auto& [name, text] : golden_files()) {
    std::ofstream(fs::path(o.out) / name, std::ios::binary) << text;
    ++n;
  }
  out << "wrote " << n << " files to " << o.out << "\n";
  return kHolds;
}

void add_inputs(CLI::App* cmd, Options& o) {
  cmd->add_option("--fixture", o.fixtures, "Registry fixture name (repeatable)");
  cmd->add_option("--file", o.files, "Algebra spec JSON file (repeatable)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  cmd->add_option("--max-size", o.max_size, "Largest carrier accepted");
}

}  // namespace

ConLattice cached_congruences(const FiniteAlgebra& a) {
  const char* dir = std::getenv("CONGRLAB_CACHE");
  if (!dir || !*dir) return all_congruences(a);
  std::ostringstream key;
  key << std::hex << std::setw(16) << std::setfill('0') << a.fingerprint();
  const auto path = fs::path(dir) / (key.str() + ".json");
  if (std::ifstream in{path}) {
    try {
      auto doc = nlohmann::json::parse(in);
      if (doc.at("labels").get<std::vector<std::string>>() == a.labels()) {
        std::vector<Partition> parts;
        for (const auto& p : doc.at("partitions")) {
          parts.push_back(as_congruence(a, Partition(p.get<std::vector<Element>>())).partition());
        }
        if (!parts.empty() && parts.front().is_discrete() && parts.back().is_full()) {
          return ConLattice(a, std::move(parts));
        }
      }
    } catch (const std::exception&) {
      // Stale or corrupt entry: recompute below.
    }
  }
  auto cl = all_congruences(a);
  nlohmann::json doc;
  doc["labels"] = a.labels();
  doc["partitions"] = nlohmann::json::array();
  for (const auto& c : cl.elements()) {
    auto reps = c.partition().representatives();
    doc["partitions"].push_back(std::vector<Element>(reps.begin(), reps.end()));
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  const auto tmp = path.string() + ".tmp";
  if (std::ofstream(tmp) << doc.dump()) fs::rename(tmp, path, ec);
  return cl;
}

std::map<std::string, std::string> golden_files() {
  std::map<std::string, std::string> files;
  for (const auto& name : fixture_names()) {
    auto a = fixture(name);
    auto r = build_report(a, name);
    files[name + ".json"] = dump(to_json(r));
    files[name + ".txt"] = to_table(r);
    files[name + ".dot"] = con_dot(a, all_congruences(a));
  }
  std::vector<FiniteAlgebra> te{fixture("T"), fixture("E")};
  auto r = build_product_report(te);
  files["TxE.json"] = dump(to_json(r));
  files["TxE.txt"] = to_table(r);
  return files;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Congruence lattices, factor congruences and lifting properties of finite algebras",
               "congrlab"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 = success or the checked property holds, 1 = the property fails "
      "(evidence on stdout), 2 = input or validation error.\n"
      "CONGRLAB_CACHE=DIR memoizes congruence lattices keyed by a hash of the tables.");

  auto* con = app.add_subcommand("con", "List Con(A) in canonical order");
  auto* center = app.add_subcommand("center", "Boolean centre of Con(A)");
  auto* fc = app.add_subcommand("fc", "Factor congruences of A");
  auto* quo = app.add_subcommand("quotient", "Quotient algebra A/theta");
  auto* product = app.add_subcommand("product", "Direct product of the inputs, in order");
  auto* osum = app.add_subcommand("osum", "Ordinal sum of two bounded lattices");
  auto* dualc = app.add_subcommand("dual", "Order dual of a lattice");
  auto* check = app.add_subcommand("check", "Decide a property; exit 0 if it holds, 1 if not");
  auto* report = app.add_subcommand("report", "Full lifting report (several inputs: product)");
  auto* fixt = app.add_subcommand("fixture", "List fixtures or show one");
  auto* dot = app.add_subcommand("dot", "Hasse diagram of Con(A) in DOT");
  auto* regen = app.add_subcommand("regen", "Rewrite every golden file into --out DIR");

  for (auto* cmd : {con, center, fc, quo, product, osum, dualc, check, report, dot}) {
    add_inputs(cmd, o);
    cmd->add_option("--out", o.out, "Write output to this file");
  }
  quo->add_option("--by", o.by, "Congruence as blocks, e.g. \"0,m|1\"")->required();
  check->add_option("property", o.property, "Property to decide")
      ->required()
      ->check(CLI::IsMember({"fclp", "cblp", "blp", "filt-blp", "id-blp", "fc-normal",
                             "b-normal", "arithmetical", "crt"}));
  check->add_option("--by", o.by, "Restrict fclp/cblp to one congruence");
  fixt->add_option("name", o.fixture_name, "Fixture name");
  fixt->add_flag("--emit-spec", o.emit_spec, "Print the fixture's JSON spec");
  fixt->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));
  regen->add_option("--out", o.out, "Golden directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kHolds : kInputError;
  }

  std::ostringstream buffer;
  int code = kHolds;
  try {
    if (*con) code = con_verb(o, buffer);
    else if (*center) code = center_verb(o, buffer, false);
    else if (*fc) code = center_verb(o, buffer, true);
    else if (*quo) code = quotient_verb(o, buffer);
    else if (*product) code = construction_verb(o, buffer, "product");
    else if (*osum) code = construction_verb(o, buffer, "osum");
    else if (*dualc) code = construction_verb(o, buffer, "dual");
    else if (*check) code = check_verb(o, buffer);
    else if (*report) code = report_verb(o, buffer);
    else if (*fixt) code = fixture_verb(o, buffer);
    else if (*dot) {
      o.format = "dot";
      code = con_verb(o, buffer);
    } else if (*regen) {
      return regen_verb(o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << o.out << "\n";
      return kInputError;
    }
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace congrlab::cli
