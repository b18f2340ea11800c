#include "congrlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "congrlab/blp.hpp"
#include "congrlab/constructions.hpp"
#include "congrlab/error.hpp"
#include "congrlab/fixtures.hpp"
#include "congrlab/lifting.hpp"
#include "congrlab/quotient.hpp"

namespace congrlab {

namespace {

struct Candidate {
  std::string name;
  FiniteAlgebra lattice;
  AlgebraKind kind;
};

const std::vector<Candidate>& candidates() {
  static const std::vector<Candidate> all = [] {
    std::vector<Candidate> out;
    for (const auto& name : fixture_names()) {
      auto f = fixture(name);
      auto l = lattice_reduct(f);
      auto d = dual(l);
      const bool self_dual = isomorphic(l, d);
      out.push_back({name, std::move(l), f.kind()});
      if (!self_dual) out.push_back({name + "^d", std::move(d), f.kind()});
    }
    return out;
  }();
  return all;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> formatted(const FiniteAlgebra& a, const ConLattice& cl,
                                   const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(format(a, cl[i]));
  return out;
}

QuotientSummary summarize(const FiniteAlgebra& q) {
  Analysis an(q);
  return {q.size(), an.con.size(), an.center.size(), an.fc.size(), identify(q)};
}

void pentagon_note(LiftingReport& r) {
  std::string text = "quotients computed:";
  for (const auto& row : r.rows) {
    if (row.quotient.size == 1 || row.quotient.size == r.size) continue;
    text += " P/" + row.partition + " ~ " + row.quotient.isomorphic_to.value_or("?") + ";";
  }
  for (const auto& row : r.rows) {
    if (row.quotient.con == 4 && row.quotient.boolean == 4 && row.quotient.fc == 4) {
      text += " Con(P/" + row.partition + ") is the four-element Boolean lattice";
    }
  }
  r.notes.push_back(text);
}

nlohmann::json optional_string(const std::optional<std::string>& s) {
  return s ? nlohmann::json(*s) : nlohmann::json(nullptr);
}

}  // namespace

std::optional<std::string> identify(const FiniteAlgebra& algebra) {
  if (!algebra.is_lattice()) return std::nullopt;
  auto l = lattice_reduct(algebra);
  // Fixtures of the same kind first, so a lattice is not named after R0.
  for (const bool same_kind : {true, false}) {
    for (const auto& c : candidates()) {
      if ((c.kind == algebra.kind()) != same_kind) continue;
      if (c.lattice.size() == l.size() && isomorphic(l, c.lattice)) return c.name;
    }
  }
  return std::nullopt;
}

LiftingReport build_report(const FiniteAlgebra& a, std::optional<std::string> fixture_name) {
  return build_report(a, all_congruences(a), std::move(fixture_name));
}

LiftingReport build_report(const FiniteAlgebra& a, ConLattice con,
                           std::optional<std::string> fixture_name) {
  if (!fixture_name) {
    for (const auto& name : fixture_names()) {
      if (fixture(name).same_structure(a)) {
        fixture_name = name;
        break;
      }
    }
  }
  Analysis an(std::move(con));
  const auto& cl = an.con;
  LiftingReport r;
  r.algebra = a.name();
  r.fixture = fixture_name;
  r.kind = std::string(to_string(a.kind()));
  r.size = a.size();
  r.boolean_members = formatted(a, cl, an.center.members);
  r.fc_members = formatted(a, cl, an.fc.members);
  r.distributive = is_congruence_distributive(cl);
  r.permutable = is_congruence_permutable(cl);
  r.arithmetical = r.distributive && r.permutable;
  r.fc_normal = is_fc_normal(a, an).holds;
  r.b_normal = is_b_normal(a, an).holds;

  std::vector<bool> maximal(cl.size(), false), prime(cl.size(), false);
  if (!a.is_trivial()) {
    for (auto i : maximal_congruences(cl)) maximal[i] = true;
    for (auto i : prime_congruences(cl)) prime[i] = true;
    r.local = is_local(cl);
    r.semilocal = is_semilocal(cl);
  }

  for (std::size_t i = 0; i < cl.size(); ++i) {
    const auto& theta = cl[i];
    CongruenceRow row;
    row.partition = format(a, theta);
    auto f = has_fclp(a, an, theta);
    auto c = has_cblp(a, an, theta);
    row.fclp = f.holds;
    row.cblp = c.holds;
    row.fclp_failing_target = f.failing_target;
    row.cblp_failing_target = c.failing_target;
    row.maximal = maximal[i];
    row.prime = prime[i];
    row.quotient = summarize(quotient(a, theta).quotient);
    if (!row.fclp && r.fclp) {
      r.fclp = false;
      r.fclp_failing_congruence = row.partition;
    }
    if (!row.cblp && r.cblp) {
      r.cblp = false;
      r.cblp_failing_congruence = row.partition;
    }
    r.rows.push_back(std::move(row));
  }

  if (a.kind() >= AlgebraKind::bounded_lattice) {
    try {
      r.blp = algebra_blp(a).holds;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AmbiguousComplement) throw;
      r.notes.push_back(std::string("BLP not evaluated: ") + e.what());
    }
  }

  if (fixture_name) {
    if (auto summands = ordinal_sum_summands(*fixture_name)) {
      auto lower = fixture(summands->first);
      auto upper = fixture(summands->second);
      r.osum_transport = {{summands->first + "+" + summands->second,
                           osum_con_iso_check(lower, upper)}};
      if (!r.osum_transport->second.fc_transports) {
        r.notes.push_back("FC is not transported across the ordinal sum " +
                          r.osum_transport->first + ": " +
                          std::to_string(r.osum_transport->second.fc_transported.size()) +
                          " sums of factor congruences against " +
                          std::to_string(r.osum_transport->second.fc_of_sum.size()) +
                          " factor congruences of the sum");
      }
    }
    if (*fixture_name == "P") pentagon_note(r);
  }
  return r;
}

LiftingReport build_product_report(std::span<const FiniteAlgebra> factors) {
  auto r = build_report(direct_product(factors));
  r.product = product_con_iso_check(factors);
  return r;
}

nlohmann::json to_json(const LiftingReport& r) {
  nlohmann::json j;
  j["algebra"] = r.algebra;
  j["fixture"] = optional_string(r.fixture);
  j["kind"] = r.kind;
  j["size"] = r.size;
  j["counts"] = {{"con", r.rows.size()},
                 {"boolean", r.boolean_members.size()},
                 {"fc", r.fc_members.size()}};
  j["boolean_members"] = r.boolean_members;
  j["fc_members"] = r.fc_members;
  j["flags"] = {{"fclp", r.fclp},
                {"cblp", r.cblp},
                {"fc_normal", r.fc_normal},
                {"b_normal", r.b_normal},
                {"distributive", r.distributive},
                {"permutable", r.permutable},
                {"arithmetical", r.arithmetical},
                {"local", r.local},
                {"semilocal", r.semilocal},
                {"blp", r.blp ? nlohmann::json(*r.blp) : nlohmann::json(nullptr)}};
  j["evidence"] = {{"fclp_failing_congruence", optional_string(r.fclp_failing_congruence)},
                   {"cblp_failing_congruence", optional_string(r.cblp_failing_congruence)}};
  auto rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"congruence", row.partition},
                    {"fclp", row.fclp},
                    {"cblp", row.cblp},
                    {"fclp_failing_target", optional_string(row.fclp_failing_target)},
                    {"cblp_failing_target", optional_string(row.cblp_failing_target)},
                    {"maximal", row.maximal},
                    {"prime", row.prime},
                    {"quotient",
                     {{"size", row.quotient.size},
                      {"con", row.quotient.con},
                      {"boolean", row.quotient.boolean},
                      {"fc", row.quotient.fc},
                      {"isomorphic_to", optional_string(row.quotient.isomorphic_to)}}}});
  }
  j["per_congruence"] = rows;
  if (r.osum_transport) {
    const auto& [name, o] = *r.osum_transport;
    j["osum_transport"] = {{"summands", name},
                           {"con_size", o.con_size},
                           {"bijective", o.bijective},
                           {"boolean_transports", o.boolean_transports},
                           {"fc_transports", o.fc_transports},
                           {"fc_of_sum", o.fc_of_sum},
                           {"fc_transported", o.fc_transported}};
  }
  if (r.product) {
    const auto& p = *r.product;
    j["product"] = {{"con_size", p.con_size},
                    {"boolean_size", p.boolean_size},
                    {"fc_size", p.fc_size},
                    {"bijective", p.bijective},
                    {"preserves_operations", p.preserves_operations},
                    {"boolean_bijective", p.boolean_bijective},
                    {"fc_bijective", p.fc_bijective}};
  }
  j["notes"] = r.notes;
  return j;
}

std::string to_table(const LiftingReport& r) {
  std::ostringstream out;
  out << r.algebra;
  if (r.fixture) out << " (fixture " << *r.fixture << ")";
  out << ": " << r.kind << ", " << r.size << " elements\n";
  out << "|Con|=" << r.rows.size() << ", |B|=" << r.boolean_members.size()
      << ", |FC|=" << r.fc_members.size() << "\n";
  out << "CBLP: " << yes(r.cblp) << ", FCLP: " << yes(r.fclp) << "\n";
  if (r.fclp_failing_congruence) out << "FCLP fails at " << *r.fclp_failing_congruence << "\n";
  if (r.cblp_failing_congruence) out << "CBLP fails at " << *r.cblp_failing_congruence << "\n";
  out << "FC-normal: " << yes(r.fc_normal) << ", B-normal: " << yes(r.b_normal) << "\n";
  out << "distributive: " << yes(r.distributive) << ", permutable: " << yes(r.permutable)
      << ", arithmetical: " << yes(r.arithmetical) << "\n";
  out << "local: " << yes(r.local) << ", semilocal: " << yes(r.semilocal) << "\n";
  if (r.blp) out << "BLP: " << yes(*r.blp) << "\n";

  auto list = [&](const char* title, const std::vector<std::string>& members) {
    out << title << ":";
    for (const auto& m : members) out << " " << m << ";";
    out << "\n";
  };
  list("B", r.boolean_members);
  list("FC", r.fc_members);

  std::size_t width = std::string("congruence").size();
  for (const auto& row : r.rows) width = std::max(width, row.partition.size());
  out << "\n" << std::left << std::setw(static_cast<int>(width) + 2) << "congruence"
      << "FCLP CBLP max prime  quotient\n";
  for (const auto& row : r.rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << row.partition
        << std::setw(5) << yes(row.fclp) << std::setw(5) << yes(row.cblp) << std::setw(4)
        << yes(row.maximal) << std::setw(7) << yes(row.prime) << row.quotient.size
        << " el, |Con|=" << row.quotient.con << ", |B|=" << row.quotient.boolean
        << ", |FC|=" << row.quotient.fc;
    if (row.quotient.isomorphic_to) out << ", ~ " << *row.quotient.isomorphic_to;
    out << "\n";
  }
  for (const auto& row : r.rows) {
    if (row.fclp_failing_target) {
      out << "  " << row.partition << ": no FC preimage for " << *row.fclp_failing_target << "\n";
    }
    if (row.cblp_failing_target) {
      out << "  " << row.partition << ": no B preimage for " << *row.cblp_failing_target << "\n";
    }
  }

  if (r.osum_transport) {
    const auto& [name, o] = *r.osum_transport;
    out << "\nordinal sum " << name << ": |Con|=" << o.con_size
        << ", bijective: " << yes(o.bijective)
        << ", B transports: " << yes(o.boolean_transports)
        << ", FC transports: " << yes(o.fc_transports) << "\n";
    list("  FC of the sum", o.fc_of_sum);
    list("  sums of FC members", o.fc_transported);
  }
  if (r.product) {
    const auto& p = *r.product;
    out << "\nproduct transport: |Con|=" << p.con_size << ", |B|=" << p.boolean_size
        << ", |FC|=" << p.fc_size << ", isomorphism: " << yes(p.holds()) << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string con_dot(const FiniteAlgebra& a, const ConLattice& cl) {
  auto center = boolean_center(cl);
  auto fc = factor_congruences(cl, center);
  std::ostringstream out;
  out << "digraph \"Con(" << a.name() << ")\" {\n"
      << "  // legend: double border = Boolean congruence, filled = factor congruence\n"
      << "  label=\"Con(" << a.name()
      << "): double border = Boolean congruence, filled = factor congruence\";\n"
      << "  labelloc=t;\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < cl.size(); ++i) {
    out << "  n" << i << " [label=\"" << format(a, cl[i]) << "\"";
    if (center.contains(i)) out << ", peripheries=2";
    if (fc.contains(i)) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t j = 0; j < cl.size(); ++j) {
      if (i == j || !cl.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < cl.size() && cover; ++k) {
        if (k != i && k != j && cl.leq(i, k) && cl.leq(k, j)) cover = false;
      }
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace congrlab
