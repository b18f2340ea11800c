#include "congrlab/lifting.hpp"

#include <map>

namespace congrlab {

namespace {

enum class Target { factor, boolean };

const std::vector<std::size_t>& members(const Analysis& an, Target t) {
  return t == Target::factor ? an.fc.members : an.center.members;
}

LiftResult lift(const FiniteAlgebra& algebra, const Analysis& analysis, const Congruence& theta,
                Target target) {
  auto q = quotient(algebra, theta);
  Analysis qa(quotient_congruences(q, analysis.con));
  // Image of FC(A) (or B) under u, keyed by partition, first source kept.
  std::map<Partition, std::size_t> image;
  for (auto i : members(analysis, target)) {
    image.emplace(u_map(q, analysis.con[i]).partition(), i);
  }
  LiftResult out;
  for (auto j : members(qa, target)) {
    const auto& beta = qa.con[j];
    auto it = image.find(beta.partition());
    if (it == image.end()) {
      out.holds = false;
      out.failing_target = format(q.quotient, beta);
      out.witnesses.clear();
      return out;
    }
    out.witnesses.push_back({format(q.quotient, beta), format(algebra, analysis.con[it->second])});
  }
  return out;
}

AlgebraLiftResult lift_all(const FiniteAlgebra& algebra, const Analysis& analysis, Target target) {
  AlgebraLiftResult out;
  for (const auto& theta : analysis.con.elements()) {
    auto r = lift(algebra, analysis, theta, target);
    if (!r.holds) {
      out.holds = false;
      out.failing_congruence = format(algebra, theta);
      out.failing_target = r.failing_target;
      return out;
    }
  }
  return out;
}

NormalityResult normality(const FiniteAlgebra& algebra, const Analysis& an, Target target) {
  const auto& cl = an.con;
  const auto top = cl.index_of_nabla();
  const auto& witnesses = members(an, target);
  NormalityResult out;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t j = 0; j < cl.size(); ++j) {
      const bool triggered = target == Target::factor ? compose(cl[i], cl[j]).is_full()
                                                      : cl.join(i, j) == top;
      if (!triggered) continue;
      std::optional<std::size_t> found;
      for (auto a : witnesses) {
        if (cl.join(i, a) == top && cl.join(j, an.center.neg(a)) == top) {
          found = a;
          break;
        }
      }
      if (!found) {
        out.holds = false;
        out.failing_pair = {format(algebra, cl[i]), format(algebra, cl[j])};
        out.witnesses.clear();
        return out;
      }
      out.witnesses.push_back(
          {format(algebra, cl[i]), format(algebra, cl[j]), format(algebra, cl[*found])});
    }
  }
  return out;
}

}  // namespace

LiftResult has_fclp(const FiniteAlgebra& algebra, const Analysis& analysis, const Congruence& theta) {
  return lift(algebra, analysis, theta, Target::factor);
}

LiftResult has_fclp(const FiniteAlgebra& algebra, const Congruence& theta) {
  return has_fclp(algebra, Analysis(algebra), theta);
}

LiftResult has_cblp(const FiniteAlgebra& algebra, const Analysis& analysis, const Congruence& theta) {
  return lift(algebra, analysis, theta, Target::boolean);
}

LiftResult has_cblp(const FiniteAlgebra& algebra, const Congruence& theta) {
  return has_cblp(algebra, Analysis(algebra), theta);
}

AlgebraLiftResult algebra_fclp(const FiniteAlgebra& algebra, const Analysis& analysis) {
  return lift_all(algebra, analysis, Target::factor);
}

AlgebraLiftResult algebra_fclp(const FiniteAlgebra& algebra) {
  return algebra_fclp(algebra, Analysis(algebra));
}

AlgebraLiftResult algebra_cblp(const FiniteAlgebra& algebra, const Analysis& analysis) {
  return lift_all(algebra, analysis, Target::boolean);
}

AlgebraLiftResult algebra_cblp(const FiniteAlgebra& algebra) {
  return algebra_cblp(algebra, Analysis(algebra));
}

NormalityResult is_fc_normal(const FiniteAlgebra& algebra, const Analysis& analysis) {
  return normality(algebra, analysis, Target::factor);
}

NormalityResult is_fc_normal(const FiniteAlgebra& algebra) {
  return is_fc_normal(algebra, Analysis(algebra));
}

NormalityResult is_b_normal(const FiniteAlgebra& algebra, const Analysis& analysis) {
  return normality(algebra, analysis, Target::boolean);
}

NormalityResult is_b_normal(const FiniteAlgebra& algebra) {
  return is_b_normal(algebra, Analysis(algebra));
}

std::string SpecialCongruenceReport::text() const {
  if (holds()) {
    return "every maximal and prime congruence has FCLP and CBLP" +
           std::string(local ? "; the algebra is local and has both properties" : "");
  }
  std::string s = "implementation bug: a lifting theorem failed for";
  for (const auto& v : violations) s += "\n  " + v;
  return s;
}

SpecialCongruenceReport check_special_congruences(const FiniteAlgebra& algebra) {
  Analysis an(algebra);
  SpecialCongruenceReport out;
  if (algebra.is_trivial()) return out;
  auto check = [&](std::size_t i, const char* what) {
    const auto& theta = an.con[i];
    if (!has_fclp(algebra, an, theta).holds) {
      out.violations.push_back(std::string(what) + " " + format(algebra, theta) + " lacks FCLP");
    }
    if (!has_cblp(algebra, an, theta).holds) {
      out.violations.push_back(std::string(what) + " " + format(algebra, theta) + " lacks CBLP");
    }
  };
  for (auto i : maximal_congruences(an.con)) {
    out.maximal.push_back(format(algebra, an.con[i]));
    check(i, "maximal");
  }
  for (auto i : prime_congruences(an.con)) {
    out.prime.push_back(format(algebra, an.con[i]));
    check(i, "prime");
  }
  out.local = is_local(an.con);
  if (out.local) {
    if (!algebra_fclp(algebra, an).holds) out.violations.push_back("local algebra lacks FCLP");
    if (!algebra_cblp(algebra, an).holds) out.violations.push_back("local algebra lacks CBLP");
  }
  return out;
}

}  // namespace congrlab
