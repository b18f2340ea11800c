#include "congrlab/boolean_factor.hpp"

#include <algorithm>
#include <set>

#include "congrlab/error.hpp"

namespace congrlab {

BooleanCenter boolean_center(const ConLattice& cl) {
  if (!is_congruence_distributive(cl)) {
    throw Error(ErrorKind::NotDistributive, "Con(A) is not distributive; complements may not be unique");
  }
  const auto k = cl.size();
  const auto bot = cl.index_of_delta();
  const auto top = cl.index_of_nabla();
  BooleanCenter out;
  out.complement.assign(k, std::nullopt);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (cl.join(i, j) == top && cl.meet(i, j) == bot) {
        out.complement[i] = j;
        out.members.push_back(i);
        break;
      }
    }
  }
  return out;
}

FactorAlgebra factor_congruences(const ConLattice& cl, const BooleanCenter& center) {
  FactorAlgebra out;
  out.flag.assign(cl.size(), false);
  out.composite.assign(cl.size(), std::nullopt);
  for (auto i : center.members) {
    auto rel = compose(cl[i], cl[center.neg(i)]);
    if (rel.is_full()) {
      out.flag[i] = true;
      out.members.push_back(i);
    }
    out.composite[i] = std::move(rel);
  }
  return out;
}

bool is_factor_pair(const Congruence& phi, const Congruence& psi) {
  return compose(phi, psi).is_full() && meet(phi, psi).is_delta();
}

void require_bounded_sublattice(const ConLattice& cl, std::span<const std::size_t> omega) {
  std::set<std::size_t> in(omega.begin(), omega.end());
  if (!in.contains(cl.index_of_delta()) || !in.contains(cl.index_of_nabla())) {
    throw Error(ErrorKind::NotASublattice, "the family must contain Delta and nabla");
  }
  for (auto i : omega) {
    if (i >= cl.size()) throw Error(ErrorKind::NotASublattice, "index outside Con(A)");
    for (auto j : omega) {
      if (!in.contains(cl.join(i, j)) || !in.contains(cl.meet(i, j))) {
        throw Error(ErrorKind::NotASublattice, "the family is not closed under join and meet");
      }
    }
  }
}

bool crt_characterization(const ConLattice& cl, std::span<const std::size_t> omega) {
  require_bounded_sublattice(cl, omega);
  for (auto a : omega) {
    for (auto b : omega) {
      for (auto c : omega) {
        if (cl.meet(a, cl.join(b, c)) != cl.join(cl.meet(a, b), cl.meet(a, c))) return false;
      }
    }
  }
  for (auto a : omega) {
    for (auto b : omega) {
      if (a < b && !permutes(cl[a], cl[b])) return false;
    }
  }
  return true;
}

CrtResult crt_direct_check(const ConLattice& cl, std::span<const std::size_t> omega,
                           std::size_t k_max) {
  if (k_max > 3) throw Error(ErrorKind::SizeCap, "the direct CRT check is limited to k <= 3");
  const auto n = cl.carrier_size();
  const auto m = omega.size();
  double work = 0;
  for (std::size_t k = 1, tm = m, tn = n; k <= k_max; ++k, tm *= m, tn *= n) {
    work += static_cast<double>(tm) * static_cast<double>(tn);
  }
  if (work > 5e8) throw Error(ErrorKind::SizeCap, "direct CRT check too large");

  // class_bits[t][e] = the block of e in omega[t] as a bitset.
  std::vector<std::vector<boost::dynamic_bitset<>>> class_bits(m);
  for (std::size_t t = 0; t < m; ++t) {
    auto rel = Relation::of(cl[omega[t]].partition());
    for (Element e = 0; e < n; ++e) class_bits[t].push_back(rel.row(e));
  }

  CrtResult result;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<std::size_t> ts(k, 0);
    while (true) {
      std::vector<Element> as(k, 0);
      while (true) {
        bool compatible = true;
        for (std::size_t i = 0; i < k && compatible; ++i) {
          for (std::size_t j = i + 1; j < k && compatible; ++j) {
            const auto joined = cl.join(omega[ts[i]], omega[ts[j]]);
            compatible = cl[joined].related(as[i], as[j]);
          }
        }
        if (compatible) {
          auto common = class_bits[ts[0]][as[0]];
          for (std::size_t i = 1; i < k; ++i) common &= class_bits[ts[i]][as[i]];
          if (common.none()) {
            result.holds = false;
            CrtWitness w;
            for (auto t : ts) w.thetas.push_back(omega[t]);
            w.elements = as;
            result.witness = std::move(w);
            return result;
          }
        }
        std::size_t i = k;
        while (i > 0 && ++as[i - 1] == n) as[--i] = 0;
        if (i == 0) break;
      }
      std::size_t i = k;
      while (i > 0 && ++ts[i - 1] == m) ts[--i] = 0;
      if (i == 0) break;
    }
  }
  return result;
}

Congruence product_congruence(const FiniteAlgebra& product, const ProductEncoding& encoding,
                              std::span<const Congruence> parts) {
  if (encoding.size() != product.size() || parts.size() != encoding.radices().size()) {
    throw Error(ErrorKind::EncodingMismatch, "the parts do not match the product encoding");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != encoding.radices()[i]) {
      throw Error(ErrorKind::EncodingMismatch,
                  "factor " + std::to_string(i + 1) + " has the wrong carrier size");
    }
  }
  std::vector<std::size_t> cls(product.size());
  std::vector<Element> tuple(parts.size());
  for (Element e = 0; e < product.size(); ++e) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      tuple[i] = parts[i].block_of(encoding.component(e, i));
    }
    cls[e] = encoding.encode(tuple);
  }
  return {Partition::from_class_ids(cls), product.fingerprint()};
}

ProductConReport product_con_iso_check(std::span<const FiniteAlgebra> factors) {
  auto product = direct_product(factors);
  std::vector<std::size_t> radices;
  for (const auto& f : factors) radices.push_back(f.size());
  ProductEncoding encoding(radices);

  auto cl = all_congruences(product);
  auto center = boolean_center(cl);
  auto fc = factor_congruences(cl, center);

  std::vector<ConLattice> cls;
  std::vector<BooleanCenter> centers;
  std::vector<FactorAlgebra> fcs;
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) {
    cls.push_back(all_congruences(f));
    centers.push_back(boolean_center(cls.back()));
    fcs.push_back(factor_congruences(cls.back(), centers.back()));
    sizes.push_back(cls.back().size());
  }
  ProductEncoding tuples(sizes);

  ProductConReport report;
  report.con_size = cl.size();
  report.boolean_size = center.size();
  report.fc_size = fc.size();

  // image[t] = index in Con(prod) of the product congruence of tuple t.
  std::vector<std::optional<std::size_t>> image(tuples.size());
  std::set<std::size_t> hit;
  std::vector<Congruence> parts(factors.size());
  for (Element t = 0; t < tuples.size(); ++t) {
    for (std::size_t i = 0; i < factors.size(); ++i) parts[i] = cls[i][tuples.component(t, i)];
    image[t] = cl.index_of(product_congruence(product, encoding, parts));
    if (image[t]) hit.insert(*image[t]);
  }
  report.bijective = std::all_of(image.begin(), image.end(), [](auto& v) { return v.has_value(); }) &&
                     hit.size() == tuples.size() && hit.size() == cl.size();
  if (!report.bijective) return report;

  report.preserves_operations = *image[0] == cl.index_of_delta() &&
                                *image[tuples.size() - 1] == cl.index_of_nabla();
  std::vector<Element> jt(factors.size()), mt(factors.size());
  for (Element s = 0; s < tuples.size() && report.preserves_operations; ++s) {
    for (Element t = 0; t < tuples.size(); ++t) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        jt[i] = static_cast<Element>(
            cls[i].join(tuples.component(s, i), tuples.component(t, i)));
        mt[i] = static_cast<Element>(
            cls[i].meet(tuples.component(s, i), tuples.component(t, i)));
      }
      if (*image[tuples.encode(jt)] != cl.join(*image[s], *image[t]) ||
          *image[tuples.encode(mt)] != cl.meet(*image[s], *image[t])) {
        report.preserves_operations = false;
        break;
      }
    }
  }

  auto restricts = [&](auto in_factor, auto in_product, std::size_t product_count) {
    std::size_t count = 0;
    for (Element t = 0; t < tuples.size(); ++t) {
      bool all = true;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        all = all && in_factor(i, tuples.component(t, i));
      }
      if (all != in_product(*image[t])) return false;
      count += all ? 1 : 0;
    }
    return count == product_count;
  };
  report.boolean_bijective = restricts(
      [&](std::size_t i, std::size_t x) { return centers[i].contains(x); },
      [&](std::size_t x) { return center.contains(x); }, center.size());
  report.fc_bijective = restricts([&](std::size_t i, std::size_t x) { return fcs[i].contains(x); },
                                  [&](std::size_t x) { return fc.contains(x); }, fc.size());
  return report;
}

Congruence osum_congruence(const FiniteAlgebra& sum, const OrdinalSumLayout& layout,
                           const Congruence& phi, const Congruence& psi) {
  const auto nl = layout.from_lower.size();
  const auto nu = layout.from_upper.size();
  if (phi.size() != nl || psi.size() != nu || sum.size() + 1 != nl + nu) {
    throw Error(ErrorKind::KindError, "congruences do not match the ordinal sum");
  }
  // The lower summand keeps its indices, so the glued element is the only
  // upper element sent below nl.
  Element shared_upper = 0;
  for (Element e = 0; e < nu; ++e) {
    if (layout.from_upper[e] < nl) shared_upper = e;
  }
  const Element shared_lower = layout.from_upper[shared_upper];
  std::vector<std::size_t> cls(sum.size());
  for (Element e = 0; e < nl; ++e) cls[layout.from_lower[e]] = phi.block_of(e);
  for (Element e = 0; e < nu; ++e) {
    if (psi.related(e, shared_upper)) {
      cls[layout.from_upper[e]] = phi.block_of(shared_lower);
    } else {
      cls[layout.from_upper[e]] = nl + psi.block_of(e);
    }
  }
  return {Partition::from_class_ids(cls), sum.fingerprint()};
}

Congruence osum_congruence(const FiniteAlgebra& lower, const FiniteAlgebra& upper,
                           const Congruence& phi, const Congruence& psi) {
  if (phi.parent() != lower.fingerprint() || psi.parent() != upper.fingerprint()) {
    throw Error(ErrorKind::ParentMismatch, "congruences do not belong to the summands");
  }
  return osum_congruence(ordinal_sum(lower, upper), ordinal_sum_layout(lower, upper), phi, psi);
}

OsumConReport osum_con_iso_check(const FiniteAlgebra& lower, const FiniteAlgebra& upper) {
  if (!lower.is_lattice() || !upper.is_lattice()) {
    throw Error(ErrorKind::KindError, "ordinal sums need lattices");
  }
  auto sum = ordinal_sum(lower, upper);
  auto layout = ordinal_sum_layout(lower, upper);
  auto cl = all_congruences(sum);
  auto cl_lower = all_congruences(lower);
  auto cl_upper = all_congruences(upper);
  auto center = boolean_center(cl);
  auto b_lower = boolean_center(cl_lower);
  auto b_upper = boolean_center(cl_upper);
  auto fc = factor_congruences(cl, center);
  auto fc_lower = factor_congruences(cl_lower, b_lower);
  auto fc_upper = factor_congruences(cl_upper, b_upper);

  OsumConReport report;
  report.con_size = cl.size();
  std::set<std::size_t> image;
  std::set<std::size_t> boolean_image;
  std::set<std::size_t> fc_image;
  bool all_found = true;
  for (std::size_t i = 0; i < cl_lower.size(); ++i) {
    for (std::size_t j = 0; j < cl_upper.size(); ++j) {
      auto idx = cl.index_of(osum_congruence(sum, layout, cl_lower[i], cl_upper[j]));
      if (!idx) {
        all_found = false;
        continue;
      }
      image.insert(*idx);
      if (b_lower.contains(i) && b_upper.contains(j)) boolean_image.insert(*idx);
      if (fc_lower.contains(i) && fc_upper.contains(j)) fc_image.insert(*idx);
    }
  }
  report.bijective = all_found && image.size() == cl.size() &&
                     image.size() == cl_lower.size() * cl_upper.size();
  report.boolean_transports = boolean_image == std::set<std::size_t>(center.members.begin(),
                                                                      center.members.end());
  report.fc_transports =
      fc_image == std::set<std::size_t>(fc.members.begin(), fc.members.end());
  for (auto i : fc.members) report.fc_of_sum.push_back(format(sum, cl[i]));
  for (auto i : fc_image) report.fc_transported.push_back(format(sum, cl[i]));
  return report;
}

BdlFcIsomorphism bdl_fc_isomorphism(const FiniteAlgebra& lattice) {
  if (!lattice.is_lattice() || lattice.kind() < AlgebraKind::bounded_lattice) {
    throw Error(ErrorKind::KindError, "a bounded lattice is required");
  }
  const auto n = lattice.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (lattice.meet(a, lattice.join(b, c)) !=
            lattice.join(lattice.meet(a, b), lattice.meet(a, c))) {
          throw Error(ErrorKind::NotDistributive,
                      "distributivity fails at (" + lattice.label(a) + "," + lattice.label(b) +
                          "," + lattice.label(c) + ")");
        }
      }
    }
  }
  const auto bot = lattice.bottom();
  const auto top = lattice.top();
  std::vector<std::optional<Element>> neg(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (lattice.join(a, b) == top && lattice.meet(a, b) == bot) neg[a] = b;
    }
  }
  auto cl = all_congruences(lattice);
  auto fc = factor_congruences(cl);
  BdlFcIsomorphism out;
  std::vector<std::optional<std::size_t>> f(n);
  for (Element a = 0; a < n; ++a) {
    if (!neg[a]) continue;
    f[a] = cl.require_index(principal_congruence(lattice, a, bot));
    out.map.emplace_back(a, *f[a]);
  }
  std::set<std::size_t> image;
  bool ok = true;
  for (auto [a, i] : out.map) {
    ok = ok && fc.contains(i);
    image.insert(i);
  }
  ok = ok && image.size() == out.map.size() && image.size() == fc.size();
  ok = ok && f[bot] == cl.index_of_delta() && f[top] == cl.index_of_nabla();
  auto center = boolean_center(cl);
  for (auto [a, i] : out.map) {
    ok = ok && center.contains(i) && f[*neg[a]] == center.neg(i);
    for (auto [b, j] : out.map) {
      const auto ab_join = lattice.join(a, b);
      const auto ab_meet = lattice.meet(a, b);
      ok = ok && f[ab_join] && f[ab_meet] && *f[ab_join] == cl.join(i, j) &&
           *f[ab_meet] == cl.meet(i, j);
    }
  }
  out.verified = ok;
  return out;
}

Factorization factorize(const FiniteAlgebra& algebra, std::span<const Congruence> alphas) {
  if (alphas.empty()) throw Error(ErrorKind::PreconditionFailed, "no congruences given");
  auto cl = all_congruences(algebra);
  auto fc = factor_congruences(cl);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    auto idx = cl.index_of(alphas[i]);
    if (!idx || !fc.contains(*idx)) {
      throw Error(ErrorKind::PreconditionFailed,
                  "alpha" + std::to_string(i + 1) + " = " + format(algebra, alphas[i]) +
                      " is not a factor congruence");
    }
  }
  auto common = alphas[0];
  for (std::size_t i = 1; i < alphas.size(); ++i) common = meet(common, alphas[i]);
  if (!common.is_delta()) {
    throw Error(ErrorKind::PreconditionFailed,
                "the intersection of the congruences is " + format(algebra, common) +
                    ", not Delta");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      if (!join(alphas[i], alphas[j]).is_nabla()) {
        throw Error(ErrorKind::PreconditionFailed, "alpha" + std::to_string(i + 1) + " v alpha" +
                                                       std::to_string(j + 1) + " is not nabla");
      }
    }
  }

  Factorization out;
  std::vector<std::size_t> radices;
  for (const auto& alpha : alphas) {
    out.factors.push_back(quotient(algebra, alpha));
    radices.push_back(out.factors.back().quotient.size());
  }
  ProductEncoding encoding(radices);
  const auto n = algebra.size();
  std::vector<Element> image(n);
  std::vector<Element> tuple(alphas.size());
  std::set<Element> distinct;
  for (Element a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < alphas.size(); ++i) tuple[i] = out.factors[i].projection[a];
    image[a] = encoding.encode(tuple);
    distinct.insert(image[a]);
  }
  out.bijective = distinct.size() == n && encoding.size() == n;

  out.homomorphism = true;
  const auto& sig = algebra.signature();
  for (std::size_t op = 0; op < sig.size() && out.homomorphism; ++op) {
    const auto arity = sig[op].arity;
    std::size_t cells = 1;
    for (std::size_t i = 0; i < arity; ++i) cells *= n;
    std::vector<Element> args(arity), qargs(arity);
    for (std::size_t cell = 0; cell < cells && out.homomorphism; ++cell) {
      auto rest = cell;
      for (std::size_t i = arity; i-- > 0;) {
        args[i] = static_cast<Element>(rest % n);
        rest /= n;
      }
      const auto value = algebra.table(op)(args);
      for (std::size_t f = 0; f < alphas.size(); ++f) {
        const auto& q = out.factors[f];
        for (std::size_t i = 0; i < arity; ++i) qargs[i] = q.projection[args[i]];
        if (q.quotient.table(op)(qargs) != encoding.component(image[value], f)) {
          out.homomorphism = false;
        }
      }
    }
  }
  return out;
}

}  // namespace congrlab
