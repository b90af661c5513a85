#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gwb/graded/module.hpp"
#include "gwb/workbench/parser.hpp"

namespace gwb {

/// A graded ring P/I given by variables and relation strings.
template <ExactField F>
struct RingPresentation {
  std::shared_ptr<const PolyRing<F>> poly;
  std::vector<Poly<F>> relations;
  std::shared_ptr<const QuotientRing<F>> ring;

  Poly<F> parse(const std::string& s, bool require_homogeneous = true) const {
    return parse_poly<F>(s, poly, require_homogeneous);
  }
  const F& field() const { return poly->field(); }
};

template <ExactField F>
RingPresentation<F> make_ring(F field, std::vector<Variable> vars, const std::vector<std::string>& relations,
                              bool strictly_commutative = false) {
  RingPresentation<F> r;
  r.poly = std::make_shared<const PolyRing<F>>(std::move(field), std::move(vars), strictly_commutative);
  for (const auto& s : relations) {
    auto p = parse_poly<F>(s, r.poly, true);
    if (p.is_zero()) continue;
    r.relations.push_back(std::move(p));
  }
  r.ring = std::make_shared<const QuotientRing<F>>(r.poly, r.relations);
  return r;
}

/// Cokernel of a presentation matrix given column by column as strings.
template <ExactField F>
std::shared_ptr<const PresentedModule<F>> make_module(const RingPresentation<F>& ring, std::vector<long> gens,
                                                      const std::vector<std::vector<std::string>>& rels) {
  std::vector<std::vector<Poly<F>>> cols;
  for (const auto& c : rels) {
    if (c.size() != gens.size()) throw InputError("each relation column needs one entry per generator");
    std::vector<Poly<F>> col;
    for (const auto& s : c) col.push_back(ring.parse(s));
    cols.push_back(std::move(col));
  }
  return std::make_shared<const PresentedModule<F>>(ring.ring, std::move(gens), std::move(cols));
}

}  // namespace gwb
