#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gwb/graded/presentation.hpp"
#include "gwb/graded/resolution.hpp"
#include "gwb/hilbert/functional.hpp"
#include "gwb/hypersurface/factorization.hpp"
#include "gwb/localcoh/checks.hpp"
#include "gwb/localcoh/duality.hpp"
#include "gwb/modrep/squeezed.hpp"
#include "gwb/presets/catalog.hpp"

namespace gwb {

/// One named check: what was seen and whether it matched the expectation.
struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PresetReport {
  std::string preset;
  std::vector<Assertion> assertions;
  /// Tables computed along the way, for rendering.
  std::vector<CohomologyTable> tables;
  std::vector<std::size_t> betti;
  std::vector<std::size_t> homology;

  bool passed() const {
    for (const auto& a : assertions)
      if (!a.passed) return false;
    return true;
  }
  const Assertion* find(const std::string& name) const {
    for (const auto& a : assertions)
      if (a.name == name) return &a;
    return nullptr;
  }
  void add(std::string name, bool ok, std::string detail = {}) { assertions.push_back({std::move(name), ok, std::move(detail)}); }
};

/// Calls fn with a field object of the right type.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rationals) return fn(Rationals{});
  return fn(FiniteField(spec));
}

inline std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

namespace detail {

inline void series_checks(const Preset& p, PresetReport& rep) {
  const Series s = parse_series(p.series);
  const DualityParams d{p.krull_dim, p.shift};
  const bool eq = check_cm_functional_equation(s, d);
  rep.add("functional-eq-cm", eq == p.cm_equation,
          std::string("equation ") + (eq ? "holds" : "fails") + ", expected to " + (p.cm_equation ? "hold" : "fail"));
  if (p.cm == CmClass::almost_cm) {
    const auto r = solve_almost_cm(s, d);
    bool ok = r.ok();
    std::string detail = r.ok() ? "q = " + r.q->to_factored_string() : r.message;
    if (ok && !p.almost_cm_q.empty() && !(*r.q == parse_series(p.almost_cm_q))) {
      ok = false;
      detail += ", expected q = " + p.almost_cm_q;
    }
    rep.add("almost-cm", ok, detail);
  }
}

template <ExactField F>
std::vector<Poly<F>> parse_all(const RingPresentation<F>& R, const std::vector<std::string>& v) {
  std::vector<Poly<F>> out;
  for (const auto& s : v) out.push_back(R.parse(s));
  return out;
}

template <ExactField F>
void ring_checks(const Preset& p, F field, PresetReport& rep) {
  const auto& rp = *p.ring;
  auto R = make_ring(field, rp.vars, rp.relations, rp.strictly_commutative);
  const Series s = parse_series(p.series);
  if (!p.series_only) {
    const auto prefix = hilbert_prefix(*R.ring, 24);
    rep.add("hilbert-prefix", compare_series(prefix, s), "dims on [0, 24]: " + join(prefix));
  }
  if (p.has_cohomology()) {
    ModulePtr<F> M = R.ring;
    if (p.module) M = make_module(R, p.module->gens, p.module->rels);
    const CechOptions opt{p.window_min, p.window_max, 16};
    auto T = local_cohomology_cech(M, parse_all(R, p.ideal), opt);
    rep.add("cech-certified", T.all_exact(), T.all_exact() ? "all cells exact" : "some cells uncertified or clipped");
    const auto r = static_cast<std::size_t>(p.table_dim.value_or(p.krull_dim));
    const auto e = static_cast<std::size_t>(p.table_depth.value_or(p.depth));
    const auto van = grothendieck_vanishing_check(T, r, e);
    rep.add("grothendieck-vanishing", van.ok, van.ok ? "dimension " + std::to_string(r) + ", depth " + std::to_string(e) : van.violations.front());
    for (const auto& f : p.facts) {
      bool ok = T.support(f.index) == f.codegrees;
      for (long n : f.codegrees) ok = ok && T.dim(f.index, n) == f.dim;
      rep.add("support-H" + std::to_string(f.index), ok,
              "H^" + std::to_string(f.index) + " nonzero at codegrees " + join(T.support(f.index)) + ", expected " + join(f.codegrees));
    }
    if (p.normalization) {
      const auto& nz = *p.normalization;
      // a module preset lives over its normalization already
      ModulePtr<F> onP = M;
      if (!p.module)
        onP = std::make_shared<const RestrictedModule<F>>(M, std::make_shared<const PolyRing<F>>(field, nz.vars), parse_all(R, nz.images));
      auto D = local_cohomology_duality(onP, {p.window_min, p.window_max, 0});
      bool same = D.all_exact() && T.all_exact();
      std::string where;
      const std::size_t m = std::max(T.indices(), D.indices());
      for (std::size_t i = 0; i < m && same; ++i)
        for (long n = p.window_min; n <= p.window_max && same; ++n)
          if (T.dim(i, n) != D.dim(i, n)) {
            same = false;
            where = "differ at H^" + std::to_string(i) + " codegree " + std::to_string(n);
          }
      if (!D.all_exact()) where = "duality table not certified";
      rep.add("cech-matches-duality", same, same ? "agree on every cell" : where);
      rep.tables.push_back(std::move(D));
    }
    if (!p.module) {
      const auto g = gorenstein_duality_check(*R.ring, T, static_cast<std::size_t>(p.krull_dim), p.shift, s, p.cm == CmClass::cm);
      std::string detail = g.ok ? "pass" : "";
      for (const auto* c : {&g.concentration, &g.dual, &g.euler})
        if (!c->ok && p.cm == CmClass::cm) detail += c->violations.front() + "; ";
      if (!g.euler.ok && detail.empty()) detail = g.euler.violations.front();
      rep.add(p.cm == CmClass::cm ? "gorenstein-duality" : "local-euler-characteristic", g.ok, detail);
    }
    if (p.balance) {
      bool ok = true;
      std::string bad;
      for (long n = p.window_min; n < p.window_max; ++n)
        if (T.dim(1, n) + T.dim(0, n + 1) != R.ring->dim(*p.balance - n)) {
          ok = false;
          bad = "fails at codegree " + std::to_string(n);
          break;
        }
      rep.add("duality-balance", ok, ok ? "H^1(n) + H^0(n+1) = R^(" + std::to_string(*p.balance) + "-n)" : bad);
    }
    if (!p.radical_ideal.empty()) {
      auto ri = radical_invariance_check(M, parse_all(R, p.ideal), parse_all(R, p.radical_ideal), opt);
      rep.add("radical-invariance", ri.equal, ri.equal ? "identical tables" : "tables differ");
    }
    rep.tables.insert(rep.tables.begin(), std::move(T));
  }
  if (p.hypersurface_equation) {
    auto S = make_ring(field, rp.vars, {}, rp.strictly_commutative);
    Hypersurface<F> h(S.poly, S.parse(*p.hypersurface_equation));
    ModulePtr<F> kq = std::make_shared<const PresentedModule<F>>(h.quotient(), std::vector<long>{0}, [&] {
      std::vector<std::vector<Poly<F>>> cols;
      for (const auto& v : rp.vars) cols.push_back({S.parse(v.name)});
      return cols;
    }());
    const auto per = gulliksen_periodicity_check(h, kq, 12);
    rep.betti = per.betti;
    const auto growth = ext_growth_class(per.betti);
    rep.add("betti-bounded", growth.kind == GrowthClass::Kind::bounded, "Betti numbers of k: " + join(per.betti) + ", growth " + growth.to_string());
    rep.add("betti-period-2", per.periodic == Verdict::yes,
            "operator codegree " + std::to_string(per.operator_codegree) + (per.onset ? ", onset " + std::to_string(*per.onset) : ""));
  }
}

inline void group_checks(const Preset& p, PresetReport& rep) {
  const auto& g = *p.group;
  auto G = std::make_shared<const GroupTable>(builtin_group(g.name));
  GroupAlgebra A(G, FiniteField(FieldSpec::from_char(g.characteristic, g.field_degree)));
  const auto r = squeezed_resolution(A, p.squeezed_steps);
  rep.homology = r.homology;
  rep.add("squeezed-complex", r.is_complex, "consecutive composites vanish");
  bool covers = true, towers = true;
  for (std::size_t i = 0; i < r.stages.size(); ++i) {
    covers = covers && r.stages[i].cover_surjective && r.stages[i].cover_minimal;
    if (i + 1 < r.stages.size()) towers = towers && r.stages[i].tower.hom_vanishes && r.stages[i].tower.layers_trivial;
  }
  rep.add("projective-covers-minimal", covers, "dims " + join(r.dims()));
  rep.add("coradical-certificates", towers, "Hom(M_i, k) = 0 and trivial layers");
  if (p.squeezed_homology)
    rep.add("squeezed-homology", r.homology == *p.squeezed_homology, "dims " + join(r.homology) + ", expected " + join(*p.squeezed_homology));
}

}  // namespace detail

inline PresetReport preset_run(const Preset& p) {
  PresetReport rep;
  rep.preset = p.name;
  if (!p.series.empty()) detail::series_checks(p, rep);
  if (p.ring) with_field(p.ring->field, [&](auto f) { detail::ring_checks(p, f, rep); });
  if (p.group) detail::group_checks(p, rep);
  return rep;
}

inline PresetReport preset_run(const std::string& name) { return preset_run(find_preset(name)); }

}  // namespace gwb
