#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwb/error.hpp"
#include "gwb/graded/ring.hpp"
#include "gwb/scalars/field.hpp"

namespace gwb {

/// A ring presentation as plain data, before a field type is chosen.
struct RingPayload {
  FieldSpec field = FieldSpec::prime(2);
  std::vector<Variable> vars;
  std::vector<std::string> relations;
  /// Odd-codegree variables commute instead of anticommuting (matters only
  /// in odd characteristic).
  bool strictly_commutative = false;
};

/// Cokernel of a presentation matrix, relation columns as strings.
struct ModulePayload {
  std::vector<long> gens;
  std::vector<std::vector<std::string>> rels;
};

/// A polynomial subring over which the ring (or module) is finite:
/// variables and their images.
struct Normalization {
  std::vector<Variable> vars;
  std::vector<std::string> images;
};

struct GroupPayload {
  std::string name;
  std::uint64_t characteristic = 2;
  unsigned field_degree = 1;
};

enum class CmClass { cm, almost_cm, neither };

inline std::string to_string(CmClass c) {
  switch (c) {
    case CmClass::cm: return "CM";
    case CmClass::almost_cm: return "almost-CM";
    case CmClass::neither: return "neither";
  }
  return "neither";
}

/// H^index is nonzero exactly at these codegrees of the window, with the
/// given dimension.
struct SupportFact {
  std::size_t index = 0;
  std::vector<long> codegrees;
  std::size_t dim = 1;
};

struct Preset {
  std::string name;
  std::string description;

  std::optional<RingPayload> ring;
  /// When present the cohomology is computed for this module over the ring
  /// instead of the ring itself.
  std::optional<ModulePayload> module;
  std::optional<GroupPayload> group;

  std::string series;
  /// The ring payload is only the base of the module; the series is not
  /// checked against a presentation.
  bool series_only = false;
  long krull_dim = 0;
  long depth = 0;
  long shift = 0;
  CmClass cm = CmClass::neither;
  /// Whether p(1/t) = (-1)^r t^(r+a) p(t) is expected to hold.
  bool cm_equation = false;
  /// Expected q for almost-CM presets.
  std::string almost_cm_q;

  std::vector<std::string> ideal;
  /// Second ideal with the same radical, for radical invariance.
  std::vector<std::string> radical_ideal;
  std::optional<Normalization> normalization;
  long window_min = -16;
  long window_max = 16;
  /// Dimension and depth of the object whose table is computed, when that
  /// object is a module rather than the ring.
  std::optional<long> table_dim;
  std::optional<long> table_depth;
  std::vector<SupportFact> facts;
  /// H^1(n) + H^0(n+1) = R^(c-n) for rings of depth 0 and dimension 1.
  std::optional<long> balance;

  /// Betti numbers of k bounded, with the ring a hypersurface P/(f).
  std::optional<std::string> hypersurface_equation;

  std::optional<std::vector<std::size_t>> squeezed_homology;
  std::size_t squeezed_steps = 6;

  bool has_cohomology() const { return ring && !ideal.empty(); }
};

namespace detail {

inline Preset polynomial_preset(std::size_t r) {
  Preset p;
  p.name = "c2r" + std::to_string(r);
  p.description = "cohomology of (C_2)^" + std::to_string(r) + ": polynomial ring on " + std::to_string(r) + " variables";
  RingPayload R;
  Normalization N;
  for (std::size_t i = 1; i <= r; ++i) {
    const std::string x = "x" + std::to_string(i);
    R.vars.push_back({x, 1});
    N.vars.push_back({x, 1});
    N.images.push_back(x);
    p.ideal.push_back(x);
  }
  p.ring = R;
  p.normalization = N;
  p.series = "1/(1-t)^" + std::to_string(r);
  p.krull_dim = p.depth = static_cast<long>(r);
  p.cm = CmClass::cm;
  p.cm_equation = true;
  if (r == 4) {
    // colimit stages grow like n^3 here; a narrower window keeps runs short
    p.window_min = -8;
    p.window_max = 4;
  }
  return p;
}

inline Preset group_preset(const std::string& g, std::uint64_t p, unsigned k, std::optional<std::vector<std::size_t>> homology,
                           std::string description) {
  Preset s;
  s.name = g + "_squeezed";
  s.description = std::move(description);
  s.group = GroupPayload{g, p, k};
  s.squeezed_homology = std::move(homology);
  return s;
}

inline std::vector<Preset> build_catalog() {
  std::vector<Preset> out;
  for (std::size_t r = 1; r <= 4; ++r) out.push_back(polynomial_preset(r));

  {
    Preset p;
    p.name = "q8";
    p.description = "quaternion group of order 8: k[x,y]/(x^3, x^2+xy+y^2, y^3) tensor k[z], |z| = 4";
    p.ring = RingPayload{FieldSpec::prime(2), {{"x", 1}, {"y", 1}, {"z", 4}}, {"x^3", "x^2+x*y+y^2", "y^3"}};
    p.series = "(1+2*t+2*t^2+t^3)/(1-t^4)";
    p.krull_dim = p.depth = 1;
    p.cm = CmClass::cm;
    p.cm_equation = true;
    p.ideal = {"z"};
    p.normalization = Normalization{{{"z", 4}}, {"z"}};
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "d8";
    p.description = "dihedral group of order 8: k[x,y,z]/(xy), |x| = |y| = 1, |z| = 2";
    p.ring = RingPayload{FieldSpec::prime(2), {{"x", 1}, {"y", 1}, {"z", 2}}, {"x*y"}};
    p.series = "1/(1-t)^2";
    p.krull_dim = p.depth = 2;
    p.cm = CmClass::cm;
    p.cm_equation = true;
    p.ideal = {"x+y", "z"};
    p.normalization = Normalization{{{"w", 1}, {"z", 2}}, {"x+y", "z"}};
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "sd16";
    p.description = "semidihedral group of order 16: k[x,y,z,t]/(xy, x^3, xz, z^2+ty^2)";
    p.ring = RingPayload{FieldSpec::prime(2), {{"x", 1}, {"y", 1}, {"z", 3}, {"t", 4}}, {"x*y", "x^3", "x*z", "z^2+t*y^2"}};
    p.series = "1/((1-t)^2*(1+t^2))";
    p.krull_dim = 2;
    p.depth = 1;
    p.cm = CmClass::almost_cm;
    p.almost_cm_q = "t^2/((1-t)*(1+t^2))";
    p.ideal = {"y", "t"};
    p.normalization = Normalization{{{"y", 1}, {"t", 4}}, {"y", "t"}};
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "g32n7";
    p.description = "group 32#7: Hilbert series only, with the summand N = Sigma_1 P/(x,z) over P = k[z,x,s]";
    p.ring = RingPayload{FieldSpec::prime(2), {{"z", 1}, {"x", 2}, {"s", 4}}, {}};
    p.module = ModulePayload{{1}, {{"x"}, {"z"}}};
    p.series_only = true;
    p.series = "(1-t+t^2)/((1-t)^3*(1+t^2))";
    p.krull_dim = 3;
    p.depth = 1;
    p.cm = CmClass::neither;
    p.cm_equation = true;
    p.ideal = {"z", "x", "s"};
    p.normalization = Normalization{{{"z", 1}, {"x", 2}, {"s", 4}}, {"z", "x", "s"}};
    p.table_dim = 1;
    p.table_depth = 1;
    p.facts = {{1, {-15, -11, -7, -3}, 1}, {0, {}, 1}};
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "rational_x";
    p.description = "rational space: Q[u,v,p]/(u^2, uv, up, p^2), |u| = |v| = 2, |p| = 5";
    p.ring = RingPayload{FieldSpec::rationals(), {{"u", 2}, {"v", 2}, {"p", 5}}, {"u^2", "u*v", "u*p", "p^2"}};
    p.series = "(1+t^5)/(1-t^2)+t^2";
    p.krull_dim = 1;
    p.depth = 0;
    p.shift = -4;
    p.cm = CmClass::almost_cm;
    p.almost_cm_q = "t^-2";
    p.ideal = {"v"};
    p.radical_ideal = {"u", "v", "p"};
    p.normalization = Normalization{{{"v", 2}}, {"v"}};
    p.window_min = -12;
    p.window_max = 12;
    p.facts = {{0, {2}, 1}};
    p.balance = 3;
    out.push_back(p);
  }
  {
    Preset p;
    p.name = "a4_ring";
    p.description = "cohomology of A_4 at p = 2: k[x,y,z]/(x^3+y^2+yz+z^2), |x| = 2, |y| = |z| = 3";
    p.ring = RingPayload{FieldSpec::prime(2), {{"x", 2}, {"y", 3}, {"z", 3}}, {"x^3+y^2+y*z+z^2"}};
    p.series = "(1+t^3)/((1-t^2)*(1-t^3))";
    p.krull_dim = p.depth = 2;
    p.cm = CmClass::cm;
    p.cm_equation = true;
    p.hypersurface_equation = "x^3+y^2+y*z+z^2";
    out.push_back(p);
  }

  out.push_back(group_preset("a4", 2, 2, std::vector<std::size_t>{1, 1, 2, 2, 2, 2, 2}, "squeezed resolution of A_4 over F_4"));
  for (const auto& [g, n] : std::vector<std::pair<std::string, std::size_t>>{{"c2", 2}, {"c4", 4}, {"v4", 4}, {"q8", 8}, {"d8", 8}}) {
    std::vector<std::size_t> h(7, 0);
    h[0] = n;
    out.push_back(group_preset(g, 2, 1, h, "squeezed resolution of the 2-group " + g + " over F_2"));
  }
  // the stage dimensions grow exponentially here, so keep the run short
  auto levi = group_preset("c3c3c2", 3, 1, std::nullopt, "experimental: (C_3)^2 : C_2 at p = 3, certificates only");
  levi.squeezed_steps = 2;
  out.push_back(levi);
  return out;
}

}  // namespace detail

inline const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> c = detail::build_catalog();
  return c;
}

inline const Preset& find_preset(const std::string& name) {
  for (const auto& p : preset_catalog())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : preset_catalog()) known += (known.empty() ? "" : ", ") + p.name;
  throw InputError("unknown preset '" + name + "' (known: " + known + ")");
}

}  // namespace gwb
