#include "orbimod/cli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "orbimod/core.hpp"
#include "orbimod/errors.hpp"
#include "orbimod/morse.hpp"
#include "orbimod/ranktwo.hpp"
#include "orbimod/reps.hpp"
#include "orbimod/selfcheck.hpp"
#include "orbimod/spectral.hpp"

namespace orbimod {

using json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kMaxGenus = 10000;
constexpr std::int64_t kMaxPoints = 1000;
constexpr std::int64_t kMaxAbsInteger = 1'000'000'000'000;

// --- validation helpers -----------------------------------------------------

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw SchemaError(path, "expected an object");
  return v;
}

void allow_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw SchemaError(join(path, key), "unknown field");
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(join(path, key), "required field missing");
  return *it;
}

const json* optional_member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t get_int(const json& v, const std::string& path, std::int64_t lo = -kMaxAbsInteger,
                     std::int64_t hi = kMaxAbsInteger) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) {
    throw SchemaError(path, "must be at most " + std::to_string(hi));
  }
  const auto value = v.get<std::int64_t>();
  if (value < lo) throw SchemaError(path, "must be at least " + std::to_string(lo));
  if (value > hi) throw SchemaError(path, "must be at most " + std::to_string(hi));
  return value;
}

const json& require_array(const json& v, const std::string& path, bool non_empty = false) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  if (non_empty && v.empty()) throw SchemaError(path, "must not be empty");
  if (v.size() > static_cast<std::size_t>(kMaxPoints)) throw SchemaError(path, "too many entries");
  return v;
}

Rational get_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(get_int(v, path));
  if (!v.is_string()) throw SchemaError(path, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& ex) {
    throw SchemaError(path, ex.what());
  }
}

int get_alpha(const json& v, const std::string& path) {
  return static_cast<int>(get_int(v, path, 2, OrbifoldSurface::kMaxOrderLcm));
}

// --- documents ----------------------------------------------------------------

struct SurfaceDoc {
  int genus = 0;
  std::vector<int> alphas;
};

struct BundleDoc {
  int genus = 0;
  std::vector<int> alphas;
  std::vector<IsotropyPair> pairs;
  std::int64_t l = 0;
};

int get_genus(const json& obj, const std::string& path) {
  return static_cast<int>(get_int(member(obj, "genus", path), join(path, "genus"), 0, kMaxGenus));
}

SurfaceDoc read_surface(const json& obj, const std::string& path) {
  SurfaceDoc doc;
  doc.genus = get_genus(obj, path);
  const std::string apath = join(path, "alphas");
  const json& alphas = require_array(member(obj, "alphas", path), apath, true);
  for (std::size_t i = 0; i < alphas.size(); ++i) doc.alphas.push_back(get_alpha(alphas[i], at(apath, i)));
  return doc;
}

BundleDoc read_bundle(const json& obj, const std::string& path) {
  BundleDoc doc;
  doc.genus = get_genus(obj, path);
  const std::string cpath = join(path, "cone_points");
  const json& points = require_array(member(obj, "cone_points", path), cpath, true);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string p = at(cpath, i);
    const json& point = require_object(points[i], p);
    allow_keys(point, {"alpha", "x", "x_prime"}, p);
    const int alpha = get_alpha(member(point, "alpha", p), join(p, "alpha"));
    const auto x = static_cast<int>(get_int(member(point, "x", p), join(p, "x"), 0, alpha - 1));
    const auto xp = static_cast<int>(get_int(member(point, "x_prime", p), join(p, "x_prime"), 0, alpha - 1));
    if (x > xp) throw SchemaError(join(p, "x"), "must satisfy x <= x_prime");
    doc.alphas.push_back(alpha);
    doc.pairs.push_back({x, xp});
  }
  doc.l = get_int(member(obj, "l", path), join(path, "l"));
  return doc;
}

struct LineDoc {
  std::int64_t b = 0;
  std::vector<int> y;
};

LineDoc read_line(const json& v, const std::string& path, const std::vector<int>& alphas) {
  const json& obj = require_object(v, path);
  allow_keys(obj, {"b", "y"}, path);
  LineDoc doc;
  doc.b = get_int(member(obj, "b", path), join(path, "b"));
  const std::string ypath = join(path, "y");
  const json& y = require_array(member(obj, "y", path), ypath);
  if (y.size() != alphas.size()) throw SchemaError(ypath, "needs one entry per marked point");
  for (std::size_t i = 0; i < y.size(); ++i) {
    doc.y.push_back(static_cast<int>(get_int(y[i], at(ypath, i), 0, alphas[i] - 1)));
  }
  return doc;
}

std::vector<int> read_rotation(const json& v, const std::string& path, const std::vector<int>& alphas) {
  const json& r = require_array(v, path);
  if (r.size() != alphas.size()) throw SchemaError(path, "needs one entry per marked point");
  std::vector<int> out;
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(static_cast<int>(get_int(r[i], at(path, i), 0, alphas[i])));
  return out;
}

std::vector<std::int64_t> read_coeffs(const json& v, const std::string& path) {
  const json& arr = require_array(v, path);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_int(arr[i], at(path, i)));
  return out;
}

std::optional<StabilityClass> read_stability(const json& obj) {
  const json* v = optional_member(obj, "stability");
  if (!v) return std::nullopt;
  require_object(*v, "stability");
  allow_keys(*v, {"class", "h0_klm2", "h0_kl2"}, "stability");
  const json& cls = member(*v, "class", "stability");
  if (!cls.is_string()) throw SchemaError("stability.class", "expected a string");
  StabilityClass out;
  try {
    out.kind = parse_stability_kind(cls.get<std::string>());
  } catch (const std::exception& ex) {
    throw SchemaError("stability.class", ex.what());
  }
  if (const json* h = optional_member(*v, "h0_klm2")) out.h0_klm2 = get_int(*h, "stability.h0_klm2", 0);
  if (const json* h = optional_member(*v, "h0_kl2")) out.h0_kl2 = get_int(*h, "stability.h0_kl2", 0);
  return out;
}

struct SubDoc {
  std::int64_t m = 0;
  std::vector<int> eps;
};

std::optional<SubDoc> read_sub(const json& obj, std::size_t n) {
  const json* v = optional_member(obj, "sub");
  if (!v) return std::nullopt;
  require_object(*v, "sub");
  allow_keys(*v, {"m", "eps"}, "sub");
  SubDoc out;
  out.m = get_int(member(*v, "m", "sub"), "sub.m");
  const json& eps = require_array(member(*v, "eps", "sub"), "sub.eps");
  if (eps.size() != n) throw SchemaError("sub.eps", "needs one entry per marked point");
  for (std::size_t i = 0; i < eps.size(); ++i) out.eps.push_back(static_cast<int>(get_int(eps[i], at("sub.eps", i), -1, 1)));
  return out;
}

const std::initializer_list<const char*> kBundleKeys = {"genus", "cone_points", "l"};

void validate(Command command, const json& doc) {
  require_object(doc, "");
  switch (command) {
    case Command::Surface: {
      allow_keys(doc, {"genus", "alphas", "line"}, "");
      const auto s = read_surface(doc, "");
      if (const json* line = optional_member(doc, "line")) read_line(*line, "line", s.alphas);
      return;
    }
    case Command::Bundle: {
      allow_keys(doc, {"genus", "cone_points", "l", "stability", "sub"}, "");
      const auto b = read_bundle(doc, "");
      read_stability(doc);
      read_sub(doc, b.pairs.size());
      return;
    }
    case Command::Strata:
    case Command::Spectral:
      allow_keys(doc, kBundleKeys, "");
      read_bundle(doc, "");
      return;
    case Command::Poincare: {
      allow_keys(doc, {"genus", "cone_points", "l", "min_poly", "chi_min", "cover_polys"}, "");
      read_bundle(doc, "");
      if (const json* v = optional_member(doc, "min_poly")) read_coeffs(*v, "min_poly");
      if (const json* v = optional_member(doc, "chi_min")) get_int(*v, "chi_min");
      if (const json* v = optional_member(doc, "cover_polys")) {
        require_object(*v, "cover_polys");
        for (const auto& [key, value] : v->items()) {
          const std::string p = join("cover_polys", key);
          if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
              key.size() > 9) {
            throw SchemaError(p, "keys must be non-negative integers (the symmetric-power degree r)");
          }
          read_coeffs(value, p);
        }
      }
      return;
    }
    case Command::Reps: {
      if (doc.contains("cone_points")) {
        allow_keys(doc, kBundleKeys, "");
        read_bundle(doc, "");
        return;
      }
      allow_keys(doc, {"genus", "alphas", "lambda", "rotation", "psl2r", "euler_class"}, "");
      const auto s = read_surface(doc, "");
      if (const json* v = optional_member(doc, "lambda")) read_line(*v, "lambda", s.alphas);
      if (const json* v = optional_member(doc, "rotation")) {
        if (!optional_member(doc, "lambda")) throw SchemaError("lambda", "required when rotation is given");
        read_rotation(*v, "rotation", s.alphas);
      }
      if (const json* v = optional_member(doc, "psl2r")) read_line(*v, "psl2r", s.alphas);
      if (const json* v = optional_member(doc, "euler_class")) get_rational(*v, "euler_class");
      return;
    }
    case Command::Check:
      allow_keys(doc, {"seed"}, "");
      if (const json* v = optional_member(doc, "seed")) get_int(*v, "seed", 0);
      return;
  }
}

// --- domain objects ---------------------------------------------------------

OrbifoldSurface surface_of(const SurfaceDoc& d) { return OrbifoldSurface(d.genus, d.alphas); }

RankTwoVBundle bundle_of(const BundleDoc& d) {
  return RankTwoVBundle(OrbifoldSurface(d.genus, d.alphas), d.pairs, d.l);
}

// --- JSON emitters ----------------------------------------------------------

json rational_json(const Rational& q) { return to_string(q); }

json surface_json(const OrbifoldSurface& m) {
  return json{{"genus", m.genus()},
              {"alphas", m.cone_orders()},
              {"euler_characteristic", rational_json(m.euler_characteristic())},
              {"hyperbolic", m.hyperbolic()}};
}

json line_json(const LineVBundle& line) {
  return json{{"b", line.b()}, {"y", line.y()}, {"c1", rational_json(line.c1())}};
}

json h0_json(const ForcedH0& h) {
  json out{{"kind", to_string(h.kind)}};
  out["value"] = h.kind == ForcedH0::Kind::Known ? json(h.value) : json(nullptr);
  return out;
}

json bundle_json(const RankTwoVBundle& e) {
  json points = json::array();
  for (std::size_t i = 0; i < e.num_points(); ++i) {
    points.push_back({{"alpha", e.surface().order(i)}, {"x", e.pair(i).x}, {"x_prime", e.pair(i).x_prime}});
  }
  return json{{"genus", e.genus()}, {"cone_points", points}, {"l", e.l()}};
}

json spec_json(const SubBundleSpec& s) { return json{{"m", s.m}, {"eps", s.eps.values()}}; }

json presentation_json(const Presentation& p) {
  json relations = json::array();
  for (const auto& w : p.relations) {
    json word = json::array();
    for (const auto& letter : w) word.push_back(json::array({letter.generator, letter.exponent}));
    relations.push_back(word);
  }
  return json{{"generators", p.generators}, {"relations", relations}, {"text", p.to_string()}};
}

json stratum_json(const Stratum& s) {
  return json{{"m", s.spec.m},
              {"eps", s.spec.eps.values()},
              {"value_over_2pi", rational_json(s.value_over_2pi)},
              {"index", s.index},
              {"r", s.r},
              {"cover", s.cover_order}};
}

json poly_json(const LaurentPoly& p) {
  json symbols = json::array();
  for (const auto& s : p.symbols()) {
    symbols.push_back({{"power", s.power}, {"coefficient", s.coefficient}, {"name", s.name}});
  }
  return json{{"coeffs", p.coeffs()}, {"symbolic", symbols}, {"text", p.to_string()}};
}

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json reduction_json(const Reduction& r) {
  json out = bundle_json(r.bundle);
  out["dropped"] = r.dropped;
  out["twist_exponents"] = r.twist_exponents;
  out["note"] = r.note;
  return out;
}

json component_json(const RealComponent& c) {
  return json{{"kind", to_string(c.kind)},
              {"rank", c.rank},
              {"base_sym_power", c.base_sym_power},
              {"cover_order", c.cover_order},
              {"complex_dim", c.complex_dim},
              {"spec", c.spec ? spec_json(*c.spec) : json(nullptr)}};
}

json conical_json(const OrbifoldSurface& m) {
  const auto report = conical_metric_report(m);
  json angles = json::array();
  for (const auto& a : report.cone_angles_over_pi) angles.push_back(rational_json(a));
  return json{{"exists_unique", report.exists_unique}, {"cone_angles_over_pi", angles}};
}

json rotation_json(const LineVBundle& lambda, const RotationData& rd) {
  json orbit = json::array();
  for (const auto& o : sign_twist_orbit(lambda, rd)) orbit.push_back(o.r());
  const auto reducible = rep_reducible(lambda, rd);
  return json{{"r", rd.r()},
              {"n0", rd.n0()},
              {"dimension", rep_variety_dimension(lambda, rd)},
              {"reducible", reducible ? json(reducible->values()) : json(nullptr)},
              {"sign_twist_orbit", orbit}};
}

// --- commands -----------------------------------------------------------------

json surface_report(const json& doc) {
  const auto sd = read_surface(doc, "");
  const OrbifoldSurface m = surface_of(sd);
  const auto k2 = power(canonical_bundle(m), 2);
  json out;
  out["surface"] = surface_json(m);
  out["canonical"] = line_json(canonical_bundle(m));
  out["k_squared"] = {{"chi", chi_line(k2)}, {"h0", h0_json(h0_forced(k2))}};
  out["teichmuller_dimension"] = m.hyperbolic() ? json(teichmuller_dimension(m)) : json(nullptr);
  out["milnor_wood_bound"] = rational_json(-m.euler_characteristic());
  out["conical_metric"] = conical_json(m);
  out["presentation"] = presentation_json(fuchsian_presentation(m));
  const auto n2 = std::count_if(m.cone_orders().begin(), m.cone_orders().end(), [](int a) { return a % 2 == 0; });
  json roots = nullptr;
  if (n2 <= 10) {
    roots = json::array();
    for (const auto& r : topological_roots(m)) roots.push_back(line_json(r));
  }
  json count = n2 == 0 ? json(1) : n2 <= 63 ? json(std::int64_t{1} << (n2 - 1)) : json(nullptr);
  out["topological_roots"] = {{"count", count}, {"roots", roots}};
  if (const json* v = optional_member(doc, "line")) {
    const auto ld = read_line(*v, "line", sd.alphas);
    const LineVBundle line(m, ld.b, ld.y);
    json l = line_json(line);
    l["chi"] = chi_line(line);
    l["h0"] = h0_json(h0_forced(line));
    l["smooth_degree"] = smooth_line_bundle(line);
    l["serre_partner"] = line_json(serre_partner(line));
    l["within_milnor_wood"] = milnor_wood(m, line.c1());
    l["circle_presentation"] = presentation_json(circle_group_presentation(line));
    out["line"] = l;
  }
  return out;
}

json verdict_json(const StabilityClass& cls, const Verdict& v) {
  return json{{"class", to_string(cls.kind)},
              {"verdict", to_string(v.kind)},
              {"conditions", v.conditions},
              {"notes", v.notes},
              {"isolated_point", v.isolated_point}};
}

json bundle_report(const json& doc) {
  const RankTwoVBundle e = bundle_of(read_bundle(doc, ""));
  const auto reducible = reducible_exists(e);
  std::optional<SubBundleSpec> sub;
  if (auto sd = read_sub(doc, e.num_points())) {
    IsotropyVector eps(sd->eps);
    if (!eps.compatible_with(e)) throw DomainError("sub.eps must be 0 exactly where x = x'");
    sub = SubBundleSpec{sd->m, eps};
  }

  json out;
  out["bundle"] = bundle_json(e);
  out["surface"] = surface_json(e.surface());
  out["determinant"] = line_json(e.determinant());
  out["squarefree_determinant"] = line_json(squarefree_normalize(e.determinant()));
  out["n0"] = e.n0();
  out["distinct"] = e.num_distinct();
  out["moduli_dimension"] = moduli_dimension(e);
  out["real_dimension"] = real_moduli_dimension(e);
  out["reducible"] = reducible ? spec_json(*reducible) : json(nullptr);
  json weights = json::array();
  for (const auto& w : parabolic_weights(e)) {
    weights.push_back({{"lambda", rational_json(w.lambda)},
                       {"lambda_prime", rational_json(w.lambda_prime)},
                       {"degenerate", w.degenerate}});
  }
  out["parabolic_weights"] = weights;
  out["bounds_attainable"] = bounds_attainable_bundle(e);
  out["reduction"] = e.n0() > 0 && e.num_distinct() > 0 ? reduction_json(reduce_to_n0_zero(e)) : json(nullptr);

  if (auto cls = read_stability(doc)) {
    const bool on_wall = sub && Rational(2) * sub_bundle(e, *sub).c1() == e.det_degree();
    const bool semistable = cls->kind == StabilityKind::SemistableIndecomposable ||
                            cls->kind == StabilityKind::SemistableDecomposable;
    out["stability"] = verdict_json(*cls, stable_pair_exists(e, *cls, semistable && on_wall ? sub : std::nullopt));
  } else {
    out["stability"] = nullptr;
  }

  if (sub) {
    const auto [lower, raise] = chi_twists(e, *sub);
    const Rational excess = Rational(2) * sub_bundle(e, *sub).c1() - e.det_degree();
    json s = spec_json(*sub);
    s["c1"] = rational_json(sub_bundle(e, *sub).c1());
    s["isotropy"] = sub_bundle(e, *sub).y();
    s["chi_klm2"] = lower;
    s["chi_kl2"] = raise;
    s["h0_klm2"] = h0_json(h0_forced(twist_lowering(e, *sub)));
    s["h0_kl2"] = h0_json(h0_forced(twist_raising(e, *sub)));
    s["two_c1_minus_det"] = rational_json(excess);
    if (excess == Rational(0)) {
      const auto h = semistable_h0(e, *sub);
      s["semistable_h0"] = {{"end0_nontrivial_ext", h.end0_nontrivial_ext},
                            {"end0_trivial_ext", h.end0_trivial_ext},
                            {"ekl", h.ekl},
                            {"klm2", h.klm2},
                            {"kl2", h.kl2}};
    } else {
      s["semistable_h0"] = nullptr;
    }
    s["all_higgs_invariant"] = all_higgs_invariant(e, *sub);
    out["sub_bundle"] = s;
  } else {
    out["sub_bundle"] = nullptr;
  }
  return out;
}

json topology_json(const RankTwoVBundle& e) {
  const auto t = topology_report(e);
  return json{{"connected", t.connected},
              {"simply_connected", t.simply_connected},
              {"compact", t.compact},
              {"isolated_point", t.isolated_point},
              {"real_dim", t.real_dim}};
}

json minimum_json(const MinStratum& m) {
  return json{{"kind", to_string(m.kind)},
              {"complex_dim", m.complex_dim},
              {"stratum", m.stratum ? stratum_json(*m.stratum) : json(nullptr)}};
}

json strata_report(const json& doc) {
  const RankTwoVBundle e = bundle_of(read_bundle(doc, ""));
  json strata = json::array();
  for (const auto& s : enumerate_strata(e)) strata.push_back(stratum_json(s));
  json out;
  out["bundle"] = bundle_json(e);
  out["strata"] = strata;
  out["minimum"] = minimum_json(minimum_stratum(e));
  out["poincare"] = poly_json(poincare_polynomial(e));
  out["euler_characteristic"] = optional_int(euler_characteristic_moduli(e));
  out["topology"] = topology_json(e);
  out["assumptions"] = {{"perfect_morse", true}};
  return out;
}

json poincare_report(const json& doc) {
  const RankTwoVBundle e = bundle_of(read_bundle(doc, ""));
  std::optional<LaurentPoly> min_poly;
  if (const json* v = optional_member(doc, "min_poly")) min_poly = LaurentPoly(read_coeffs(*v, "min_poly"));
  std::optional<std::int64_t> chi_min;
  if (const json* v = optional_member(doc, "chi_min")) chi_min = get_int(*v, "chi_min");
  std::map<std::int64_t, LaurentPoly> covers;
  if (const json* v = optional_member(doc, "cover_polys")) {
    for (const auto& [key, value] : v->items()) {
      covers[std::stoll(key)] = LaurentPoly(read_coeffs(value, join("cover_polys", key)));
    }
  }
  json out;
  out["bundle"] = bundle_json(e);
  out["minimum"] = minimum_json(minimum_stratum(e));
  out["poincare"] = poly_json(poincare_polynomial(e, min_poly, covers));
  out["euler_characteristic"] = optional_int(euler_characteristic_moduli(e, chi_min));
  out["assumptions"] = {{"perfect_morse", true}};
  return out;
}

json spectral_report(const json& doc) {
  const RankTwoVBundle e = bundle_of(read_bundle(doc, ""));
  const auto data = spectral_data(e);
  json out;
  out["bundle"] = bundle_json(e);
  out["base_dim"] = data.base_dim;
  out["branch_points"] = optional_int(data.branch_points);
  out["spectral_genus"] = optional_int(data.spectral_genus);
  out["fibre"] = {{"kind", to_string(data.fibre)}, {"dim", data.fibre_dim}};
  out["generic_caveat"] = data.generic_caveat;
  out["reduction"] = data.reduction ? reduction_json(*data.reduction) : json(nullptr);
  if (e.genus() == 1 && e.num_distinct() == 1) {
    const auto deg = special_case_subbundle_degrees(e);
    out["special_case"] = {{"c1", rational_json(deg.c1)}, {"isotropy", deg.isotropy}};
  } else {
    out["special_case"] = nullptr;
  }
  return out;
}

json reps_report(const json& doc) {
  json out;
  if (doc.contains("cone_points")) {
    const RankTwoVBundle e = bundle_of(read_bundle(doc, ""));
    const auto [lambda, rd] = rotation_numbers_of(e);
    const auto reducible = reducible_exists(e);
    out["bundle"] = bundle_json(e);
    out["surface"] = surface_json(e.surface());
    out["lambda"] = line_json(lambda);
    out["rotation"] = rotation_json(lambda, rd);
    json components = nullptr;
    if (!reducible) {
      components = json::array();
      for (const auto& c : real_fixed_components(e)) components.push_back(component_json(c));
    }
    out["real_components"] = components;
    return out;
  }

  const auto sd = read_surface(doc, "");
  const OrbifoldSurface m = surface_of(sd);
  out["surface"] = surface_json(m);
  out["presentation"] = presentation_json(fuchsian_presentation(m));
  out["teichmuller_dimension"] = m.hyperbolic() ? json(teichmuller_dimension(m)) : json(nullptr);
  out["conical_metric"] = conical_json(m);
  if (const json* v = optional_member(doc, "lambda")) {
    const auto ld = read_line(*v, "lambda", sd.alphas);
    const LineVBundle lambda(m, ld.b, ld.y);
    out["lambda"] = line_json(lambda);
    out["circle_presentation"] = presentation_json(circle_group_presentation(lambda, true));
    json all = json::array();
    for (const auto& rd : compatible_rotation_numbers(lambda)) all.push_back(rd.r());
    out["compatible_rotation_numbers"] = all;
    if (const json* r = optional_member(doc, "rotation")) {
      const RotationData rd(m, read_rotation(*r, "rotation", sd.alphas));
      out["rotation"] = rotation_json(lambda, rd);
    }
  }
  if (const json* v = optional_member(doc, "psl2r")) {
    const auto ld = read_line(*v, "psl2r", sd.alphas);
    out["psl2r"] = component_json(psl2r_component(m, ld.b, ld.y));
  }
  if (const json* v = optional_member(doc, "euler_class")) {
    const Rational e = get_rational(*v, "euler_class");
    out["milnor_wood"] = {{"euler_class", rational_json(e)},
                          {"bound", rational_json(-m.euler_characteristic())},
                          {"holds", milnor_wood(m, e)}};
  }
  return out;
}

json check_report(const json& doc) {
  std::uint64_t seed = kDefaultCheckSeed;
  if (const json* v = optional_member(doc, "seed")) seed = static_cast<std::uint64_t>(get_int(*v, "seed", 0));
  json suites = json::array();
  std::size_t passed = 0, failed = 0;
  auto add = [&](const std::vector<SuiteResult>& results, const char* group) {
    for (const auto& r : results) {
      suites.push_back({{"id", r.id},
                        {"group", group},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"cases", r.cases},
                        {"failure", r.failure.empty() ? json(nullptr) : json(r.failure)}});
      (r.passed ? passed : failed) += 1;
    }
  };
  add(acceptance_suites(seed), "acceptance");
  add(invariant_suites(seed), "invariant");
  return json{{"seed", seed}, {"suites", suites}, {"passed", passed}, {"failed", failed}};
}

void render(std::ostringstream& out, const json& value, int indent);

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::ostringstream& out, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      if (is_scalar(v)) {
        out << pad << key << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        out << pad << key << ": [";
        bool first = true;
        for (const auto& x : v) {
          out << (first ? "" : ", ") << scalar_text(x);
          first = false;
        }
        out << "]\n";
      } else {
        out << pad << key << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (is_scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar))) {
        out << pad << "- " << (is_scalar(v) ? scalar_text(v) : v.dump()) << "\n";
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(value) << "\n";
  }
}

json error_json(const char* kind, const std::string& message, const std::string* path = nullptr) {
  json err{{"type", kind}, {"message", message}};
  if (path) err["path"] = *path;
  return json{{"error", err}};
}

}  // namespace

// ---------------------------------------------------------------------------

Command parse_command(std::string_view name) {
  static const std::map<std::string, Command, std::less<>> table = {
      {"surface", Command::Surface}, {"bundle", Command::Bundle},     {"strata", Command::Strata},
      {"poincare", Command::Poincare}, {"spectral", Command::Spectral}, {"reps", Command::Reps},
      {"check", Command::Check}};
  auto it = table.find(name);
  if (it == table.end()) throw SchemaError("command", "unknown command '" + std::string(name) + "'");
  return it->second;
}

std::string to_string(Command command) {
  switch (command) {
    case Command::Surface: return "surface";
    case Command::Bundle: return "bundle";
    case Command::Strata: return "strata";
    case Command::Poincare: return "poincare";
    case Command::Spectral: return "spectral";
    case Command::Reps: return "reps";
    case Command::Check: return "check";
  }
  return "surface";
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  throw SchemaError("format", "expected json or text");
}

JobSpec parse_input(Command command, std::string_view document, Format format) {
  JobSpec job;
  job.command = command;
  job.format = format;
  const auto text = std::string(document);
  if (command == Command::Check && text.find_first_not_of(" \t\r\n") == std::string::npos) {
    job.input = json::object();
    return job;
  }
  try {
    job.input = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw SchemaError("", std::string("invalid JSON: ") + ex.what());
  }
  validate(command, job.input);
  return job;
}

json report(const JobSpec& job) {
  switch (job.command) {
    case Command::Surface: return surface_report(job.input);
    case Command::Bundle: return bundle_report(job.input);
    case Command::Strata: return strata_report(job.input);
    case Command::Poincare: return poincare_report(job.input);
    case Command::Spectral: return spectral_report(job.input);
    case Command::Reps: return reps_report(job.input);
    case Command::Check: return check_report(job.input);
  }
  return json::object();
}

std::string render_text(const json& value) {
  std::ostringstream out;
  render(out, value, 0);
  return out.str();
}

RunResult run(const JobSpec& job) {
  RunResult result;
  try {
    const json doc = report(job);
    result.output = job.format == Format::Json ? doc.dump(2) + "\n" : render_text(doc);
    if (job.command == Command::Check && doc["failed"].get<std::size_t>() > 0) result.exit_code = 1;
  } catch (const SchemaError& ex) {
    result.exit_code = 2;
    result.error = error_json("schema_error", ex.what(), &ex.path()).dump() + "\n";
  } catch (const DomainError& ex) {
    result.exit_code = 1;
    result.error = error_json("domain_error", ex.what()).dump() + "\n";
  } catch (const std::exception& ex) {
    result.exit_code = 1;
    result.error = error_json("internal_error", ex.what()).dump() + "\n";
  }
  return result;
}

RunResult run_command(std::string_view command, std::string_view document, std::string_view format) {
  try {
    return run(parse_input(parse_command(command), document, parse_format(format)));
  } catch (const SchemaError& ex) {
    RunResult result;
    result.exit_code = 2;
    result.error = error_json("schema_error", ex.what(), &ex.path()).dump() + "\n";
    return result;
  }
}

}  // namespace orbimod
