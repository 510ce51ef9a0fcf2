#pragma once

// JSON documents for families and rational functions.
//
// Family:   {"label": str,
//            "finite": [{"cx": x, "cy": y, "r": r}, ...],
//            "parametric": tail | [tail, ...]}
//   tail:   {"id": "road_runner" | "synthetic_budget" | "infinite_order",
//            "params": {"m", "n", "count", "seed"}, "start": int,
//            "transforms": [{"kind": "sqrt"} | {"kind": "affine", "ax", "ay", "rho"}]}
// Rational: {"num": [[re, im], ...], "den": [[re, im], ...]}, ascending powers.
//
// Reals are written as decimal strings that round-trip at the working
// precision; readers accept JSON numbers or such strings.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cheese/families.hpp"
#include "cheese/rational.hpp"

namespace cheese {

using Json = nlohmann::ordered_json;

inline Json to_json(const Real& x) { return x.str(); }

inline Real real_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return Real::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Real(j.get<long>());
    if (j.is_number()) return Real(j.get<double>());
  } catch (const std::exception& e) {
    throw FormatError(field, e.what());
  }
  throw FormatError(field, "expected a number or a numeric string");
}

namespace detail {

inline const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(path + "." + key, "missing");
  return *it;
}

inline long integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return j.get<long>();
  throw FormatError(field, "expected an integer");
}

inline std::uint64_t seed_from_json(const Json& j, const std::string& field) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long>() >= 0) return static_cast<std::uint64_t>(j.get<long>());
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = j.get<std::string>();
      const auto v = std::stoull(s, &used, 0);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw FormatError(field, "expected a nonnegative integer seed");
}

inline Json complex_to_json(const Complex& z) { return Json::array({z.re.str(), z.im.str()}); }

inline Complex complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw FormatError(field, "expected [re, im]");
  return {real_from_json(j[0], field + "[0]"), real_from_json(j[1], field + "[1]")};
}

inline Json tail_to_json(const ParametricTail& t) {
  Json params = Json::object();
  switch (t.generator) {
    case GeneratorKind::road_runner:
      params["m"] = t.params.m;
      break;
    case GeneratorKind::synthetic_budget:
      params["n"] = t.params.n;
      params["count"] = t.params.count;
      params["seed"] = t.params.seed;
      break;
    case GeneratorKind::infinite_order:
      params["count"] = t.params.count;
      params["seed"] = t.params.seed;
      break;
  }
  Json out{{"id", to_string(t.generator)}, {"params", params}, {"start", t.start}};
  if (!t.transforms.empty()) {
    Json xs = Json::array();
    for (const auto& x : t.transforms) {
      if (x.kind == Transform::Kind::sqrt) {
        xs.push_back({{"kind", "sqrt"}});
      } else {
        xs.push_back({{"kind", "affine"}, {"ax", x.offset.re.str()}, {"ay", x.offset.im.str()}, {"rho", x.scale.str()}});
      }
    }
    out["transforms"] = xs;
  }
  return out;
}

inline ParametricTail tail_from_json(const Json& j, const std::string& path) {
  ParametricTail t;
  const Json& id = member(j, "id", path);
  if (!id.is_string()) throw FormatError(path + ".id", "expected a string");
  const auto kind = generator_from_string(id.get<std::string>());
  if (!kind) throw FormatError(path + ".id", "unknown generator '" + id.get<std::string>() + "'");
  t.generator = *kind;
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) throw FormatError(path + ".params", "expected an object");
    const std::string pp = path + ".params";
    if (auto v = it->find("m"); v != it->end()) t.params.m = integer_from_json(*v, pp + ".m");
    if (auto v = it->find("n"); v != it->end()) t.params.n = integer_from_json(*v, pp + ".n");
    if (auto v = it->find("count"); v != it->end()) t.params.count = integer_from_json(*v, pp + ".count");
    if (auto v = it->find("seed"); v != it->end()) t.params.seed = seed_from_json(*v, pp + ".seed");
  }
  if (auto it = j.find("start"); it != j.end()) {
    const long s = integer_from_json(*it, path + ".start");
    if (s < 1) throw FormatError(path + ".start", "must be >= 1");
    t.start = static_cast<std::size_t>(s);
  }
  if (auto it = j.find("transforms"); it != j.end()) {
    if (!it->is_array()) throw FormatError(path + ".transforms", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string tp = path + ".transforms[" + std::to_string(i) + "]";
      const Json& x = (*it)[i];
      const Json& k = member(x, "kind", tp);
      if (k == "sqrt") {
        t.transforms.push_back(Transform::square_root());
      } else if (k == "affine") {
        const Real rho = real_from_json(member(x, "rho", tp), tp + ".rho");
        if (!(rho.sign() > 0)) throw FormatError(tp + ".rho", "must be positive");
        t.transforms.push_back(Transform::affine(
            Complex(real_from_json(member(x, "ax", tp), tp + ".ax"), real_from_json(member(x, "ay", tp), tp + ".ay")),
            rho));
      } else {
        throw FormatError(tp + ".kind", "expected \"sqrt\" or \"affine\"");
      }
    }
  }
  try {
    t.validate();
  } catch (const InputError& e) {
    throw FormatError(path + ".params", e.what());
  }
  return t;
}

}  // namespace detail

inline Json family_to_json(const DiscFamily& fam, const std::string& label = {}) {
  Json out{{"label", label}};
  Json finite = Json::array();
  for (const auto& d : fam.finite) {
    finite.push_back({{"cx", d.center.re.str()}, {"cy", d.center.im.str()}, {"r", d.radius.str()}});
  }
  out["finite"] = finite;
  if (fam.tails.size() == 1) {
    out["parametric"] = detail::tail_to_json(fam.tails.front());
  } else if (!fam.tails.empty()) {
    Json tails = Json::array();
    for (const auto& t : fam.tails) tails.push_back(detail::tail_to_json(t));
    out["parametric"] = tails;
  }
  return out;
}

inline Json cheese_to_json(const CheeseSpec& c) { return family_to_json(c.family, c.label); }

/// Parses a family document. Finite discs that miss the open unit disc are
/// dropped with a warning, as for any constructed family.
inline CheeseSpec cheese_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("<document>", "expected an object");
  CheeseSpec spec;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw FormatError("label", "expected a string");
    spec.label = it->get<std::string>();
  }
  std::vector<Disc> discs;
  if (auto it = j.find("finite"); it != j.end()) {
    if (!it->is_array()) throw FormatError("finite", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "finite[" + std::to_string(i) + "]";
      const Json& d = (*it)[i];
      Real cx = real_from_json(detail::member(d, "cx", path), path + ".cx");
      Real cy = real_from_json(detail::member(d, "cy", path), path + ".cy");
      Real r = real_from_json(detail::member(d, "r", path), path + ".r");
      if (!cx.is_finite()) throw FormatError(path + ".cx", "must be finite");
      if (!cy.is_finite()) throw FormatError(path + ".cy", "must be finite");
      if (!r.is_finite() || r.sign() <= 0) throw FormatError(path + ".r", "must be positive and finite");
      discs.emplace_back(Complex(std::move(cx), std::move(cy)), std::move(r));
    }
  }
  std::vector<ParametricTail> tails;
  if (auto it = j.find("parametric"); it != j.end() && !it->is_null()) {
    if (it->is_array()) {
      for (std::size_t i = 0; i < it->size(); ++i) {
        tails.push_back(detail::tail_from_json((*it)[i], "parametric[" + std::to_string(i) + "]"));
      }
    } else {
      tails.push_back(detail::tail_from_json(*it, "parametric"));
    }
  }
  spec.family = make_family(std::move(discs), std::move(tails));
  return spec;
}

inline Json rational_to_json(const RationalFunction& f) {
  Json num = Json::array();
  Json den = Json::array();
  for (const auto& c : f.numerator()) num.push_back(detail::complex_to_json(c));
  for (const auto& c : f.denominator()) den.push_back(detail::complex_to_json(c));
  return Json{{"num", num}, {"den", den}};
}

inline RationalFunction rational_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("<document>", "expected an object");
  auto poly = [&](const char* key) {
    const Json& arr = detail::member(j, key, "<document>");
    if (!arr.is_array()) throw FormatError(key, "expected an array of [re, im] pairs");
    Poly<Complex> p;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      p.push_back(detail::complex_from_json(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return p;
  };
  Poly<Complex> num = poly("num");
  Poly<Complex> den = poly("den");
  if (trim(den).empty()) throw FormatError("den", "denominator is identically zero");
  return RationalFunction::from_coefficients(std::move(num), std::move(den));
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("<document>", e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace cheese
