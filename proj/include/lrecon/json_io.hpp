#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrecon/dirichlet_series.hpp"
#include "lrecon/errors.hpp"
#include "lrecon/ldata.hpp"
#include "lrecon/number_field.hpp"
#include "lrecon/poly_z.hpp"
#include "lrecon/recon.hpp"
#include "lrecon/structures.hpp"

namespace lrecon {

using Json = nlohmann::ordered_json;

namespace detail {

template <class Fn>
auto json_guard(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

inline Json integer_json(const Integer& a) {
  if (a.fits_slong_p()) return Json(a.get_si());
  return Json(a.get_str());
}

}  // namespace detail

inline Json character_to_json(const Character& chi) { return Json{{"exponents", chi.exponents}}; }

inline Character character_from_json(const Json& j) {
  return detail::json_guard("character", [&] { return Character{j.at("exponents").get<std::vector<std::int64_t>>()}; });
}

inline Json datum_to_json(const LDatum& d) {
  Json primes = Json::array();
  for (const auto& p : d.primes) {
    Json inertia = Json::array();
    for (const auto& g : p.inertia) inertia.push_back(g);
    primes.push_back(Json{{"label", p.label}, {"norm", p.norm}, {"inertia", inertia}, {"frobenius", p.frobenius}});
  }
  return Json{{"cyclic_orders", d.group.cyclic_orders()}, {"primes", primes}};
}

inline LDatum datum_from_json(const Json& j) {
  LDatum d = detail::json_guard("datum", [&] {
    LDatum out;
    out.group = FiniteAbelianGroup(j.at("cyclic_orders").get<std::vector<std::int64_t>>());
    for (const auto& pj : j.at("primes")) {
      AbstractPrime p;
      p.label = pj.at("label").get<std::string>();
      p.norm = pj.at("norm").get<std::int64_t>();
      for (const auto& g : pj.at("inertia")) p.inertia.push_back(g.get<Element>());
      p.frobenius = pj.at("frobenius").get<Element>();
      out.primes.push_back(std::move(p));
    }
    return out;
  });
  d.validate();
  return d;
}

inline Json splitting_to_json(const SplittingReport& r) {
  Json pattern = Json::array();
  for (const auto& pa : r.pattern) pattern.push_back(Json::array({pa.e, pa.f}));
  return Json{{"p", r.p}, {"pattern", pattern}, {"source", to_string(r.source)}};
}

// {"x^4+8": {"2": [[4,1]]}} -> polynomial -> prime -> pattern
inline std::vector<std::pair<PolyZ, std::map<std::uint64_t, SplittingType>>> overrides_from_json(const Json& j) {
  return detail::json_guard("overrides", [&] {
    std::vector<std::pair<PolyZ, std::map<std::uint64_t, SplittingType>>> out;
    if (!j.is_object()) throw ParseError("overrides: expected an object");
    for (const auto& [poly, table] : j.items()) {
      std::map<std::uint64_t, SplittingType> m;
      for (const auto& [prime, pattern] : table.items()) {
        SplittingType t;
        for (const auto& ef : pattern) {
          const auto pair = ef.get<std::vector<unsigned>>();
          if (pair.size() != 2) throw ParseError("overrides: pattern entries are [e, f]");
          t.push_back({pair[0], pair[1]});
        }
        std::size_t used = 0;
        std::uint64_t p = 0;
        try {
          p = std::stoull(prime, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != prime.size()) throw ParseError("overrides: bad prime key " + prime);
        m[p] = std::move(t);
      }
      out.emplace_back(parse_poly(poly), std::move(m));
    }
    return out;
  });
}

inline Json series_to_json(const DirichletSeries<Integer>& s) {
  Json coeffs = Json::array();
  for (std::size_t n = 1; n <= s.limit(); ++n) coeffs.push_back(detail::integer_json(s[n]));
  return Json{{"limit", s.limit()}, {"coefficients", coeffs}};
}

inline Json matching_to_json(const MatchingResult& r) {
  Json phi = Json::object();
  for (const auto& [a, b] : r.phi) phi[a] = b;
  Json levels = Json::array();
  for (const auto& [norm, w] : r.levels) levels.push_back(Json{{"norm", norm}, {"witnesses", w}});
  return Json{{"phi", phi}, {"certified", r.certified}, {"levels", levels}};
}

inline Json mu_k_to_json(const MuKReport& r) {
  return Json{{"k", r.k},
              {"n", r.n},
              {"tuples_checked", r.tuples_checked},
              {"matching", r.matching},
              {"violating", r.violating},
              {"lemma_holds", r.lemma_holds()}};
}

inline Json cyclo_to_json(const CycloRat& a) {
  Json out = Json::array();
  for (const auto& c : a.coords()) out.push_back(c.get_str());
  return out;
}

inline Json structures_to_json(const StructureReport& r) {
  Json structs = Json::array();
  for (const auto& s : r.structures) {
    Json lines = Json::array();
    for (const auto& v : s.lines) {
      Json line = Json::array();
      for (const auto& x : v) line.push_back(cyclo_to_json(x));
      lines.push_back(line);
    }
    structs.push_back(Json{{"lines", lines}, {"orbit_sizes", s.orbit_sizes}});
  }
  return Json{{"count", r.structures.size()}, {"conductor", r.field}, {"structures", structs}, {"gset_iso_classes", r.iso_classes}};
}

inline Json group_to_json(const FiniteGroup& g) {
  return Json{{"order", g.order()}, {"identity", g.identity()}, {"generators", g.generators()}, {"table", g.table()}};
}

inline Json rep_to_json(const MonomialRep& rep) {
  Json images = Json::array();
  for (int s : rep.group().generators())
    images.push_back(Json{{"element", s}, {"perm", rep.matrix(s).perm}, {"diag", rep.matrix(s).diag}});
  return Json{{"dimension", rep.dimension()}, {"conductor", rep.k()}, {"generator_images", images}};
}

}  // namespace lrecon
