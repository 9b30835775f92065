// lrecon: command-line front end for the zeta, reconstruction and
// monomial-structure machinery.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrecon/json_io.hpp"
#include "lrecon/lrecon.hpp"

namespace {

using namespace lrecon;

enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kNotLCompatible = 2,
  kInsufficientCharacters = 3,
  kUsage = 64,
  kIndexDivisor = 65,
  kEnvelope = 66,
};

struct Options {
  std::string format = "text";
  std::string overrides_path;
  std::vector<std::string> polys;
  std::uint64_t prime = 2;
  std::size_t limit = 10;
  unsigned k = 3;
  unsigned n = 3;
  std::uint64_t seed = 42;
  std::size_t levels = 10;
  bool break_frobenius = false;
  std::string base = "C2";
  std::string action = "regular";
  bool dump = false;
};

std::map<std::uint64_t, SplittingType> overrides_for(const Options& o, const PolyZ& f) {
  if (o.overrides_path.empty()) return {};
  std::ifstream in(o.overrides_path);
  if (!in) throw ParseError("cannot open override file " + o.overrides_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("override file: ") + e.what());
  }
  for (auto& [poly, table] : overrides_from_json(j))
    if (poly == f) return table;
  return {};
}

NumberField field_for(const Options& o, const std::string& text) {
  PolyZ f = parse_poly(text);
  return NumberField(f, overrides_for(o, f));
}

void emit_series(const Options& o, const DirichletSeries<Integer>& s) {
  if (o.format == "json") {
    std::cout << series_to_json(s).dump() << '\n';
  } else if (o.format == "csv") {
    write_csv(std::cout, s);
  } else {
    for (std::size_t n = 1; n <= s.limit(); ++n) std::cout << (n > 1 ? "," : "") << s[n];
    std::cout << '\n';
  }
}

int cmd_zeta(const Options& o) {
  emit_series(o, dedekind_zeta(field_for(o, o.polys.at(0)), o.limit));
  return kOk;
}

int cmd_lquotient(const Options& o) {
  if (o.polys.size() != 2) throw ParseError("lquotient needs --poly twice");
  const auto a = dedekind_zeta(field_for(o, o.polys[0]), o.limit);
  const auto b = dedekind_zeta(field_for(o, o.polys[1]), o.limit);
  emit_series(o, series_div(a, b));
  return kOk;
}

int cmd_split(const Options& o) {
  const auto r = field_for(o, o.polys.at(0)).splitting(o.prime);
  if (o.format == "json") {
    std::cout << splitting_to_json(r).dump() << '\n';
  } else if (o.format == "csv") {
    std::cout << "p,e,f,source\n";
    for (const auto& pa : r.pattern) std::cout << r.p << ',' << pa.e << ',' << pa.f << ',' << to_string(r.source) << '\n';
  } else {
    std::cout << "p=" << r.p << " pattern=[";
    for (std::size_t i = 0; i < r.pattern.size(); ++i)
      std::cout << (i ? "," : "") << '(' << r.pattern[i].e << ',' << r.pattern[i].f << ')';
    std::cout << "] source=" << to_string(r.source) << '\n';
  }
  return kOk;
}

int cmd_d4_verify(const Options& o) {
  const auto r = verify_d4_identity(o.limit);
  if (o.format == "json") {
    Json j{{"limit", r.limit},
           {"identity_holds", r.identity.equal},
           {"identity_first_mismatch", r.identity.first_mismatch ? Json(*r.identity.first_mismatch) : Json(nullptr)},
           {"quadratic_zetas_equal", r.quadratic.equal},
           {"quadratic_first_mismatch", r.quadratic.first_mismatch ? Json(*r.quadratic.first_mismatch) : Json(nullptr)}};
    std::cout << j.dump() << '\n';
  } else if (o.format == "csv") {
    auto mismatch = [](const PrefixComparison& c) { return c.first_mismatch ? std::to_string(*c.first_mismatch) : ""; };
    std::cout << "comparison,limit,equal,first_mismatch\n"
              << "identity," << r.limit << ',' << r.identity.equal << ',' << mismatch(r.identity) << '\n'
              << "quadratic," << r.limit << ',' << r.quadratic.equal << ',' << mismatch(r.quadratic) << '\n';
  } else {
    std::cout << "limit=" << r.limit << '\n'
              << "zeta(x^4-2)*zeta(x^2+2) == zeta(x^4+8)*zeta(x^2-2): " << (r.identity.equal ? "yes" : "no") << '\n';
    std::cout << "zeta(x^2-2) == zeta(x^2+2): " << (r.quadratic.equal ? "yes" : "no");
    if (r.quadratic.first_mismatch) std::cout << " (first mismatch at n=" << *r.quadratic.first_mismatch << ')';
    std::cout << '\n';
  }
  if (!r.identity.equal) throw VerificationFailed(*r.identity.first_mismatch, "D4 zeta identity fails");
  return kOk;
}

int cmd_recon_demo(const Options& o) {
  if (o.k < 3) throw ParseError("--k must be at least 3");
  std::mt19937_64 rng(o.seed);
  RichDatumConfig cfg;
  cfg.k = o.k;
  cfg.max_norm = static_cast<std::int64_t>(o.limit);
  cfg.max_levels = o.levels;
  const LDatum source = generate_rich_datum(cfg, rng);
  auto planted = scramble(source, o.k, rng);
  IsoPair pair = o.break_frobenius ? tamper_frobenius(planted.pair, rng) : planted.pair;
  const auto result = reconstruct(pair);
  const bool recovered = result.phi == planted.sigma;
  if (o.format == "json") {
    Json j = matching_to_json(result);
    j["seed"] = o.seed;
    j["recovered"] = recovered;
    if (o.dump) {
      j["source"] = datum_to_json(pair.source());
      j["target"] = datum_to_json(pair.target());
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "seed=" << o.seed << " k=" << o.k << " primes=" << source.primes.size()
              << " levels=" << result.levels.size() << " certified=" << (result.certified ? "yes" : "no")
              << " recovered=" << (recovered ? "yes" : "no") << '\n';
    for (const auto& [a, b] : result.phi) std::cout << a << " -> " << b << '\n';
  }
  return recovered ? kOk : kVerificationFailed;
}

FiniteGroup parse_base(const std::string& name) {
  if (name.size() < 2) throw ParseError("base group must look like C<n>, D<n> or S<n>");
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(name.substr(1), &used);
  } catch (const std::exception&) {
    throw ParseError("bad base group " + name);
  }
  if (used != name.size() - 1 || n < 1) throw ParseError("bad base group " + name);
  switch (name[0]) {
    case 'C': return FiniteGroup::cyclic(n);
    case 'D':
      if (n < 2) throw ParseError("dihedral groups need n >= 2");
      return FiniteGroup::dihedral(n);
    case 'S':
      if (n > 6) throw EnvelopeExceeded("symmetric base groups are limited to S6");
      return FiniteGroup::symmetric(n);
  }
  throw ParseError("bad base group " + name);
}

// Subgroup H whose cosets G permutes: trivial for the regular action, a
// point stabilizer for the natural action of D<n> and S<n>.
std::vector<int> base_subgroup(const FiniteGroup& g, char kind, const std::string& action) {
  if (action == "regular" || kind == 'C') return {g.identity()};
  if (action != "natural") throw ParseError("--action must be regular or natural");
  if (kind == 'D') return g.subgroup({g.generators().at(1)});
  std::vector<int> stab;
  // symmetric(n) names elements "[p0p1...]"; keep those fixing point 0.
  for (int x = 0; x < g.order(); ++x)
    if (g.name(x).at(1) == '0') stab.push_back(x);
  return stab;
}

int cmd_wreath(const Options& o) {
  const FiniteGroup g = parse_base(o.base);
  const CosetAction action(g, base_subgroup(g, o.base[0], o.action));
  const WreathProduct w = wreath_product(o.k, action);
  const MonomialRep rep = induce_monomial(w.group, w.inertia_like, first_coordinate_character(w));
  const StructureReport r = enumerate_monomial_structures(rep);
  const auto eigen = joint_eigenlines(rep, w.base_subgroup);
  const bool matches = r.structures.size() == 1 && r.structures[0].lines == eigen;
  if (o.format == "json") {
    Json j = structures_to_json(r);
    j["group_order"] = w.group.order();
    j["dimension"] = rep.dimension();
    j["equals_base_eigenlines"] = matches;
    if (o.dump) {
      j["group"] = group_to_json(w.group);
      j["representation"] = rep_to_json(rep);
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "wreath k=" << o.k << " base=" << o.base << " order=" << w.group.order()
              << " dimension=" << rep.dimension() << " count=" << r.structures.size()
              << " gset_iso_classes=" << r.iso_classes << " equals_base_eigenlines=" << (matches ? "yes" : "no")
              << '\n';
  }
  return kOk;
}

int cmd_mu_k(const Options& o) {
  const auto r = mu_k_exhaustive(o.k, o.n);
  if (o.format == "json") {
    std::cout << mu_k_to_json(r).dump() << '\n';
  } else {
    std::cout << "k=" << r.k << " n=" << r.n << " tuples=" << r.tuples_checked << " matching=" << r.matching.size()
              << " violating=" << r.violating.size() << " lemma_holds=" << (r.lemma_holds() ? "yes" : "no") << '\n';
    for (const auto& t : r.violating) {
      std::cout << "counterexample:";
      for (long e : t) std::cout << ' ' << (e < 0 ? std::string("0") : "z^" + std::to_string(e));
      std::cout << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions, L-data reconstruction and monomial structures"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_overrides = [&](CLI::App* c) { c->add_option("--overrides", o.overrides_path, "Splitting override JSON file"); };

  auto* zeta = app.add_subcommand("zeta", "Dedekind zeta coefficients a_1..a_X");
  zeta->add_option("--poly", o.polys, "Defining polynomial")->required()->expected(1);
  zeta->add_option("--limit", o.limit, "X")->check(CLI::PositiveNumber);
  add_format(zeta);
  add_overrides(zeta);

  auto* split = app.add_subcommand("split", "Splitting type of a prime");
  split->add_option("--poly", o.polys, "Defining polynomial")->required()->expected(1);
  split->add_option("--prime", o.prime, "Rational prime")->required();
  add_format(split);
  add_overrides(split);

  auto* lq = app.add_subcommand("lquotient", "Quotient of two zeta series");
  lq->add_option("--poly", o.polys, "Numerator then denominator polynomial")->required()->expected(2);
  lq->add_option("--limit", o.limit, "X")->check(CLI::PositiveNumber);
  add_format(lq);
  add_overrides(lq);

  auto* d4 = app.add_subcommand("d4-verify", "Check the D4 zeta identity up to X");
  d4->add_option("--limit", o.limit, "X")->check(CLI::PositiveNumber);
  add_format(d4);

  auto* demo = app.add_subcommand("recon-demo", "Scramble a random L-datum and reconstruct it");
  demo->add_option("--seed", o.seed, "RNG seed");
  demo->add_option("--k", o.k, "Order of the distinguished root of unity (>= 3)");
  demo->add_option("--limit", o.limit, "Norm bound")->check(CLI::PositiveNumber);
  demo->add_option("--levels", o.levels, "Maximum number of norm levels")->check(CLI::PositiveNumber);
  demo->add_flag("--break-frobenius", o.break_frobenius, "Tamper with one target Frobenius");
  demo->add_flag("--dump", o.dump, "Include source and target data");
  add_format(demo);

  auto* wreath = app.add_subcommand("wreath", "Monomial structures of the induced wreath representation");
  wreath->add_option("--k", o.k, "Order of the cyclic factor")->check(CLI::Range(2u, 64u));
  wreath->add_option("--base", o.base, "Base group C<n>, D<n> or S<n>");
  wreath->add_option("--action", o.action, "regular or natural")->check(CLI::IsMember({"regular", "natural"}));
  wreath->add_flag("--dump", o.dump, "Include group table and generator images");
  add_format(wreath);

  auto* mu = app.add_subcommand("mu-k", "Exhaustive check of the roots-of-unity sum lemma");
  mu->add_option("--k", o.k, "Root order")->check(CLI::Range(2u, 64u));
  mu->add_option("--n", o.n, "Tuple length")->check(CLI::Range(1u, 12u));
  add_format(mu);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*zeta) return cmd_zeta(o);
    if (*split) return cmd_split(o);
    if (*lq) return cmd_lquotient(o);
    if (*d4) return cmd_d4_verify(o);
    if (*demo) return cmd_recon_demo(o);
    if (*wreath) return cmd_wreath(o);
    if (*mu) return cmd_mu_k(o);
  } catch (const IndexDivisorUnresolved& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIndexDivisor;
  } catch (const EnvelopeExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEnvelope;
  } catch (const NotLCompatible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotLCompatible;
  } catch (const CardinalityMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotLCompatible;
  } catch (const InsufficientCharacters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInsufficientCharacters;
  } catch (const VerificationFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
