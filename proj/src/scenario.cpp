#include "graydist/scenario.hpp"

#include <fstream>
#include <sstream>

#include "graydist/gray.hpp"
#include "graydist/parametric.hpp"
#include "graydist/suites.hpp"

namespace graydist {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw ScenarioParseError(what); }
[[noreturn]] void resolve_error(const std::string& what) { throw ScenarioResolutionError(what); }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_error(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::string str_field(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) parse_error(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::uint32_t uint_value(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) parse_error(where + " must be a non-negative integer");
  const auto x = v.get<std::uint64_t>();
  if (x > 1000000) resolve_error(where + " is too large");
  return static_cast<std::uint32_t>(x);
}

std::uint32_t uint_field(const json& j, const std::string& key, const std::string& where, std::uint32_t def) {
  if (!j.contains(key)) return def;
  return uint_value(j.at(key), where + ": \"" + key + "\"");
}

bool bool_field(const json& j, const std::string& key, const std::string& where, bool def) {
  if (!j.contains(key)) return def;
  if (!j.at(key).is_boolean()) parse_error(where + ": \"" + key + "\" must be a boolean");
  return j.at(key).get<bool>();
}

const json& object_section(const json& j, const std::string& key) {
  static const json empty = json::object();
  if (!j.contains(key)) return empty;
  if (!j.at(key).is_object()) parse_error("\"" + key + "\" must be an object");
  return j.at(key);
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const std::string& what) {
  auto it = m.find(name);
  if (it == m.end()) resolve_error("unknown " + what + " \"" + name + "\"");
  return it->second;
}

// How a monad was built; canonical n-fold laws depend on it.
struct MonadRecipe {
  std::string kind;
  std::string monoid;
  std::uint32_t size = 0;
};

struct Builder {
  Scenario s;
  std::map<std::string, MonadRecipe> recipes;

  std::uint32_t set_size(const json& j, const std::string& where) {
    const json& v = field(j, "set", where);
    if (v.is_string()) return lookup(s.sets, v.get<std::string>(), "set");
    return uint_value(v, where + ": \"set\"");
  }

  void monoids(const json& sec) {
    for (const auto& [name, j] : sec.items()) {
      const std::string where = "monoid \"" + name + "\"";
      const std::string kind = j.contains("kind") ? str_field(j, "kind", where) : "table";
      if (kind == "cyclic") {
        const std::uint32_t n = uint_field(j, "n", where, 0);
        if (n == 0) resolve_error(where + ": cyclic monoid needs n >= 1");
        MonoidTable m = cyclic_monoid(n);
        m.name = name;
        s.monoids[name] = m;
      } else if (kind == "and") {
        MonoidTable m = boolean_and();
        m.name = name;
        s.monoids[name] = m;
      } else if (kind == "table") {
        const json& t = field(j, "table", where);
        if (!t.is_array()) parse_error(where + ": \"table\" must be an array of rows");
        std::vector<std::vector<std::uint32_t>> rows;
        for (const auto& r : t) {
          if (!r.is_array()) parse_error(where + ": table rows must be arrays");
          std::vector<std::uint32_t> row;
          for (const auto& v : r) row.push_back(uint_value(v, where + ": table entry"));
          rows.push_back(std::move(row));
        }
        const auto size = static_cast<std::uint32_t>(rows.size());
        if (j.contains("size") && uint_field(j, "size", where, 0) != size)
          resolve_error(where + ": \"size\" does not match the table");
        const std::uint32_t unit = uint_field(j, "unit", where, 0);
        s.monoids[name] = bool_field(j, "unchecked", where, false)
                              ? MonoidTable::unchecked(name, size, unit, std::move(rows))
                              : MonoidTable::make(name, size, unit, std::move(rows));
      } else {
        resolve_error(where + ": unknown kind \"" + kind + "\"");
      }
    }
  }

  void sets(const json& sec) {
    for (const auto& [name, j] : sec.items()) s.sets[name] = uint_value(j, "set \"" + name + "\"");
  }

  // Array entries {"kind", "param", "name"?} are named kind(param) by default.
  void monads(const json& sec) {
    if (sec.is_array()) {
      json named = json::object();
      for (const auto& e : sec) {
        if (!e.is_object()) parse_error("monad entries must be objects");
        json m = e;
        std::string name = str_field(e, "kind", "monad");
        if (e.contains("param")) {
          const json& p = e.at("param");
          const std::string ps = p.is_string() ? p.get<std::string>() : p.dump();
          name += "(" + ps + ")";
          m[str_field(e, "kind", "monad") == "writer" ? "monoid" : "set"] = p;
        }
        if (e.contains("name")) name = str_field(e, "name", "monad");
        named[name] = m;
      }
      monads(named);
      return;
    }
    if (!sec.is_object()) parse_error("\"monads\" must be an object or an array");
    for (const auto& [name, j] : sec.items()) {
      const std::string where = "monad \"" + name + "\"";
      const std::string kind = str_field(j, "kind", where);
      MonadRecipe recipe{kind, "", 0};
      MonadData m;
      if (kind == "writer") {
        recipe.monoid = str_field(j, "monoid", where);
        m = writer(lookup(s.monoids, recipe.monoid, "monoid"));
      } else if (kind == "either") {
        recipe.size = set_size(j, where);
        m = either(recipe.size);
      } else if (kind == "reader") {
        recipe.size = set_size(j, where);
        m = reader(recipe.size);
      } else if (kind == "state") {
        recipe.size = set_size(j, where);
        m = state(recipe.size);
      } else if (kind == "maybe") {
        m = maybe();
      } else if (kind == "identity") {
        m = identity_monad();
      } else {
        resolve_error(where + ": unknown kind \"" + kind + "\"");
      }
      s.monads[name] = m;
      recipes[name] = recipe;
    }
  }

  DistLawData canonical(const std::string& outer, const std::string& inner) {
    const MonadRecipe& rc = lookup(recipes, outer, "monad");
    const MonadData& t = lookup(s.monads, inner, "monad");
    if (rc.kind == "writer") return dwriter(lookup(s.monoids, rc.monoid, "monoid"), t);
    if (rc.kind == "either") return deither(rc.size, t);
    resolve_error("no canonical law crossing \"" + outer + "\" over \"" + inner + "\"");
  }

  void laws(const json& sec) {
    for (const auto& [name, j] : sec.items()) {
      const std::string where = "law \"" + name + "\"";
      const std::string kind = str_field(j, "kind", where);
      const MonadData& t = lookup(s.monads, str_field(j, "monad", where), "monad");
      if (kind == "dwriter") {
        s.laws[name] = dwriter(lookup(s.monoids, str_field(j, "monoid", where), "monoid"), t);
      } else if (kind == "deither") {
        s.laws[name] = deither(set_size(j, where), t);
      } else {
        resolve_error(where + ": unknown kind \"" + kind + "\"");
      }
    }
  }

  // {"monads": [T1, ..., Tn], "laws": "canonical" | {"i,j": law}}
  void nfold(const json& sec) {
    for (const auto& [name, j] : sec.items()) {
      const std::string where = "nfold \"" + name + "\"";
      const json& ms = field(j, "monads", where);
      if (!ms.is_array()) parse_error(where + ": \"monads\" must be an array");
      NFoldSystem sys;
      std::vector<std::string> names;
      for (const auto& m : ms) {
        if (!m.is_string()) parse_error(where + ": monad names must be strings");
        names.push_back(m.get<std::string>());
        sys.monads.push_back(lookup(s.monads, names.back(), "monad"));
      }
      sys.n = static_cast<int>(names.size());
      if (sys.n > 4) resolve_error(where + ": at most 4 monads are supported");
      const json& ls = j.contains("laws") ? j.at("laws") : json("canonical");
      for (int a = 1; a <= sys.n; ++a)
        for (int b = a + 1; b <= sys.n; ++b) {
          if (ls.is_string() && ls.get<std::string>() == "canonical") {
            sys.laws[{a, b}] = canonical(names[a - 1], names[b - 1]);
          } else if (ls.is_object()) {
            const std::string key = std::to_string(a) + "," + std::to_string(b);
            const json& v = field(ls, key, where + " laws");
            if (!v.is_string()) parse_error(where + ": law names must be strings");
            sys.laws[{a, b}] = lookup(s.laws, v.get<std::string>(), "law");
          } else {
            parse_error(where + ": \"laws\" must be \"canonical\" or an object");
          }
        }
      validate_nfold(sys);
      s.nfold[name] = std::move(sys);
    }
  }

  void suites(const json& j) {
    if (!j.is_array()) parse_error("\"suites\" must be an array");
    for (const auto& e : j) {
      if (!e.is_object()) parse_error("suite entries must be objects");
      SuiteRequest r;
      r.kind = str_field(e, "kind", "suite");
      r.params = e;
      r.target = e.contains("target") ? str_field(e, "target", "suite " + r.kind) : "";
      s.suites.push_back(std::move(r));
    }
  }
};

void check_targets(const Scenario& s, const SuiteRequest& r) {
  const std::string& k = r.kind;
  if (k == "monad" || k == "strength") {
    lookup(s.monads, r.target, "monad");
  } else if (k == "dist" || k == "compose" || k == "mnd-in-mnd") {
    lookup(s.laws, r.target, "law");
  } else if (k == "nfold" || k == "relations") {
    lookup(s.nfold, r.target, "nfold system");
  } else if (k == "lift-writer") {
    lookup(s.monoids, str_field(r.params, "monoid", "suite lift-writer"), "monoid");
    lookup(s.monads, r.target, "monad");
  } else if (k == "lift-coslice") {
    lookup(s.monads, r.target, "monad");
  } else if (k == "classifier") {
    if (r.params.contains("monads")) {
      if (!r.params.at("monads").is_array()) parse_error("suite classifier: \"monads\" must be an array");
      for (const auto& m : r.params.at("monads")) {
        if (!m.is_string()) parse_error("suite classifier: monad names must be strings");
        lookup(s.monads, m.get<std::string>(), "monad");
      }
    }
  } else if (k != "cocartesian" && k != "modules-coslice" && k != "duality" && k != "gray") {
    resolve_error("unknown suite kind \"" + k + "\"");
  }
}

CheckReport cocartesian_report(std::uint32_t a) {
  const CocartesianMonoid c = unique_cocartesian_monoid(a);
  CheckReport rep;
  rep.suite = "cocartesian";
  CheckInstance u = make_instance("cocartesian.unique");
  u.pass = c.unique;
  if (!u.pass) u.witness = std::to_string(c.lawful) + " lawful of " + std::to_string(c.candidates);
  CheckInstance d = make_instance("cocartesian.codiagonal");
  d.pass = c.is_codiagonal;
  if (!d.pass) d.witness = "unique structure is not the codiagonal";
  rep.add(u);
  rep.add(d);
  return rep;
}

CheckReport run_one(const Scenario& s, const SuiteRequest& r, const CheckOptions& opt) {
  const std::string& k = r.kind;
  const std::string where = "suite " + k;
  const json& p = r.params;
  if (k == "monad") return check_monad(s.monads.at(r.target), opt);
  if (k == "strength") return strength_enrichment_roundtrip(s.monads.at(r.target).functor, opt.max_set_size);
  if (k == "dist") return check_dist_law(s.laws.at(r.target), opt);
  if (k == "compose") return composition_suite(s.laws.at(r.target), opt);
  if (k == "mnd-in-mnd") {
    CheckOptions mopt = opt;
    mopt.oracle = bool_field(p, "oracle", where, true);
    return mnd_in_mnd_suite(s.laws.at(r.target), bool_field(p, "mutations", where, true), mopt);
  }
  if (k == "nfold") return check_nfold(s.nfold.at(r.target), opt);
  if (k == "relations") {
    const NFoldSystem& sys = s.nfold.at(r.target);
    return check_relations(encode_pdist(sys), mnd_power(terminal_presentation(), sys.n), opt);
  }
  if (k == "lift-writer") {
    const MonoidTable& m = s.monoids.at(str_field(p, "monoid", where));
    return lift_writer_modules(m, s.monads.at(r.target), default_writer_samples(m), opt);
  }
  if (k == "lift-coslice") {
    const std::uint32_t a = uint_field(p, "set", where, 1);
    const MonadData& t = s.monads.at(r.target);
    const auto objs = default_coslice_samples(a);
    CheckReport rep = lift_coslice(a, t.functor, t.unit, t.mult, objs, coslice_morphisms(objs), opt);
    rep.add(either_lift_law_coherence(a, t, opt));
    return rep;
  }
  if (k == "cocartesian") return cocartesian_report(uint_field(p, "set", where, 1));
  if (k == "modules-coslice") return modules_coslice_iso(uint_field(p, "set", where, 1), uint_field(p, "bound", where, 2));
  if (k == "duality") return duality_suite(static_cast<int>(uint_field(p, "max", where, 5)));
  if (k == "gray") return gray_counts_suite(static_cast<int>(uint_field(p, "max", where, 4)));
  if (k == "classifier") {
    std::vector<MonadData> ms;
    if (p.contains("monads"))
      for (const auto& m : p.at("monads")) ms.push_back(s.monads.at(m.get<std::string>()));
    return classifier_suite(static_cast<int>(uint_field(p, "max", where, 4)), ms);
  }
  resolve_error("unknown suite kind \"" + k + "\"");
}

}  // namespace

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) parse_error("scenario must be a JSON object");
  Builder b;
  try {
    if (j.contains("name")) b.s.name = str_field(j, "name", "scenario");
    b.s.max_set_size = uint_field(j, "max_set_size", "scenario", 3);
    if (b.s.max_set_size < 1) resolve_error("max_set_size must be at least 1");
    if (j.contains("report")) b.s.report = str_field(j, "report", "scenario");
    b.monoids(object_section(j, "monoids"));
    b.sets(object_section(j, "sets"));
    if (j.contains("monads")) b.monads(j.at("monads"));
    b.monads(object_section(j, "parameter_monads"));
    b.laws(object_section(j, "laws"));
    b.nfold(object_section(j, "nfold"));
    b.nfold(object_section(j, "triples"));
    if (j.contains("suites")) b.suites(j.at("suites"));
    for (const auto& r : b.s.suites) check_targets(b.s, r);
  } catch (const ScenarioParseError&) {
    throw;
  } catch (const ScenarioResolutionError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioParseError(e.what());
  } catch (const std::exception& e) {
    throw ScenarioResolutionError(e.what());
  }
  return std::move(b.s);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioParseError(path + ": " + e.what());
  }
  Scenario s = parse_scenario(j);
  if (!j.contains("name")) {
    std::string stem = path.substr(path.find_last_of('/') + 1);
    s.name = stem.substr(0, stem.rfind('.'));
  }
  return s;
}

CheckReport run_scenario(const Scenario& s) {
  CheckOptions opt;
  opt.max_set_size = s.max_set_size;
  CheckReport rep;
  rep.suite = s.name;
  for (const auto& r : s.suites) {
    const std::string prefix = r.target.empty() ? r.kind : r.kind + ":" + r.target;
    try {
      rep.merge(run_one(s, r, opt), prefix);
    } catch (const ScenarioResolutionError&) {
      throw;
    } catch (const std::exception& e) {
      throw ScenarioResolutionError(prefix + ": " + e.what());
    }
  }
  rep.sort_by_tag();
  return rep;
}

}  // namespace graydist
