#include "bce/json_io.hpp"

#include "bce/error.hpp"

namespace bce {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("JSON: missing key '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(std::string("JSON: '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json coeff_to_json(const Coeff& c) {
  return std::visit(overloaded{
                        [](const Int& x) { return Json(to_string(x)); },
                        [](const Rat& x) { return Json(to_string(x)); },
                        [](const FpValue& x) { return Json(x.v); },
                        [](const FqValue& x) { return Json(x.v); },
                        [](const SqrtRational& x) {
                          Json arr = Json::array();
                          for (const auto& [s, q] : x.terms()) {
                            arr.push_back({{"s", to_string(s)}, {"q", to_string(q)}});
                          }
                          return arr;
                        },
                    },
                    c.value());
}

Coeff coeff_from_json(const Ring& ring, const Json& j) {
  switch (ring.kind()) {
    case RingKind::Integer:
      if (!j.is_string()) throw Error("JSON: integer coefficients are strings");
      return Coeff(parse_int(j.get<std::string>()));
    case RingKind::Rational:
      if (!j.is_string()) throw Error("JSON: rational coefficients are strings");
      return Coeff(parse_rat(j.get<std::string>()));
    case RingKind::PrimeField: {
      if (!j.is_number_unsigned()) throw Error("JSON: F_p coefficients are residues");
      auto v = j.get<Residue>();
      if (v >= ring.characteristic()) throw Error("JSON: residue out of range");
      return Coeff(FpValue{ring.characteristic(), v});
    }
    case RingKind::ExtensionField: {
      if (!j.is_array() || j.size() != ring.field()->k()) {
        throw Error("JSON: F_q coefficients are lists of " + std::to_string(ring.field()->k()) + " residues");
      }
      ExtensionField::Elem v;
      for (const auto& d : j) {
        if (!d.is_number_unsigned() || d.get<Residue>() >= ring.characteristic()) {
          throw Error("JSON: bad residue in F_q coefficient");
        }
        v.push_back(d.get<Residue>());
      }
      return Coeff(FqValue{ring.field(), v});
    }
    case RingKind::SqrtRational: {
      if (!j.is_array()) throw Error("JSON: sqrt coefficients are lists of {s, q}");
      SqrtRational out;
      for (const auto& t : j) {
        out = out + SqrtRational::term(parse_int(string_field(t, "s")), parse_rat(string_field(t, "q")));
      }
      return Coeff(out);
    }
  }
  throw Error("unreachable");
}

Json to_json(const GroupRingElem& x) {
  Json terms = Json::array();
  for (const auto& [r, c] : x.terms()) terms.push_back({{"r", r.str()}, {"c", coeff_to_json(c)}});
  return {{"ring", x.ring().tag()}, {"terms", terms}};
}

namespace {

template <class Mono>
Json monomials_to_json(const LinComb<Mono>& x, const char* basis) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back({{"r", m.r.str()}, {"deg", m.deg.str()}, {"c", coeff_to_json(c)}});
  }
  return {{"ring", x.ring().tag()}, {"basis", basis}, {"terms", terms}};
}

template <class Mono>
LinComb<Mono> monomials_from_json(const Ring& ring, const Json& terms) {
  LinComb<Mono> out(ring);
  for (const auto& t : terms) {
    PosRational deg = PosRational::parse(string_field(t, "deg"));
    out.add_term(Mono{QmodZ::parse(string_field(t, "r")), deg}, coeff_from_json(ring, field(t, "c")));
  }
  return out;
}

}  // namespace

Json to_json(const BCElem& x) { return monomials_to_json(x, "mu"); }

Json to_json(const HeckeElem& x) { return monomials_to_json(x, "nu"); }

Json to_json(const CpElem& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms()) {
    terms.push_back({{"k", key.k}, {"a", key.a.str()}, {"c", coeff_to_json(c)}});
  }
  return {{"ring", x.ring().tag()}, {"algebra", "cp"}, {"terms", terms}};
}

Json to_json(const AlgebraValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const TriangularMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.basis.size(); ++i) {
    Json entries = Json::array();
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
      if (m.entries[i][j].is_zero()) continue;
      entries.push_back({{"b", m.basis[j].str()}, {"c", coeff_to_json(m.entries[i][j])}});
    }
    rows.push_back({{"a", m.basis[i].str()}, {"entries", entries}});
  }
  return {{"p", m.p}, {"level", m.level}, {"rows", rows}};
}

AlgebraValue from_json(const Json& j) {
  const Ring ring = Ring::parse(string_field(j, "ring"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw Error("JSON: 'terms' must be an array");
  if (j.contains("algebra")) {
    if (string_field(j, "algebra") != "cp") throw Error("JSON: unknown algebra");
    const Residue p = char_of(ring);
    CpElem out(ring);
    for (const auto& t : terms) {
      const Json& k = field(t, "k");
      if (!k.is_number_integer()) throw Error("JSON: 'k' must be an integer");
      out.add_term(CpKey{k.get<long>(), PAdicFrac::parse(p, string_field(t, "a"))},
                   coeff_from_json(ring, field(t, "c")));
    }
    return out;
  }
  if (j.contains("basis")) {
    const std::string basis = string_field(j, "basis");
    if (basis == "mu") return monomials_from_json<BCMonomial>(ring, terms);
    if (basis == "nu") return monomials_from_json<NuMonomial>(ring, terms);
    throw Error("JSON: basis must be 'mu' or 'nu'");
  }
  GroupRingElem out(ring);
  for (const auto& t : terms) {
    out.add_term(QmodZ::parse(string_field(t, "r")), coeff_from_json(ring, field(t, "c")));
  }
  return out;
}

}  // namespace bce
