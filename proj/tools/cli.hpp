#pragma once

// Command-line front end. dispatch() parses argv, runs one library operation
// and writes text or JSON to the given streams; the return value is the exit
// code (0 ok, 1 usage, 2 cap exceeded, 3 invariant violation).

#include "prvkit/acceptance.hpp"
#include "prvkit/prvkit.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ostream>

namespace prvkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "1";

enum ExitCode : int { kOk = 0, kUsage = 1, kCap = 2, kInvariant = 3 };

struct Options {
  bool json = false;
  unsigned long long max_dim = kDefaultMaxDim;
  std::size_t max_weyl = kDefaultWeylCap;
  unsigned threads = 1;
  bool color = false;

  TensorCaps caps() const {
    TensorCaps c;
    c.max_dim = max_dim;
    c.max_weyl = max_weyl;
    c.realize_cap = std::min<unsigned long long>(c.realize_cap, max_dim);
    return c;
  }
};

namespace detail {

/// Integral coordinates become numbers, others "p/q" strings.
inline Json coords(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
      a.push_back(c.get_num().get_si());
    else
      a.push_back(c.get_str());
  }
  return a;
}
inline Json coords(const IVec& v) { return coords(Weight::from_ints(v)); }

inline Json record(const char* command, const RootSystem* rs) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  if (rs) j["type"] = rs->label();
  return j;
}

inline Weight weight_arg(const RootSystem& rs, const std::string& text, const char* what) {
  Weight w = parse_weight(text);
  if (w.rank() != rs.rank())
    throw UsageError(std::string(what) + " '" + text + "' needs " + std::to_string(rs.rank()) + " coordinates");
  return w;
}

inline IVec int_arg(const RootSystem& rs, const std::string& text, const char* what) {
  return weight_arg(rs, text, what).to_ints();
}

inline std::string vname(const IVec& v) { return "V(" + format_ivec(v) + ")"; }

/// Components in descending order, "2 V(1,1) + V(0,0)".
inline std::string decomposition_text(const Decomposition& d) {
  std::string s;
  for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it) {
    if (!s.empty()) s += " + ";
    if (it->second != 1) s += std::to_string(it->second) + " ";
    s += vname(it->first);
  }
  return s.empty() ? "0" : s;
}

inline Json decomposition_json(const Decomposition& d) {
  Json j = Json::object();
  for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it) j[format_ivec(it->first)] = it->second;
  return j;
}

inline std::string poly_text(const Poly& p) { return p.to_string(); }

inline Json det_json(const DetPolynomial& d) {
  Json j;
  j["scalar"] = d.scalar.get_str();
  Json f = Json::array();
  for (const auto& [p, e] : d.factors) f.push_back({{"factor", poly_text(p)}, {"exponent", e}});
  j["factors"] = f;
  j["expanded"] = poly_text(d.expanded);
  j["degree"] = d.degree();
  return j;
}

inline std::string det_factored_text(const DetPolynomial& d) {
  std::string s = d.scalar.get_str();
  for (const auto& [p, e] : d.factors) {
    s += " * (" + poly_text(p) + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline WeylElement word_arg(const RootSystem& rs, const std::string& text) {
  std::vector<int> word;
  for (const auto& part : split(text, ',')) {
    std::string t = trim(part);
    if (t.empty()) continue;
    if (t == "e") continue;
    if (t[0] == 's') t = t.substr(1);
    long i = 0;
    try {
      std::size_t used = 0;
      i = std::stol(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::logic_error&) {
      throw UsageError("malformed Weyl word '" + text + "'");
    }
    if (i < 1 || i > static_cast<long>(rs.rank())) throw UsageError("simple reflection index out of range in '" + text + "'");
    word.push_back(static_cast<int>(i - 1));
  }
  return weyl_from_word(rs, word);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline int cmd_roots(const Options& o, const std::string& type, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  if (o.json) {
    Json j = detail::record("roots", &rs);
    j["rank"] = rs.rank();
    j["cartan"] = rs.cartan();
    j["positive_roots"] = rs.positive_roots();
    Json co = Json::array();
    for (std::size_t k = 0; k < rs.num_positive(); ++k) co.push_back(rs.coroot(k));
    j["coroots"] = co;
    j["highest_roots"] = rs.highest_roots();
    j["rho"] = rs.rho_ints();
    j["weyl_order"] = rs.weyl_order();
    out << j.dump() << "\n";
    return kOk;
  }
  out << "type " << rs.label() << ", rank " << rs.rank() << ", |W| = " << rs.weyl_order() << "\n";
  out << "cartan matrix (row i = alpha_j(h_i)):\n";
  for (const auto& row : rs.cartan()) {
    out << " ";
    for (long c : row) out << std::setw(4) << c;
    out << "\n";
  }
  out << "positive roots (simple-root coordinates) and coroots:\n";
  for (std::size_t k = 0; k < rs.num_positive(); ++k)
    out << "  " << std::setw(3) << k + 1 << "  (" << format_ivec(rs.positive_roots()[k]) << ")  h = ("
        << format_ivec(rs.coroot(k)) << ")\n";
  out << "rho = " << format_ivec(rs.rho_ints()) << "\n";
  return kOk;
}

inline int cmd_weyl(const Options& o, const std::string& type, bool list, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  const WeylGroup& W = enumerate_weyl(rs, o.max_weyl);
  if (o.json) {
    Json j = detail::record("weyl", &rs);
    j["order"] = W.size();
    j["longest"] = W.longest().word_string();
    j["longest_length"] = W.longest().length();
    if (list) {
      Json els = Json::array();
      for (const auto& w : W.elements()) els.push_back({{"word", w.word_string()}, {"length", w.length()}});
      j["elements"] = els;
    }
    out << j.dump() << "\n";
    return kOk;
  }
  out << "|W| = " << W.size() << ", longest element " << W.longest().word_string() << " (length "
      << W.longest().length() << ")\n";
  if (list)
    for (std::size_t k = 0; k < W.size(); ++k)
      out << "  " << std::setw(5) << k << "  " << std::setw(3) << W[k].length() << "  " << W[k].word_string() << "\n";
  return kOk;
}

inline int cmd_mult(const Options& o, const std::string& type, const std::string& ls, const std::string& ms,
                    std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight lambda = detail::weight_arg(rs, ls, "lambda");
  Weight mu = detail::weight_arg(rs, ms, "weight");
  require_dominant(rs, lambda, "lambda");
  long f = freudenthal_multiplicity(rs, lambda, mu);
  std::optional<long> k;
  if (rs.weyl_order() <= o.max_weyl) {
    k = mu.is_integral() ? kostant_multiplicity(rs, lambda.to_ints(), mu.to_ints(), o.max_weyl) : 0;
    ensure(*k == f, "Kostant and Freudenthal multiplicities disagree");
  }
  if (o.json) {
    Json j = detail::record("mult", &rs);
    j["lambda"] = detail::coords(lambda);
    j["weight"] = detail::coords(mu);
    j["multiplicity"] = f;
    j["kostant_checked"] = k.has_value();
    out << j.dump() << "\n";
    return kOk;
  }
  out << "dim V(" << lambda.to_string() << ")_(" << mu.to_string() << ") = " << f << "\n";
  return kOk;
}

inline int cmd_char(const Options& o, const std::string& type, const std::string& ls, bool full, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  IVec l = require_dominant(rs, detail::weight_arg(rs, ls, "lambda"), "lambda");
  auto dim = weyl_dimension_exact(rs, Weight::from_ints(l));
  if (dim > mpz_class(std::to_string(o.max_dim)))
    throw CapExceeded("dim V(" + format_ivec(l) + ") = " + dim.get_str() + " exceeds cap " + std::to_string(o.max_dim));
  auto table = dominant_multiplicities(rs, l);
  std::optional<Character> ch;
  if (full) ch = character_of(rs, Weight::from_ints(l), o.max_dim);
  if (o.json) {
    Json j = detail::record("char", &rs);
    j["lambda"] = l;
    j["dimension"] = dim.get_str();
    Json dom = Json::array();
    for (auto it = table->rbegin(); it != table->rend(); ++it)
      dom.push_back({{"weight", it->first}, {"multiplicity", it->second}, {"orbit_size", weyl_orbit(rs, it->first).size()}});
    j["dominant"] = dom;
    if (ch) {
      Json all = Json::object();
      for (auto it = ch->entries.rbegin(); it != ch->entries.rend(); ++it) all[format_ivec(it->first)] = it->second;
      j["weights"] = all;
    }
    out << j.dump() << "\n";
    return kOk;
  }
  out << "dim V(" << format_ivec(l) << ") = " << dim.get_str() << "\n";
  out << "dominant weights (multiplicity, orbit size):\n";
  for (auto it = table->rbegin(); it != table->rend(); ++it)
    out << "  " << std::setw(14) << format_ivec(it->first) << "  " << std::setw(6) << it->second << "  "
        << weyl_orbit(rs, it->first).size() << "\n";
  if (ch) {
    out << "all weights:\n";
    for (auto it = ch->entries.rbegin(); it != ch->entries.rend(); ++it)
      out << "  " << std::setw(14) << format_ivec(it->first) << "  " << it->second << "\n";
  }
  return kOk;
}

inline int cmd_decompose(const Options& o, const std::string& type, const std::string& ls, const std::string& ms,
                         const std::string& method, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight lambda = detail::weight_arg(rs, ls, "lambda"), mu = detail::weight_arg(rs, ms, "mu");
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu");
  TensorCaps caps = o.caps();
  std::string head = detail::vname(l) + " x " + detail::vname(m);
  if (method == "all") {
    std::vector<Decomposition> ds;
    for (Method meth : {Method::Character, Method::Steinberg, Method::Klimyk, Method::Prv})
      ds.push_back(decompose(rs, lambda, mu, meth, caps));
    bool agree = true;
    for (const auto& d : ds) agree = agree && d == ds.front();
    if (o.json) {
      Json j = detail::record("decompose", &rs);
      j["lambda"] = l;
      j["mu"] = m;
      j["method"] = "all";
      Json per = Json::object();
      for (const auto& d : ds) per[method_name(d.method)] = detail::decomposition_json(d);
      j["methods"] = per;
      j["agree"] = agree;
      j["decomposition"] = detail::decomposition_json(ds.front());
      out << j.dump() << "\n";
    } else {
      out << head << " in " << rs.label() << "\n";
      for (const auto& d : ds)
        out << "  " << std::left << std::setw(10) << method_name(d.method) << std::right << " "
            << detail::decomposition_text(d) << "\n";
      out << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }
    return agree ? kOk : kInvariant;
  }
  Decomposition d = decompose(rs, lambda, mu, parse_method(method), caps);
  if (o.json) {
    Json j = detail::record("decompose", &rs);
    j["lambda"] = l;
    j["mu"] = m;
    j["method"] = method_name(d.method);
    j["decomposition"] = detail::decomposition_json(d);
    out << j.dump() << "\n";
    return kOk;
  }
  out << head << " = " << detail::decomposition_text(d) << "\n";
  return kOk;
}

inline int cmd_minimal_type(const Options& o, const std::string& type, const std::string& ls, const std::string& ms,
                            std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight lambda = detail::weight_arg(rs, ls, "lambda"), mu = detail::weight_arg(rs, ms, "mu");
  ExtremeTypes t = extreme_types(rs, lambda, mu);
  if (o.json) {
    Json j = detail::record("minimal-type", &rs);
    j["lambda"] = detail::coords(lambda);
    j["mu"] = detail::coords(mu);
    j["minimal_type"] = t.minimal;
    j["cartan_component"] = t.cartan;
    out << j.dump() << "\n";
    return kOk;
  }
  out << format_ivec(t.minimal) << "\n";
  return kOk;
}

inline int cmd_prv(const Options& o, const std::string& type, const std::string& ls, const std::string& ms,
                   const std::string& word, bool kprv, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight lambda = detail::weight_arg(rs, ls, "lambda"), mu = detail::weight_arg(rs, ms, "mu");
  require_dominant(rs, lambda, "lambda");
  require_dominant(rs, mu, "mu");
  TensorCaps caps = o.caps();
  const WeylGroup& W = enumerate_weyl(rs, o.max_weyl);
  Decomposition full = decompose(rs, lambda, mu, Method::Klimyk, caps);
  std::vector<WeylElement> ws;
  if (word.empty())
    ws = W.elements();
  else
    ws.push_back(detail::word_arg(rs, word));
  Json rows = Json::array();
  bool ok = true;
  if (!o.json)
    out << std::left << std::setw(16) << "w" << std::setw(14) << "lambda+w mu" << std::setw(14) << "component"
        << std::setw(6) << "mult" << std::setw(7) << "bound" << "kprv" << std::right << "\n";
  for (const auto& w : ws) {
    GeneralizedPrv g = generalized_prv(rs, lambda, mu, w, full, caps, kprv);
    IVec x = lambda.to_ints() + w.matrix.apply(mu.to_ints());
    bool row_ok = g.mult >= std::max(1L, g.lower_bound) && (!g.w_dominant || g.mult == 1);
    ok = ok && row_ok;
    if (o.json) {
      Json r;
      r["w"] = w.word_string();
      r["lambda_plus_w_mu"] = x;
      r["component"] = g.component;
      r["multiplicity"] = g.mult;
      r["lower_bound"] = g.lower_bound;
      r["dominant"] = g.w_dominant;
      r["kprv"] = g.kprv_mult ? Json(*g.kprv_mult) : Json(nullptr);
      rows.push_back(r);
    } else {
      out << std::left << std::setw(16) << w.word_string() << std::setw(14) << format_ivec(x) << std::setw(14)
          << format_ivec(g.component) << std::setw(6) << g.mult << std::setw(7) << g.lower_bound
          << (g.kprv_mult ? std::to_string(*g.kprv_mult) : std::string("-")) << std::right << "\n";
    }
  }
  if (o.json) {
    Json j = detail::record("prv", &rs);
    j["lambda"] = detail::coords(lambda);
    j["mu"] = detail::coords(mu);
    j["rows"] = rows;
    j["bounds_hold"] = ok;
    out << j.dump() << "\n";
  } else {
    out << "bounds hold: " << (ok ? "yes" : "NO") << "\n";
  }
  return ok ? kOk : kInvariant;
}

inline int cmd_shapovalov(const Options& o, const std::string& type, const std::string& nus, const std::string& mode,
                          std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  IVec nu = detail::int_arg(rs, nus, "nu");
  if (!all_nonnegative(nu)) throw UsageError("nu must be a nonnegative combination of simple roots");
  if (mode != "direct" && mode != "formula" && mode != "both") throw UsageError("unknown mode '" + mode + "'");
  Enveloping U(rs);
  std::optional<DetPolynomial> direct, formula;
  if (mode != "formula") direct = shapovalov_det(U, nu, DetMode::Direct);
  if (mode != "direct") formula = shapovalov_det(U, nu, DetMode::Formula);
  std::optional<Rational> ratio;
  bool proportional = true;
  if (direct && formula) {
    auto r = shapovalov_ratio(U, nu);
    proportional = r.has_value();
    ratio = r;
  }
  if (o.json) {
    Json j = detail::record("shapovalov-det", &rs);
    j["nu"] = nu;
    if (direct) j["direct"] = direct->expanded.to_string();
    if (formula) j["formula"] = detail::det_json(*formula);
    if (direct && formula) j["ratio"] = ratio ? Json(ratio->get_str()) : Json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << "Shapovalov determinant on (U n-)_{-(" << format_ivec(nu) << ")} in " << rs.label() << "\n";
    if (direct) out << "  direct:   " << direct->expanded.to_string() << "\n";
    if (formula) {
      out << "  formula:  " << detail::det_factored_text(*formula) << "\n";
      out << "  expanded: " << formula->expanded.to_string() << "\n";
    }
    if (direct && formula) out << "  direct / formula = " << (ratio ? ratio->get_str() : std::string("not constant")) << "\n";
  }
  return proportional ? kOk : kInvariant;
}

inline int cmd_prv_det(const Options& o, const std::string& type, const std::string& ms, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight mu = detail::weight_arg(rs, ms, "mu");
  PrvDetResult p = prv_det(rs, mu, o.caps().realize_cap);
  if (o.json) {
    Json j = detail::record("prv-det", &rs);
    j["mu"] = detail::coords(mu);
    j["empty"] = p.empty;
    j["zero_weight_dim"] = p.zero_dim;
    Json sp = Json::array();
    for (std::size_t k = 0; k < p.spectra.size(); ++k) {
      Json m = Json::object();
      for (const auto& [jj, c] : p.spectra[k].mult) m[std::to_string(jj)] = c;
      sp.push_back({{"root", rs.positive_roots()[k]}, {"m", p.spectra[k].m_total}, {"spectrum", m}});
    }
    j["spectra"] = sp;
    j["kprime"] = detail::det_json(p.kprime);
    j["k"] = detail::det_json(p.k);
    j["sum_m"] = p.sum_m;
    j["sum_jm"] = p.sum_jm;
    out << j.dump() << "\n";
    return kOk;
  }
  if (p.empty) {
    out << "V(" << mu.to_string() << ")_0 = 0: the PRV determinant is empty\n";
    return kOk;
  }
  out << "dim V(" << mu.to_string() << ")_0 = " << p.zero_dim << "\n";
  out << "f_alpha e_alpha spectra on the zero weight space (j: multiplicity of j(j+1)):\n";
  for (std::size_t k = 0; k < p.spectra.size(); ++k) {
    out << "  (" << format_ivec(rs.positive_roots()[k]) << ")  m = " << p.spectra[k].m_total << "  ";
    bool first = true;
    for (const auto& [jj, c] : p.spectra[k].mult) {
      out << (first ? "" : ", ") << jj << ":" << c;
      first = false;
    }
    out << "\n";
  }
  out << "K' = " << detail::det_factored_text(p.kprime) << "\n";
  out << "   = " << p.kprime.expanded.to_string() << "  (degree " << p.kprime.degree() << ")\n";
  out << "K  = " << p.k.expanded.to_string() << "  (degree " << p.k.degree() << ")\n";
  return kOk;
}

inline int cmd_central_char(const Options& o, const std::string& type, const std::string& ls, unsigned power,
                            std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight lambda = detail::weight_arg(rs, ls, "lambda");
  if (power < 1) throw UsageError("--power must be at least 1");
  Enveloping U(rs);
  Casimir c = U.casimir();
  UElement z = U.pow(c.element, power);
  Rational value = central_character(U, lambda, z);
  CentralCharacterId id = central_character_id(rs, lambda);
  if (o.json) {
    Json j = detail::record("central-char", &rs);
    j["lambda"] = detail::coords(lambda);
    j["power"] = power;
    j["casimir_scale"] = c.scale.get_str();
    j["value"] = value.get_str();
    j["orbit_id"] = detail::coords(id.rep);
    out << j.dump() << "\n";
    return kOk;
  }
  out << "chi_lambda(Casimir^" << power << ") = " << value.get_str() << "  (Casimir scale " << c.scale.get_str()
      << ")\n";
  out << "twisted-orbit label: " << id.to_string() << "\n";
  return kOk;
}

// hc subcommands

inline Json params_json(const HCParams& p) { return {{"lambda", detail::coords(p.lambda)}, {"nu", detail::coords(p.nu)}}; }

inline std::string params_text(const HCParams& p) { return "(" + p.lambda.to_string() + "; " + p.nu.to_string() + ")"; }

inline Json inf_char_json(const CentralCharacterPair& c) {
  return {{"left", detail::coords(c.left.rep)}, {"right", detail::coords(c.right.rep)}};
}

inline HCParams params_arg(const RootSystem& rs, const std::string& l, const std::string& n) {
  HCParams p{detail::weight_arg(rs, l, "lambda"), detail::weight_arg(rs, n, "nu")};
  check_params(rs, p);
  return p;
}

inline int cmd_hc_invariants(const Options& o, const std::string& type, const std::string& l, const std::string& n,
                             std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  HCParams p = params_arg(rs, l, n);
  HCInvariants inv = invariants(rs, p);
  if (o.json) {
    Json j = detail::record("hc invariants", &rs);
    j["params"] = params_json(p);
    j["minimal_type"] = inv.minimal_type;
    j["inf_char"] = inf_char_json(inv.inf_char);
    out << j.dump() << "\n";
    return kOk;
  }
  out << "minimal type: " << format_ivec(inv.minimal_type) << "\n";
  out << "infinitesimal character: (" << inv.inf_char.left.to_string() << ") x (" << inv.inf_char.right.to_string()
      << ")\n";
  return kOk;
}

inline int cmd_hc_equivalent(const Options& o, const std::string& type, const std::vector<std::string>& a,
                             std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  HCParams p = params_arg(rs, a[0], a[1]), q = params_arg(rs, a[2], a[3]);
  auto w = equivalent(rs, p, q, o.max_weyl);
  if (o.json) {
    Json j = detail::record("hc equivalent", &rs);
    j["p"] = params_json(p);
    j["q"] = params_json(q);
    j["equivalent"] = w.has_value();
    j["witness"] = w ? Json(w->word_string()) : Json(nullptr);
    out << j.dump() << "\n";
    return kOk;
  }
  if (w)
    out << "equivalent: q = w p with w = " << w->word_string() << "\n";
  else
    out << "not equivalent\n";
  return kOk;
}

inline int cmd_hc_finite_dim(const Options& o, const std::string& type, const std::string& l, const std::string& n,
                             std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  HCParams p = params_arg(rs, l, n);
  auto fd = finite_dimensional(rs, p);
  if (o.json) {
    Json j = detail::record("hc finite-dim", &rs);
    j["params"] = params_json(p);
    j["finite_dimensional"] = fd.has_value();
    if (fd) {
      j["lambda"] = fd->first;
      j["mu"] = fd->second;
    }
    out << j.dump() << "\n";
    return kOk;
  }
  if (fd)
    out << "finite-dimensional: " << detail::vname(fd->first) << " x " << detail::vname(fd->second) << "\n";
  else
    out << "not finite-dimensional\n";
  return kOk;
}

inline int cmd_hc_class_zero(const Options& o, const std::string& type, const std::string& l, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight lambda = detail::weight_arg(rs, l, "lambda");
  ClassZeroReport rep = class_zero(rs, lambda, o.caps());
  if (o.json) {
    Json j = detail::record("hc class-zero", &rs);
    j["lambda"] = detail::coords(lambda);
    j["complete"] = rep.complete;
    j["orbit_id"] = detail::coords(rep.canonical.rep);
    j["decomposition"] = rep.mults ? detail::decomposition_json(*rep.mults) : Json(nullptr);
    out << j.dump() << "\n";
    return kOk;
  }
  out << "complete: " << (rep.complete ? "yes" : "no") << "\n";
  out << "twisted-orbit label: " << rep.canonical.to_string() << "\n";
  if (rep.mults) out << "K-types of V(lambda) x V(lambda)*: " << detail::decomposition_text(*rep.mults) << "\n";
  return kOk;
}

inline int cmd_hc_isoclasses(const Options& o, const std::string& type, const std::string& l, const std::string& m,
                             std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  Weight lambda = detail::weight_arg(rs, l, "lambda"), mu = detail::weight_arg(rs, m, "mu");
  std::size_t n = isoclass_count(rs, lambda, mu, o.max_weyl);
  if (o.json) {
    Json j = detail::record("hc isoclasses", &rs);
    j["lambda"] = detail::coords(lambda);
    j["mu"] = detail::coords(mu);
    j["count"] = n;
    out << j.dump() << "\n";
    return kOk;
  }
  out << n << "\n";
  return kOk;
}

inline int cmd_hc_ktype_bound(const Options& o, const std::string& type, const std::string& l, const std::string& n,
                              const std::string& m, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  HCParams p = params_arg(rs, l, n);
  Weight mu = detail::weight_arg(rs, m, "mu");
  require_dominant(rs, mu, "mu");
  long b = ktype_bound(rs, p, mu);
  if (o.json) {
    Json j = detail::record("hc ktype-bound", &rs);
    j["params"] = params_json(p);
    j["mu"] = detail::coords(mu);
    j["bound"] = b;
    out << j.dump() << "\n";
    return kOk;
  }
  out << b << "\n";
  return kOk;
}

inline int cmd_hc_witness(const Options& o, const std::string& type, long lbox, long nbox, std::ostream& out) {
  RootSystem rs = RootSystem::build(type);
  if (lbox < 0 || nbox < 0) throw UsageError("search boxes must be nonnegative");
  auto w = find_nonuniqueness_witness(rs, lbox, nbox, o.max_weyl);
  if (o.json) {
    Json j = detail::record("hc witness", &rs);
    j["lambda_box"] = lbox;
    j["nu_box"] = nbox;
    j["found"] = w.has_value();
    if (w) {
      j["p"] = params_json(w->p);
      j["q"] = params_json(w->q);
      HCInvariants inv = invariants(rs, w->p);
      j["minimal_type"] = inv.minimal_type;
      j["inf_char"] = inf_char_json(inv.inf_char);
    }
    out << j.dump() << "\n";
    return kOk;
  }
  if (!w) {
    out << "no witness in the box\n";
    return kOk;
  }
  HCInvariants inv = invariants(rs, w->p);
  out << "inequivalent " << params_text(w->p) << " and " << params_text(w->q) << "\n";
  out << "share minimal type " << format_ivec(inv.minimal_type) << " and infinitesimal character ("
      << inv.inf_char.left.to_string() << ") x (" << inv.inf_char.right.to_string() << ")\n";
  return kOk;
}

inline int cmd_hc_sl2_omega(const Options& o, const std::string& l, const std::string& n, std::ostream& out) {
  Weight lambda = parse_weight(l), nu = parse_weight(n);
  if (lambda.rank() != 1 || nu.rank() != 1) throw UsageError("sl2-omega takes one-coordinate weights");
  Sl2OmegaResult r = sl2_omega(lambda, nu);
  auto names = sl2_omega_names();
  if (o.json) {
    Json j = detail::record("hc sl2-omega", nullptr);
    j["lambda"] = detail::coords(lambda);
    j["nu"] = detail::coords(nu);
    j["delta1"] = r.delta1.to_string(names);
    j["delta2"] = r.delta2.to_string(names);
    j["delta_bar"] = r.delta_bar.to_string(names);
    j["values"] = {r.v1.get_str(), r.v2.get_str(), r.vbar.get_str()};
    j["commutes"] = r.omega_commutes;
    out << j.dump() << "\n";
    return kOk;
  }
  out << "Delta1    -> " << r.delta1.to_string(names) << "  = " << r.v1.get_str() << "\n";
  out << "Delta2    -> " << r.delta2.to_string(names) << "  = " << r.v2.get_str() << "\n";
  out << "Deltabar  -> " << r.delta_bar.to_string(names) << "  = " << r.vbar.get_str() << "\n";
  return kOk;
}

inline int cmd_selftest(const Options& o, const std::vector<int>& ids_in, bool timing, std::ostream& out) {
  std::vector<int> ids = ids_in.empty() ? acceptance::all_ids() : ids_in;
  auto results = acceptance::run(ids, o.threads);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (o.json) {
    Json j = detail::record("selftest", nullptr);
    Json rs = Json::array();
    for (const auto& r : results) {
      Json x{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
      if (timing) x["seconds"] = r.seconds;
      rs.push_back(x);
    }
    j["criteria"] = rs;
    j["pass"] = all;
    out << j.dump() << "\n";
  } else {
    for (const auto& r : results) out << acceptance::format_line(r, o.color, timing) << "\n";
  }
  return all ? kOk : kInvariant;
}

// ---------------------------------------------------------------------------
// Dispatcher

inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color = false) {
  CLI::App app{"Exact computations with finite-dimensional and Harish-Chandra modules of semisimple Lie algebras",
               "prvkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  o.color = color;
  app.add_flag("--json", o.json, "Emit a JSON record");
  app.add_option("--max-dim", o.max_dim, "Dimension cap for characters and tensor products")->capture_default_str();
  app.add_option("--max-weyl", o.max_weyl, "Cap on the order of enumerated Weyl groups")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for selftest")->capture_default_str()->check(CLI::Range(1U, 256U));

  std::function<int()> action;
  std::string type, a1, a2, a3, method = "character", mode = "both", word;
  std::vector<std::string> four;
  bool flag = false;
  unsigned power = 1;
  long lbox = 3, nbox = 2;
  std::vector<int> ids;
  const std::string weight_help = "Weight \"a,b,...\" with rational entries p/q";

  auto type_opt = [&](CLI::App* s) { s->add_option("type", type, "Root system, e.g. A2, G2, A1xA1")->required(); };

  auto* roots = app.add_subcommand("roots", "Cartan matrix, positive roots, coroots, rho");
  type_opt(roots);
  roots->callback([&] { action = [&] { return cmd_roots(o, type, out); }; });

  auto* weyl = app.add_subcommand("weyl", "Weyl group order and longest element");
  type_opt(weyl);
  weyl->add_flag("--list", flag, "List all elements with reduced words");
  weyl->callback([&] { action = [&] { return cmd_weyl(o, type, flag, out); }; });

  auto* mult = app.add_subcommand("mult", "Weight multiplicity dim V(lambda)_mu");
  type_opt(mult);
  mult->add_option("lambda", a1, weight_help)->required();
  mult->add_option("weight", a2, weight_help)->required();
  mult->callback([&] { action = [&] { return cmd_mult(o, type, a1, a2, out); }; });

  auto* chr = app.add_subcommand("char", "Character of V(lambda)");
  type_opt(chr);
  chr->add_option("lambda", a1, weight_help)->required();
  chr->add_flag("--full", flag, "List every weight, not only the dominant ones");
  chr->callback([&] { action = [&] { return cmd_char(o, type, a1, flag, out); }; });

  auto* dec = app.add_subcommand("decompose", "Decompose V(lambda) x V(mu)");
  type_opt(dec);
  dec->add_option("lambda", a1, weight_help)->required();
  dec->add_option("mu", a2, weight_help)->required();
  dec->add_option("--method", method, "character, steinberg, klimyk, prv or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"character", "steinberg", "klimyk", "prv", "all"}));
  dec->callback([&] { action = [&] { return cmd_decompose(o, type, a1, a2, method, out); }; });

  auto* mt = app.add_subcommand("minimal-type", "Minimal component of V(lambda) x V(mu)");
  type_opt(mt);
  mt->add_option("lambda", a1, weight_help)->required();
  mt->add_option("mu", a2, weight_help)->required();
  mt->callback([&] { action = [&] { return cmd_minimal_type(o, type, a1, a2, out); }; });

  auto* prv = app.add_subcommand("prv", "Generalized PRV components lambda + w mu with multiplicities and bounds");
  type_opt(prv);
  prv->add_option("lambda", a1, weight_help)->required();
  prv->add_option("mu", a2, weight_help)->required();
  prv->add_option("--w", word, "One Weyl element as simple-reflection indices, e.g. 1,2 (default: all of W)");
  prv->add_flag("--kprv", flag, "Also compute the multiplicity in the submodule generated by v_lambda (x) v_{w mu}");
  prv->callback([&] { action = [&] { return cmd_prv(o, type, a1, a2, word, flag, out); }; });

  auto* sh = app.add_subcommand("shapovalov-det", "Shapovalov determinant on (U n-)_{-nu}, nu in simple-root coordinates");
  type_opt(sh);
  sh->add_option("nu", a1, "Nonnegative root-lattice vector in simple-root coordinates")->required();
  sh->add_option("--mode", mode, "direct, formula or both")->capture_default_str()->check(
      CLI::IsMember({"direct", "formula", "both"}));
  sh->callback([&] { action = [&] { return cmd_shapovalov(o, type, a1, mode, out); }; });

  auto* pd = app.add_subcommand("prv-det", "PRV determinant of V(mu)_0 from the zero-weight spectra");
  type_opt(pd);
  pd->add_option("mu", a1, weight_help)->required();
  pd->callback([&] { action = [&] { return cmd_prv_det(o, type, a1, out); }; });

  auto* cc = app.add_subcommand("central-char", "Central character of the Casimir (or a power) at lambda");
  type_opt(cc);
  cc->add_option("lambda", a1, weight_help)->required();
  cc->add_option("--power", power, "Power of the Casimir")->capture_default_str();
  cc->callback([&] { action = [&] { return cmd_central_char(o, type, a1, power, out); }; });

  auto* hc = app.add_subcommand("hc", "Harish-Chandra module parameter calculus");
  hc->require_subcommand(1);
  hc->fallthrough();
  auto* inv = hc->add_subcommand("invariants", "Minimal type and infinitesimal character of (lambda, nu)");
  type_opt(inv);
  inv->add_option("lambda", a1, weight_help)->required();
  inv->add_option("nu", a2, "Integral weight")->required();
  inv->callback([&] { action = [&] { return cmd_hc_invariants(o, type, a1, a2, out); }; });

  auto* eq = hc->add_subcommand("equivalent", "Equivalence test for (lambda, nu) and (lambda', nu')");
  type_opt(eq);
  eq->add_option("params", four, "lambda nu lambda' nu'")->required()->expected(4);
  eq->callback([&] { action = [&] { return cmd_hc_equivalent(o, type, four, out); }; });

  auto* fd = hc->add_subcommand("finite-dim", "Finite-dimensional members V(lambda) x V(mu)");
  type_opt(fd);
  fd->add_option("lambda", a1, weight_help)->required();
  fd->add_option("nu", a2, "Integral weight")->required();
  fd->callback([&] { action = [&] { return cmd_hc_finite_dim(o, type, a1, a2, out); }; });

  auto* cz = hc->add_subcommand("class-zero", "Class-zero module (lambda, 0): completeness and K-types");
  type_opt(cz);
  cz->add_option("lambda", a1, weight_help)->required();
  cz->callback([&] { action = [&] { return cmd_hc_class_zero(o, type, a1, out); }; });

  auto* iso = hc->add_subcommand("isoclasses", "Number of isomorphism classes W_lambda \\ W / W_mu");
  type_opt(iso);
  iso->add_option("lambda", a1, weight_help)->required();
  iso->add_option("mu", a2, weight_help)->required();
  iso->callback([&] { action = [&] { return cmd_hc_isoclasses(o, type, a1, a2, out); }; });

  auto* kb = hc->add_subcommand("ktype-bound", "Upper bound dim V(mu)_nu for the K-type V(mu)");
  type_opt(kb);
  kb->add_option("lambda", a1, weight_help)->required();
  kb->add_option("nu", a2, "Integral weight")->required();
  kb->add_option("mu", a3, "Dominant integral weight")->required();
  kb->callback([&] { action = [&] { return cmd_hc_ktype_bound(o, type, a1, a2, a3, out); }; });

  auto* wit = hc->add_subcommand("witness", "Search for inequivalent modules with equal minimal type and infinitesimal character");
  type_opt(wit);
  wit->add_option("--lambda-box", lbox, "Bound on |lambda_i|")->capture_default_str();
  wit->add_option("--nu-box", nbox, "Bound on |nu_i|")->capture_default_str();
  wit->callback([&] { action = [&] { return cmd_hc_witness(o, type, lbox, nbox, out); }; });

  auto* om = hc->add_subcommand("sl2-omega", "Images of Delta1, Delta2, Deltabar for sl2 at (lambda, nu)");
  om->add_option("lambda", a1, weight_help)->required();
  om->add_option("nu", a2, "Integral weight")->required();
  om->callback([&] { action = [&] { return cmd_hc_sl2_omega(o, a1, a2, out); }; });

  auto* st = app.add_subcommand("selftest", "Run the acceptance criteria");
  st->add_option("--criteria", ids, "Criterion ids (default: all)")->delimiter(',');
  st->add_flag("--timing", flag, "Show elapsed time per criterion");
  st->callback([&] { action = [&] { return cmd_selftest(o, ids, flag, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}

}  // namespace prvkit::cli
