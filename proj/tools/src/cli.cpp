#include "siegel_cli/cli.hpp"

#include "siegel/arith.hpp"
#include "siegel/cache.hpp"
#include "siegel/eisenstein2.hpp"
#include "siegel/error.hpp"
#include "siegel/gamma_factors.hpp"
#include "siegel/harmonic.hpp"
#include "siegel/lfunction.hpp"
#include "siegel/link_calculus.hpp"
#include "siegel/modular.hpp"
#include "siegel/poles.hpp"
#include "siegel/pullback.hpp"
#include "siegel/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace siegel::cli {

namespace {

using json = nlohmann::json;
using cld = std::complex<long double>;

constexpr int kFormulaVersion = 1;

struct Output {
  json doc;
  std::string csv;   // empty when the command has no tabular form
  std::string text;  // empty means pretty-printed JSON
};

json exact() { return {{"kind", "exact"}}; }
json numeric(long double bound) { return {{"kind", "numeric"}, {"errorBound", static_cast<double>(bound)}}; }

json complex_json(cld z) { return {{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}}; }

cld parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const long double re = std::stold(text.substr(0, comma), &used);
    if (used != text.substr(0, comma).size()) throw std::invalid_argument(text);
    long double im = 0;
    if (comma != std::string::npos) {
      const std::string tail = text.substr(comma + 1);
      im = std::stold(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("complex value", "expected \"re\" or \"re,im\", got '" + text + "'");
  }
}

std::vector<long double> parse_real_list(const std::string& text) {
  std::vector<long double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item).real());
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

// Harmonic polynomial input: a preset name or "c:links;c:links".
struct PolyInput {
  int p = 2, q = 2, d = 8, l = 0;
  std::string preset;
  std::string terms;

  void add_flags(CLI::App* sub) {
    sub->add_option("--p", p, "rows of the first block")->check(CLI::PositiveNumber);
    sub->add_option("--q", q, "rows of the second block")->check(CLI::PositiveNumber);
    sub->add_option("--d", d, "number of columns")->check(CLI::PositiveNumber);
    sub->add_option("--l", l, "number of e-vectors (defaults to the degree)");
    auto* pre = sub->add_option("--preset", preset, "mixed | antisymmetric | symmetric")
                    ->check(CLI::IsMember({"mixed", "antisymmetric", "symmetric"}));
    auto* t = sub->add_option("--terms", terms, "\"c:(1*,1_),(2*,2_);c:...\"");
    pre->excludes(t);
  }

  HarmonicPolynomial build() const {
    if (!preset.empty()) {
      const int degree = preset == "mixed" ? 1 : 2;
      const SplitShape shape{p, q, d, l > 0 ? l : degree};
      if (preset == "mixed") return mixed_link_polynomial(shape);
      if (preset == "antisymmetric") return antisymmetric_degree_two(shape);
      return symmetric_degree_two(shape);
    }
    if (terms.empty()) throw CLI::ValidationError("polynomial", "give --preset or --terms");
    std::vector<std::pair<Rational, LinkSet>> parsed;
    std::stringstream ss(terms);
    std::string item;
    int degree = 0;
    while (std::getline(ss, item, ';')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw DomainError("term '" + item + "' lacks a coefficient");
      parsed.emplace_back(parse_rational(item.substr(0, colon)), parse_link_set(item.substr(colon + 1)));
      degree = static_cast<int>(parsed.back().second.size());
    }
    SplitShape shape{p, q, d, l > 0 ? l : degree};
    shape.validate();
    HarmonicPolynomial poly(shape);
    for (const auto& [c, links] : parsed) poly.add_term(links, c);
    poly.validate();
    return poly;
  }
};

std::string tag_name(FormTag t) { return t == FormTag::Eisenstein ? "eisenstein" : "cusp-eigenform"; }

FourierTable2 cached_eisenstein2(int k, long max_det, const CoefficientCache* cache) {
  const CacheKey key{"eisenstein2", {{"weight", k}, {"maxDet", max_det}}, kFormulaVersion};
  if (cache) {
    if (auto hit = cache->load(key)) {
      try {
        return fourier_table_from_json(*hit);
      } catch (const std::exception&) {
        // Unreadable payload: recompute and overwrite.
      }
    }
  }
  FourierTable2 table = siegel_eisenstein2(k, max_det);
  if (cache) cache->store(key, to_json(table));
  return table;
}

Output cmd_expand(const std::string& links, const std::string& basis) {
  const LinkSet l0 = parse_link_set(links);
  const Expansion e = basis == "delta" ? expand_operator_delta_basis(l0) : expand_operator(l0);
  Output o;
  o.doc = to_json(e);
  o.doc["schema"] = "siegel.expand/1";
  o.doc["links"] = l0.to_string();
  o.doc["provenance"] = exact();
  std::ostringstream text;
  for (const auto& [key, c] : e.terms)
    text << "[" << key.first.to_string() << "] [" << key.second.to_string() << "] " << c.to_string() << "\n";
  o.text = text.str();
  return o;
}

json witness_json(const HarmonicCheck& check) {
  if (!check.witness) return nullptr;
  const auto& w = *check.witness;
  return {{"block", w.block}, {"mu", w.mu}, {"nu", w.nu}, {"residual", w.residual.to_string()}};
}

Output cmd_harmonic_check(const PolyInput& in, bool project) {
  HarmonicPolynomial poly = in.build();
  Output o;
  o.doc = {{"schema", "siegel.harmonic-check/1"}, {"input", to_json(poly)}, {"provenance", exact()}};
  if (project) {
    const auto proj = project_harmonic(poly);
    o.doc["projected"] = to_json(proj.polynomial);
    o.doc["projectedText"] = proj.polynomial.to_string();
    o.doc["noHarmonicCompletion"] = proj.no_harmonic_completion;
    poly = proj.polynomial;
  }
  const auto check = check_pluriharmonic(poly);
  o.doc["pluriharmonic"] = check.ok;
  o.doc["witness"] = witness_json(check);
  std::ostringstream text;
  text << poly.to_string() << "\n" << (check.ok ? "pluri-harmonic" : "not pluri-harmonic");
  if (check.witness)
    text << " (block " << check.witness->block << ", rows " << check.witness->mu << "," << check.witness->nu
         << ": " << check.witness->residual.to_string() << ")";
  o.text = text.str() + "\n";
  return o;
}

Output cmd_compute_q(const PolyInput& in, bool validate) {
  const HarmonicPolynomial poly = in.build();
  const QPolynomial q = compute_Q(poly, validate);
  Output o;
  o.doc = {{"schema", "siegel.compute-q/1"},
           {"input", to_json(poly)},
           {"validated", validate},
           {"Q", to_json(q)},
           {"text", q.to_string()},
           {"provenance", exact()}};
  o.text = q.to_string() + "\n";
  return o;
}

Output cmd_qexp(int k, long n) {
  const auto basis = qexp_basis(k, n);
  Output o;
  json forms = json::array();
  std::ostringstream csv, text;
  csv << "form,n,coefficient\n";
  for (const auto& f : basis) {
    json coeffs = json::array();
    for (long m = 0; m <= f.form.truncation(); ++m) {
      coeffs.push_back(to_string(f.form[m]));
      csv << f.name << "," << m << "," << to_string(f.form[m]) << "\n";
    }
    json eig = json::object();
    for (const auto& [p, v] : f.hecke_eigenvalues) eig[std::to_string(p)] = to_string(v);
    forms.push_back({{"name", f.name}, {"tag", tag_name(f.tag)}, {"coefficients", coeffs}, {"heckeEigenvalues", eig}});
    text << f.name << ":";
    for (long m = 0; m <= f.form.truncation(); ++m) text << " " << to_string(f.form[m]);
    text << "\n";
  }
  o.doc = {{"schema", "siegel.qexp/1"}, {"weight", k}, {"truncation", n}, {"forms", forms}, {"provenance", exact()}};
  o.csv = csv.str();
  o.text = text.str();
  return o;
}

Output cmd_eisenstein2(int k, long max_det, const CoefficientCache* cache) {
  const FourierTable2 t = cached_eisenstein2(k, max_det, cache);
  Output o;
  o.doc = to_json(t);
  o.doc["schema"] = "siegel.eisenstein2/1";
  o.doc["provenance"] = exact();
  std::ostringstream csv;
  csv << "a,b,c,value\n";
  for (const auto& [f, v] : t.entries) csv << f.a << "," << f.b << "," << f.c << "," << to_string(v) << "\n";
  o.csv = csv.str();
  o.text = csv.str();
  return o;
}

Output cmd_pullback(int k, long n, const CoefficientCache* cache) {
  const auto dq = restrict_diagonal(cached_eisenstein2(k, n * n, cache), n);
  const auto dec = decompose_pullback(dq, k, n);
  json diagonal = json::array(), off = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < dec.forms.size(); ++i)
    for (std::size_t j = 0; j < dec.forms.size(); ++j) {
      const std::string name = dec.forms[i] + "x" + dec.forms[j];
      const std::string c = to_string(dec.coeffs[i][j]);
      if (i == j) diagonal.push_back({{"form", name}, {"coeff", c}});
      else if (dec.coeffs[i][j] != 0) off.push_back({{"form", name}, {"coeff", c}});
      if (i == j || dec.coeffs[i][j] != 0) text << name << " " << c << "\n";
    }
  text << "residual rank " << dec.residual_rank << ", " << dec.surplus_equations() << " surplus equations\n";
  Output o;
  o.doc = {{"schema", "siegel.pullback/1"},
           {"weight", k},
           {"truncation", n},
           {"diagonal", diagonal},
           {"offDiagonal", off},
           {"residualRank", dec.residual_rank},
           {"equations", dec.equations},
           {"unknowns", dec.unknowns},
           {"rank", dec.rank},
           {"surplusEquations", dec.surplus_equations()},
           {"firstFailing", dec.first_failing ? json{dec.first_failing->first, dec.first_failing->second} : json(nullptr)},
           {"provenance", exact()}};
  o.text = text.str();
  return o;
}

Output cmd_conjecture61(int k, int lambda, const std::vector<long double>& grid, long double tol) {
  const auto r = conjecture61_check(lambda, k, grid, tol);
  json samples = json::array();
  std::ostringstream csv;
  csv << "s,c_re,c_im,gamma_ratio,quotient_re,quotient_im\n";
  csv.precision(17);
  for (const auto& s : r.samples) {
    samples.push_back({{"s", static_cast<double>(s.s)},
                       {"c", complex_json(s.c_value)},
                       {"gammaRatio", static_cast<double>(s.gamma_ratio)},
                       {"quotient", complex_json(s.quotient)}});
    csv << static_cast<double>(s.s) << "," << static_cast<double>(s.c_value.real()) << ","
        << static_cast<double>(s.c_value.imag()) << "," << static_cast<double>(s.gamma_ratio) << ","
        << static_cast<double>(s.quotient.real()) << "," << static_cast<double>(s.quotient.imag()) << "\n";
  }
  Output o;
  o.doc = {{"schema", "siegel.conjecture61/1"},
           {"weight", k},
           {"lambda", lambda},
           {"samples", samples},
           {"constant", complex_json(r.constant)},
           {"maxRelativeDeviation", static_cast<double>(r.max_relative_deviation)},
           {"provenance", numeric(tol)}};
  o.csv = csv.str();
  return o;
}

SatakeData satake_for(int k, long p) { return satake_table(cusp_eigenform(k, p), p).at(p); }

Output cmd_euler(int k, long p, const std::optional<std::string>& s_text) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const SatakeData sd = satake_for(k, p);
  const EulerFactor f = euler_factor_standard({sd}, p);
  json coeffs = json::array();
  for (const auto& c : f.denominator) coeffs.push_back(to_string(c));
  Output o;
  o.doc = {{"schema", "siegel.euler/1"},
           {"weight", k},
           {"p", p},
           {"satakeMinPoly", sd.min_poly()},
           {"beta", to_string(sd.beta)},
           {"denominator", coeffs},
           {"provenance", exact()}};
  std::ostringstream text;
  text << "Satake: " << sd.min_poly() << "\ndenominator:";
  for (const auto& c : f.denominator) text << " " << to_string(c);
  text << "\n";
  if (s_text) {
    const cld s = parse_complex(*s_text);
    const cld a = euler_factor_value(f, s), b = euler_factor_direct({sd}, p, s);
    o.doc["s"] = complex_json(s);
    o.doc["value"] = complex_json(a);
    o.doc["valueDirect"] = complex_json(b);
    o.doc["valueProvenance"] = numeric(std::abs(a - b));
    text << "value at s: " << static_cast<double>(a.real()) << " + " << static_cast<double>(a.imag()) << "i\n";
  }
  o.text = text.str();
  return o;
}

Output cmd_dcoeffs(int k, long m, bool check) {
  const long need = check ? std::max(m, 2 * std::min(m, 25L) * std::min(m, 25L)) : m;
  const BasisForm f = cusp_eigenform(k, need);
  const auto d = dirichlet_from_L(satake_table(f, m), m);
  json coeffs = json::array();
  std::ostringstream csv;
  csv << "t,value\n";
  for (long t = 1; t <= m; ++t) {
    coeffs.push_back({{"t", t}, {"value", to_string(d[t])}});
    csv << t << "," << to_string(d[t]) << "\n";
  }
  Output o;
  o.doc = {{"schema", "siegel.dcoeffs/1"}, {"weight", k}, {"max", m}, {"coefficients", coeffs}, {"provenance", exact()}};
  if (check) {
    json cross = json::array();
    bool all = true;
    for (long t = 2; t <= std::min(m, 25L); ++t) {
      const Rational h = hecke_doublecoset_eigenvalue(f.form, t).value;
      all = all && h == d[t];
      cross.push_back({{"t", t}, {"doubleCoset", to_string(h)}, {"agrees", h == d[t]}});
    }
    o.doc["crossCheck"] = cross;
    o.doc["crossCheckOk"] = all;
  }
  o.csv = csv.str();
  o.text = csv.str();
  return o;
}

Output cmd_gamma(int p, int q) {
  const SPolynomial g = gamma_pq(p, q);
  json coeffs = json::array();
  for (const auto& c : g) coeffs.push_back(to_string(c));
  Output o;
  o.doc = {{"schema", "siegel.gamma/1"},
           {"p", p},
           {"q", q},
           {"coefficients", coeffs},
           {"degree", static_cast<int>(g.size()) - 1},
           {"text", polynomial_to_string(g)},
           {"provenance", exact()}};
  o.text = polynomial_to_string(g) + "\n";
  return o;
}

Output cmd_gamma_check(int pmax) {
  if (pmax < 1 || pmax > 8) throw DomainError("--pmax must lie in 1..8");
  json rows = json::array();
  bool all = true;
  std::ostringstream csv;
  csv << "p,q,degree,formula_degree,ok\n";
  for (int p = 1; p <= pmax; ++p)
    for (int q = 1; q <= p; ++q) {
      const auto c = gamma_pq_functional_check(p, q);
      const int formula = gamma_pq_degree_formula(p, q);
      const bool ok = c.ok && c.degree == formula;
      all = all && ok;
      rows.push_back({{"p", p}, {"q", q}, {"degree", c.degree}, {"formulaDegree", formula}, {"ok", ok}});
      csv << p << "," << q << "," << c.degree << "," << formula << "," << (ok ? "true" : "false") << "\n";
    }
  Output o;
  o.doc = {{"schema", "siegel.gamma-check/1"}, {"pmax", pmax}, {"results", rows}, {"allOk", all}, {"provenance", exact()}};
  o.csv = csv.str();
  o.text = csv.str();
  return o;
}

Output cmd_poles(const std::string& context, std::optional<int> n, std::optional<int> p, std::optional<int> q,
                 int k, const std::vector<int>& lambda) {
  PoleTable t;
  json params{{"k", k}};
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw CLI::ValidationError(flag, std::string("required for this context"));
    return *v;
  };
  if (context == "feit") {
    const int deg = n ? *n : need(p, "--n");
    params["n"] = deg;
    t = feit_poles(deg, k);
  } else if (context == "klingen63") {
    params["p"] = need(p, "--p");
    params["q"] = need(q, "--q");
    t = klingen_poles(*p, *q, k);
  } else {
    params["q"] = need(q, "--q");
    if (!lambda.empty()) params["lambda"] = lambda;
    t = lambda_poles(*q, k);
  }
  json poles = json::array();
  std::ostringstream text;
  text << context << " case " << t.case_label << (t.conditional ? " (conditional)" : "") << "\n";
  for (const auto& e : t.poles) {
    poles.push_back({{"s", to_string(e.s)}, {"maxOrder", e.max_order}});
    text << "s = " << to_string(e.s) << ", order <= " << e.max_order << "\n";
  }
  if (t.entire()) text << "no poles\n";
  Output o;
  o.doc = {{"schema", "siegel.poles/1"}, {"context", context},   {"params", params},
           {"case", t.case_label},       {"region", t.region},   {"conditional", t.conditional},
           {"poles", poles},             {"provenance", exact()}};
  o.text = text.str();
  return o;
}

Output cmd_lvalue(int k, const std::string& s_text, long cutoff) {
  const cld s = parse_complex(s_text);
  const LValue l = lvalue_numeric(k, s, cutoff);
  Output o;
  o.doc = {{"schema", "siegel.lvalue/1"},
           {"weight", k},
           {"s", complex_json(s)},
           {"value", complex_json(l.value)},
           {"tailBound", static_cast<double>(l.tail_bound)},
           {"primeCutoff", l.prime_cutoff},
           {"primesUsed", l.primes_used},
           {"provenance", numeric(l.tail_bound)}};
  std::ostringstream text;
  text.precision(17);
  text << static_cast<double>(l.value.real()) << " + " << static_cast<double>(l.value.imag()) << "i (+/- "
       << static_cast<double>(l.tail_bound) << ")\n";
  o.text = text.str();
  return o;
}

Output cmd_petersson(int k, long n, long double tol, const std::string& method) {
  const BasisForm f = cusp_eigenform(k, n);
  Output o;
  o.doc = {{"schema", "siegel.petersson/1"}, {"weight", k}, {"truncation", n}, {"tolerance", static_cast<double>(tol)}};
  std::ostringstream text;
  text.precision(15);
  auto add = [&](const char* name, const PeterssonResult& r) {
    o.doc[name] = {{"value", static_cast<double>(r.value)}, {"provenance", numeric(r.error_estimate)}};
    text << name << ": " << static_cast<double>(r.value) << " (+/- " << static_cast<double>(r.error_estimate) << ")\n";
  };
  if (method != "direct") add("series", petersson_norm_numeric(f.form, tol));
  if (method != "series") add("direct", petersson_norm_direct(f.form, tol));
  o.text = text.str();
  return o;
}

Output cmd_cache(const std::string& action, const CoefficientCache& cache) {
  Output o;
  o.doc = {{"schema", "siegel.cache/1"}, {"action", action}, {"directory", cache.directory().string()}};
  std::ostringstream text;
  if (action == "list") {
    json entries = json::array();
    for (const auto& e : cache.list()) {
      entries.push_back({{"hash", e.hash},
                         {"operation", e.operation},
                         {"params", e.params},
                         {"formulaVersion", e.formula_version},
                         {"createdAt", e.created_at},
                         {"size", e.size}});
      text << e.hash << " " << e.operation << " " << e.params.dump() << " v" << e.formula_version << " " << e.size
           << " bytes\n";
    }
    o.doc["entries"] = entries;
  } else if (action == "clear") {
    const std::size_t removed = cache.clear();
    o.doc["removed"] = removed;
    text << "removed " << removed << " entries\n";
  } else {
    json results = json::array();
    bool all = true;
    for (const auto& r : cache.verify()) {
      results.push_back({{"path", r.path.string()}, {"ok", r.ok}, {"message", r.message}});
      all = all && r.ok;
      text << r.path.string() << ": " << r.message << "\n";
    }
    o.doc["results"] = results;
    o.doc["allOk"] = all;
  }
  o.text = text.str();
  return o;
}

void emit(const Output& o, const std::string& target, const std::string& command, std::ostream& out) {
  std::string format = target;
  const bool to_file = target != "json" && target != "csv" && target != "text";
  if (to_file) {
    const auto ext = std::filesystem::path(target).extension().string();
    format = ext == ".csv" ? "csv" : ext == ".txt" ? "text" : "json";
  }
  std::string body;
  if (format == "csv") {
    if (o.csv.empty()) throw CLI::ValidationError("--out", "csv output is not available for " + command);
    body = o.csv;
  } else if (format == "text") {
    body = o.text.empty() ? o.doc.dump(2) + "\n" : o.text;
  } else {
    body = o.doc.dump(2) + "\n";
  }
  if (!to_file) {
    out << body;
    return;
  }
  std::ofstream file(target, std::ios::trunc);
  if (!file) throw DomainError("cannot open output file " + target);
  file << body;
  if (!file) throw DomainError("write failed for " + target);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric tools for Siegel Eisenstein series pullbacks", "siegel"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_target = "json";
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--out", out_target, "json | csv | text, or a file path (format from its extension)");
  app.add_option("--cache-dir", cache_dir, "cache directory (default $SIEGEL_CACHE_DIR, then the XDG cache)");
  app.add_flag("--no-cache", no_cache, "neither read nor write the coefficient cache");

  int k = 12, p_val = 2, q_val = 2, lambda_deg = 1, pmax = 8;
  long trunc = 8, petersson_trunc = 40, max_det = 16, cutoff = 10000, max_t = 25, prime = 2;
  std::optional<int> n_opt, p_opt, q_opt;
  std::vector<int> lambda_vec;
  std::string links, basis = "delta-minus-e", s_text = "10", grid_text = "12,13.5,15,17,20", method = "both",
                     context, action;
  std::optional<std::string> s_opt;
  double tol = 1e-10, petersson_tol = 1e-8;
  bool project = false, no_validate = false, check = false;
  PolyInput poly_check, poly_q;

  std::map<std::string, std::function<Output()>> handlers;
  const CoefficientCache* cache_ptr = nullptr;
  std::optional<CoefficientCache> cache;

  auto* expand = app.add_subcommand("expand", "expand a link operator into (A, E) terms");
  expand->add_option("--links", links, "link set, e.g. \"(1,2),(3,4)\"")->required();
  expand->add_option("--basis", basis, "delta-minus-e | delta")->check(CLI::IsMember({"delta-minus-e", "delta"}));
  handlers["expand"] = [&] { return cmd_expand(links, basis); };

  auto* hc = app.add_subcommand("harmonic-check", "test a link polynomial for pluri-harmonicity");
  poly_check.add_flags(hc);
  hc->add_flag("--project", project, "project onto the harmonic part first");
  handlers["harmonic-check"] = [&] { return cmd_harmonic_check(poly_check, project); };

  auto* cq = app.add_subcommand("compute-q", "pull back a pluri-harmonic polynomial to Q(X, s)");
  poly_q.add_flags(cq);
  cq->add_flag("--no-validate", no_validate, "skip the harmonicity and vanishing checks");
  handlers["compute-q"] = [&] { return cmd_compute_q(poly_q, !no_validate); };

  auto* qx = app.add_subcommand("qexp", "Hecke eigenbasis of M_k as q-expansions");
  qx->add_option("--weight", k)->required();
  qx->add_option("--trunc", trunc, "number of coefficients")->check(CLI::PositiveNumber);
  handlers["qexp"] = [&] { return cmd_qexp(k, trunc); };

  auto* e2 = app.add_subcommand("eisenstein2", "Fourier coefficients of the degree-two Siegel Eisenstein series");
  e2->add_option("--weight", k)->required();
  e2->add_option("--max-det", max_det, "largest 4ac - b^2")->check(CLI::NonNegativeNumber);
  handlers["eisenstein2"] = [&] { return cmd_eisenstein2(k, max_det, cache_ptr); };

  auto* pb = app.add_subcommand("pullback", "decompose the diagonal restriction in the Hecke eigenbasis");
  pb->add_option("--weight", k)->required();
  pb->add_option("--trunc", trunc, "q-expansion truncation")->check(CLI::PositiveNumber);
  handlers["pullback"] = [&] { return cmd_pullback(k, trunc, cache_ptr); };

  auto* cj = app.add_subcommand("conjecture61", "c-integral quotient on a grid of real s");
  cj->add_option("--weight", k)->required();
  cj->add_option("--lambda", lambda_deg, "degree 1 or 2")->check(CLI::Range(1, 2));
  cj->add_option("--s", grid_text, "comma-separated real points");
  cj->add_option("--tol", tol, "quadrature tolerance");
  handlers["conjecture61"] = [&] {
    return cmd_conjecture61(k, lambda_deg, parse_real_list(grid_text), static_cast<long double>(tol));
  };

  auto* eu = app.add_subcommand("euler", "local standard L-factor of the weight-k cusp eigenform");
  eu->add_option("--weight", k)->required();
  eu->add_option("--p", prime, "prime")->required();
  eu->add_option("--s", s_opt, "evaluate at s = \"re,im\"");
  handlers["euler"] = [&] { return cmd_euler(k, prime, s_opt); };

  auto* dc = app.add_subcommand("dcoeffs", "Dirichlet coefficients D(t) by formal division");
  dc->add_option("--weight", k)->required();
  dc->add_option("--max", max_t, "largest t")->check(CLI::PositiveNumber);
  dc->add_flag("--check", check, "compare with double-coset Hecke eigenvalues for t <= 25");
  handlers["dcoeffs"] = [&] { return cmd_dcoeffs(k, max_t, check); };

  auto* gm = app.add_subcommand("gamma", "gamma_{p,q}(s) as exact coefficients, lowest degree first");
  gm->add_option("--p", p_val)->required();
  gm->add_option("--q", q_val)->required();
  handlers["gamma"] = [&] { return cmd_gamma(p_val, q_val); };

  auto* gc = app.add_subcommand("gamma-check", "functional equation and degree of gamma_{p,q} for q <= p <= pmax");
  gc->add_option("--pmax", pmax);
  handlers["gamma-check"] = [&] { return cmd_gamma_check(pmax); };

  auto* pl = app.add_subcommand("poles", "candidate pole tables");
  pl->add_option("--context", context)->required()->check(CLI::IsMember({"feit", "klingen63", "lambda64"}));
  pl->add_option("--n", n_opt, "degree (feit)");
  pl->add_option("--p", p_opt);
  pl->add_option("--q", q_opt);
  pl->add_option("--k", k)->required();
  pl->add_option("--lambda", lambda_vec, "highest weight (lambda64; echoed only)")->delimiter(',');
  handlers["poles"] = [&] { return cmd_poles(context, n_opt, p_opt, q_opt, k, lambda_vec); };

  auto* lv = app.add_subcommand("lvalue", "truncated Euler product for L(s, f, St)");
  lv->add_option("--weight", k)->required();
  lv->add_option("--s", s_text, "\"re,im\" with Re(s) > 1");
  lv->add_option("--cutoff", cutoff, "prime cutoff");
  handlers["lvalue"] = [&] { return cmd_lvalue(k, s_text, cutoff); };

  auto* pt = app.add_subcommand("petersson", "numeric Petersson norm of the weight-k cusp eigenform");
  pt->add_option("--weight", k)->required();
  pt->add_option("--trunc", petersson_trunc, "number of coefficients used")->check(CLI::PositiveNumber);
  pt->add_option("--tol", petersson_tol, "relative tolerance");
  pt->add_option("--method", method)->check(CLI::IsMember({"series", "direct", "both"}));
  handlers["petersson"] = [&] {
    return cmd_petersson(k, petersson_trunc, static_cast<long double>(petersson_tol), method);
  };

  auto* ca = app.add_subcommand("cache", "inspect or clear the coefficient cache");
  ca->add_option("action", action, "list | clear | verify")->required()->check(CLI::IsMember({"list", "clear", "verify"}));
  handlers["cache"] = [&] { return cmd_cache(action, *cache); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  try {
    if (chosen->get_name() == "cache" || !no_cache) {
      cache.emplace(cache_dir.empty() ? CoefficientCache::default_directory() : std::filesystem::path(cache_dir));
      cache_ptr = &*cache;
    }
    const Output o = handlers.at(chosen->get_name())();
    emit(o, out_target, chosen->get_name(), out);
    return 0;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n" << chosen->help();
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace siegel::cli
