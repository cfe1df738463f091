#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "easyq/category.hpp"
#include "easyq/enumerate.hpp"
#include "easyq/group.hpp"
#include "easyq/hyperspherical.hpp"
#include "easyq/integration.hpp"
#include "easyq/laws.hpp"
#include "easyq/monomial.hpp"
#include "easyq/oracle/enumeration.hpp"
#include "easyq/oracle/monte_carlo.hpp"
#include "easyq/oracle/weyl.hpp"
#include "easyq/temperley_lieb.hpp"
#include "easyq/tensor_map.hpp"
#include "easyq/weingarten.hpp"
#include "envelope.hpp"
#include "verify.hpp"

namespace easyq::cli {

namespace {

struct Options {
  std::string group;
  std::string category;
  std::string word;
  std::string upper;
  std::string lower;
  std::string partition;
  std::string monomial;
  std::string indices;
  std::string expr;
  std::string engine;
  std::string law = "gaussian";
  std::string kind = "real";
  std::string family = "O";
  std::string gen_file;
  std::string t = "1";
  std::string delta = "2";
  std::string kappa = "1/2";
  std::string lambda = "1/2";
  std::string mu = "1";
  std::vector<std::string> targets;
  long n = 0;
  long m = 0;
  long l = 1;
  long s = 0;
  long k = -1;
  long p = 1;
  long legs = -1;
  long bound = 4;
  long work = 0;
  long kmax = 8;
  long reflection = 2;
  long count = 1;
  long sum_k = -1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1'000'000;
  unsigned workers = 1;
  bool twisted = false;
  bool pseudo = false;
  bool lines = false;
  bool colored = false;
  bool pairings_only = false;
  bool check = false;
  bool limit = false;
  bool formula = false;
  bool matrix = false;
  bool quick = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json literals(std::vector<Partition> const& parts) {
  Json out = Json::array();
  for (auto const& p : parts) out.push_back(p.to_string());
  return out;
}

ColorWord word_option(std::string const& text) {
  if (text.empty() || text == "-") return {};
  return parse_color_word(text);
}

struct Resolved {
  CategorySpec category;
  std::optional<Group> group;
};

Resolved resolve_category(Options const& o) {
  if (!o.group.empty() && !o.category.empty()) throw UsageError("give either --group or --category");
  if (!o.group.empty()) {
    Group const g = parse_group(o.group);
    return {group_category(g.id), g};
  }
  if (!o.category.empty()) return {CategorySpec::parse(o.category), std::nullopt};
  throw UsageError("one of --group or --category is required");
}

ColorWord resolve_word(Options const& o, Resolved const& r) {
  if (!o.word.empty()) {
    ColorWord w = word_option(o.word);
    if (r.group && is_real(r.group->id)) w = white_word(w.size());
    return w;
  }
  if (o.k < 0) throw UsageError("one of --word or --k is required");
  return white_word(static_cast<std::size_t>(o.k));
}

oracle::MCConfig mc_config(Options const& o) {
  if (o.samples == 0) throw UsageError("--samples must be positive");
  if (o.workers == 0) throw UsageError("--workers must be positive");
  return {o.samples, o.seed, o.workers};
}

Outcome category_cmd(Options const& o) {
  auto const r = resolve_category(o);
  Outcome out;
  ColorWord upper, lower;
  if (o.legs >= 0) {
    lower = white_word(static_cast<std::size_t>(o.legs));
  } else {
    upper = word_option(o.upper);
    lower = word_option(o.word.empty() ? o.lower : o.word);
  }
  auto const set = category_set(r.category, upper, lower);
  out.payload["category"] = r.category.name();
  out.payload["count"] = set.size();
  out.payload["values"] = literals(set);
  if (o.check) {
    auto const report = verify_axioms(r.category, static_cast<std::size_t>(o.bound),
                                      is_colored(r.category.id()) ? Regime::colored : Regime::uncolored);
    out.payload["axioms"] = {{"elements", report.checked_elements}, {"operations", report.checked_operations}};
    out.defects = report.defects;
  }
  for (auto const& p : set) out.lines.push_back(p.to_string());
  out.plain = o.lines;
  return out;
}

Outcome closure_cmd(Options const& o) {
  std::ifstream in(o.gen_file);
  if (!in) throw UsageError("cannot read generator file '" + o.gen_file + "'");
  std::vector<Partition> generators;
  std::string line;
  while (std::getline(in, line)) {
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto const last = line.find_last_not_of(" \t\r");
    generators.push_back(Partition::parse(line.substr(first, last - first + 1)));
  }
  std::optional<std::size_t> work;
  if (o.work > 0) work = static_cast<std::size_t>(o.work);
  auto const cat = closure(generators, static_cast<std::size_t>(o.bound),
                           o.colored ? Regime::colored : Regime::uncolored, work);
  std::vector<Partition> members;
  for (auto const& p : cat->all_members())
    if (!o.pairings_only || is_pairing(p)) members.push_back(p);
  Outcome out;
  out.payload["generators"] = literals(generators);
  out.payload["legBound"] = cat->leg_bound();
  out.payload["workingBound"] = cat->working_bound();
  out.payload["count"] = members.size();
  out.payload["values"] = literals(members);
  for (auto const& p : members) out.lines.push_back(p.to_string());
  out.plain = o.lines;
  return out;
}

Outcome tmap_cmd(Options const& o) {
  Partition const p = Partition::parse(o.partition);
  ExactMatrix const m = o.twisted ? t_map_twisted(p, o.n) : t_map(p, o.n);
  Outcome out;
  out.payload["partition"] = p.to_string();
  out.payload["rows"] = m.rows();
  out.payload["cols"] = m.cols();
  out.payload["values"] = exact_matrix(m);
  return out;
}

Outcome gram_cmd(Options const& o, bool inverse) {
  auto const r = resolve_category(o);
  ColorWord const w = resolve_word(o, r);
  auto g = gram(r.category, w, o.n);
  Outcome out;
  out.payload["category"] = r.category.name();
  out.payload["word"] = format_color_word(w);
  out.payload["basis"] = literals(g.basis);
  out.payload["basisSize"] = g.basis.size();
  out.payload["rank"] = g.rank;
  if (!inverse) {
    out.payload["value"] = exact(determinant(g.matrix));
    out.payload["values"] = exact_matrix(g.matrix);
    return out;
  }
  auto const wg = weingarten(std::move(g), o.pseudo);
  out.payload["inverse"] = wg.kind == InverseKind::exact ? "exact" : "reflexive-pseudo";
  if (wg.kind != InverseKind::exact) out.payload["warning"] = "valid only on the span of the basis";
  out.payload["values"] = exact_matrix(wg.matrix);
  return out;
}

Outcome moment_cmd(Options const& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  Group const g = parse_group(o.group);
  MonomialSpec const m = parse_monomial(o.monomial);
  HaarIntegrator integrator(g, o.n, o.pseudo);
  Rational const value = integrator.moment(m);
  auto const& wg = integrator.weingarten_for(integrator.effective_word(m));
  Outcome out;
  out.payload["group"] = group_name(g);
  out.payload["monomial"] = format_monomial(m);
  out.payload["value"] = exact(value);
  out.payload["basisSize"] = wg.gram.basis.size();
  out.payload["rank"] = wg.gram.rank;
  return out;
}

Outcome char_cmd(Options const& o) {
  Outcome out;
  if (o.limit) {
    auto const r = resolve_category(o);
    ColorWord const w = resolve_word(o, r);
    out.payload["category"] = r.category.name();
    out.payload["t"] = exact(parse_rational(o.t));
    out.payload["value"] = exact(asymptotic_char_moment(r.category, parse_rational(o.t), w));
    return out;
  }
  if (o.group.empty()) throw UsageError("--group is required");
  Group const g = parse_group(o.group);
  Resolved const r{group_category(g.id), g};
  ColorWord const w = resolve_word(o, r);
  long const s = o.s > 0 ? o.s : o.n;
  out.payload["group"] = group_name(g);
  out.payload["word"] = format_color_word(w);
  out.payload["value"] = exact(truncated_char_moment(g, o.n, s, w, o.pseudo));
  return out;
}

Outcome laws_cmd(Options const& o) {
  LawId law{parse_law_kind(o.law), parse_rational(o.t), static_cast<std::size_t>(std::max(0L, o.s))};
  if (o.s < 0) throw UsageError("--s must be non-negative");
  Outcome out;
  out.payload["law"] = law_name(law.kind);
  out.payload["t"] = exact(law.t);
  if (law.kind == LawKind::bessel || law.kind == LawKind::free_bessel) out.payload["s"] = law.s;
  if (!o.word.empty()) {
    out.payload["word"] = o.word;
    out.payload["value"] = exact(law_moment(law, word_option(o.word)));
    return out;
  }
  Json table = Json::array();
  bool const complex = is_complex_law(law.kind);
  for (long k = 0; k <= o.kmax; ++k) {
    ColorWord w;
    for (long r = 0; r < k; ++r) {
      w.push_back(Color::white);
      if (complex) w.push_back(Color::black);
    }
    table.push_back(exact(law_moment(law, w)));
  }
  out.payload["moments"] = complex ? "E[(x x*)^k]" : "E[x^k]";
  out.payload["values"] = table;
  return out;
}

Outcome sphere_cmd(Options const& o) {
  Outcome out;
  if (o.formula) {
    auto const report = free_hyperspherical_moment({o.n, o.l});
    out.payload["n"] = o.n;
    out.payload["l"] = o.l;
    out.payload["formula"] = report.formula.str(40);
    out.payload["roundingEstimate"] = report.rounding_estimate.str(3);
    out.payload["reconstructed"] = exact(report.reconstructed);
    out.payload["value"] = exact(report.exact);
    out.payload["difference"] = report.difference.str(3);
    out.payload["agrees"] = report.agrees;
    if (!report.agrees) out.defects.push_back("closed formula disagrees with the exact value");
    return out;
  }
  SphereKind const kind = parse_sphere_kind(o.kind);
  auto const idx = parse_index_list(o.indices);
  out.payload["sphere"] = sphere_name(kind);
  out.payload["indices"] = idx;
  out.payload["value"] = exact(sphere_moment(kind, idx, o.n, o.pseudo));
  return out;
}

Outcome pispace_cmd(Options const& o) {
  IsometryFamily const family = parse_isometry_family(o.family);
  PartialIsometrySpec spec;
  if (family == IsometryFamily::generic) {
    if (o.category.empty()) throw UsageError("the generic family needs --category");
    spec.category = CategorySpec::parse(o.category);
    spec.m = o.m;
    spec.n = o.n;
    spec.l = o.l;
  } else {
    spec = isometry_spec(family, o.m, o.n, o.l, static_cast<std::size_t>(o.reflection));
  }
  Outcome out;
  out.payload["category"] = spec.category.name();
  if (o.limit) {
    if (o.k < 0 && o.word.empty()) throw UsageError("--limit needs --word or --k");
    ColorWord const w = o.word.empty() ? white_word(static_cast<std::size_t>(o.k)) : word_option(o.word);
    out.payload["value"] = exact(nonoverlapping_limit(spec.category, parse_rational(o.kappa),
                                                      parse_rational(o.lambda), parse_rational(o.mu), w));
    return out;
  }
  out.payload["m"] = spec.m;
  out.payload["n"] = spec.n;
  out.payload["l"] = spec.l;
  if (o.sum_k >= 0) {
    if (o.k < 0 && o.word.empty()) throw UsageError("--sum needs --word or --k");
    ColorWord const w = o.word.empty() ? white_word(static_cast<std::size_t>(o.k)) : word_option(o.word);
    out.payload["value"] = exact(nonoverlapping_sum_moment(spec, o.sum_k, w, o.pseudo));
    return out;
  }
  MonomialSpec const m = parse_monomial(o.monomial);
  out.payload["monomial"] = format_monomial(m);
  out.payload["value"] = exact(partial_isometry_moment(spec, m, o.pseudo));
  return out;
}

Outcome tl_cmd(Options const& o) {
  if (o.k < 1) throw UsageError("--k must be positive");
  Rational const delta = parse_rational(o.delta);
  TLElement const x = parse_tl_expression(o.expr, static_cast<std::size_t>(o.k), delta);
  Json terms = Json::array();
  for (auto const& [d, c] : x.terms()) terms.push_back({{"diagram", d.to_string()}, {"coefficient", exact(c)}});
  Outcome out;
  out.payload["k"] = o.k;
  out.payload["delta"] = exact(delta);
  out.payload["values"] = terms;
  out.payload["markovTrace"] = exact(markov_trace(x));
  return out;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Outcome oracle_cmd(Options const& o) {
  Outcome out;
  out.payload["engine"] = o.engine;
  if (o.engine == "sn") {
    if (!o.monomial.empty()) {
      out.payload["value"] = exact(oracle::sn_haar_moment(o.n, parse_monomial(o.monomial)));
    } else {
      Json pmf = Json::array();
      for (auto const& x : oracle::sn_truncated_char_law(o.n, parse_rational(o.t))) pmf.push_back(exact(x));
      out.payload["t"] = o.t;
      out.payload["values"] = pmf;
    }
    return out;
  }
  if (o.engine == "hns") {
    auto const s = static_cast<unsigned>(o.s);
    auto const m = parse_monomial(o.monomial);
    if (s > 4) {
      out.payload["numeric"] = complex_json(oracle::hns_haar_moment_numeric(o.n, s, m).to_complex());
      return out;
    }
    auto const value = oracle::hns_haar_moment(o.n, s, m);
    out.payload["value"] = value.to_string();
    out.payload["numeric"] = complex_json(value.to_complex());
    return out;
  }
  if (o.engine == "mc") {
    auto const g = oracle::parse_mc_group(o.group);
    auto const est = oracle::mc_haar_moment(g, o.n, parse_monomial(o.monomial), mc_config(o));
    out.payload["value"] = est.mean;
    out.payload["imag"] = est.imag_mean;
    out.payload["imagStderr"] = est.imag_std_error;
    out.provenance = Provenance::monte_carlo(o.seed, o.samples, est.std_error);
    return out;
  }
  if (o.engine == "sphere") {
    auto const est = oracle::sphere_mc_moments(o.n, {parse_index_list(o.indices)}, mc_config(o)).front();
    out.payload["value"] = est.mean;
    out.provenance = Provenance::monte_carlo(o.seed, o.samples, est.std_error);
    return out;
  }
  if (o.engine == "weyl") {
    oracle::WeylReport worst;
    for (long trial = 0; trial < o.count; ++trial) {
      auto rng = oracle::block_stream(o.seed, static_cast<std::uint64_t>(trial));
      auto const r = oracle::weyl_model(o.n, oracle::haar_unitary(o.n, rng)).report;
      worst.input_unitarity = std::max(worst.input_unitarity, r.input_unitarity);
      worst.weyl_unitarity = std::max(worst.weyl_unitarity, r.weyl_unitarity);
      worst.relations = std::max(worst.relations, r.relations);
      worst.projections = std::max(worst.projections, r.projections);
      worst.orthogonality = std::max(worst.orthogonality, r.orthogonality);
      worst.sums = std::max(worst.sums, r.sums);
    }
    out.payload["n"] = o.n;
    out.payload["unitaries"] = o.count;
    out.payload["residuals"] = {{"inputUnitarity", worst.input_unitarity},
                                {"weylUnitarity", worst.weyl_unitarity},
                                {"relations", worst.relations},
                                {"projections", worst.projections},
                                {"orthogonality", worst.orthogonality},
                                {"sums", worst.sums}};
    if (o.n == 2) out.payload["pauliResidual"] = oracle::pauli_residual(oracle::weyl_matrices(2));
    out.payload["value"] = worst.ok();
    out.provenance = Provenance::monte_carlo(o.seed, static_cast<std::uint64_t>(o.count), 0);
    if (!worst.ok()) out.defects.push_back("residual above 1e-10");
    return out;
  }
  if (o.engine == "stationary") {
    ColorWord const w = o.word.empty() ? white_word(static_cast<std::size_t>(o.p)) : word_option(o.word);
    if (o.p < 0) throw UsageError("--p must be non-negative");
    auto const res = oracle::stationarity_matrix(o.n, static_cast<std::size_t>(o.p), w, mc_config(o));
    out.payload["n"] = o.n;
    out.payload["p"] = o.p;
    out.payload["value"] = res.residual;
    if (o.matrix) {
      Json rows = Json::array();
      for (long r = 0; r < res.t.rows(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < res.t.cols(); ++c) row.push_back(complex_json(res.t(r, c)));
        rows.push_back(row);
      }
      out.payload["values"] = rows;
    }
    out.provenance = Provenance::monte_carlo(o.seed, o.samples, 0);
    return out;
  }
  throw UsageError("unknown engine '" + o.engine + "' (sn, hns, mc, sphere, weyl, stationary)");
}

Outcome verify_cmd(Options const& o) {
  std::vector<std::string> targets = o.targets.empty() ? std::vector<std::string>{"all"} : o.targets;
  auto const results = run_verification(targets, o.quick);
  Outcome out;
  Json checks = Json::array();
  std::size_t passed = 0;
  for (auto const& r : results) {
    checks.push_back({{"section", r.section}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (r.passed) {
      ++passed;
    } else {
      out.defects.push_back(r.section + ": " + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
    }
  }
  out.payload["quick"] = o.quick;
  out.payload["passed"] = passed;
  out.payload["total"] = results.size();
  out.payload["values"] = checks;
  return out;
}

void category_options(CLI::App* sub, Options& o) {
  auto* g = sub->add_option("--group", o.group, "Easy group, e.g. O, U+, H*, Obar");
  auto* c = sub->add_option("--category", o.category, "Category name, e.g. NC2, Mcal_P2, P_mod3");
  g->excludes(c);
}

void word_options(CLI::App* sub, Options& o) {
  auto* w = sub->add_option("--word", o.word, "Color word over o/b");
  auto* k = sub->add_option("--k", o.k, "Number of white legs");
  w->excludes(k);
}

void mc_options(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_option("--samples", o.samples, "Monte Carlo samples");
  sub->add_option("--workers", o.workers, "Worker threads");
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  auto o = std::make_unique<Options>();
  CLI::App app{"Exact Haar integration over easy quantum groups", "easyq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version));
  std::function<Outcome()> selected;

  auto* cat = app.add_subcommand("category", "List a category of partitions");
  category_options(cat, *o);
  cat->add_option("--legs", o->legs, "One-line partitions on this many white legs");
  cat->add_option("--word", o->word, "One-line partitions on this color word");
  cat->add_option("--upper", o->upper, "Upper color word");
  cat->add_option("--lower", o->lower, "Lower color word");
  cat->add_flag("--check", o->check, "Verify the category axioms up to --bound legs");
  cat->add_option("--bound", o->bound, "Leg bound for --check");
  cat->add_flag("--lines", o->lines, "Print one literal per line instead of JSON");
  cat->callback([&] { selected = [&] { return category_cmd(*o); }; });

  auto* clo = app.add_subcommand("closure", "Close a set of generators under the category operations");
  clo->add_option("--gen", o->gen_file, "File with one partition literal per line")->required();
  clo->add_option("--bound", o->bound, "Leg bound of the result")->required();
  clo->add_option("--work", o->work, "Working leg bound (default bound + 2)");
  clo->add_flag("--colored", o->colored, "Seed both colors instead of white only");
  clo->add_flag("--pairings", o->pairings_only, "Keep only pairings in the output");
  clo->add_flag("--lines", o->lines, "Print one literal per line instead of JSON");
  clo->callback([&] { selected = [&] { return closure_cmd(*o); }; });

  auto* tm = app.add_subcommand("tmap", "Matrix of the linear map T_p");
  tm->add_option("--partition", o->partition, "Partition literal")->required();
  tm->add_option("--n", o->n, "Dimension N")->required();
  tm->add_flag("--twisted", o->twisted, "Use signed Kronecker symbols");
  tm->callback([&] { selected = [&] { return tmap_cmd(*o); }; });

  for (bool inverse : {false, true}) {
    auto* sub = app.add_subcommand(inverse ? "wg" : "gram", inverse ? "Weingarten matrix" : "Gram matrix");
    category_options(sub, *o);
    word_options(sub, *o);
    sub->add_option("--n", o->n, "Dimension N")->required();
    if (inverse) sub->add_flag("--pseudo", o->pseudo, "Allow a generalized inverse when singular");
    sub->callback([&, inverse] { selected = [&, inverse] { return gram_cmd(*o, inverse); }; });
  }

  auto* mom = app.add_subcommand("moment", "Haar integral of a coordinate monomial");
  mom->add_option("--group", o->group, "Easy group")->required();
  mom->add_option("--n", o->n, "Dimension N")->required();
  mom->add_option("--monomial", o->monomial, "Monomial such as \"u[1,1] u*[2,1]\"")->required();
  mom->add_flag("--pseudo", o->pseudo, "Allow a generalized inverse when singular");
  mom->callback([&] { selected = [&] { return moment_cmd(*o); }; });

  auto* chr = app.add_subcommand("char", "Moments of truncated characters");
  category_options(chr, *o);
  word_options(chr, *o);
  chr->add_option("--n", o->n, "Dimension N");
  chr->add_option("--s", o->s, "Truncation s (default N)");
  chr->add_option("--t", o->t, "Parameter t for --limit");
  chr->add_flag("--limit", o->limit, "Large-N limit at s = tN");
  chr->add_flag("--pseudo", o->pseudo, "Allow a generalized inverse when singular");
  chr->callback([&] { selected = [&] { return char_cmd(*o); }; });

  auto* law = app.add_subcommand("laws", "Moment tables of the limiting laws");
  law->add_option("--law", o->law, "gaussian, semicircle, complexGaussian, circular, poisson, freePoisson, bessel, freeBessel");
  law->add_option("--t", o->t, "Parameter t");
  law->add_option("--s", o->s, "Bessel order s (0 for infinity)")->default_val(2);
  law->add_option("--kmax", o->kmax, "Largest moment");
  law->add_option("--word", o->word, "Single moment along a color word");
  law->callback([&] { selected = [&] { return laws_cmd(*o); }; });

  auto* sph = app.add_subcommand("sphere", "Integrals over real spheres");
  sph->add_option("--kind", o->kind, "real, real_half or real_free");
  sph->add_option("--n", o->n, "Dimension N")->required();
  sph->add_option("--indices", o->indices, "Comma separated indices");
  sph->add_option("--l", o->l, "Exponent l for --formula");
  sph->add_flag("--formula", o->formula, "Compare the closed free formula for x_1^{2l}");
  sph->add_flag("--pseudo", o->pseudo, "Allow a generalized inverse when singular");
  sph->callback([&] { selected = [&] { return sphere_cmd(*o); }; });

  auto* pi = app.add_subcommand("pispace", "Integrals over spaces of partial isometries");
  pi->add_option("--family", o->family, "O, U, H or generic");
  pi->add_option("--category", o->category, "Category for the generic family");
  pi->add_option("--reflection", o->reflection, "Order s for the H family");
  pi->add_option("--m", o->m, "Rows M");
  pi->add_option("--n", o->n, "Columns N");
  pi->add_option("--l", o->l, "Rank L");
  pi->add_option("--monomial", o->monomial, "Coordinate monomial");
  pi->add_option("--sum", o->sum_k, "Moment of a K-term non-overlapping sum");
  word_options(pi, *o);
  pi->add_flag("--limit", o->limit, "Large-N limit of the non-overlapping sum");
  pi->add_option("--kappa", o->kappa, "K / N");
  pi->add_option("--lambda", o->lambda, "L / N");
  pi->add_option("--mu", o->mu, "M / N");
  pi->add_flag("--pseudo", o->pseudo, "Allow a generalized inverse when singular");
  pi->callback([&] { selected = [&] { return pispace_cmd(*o); }; });

  auto* tl = app.add_subcommand("tl", "Evaluate an expression in the Temperley-Lieb algebra");
  tl->add_option("--k", o->k, "Strands")->required();
  tl->add_option("--delta", o->delta, "Loop parameter");
  tl->add_option("--expr", o->expr, "Expression over e<i>, E<i>, id, +, -, * and rationals")->required();
  tl->callback([&] { selected = [&] { return tl_cmd(*o); }; });

  auto* orc = app.add_subcommand("oracle", "Brute-force and Monte Carlo oracles");
  orc->add_option("--engine", o->engine, "sn, hns, mc, sphere, weyl or stationary")->required();
  orc->add_option("--n", o->n, "Dimension")->required();
  orc->add_option("--group", o->group, "O, U, B or C for the mc engine");
  orc->add_option("--monomial", o->monomial, "Coordinate monomial");
  orc->add_option("--indices", o->indices, "Sphere indices");
  orc->add_option("--s", o->s, "Root order for hns")->default_val(2);
  orc->add_option("--t", o->t, "Truncation t for the sn character law");
  orc->add_option("--p", o->p, "Tensor power for stationary");
  orc->add_option("--word", o->word, "Exponent word for stationary");
  orc->add_option("--count", o->count, "Random unitaries for weyl");
  orc->add_flag("--matrix", o->matrix, "Include T_p in the output");
  mc_options(orc, *o);
  orc->callback([&] { selected = [&] { return oracle_cmd(*o); }; });

  auto* ver = app.add_subcommand("verify", "Run the cross-check suite");
  ver->add_option("targets", o->targets, "all or section names");
  ver->add_flag("--quick", o->quick, "Reduced sizes and sample counts");
  ver->callback([&] { selected = [&] { return verify_cmd(*o); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Outcome outcome;
  try {
    outcome = selected();
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (std::out_of_range const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (std::domain_error const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (std::length_error const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (GramSingular const& e) {
    err << "error: " << e.what() << " (pass --pseudo to use a generalized inverse)\n";
    return 2;
  }
  if (outcome.plain) {
    for (auto const& line : outcome.lines) out << line << '\n';
  } else {
    out << dump(envelope(args, outcome)) << '\n';
  }
  return outcome.defects.empty() ? 0 : 1;
}

}  // namespace easyq::cli
