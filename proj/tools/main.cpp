// grodeg: batch front end for the Groebner-degeneration library.
//
// One verb per invocation; JSON report on stdout (and --out), human notes on
// stderr.  Exit codes: 0 success, 1 failed verdict, 2 input error, 3 budget
// exhausted / inconclusive.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <grodeg/collapse.hpp>
#include <grodeg/corpus.hpp>
#include <grodeg/error.hpp>
#include <grodeg/formats.hpp>
#include <grodeg/geometry.hpp>
#include <grodeg/groebner.hpp>
#include <grodeg/hilbert.hpp>
#include <grodeg/search.hpp>
#include <grodeg/simplicial.hpp>

using namespace grodeg;
using ojson = nlohmann::ordered_json;

namespace {

struct Flags {
  std::optional<std::string> order;
  std::optional<std::string> field;
  std::optional<long> degree_ceiling;
  std::optional<long> power_bound;
  std::optional<uint64_t> seed;
  int jobs = 1;
  std::string out;
};

void add_common(CLI::App* sub, Flags& fl) {
  sub->add_option("--order", fl.order, "monomial order: lex | degrevlex");
  sub->add_option("--field", fl.field, "coefficient field: QQ | Fp:<p>");
  sub->add_option("--degree-ceiling", fl.degree_ceiling,
                  "abort Groebner runs past this total degree");
  sub->add_option("--power-bound", fl.power_bound,
                  "largest k tried for the X_i^k emptiness certificates");
  sub->add_option("--seed", fl.seed, "sampler seed override");
  sub->add_option("--jobs", fl.jobs, "worker count (runs are single-threaded)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", fl.out, "also write the JSON report to this path");
}

std::optional<Field> flag_field(const Flags& fl) {
  if (!fl.field) return std::nullopt;
  return Field::parse(*fl.field);
}

std::optional<MonomialOrder> flag_order(const Flags& fl) {
  if (!fl.order) return std::nullopt;
  return MonomialOrder::parse(*fl.order);
}

BuchbergerOptions gb_options(const Flags& fl) {
  BuchbergerOptions o;
  if (fl.degree_ceiling) o.degree_ceiling = *fl.degree_ceiling;
  return o;
}

SmoothnessOptions smooth_options(const Flags& fl) {
  SmoothnessOptions o;
  o.gb = gb_options(fl);
  if (fl.power_bound) o.power_bound = *fl.power_bound;
  return o;
}

ojson provenance(const std::string& input, const std::string& bytes,
                 ojson field, ojson order, ojson seed, ojson degree_ceiling,
                 ojson power_bound, ojson max_candidates) {
  ojson budgets;
  budgets["degree_ceiling"] = std::move(degree_ceiling);
  budgets["power_bound"] = std::move(power_bound);
  budgets["max_candidates"] = std::move(max_candidates);
  ojson p;
  p["input"] = input;
  p["input_fnv1a"] = fnv1a_hex(bytes);
  p["field"] = std::move(field);
  p["order"] = std::move(order);
  p["seed"] = std::move(seed);
  p["budgets"] = std::move(budgets);
  return p;
}

int emit(const ojson& report, const Flags& fl, int code) {
  std::string text = report.dump(2);
  text += '\n';
  std::fwrite(text.data(), 1, text.size(), stdout);
  if (!fl.out.empty()) {
    std::ofstream f(fl.out, std::ios::binary);
    if (!f) throw ParseError(fl.out, "cannot write file");
    f << text;
  }
  return code;
}

ojson poly_list(const std::vector<Polynomial>& polys, const MonomialOrder& ord) {
  ojson a = ojson::array();
  for (const Polynomial& p : polys) a.push_back(p.to_string(ord));
  return a;
}

ojson monomial_list(const MonomialIdeal& ideal) {
  ojson a = ojson::array();
  for (const Monomial& m : ideal.generators()) a.push_back(m.to_string());
  return a;
}

ojson complex_json(const SimplicialComplex& cx) {
  ojson facets = ojson::array();
  for (const Face& f : cx.facets()) facets.push_back(f.vertices());
  ojson j;
  j["n"] = cx.nverts() - 1;
  j["facets"] = facets;
  return j;
}

ojson num(const mpz_class& z) {
  if (z.fits_slong_p()) return ojson(z.get_si());
  return ojson(z.get_str());
}

ojson num(const mpq_class& q) {
  if (q.get_den() == 1) return num(q.get_num());
  return ojson(q.get_str());
}

struct LoadedIdeal {
  std::string bytes;
  Field field;
  MonomialOrder order;
  Ideal ideal;
};

LoadedIdeal load_ideal(const std::string& path, const Flags& fl) {
  std::string bytes = read_file(path);
  IdealFile file = parse_ideal_text(bytes, path);
  Field field = file.choose_field(flag_field(fl));
  MonomialOrder order = file.choose_order(flag_order(fl));
  Ideal ideal = file.resolve(field);
  return LoadedIdeal{std::move(bytes), std::move(field), std::move(order),
                     std::move(ideal)};
}

int run_gb(const std::string& path, const Flags& fl) {
  LoadedIdeal in = load_ideal(path, fl);
  BuchbergerOptions opts = gb_options(fl);
  GroebnerBasis gb = reduced_basis(buchberger(in.ideal, in.order, opts));
  ojson rep;
  rep["verb"] = "gb";
  rep["provenance"] =
      provenance(path, in.bytes, in.field.to_string(), in.order.to_string(),
                 nullptr, opts.degree_ceiling, nullptr, nullptr);
  rep["basis"] = poly_list(gb.elements(), in.order);
  rep["initial_ideal"] = monomial_list(gb.initial_ideal());
  rep["reduced"] = true;
  rep["size"] = gb.size();
  return emit(rep, fl, 0);
}

int run_initial(const std::string& path, const Flags& fl) {
  LoadedIdeal in = load_ideal(path, fl);
  BuchbergerOptions opts = gb_options(fl);
  GroebnerBasis gb = buchberger(in.ideal, in.order, opts);
  MonomialIdeal lead = gb.initial_ideal();
  ojson rep;
  rep["verb"] = "initial";
  rep["provenance"] =
      provenance(path, in.bytes, in.field.to_string(), in.order.to_string(),
                 nullptr, opts.degree_ceiling, nullptr, nullptr);
  rep["initial_ideal"] = monomial_list(lead);
  rep["squarefree"] = lead.is_squarefree();
  rep["complex"] =
      lead.is_squarefree() ? complex_json(complex_of(lead)) : ojson(nullptr);
  return emit(rep, fl, 0);
}

int run_eliminate(const std::string& path, int drop, const Flags& fl) {
  LoadedIdeal in = load_ideal(path, fl);
  BuchbergerOptions opts = gb_options(fl);
  Ideal elim = eliminate(in.ideal, drop, in.order, opts);
  ojson rep;
  rep["verb"] = "eliminate";
  rep["provenance"] =
      provenance(path, in.bytes, in.field.to_string(), in.order.to_string(),
                 nullptr, opts.degree_ceiling, nullptr, nullptr);
  rep["drop"] = drop;
  rep["generators"] = poly_list(elim.generators(), in.order);
  return emit(rep, fl, 0);
}

int run_homology(const std::string& path, const Flags& fl) {
  std::string bytes = read_file(path);
  SimplicialComplex cx = parse_complex_text(bytes, path);
  Field field = flag_field(fl).value_or(Field::rationals());
  HomologyProfile h = reduced_homology(cx, field);
  ojson rep;
  rep["verb"] = "homology";
  rep["provenance"] = provenance(path, bytes, field.to_string(), nullptr,
                                 nullptr, nullptr, nullptr, nullptr);
  rep["nverts"] = cx.nverts();
  rep["dim"] = cx.dim();
  ojson ranks;
  for (int i = -1; i <= cx.dim(); ++i) ranks[std::to_string(i)] = h.rank(i);
  rep["ranks"] = ranks;
  rep["acyclic"] = is_acyclic(cx, field, cx.dim());
  if (cx.is_void()) {
    rep["cohen_macaulay"] = nullptr;
    rep["a_invariant_negative"] = nullptr;
  } else {
    rep["cohen_macaulay"] = is_cohen_macaulay(cx, field);
    rep["a_invariant_negative"] = a_invariant_negative(cx, field);
  }
  return emit(rep, fl, 0);
}

int run_collapse(const std::string& path, const Flags& fl) {
  std::string bytes = read_file(path);
  SimplicialComplex cx = parse_complex_text(bytes, path);
  Graph g = Graph::from_complex(cx);
  CollapseResult r = collapse(g);
  std::vector<int> all(static_cast<size_t>(g.nverts()));
  for (int v = 0; v < g.nverts(); ++v) all[static_cast<size_t>(v)] = v;
  ojson rep;
  rep["verb"] = "collapse";
  rep["provenance"] = provenance(path, bytes, nullptr, nullptr, nullptr,
                                 nullptr, nullptr, nullptr);
  rep["nverts"] = g.nverts();
  ojson edges = ojson::array();
  for (auto [a, b] : g.edges()) edges.push_back(ojson::array({a, b}));
  rep["edges"] = edges;
  rep["is_connected"] = is_connected(g);
  rep["is_tree"] = is_tree(g);
  rep["free_vertices"] = free_vertices(g, all);
  rep["ell"] = r.count();
  rep["removed"] = r.removed;
  rep["core"] = r.core;
  if (g.nverts() <= 8) {
    std::vector<CollapseResult> branches = collapse_all_branches(g);
    bool ell_invariant = true;
    for (const CollapseResult& b : branches)
      ell_invariant = ell_invariant && b.count() == r.count();
    ojson bj;
    bj["distinct"] = branches.size();
    bj["ell_invariant"] = ell_invariant;
    bj["full_invariant"] = branches.size() == 1;
    rep["branches"] = bj;
  } else {
    rep["branches"] = nullptr;
  }
  return emit(rep, fl, 0);
}

int run_smooth(const std::string& path, const Flags& fl) {
  LoadedIdeal in = load_ideal(path, fl);
  SmoothnessOptions opts = smooth_options(fl);
  SmoothnessReport r = is_smooth_projective_curve(in.ideal, opts);
  ojson rep;
  rep["verb"] = "smooth";
  rep["provenance"] = provenance(path, in.bytes, in.field.to_string(), nullptr,
                                 nullptr, opts.gb.degree_ceiling,
                                 opts.power_bound, nullptr);
  rep["verdict"] = to_string(r.verdict);
  rep["certificate"] = r.certificate;
  rep["witness"] = r.witness ? ojson(r.witness->to_string()) : ojson(nullptr);
  rep["certified_powers"] = r.certified_powers;
  rep["minors_used"] = r.minors_used;
  rep["minors_total"] = r.minors_total;
  return emit(rep, fl, r.verdict == SmoothVerdict::inconclusive ? 3 : 0);
}

int run_genus(const std::string& path, const Flags& fl) {
  LoadedIdeal in = load_ideal(path, fl);
  SmoothnessOptions opts = smooth_options(fl);
  CurveSummary cs = genus(in.ideal, in.order, opts);
  ojson rep;
  rep["verb"] = "genus";
  rep["provenance"] =
      provenance(path, in.bytes, in.field.to_string(), in.order.to_string(),
                 nullptr, opts.gb.degree_ceiling, opts.power_bound, nullptr);
  rep["smooth"] = cs.smooth == SmoothVerdict::inconclusive
                      ? ojson("inconclusive")
                      : ojson(cs.smooth == SmoothVerdict::smooth);
  rep["genus"] = num(cs.genus);
  rep["degree"] = num(cs.degree);
  ojson pts = ojson::array();
  for (const ProjectivePoint& p : cs.singular_coordinate_points)
    pts.push_back(p.to_string());
  rep["singular_points"] = pts;
  ojson hp = ojson::array();
  for (const mpq_class& c : cs.hilbert_polynomial) hp.push_back(num(c));
  rep["hilbert_polynomial"] = hp;
  return emit(rep, fl, cs.smooth == SmoothVerdict::inconclusive ? 3 : 0);
}

int run_project(const std::string& path, const Flags& fl) {
  LoadedIdeal in = load_ideal(path, fl);
  BuchbergerOptions opts = gb_options(fl);
  GroebnerBasis gb = reduced_basis(buchberger(in.ideal, in.order, opts));
  ProjectionResult pr = project_from_p0(in.ideal, gb, opts);
  ojson rep;
  rep["verb"] = "project";
  rep["provenance"] =
      provenance(path, in.bytes, in.field.to_string(), in.order.to_string(),
                 nullptr, opts.degree_ceiling, nullptr, nullptr);
  rep["nvars"] = pr.basis.nvars();
  rep["variable_map"] = pr.variable_map;
  rep["basis"] = poly_list(pr.basis.elements(), pr.basis.order());
  rep["initial_ideal"] = monomial_list(pr.basis.initial_ideal());
  return emit(rep, fl, 0);
}

int run_fiber(const std::string& path, int vertex, const Flags& fl) {
  LoadedIdeal in = load_ideal(path, fl);
  BuchbergerOptions opts = gb_options(fl);
  GroebnerBasis gb = reduced_basis(buchberger(in.ideal, in.order, opts));
  FiberResult fr = fiber_over_coordinate_point(in.ideal, gb, vertex, opts);
  ojson rep;
  rep["verb"] = "fiber";
  rep["provenance"] =
      provenance(path, in.bytes, in.field.to_string(), in.order.to_string(),
                 nullptr, opts.degree_ceiling, nullptr, nullptr);
  rep["vertex"] = vertex;
  rep["q"] = fr.q.to_string();
  rep["mu"] = fr.mu.to_string();
  rep["lambda"] = fr.lambda.to_string();
  rep["alpha"] = fr.alpha.to_string();
  rep["witness_index"] = fr.witness_index;
  rep["on_curve"] = fr.on_curve;
  rep["q_singular"] = fr.q_singular;
  rep["image_singular"] = fr.image_singular;
  rep["transfer_agrees"] = fr.transfer_agrees();
  bool ok = fr.on_curve && fr.transfer_agrees();
  return emit(rep, fl, ok ? 0 : 1);
}

ojson report_json(const VerificationReport& r) {
  ojson j;
  j["generated"] = r.generated;
  j["rejected"] = r.rejected;
  j["valid"] = r.valid;
  j["smooth"] = r.smooth;
  j["singular"] = r.singular;
  j["inconclusive"] = r.inconclusive;
  j["truncated"] = r.truncated;
  j["alarms"] = r.alarms;
  ojson ex;
  ex["smooth"] = r.smooth_exemplar ? ojson(*r.smooth_exemplar) : ojson(nullptr);
  ex["singular"] =
      r.singular_exemplar ? ojson(*r.singular_exemplar) : ojson(nullptr);
  ex["inconclusive"] =
      r.inconclusive_exemplar ? ojson(*r.inconclusive_exemplar) : ojson(nullptr);
  j["exemplars"] = ex;
  j["singular_points"] = r.singular_points;
  return j;
}

void sweep_table(const VerificationReport& r, bool tree, bool found) {
  std::fprintf(stderr,
               "candidates: generated %ld, rejected %ld, valid %ld%s\n",
               r.generated, r.rejected, r.valid,
               r.truncated ? " (truncated)" : "");
  std::fprintf(stderr, "verdicts:   smooth %ld, singular %ld, inconclusive %ld\n",
               r.smooth, r.singular, r.inconclusive);
  if (!r.singular_points.empty()) {
    std::fprintf(stderr, "witnesses: ");
    for (const std::string& w : r.singular_points)
      std::fprintf(stderr, " %s", w.c_str());
    std::fprintf(stderr, "\n");
  }
  for (const std::string& a : r.alarms)
    std::fprintf(stderr, "ALARM: %s\n", a.c_str());
  std::fprintf(stderr, "elapsed:    %.2fs\n", r.wall_seconds);
  if (tree)
    std::fprintf(stderr, "result:     %s\n",
                 found ? "smoothing found" : "no smoothing found");
  else
    std::fprintf(stderr, "result:     %s\n",
                 r.pass() && r.alarms.empty() ? "PASS" : "FAIL");
}

int run_sweep(const std::string& path, const Flags& fl) {
  std::string bytes = read_file(path);
  CandidateFamily fam = parse_sweep_text(bytes, path);
  if (fl.seed) fam.seed = *fl.seed;
  if (fl.degree_ceiling) {
    fam.gb.degree_ceiling = *fl.degree_ceiling;
    fam.smoothness.gb.degree_ceiling = *fl.degree_ceiling;
  }
  if (fl.power_bound) fam.smoothness.power_bound = *fl.power_bound;
  Graph g = Graph::from_complex(fam.delta);
  bool tree = is_tree(g);

  ojson rep;
  rep["verb"] = "sweep";
  bool random = fam.mode == CandidateFamily::Mode::random;
  rep["provenance"] = provenance(
      path, bytes, fam.field.to_string(), fam.order.to_string(),
      random ? ojson(fam.seed) : ojson(nullptr), fam.gb.degree_ceiling,
      fam.smoothness.power_bound, fam.max_candidates);
  ojson gj;
  gj["n"] = g.nverts() - 1;
  ojson edges = ojson::array();
  for (auto [a, b] : g.edges()) edges.push_back(ojson::array({a, b}));
  gj["edges"] = edges;
  rep["graph"] = gj;
  rep["is_tree"] = tree;
  rep["mode"] = random ? "random" : "exhaustive";
  rep["slots"] = candidate_slots(fam.delta, fam.order).total();
  rep["seeded"] = fam.seeded.size();

  if (!tree) {
    VerificationReport vr = verify_non_tree_is_singular(g, fam);
    rep["report"] = report_json(vr);
    rep["pass"] = vr.pass() && vr.alarms.empty();
    sweep_table(vr, false, false);
    int code = 0;
    if (!vr.alarms.empty() || vr.smooth > 0)
      code = 1;
    else if (vr.inconclusive > 0 || vr.truncated)
      code = 3;
    return emit(rep, fl, code);
  }
  SmoothingResult sr = find_tree_smoothing(fam);
  rep["report"] = report_json(sr.report);
  rep["found"] = sr.found;
  rep["note"] = sr.note.empty() ? ojson(nullptr) : ojson(sr.note);
  if (sr.found) {
    ojson sj;
    sj["generators"] = poly_list(sr.ideal->generators(), fam.order);
    sj["genus"] = num(sr.summary->genus);
    sj["degree"] = num(sr.summary->degree);
    rep["smoothing"] = sj;
  } else {
    rep["smoothing"] = nullptr;
  }
  sweep_table(sr.report, true, sr.found);
  int code = 0;
  if (!sr.report.alarms.empty())
    code = 1;
  else if (!sr.found && sr.report.truncated)
    code = 3;
  return emit(rep, fl, code);
}

// ---------------------------------------------------------------------------
// verify-examples: re-certify the built-in corpus.

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

void check_rnc(std::vector<Check>& checks, int n) {
  const Field qq = Field::rationals();
  const MonomialOrder lex = MonomialOrder::lex();
  Ideal ideal = rational_normal_curve(qq, n);
  std::string name = "rnc-n" + std::to_string(n);

  bool minors_gb = is_groebner_basis(ideal.generators(), lex);
  GroebnerBasis gb = reduced_basis(buchberger(ideal, lex));
  std::vector<Monomial> expect;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      expect.push_back(Monomial::variable(n + 1, i) *
                       Monomial::variable(n + 1, j + 1));
  bool initial_ok =
      gb.initial_ideal() == MonomialIdeal::from_generators(n + 1, expect);
  bool complex_ok =
      complex_of(gb.initial_ideal()) == path_graph(n + 1).as_complex();
  bool ell_ok = collapse(path_graph(n + 1)).count() == n;
  CurveSummary cs = genus(ideal, lex);
  bool smooth_ok = cs.smooth == SmoothVerdict::smooth;
  bool genus_ok = cs.genus == 0 && cs.degree == n;
  bool hp_ok = cs.hilbert_polynomial.size() == 2 &&
               cs.hilbert_polynomial[0] == 1 && cs.hilbert_polynomial[1] == n;

  bool pass = minors_gb && initial_ok && complex_ok && ell_ok && smooth_ok &&
              genus_ok && hp_ok;
  std::string detail = "minors-gb " + std::to_string(minors_gb) + ", initial " +
                       std::to_string(initial_ok) + ", path " +
                       std::to_string(complex_ok) + ", ell " +
                       std::to_string(ell_ok) + ", smooth " +
                       std::to_string(smooth_ok) + ", genus " +
                       std::to_string(genus_ok) + ", hilbert " +
                       std::to_string(hp_ok);
  checks.push_back({name, pass, detail});
}

void check_star(std::vector<Check>& checks, const Field& field,
                const MonomialOrder& ord) {
  std::string name = "star-" + field.to_string() + "-" + ord.to_string();
  Ideal ideal = star_example(field);
  GroebnerBasis gb = reduced_basis(buchberger(ideal, ord));
  std::vector<Monomial> expect = {
      Monomial::variable(4, 0) * Monomial::variable(4, 1),
      Monomial::variable(4, 0) * Monomial::variable(4, 2),
      Monomial::variable(4, 1) * Monomial::variable(4, 2)};
  bool initial_ok =
      gb.initial_ideal() == MonomialIdeal::from_generators(4, expect);
  bool complex_ok =
      complex_of(gb.initial_ideal()) == star_graph().as_complex();
  CurveSummary cs = genus(ideal, ord);
  bool smooth_ok = cs.smooth == SmoothVerdict::smooth;
  bool genus_ok = cs.genus == 0 && cs.degree == 3;
  bool pass = initial_ok && complex_ok && smooth_ok && genus_ok;
  std::string detail = "initial " + std::to_string(initial_ok) + ", star " +
                       std::to_string(complex_ok) + ", smooth " +
                       std::to_string(smooth_ok) + ", genus " +
                       std::to_string(genus_ok);
  checks.push_back({name, pass, detail});
}

void check_collapse_family(std::vector<Check>& checks) {
  long graphs = 0, violations = 0;
  for (int v = 1; v <= 5; ++v) {
    for (const Graph& g : connected_graphs(v)) {
      ++graphs;
      bool tree = is_tree(g);
      if ((collapse(g).count() == v - 1) != tree) ++violations;
      if (!tree && collapse_all_branches(g).size() != 1) ++violations;
    }
  }
  checks.push_back({"collapse-family",
                    violations == 0,
                    std::to_string(graphs) + " connected graphs on <= 5 "
                    "vertices, " + std::to_string(violations) + " violations"});
}

void check_four_cycle(std::vector<Check>& checks) {
  SimplicialComplex cx = cycle_graph(4).as_complex();
  const Field qq = Field::rationals();
  bool cm = is_cohen_macaulay(cx, qq);
  bool aneg = a_invariant_negative(cx, qq);
  bool h1 = reduced_homology(cx, qq).rank(1) == 1;
  bool ell = collapse(cycle_graph(4)).count() == 0;
  bool pass = cm && !aneg && h1 && ell;
  checks.push_back({"four-cycle-profile", pass,
                    "cohen-macaulay " + std::to_string(cm) +
                        ", a-invariant-negative " + std::to_string(aneg) +
                        ", h1 " + std::to_string(h1) + ", ell0 " +
                        std::to_string(ell)});
}

int run_verify_examples(const Flags& fl) {
  std::vector<Check> checks;
  for (int n = 3; n <= 6; ++n) check_rnc(checks, n);
  for (const Field& field : {Field::rationals(), Field::prime(2),
                             Field::prime(3), Field::prime(5)})
    for (const MonomialOrder& ord :
         {MonomialOrder::lex(), MonomialOrder::degrevlex()})
      check_star(checks, field, ord);
  check_collapse_family(checks);
  check_four_cycle(checks);

  bool all = true;
  ojson list = ojson::array();
  for (const Check& c : checks) {
    all = all && c.pass;
    std::fprintf(stderr, "%s %s (%s)\n", c.pass ? "PASS" : "FAIL",
                 c.name.c_str(), c.detail.c_str());
    ojson j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    list.push_back(j);
  }
  ojson rep;
  rep["verb"] = "verify-examples";
  rep["provenance"] = provenance("builtin:corpus", "builtin:corpus", nullptr,
                                 nullptr, nullptr, nullptr, nullptr, nullptr);
  rep["checks"] = list;
  rep["all_pass"] = all;
  return emit(rep, fl, all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner degenerations of projective curves: bases, initial "
               "complexes, collapse, smoothness, projection, and theorem "
               "sweeps"};
  app.require_subcommand(1);

  Flags fl;
  std::string input;
  int drop = 1;
  int vertex = 1;

  std::function<int()> runner;

  auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  gb_cmd->add_option("input", input, "ideal file")->required();
  add_common(gb_cmd, fl);
  gb_cmd->callback([&] { runner = [&] { return run_gb(input, fl); }; });

  auto* init_cmd =
      app.add_subcommand("initial", "initial ideal and its complex");
  init_cmd->add_option("input", input, "ideal file")->required();
  add_common(init_cmd, fl);
  init_cmd->callback([&] { runner = [&] { return run_initial(input, fl); }; });

  auto* elim_cmd = app.add_subcommand(
      "eliminate", "eliminate the leading block of variables");
  elim_cmd->add_option("input", input, "ideal file")->required();
  elim_cmd->add_option("--drop", drop, "number of leading variables to drop")
      ->check(CLI::PositiveNumber);
  add_common(elim_cmd, fl);
  elim_cmd->callback(
      [&] { runner = [&] { return run_eliminate(input, drop, fl); }; });

  auto* hom_cmd =
      app.add_subcommand("homology", "reduced homology of a complex");
  hom_cmd->add_option("input", input, "complex file (JSON)")->required();
  add_common(hom_cmd, fl);
  hom_cmd->callback([&] { runner = [&] { return run_homology(input, fl); }; });

  auto* col_cmd =
      app.add_subcommand("collapse", "free-vertex collapse of a graph");
  col_cmd->add_option("input", input, "complex file (JSON)")->required();
  add_common(col_cmd, fl);
  col_cmd->callback([&] { runner = [&] { return run_collapse(input, fl); }; });

  auto* smooth_cmd =
      app.add_subcommand("smooth", "Jacobian smoothness of a projective curve");
  smooth_cmd->add_option("input", input, "ideal file")->required();
  add_common(smooth_cmd, fl);
  smooth_cmd->callback([&] { runner = [&] { return run_smooth(input, fl); }; });

  auto* genus_cmd =
      app.add_subcommand("genus", "degree, genus, and smoothness summary");
  genus_cmd->add_option("input", input, "ideal file")->required();
  add_common(genus_cmd, fl);
  genus_cmd->callback([&] { runner = [&] { return run_genus(input, fl); }; });

  auto* proj_cmd =
      app.add_subcommand("project", "projection of the curve from P0");
  proj_cmd->add_option("input", input, "ideal file")->required();
  add_common(proj_cmd, fl);
  proj_cmd->callback([&] { runner = [&] { return run_project(input, fl); }; });

  auto* fiber_cmd = app.add_subcommand(
      "fiber", "fiber of the projection over a coordinate point");
  fiber_cmd->add_option("input", input, "ideal file")->required();
  fiber_cmd->add_option("--vertex", vertex, "coordinate index a of P'_a")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(fiber_cmd, fl);
  fiber_cmd->callback(
      [&] { runner = [&] { return run_fiber(input, vertex, fl); }; });

  auto* sweep_cmd =
      app.add_subcommand("sweep", "candidate sweep for the tree theorem");
  sweep_cmd->add_option("input", input, "sweep spec file (JSON)")->required();
  add_common(sweep_cmd, fl);
  sweep_cmd->callback([&] { runner = [&] { return run_sweep(input, fl); }; });

  auto* verify_cmd = app.add_subcommand(
      "verify-examples", "re-certify the built-in example corpus");
  add_common(verify_cmd, fl);
  verify_cmd->callback(
      [&] { runner = [&] { return run_verify_examples(fl); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return runner();
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const BudgetError& e) {
    std::fprintf(stderr, "budget: %s\n", e.what());
    return 3;
  } catch (const InternalConsistencyError& e) {
    std::fprintf(stderr, "consistency failure: %s\n", e.what());
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
