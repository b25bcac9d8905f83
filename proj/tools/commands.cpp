#include "commands.hpp"

#include "tropkit/document.hpp"
#include "tropkit/fan_engine.hpp"
#include "tropkit/geomtrop_schoen.hpp"
#include "tropkit/oracles.hpp"
#include "tropkit/toric_dvr.hpp"
#include "tropkit/tropical.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace tropkit::cli {

namespace {

// Wrong document kind, bad flag values and the like.
struct UsageError : Error {
  using Error::Error;
};

struct Input {
  std::string name;
  std::string digest;
  Document doc;
};

class Report {
 public:
  explicit Report(std::string command) { add("command", std::move(command)); }
  void add(const std::string& key, const std::string& value) { body_ << key << ": " << value << '\n'; }
  void add(const std::string& key, const Integer& value) { add(key, value.str()); }
  void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "yes" : "no")); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void input(const Input& in) { add("input", in.name + " fnv1a64:" + in.digest); }
  void document(const Document& doc) { doc_ = render(doc); }
  void write(std::ostream& out) const {
    out << body_.str();
    if (doc_) out << "--- document\n" << *doc_;
  }

 private:
  std::ostringstream body_;
  std::optional<std::string> doc_;
};

std::string describe(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.rays().size(); ++i) s += (i ? ", " : "") + to_string(c.rays()[i]);
  s += "}";
  if (!c.lineality().empty()) {
    s += " + span{";
    for (std::size_t i = 0; i < c.lineality().size(); ++i) s += (i ? ", " : "") + to_string(c.lineality()[i]);
    s += "}";
  }
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

template <typename V>
std::string vectors(const std::vector<V>& vs) {
  if (vs.empty()) return "none";
  std::vector<std::string> parts;
  for (const auto& v : vs) parts.push_back(to_string(v));
  return join(parts);
}

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 12)
    throw UsageError(std::string(name) + " must be a positive integer");
  const std::size_t v = std::stoull(s);
  if (v == 0) throw UsageError(std::string(name) + " must be a positive integer");
  return v;
}

Limits env_limits() {
  Limits l;
  l.max_rank = env_cap("TROPKIT_MAX_RANK", l.max_rank);
  l.max_hilbert_box = env_cap("TROPKIT_MAX_HILBERT_BOX", l.max_hilbert_box);
  return l;
}

Input load(const std::string& path, const Limits& limits) {
  std::string text;
  Input in;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    in.name = "<stdin>";
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
    in.name = std::filesystem::path(path).filename().string();
  }
  in.digest = fnv1a64(text);
  in.doc = parse_document(text, limits.max_rank);
  return in;
}

template <typename T>
const T& expect_kind(const Input& in, const char* wanted) {
  if (const T* p = std::get_if<T>(&in.doc.payload)) return *p;
  throw UsageError(in.name + ": expected a " + std::string(wanted) + " document, got " + kind_name(in.doc));
}

void add_violation(Report& r, const FanViolation& v) {
  r.add("verdict", "FAIL");
  r.add("reason", v.reason);
  r.add("pair", std::to_string(v.first) + " " + std::to_string(v.second));
  r.add("intersection", describe(v.intersection));
}

// The fan of a fan document; on a violation the report is completed and the
// exit code stored in `code`.
std::optional<Fan> fan_of(const FanDocument& doc, Report& r, int& code) {
  FanCheck check = validate_fan(doc.rank, to_cones(doc));
  if (check.ok()) return std::move(*check.fan);
  add_violation(r, *check.violation);
  code = 1;
  return std::nullopt;
}

// fan or admissible_fan document
std::optional<AdmissibleFan> admissible_of(const Input& in, Report& r, int& code) {
  const FanDocument* fd = std::get_if<FanDocument>(&in.doc.payload);
  Integer scale = 1;
  if (const auto* a = std::get_if<AdmissibleFanDocument>(&in.doc.payload)) {
    fd = &a->fan;
    scale = a->scale;
  }
  if (fd == nullptr) throw UsageError(in.name + ": expected a fan or admissible_fan document, got " + kind_name(in.doc));
  auto fan = fan_of(*fd, r, code);
  if (!fan) return std::nullopt;
  const auto check = is_admissible(*fan);
  if (!check.admissible) {
    r.add("verdict", "FAIL");
    r.add("reason", "not admissible");
    r.add("witness", to_string(*check.witness));
    code = 1;
    return std::nullopt;
  }
  return AdmissibleFan(std::move(*fan), scale);
}

std::optional<PolyhedralComplex> complex_of(const ComplexDocument& doc, Report& r, int& code) {
  ComplexCheck check = validate_complex(doc.rank, to_cells(doc));
  if (check.ok()) return std::move(*check.complex);
  r.add("verdict", "FAIL");
  r.add("reason", check.violation->reason);
  r.add("pair", std::to_string(check.violation->first) + " " + std::to_string(check.violation->second));
  code = 1;
  return std::nullopt;
}

Document fan_document(const Fan& f) { return Document{1, to_document(f)}; }

QVector parse_point(const std::string& text, std::size_t rank) {
  const auto v = parse_vector_list(text);
  if (v.size() != 1) throw UsageError("--point expects one vector");
  if (v.front().size() != rank) throw RankMismatch("--point has the wrong number of entries");
  return v.front();
}

std::string tied_text(const std::vector<ZVector>& exps) { return vectors(exps); }

// --------------------------------------------------------------------------
// fan

int fan_validate(const Input& in, Report& r) {
  const auto& doc = expect_kind<FanDocument>(in, "fan");
  int code = 0;
  auto fan = fan_of(doc, r, code);
  if (!fan) return code;
  r.add("verdict", "PASS");
  r.add("cones", fan->cones().size());
  r.add("maximal_cones", fan->maximal_indices().size());
  r.add("dimension", fan->is_empty() ? std::string("empty") : std::to_string(fan->dimension()));
  r.document(fan_document(*fan));
  return 0;
}

int fan_refines(const Input& a, const Input& b, Report& r) {
  int code = 0;
  auto fine = fan_of(expect_kind<FanDocument>(a, "fan"), r, code);
  if (!fine) return code;
  auto coarse = fan_of(expect_kind<FanDocument>(b, "fan"), r, code);
  if (!coarse) return code;
  if (fine->ambient_rank() != coarse->ambient_rank()) throw RankMismatch("fans have different ambient ranks");
  const auto ab = support_contained(*fine, *coarse);
  const auto ba = support_contained(*coarse, *fine);
  const bool ok = refines(*fine, *coarse);
  r.add("verdict", ok ? "PASS" : "FAIL");
  r.add("same_support", ab.covered && ba.covered);
  if (!ab.covered) r.add("witness_outside_coarse", to_string(*ab.witness));
  if (!ba.covered) r.add("witness_outside_fine", to_string(*ba.witness));
  return ok ? 0 : 1;
}

int fan_common_refinement(const Input& a, const Input& b, Report& r) {
  int code = 0;
  auto fa = fan_of(expect_kind<FanDocument>(a, "fan"), r, code);
  if (!fa) return code;
  auto fb = fan_of(expect_kind<FanDocument>(b, "fan"), r, code);
  if (!fb) return code;
  if (fa->ambient_rank() != fb->ambient_rank()) throw RankMismatch("fans have different ambient ranks");
  try {
    const Fan f = common_refinement(*fa, *fb);
    r.add("verdict", "PASS");
    r.add("maximal_cones", f.maximal_indices().size());
    r.document(fan_document(f));
    return 0;
  } catch (const SupportMismatch& e) {
    r.add("verdict", "FAIL");
    r.add("reason", e.what());
    return 1;
  }
}

int fan_star(const Input& in, const std::string& rays, const std::string& lineality, Report& r) {
  const auto& doc = expect_kind<FanDocument>(in, "fan");
  int code = 0;
  auto fan = fan_of(doc, r, code);
  if (!fan) return code;
  const auto rs = parse_vector_list(rays);
  const auto ls = parse_vector_list(lineality);
  for (const auto& v : rs)
    if (v.size() != doc.rank) throw RankMismatch("--cone vector has the wrong number of entries");
  for (const auto& v : ls)
    if (v.size() != doc.rank) throw RankMismatch("--lineality vector has the wrong number of entries");
  const Cone sigma = Cone::from_generators(doc.rank, rs, ls);
  const Fan s = star(*fan, sigma);
  r.add("cone", describe(sigma));
  r.add("maximal_cones", s.maximal_indices().size());
  r.document(fan_document(s));
  return 0;
}

int fan_coarsen(const Input& in, Report& r) {
  int code = 0;
  auto fan = fan_of(expect_kind<FanDocument>(in, "fan"), r, code);
  if (!fan) return code;
  const auto c = coarsen(*fan);
  r.add("merges", c.merges);
  r.add("is_fixpoint", c.is_fixpoint);
  r.add("maximal_cones", c.fan.maximal_indices().size());
  r.document(fan_document(c.fan));
  return 0;
}

int fan_translation_space(const Input& in, Report& r) {
  int code = 0;
  auto fan = fan_of(expect_kind<FanDocument>(in, "fan"), r, code);
  if (!fan) return code;
  const auto basis = support_translation_space(*fan);
  r.add("dimension", basis.size());
  r.add("basis", vectors(basis));
  return 0;
}

// --------------------------------------------------------------------------
// trop

ValuedLaurentPolynomial single_polynomial(const Input& in) {
  const auto polys = to_polynomials(expect_kind<PolynomialDocument>(in, "polynomial"));
  if (polys.size() != 1) throw UsageError("hypersurface expects exactly one polynomial");
  return polys.front();
}

int trop_hypersurface(const Input& in, bool oracle, Report& r) {
  const auto f = single_polynomial(in);
  const auto h = tropical_hypersurface(f);
  r.add("terms", f.term_count());
  r.add("monomial", h.monomial_input);
  r.add("cells", h.complex.cells().size());
  for (std::size_t i = 0; i < h.tied.size(); ++i) r.add("cell " + std::to_string(i) + " tied", tied_text(h.tied[i]));
  int code = 0;
  if (oracle) {
    const auto o = hypersurface_grid_oracle(f, h.complex);
    r.add("oracle_probes", o.probes);
    r.add("oracle", o.agrees() ? "AGREE" : "DISAGREE");
    if (!o.agrees()) {
      r.add("oracle_disagreements", o.disagreements);
      r.add("oracle_witness", to_string(*o.first_disagreement));
      code = 1;
    }
  }
  r.document(Document{1, to_document(h.complex)});
  return code;
}

void add_form(Report& r, const std::string& prefix, const InitialForm& form) {
  r.add(prefix + "value", form.value.str());
  r.add(prefix + "exponents", vectors(form.exponents));
  r.add(prefix + "tags", join(form.tags));
  r.add(prefix + "monomial", form.is_monomial());
}

int trop_initial_form(const Input& in, const std::string& point, Report& r) {
  const auto& doc = expect_kind<PolynomialDocument>(in, "polynomial");
  const QVector w = parse_point(point, doc.rank);
  r.add("point", to_string(w));
  const auto polys = to_polynomials(doc);
  for (std::size_t i = 0; i < polys.size(); ++i)
    add_form(r, "polynomial " + std::to_string(i) + " ", initial_form(polys[i], w));
  return 0;
}

int trop_certificate(const Input& in, const std::string& point, Report& r) {
  const auto& doc = expect_kind<PolynomialDocument>(in, "polynomial");
  const QVector w = parse_point(point, doc.rank);
  const auto cert = is_in_tropicalization_certificate(to_polynomials(doc), w);
  r.add("point", to_string(w));
  r.add("excluded", cert.excluded);
  if (cert.excluded) r.add("witness_generator", cert.witness);
  for (std::size_t i = 0; i < cert.forms.size(); ++i) add_form(r, "polynomial " + std::to_string(i) + " ", cert.forms[i]);
  return 0;
}

// --------------------------------------------------------------------------
// geomtrop

int geomtrop_build(const Input& in, Report& r) {
  const auto res = geometric_tropicalization(expect_kind<BoundaryData>(in, "boundary_data"));
  for (const auto& sc : res.cones)
    r.add("stratum {" + join(sc.stratum) + "}",
          describe(sc.cone) + (sc.strictly_simplicial ? " strictly-simplicial" : " not-strictly-simplicial"));
  if (!res.fan_status.ok()) {
    add_violation(r, *res.fan_status.violation);
    return 1;
  }
  r.add("verdict", "PASS");
  r.document(fan_document(*res.fan_status.fan));
  return 0;
}

int geomtrop_schoen(const Input& in, bool oracle, Report& r) {
  const auto& data = expect_kind<BoundaryData>(in, "boundary_data");
  const auto cert = schoen_certificate(data);
  r.add("condition1", SchoenCertificate::condition1_note);
  for (const auto& e : cert.condition2)
    r.add("condition2 {" + join(e.stratum) + "} pivot " + e.pivot,
          e.solution ? to_string(*e.solution) : std::string("infeasible"));
  r.add("condition2_holds", cert.condition2_holds);
  r.add("condition3_holds", cert.condition3_holds);
  r.add("strictly_simplicial", cert.all_strictly_simplicial);
  int code = cert.lattice_conditions_hold() ? 0 : 1;
  if (oracle) {
    bool agree = true;
    for (const auto& e : cert.condition2) {
      if (e.solution) {
        for (const auto& d : data.divisors) {
          if (std::find(e.stratum.begin(), e.stratum.end(), d.id) == e.stratum.end()) continue;
          agree = agree && dot(*e.solution, d.val) == (d.id == e.pivot ? 1 : 0);
        }
      } else {
        agree = agree && !condition2_box_search(data, e.stratum, e.pivot);
      }
    }
    r.add("oracle", agree ? "AGREE" : "DISAGREE");
    if (!agree) code = 1;
  }
  r.add("verdict", cert.lattice_conditions_hold() ? "PASS" : "FAIL");
  return code;
}

int geomtrop_hubsch(const Input& in, Report& r) {
  int code = 0;
  auto fan = fan_of(expect_kind<FanDocument>(in, "fan"), r, code);
  if (!fan) return code;
  const auto rep = hubsch_check(*fan);
  for (const auto& c : rep.cones)
    r.add("cone " + std::to_string(c.cone_index),
          describe(fan->cones()[c.cone_index]) + " quotient_rank " + std::to_string(c.quotient_rank) +
              " translation " + vectors(c.translation));
  r.add("stars_rigid", rep.stars_rigid);
  r.add("coarsen_merges", rep.coarsening.merges);
  r.add("verdict", to_string(rep.verdict));
  return rep.verdict == HubschVerdict::Fail ? 1 : 0;
}

// --------------------------------------------------------------------------
// toric

int toric_admissible(const Input& in, Report& r) {
  int code = 0;
  auto af = admissible_of(in, r, code);
  if (!af) return code;
  r.add("verdict", "PASS");
  r.add("scale", af->scale());
  return 0;
}

int toric_analyze(const Input& in, bool oracle, Report& r) {
  int code = 0;
  auto af = admissible_of(in, r, code);
  if (!af) return code;
  const auto rep = special_fiber_report(*af);
  r.add("scale", af->scale());
  r.add("components", rep.components.size());
  for (const auto& c : rep.components)
    r.add("component " + std::to_string(c.cone_index),
          to_string(c.generator) + " multiplicity " + c.multiplicity.str());
  r.add("reduced", rep.reduced);
  r.add("reduction_index", rep.reduction_index);
  if (oracle) {
    bool agree = true;
    for (const auto& c : rep.components) {
      const ZVector& ray = af->fan().cones()[c.cone_index].rays().front();
      agree = agree && ray_generator_scan(ray, af->context()) == c.generator;
      agree = agree && divisorial_valuation(uniformizer(af->context()), QVector(ray), af->context()) == c.multiplicity;
    }
    const auto scaled = special_fiber_report(rescale(*af, rep.reduction_index));
    agree = agree && scaled.reduced;
    r.add("oracle", agree ? "AGREE" : "DISAGREE");
    if (!agree) return 1;
  }
  return 0;
}

int toric_rescale(const Input& in, const std::optional<long>& by, Report& r) {
  int code = 0;
  auto af = admissible_of(in, r, code);
  if (!af) return code;
  const Integer d = by ? Integer(*by) : special_fiber_report(*af).reduction_index;
  const AdmissibleFan scaled = rescale(*af, d);
  r.add("factor", d);
  r.add("scale", scaled.scale());
  r.add("reduced", special_fiber_report(scaled).reduced);
  r.document(Document{1, AdmissibleFanDocument{to_document(scaled.fan()), scaled.scale()}});
  return 0;
}

int toric_chart(const Input& in, const std::optional<std::size_t>& cone, const Limits& limits, Report& r) {
  int code = 0;
  auto af = admissible_of(in, r, code);
  if (!af) return code;
  const auto& maximal = af->fan().maximal_indices();
  std::vector<std::size_t> which;
  if (cone) {
    if (*cone >= maximal.size()) throw UsageError("--cone must index a maximal cone");
    which.push_back(*cone);
  } else {
    for (std::size_t i = 0; i < maximal.size(); ++i) which.push_back(i);
  }
  r.add("uniformizer", to_string(uniformizer(af->context())));
  for (std::size_t i : which) {
    const auto chart = chart_presentation(af->fan().cones()[maximal[i]], af->context(), limits);
    const std::string p = "chart " + std::to_string(i) + " ";
    r.add(p + "cone", describe(chart.sigma));
    r.add(p + "generators", vectors(chart.generators));
    r.add(p + "units", vectors(chart.units));
    r.add(p + "uniformizer_in_monoid", chart.uniformizer_in_monoid);
    r.add(p + "uniformizer_index",
          chart.uniformizer_index ? std::to_string(*chart.uniformizer_index) : std::string("none"));
  }
  return 0;
}

int toric_generic_fiber(const Input& in, Report& r) {
  int code = 0;
  auto af = admissible_of(in, r, code);
  if (!af) return code;
  const Fan g = generic_fiber_subfan(*af);
  r.add("maximal_cones", g.maximal_indices().size());
  r.document(fan_document(g));
  return 0;
}

// --------------------------------------------------------------------------
// tcone

int tcone_build_cmd(const Input& in, Report& r) {
  int code = 0;
  auto complex = complex_of(expect_kind<ComplexDocument>(in, "complex"), r, code);
  if (!complex) return code;
  const auto t = tcone_build(*complex);
  if (!t.fan_status.ok()) {
    add_violation(r, *t.fan_status.violation);
    return 1;
  }
  r.add("verdict", "PASS");
  r.add("cones", t.cones.size());
  r.document(fan_document(*t.fan_status.fan));
  return 0;
}

int tcone_slice(const Input& in, Report& r) {
  int code = 0;
  auto af = admissible_of(in, r, code);
  if (!af) return code;
  const auto c = slice_at_height_one(af->fan());
  r.add("cells", c.cells().size());
  r.document(Document{1, to_document(c)});
  return 0;
}

int tcone_properness(const Input& fan_in, const Input& complex_in, Report& r) {
  int code = 0;
  auto af = admissible_of(fan_in, r, code);
  if (!af) return code;
  auto complex = complex_of(expect_kind<ComplexDocument>(complex_in, "complex"), r, code);
  if (!complex) return code;
  const auto p = properness_support_check(*af, *complex);
  r.add("proper", p.proper);
  if (p.witness) r.add("witness", to_string(*p.witness));
  r.add("equal", p.equal);
  if (p.excess) r.add("excess", to_string(*p.excess));
  r.add("verdict", p.proper ? "PASS" : "FAIL");
  return p.proper ? 0 : 1;
}

}  // namespace

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polyhedral and tropical geometry toolkit", "tropkit"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Print elapsed time to standard error");

  std::string file, second, rays, lineality, point;
  bool oracle = false;
  std::optional<long> by;
  std::optional<std::size_t> cone_index;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
    CLI::App* sub = group->add_subcommand(name, help);
    sub->add_option("input", file, "Input document, or - for standard input")->required();
    return sub;
  };

  CLI::App* fan = app.add_subcommand("fan", "Fan operations");
  fan->require_subcommand(1);
  CLI::App* fan_validate_cmd = leaf(fan, "validate", "Check the fan axioms");
  CLI::App* fan_refines_cmd = leaf(fan, "refines", "Does the first fan refine the second?");
  fan_refines_cmd->add_option("coarse", second, "Coarse fan")->required();
  CLI::App* fan_common_cmd = leaf(fan, "common-refinement", "Common refinement of two fans with equal support");
  fan_common_cmd->add_option("other", second, "Second fan")->required();
  CLI::App* fan_star_cmd = leaf(fan, "star", "Star of a cone");
  fan_star_cmd->add_option("--cone", rays, "Ray generators, e.g. \"[1, 0] [1, 1]\"")->required();
  fan_star_cmd->add_option("--lineality", lineality, "Lineality generators");
  CLI::App* fan_coarsen_cmd = leaf(fan, "coarsen", "Merge adjacent cones whose union is convex");
  CLI::App* fan_translation_cmd = leaf(fan, "translation-space", "Largest subspace preserving the support");

  CLI::App* trop = app.add_subcommand("trop", "Tropical hypersurfaces and initial forms");
  trop->require_subcommand(1);
  CLI::App* trop_hyp_cmd = leaf(trop, "hypersurface", "Tropical hypersurface of one polynomial");
  trop_hyp_cmd->add_flag("--oracle-check", oracle, "Compare with a grid of minimum-attained-twice probes");
  CLI::App* trop_init_cmd = leaf(trop, "initial-form", "Initial forms at a weight");
  trop_init_cmd->add_option("--point", point, "Weight vector")->required();
  CLI::App* trop_cert_cmd = leaf(trop, "certificate", "Monomial initial form certificate at a weight");
  trop_cert_cmd->add_option("--point", point, "Weight vector")->required();

  CLI::App* geomtrop = app.add_subcommand("geomtrop", "Geometric tropicalization");
  geomtrop->require_subcommand(1);
  CLI::App* gt_build_cmd = leaf(geomtrop, "build", "Cones of the boundary strata");
  CLI::App* gt_schoen_cmd = leaf(geomtrop, "schoen-check", "Lattice conditions on the boundary data");
  gt_schoen_cmd->add_flag("--oracle-check", oracle, "Compare with a bounded exhaustive search");
  CLI::App* gt_hubsch_cmd = leaf(geomtrop, "hubsch-check", "Rigidity of stars under translation");

  CLI::App* toric = app.add_subcommand("toric", "Toric schemes over a discrete valuation ring");
  toric->require_subcommand(1);
  CLI::App* toric_adm_cmd = leaf(toric, "admissible", "Check admissibility");
  CLI::App* toric_an_cmd = leaf(toric, "analyze", "Special fibre components and multiplicities");
  toric_an_cmd->add_flag("--oracle-check", oracle, "Recompute generators by scanning and check the rescaling");
  CLI::App* toric_res_cmd = leaf(toric, "rescale", "Pass to a ramified extension");
  toric_res_cmd->add_option("--by", by, "Ramification index (default: the reduction index)")
      ->check(CLI::PositiveNumber);
  CLI::App* toric_chart_cmd = leaf(toric, "chart", "Monoid presentation of affine charts");
  toric_chart_cmd->add_option("--cone", cone_index, "Index of a maximal cone");
  CLI::App* toric_gen_cmd = leaf(toric, "generic-fiber", "Subfan at height zero");

  CLI::App* tcone = app.add_subcommand("tcone", "Cones over polyhedral complexes");
  tcone->require_subcommand(1);
  CLI::App* tc_build_cmd = leaf(tcone, "build", "Cone over a complex");
  CLI::App* tc_slice_cmd = leaf(tcone, "slice", "Slice a fan at height one");
  CLI::App* tc_proper_cmd = leaf(tcone, "properness", "Compare an admissible fan with the cone over a complex");
  tc_proper_cmd->add_option("complex", second, "Complex document")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    const Limits limits = env_limits();
    CLI::App* group = app.get_subcommands().front();
    CLI::App* sub = group->get_subcommands().front();
    Report r(group->get_name() + " " + sub->get_name());
    const Input in = load(file, limits);
    r.input(in);
    std::optional<Input> in2;
    if (sub == fan_refines_cmd || sub == fan_common_cmd || sub == tc_proper_cmd) {
      in2 = load(second, limits);
      r.input(*in2);
    }
    if (sub == fan_validate_cmd) code = fan_validate(in, r);
    else if (sub == fan_refines_cmd) code = fan_refines(in, *in2, r);
    else if (sub == fan_common_cmd) code = fan_common_refinement(in, *in2, r);
    else if (sub == fan_star_cmd) code = fan_star(in, rays, lineality, r);
    else if (sub == fan_coarsen_cmd) code = fan_coarsen(in, r);
    else if (sub == fan_translation_cmd) code = fan_translation_space(in, r);
    else if (sub == trop_hyp_cmd) code = trop_hypersurface(in, oracle, r);
    else if (sub == trop_init_cmd) code = trop_initial_form(in, point, r);
    else if (sub == trop_cert_cmd) code = trop_certificate(in, point, r);
    else if (sub == gt_build_cmd) code = geomtrop_build(in, r);
    else if (sub == gt_schoen_cmd) code = geomtrop_schoen(in, oracle, r);
    else if (sub == gt_hubsch_cmd) code = geomtrop_hubsch(in, r);
    else if (sub == toric_adm_cmd) code = toric_admissible(in, r);
    else if (sub == toric_an_cmd) code = toric_analyze(in, oracle, r);
    else if (sub == toric_res_cmd) code = toric_rescale(in, by, r);
    else if (sub == toric_chart_cmd) code = toric_chart(in, cone_index, limits, r);
    else if (sub == toric_gen_cmd) code = toric_generic_fiber(in, r);
    else if (sub == tc_build_cmd) code = tcone_build_cmd(in, r);
    else if (sub == tc_slice_cmd) code = tcone_slice(in, r);
    else if (sub == tc_proper_cmd) code = tcone_properness(in, *in2, r);
    r.write(out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    code = 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  }
  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    err << "timing: " << ms.count() << " ms\n";
  }
  return code;
}

}  // namespace tropkit::cli
