#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "toricd/classifier.hpp"
#include "toricd/cone.hpp"
#include "toricd/errors.hpp"
#include "toricd/primitive.hpp"
#include "toricd/semigroup.hpp"

namespace toricd::cli {

using json = nlohmann::json;

namespace {

ToricError bad_input(const std::string& what) { return ToricError(ErrorKind::InvalidInput, what); }

Integer json_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>() >= 0 ? std::to_string(v.get<long long>()) : std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw bad_input("matrix entries must be integers");
}

std::vector<IntVector> json_vectors(const json& v) {
  if (!v.is_array()) throw bad_input("expected an array of integer vectors");
  std::vector<IntVector> out;
  for (const auto& row : v) {
    if (!row.is_array()) throw bad_input("expected an array of integer vectors");
    IntVector r;
    for (const auto& x : row) r.push_back(json_integer(x));
    out.push_back(std::move(r));
  }
  return out;
}

IntMatrix from_rows_checked(const std::vector<IntVector>& rows) {
  if (rows.empty() || rows.front().empty()) throw bad_input("matrix is empty");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw bad_input("matrix rows have different lengths");
  return IntMatrix::from_rows(rows, rows.front().size());
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw bad_input("matrix is empty");
  if (text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw bad_input(std::string("malformed JSON: ") + e.what());
    }
    if (doc.contains("columns")) {
      std::vector<IntVector> cols = json_vectors(doc["columns"]);
      return from_rows_checked(cols).transpose();
    }
    if (doc.contains("rows")) return from_rows_checked(json_vectors(doc["rows"]));
    throw bad_input("JSON matrix needs a \"columns\" or \"rows\" array");
  }
  std::vector<IntVector> rows;
  std::string line;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', '\n');
  std::istringstream in(normalized);
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    IntVector r;
    std::string tok;
    while (ls >> tok) r.push_back(parse_integer(tok));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return from_rows_checked(rows);
}

IntMatrix load_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw bad_input("cannot read matrix file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_matrix(ss.str());
}

RatVector parse_vector(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(s);
  RatVector v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  if (v.empty()) throw bad_input("empty vector '" + text + "'");
  return v;
}

namespace {

struct Options {
  std::string matrix_file;
  std::string inline_matrix;
  std::string alpha;
  std::string beta;
  std::string mu;
  std::string face;
  std::string degree;
  std::string point;
  long window = -1;
  long bound = -1;
  std::string format = "json";
  bool require_certified = false;
};

struct Session {
  std::unique_ptr<SemigroupEngine> engine;
  std::unique_ptr<ParameterClassifier> classifier;
  const ToricData& T() const { return engine->toric(); }
};

Session open_session(const Options& o) {
  if (o.matrix_file.empty() == o.inline_matrix.empty()) throw bad_input("give exactly one of --matrix or --inline");
  IntMatrix A = o.matrix_file.empty() ? parse_matrix(o.inline_matrix) : load_matrix(o.matrix_file);
  Session s;
  s.engine = std::make_unique<SemigroupEngine>(build_toric(A));
  s.classifier = std::make_unique<ParameterClassifier>(*s.engine);
  return s;
}

RatVector require_vector(const Session& s, const std::string& text, const char* what) {
  if (text.empty()) throw bad_input(std::string("missing --") + what);
  RatVector v = parse_vector(text);
  if (v.size() != s.T().dim())
    throw bad_input(std::string("--") + what + " must have " + std::to_string(s.T().dim()) + " entries");
  return v;
}

IntVector require_integer_vector(const Session& s, const std::string& text, const char* what) {
  RatVector v = require_vector(s, text, what);
  if (!is_integral(v)) throw bad_input(std::string("--") + what + " must be integral");
  return to_integer(v);
}

std::size_t require_face(const Session& s, const std::string& text) {
  if (auto id = s.T().face_by_name(text)) return *id;
  bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (digits) {
    std::size_t id = std::stoul(text);
    if (id < s.T().faces().size()) return id;
  }
  throw bad_input("unknown face '" + text + "'");
}

Window window_of(const Session& s, const Options& o) {
  if (o.window < 0) return default_window(s.T());
  return Window{Integer(o.window)};
}

std::optional<Integer> bound_of(const Options& o) {
  if (o.bound < 0) return std::nullopt;
  return Integer(o.bound);
}

json point_json(const RatVector& v) { return format_point(v); }
json point_json(const IntVector& v) { return format_point(v); }

template <class V>
json points_json(const std::vector<V>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

json facet_names(const ToricData& T, const std::vector<std::size_t>& ids) {
  json a = json::array();
  for (auto s : ids) a.push_back(T.facets()[s].name);
  return a;
}

json face_names(const ToricData& T, const std::vector<std::size_t>& ids) {
  json a = json::array();
  for (auto f : ids) a.push_back(T.faces()[f].name);
  return a;
}

json columns_json(const std::vector<std::size_t>& cols) {
  json a = json::array();
  for (auto j : cols) a.push_back(j + 1);
  return a;
}

json integers_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json flat_json(const ClosureComponent& c) {
  json j;
  j["kind"] = c.kind;
  j["dim"] = c.flat.dim();
  j["equations"] = c.flat.to_string();
  j["base"] = point_json(c.flat.base());
  j["directions"] = points_json(c.flat.directions());
  return j;
}

json components_json(const std::vector<ClosureComponent>& comps) {
  json a = json::array();
  for (const auto& c : comps) a.push_back(flat_json(c));
  return a;
}

json eset_json(const ToricData& T, const ESet& e) {
  json j;
  j["face"] = T.faces()[e.face].name;
  j["defined"] = e.defined;
  j["capacity"] = e.capacity.get_str();
  j["members"] = points_json(e.members);
  j["full"] = e.full();
  return j;
}

json signature_json(const ToricData& T, const Signature& sig) {
  json j = json::object();
  for (const auto& e : sig.sets) {
    if (!e.defined) {
      j[T.faces()[e.face].name] = nullptr;
      continue;
    }
    j[T.faces()[e.face].name] = points_json(e.members);
  }
  return j;
}

json hole_component_json(const ToricData& T, const HoleComponent& c) {
  json j;
  j["base"] = point_json(c.base);
  j["face"] = T.faces()[c.face].name;
  j["periods"] = points_json(c.certified_periods);
  j["window_points"] = c.points.size();
  return j;
}

json facet_table(const Session& s) {
  const ToricData& T = s.T();
  json a = json::array();
  for (const auto& f : T.facets()) {
    const NumericalSemigroup& sg = s.engine->facet_semigroup(f.id);
    json j;
    j["name"] = f.name;
    j["normal"] = format_tuple(f.normal);
    j["columns"] = columns_json(f.columns);
    j["semigroup"] = {{"generators", integers_json(sg.generators())},
                      {"gaps", integers_json(sg.gaps())},
                      {"frobenius", sg.frobenius().get_str()}};
    a.push_back(j);
  }
  return a;
}

json face_table(const ToricData& T) {
  json a = json::array();
  for (const auto& f : T.faces()) {
    json j;
    j["id"] = f.id;
    j["name"] = f.name;
    j["dim"] = f.dim;
    j["columns"] = columns_json(f.columns);
    j["facets"] = facet_names(T, f.containing_facets);
    a.push_back(j);
  }
  return a;
}

json c2_json(const ToricData& T, const C2Result& r) {
  json j;
  j["c2"] = c2_status_name(r.status);
  j["bound"] = r.bound.get_str();
  j["infeasible_patterns"] = r.infeasible_patterns;
  j["unresolved_patterns"] = r.unresolved_patterns;
  if (r.status == C2Status::Fails) {
    j["pattern"] = {{"plus", facet_names(T, r.pattern.plus)}, {"minus", facet_names(T, r.pattern.minus)}};
    j["witness"] = point_json(*r.witness);
  }
  return j;
}

const char* c2_cert(C2Status s) { return s == C2Status::HoldsWithinBound ? "window" : "exact"; }

json cmd_facets(const Session& s, const Options&) {
  json j;
  j["dim"] = s.T().dim();
  j["columns"] = points_json(s.T().columns());
  j["facets"] = facet_table(s);
  j["faces"] = face_table(s.T());
  j["simplicial"] = s.T().simplicial();
  j["certification"] = {{"facets", "exact"}};
  return j;
}

json cmd_member(const Session& s, const Options& o) {
  std::string text = !o.point.empty() ? o.point : o.degree;
  IntVector b = require_integer_vector(s, text, "degree");
  const ToricData& T = s.T();
  std::size_t face = o.face.empty() ? T.origin_face() : require_face(s, o.face);
  MembershipCertificate c = s.engine->member_mod_face(b, face);
  json j;
  j["vector"] = point_json(b);
  j["face"] = T.faces()[face].name;
  j["member"] = c.member;
  j["obstruction"] = obstruction_name(c.obstruction);
  if (c.facet) j["facet"] = T.facets()[*c.facet].name;
  if (c.member) {
    j["u"] = format_tuple(c.u);
    if (face != T.origin_face()) j["c"] = format_tuple(c.c);
  }
  j["certification"] = {{"member", "exact"}};
  return j;
}

json cmd_etau(const Session& s, const Options& o) {
  RatVector alpha = require_vector(s, o.alpha, "alpha");
  const ToricData& T = s.T();
  json j;
  j["alpha"] = point_json(alpha);
  if (!o.face.empty()) {
    j.update(eset_json(T, s.classifier->e_tau(alpha, require_face(s, o.face))));
  } else {
    json a = json::array();
    for (const auto& f : T.faces()) a.push_back(eset_json(T, s.classifier->e_tau(alpha, f.id)));
    j["etau"] = a;
  }
  j["certification"] = {{"etau", "exact"}};
  return j;
}

json cmd_signature(const Session& s, const Options& o) {
  RatVector alpha = require_vector(s, o.alpha, "alpha");
  const ToricData& T = s.T();
  const ParameterClassifier& C = *s.classifier;
  FacetSplit split = fplus_fminus(*s.engine, alpha);
  auto rpos = rpos_witness(*s.engine, alpha);
  json j;
  j["alpha"] = point_json(alpha);
  j["integral_facets"] = facet_names(T, integral_facets(T, alpha));
  j["fplus"] = facet_names(T, split.plus);
  j["fminus"] = facet_names(T, split.minus);
  j["signature"] = signature_json(T, C.signature(alpha));
  j["face_set"] = face_names(T, C.face_set(alpha));
  j["extreme"] = C.is_extreme(alpha);
  j["rpos_nonempty"] = rpos.has_value();
  if (rpos) j["rpos_witness"] = point_json(*rpos);
  j["ann_zero"] = ann_is_zero(C, alpha);
  j["certification"] = {{"signature", "exact"}, {"extreme", "exact"}, {"rpos_nonempty", "exact"}, {"ann_zero", "exact"}};
  return j;
}

json cmd_equiv(const Session& s, const Options& o) {
  RatVector alpha = require_vector(s, o.alpha, "alpha");
  RatVector beta = require_vector(s, o.beta, "beta");
  const ParameterClassifier& C = *s.classifier;
  json j;
  j["alpha"] = point_json(alpha);
  j["beta"] = point_json(beta);
  j["equivalent"] = C.equivalent(alpha, beta);
  j["alpha_preceq_beta"] = C.preceq(alpha, beta);
  j["beta_preceq_alpha"] = C.preceq(beta, alpha);
  j["certification"] = {{"equivalent", "exact"}, {"alpha_preceq_beta", "exact"}, {"beta_preceq_alpha", "exact"}};
  if (!o.mu.empty()) {
    RatVector mu = require_vector(s, o.mu, "mu");
    j["mu"] = point_json(mu);
    j["translation_invariant"] = C.translate_check(alpha, mu);
    j["certification"]["translation_invariant"] = "exact";
  }
  return j;
}

json cmd_classify(const Session& s, const Options& o) {
  RatVector alpha = require_vector(s, o.alpha, "alpha");
  const ToricData& T = s.T();
  CosetClassification cc = s.classifier->classify_coset(alpha, window_of(s, o));
  json j;
  j["alpha"] = point_json(alpha);
  j["window"] = cc.window.get_str();
  j["radius"] = cc.radius.get_str();
  j["stable"] = cc.stable;
  j["probes"] = cc.probes;
  json classes = json::array();
  for (const auto& c : cc.classes) {
    json k;
    k["representative"] = point_json(c.representative);
    k["extreme"] = c.extreme;
    k["face_set"] = face_names(T, c.face_set);
    k["signature"] = signature_json(T, c.signature);
    k["members_in_window"] = c.members.size();
    k["found_by_probe"] = c.found_by_probe;
    json obs = json::array();
    for (std::size_t f = 0; f < c.observed.size(); ++f) {
      const FacetObservation& ob = c.observed[f];
      obs.push_back({{"facet", T.facets()[f].name},
                     {"min", format_rational(ob.min)},
                     {"max", format_rational(ob.max)},
                     {"lower_edge", ob.reaches_lower_edge},
                     {"upper_edge", ob.reaches_upper_edge},
                     {"modulus", ob.modulus.get_str()},
                     {"residue", format_rational(ob.residue)}});
    }
    k["observed"] = obs;
    classes.push_back(k);
  }
  j["classes"] = classes;
  j["class_count"] = cc.classes.size();
  j["certification"] = {{"classes", "window"}, {"class_count", "window"}};
  return j;
}

json cmd_holes(const Session& s, const Options& o) {
  const ToricData& T = s.T();
  Window W = window_of(s, o);
  HoleReport h = holes(*s.engine, W);
  json j;
  j["window"] = W.bound.get_str();
  j["holes"] = points_json(h.points);
  j["hole_count"] = h.points.size();
  json comps = json::array();
  for (const auto& c : h.components) comps.push_back(hole_component_json(T, c));
  j["components"] = comps;
  j["certification"] = {{"holes", "exact"}, {"components", "window"}};
  return j;
}

json cmd_omega(const Session& s, const Options& o) {
  IntVector a = require_integer_vector(s, o.degree, "degree");
  Window W = window_of(s, o);
  json j;
  j["degree"] = point_json(a);
  j["window"] = W.bound.get_str();
  j["points"] = points_json(omega(*s.engine, a, W));
  j["components"] = components_json(omega_closure(*s.engine, a, W));
  j["certification"] = {{"points", "exact"}, {"components", "window"}};
  return j;
}

json cmd_lambda(const Session& s, const Options& o) {
  RatVector alpha = require_vector(s, o.alpha, "alpha");
  IntVector a = require_integer_vector(s, o.degree, "degree");
  Window W = window_of(s, o);
  json j;
  j["alpha"] = point_json(alpha);
  j["degree"] = point_json(a);
  j["window"] = W.bound.get_str();
  j["points"] = points_json(s.classifier->lambda_set(alpha, a, W));
  j["certification"] = {{"points", "exact"}};
  return j;
}

json cmd_ann(const Session& s, const Options& o) {
  RatVector alpha = require_vector(s, o.alpha, "alpha");
  IntVector a = o.degree.empty() ? IntVector(s.T().dim(), Integer(0)) : require_integer_vector(s, o.degree, "degree");
  Window W = window_of(s, o);
  AnnReport r = ann_graded_component(*s.classifier, alpha, a, W);
  json j;
  j["alpha"] = point_json(alpha);
  j["degree"] = point_json(a);
  j["window"] = W.bound.get_str();
  j["zero"] = r.zero;
  j["components"] = components_json(r.components);
  j["lambda_points"] = r.lambda_points;
  j["certification"] = {{"zero", "exact"}, {"components", r.certification}};
  return j;
}

json cmd_prim(const Session& s, const Options& o) {
  const ToricData& T = s.T();
  Window W = window_of(s, o);
  PrimResult p = enumerate_prim(*s.classifier, W);
  json j;
  j["window"] = W.bound.get_str();
  j["strata"] = p.strata;
  j["cosets"] = p.cosets;
  j["classes"] = p.classes;
  j["prim_count"] = p.entries.size();
  json entries = json::array();
  for (const auto& e : p.entries) {
    json k;
    k["representative"] = point_json(e.representative);
    k["stratum"] = facet_names(T, e.stratum);
    k["zero"] = e.zero;
    k["extreme"] = e.extreme;
    k["merge"] = e.merge;
    k["merged"] = points_json(e.merged);
    entries.push_back(k);
  }
  j["entries"] = entries;
  j["certification"] = {{"prim_count", "window"}, {"entries", "window"}};
  return j;
}

json cmd_simple(const Session& s, const Options& o) {
  const ToricData& T = s.T();
  Window W = window_of(s, o);
  SimplicityResult r = is_simple(*s.engine, W, bound_of(o));
  json j;
  j["window"] = W.bound.get_str();
  j["simple"] = r.simple;
  j["reason"] = r.reason == SimplicityReason::NotScored ? "not_scored"
                : r.reason == SimplicityReason::C2Fails ? "c2_fails"
                                                        : "none";
  if (r.scored_witness) j["scored_witness"] = point_json(*r.scored_witness);
  if (r.c2) j["c2"] = c2_json(T, *r.c2);
  j["certification"] = {{"simple", r.certification}};
  return j;
}

json cmd_c0(const Session& s, const Options&) {
  C0Result r = check_C0(*s.engine);
  json j;
  j["c0"] = r.holds;
  if (r.face) {
    j["face"] = s.T().faces()[*r.face].name;
    j["index"] = r.index.get_str();
  }
  j["certification"] = {{"c0", "exact"}};
  return j;
}

json cmd_c2(const Session& s, const Options& o) {
  C2Result r = check_C2(*s.engine, bound_of(o));
  json j = c2_json(s.T(), r);
  j["certification"] = {{"c2", c2_cert(r.status)}};
  return j;
}

json cmd_analyze(const Session& s, const Options& o) {
  const ToricData& T = s.T();
  Window W = window_of(s, o);
  json j;
  j["dim"] = T.dim();
  j["columns"] = points_json(T.columns());
  j["facets"] = facet_table(s);
  j["faces"] = face_table(T);
  j["simplicial"] = T.simplicial();
  json rel = json::array();
  for (const auto& r : linear_relations(T)) rel.push_back(format_tuple(r));
  j["relations"] = rel;
  j["window"] = W.bound.get_str();
  json cert;

  C0Result c0 = check_C0(*s.engine);
  j["c0"] = c0.holds;
  cert["c0"] = "exact";

  ScoredResult sc = is_scored(*s.engine, W);
  j["scored"] = sc.scored_on_window ? "window" : "no";
  if (sc.witness) j["scored_witness"] = point_json(*sc.witness);
  cert["scored"] = sc.scored_on_window ? "window" : "exact";

  S2Result s2 = satisfies_S2(*s.engine, W);
  j["s2"] = s2.holds_on_window ? "window" : "no";
  if (s2.witness) j["s2_witness"] = point_json(*s2.witness);
  cert["s2"] = s2.holds_on_window ? "window" : "exact";

  HoleReport h = holes(*s.engine, W);
  j["hole_count"] = h.points.size();
  json comps = json::array();
  for (const auto& c : h.components) comps.push_back(hole_component_json(T, c));
  j["hole_components"] = comps;
  cert["hole_components"] = "window";

  C2Result c2 = T.simplicial() ? C2Result{} : check_C2(*s.engine, bound_of(o));
  j["c2"] = c2_status_name(c2.status);
  if (c2.witness) j["c2_witness"] = point_json(*c2.witness);
  cert["c2"] = c2_cert(c2.status);

  SimplicityResult simple = is_simple(*s.engine, W, bound_of(o));
  j["simple"] = simple.simple;
  cert["simple"] = simple.certification;

  StrataClassification strata = classify_strata(*s.classifier, W);
  C1Result c1 = check_C1(*s.classifier, strata);
  j["c1"] = c1.holds ? "window" : "no";
  if (c1.counterexample) j["c1_counterexample"] = point_json(*c1.counterexample);
  cert["c1"] = c1.holds ? "window" : "exact";

  PrimResult p = enumerate_prim(*s.classifier, strata);
  j["prim_count"] = p.entries.size();
  cert["prim_count"] = "window";
  j["certification"] = cert;
  return j;
}

void render_text(const json& v, std::ostream& out, const std::string& indent) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      const json& x = it.value();
      if (x.is_structured() && !x.empty()) {
        out << indent << it.key() << ":\n";
        render_text(x, out, indent + "  ");
      } else {
        out << indent << it.key() << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    bool scalars = std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
    if (scalars) {
      out << indent;
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      out << "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << indent << "- [" << i << "]\n";
      render_text(v[i], out, indent + "  ");
    }
  } else {
    out << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

bool all_certified(const json& doc) {
  if (!doc.contains("certification")) return true;
  for (const auto& [k, v] : doc["certification"].items())
    if (v == "window") return false;
  return true;
}

using Handler = json (*)(const Session&, const Options&);

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"toricd: toric semigroup and parameter analysis", "toricd"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--matrix", o.matrix_file, "Matrix file (JSON {\"columns\": ...} or text rows)");
  app.add_option("--inline", o.inline_matrix, "Matrix rows, e.g. \"1 1 2 2; 1 2 0 1\"");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--window", o.window, "Window bound M")->check(CLI::NonNegativeNumber);
  app.add_option("--bound", o.bound, "Search bound for C2")->check(CLI::NonNegativeNumber);
  app.add_flag("--require-certified", o.require_certified, "Exit 3 unless every answer is exact");
  app.add_option("--alpha", o.alpha, "Parameter, e.g. 1/2,0");
  app.add_option("--beta", o.beta, "Second parameter");
  app.add_option("--mu", o.mu, "Translation vector");
  app.add_option("--face", o.face, "Face name or index");
  app.add_option("--degree", o.degree, "Integer degree vector");

  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands = {
      {"analyze", {"Facets, faces and all structural checks", cmd_analyze}},
      {"facets", {"Facets, facet semigroups and faces", cmd_facets}},
      {"member", {"Membership in NA (or NA + Z(A cap face) with --face)", cmd_member}},
      {"etau", {"E_tau(alpha) for one face or all faces", cmd_etau}},
      {"signature", {"Signature, face set, extremality and R>0 of alpha", cmd_signature}},
      {"equiv", {"Compare alpha and beta", cmd_equiv}},
      {"classify", {"Equivalence classes of alpha + Z^d", cmd_classify}},
      {"holes", {"Holes of NA in the saturation and their components", cmd_holes}},
      {"omega", {"Omega(a) and its closure components", cmd_omega}},
      {"lambda", {"Lambda set of the class of alpha in degree a", cmd_lambda}},
      {"ann", {"Degree-a part of the annihilator of L(alpha)", cmd_ann}},
      {"prim", {"Primitive ideals up to window merging", cmd_prim}},
      {"simple", {"Simplicity of the ring of differential operators", cmd_simple}},
      {"c0", {"Condition C0: saturated faces", cmd_c0}},
      {"c2", {"Condition C2: sign patterns", cmd_c2}},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc.first);
    if (name == "member") sub->add_option("vector", o.point, "Integer vector");
    subs.emplace_back(sub, desc.second);
  }

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    Handler handler = nullptr;
    for (auto& [sub, h] : subs)
      if (sub->parsed()) handler = h;
    Session s = open_session(o);
    json doc = handler(s, o);
    if (o.format == "text") {
      render_text(doc, out, "");
    } else {
      out << doc.dump(2) << "\n";
    }
    if (o.require_certified && !all_certified(doc)) {
      err << "error: result is only certified on a finite window\n";
      return kUncertified;
    }
    return kOk;
  } catch (const ToricError& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::LimitExceeded ? kLimitExceeded : kInvalidInput;
  }
}

}  // namespace toricd::cli
