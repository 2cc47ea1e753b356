#include "symcap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "symcap/capacityfn.hpp"
#include "symcap/classes.hpp"
#include "symcap/cremona.hpp"
#include "symcap/domains.hpp"
#include "symcap/ech.hpp"
#include "symcap/staircase.hpp"
#include "symcap/weights.hpp"

namespace symcap::cli {

using json = nlohmann::ordered_json;

namespace {

// Bad flag values are usage errors, not domain errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parse_arg(const char* flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Rational arg_rational(const char* flag, const std::string& s) {
  return parse_arg(flag, [&] { return Rational::parse(s); });
}
Surd arg_surd(const char* flag, const std::string& s) {
  return parse_arg(flag, [&] { return Surd::parse(s); });
}

// A malformed tuple string is a usage error; a well-formed tuple that breaks
// the necessary conditions is a domain error.
WeightTuple arg_tuple(const std::string& s) {
  auto colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  parse_arg("--tuple", [&] { return Surd::parse(head); });
  std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);
  bool comma = tail.find(',') != std::string::npos;
  std::string tok;
  auto check = [&] {
    if (!tok.empty()) parse_arg("--tuple", [&] { return Surd::parse(tok); });
    tok.clear();
  };
  for (char c : tail) {
    if (c == ',' || (!comma && std::isspace(static_cast<unsigned char>(c)))) check();
    else tok += c;
  }
  check();
  return WeightTuple::parse(s);
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string sqrt_str(const Surd& x) {
  if (auto r = surd_sqrt(x)) return r->str();
  return "sqrt(" + x.str() + ")";
}

json surd_list(const std::vector<Surd>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json int_list(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json tuple_json(const WeightTuple& t) {
  auto st = stats(t);
  json j;
  j["tuple"] = t.str();
  j["b"] = t.b.str();
  j["cuts"] = surd_list(t.cuts);
  j["per"] = st.per.str();
  j["vol"] = st.vol.str();
  j["a0"] = st.a0 ? json(st.a0->str()) : json(nullptr);
  return j;
}

json cut_node_json(const CutNode& n) {
  json j;
  j["size"] = n.size.str();
  j["map"] = {n.map.a, n.map.b, n.map.c, n.map.d};
  j["shift"] = {n.shift.x.str(), n.shift.y.str()};
  json kids = json::array();
  for (size_t i = 0; i < n.children.size(); ++i) {
    json c = cut_node_json(n.children[i]);
    c["label"] = n.labels[i];
    kids.push_back(std::move(c));
  }
  j["children"] = std::move(kids);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string out_path;
  std::string format;
  unsigned jobs = 1;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--out", c.out_path, "write the artifact to FILE instead of stdout");
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
}

// ------------------------------------------------------------- subcommands

void cmd_weights(const std::string& value, size_t terms, const Common& c, std::ostream& os) {
  Surd z = arg_surd("value", value);
  if (z < Surd(1)) throw DomainError("weights need z >= 1");
  if (!z.is_rational()) {
    auto cf = cf_prefix(z, terms);
    auto w = weight_prefix(z, terms);
    if (c.format == "json") {
      json j;
      j["z"] = z.str();
      j["cf_prefix"] = int_list(cf);
      j["w_prefix"] = surd_list(w);
      os << j.dump(2) << "\n";
    } else if (c.format == "csv") {
      os << "i,w_i\n";
      for (size_t i = 0; i < w.size(); ++i) os << i + 1 << "," << w[i].str() << "\n";
    } else {
      os << "cf prefix " << ContinuedFraction{cf}.str() << "\n";
      os << "w prefix ";
      for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].str();
      os << "\n";
    }
    return;
  }
  Rational r = z.to_rational();
  auto cf = cf_of(r);
  auto W = integral_weights(r.num(), r.den());
  auto we = weight_expansion(r);
  if (c.format == "json") {
    json j;
    j["z"] = r.str();
    j["cf"] = cf.str();
    j["W"] = int_list(W);
    json w = json::array();
    for (const auto& x : we.entries()) w.push_back(x.str());
    j["w"] = std::move(w);
    j["sum"] = we.sum().str();
    j["sum_squares"] = we.sum_squares().str();
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "i,w_i\n";
    auto e = we.entries();
    for (size_t i = 0; i < e.size(); ++i) os << i + 1 << "," << e[i].str() << "\n";
  } else {
    os << "cf " << cf.str() << "\n";
    os << "W(" << r.num().get_str() << "," << r.den().get_str() << ") = ";
    for (size_t i = 0; i < W.size(); ++i) os << (i ? "," : "") << W[i].get_str();
    os << "\n";
  }
}

void cmd_cut(const std::string& path, const Common& c, std::ostream& os) {
  auto poly = RationalPolygon::parse(read_file(path));
  auto res = cut_decomposition(poly);
  json j = tuple_json(res.tuple);
  j["boundary_perimeter"] = boundary_perimeter(poly).str();
  j["twice_area"] = poly.twice_area().str();
  json regions = json::array();
  for (int i = 0; i < 3; ++i)
    regions.push_back(res.tree.regions[i] ? cut_node_json(*res.tree.regions[i]) : json(nullptr));
  j["tree"] = {{"b", res.tree.b.str()}, {"regions", regions}};
  if (c.format == "csv") {
    os << "j,b_j\n";
    for (size_t i = 0; i < res.tuple.cuts.size(); ++i) os << i + 1 << "," << res.tuple.cuts[i].str() << "\n";
  } else {
    os << j.dump(2) << "\n";
  }
}

void cmd_capacities(const WeightTuple& t, size_t K, bool show_float, const Common& c, std::ostream& os) {
  auto seq = convex_capacities(t, K, c.jobs);
  if (c.format == "json") {
    json j;
    j["tuple"] = t.str();
    j["K"] = K;
    json v = json::array();
    for (size_t k = 0; k <= K; ++k) v.push_back(seq.at(k).str());
    j["c"] = std::move(v);
    os << j.dump(2) << "\n";
    return;
  }
  os << "k,c_k" << (show_float ? ",c_k_float" : "") << "\n";
  for (size_t k = 0; k <= K; ++k) {
    Rational v = seq.at(k);
    os << k << "," << v.str();
    if (show_float) os << "," << fmt_double(v.to_double());
    os << "\n";
  }
}

void cmd_subleading(const WeightTuple& t, size_t K, const Common& c, std::ostream& os) {
  auto tr = subleading_trace(t, K, c.jobs);
  if (c.format == "json") {
    json j;
    j["tuple"] = t.str();
    j["K"] = K;
    j["vol"] = tr.vol.str();
    size_t first = tr.argmin.empty() ? 0 : tr.argmin.front();
    j["min_e"] = tr.argmin.empty() ? json(nullptr) : json(fmt_double(tr.e(first)));
    json a = json::array();
    for (size_t k : tr.argmin) a.push_back(k);
    j["argmin"] = std::move(a);
    os << j.dump(2) << "\n";
    return;
  }
  os << "k,c_k,e_k\n";
  for (size_t k = 1; k <= K; ++k) os << k << "," << tr.seq.at(k).str() << "," << fmt_double(tr.e(k)) << "\n";
}

json trace_json(const ReductionTrace& tr) {
  json steps = json::array();
  for (const auto& s : tr.steps) steps.push_back({{"move", {s.i, s.j, s.k}}, {"defect", s.defect.get_str()}});
  json j;
  j["exceptional"] = tr.exceptional;
  j["terminal"] = tr.terminal.str();
  j["reason"] = tr.reason;
  j["steps"] = std::move(steps);
  return j;
}

void cmd_cremona_tuple(const WeightTuple& t, const Common& c, std::ostream& os) {
  auto chain = cremona_chain(t);
  if (c.format == "csv") {
    os << "step,tuple\n";
    for (size_t i = 0; i < chain.size(); ++i) os << i << ",\"" << chain[i].str() << "\"\n";
    return;
  }
  json j;
  j["start"] = t.str();
  json a = json::array();
  for (const auto& x : chain) a.push_back(x.str());
  j["chain"] = std::move(a);
  j["reduced"] = chain.back().str();
  j["length_upper"] = chain.back().cuts.size();
  os << j.dump(2) << "\n";
}

void cmd_cremona_class(const std::string& text, std::ostream& os) {
  auto cls = parse_arg("--class", [&] { return ObstructionClass::parse(text); });
  auto start = ClassVector::of(cls);
  auto tr = reduce_class(start);
  json j;
  j["class"] = cls.str();
  j["vector"] = start.str();
  j.update(trace_json(tr));
  os << j.dump(2) << "\n";
}

void cmd_classes(const WeightTuple& wt, long dmax, bool only_obstructive, const Common& c, std::ostream& os) {
  Target t = Target::of(wt);
  auto all = enumerate_classes(t, dmax);
  json out = json::array();
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < all.size(); ++i) {
    const auto& cls = all[i];
    json j;
    j["d"] = cls.d.get_str();
    j["mtilde"] = int_list(cls.mtilde);
    j["m"] = int_list(cls.m);
    std::optional<Rational> center;
    if (class_lambda(cls, t).sign() > 0) {
      try {
        center = break_point(cls, t);
      } catch (const DomainError&) {
      }
    }
    bool obstructive = center.has_value();
    if (only_obstructive && !obstructive) continue;
    if (center) {
      Surd z(*center);
      Surd mu = mu_at(cls, t, z);
      std::vector<ObstructionClass> others;
      for (size_t k = 0; k < all.size(); ++k)
        if (k != i && class_lambda(all[k], t).sign() > 0) others.push_back(all[k]);
      j["center"] = center->str();
      j["mu_at_center"] = mu.str();
      j["volume_at_center"] = sqrt_str(z / t.vol);
      j["obstructive"] = true;
      j["live"] = is_live(cls, t, others, z);
    } else {
      j["center"] = nullptr;
      j["mu_at_center"] = nullptr;
      j["volume_at_center"] = nullptr;
      j["obstructive"] = false;
      j["live"] = false;
    }
    out.push_back(std::move(j));
  }
  if (c.format == "csv") {
    os << "class,center,mu_at_center,volume_at_center,obstructive,live\n";
    for (size_t i = 0; i < out.size(); ++i) {
      const auto& j = out[i];
      auto s = [](const json& v) { return v.is_null() ? std::string() : v.get<std::string>(); };
      std::string cls = j["d"].get<std::string>() + ";";
      for (size_t k = 0; k < j["mtilde"].size(); ++k) cls += (k ? "," : "") + j["mtilde"][k].get<std::string>();
      cls += "|";
      for (size_t k = 0; k < j["m"].size(); ++k) cls += (k ? "," : "") + j["m"][k].get<std::string>();
      os << "\"" << cls << "\"," << s(j["center"]) << ",\"" << s(j["mu_at_center"]) << "\",\""
         << s(j["volume_at_center"]) << "\"," << (j["obstructive"].get<bool>() ? "true" : "false") << ","
         << (j["live"].get<bool>() ? "true" : "false") << "\n";
    }
    return;
  }
  os << out.dump(2) << "\n";
}

std::string best_str(const EmbedFnSample& s, const Surd& vol) {
  // max(V(z), ech, mu), compared exactly; V is irrational in general
  VolumeConstraint V{Surd(s.z), vol};
  std::optional<Surd> best;
  if (V.compare(Surd(s.ech)) > 0) best = Surd(s.ech);
  if (s.cls.mu && (best ? *s.cls.mu > *best : V.compare(*s.cls.mu) > 0)) best = *s.cls.mu;
  return best ? best->str() : sqrt_str(Surd(s.z) / vol);
}

void cmd_embed_fn(const WeightTuple& t, const std::vector<Rational>& grid, size_t K, long dmax, bool show_float,
                  const Common& c, std::ostream& os) {
  auto res = scan(t, grid, K, dmax, c.jobs);
  Surd vol = stats(t).vol;
  if (c.format == "json") {
    json j;
    j["tuple"] = t.str();
    json a = json::array();
    for (const auto& s : res.samples)
      a.push_back({{"z", s.z.str()},
                   {"ech_lower", s.ech.str()},
                   {"class_lower", s.cls.str()},
                   {"volume", sqrt_str(Surd(s.z) / vol)},
                   {"best", best_str(s, vol)},
                   {"corner", s.corner}});
    j["samples"] = std::move(a);
    json corners = json::array();
    for (const auto& z : res.corners) corners.push_back(z.str());
    j["corners"] = std::move(corners);
    os << j.dump(2) << "\n";
    return;
  }
  os << "z,ech_lower,class_lower,volume,best,corner" << (show_float ? ",best_float" : "") << "\n";
  for (const auto& s : res.samples) {
    os << s.z.str() << "," << s.ech.str() << ",\"" << s.cls.str() << "\",\"" << sqrt_str(Surd(s.z) / vol)
       << "\",\"" << best_str(s, vol) << "\"," << (s.corner ? 1 : 0);
    if (show_float) os << "," << fmt_double(s.best());
    os << "\n";
  }
}

void cmd_accumulation(const AccumulationInput& in, size_t K, long dmax, std::ostream& os) {
  auto rep = accumulation_report(in, K, dmax);
  auto opt = [](const std::optional<Surd>& x) { return x ? json(x->str()) : json(nullptr); };
  json j;
  j["per"] = in.per.str();
  j["vol"] = in.vol.str();
  j["a0"] = opt(rep.a0);
  j["a0_plus_inverse"] = rep.a0 ? json((*rep.a0 + Surd(1) / *rep.a0).str()) : json(nullptr);
  j["per_sq_over_vol_minus_2"] = (in.per * in.per / in.vol - Surd(2)).str();
  j["V_a0_sq"] = opt(rep.v_sq);
  j["class_bound"] = opt(rep.class_bound);
  j["class_best"] = rep.class_best ? json(rep.class_best->str()) : json(nullptr);
  j["ech_bound"] = opt(rep.ech_bound);
  j["ech_k"] = rep.ech_k;
  j["gromov_bound"] = opt(rep.gromov_bound);
  if (in.gromov) j["gromov_no_staircase"] = gromov_no_staircase(in.per, in.vol, *in.gromov);
  j["exceeds"] = rep.exceeds;
  j["verdict"] = rep.verdict;
  os << j.dump(2) << "\n";
}

void cmd_staircase(long n, size_t k, const std::string& verify, bool overshadow, const Common& c,
                   std::ostream& os) {
  auto fam = make_family(n);
  auto L = limit_domain(fam);
  auto reports = verify_steps(fam, k);
  double zinf = L.z_inf.to_double();
  if (c.format == "csv") {
    os << "k,p,q,center,center_float,z_inf_float,diff\n";
    for (const auto& r : reports) {
      double z = r.e.center().to_double();
      os << r.k << "," << r.e.p.get_str() << "," << r.e.q.get_str() << "," << r.e.center().str() << ","
         << fmt_double(z) << "," << fmt_double(zinf) << "," << fmt_double(z - zinf) << "\n";
    }
    return;
  }
  bool want_qp = verify == "all";
  bool want_perfect = verify == "all" || verify == "perfect";
  bool want_obs = verify == "all" || verify == "obstructive";
  json j;
  j["n"] = n;
  j["k"] = k;
  j["t"] = fam.t;
  j["sigma"] = fam.sigma.get_str();
  j["limit"] = {{"tuple", L.tuple.str()},      {"vol", L.vol.str()},
                {"per", L.per.str()},          {"z_inf", L.z_inf.str()},
                {"V_z_inf", L.v_inf.str()},    {"matches_closed_forms", L.matches_closed_forms},
                {"identities_hold", L.identities_hold}};
  json steps = json::array();
  bool all_qp = true, all_perfect = true, all_obs = true, all_adj = true, decreasing = true;
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    json s;
    s["k"] = r.k;
    s["class"] = r.e.full().str();
    s["center"] = r.e.center().str();
    if (want_qp) s["quasi_perfect"] = r.quasi_perfect;
    if (want_perfect) s["perfect"] = r.perfect;
    if (want_qp) s["adjacent_to_next"] = r.adjacent_to_next;
    if (want_obs) s["obstructive"] = r.obstructive;
    s["mu_center"] = r.obstructive || r.mu_center.sign() > 0 ? json(r.mu_center.str()) : json(nullptr);
    s["V_center"] = sqrt_str(r.v_center_sq);
    steps.push_back(std::move(s));
    all_qp = all_qp && r.quasi_perfect;
    all_perfect = all_perfect && r.perfect;
    all_obs = all_obs && r.obstructive;
    all_adj = all_adj && r.adjacent_to_next;
    if (i > 0) decreasing = decreasing && r.e.center() < reports[i - 1].e.center();
  }
  j["steps"] = std::move(steps);
  json v;
  if (want_qp) {
    v["quasi_perfect"] = all_qp;
    v["adjacent"] = all_adj;
    v["centers_decreasing"] = decreasing;
    v["limit_identities"] = L.identities_hold && L.matches_closed_forms;
    v["matrix_relation"] = matrix_relation_check(n, k);
  }
  if (want_perfect) v["perfect"] = all_perfect;
  if (want_obs) v["obstructive"] = all_obs;
  j["verdicts"] = std::move(v);
  if (overshadow) {
    auto rep = overshadow_search(n);
    std::map<std::string, size_t> by_reason;
    for (const auto& e : rep.eliminated) ++by_reason[e.eliminated_by];
    json s = json::array();
    for (const auto& x : rep.survivors) {
      json m = json::array();
      for (long v2 : x.mtilde) m.push_back(v2);
      s.push_back({{"d", x.d}, {"mtilde", m}, {"C", x.C}});
    }
    json reasons;
    for (const auto& [r, cnt] : by_reason) reasons[r] = cnt;
    j["overshadow"] = {{"examined", rep.examined}, {"eliminated_by", reasons}, {"survivors", s},
                       {"empty", rep.survivors.empty()}};
  }
  os << j.dump(2) << "\n";
}

void cmd_ghost(const Surd& alpha, size_t N, const Common& c, std::ostream& os) {
  auto rep = ghost_stairs(alpha, N);
  if (c.format == "csv") {
    os << "n,p,q,mu,expected,matches,obstructive,bound,overshadowed\n";
    for (const auto& s : rep.steps)
      os << s.index << "," << s.p.get_str() << "," << s.q.get_str() << ",\"" << s.mu.str() << "\",\""
         << s.expected.str() << "\"," << s.matches << "," << s.obstructive << ",\"" << s.bound.str() << "\","
         << s.overshadowed << "\n";
    return;
  }
  json j;
  j["alpha"] = alpha.str();
  j["e_prime"] = rep.e_prime.str();
  j["e_prime_equals_subscaling"] = rep.e_prime_equals_subscaling;
  json steps = json::array();
  for (const auto& s : rep.steps)
    steps.push_back({{"n", s.index},
                     {"p", s.p.get_str()},
                     {"q", s.q.get_str()},
                     {"class", s.cls.str()},
                     {"mu", s.mu.str()},
                     {"expected", s.expected.str()},
                     {"matches", s.matches},
                     {"obstructive", s.obstructive},
                     {"bound", s.bound.str()},
                     {"overshadowed", s.overshadowed}});
  j["steps"] = std::move(steps);
  os << j.dump(2) << "\n";
}

std::vector<Rational> make_grid(const std::string& list, const std::string& zmin, const std::string& zmax,
                                size_t points) {
  std::vector<Rational> g;
  if (!list.empty()) {
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) g.push_back(arg_rational("--grid", tok));
    return g;
  }
  Rational lo = arg_rational("--zmin", zmin), hi = arg_rational("--zmax", zmax);
  if (points < 1) throw UsageError("--points must be positive");
  if (hi < lo) throw UsageError("--zmax below --zmin");
  Rational h = points > 1 ? (hi - lo) / Rational(static_cast<long>(points - 1)) : Rational(0);
  for (size_t i = 0; i < points; ++i) g.push_back(lo + h * Rational(static_cast<long>(i)));
  return g;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact capacities, obstructions and staircases for convex toric domains", "symcap"};
  app.require_subcommand(1);
  app.footer(
      "Numbers are exact strings: rationals as p/q, surds as a + b*sqrt(s).\n"
      "CSV schemas: capacities k,c_k[,c_k_float]; subleading k,c_k,e_k;\n"
      "embed-fn z,ech_lower,class_lower,volume,best,corner[,best_float];\n"
      "staircase --format csv k,p,q,center,center_float,z_inf_float,diff.\n"
      "Exit status: 0 success, 1 domain error, 2 usage error.");

  std::string tuple_s, polygon, alpha_s, class_s, value, per_s, vol_s, gromov_s, grid_s, zmin = "1", zmax = "8",
                                                                                     verify = "all";
  size_t K = 10, k = 8, N = 6, terms = 10, points = 50;
  long dmax = 6, n = 3;
  bool show_float = false, overshadow = false, only_obstructive = false;
  Common cw, cc, ccap, csub, ccr, ccl, cemb, cacc, cst, cgh;

  auto* weights = app.add_subcommand("weights", "continued fraction and weight expansion of z >= 1");
  weights->add_option("value", value, "p/q, or a + b*sqrt(s) for a prefix")->required();
  weights->add_option("--terms", terms, "prefix length for irrational input")->capture_default_str();
  add_common(weights, cw, "text");

  auto* cut = app.add_subcommand("cut", "negative weight tuple of a rational convex polygon");
  cut->add_option("--polygon", polygon, "vertex file, one \"x y\" per line")->required();
  add_common(cut, cc, "json");

  auto* caps = app.add_subcommand("capacities", "ECH capacities c_0..c_K of a tuple");
  caps->add_option("--tuple", tuple_s, "\"b:b1,b2,...\"")->required();
  caps->add_option("--K", K)->capture_default_str();
  caps->add_flag("--float", show_float, "append a decimal column");
  add_common(caps, ccap, "csv");

  auto* sub = app.add_subcommand("subleading", "e_k = c_k - sqrt(2 k Vol), as 12-digit decimals");
  sub->add_option("--tuple", tuple_s)->required();
  sub->add_option("--K", K)->capture_default_str();
  add_common(sub, csub, "csv");

  auto* crem = app.add_subcommand("cremona", "Cremona chain of a tuple or reduction trace of a class");
  auto* crem_t = crem->add_option("--tuple", tuple_s);
  auto* crem_c = crem->add_option("--class", class_s, "\"d; m1,m2,... | n1,n2,...\"");
  crem_t->excludes(crem_c);
  add_common(crem, ccr, "json");

  auto* cls = app.add_subcommand("classes", "quasi-exceptional classes with d <= dmax and their break points");
  cls->add_option("--tuple", tuple_s)->required();
  cls->add_option("--dmax", dmax)->check(CLI::Range(1L, 200L))->capture_default_str();
  cls->add_flag("--obstructive-only", only_obstructive);
  add_common(cls, ccl, "json");

  auto* emb = app.add_subcommand("embed-fn", "lower bounds for the ellipsoid embedding function on a grid");
  emb->add_option("--tuple", tuple_s)->required();
  emb->add_option("--grid", grid_s, "comma-separated z values; overrides --zmin/--zmax/--points");
  emb->add_option("--zmin", zmin)->capture_default_str();
  emb->add_option("--zmax", zmax)->capture_default_str();
  emb->add_option("--points", points)->capture_default_str();
  emb->add_option("--K", K, "ECH terms, 0 disables the ECH bound")->capture_default_str();
  emb->add_option("--dmax", dmax)->check(CLI::Range(1L, 200L))->capture_default_str();
  emb->add_flag("--float", show_float);
  add_common(emb, cemb, "csv");

  auto* acc = app.add_subcommand("accumulation", "accumulation point and the bounds that obstruct it");
  auto* acc_t = acc->add_option("--tuple", tuple_s);
  auto* acc_p = acc->add_option("--per", per_s);
  auto* acc_v = acc->add_option("--vol", vol_s);
  acc->add_option("--gromov", gromov_s, "upper bound for the Gromov width");
  acc->add_option("--K", K)->capture_default_str();
  acc->add_option("--dmax", dmax)->check(CLI::Range(1L, 200L))->capture_default_str();
  acc_p->needs(acc_v);
  acc_v->needs(acc_p);
  acc_t->excludes(acc_p);
  add_common(acc, cacc, "json");

  auto* st = app.add_subcommand("staircase", "verify the staircase family E_k(n)");
  st->add_option("--n", n)->check(CLI::Range(0L, 1000L))->capture_default_str();
  st->add_option("--k", k)->check(CLI::Range(size_t{0}, size_t{200}))->capture_default_str();
  st->add_option("--verify", verify)->check(CLI::IsMember({"all", "perfect", "obstructive", "none"}))
      ->capture_default_str();
  st->add_flag("--overshadow", overshadow, "run the d <= 18 overshadow candidate search");
  add_common(st, cst, "json");

  auto* gh = app.add_subcommand("ghost", "ghost stairs of E(1, alpha)");
  gh->add_option("--alpha", alpha_s, "\"a + b*sqrt(s)\"")->required();
  gh->add_option("--N", N)->check(CLI::Range(size_t{1}, size_t{40}))->capture_default_str();
  add_common(gh, cgh, "json");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buf;
  const Common* common = nullptr;
  try {
    if (*weights) {
      common = &cw;
      cmd_weights(value, terms, cw, buf);
    } else if (*cut) {
      common = &cc;
      cmd_cut(polygon, cc, buf);
    } else if (*caps) {
      common = &ccap;
      cmd_capacities(arg_tuple(tuple_s), K, show_float, ccap, buf);
    } else if (*sub) {
      common = &csub;
      cmd_subleading(arg_tuple(tuple_s), K, csub, buf);
    } else if (*crem) {
      common = &ccr;
      if (!class_s.empty()) cmd_cremona_class(class_s, buf);
      else if (!tuple_s.empty()) cmd_cremona_tuple(arg_tuple(tuple_s), ccr, buf);
      else throw UsageError("cremona needs --tuple or --class");
    } else if (*cls) {
      common = &ccl;
      cmd_classes(arg_tuple(tuple_s), dmax, only_obstructive, ccl, buf);
    } else if (*emb) {
      common = &cemb;
      auto grid = make_grid(grid_s, zmin, zmax, points);
      cmd_embed_fn(arg_tuple(tuple_s), grid, K, dmax, show_float, cemb, buf);
    } else if (*acc) {
      common = &cacc;
      AccumulationInput in;
      if (!tuple_s.empty()) {
        in.tuple = arg_tuple(tuple_s);
        auto s = stats(*in.tuple);
        in.per = s.per;
        in.vol = s.vol;
      } else if (!per_s.empty()) {
        in.per = arg_surd("--per", per_s);
        in.vol = arg_surd("--vol", vol_s);
      } else {
        throw UsageError("accumulation needs --tuple or --per/--vol");
      }
      if (!gromov_s.empty()) in.gromov = arg_surd("--gromov", gromov_s);
      cmd_accumulation(in, K, dmax, buf);
    } else if (*st) {
      common = &cst;
      cmd_staircase(n, k, verify, overshadow, cst, buf);
    } else if (*gh) {
      common = &cgh;
      cmd_ghost(arg_surd("--alpha", alpha_s), N, cgh, buf);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  }

  if (common && !common->out_path.empty()) {
    std::ofstream f(common->out_path, std::ios::binary);
    if (!f) {
      err << "usage error: cannot write " << common->out_path << "\n";
      return 2;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace symcap::cli
