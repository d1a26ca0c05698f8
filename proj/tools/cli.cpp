#include "cli.hpp"

#include "reembed/errors.hpp"
#include "reembed/fibers.hpp"
#include "reembed/format.hpp"
#include "reembed/parse.hpp"
#include "reembed/problem.hpp"
#include "reembed/reembedding.hpp"
#include "reembed/ump.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace reembed::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  json result = json::object();
  std::vector<std::string> verifications;
};

struct Input {
  std::string hash;
  ProblemFile problem;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load(const std::string& path) {
  const std::string text = read_file(path);
  return Input{fnv1a_hex(text), parse_problem(text)};
}

json names_of(const std::vector<std::size_t>& idx, const GradedRing& ring) {
  json out = json::array();
  for (auto i : idx) out.push_back(ring.name(i));
  return out;
}

template <class C>
json polys(const std::vector<BasicPolynomial<C>>& ps, const GradedRing& ring) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format_polynomial(p, ring.names(), ring.parameters()));
  return out;
}

json rows_of(const PolyMatrix& m, const GradedRing& ring) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(polys(m.row(i), ring));
  return out;
}

json ring_of(const GradedRing& ring) {
  json out = json::object();
  out["indeterminates"] = ring.names();
  out["grading"] = ring.weights();
  if (!ring.parameters().empty()) out["parameters"] = ring.parameters();
  return out;
}

template <class C>
json tuple_of(const BasicSeparatingTuple<C>& t, const GradedRing& ring) {
  json out = json::object();
  out["z"] = names_of(t.z, ring);
  out["f"] = polys(t.f, ring);
  out["coherent"] = t.kind == TupleKind::Coherent;
  if (t.order) out["order"] = t.order->to_string();
  return out;
}

json reembedding_of(const ReembeddingResult& r, const GradedRing& source) {
  json out = json::object();
  out["z"] = names_of(r.z, source);
  out["f"] = polys(r.tuple.f, source);
  out["target"] = ring_of(r.target.ring());
  out["generators"] = polys(r.target.generators(), r.target.ring());
  out["status"] = std::string(to_string(r.status));
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string rational_list(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

/// B<d> matrices keyed by degree d.
std::map<std::int64_t, PolyMatrix> degree_fixtures(const std::map<std::string, PolyMatrix>& ms) {
  std::map<std::int64_t, PolyMatrix> out;
  for (const auto& [name, m] : ms) {
    if (name.size() < 2 || name[0] != 'B') continue;
    if (!std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) continue;
    out.emplace(std::stoll(name.substr(1)), m);
  }
  return out;
}

std::map<std::int64_t, PolyMatrix> fixtures_from(const std::string& path, const GradedRing& ring) {
  if (path.empty()) return {};
  auto fx = degree_fixtures(parse_matrices(read_file(path), ring));
  if (fx.empty()) throw UsageError("no B<d> matrices in " + path);
  return fx;
}

std::string source_of(UmpSource s) { return s == UmpSource::Fixture ? "fixture" : "solver"; }

json ump_of(const UmpReembedding& r, const GradedRing& source) {
  const GradedRing& target = r.target.ring();
  json out = json::object();
  out["nu"] = names_of(r.nu, source);
  out["qtilde"] = polys(r.qtilde, source);
  out["theta"] = polys(r.theta.images, target);
  out["fhat"] = polys(r.fhat, target);
  out["target"] = ring_of(target);
  out["generators"] = polys(r.target.generators(), target);
  json blocks = json::object();
  for (const auto& [d, sol] : r.blocks) {
    json b = json::object();
    b["source"] = source_of(sol.source);
    b["strategy"] = sol.strategy;
    b["b"] = rows_of(sol.b, source);
    blocks[std::to_string(d)] = std::move(b);
  }
  out["blocks"] = std::move(blocks);
  return out;
}

// Subcommands.

Report sep_indets(const ProblemFile& pf) {
  const auto I = pf.presentation();
  Report r;
  const auto idx = separating_indeterminates(I);
  r.result["indeterminates"] = names_of(idx, pf.ring);
  for (auto i : idx) {
    const auto t = try_find_separating_tuple(I, {i});
    if (!t || separating_violation(I, t->z, t->f)) {
      throw MathError(ErrorCode::VerificationFailed, "no verified separating polynomial for " + pf.ring.name(i));
    }
  }
  r.verifications.push_back("each listed indeterminate has a verified separating polynomial");
  return r;
}

Report find_sep(const ProblemFile& pf, const std::string& zs, bool coherent) {
  const auto I = pf.presentation();
  Report r;
  auto t = find_separating_tuple(I, parse_indeterminates(zs, pf.ring));
  if (auto bad = separating_violation(I, t.z, t.f)) throw MathError(ErrorCode::VerificationFailed, *bad);
  r.verifications.push_back("F is Z-separating for I");
  if (coherent) {
    t = coherify(t, pf.ring);
    if (auto bad = coherence_violation(t.z, t.f)) throw MathError(ErrorCode::VerificationFailed, *bad);
    for (const auto& f : t.f) {
      if (!I.contains(f)) throw MathError(ErrorCode::VerificationFailed, "coherent entry is not in I");
    }
    r.verifications.push_back("F is coherently Z-separating and contained in I");
  }
  r.result["tuple"] = tuple_of(t, pf.ring);
  return r;
}

Report eliminate(const ProblemFile& pf, const std::string& zs, const std::string& tuple_name, bool oracle) {
  const auto I = pf.presentation();
  const GradedRing& ring = pf.ring;
  Report r;
  SeparatingTuple t;
  if (!tuple_name.empty()) {
    auto it = pf.tuples.find(tuple_name);
    if (it == pf.tuples.end()) throw UsageError("no tuple named " + tuple_name);
    t.z = parse_indeterminates(zs, ring);
    t.f = it->second;
    if (t.z.size() != t.f.size()) throw UsageError("--z and the tuple have different lengths");
  } else {
    t = coherify(find_separating_tuple(I, parse_indeterminates(zs, ring)), ring);
  }
  const auto e = rewrite_eliminate(I, t.z, t.f);
  r.verifications.push_back("F is coherent and contained in I");
  const GradedRing& target = e.ideal.ring();
  r.result["z"] = names_of(t.z, ring);
  r.result["f"] = polys(t.f, ring);
  r.result["rewritten"] = polys(e.rewritten, ring);
  r.result["target"] = ring_of(target);
  r.result["generators"] = polys(e.ideal.generators(), target);
  r.result["groebner_basis"] = polys(e.ideal.ideal().groebner(), target);
  if (oracle) {
    std::vector<long> back(target.size(), -1);
    for (std::size_t i = 0; i < e.mapping.size(); ++i) {
      if (e.mapping[i] >= 0) back[static_cast<std::size_t>(e.mapping[i])] = static_cast<long>(i);
    }
    std::vector<Polynomial> lifted;
    for (const auto& g : e.ideal.generators()) lifted.push_back(g.remap(back));
    const auto want = eliminate_oracle(I.ideal(), t.z);
    if (!ideal_equal(Ideal(lifted, ring.size()), want)) {
      throw MathError(ErrorCode::VerificationFailed, "substitution and the elimination oracle disagree");
    }
    r.verifications.push_back("equal to the elimination-order Groebner basis oracle");
  }
  return r;
}

Report best_reembed(const ProblemFile& pf, std::optional<std::int64_t> degree, bool all) {
  const auto I = pf.presentation();
  Report r;
  if (!degree) {
    if (all) throw UsageError("--all needs --degree");
    const auto res = best_separating_reembedding(I);
    r.verifications.push_back("J is the rewrite of I by a coherent tuple");
    r.result["reembedding"] = reembedding_of(res, pf.ring);
    return r;
  }
  std::vector<SeparatingTuple> ts;
  if (all) {
    ts = all_best_tuples_in_degree(I, *degree);
  } else {
    ts.push_back(best_tuple_in_degree(I, *degree));
  }
  json list = json::array();
  for (const auto& t : ts) {
    if (auto bad = separating_violation(I, t.z, t.f)) throw MathError(ErrorCode::VerificationFailed, *bad);
    list.push_back(tuple_of(t, pf.ring));
  }
  r.verifications.push_back("every tuple is Z-separating for I");
  r.result["degree"] = *degree;
  r.result["tuples"] = std::move(list);
  return r;
}

Report optimal_positive(const ProblemFile& pf) {
  Report r;
  const auto res = positively_graded_optimal(pf.presentation());
  r.verifications.push_back("#Z equals dim Lin(I)");
  r.result["reembedding"] = reembedding_of(res, pf.ring);
  return r;
}

Report fiber(const ProblemFile& pf, const std::string& point, bool generic, bool report) {
  const auto I = pf.presentation();
  Report r;
  if (point.empty() == !generic) throw UsageError("give exactly one of --point and --generic");
  if (generic) {
    if (report) throw UsageError("--report needs --point");
    const auto g = generic_fiber_ideal(I);
    r.result["ring"] = ring_of(g.ring());
    r.result["generators"] = polys(g.generators(), g.ring());
    r.result["groebner_basis"] = polys(g.ideal().groebner(), g.ring());
    const auto re = fiber_optimal_reembedding(I);
    json out = json::object();
    out["z"] = names_of(re.z, g.ring());
    out["f"] = polys(re.tuple.f, g.ring());
    out["target"] = ring_of(re.target.ring());
    out["generators"] = polys(re.target.generators(), re.target.ring());
    out["status"] = std::string(to_string(re.status));
    r.result["reembedding"] = std::move(out);
    r.verifications.push_back("fiber tuple is coherent and contained in the generic fiber ideal");
    return r;
  }
  const auto gamma = parse_rationals(point);
  const auto f = special_fiber_ideal(I, gamma);
  r.result["point"] = rational_list(gamma);
  r.result["ring"] = ring_of(f.ring());
  r.result["generators"] = polys(f.generators(), f.ring());
  r.result["groebner_basis"] = polys(f.ideal().groebner(), f.ring());
  r.result["reembedding"] = reembedding_of(fiber_optimal_reembedding(I, gamma), f.ring());
  if (report) {
    const auto c = cotangent_report(I, gamma);
    json out = json::object();
    out["parameters"] = c.parameters;
    out["fiber_cotangent"] = c.fiber_cotangent;
    out["ambient_cotangent"] = c.ambient_cotangent;
    out["jacobian_rank"] = c.jacobian_rank;
    out["fiber_dimension"] = c.fiber_dimension ? json(*c.fiber_dimension) : json(nullptr);
    out["ambient_dimension"] = c.ambient_dimension ? json(*c.ambient_dimension) : json(nullptr);
    out["regularity"] = std::string(to_string(c.regularity));
    out["fiber_free"] = c.fiber_free ? json(*c.fiber_free) : json(nullptr);
    r.result["cotangent"] = std::move(out);
    r.verifications.push_back("ambient cotangent dimension = fiber cotangent dimension + m");
  }
  return r;
}

Report ump_solve_cmd(const ProblemFile& pf, std::string name) {
  Report r;
  if (name.empty()) {
    if (pf.matrices.count("A") != 0) {
      name = "A";
    } else if (pf.matrices.size() == 1) {
      name = pf.matrices.begin()->first;
    } else {
      throw UsageError("several matrices; pick one with --name");
    }
  }
  auto it = pf.matrices.find(name);
  if (it == pf.matrices.end()) throw UsageError("no matrix named " + name);
  const PolyMatrix& a = it->second;
  const auto sol = ump_solve(a);
  if (auto bad = ump_violation(a, sol.b)) throw MathError(ErrorCode::VerificationFailed, *bad);
  r.verifications.push_back("A*B = (I_k | 0) and det(B) = 1");
  r.result["matrix"] = name;
  r.result["strategy"] = sol.strategy;
  r.result["b"] = rows_of(sol.b, pf.ring);
  json fixtures = json::object();
  for (const auto& [other, m] : pf.matrices) {
    if (other == name) continue;
    const auto bad = ump_violation(a, m);
    fixtures[other] = bad ? *bad : std::string("valid");
  }
  if (!fixtures.empty()) r.result["fixtures"] = std::move(fixtures);
  return r;
}

Report ump_reembed_cmd(const ProblemFile& pf, std::optional<std::size_t> k, const std::string& fixture) {
  if (!k) {
    auto it = pf.options.find("k");
    if (it == pf.options.end()) throw UsageError("--k is required");
    try {
      k = static_cast<std::size_t>(std::stoul(it->second));
    } catch (const std::exception&) {
      throw UsageError("option k is not a non-negative integer");
    }
  }
  Report r;
  const auto res = ump_reembed(pf.presentation(), *k, fixtures_from(fixture, pf.ring));
  r.verifications.push_back("every block satisfies the UMP contract");
  r.verifications.push_back("phi is a homogeneous automorphism and theta inverts it on the kept indeterminates");
  r.verifications.push_back("theta(g_i) = 0 for the leading generators");
  r.result["k"] = *k;
  r.result["reembedding"] = ump_of(res, pf.ring);
  return r;
}

Report free_reembed(const ProblemFile& pf, const std::string& fixture) {
  Report r;
  const auto res = regular_free_reembed(pf.presentation(), fixtures_from(fixture, pf.ring));
  r.verifications.push_back("every block satisfies the UMP contract");
  r.verifications.push_back("J = <0> and the target has dim P/I indeterminates");
  const GradedRing& target = res.reembedding.target.ring();
  r.result["rowspace_strategy"] = res.rowspace_strategy;
  r.result["weights"] = res.weights;
  r.result["images"] = polys(res.images, target);
  r.result["reembedding"] = ump_of(res.reembedding, pf.ring);
  return r;
}

Report detect_grading_cmd(const ProblemFile& pf) {
  Report r;
  const auto w = detect_grading(pf.ideal, pf.ring.size());
  if (!w) {
    r.result["grading"] = "only trivial";
    return r;
  }
  const GradedRing graded(pf.ring.names(), *w);
  for (const auto& g : pf.ideal) {
    if (!graded.is_homogeneous(g)) throw MathError(ErrorCode::VerificationFailed, "detected grading does not fit");
  }
  r.verifications.push_back("every generator is homogeneous for the detected grading");
  r.result["grading"] = *w;
  return r;
}

Report smooth_check(const ProblemFile& pf) {
  Report r;
  const auto s = smoothness_check(pf.presentation());
  r.result["verdict"] = std::string(to_string(s.verdict));
  r.result["dimension"] = s.dimension ? json(*s.dimension) : json(nullptr);
  r.result["codimension"] = s.codimension;
  if (s.witness) {
    json w = json::array();
    for (std::size_t i = 0; i < s.witness->size(); ++i) w.push_back(pf.ring.name(i) + " = " + (*s.witness)[i].to_string());
    r.result["witness"] = std::move(w);
  }
  return r;
}

// Output.

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& obj, std::ostream& out, std::size_t indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : obj.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render(v, out, indent + 2);
    } else if (v.is_array()) {
      if (v.empty()) {
        out << pad << key << ": []\n";
        continue;
      }
      out << pad << key << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render(e, out, indent + 4);
        } else if (e.is_array()) {
          out << pad << "  - [";
          for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ", " : "") << scalar(e[i]);
          out << "]\n";
        } else {
          out << pad << "  - " << scalar(e) << "\n";
        }
      }
    } else {
      out << pad << key << ": " << scalar(v) << "\n";
    }
  }
}

void emit(std::ostream& out, bool as_json, const std::string& command, const std::string& hash, const Report& r) {
  if (as_json) {
    json doc = json::object();
    doc["command"] = command;
    doc["input_hash"] = hash;
    doc["result"] = r.result;
    doc["verifications"] = r.verifications;
    out << doc.dump(2) << "\n";
    return;
  }
  render(r.result, out, 0);
  for (const auto& v : r.verifications) out << "verified: " << v << "\n";
}

void emit_error(std::ostream& out, std::ostream& err, bool as_json, const std::string& command,
                const std::string& hash, const std::string& code, const std::string& message) {
  err << "error: " << code << ": " << message << "\n";
  if (!as_json) return;
  json doc = json::object();
  doc["command"] = command;
  doc["input_hash"] = hash;
  doc["result"] = nullptr;
  doc["verifications"] = json::array();
  doc["error"] = {{"code", code}, {"message", message}};
  out << doc.dump(2) << "\n";
}

/// REEMBED_THREADS must be a positive integer when set. The computations
/// are sequential, so the value never changes the output.
void check_threads() {
  const char* v = std::getenv("REEMBED_THREADS");
  if (v == nullptr) return;
  const std::string s(v);
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      std::stoul(s) == 0) {
    throw UsageError("REEMBED_THREADS must be a positive integer");
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elimination by substitution and re-embeddings of graded ideals", "reembed"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string input;
  std::string z;
  std::string tuple;
  std::string point;
  std::string matrix;
  std::string name;
  std::string fixture;
  bool coherent = false;
  bool oracle = false;
  bool all = false;
  bool generic = false;
  bool report = false;
  std::optional<std::int64_t> degree;
  std::optional<std::size_t> k;

  auto common = [&](CLI::App* sub, bool needs_input = true) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (needs_input) sub->add_option("input", input, "problem file")->required();
    return sub;
  };
  common(app.add_subcommand("sep-indets", "indeterminates admitting a separating polynomial"));
  auto* find = common(app.add_subcommand("find-sep", "Z-separating tuple"));
  find->add_option("--z", z, "comma separated indeterminates")->required();
  find->add_flag("--coherent", coherent, "make the tuple coherent");
  auto* elim = common(app.add_subcommand("eliminate", "I ∩ K[X \\ Z] by substitution"));
  elim->add_option("--z", z, "comma separated indeterminates")->required();
  elim->add_option("--tuple", tuple, "use a tuple from the problem file");
  elim->add_flag("--oracle", oracle, "compare with an elimination-order Groebner basis");
  auto* best = common(app.add_subcommand("best-reembed", "best separating re-embedding"));
  best->add_option("--degree", degree, "search one degree only");
  best->add_flag("--all", all, "every best tuple of that degree");
  common(app.add_subcommand("optimal-positive", "optimal re-embedding for a positive grading"));
  auto* fib = common(app.add_subcommand("fiber", "special or generic fiber"));
  fib->add_option("--point", point, "c1,...,cm");
  fib->add_flag("--generic", generic, "generic fiber over K(a)");
  fib->add_flag("--report", report, "cotangent and regularity report");
  auto* solve = common(app.add_subcommand("ump-solve", "solve the unimodular matrix problem"), false);
  solve->add_option("--matrix", matrix, "problem file holding the matrix")->required();
  solve->add_option("--name", name, "matrix name, default A");
  auto* ump = common(app.add_subcommand("ump-reembed", "re-embedding by unimodular completion"));
  ump->add_option("--k", k, "number of leading generators to eliminate");
  ump->add_option("--fixture", fixture, "B<d> matrices per degree");
  auto* fr = common(app.add_subcommand("free-reembed", "isomorphism onto a polynomial ring"));
  fr->add_option("--fixture", fixture, "B<d> matrices per degree");
  common(app.add_subcommand("detect-grading", "non-negative grading making I homogeneous"));
  common(app.add_subcommand("smooth-check", "Jacobian criterion"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const bool as_json = format == "json";
  std::string hash;
  try {
    check_threads();
    const Input in = load(command == "ump-solve" ? matrix : input);
    hash = in.hash;
    const ProblemFile& pf = in.problem;
    Report r;
    if (command == "sep-indets") {
      r = sep_indets(pf);
    } else if (command == "find-sep") {
      r = find_sep(pf, z, coherent);
    } else if (command == "eliminate") {
      r = eliminate(pf, z, tuple, oracle);
    } else if (command == "best-reembed") {
      r = best_reembed(pf, degree, all);
    } else if (command == "optimal-positive") {
      r = optimal_positive(pf);
    } else if (command == "fiber") {
      r = fiber(pf, point, generic, report);
    } else if (command == "ump-solve") {
      r = ump_solve_cmd(pf, name);
    } else if (command == "ump-reembed") {
      r = ump_reembed_cmd(pf, k, fixture);
    } else if (command == "free-reembed") {
      r = free_reembed(pf, fixture);
    } else if (command == "detect-grading") {
      r = detect_grading_cmd(pf);
    } else {
      r = smooth_check(pf);
    }
    emit(out, as_json, command, hash, r);
    return kOk;
  } catch (const MathError& e) {
    emit_error(out, err, as_json, command, hash, std::string(to_string(e.code())), e.what());
    return kRefused;
  } catch (const ParseError& e) {
    emit_error(out, err, as_json, command, hash, "PARSE_ERROR",
               std::string(e.what()) + " at byte " + std::to_string(e.position()));
    return kUsage;
  } catch (const UsageError& e) {
    emit_error(out, err, as_json, command, hash, "USAGE", e.what());
    return kUsage;
  }
}

}  // namespace reembed::cli
