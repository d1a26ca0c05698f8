// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "cli.hpp"
#include "reembed/errors.hpp"
#include "reembed/fibers.hpp"
#include "reembed/parse.hpp"
#include "reembed/problem.hpp"
#include "reembed/reembedding.hpp"
#include "reembed/ump.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace reembed;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

ProblemFile load(const std::string& name) { return load_problem(std::string(REEMBED_DATA_DIR) + "/" + name); }
std::string path(const std::string& name) { return std::string(REEMBED_DATA_DIR) + "/" + name; }

std::vector<std::size_t> vars(const GradedRing& ring, const std::string& names) {
  return parse_indeterminates(names, ring);
}

std::vector<Polynomial> Ps(const GradedRing& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Generators of J moved back into the source ring.
std::vector<Polynomial> lifted(const Elimination& e, std::size_t target_size) {
  std::vector<long> back(target_size, -1);
  for (std::size_t i = 0; i < e.mapping.size(); ++i) {
    if (e.mapping[i] >= 0) back[static_cast<std::size_t>(e.mapping[i])] = static_cast<long>(i);
  }
  std::vector<Polynomial> out;
  for (const auto& g : e.ideal.generators()) out.push_back(g.remap(back));
  return out;
}

bool agrees_with_oracle(const IdealPresentation& I, const SeparatingTuple& t) {
  const auto e = rewrite_eliminate(I, t.z, t.f);
  return ideal_equal(Ideal(lifted(e, e.ideal.ring().size()), I.ring().size()), eliminate_oracle(I.ideal(), t.z));
}

std::map<std::int64_t, PolyMatrix> degree_fixtures(const ProblemFile& pf) {
  std::map<std::int64_t, PolyMatrix> out;
  for (const auto& [name, m] : pf.matrices) {
    if (name.size() > 1 && name[0] == 'B' && std::isdigit(static_cast<unsigned char>(name[1]))) {
      out.emplace(std::stoll(name.substr(1)), m);
    }
  }
  return out;
}

std::vector<long> drop(const GradedRing& ring, const std::vector<std::string>& names) {
  std::vector<bool> keep(ring.size(), true);
  for (const auto& n : names) keep[ring.require_index(n)] = false;
  std::vector<long> mapping;
  (void)ring.keep(keep, &mapping);
  return mapping;
}

void substitution_example() {
  const auto pf = load("substitution_awxy.problem");
  const auto I = pf.presentation();
  const auto z = vars(pf.ring, "x,y");
  const auto own = coherify(find_separating_tuple(I, z), pf.ring);
  const auto e = rewrite_eliminate(I, own.z, own.f);
  const auto want = pf.tuples.at("E");
  require(ideal_equal(Ideal(lifted(e, e.ideal.ring().size()), pf.ring.size()), Ideal(want, pf.ring.size())),
          "elimination ideal differs from <a^5*w^2 - a^2*w^2>");
  const auto fixed = rewrite_eliminate(I, z, pf.tuples.at("F"));
  require(fixed.rewritten == Ps(pf.ring, {"0", "-3*a^6*w^2 + 3*a^3*w^2", "a^5*w^2 - a^2*w^2"}),
          "rewritten tuple with the fixture F differs");
  const auto run = cli_run({"eliminate", "--z", "x,y", path("substitution_awxy.problem")});
  require(run.code == 0 && run.out.find("a^5*w^2 - a^2*w^2") != std::string::npos, "cli eliminate output");
}

void separating_example() {
  const auto pf = load("cvec_abxyz.problem");
  const auto I = pf.presentation();
  const auto z = vars(pf.ring, "x,y");
  const auto own = find_separating_tuple(I, z);
  require(!separating_violation(I, z, pf.tuples.at("F")), "printed f1, f2 fail the verifier");
  require(!separating_violation(I, own.z, own.f), "own tuple fails the verifier");
  require(agrees_with_oracle(I, coherify(own, pf.ring)), "rewrite-eliminate differs from the oracle");
}

void three_best_example() {
  const auto pf = load("three_best.problem");
  const auto I = pf.presentation();
  std::set<std::set<std::size_t>> got;
  for (const auto& t : all_best_tuples_in_degree(I, 2)) got.insert(std::set<std::size_t>(t.z.begin(), t.z.end()));
  std::set<std::set<std::size_t>> want;
  for (const char* s : {"y,x", "y,z", "y,w"}) {
    const auto z = vars(pf.ring, s);
    want.insert(std::set<std::size_t>(z.begin(), z.end()));
  }
  require(got == want, "tuple set differs from {(y,x),(y,z),(y,w)}");
  const std::vector<std::pair<const char*, const char*>> printed = {{"Fyx", "y,x"}, {"Fyz", "y,z"}, {"Fyw", "y,w"}};
  for (const auto& [name, z] : printed) {
    require(!separating_violation(I, vars(pf.ring, z), pf.tuples.at(name)), std::string(name) + " fails the verifier");
  }
}

void two_degree_example() {
  const auto pf = load("two_degree_blocks.problem");
  const auto I = pf.presentation();
  const auto r = best_separating_reembedding(I);
  const auto z = vars(pf.ring, "x,y,v,w");
  require(std::set<std::size_t>(r.z.begin(), r.z.end()) == std::set<std::size_t>(z.begin(), z.end()),
          "Z differs from (x,y,v,w)");
  std::vector<Polynomial> e;
  for (const auto& g : pf.tuples.at("E")) e.push_back(g.remap(drop(pf.ring, {"x", "y", "v", "w"})));
  require(ideal_equal(r.target.ideal(), Ideal(e, r.target.ring().size())), "J differs from <(a^3-1)*z, z^2>");
  // Fibers of J in K[z].
  const auto f1 = special_fiber_ideal(r.target, {Rational(1)});
  const Polynomial zp = Polynomial::variable(f1.ring().require_index("z"));
  require(ideal_equal(f1.ideal(), Ideal({zp * zp}, 1)), "fiber at a=1 is not <z^2>");
  const auto f2 = special_fiber_ideal(r.target, {Rational(2)});
  require(ideal_equal(f2.ideal(), Ideal({zp}, 1)), "fiber at a=2 is not <z>");
  const auto g = generic_fiber_ideal(r.target);
  const BasicIdeal<RationalFunction> zl({GenericPolynomial::variable(0)}, 1);
  require(ideal_equal(g.ideal(), zl), "generic fiber is not <z>");
}

void univariate_ump() {
  const auto pf = load("ump_univariate.problem");
  const auto& a = pf.matrices.at("A");
  require(!ump_violation(a, pf.matrices.at("B")), "printed B fails");
  require(!ump_violation(a, pf.matrices.at("Btilde")), "printed B-tilde fails");
  const auto sol = ump_solve(a);
  require(!ump_violation(a, sol.b), "solver output fails the contract");
}

void two_degree_ump() {
  const auto pf = load("ump_two_degrees.problem");
  const auto I = pf.presentation();
  const auto fixed = ump_reembed(I, 2, degree_fixtures(pf));
  require(fixed.target.generators().size() == 1, "J is not principal with fixtures");
  require(fixed.target.generators()[0] == pf.tuples.at("theta")[0].remap(drop(pf.ring, {"x2", "x5"})),
          "theta(g3) differs from the printed one");
  auto at_origin = [](const SmoothnessReport& s) {
    if (s.verdict != Regularity::SingularAtPoint || !s.witness) return false;
    return std::all_of(s.witness->begin(), s.witness->end(), [](const Rational& c) { return c.is_zero(); });
  };
  const auto principal = IdealPresentation(fixed.target.ring(), fixed.target.generators());
  require(at_origin(smoothness_check(principal)), "<theta(g3)> is not reported singular at the origin");
  const auto solved = ump_reembed(I, 2);
  require(solved.target.generators().size() == 1, "J is not principal with the solver");
  require(at_origin(smoothness_check(solved.target)), "solver J is not singular at the origin");
}

void regular_free() {
  const auto pf = load("free_regular.problem");
  const auto I = pf.presentation();
  const auto fixed = regular_free_reembed(I, degree_fixtures(pf));
  const auto& q = fixed.reembedding.qtilde;
  require(q.size() == 2 && q[0].is_zero() && q[1] == pf.tuples.at("qtilde")[0], "q-tilde differs");
  require(fixed.reembedding.target.ring().names() == std::vector<std::string>{"a1", "a2", "x2", "x3", "x5"},
          "target ring differs");
  require(fixed.reembedding.target.generators().empty(), "J is not zero with fixtures");
  const auto solved = regular_free_reembed(I);
  require(solved.reembedding.target.generators().empty(), "J is not zero with the solver");
  require(solved.reembedding.target.ring().size() == 5, "solver target does not have 5 indeterminates");
}

void cubic_free() {
  const auto pf = load("free_cubic.problem");
  const auto r = regular_free_reembed(pf.presentation());
  std::vector<Polynomial> want;
  const auto m = drop(pf.ring, {"x2"});
  for (const auto& t : pf.tuples.at("T")) want.push_back(t.remap(m));
  require(r.reembedding.theta.images == want, "T differs (strategy " + r.reembedding.blocks.begin()->second.strategy + ")");
  require(r.reembedding.target.generators().empty(), "J is not zero");
}

void not_unimodular() {
  const auto run = cli_run({"free-reembed", path("not_unimodular.problem")});
  require(run.code == 2, "exit status " + std::to_string(run.code));
  require(run.err.find("NOT_UNIMODULAR") != std::string::npos, "message: " + run.err);
}

void circle() {
  const auto run = cli_run({"detect-grading", path("circle.problem")});
  require(run.code == 0 && run.out.find("only trivial") != std::string::npos, "output: " + run.out);
}

// Random homogeneous ideals.

std::vector<Monomial> monomials_of_degree(const GradedRing& ring, std::int64_t d, std::uint32_t max_total) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(ring.size(), 0);
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t i, std::uint32_t total) {
    if (i == ring.size()) {
      const Monomial m(e);
      if (ring.degree(m) == d) out.push_back(m);
      return;
    }
    for (std::uint32_t k = 0; total + k <= max_total; ++k) {
      e[i] = k;
      walk(i + 1, total + k);
    }
    e[i] = 0;
  };
  walk(0, 0);
  return out;
}

IdealPresentation random_ideal(std::mt19937_64& rng) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto n = static_cast<std::size_t>(pick(3, 5));
  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("u" + std::to_string(i));
    weights.push_back(i == n - 1 ? pick(1, 2) : pick(0, 2));
  }
  const GradedRing ring(names, weights);
  std::vector<Polynomial> gens;
  const auto count = pick(1, 4);
  for (long g = 0; g < count; ++g) {
    const auto d = pick(1, 3);
    auto monos = monomials_of_degree(ring, d, 3);
    if (monos.empty()) continue;
    std::shuffle(monos.begin(), monos.end(), rng);
    Polynomial p;
    const auto terms = std::min<long>(pick(1, 3), static_cast<long>(monos.size()));
    for (long t = 0; t < terms; ++t) {
      long c = pick(-3, 3);
      if (c == 0) c = 1;
      p += Polynomial(monos[static_cast<std::size_t>(t)], Rational(c, pick(1, 2)));
    }
    // Half the time add a bare indeterminate of degree d.
    for (std::size_t i = 0; i < n && pick(0, 1) == 1; ++i) {
      if (ring.weight(i) == d) {
        p += Polynomial::variable(i);
        break;
      }
    }
    if (!p.is_zero()) gens.push_back(p);
  }
  return IdealPresentation(ring, gens);
}

void property_suite() {
  std::mt19937_64 rng(20241019);
  std::size_t checked = 0;
  for (int attempt = 0; attempt < 400 && checked < 25; ++attempt) {
    const auto I = random_ideal(rng);
    if (I.generators().empty()) continue;
    const auto where = "ideal #" + std::to_string(attempt);
    for (auto s : separating_indeterminates(I)) {
      if (try_find_separating_tuple(I, {s})) require(top_rank_check(I, {s}), where + ": top rank fails");
    }
    ReembeddingResult r;
    try {
      r = best_separating_reembedding(I);
    } catch (const MathError& e) {
      continue;
    }
    if (r.z.empty()) continue;
    require(top_rank_check(I, r.z), where + ": top rank fails for the best Z");
    require(agrees_with_oracle(I, r.tuple), where + ": substitution differs from the oracle");
    const auto m = I.ring().degree_zero_indices().size();
    for (int k = 0; k < 5; ++k) {
      FiberPoint gamma;
      for (std::size_t i = 0; i < m; ++i) {
        gamma.emplace_back(std::uniform_int_distribution<long>(-5, 5)(rng), std::uniform_int_distribution<long>(1, 3)(rng));
      }
      const auto c = cotangent_report(I, gamma);
      require(c.ambient_cotangent == c.fiber_cotangent + m, where + ": cotangent identity fails");
    }
    ++checked;
  }
  require(checked >= 20, "only " + std::to_string(checked) + " ideals with a coherent tuple");
}

void optimality_flag() {
  const auto a = load("substitution_awxy.problem");
  require(optimality_status(a.presentation(), vars(a.ring, "x,y")) == Optimality::OptimalByLinpart,
          "substitution example is not optimal-by-linpart");
  const auto b = load("nongraded_xy.problem");
  require(optimality_status(b.presentation(), vars(b.ring, "x")) == Optimality::Inconclusive,
          "non-graded example is not inconclusive");
  const auto c = load("two_degree_blocks.problem");
  require(best_separating_reembedding(c.presentation()).status == Optimality::Inconclusive,
          "two-degree example is not inconclusive");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"elimination by substitution with Z=(x,y)", substitution_example},
      {"separating tuple for Z=(x,y) with parameters a,b", separating_example},
      {"three best tuples in degree 2", three_best_example},
      {"best re-embedding over two degrees and its fibers", two_degree_example},
      {"UMP over Q[x]", univariate_ump},
      {"UMP re-embedding over two degrees, singular at the origin", two_degree_ump},
      {"regular algebra is free with fixtures and with the solver", regular_free},
      {"cubic hypersurface is free", cubic_free},
      {"non-unimodular coefficient matrix is refused", not_unimodular},
      {"circle has only the trivial grading", circle},
      {"random homogeneous ideals", property_suite},
      {"linear-part optimality flag", optimality_flag},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string reason;
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      reason = e.what();
    }
    std::cout << (reason.empty() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!reason.empty()) {
      std::cout << ": " << reason;
      ++failed;
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
