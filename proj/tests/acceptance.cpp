// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "toricfano/check.hpp"
#include "toricfano/corpus.hpp"
#include "toricfano/identity.hpp"
#include "toricfano/polytope_io.hpp"
#include "toricfano/toric_invariants.hpp"

using namespace toricfano;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = TORICFANO_FIXTURE_DIR;
const fs::path kTestData = TORICFANO_TEST_DATA_DIR;

/// Collects failures for one criterion.
class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool passed() const { return !failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

struct Pipeline {
  LatticePolytope primal;
  LatticePolytope delta;
  FaceLattice faces;
  FaceLattice primal_faces;
  ToricInvariants inv;
};

Pipeline run_pipeline(const FanoPolytope& p) {
  auto primal = hull(p);
  auto delta = polar_dual(p);
  auto faces = face_lattice(delta);
  auto primal_faces = face_lattice(primal);
  auto inv = toric_invariants(delta, faces);
  return {std::move(primal), std::move(delta), std::move(faces), std::move(primal_faces), std::move(inv)};
}

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::string name_of(const FanoPolytope& p) {
  std::ostringstream os;
  os << "dim " << p.dim() << " with " << p.vertices().size() << " rays";
  return os.str();
}

// Every identity verification on one smooth toric Fano polytope.
void require_identities(Outcome& out, const FanoPolytope& p, const std::string& label) {
  const auto r = run_pipeline(p);
  out.require(is_smooth(r.primal), label + ": smooth");
  out.require(is_reflexive(r.primal), label + ": reflexive");
  const auto id = verify_identity(HodgeDiamond::from_betti(r.inv.betti), r.inv.c1_cn1, r.inv.c_n);
  out.require(id.equality && id.defect == 0, label + ": equality with zero defect");
  out.require(verify_chi_p_form(r.inv.betti, r.inv.c1_cn1, r.inv.c_n, r.inv.n), label + ": chi_p identity");
  const auto ehx = ehx_form(r.inv.betti, r.inv.c1_cn1, r.inv.n);
  out.require(ehx.lhs == ehx.rhs, label + ": intro form");
  out.require(verify_combinatorial(r.delta, r.faces), label + ": combinatorial identity");
}

// Internal consistency of the face lattice and invariants.
void require_consistency(Outcome& out, const FanoPolytope& p, const std::string& label) {
  const auto r = run_pipeline(p);
  const int n = r.inv.n;
  const Rational f0(static_cast<long long>(r.faces.count(0)));
  const Rational f1(static_cast<long long>(r.faces.count(1)));
  const Rational f2(static_cast<long long>(r.faces.count(2)));
  out.require(Rational(second_derivative_at_one(r.inv.e_hat)) == 2 * f2, label + ": E''(1) = 2 f2");
  out.require(2 * f2 == Rational(r.inv.c1_cn1, 6) +
                            (Rational(n * n, 4) - Rational(5 * n, 12)) * Rational(r.inv.c_n),
              label + ": 2 f2 = c1c_{n-1}/6 + (n^2/4 - 5n/12) c_n");
  out.require(f1 == Rational(n) * f0 / 2, label + ": f1 = n f0 / 2");
  for (int k = 0; k < n; ++k) {
    out.require(r.faces.count(k) == r.primal_faces.count(n - 1 - k), label + ": face-count duality");
  }
  Integer betti_sum = 0;
  for (const auto& b : r.inv.betti) betti_sum += b;
  out.require(r.inv.e_hat.evaluate(1) == betti_sum && betti_sum == r.inv.c_n, label + ": E(1) = sum betti = c_n");
}

std::vector<std::vector<int>> sum_shapes(int max_total) {
  // Nondecreasing tuples over {1, 2, 3} with at least two parts.
  std::vector<std::vector<int>> out;
  std::function<void(std::vector<int>&, int)> extend = [&](std::vector<int>& cur, int total) {
    if (cur.size() >= 2) out.push_back(cur);
    for (int k = cur.empty() ? 1 : cur.back(); k <= 3; ++k) {
      if (total + k > max_total) break;
      cur.push_back(k);
      extend(cur, total + k);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  extend(cur, 0);
  return out;
}

FanoPolytope sum_of(const std::vector<int>& shape) {
  FanoPolytope p = gen_pn(shape.front());
  for (std::size_t i = 1; i < shape.size(); ++i) p = gen_direct_sum(p, gen_pn(shape[i]));
  return p;
}

std::string shape_name(const std::vector<int>& shape) {
  std::string s;
  for (std::size_t i = 0; i < shape.size(); ++i) s += (i ? "x" : "") + std::string("P") + std::to_string(shape[i]);
  return s;
}

std::vector<fs::path> polytope_fixtures() {
  std::vector<fs::path> out;
  for (const auto& sub : {"dim2", "dim3"}) {
    for (const auto& f : expand_inputs({kFixtures / sub})) out.push_back(f);
  }
  return out;
}

std::vector<std::pair<std::string, FanoPolytope>> full_corpus() {
  std::vector<std::pair<std::string, FanoPolytope>> corpus;
  for (int n = 1; n <= 8; ++n) corpus.emplace_back("P" + std::to_string(n), gen_pn(n));
  for (const auto& e : dim2_corpus()) corpus.emplace_back(e.name, e.polytope);
  for (const auto& shape : sum_shapes(5)) corpus.emplace_back(shape_name(shape), sum_of(shape));
  for (const auto& f : polytope_fixtures()) {
    const auto data = read_polytope_file(f);
    corpus.emplace_back(f.filename().string(), FanoPolytope(data.dim, data.vertices));
  }
  return corpus;
}

Outcome ac1_projective_spaces() {
  Outcome out;
  for (int n = 1; n <= 8; ++n) {
    const std::string label = "P" + std::to_string(n);
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_pipeline(gen_pn(n));
    const auto id = verify_identity(HodgeDiamond::from_betti(r.inv.betti), r.inv.c1_cn1, r.inv.c_n);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    const std::vector<Integer> ones(static_cast<std::size_t>(n) + 1, Integer(1));
    out.require(r.inv.betti == ones, label + ": betti all ones");
    out.require(r.inv.c_n == n + 1, label + ": c_n = n + 1");
    out.require(r.inv.c1_cn1 == Integer(n) * (n + 1) * (n + 1) / 2, label + ": c1 c_{n-1} = n(n+1)^2/2");
    const Rational closed(Integer(n) * (n + 1) * (n + 2), 12);
    out.require(id.lhs == closed && id.rhs == closed, label + ": lhs = rhs = n(n+1)(n+2)/12");
    out.require(elapsed < std::chrono::seconds(1), label + ": runtime < 1 s");
  }
  return out;
}

Outcome ac2_dim2() {
  Outcome out;
  const auto corpus = dim2_corpus();
  out.require(corpus.size() == 5, "five entries");
  for (const auto& e : corpus) require_identities(out, e.polytope, e.name);

  const auto p2 = run_pipeline(corpus[0].polytope);
  const auto p2_id = verify_identity(HodgeDiamond::from_betti(p2.inv.betti), p2.inv.c1_cn1, p2.inv.c_n);
  out.require(p2_id.lhs == 2 && p2_id.rhs == 2, "P2: (lhs, rhs) = (2, 2)");
  out.require(p2.inv.c1_cn1 == 9, "P2: c1^2 = 9");
  const auto hex = run_pipeline(corpus[4].polytope);
  out.require(hex.inv.betti == ints({1, 4, 1}), "hexagon: betti (1,4,1)");
  out.require(hex.inv.c1_cn1 == 6, "hexagon: c1^2 = 6");
  return out;
}

Outcome ac3_products() {
  Outcome out;
  for (const auto& shape : sum_shapes(5)) {
    const auto label = shape_name(shape);
    const auto p = sum_of(shape);
    IntPolynomial product{1};
    for (int k : shape) product = product * run_pipeline(gen_pn(k)).inv.e_hat;
    out.require(run_pipeline(p).inv.e_hat == product, label + ": E-hat is the product of factors");
    require_identities(out, p, label);
    out.require(check_polytope(p, label).status == Status::Ok, label + ": full check passes");
  }
  const auto r = run_pipeline(gen_direct_sum(gen_pn(1), gen_pn(2)));
  const auto id = verify_identity(HodgeDiamond::from_betti(r.inv.betti), r.inv.c1_cn1, r.inv.c_n);
  out.require(r.inv.betti == ints({1, 2, 2, 1}), "P1xP2: betti (1,2,2,1)");
  out.require(r.inv.c_n == 6, "P1xP2: c3 = 6");
  out.require(r.inv.c1_cn1 == 24, "P1xP2: c1c2 = 24");
  out.require(id.lhs == Rational(11, 2) && id.rhs == Rational(11, 2), "P1xP2: lhs = rhs = 11/2");
  return out;
}

Outcome ac4_k3() {
  Outcome out;
  const auto file = read_diamond_file(kFixtures / "diamonds" / "k3.json");
  out.require(file.diamond.at(1, 1) == 20 && file.diamond.at(2, 0) == 1 && file.diamond.at(0, 2) == 1,
              "fixture holds the K3 diamond");
  out.require(file.c1_cn1 == Integer(0) && file.c_n == Integer(24), "fixture holds c1^2 = 0, c2 = 24");
  const auto id = verify_identity(file.diamond, *file.c1_cn1, *file.c_n);
  out.require(id.lhs == 2, "lhs = 2");
  out.require(id.rhs == 4, "rhs = 4");
  out.require(id.defect == 2, "defect = 2");
  out.require(!id.equality && id.inequality_ok && id.lhs < id.rhs, "strict inequality");
  out.require(verify_chi_p_form(chi_p(file.diamond), 0, 24, 2), "chi_p identity holds");
  const auto report = run_check(kFixtures / "diamonds" / "k3.json");
  out.require(report.exit_status() == 0, "diamond mode exits 0");
  return out;
}

Outcome ac5_decomposition() {
  Outcome out;
  std::mt19937_64 rng(1997);
  std::size_t diagonal_seen = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 1 + trial % 6;
    const auto d = oracle::random_diamond(rng, n, 50, trial % 2 == 0, trial % 5 == 0);
    const Rational lhs = lhs_weighted_betti(d.even_betti(), n);
    const Rational def = defect(d);
    out.require(lhs + def == weighted_chi(chi_p(d), n), "decomposition identity");
    out.require(def >= 0, "defect >= 0");
    out.require((def == 0) == d.is_diagonal(), "defect = 0 exactly on diagonal diamonds");
    diagonal_seen += d.is_diagonal();
  }
  out.require(diagonal_seen >= 100, "diagonal diamonds exercised");
  return out;
}

Outcome ac6_consistency() {
  Outcome out;
  for (const auto& [name, p] : full_corpus()) require_consistency(out, p, name);
  return out;
}

Outcome ac7_equivalence() {
  Outcome out;
  std::mt19937_64 rng(1703);
  std::uniform_int_distribution<int> entry(0, 50);
  std::size_t holding = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<Integer> betti(static_cast<std::size_t>(n) + 1);
    Integer euler = 0;
    for (auto& b : betti) {
      b = entry(rng);
      euler += b;
    }
    Integer c1_cn1 = std::uniform_int_distribution<int>(-500, 5000)(rng);
    if (trial % 2 == 0) {
      const Rational target = 6 * (lhs_weighted_betti(betti, n) - Rational(Integer(n) * euler, 12));
      if (boost::multiprecision::denominator(target) == 1) c1_cn1 = boost::multiprecision::numerator(target);
    }
    const bool rewritten = lhs_weighted_betti(betti, n) == rhs_chern(c1_cn1, euler, n);
    const auto intro = ehx_form(betti, c1_cn1, n);
    out.require((intro.lhs == intro.rhs) == rewritten, "intro form <=> rewritten form");
    holding += rewritten;
  }
  out.require(holding >= 100, "both outcomes exercised");
  return out;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TORICFANO_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome ac8_negative_controls() {
  Outcome out;
  const FanoPolytope singular(2, {{1, 0}, {0, 1}, {-1, -2}});
  out.require(is_reflexive(singular), "conv{(1,0),(0,1),(-1,-2)} is reflexive");
  out.require(!is_smooth(singular), "conv{(1,0),(0,1),(-1,-2)} is not smooth");
  out.require(run_cli("check " + (kTestData / "singular.txt").string()) == 2, "check exits 2 on it");

  bool rejected = false;
  try {
    HodgeDiamond({{1, 0, 2}, {0, 20, 0}, {1, 0, 1}});
  } catch (const Error& e) {
    rejected = e.code() == Errc::InvalidDiamond;
  }
  out.require(rejected, "Hodge-asymmetric diamond rejected");
  out.require(run_cli("diamond " + (kTestData / "asymmetric.json").string()) == 2, "diamond exits 2 on it");

  const auto r = run_pipeline(gen_pn(3));
  const Rational lhs = lhs_weighted_betti(r.inv.betti, 3);
  out.require(lhs == rhs_chern(r.inv.c1_cn1, r.inv.c_n, 3), "P3 passes with n/12");
  out.require(lhs != Rational(r.inv.c1_cn1, 6) + Rational(r.inv.c_n, 12), "P3 fails with 1/12");
  return out;
}

Outcome ac9_robustness() {
  Outcome out;
  const auto scratch = fs::temp_directory_path() / "toricfano_acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  for (const auto& f : polytope_fixtures()) {
    const auto data = read_polytope_file(f);
    const auto copy = scratch / f.filename();
    write_polytope_file(copy, data);
    const auto back = read_polytope_file(copy);
    auto a = data.vertices;
    auto b = back.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.require(back.dim == data.dim && a == b, "round-trip " + f.filename().string());
  }
  for (const auto& f : expand_inputs({kFixtures / "diamonds"})) {
    const auto file = read_diamond_file(f);
    std::stringstream buffer;
    write_diamond(buffer, file);
    const auto back = read_diamond(buffer);
    out.require(back.diamond == file.diamond && back.c1_cn1 == file.c1_cn1 && back.c_n == file.c_n,
                "round-trip " + f.filename().string());
  }

  const std::vector<fs::path> inputs{kFixtures / "dim2", kFixtures / "dim3", kFixtures / "diamonds", kTestData};
  const auto sequential = run_batch(inputs, 1);
  for (unsigned jobs : {2u, 4u, 8u}) {
    const auto concurrent = run_batch(inputs, jobs);
    out.require(to_json(concurrent) == to_json(sequential),
                "batch with " + std::to_string(jobs) + " workers matches sequential");
  }
  fs::remove_all(scratch);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 projective spaces P1..P8: closed forms and runtime", ac1_projective_spaces},
      {"AC2 dim-2 del Pezzo corpus: all identities exact", ac2_dim2},
      {"AC3 free sums of P1, P2, P3 up to dimension 5", ac3_products},
      {"AC4 K3 diamond mode", ac4_k3},
      {"AC5 algebraic decomposition on random diamonds", ac5_decomposition},
      {"AC6 internal consistency on every corpus polytope", ac6_consistency},
      {"AC7 intro form <=> rewritten form on random data", ac7_equivalence},
      {"AC8 negative controls", ac8_negative_controls},
      {"AC9 parser round-trip and batch determinism", ac9_robustness},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (outcome.passed() ? "[PASS] " : "[FAIL] ") << name << " (" << outcome.checks()
              << " checks)\n";
    for (const auto& f : outcome.failures()) std::cout << "       " << f << '\n';
    failed += !outcome.passed();
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed\n" : std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
