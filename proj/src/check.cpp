#include "toricfano/check.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "toricfano/hodge_diamond.hpp"

namespace toricfano {

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

nlohmann::json integers_json(const std::vector<Integer>& v) {
  auto a = nlohmann::json::array();
  for (const auto& z : v) a.push_back(integer_json(z));
  return a;
}

nlohmann::json optional_json(const std::optional<bool>& b) {
  return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "yes" : "no";
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

Status status_for(const Error& e) {
  return e.code() == Errc::ParseError ? Status::ParseError : Status::ValidationError;
}

void settle(EntryReport& r) {
  const bool all = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& kv) { return kv.second; });
  r.status = all ? Status::Ok : Status::IdentityViolation;
}

bool palindromic(const std::vector<Integer>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

void run_toric(const FanoPolytope& p, const LatticePolytope& primal, EntryReport& r) {
  r.validity.reflexive = is_reflexive(primal);
  r.validity.smooth = is_smooth(primal);
  if (!*r.validity.reflexive) throw Error(Errc::NotReflexive, "some facet is not at lattice distance 1");
  if (!*r.validity.smooth) throw Error(Errc::NotSmooth, "some facet is not a unimodular simplex");

  const LatticePolytope delta = polar_dual(p);
  const FaceLattice faces = face_lattice(delta);
  const FaceLattice primal_faces = face_lattice(primal);
  const ToricInvariants inv = toric_invariants(delta, faces);
  const int n = inv.n;

  IdentityReport id = verify_identity(HodgeDiamond::from_betti(inv.betti), inv.c1_cn1, inv.c_n);
  id.combinatorial_ok = verify_combinatorial(delta, faces);

  const Rational f0(static_cast<long long>(faces.count(0)));
  const Rational f1(static_cast<long long>(faces.count(1)));
  const Rational f2(static_cast<long long>(faces.count(2)));
  Integer betti_sum = 0;
  for (const auto& b : inv.betti) betti_sum += b;

  bool face_duality = true;
  for (int k = 0; k < n; ++k) face_duality = face_duality && faces.count(k) == primal_faces.count(n - 1 - k);

  r.checks["equality"] = id.equality;
  r.checks["defect_zero"] = id.defect == 0;
  r.checks["balance"] = id.balance_ok.value_or(false);
  r.checks["chi_p_form"] = id.chi_p_ok.value_or(false);
  r.checks["ehx_form"] = id.ehx_ok.value_or(false);
  r.checks["combinatorial"] = *id.combinatorial_ok;
  r.checks["strata_second_derivative"] = Rational(second_derivative_at_one(inv.e_hat)) == 2 * f2;
  r.checks["hrr_second_derivative"] =
      2 * f2 == Rational(inv.c1_cn1, 6) + (Rational(n * n, 4) - Rational(5 * n, 12)) * Rational(inv.c_n);
  r.checks["simple_dual"] = 2 * f1 == n * f0;
  r.checks["face_duality"] = face_duality;
  r.checks["euler_characteristic"] = inv.e_hat.evaluate(1) == betti_sum && betti_sum == inv.c_n;
  r.checks["poincare_duality"] = palindromic(inv.betti);

  r.invariants = inv;
  r.identity = id;
  settle(r);
}

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::IdentityViolation: return "identity_violation";
    case Status::ValidationError: return "validation_error";
    case Status::ParseError: return "parse_error";
  }
  return "unknown";
}

int exit_code(Status s) noexcept {
  switch (s) {
    case Status::Ok: return 0;
    case Status::IdentityViolation: return 1;
    case Status::ValidationError:
    case Status::ParseError: return 2;
  }
  return 2;
}

std::size_t RunReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const EntryReport& e) { return e.status == s; }));
}

int RunReport::exit_status() const {
  int worst = 0;
  for (const auto& e : entries) worst = std::max(worst, exit_code(e.status));
  return worst;
}

EntryReport check_polytope_data(const PolytopeData& data, const std::string& source, bool dual) {
  EntryReport r;
  r.source = source;
  r.mode = "toric";
  try {
    std::vector<LatticePoint> rays =
        dual ? fano_from_dual(data.dim, data.vertices).vertices() : data.vertices;
    r.validity.primitive = std::all_of(rays.begin(), rays.end(), [](const LatticePoint& v) {
      return v.is_primitive();
    });
    const FanoPolytope p(data.dim, std::move(rays));
    try {
      const LatticePolytope primal = hull(p);
      r.validity.spanning = true;
      run_toric(p, primal, r);
    } catch (const Error& e) {
      if (e.code() == Errc::DegenerateInput) r.validity.spanning = false;
      throw;
    }
  } catch (const Error& e) {
    r.status = status_for(e);
    r.error = e.what();
  }
  return r;
}

EntryReport check_polytope(const FanoPolytope& p, const std::string& source) {
  return check_polytope_data(PolytopeData{p.dim(), p.vertices()}, source, false);
}

EntryReport check_diamond(const DiamondFile& file, const std::string& source) {
  EntryReport r;
  r.source = source;
  r.mode = "diamond";
  try {
    const HodgeDiamond& d = file.diamond;
    for (const auto& v : d.serre_violations()) r.diagnostics.push_back("Serre duality fails: " + v);
    if (!d.odd_vanishing()) throw Error(Errc::HypothesisViolated, "odd cohomology is nonzero");

    DiamondSummary s;
    s.chi = chi_p(d);
    s.even_betti = d.even_betti();
    s.e_polynomial = e_polynomial(d).to_string();
    s.lhs = lhs_weighted_betti(s.even_betti, d.n());
    s.defect = defect(d);
    s.weighted_chi = weighted_chi(s.chi, d.n());
    r.checks["decomposition"] = s.lhs + s.defect == s.weighted_chi;

    Integer euler = 0;
    for (const auto& b : s.even_betti) euler += b;
    if (file.c_n && *file.c_n != euler) {
      r.diagnostics.push_back("c_n = " + file.c_n->str() + " differs from the Euler characteristic " +
                              euler.str());
    }
    if (file.c1_cn1) s.ehx = ehx_form(s.even_betti, *file.c1_cn1, d.n());
    if (file.c1_cn1 && file.c_n) {
      IdentityReport id = verify_identity(d, *file.c1_cn1, *file.c_n);
      r.checks["inequality"] = id.inequality_ok;
      if (!id.chi_p_ok) {
        r.diagnostics.push_back("chi_p is not palindromic; Chern-number identity for chi_p not checked");
      } else if (!*id.chi_p_ok) {
        r.diagnostics.push_back("sum chi_p (p - n/2)^2 differs from the Chern side; inputs are not "
                                "geometrically consistent");
      }
      r.identity = id;
    } else {
      r.diagnostics.push_back("Chern numbers incomplete; inequality not evaluated");
    }
    r.diamond = std::move(s);
    settle(r);
  } catch (const Error& e) {
    r.status = status_for(e);
    r.error = e.what();
  }
  return r;
}

EntryReport check_file(const std::filesystem::path& path, const CheckOptions& options) {
  const std::string source = path.string();
  bool diamond_mode = options.diamond;
  try {
    diamond_mode = diamond_mode || (!options.dual && looks_like_diamond(path));
    if (diamond_mode) return check_diamond(read_diamond_file(path), source);
    return check_polytope_data(read_polytope_file(path), source, options.dual);
  } catch (const Error& e) {
    EntryReport r;
    r.source = source;
    r.mode = diamond_mode ? "diamond" : "toric";
    r.status = status_for(e);
    r.error = e.what();
    return r;
  }
}

RunReport run_check(const std::filesystem::path& path, const CheckOptions& options) {
  return RunReport{{check_file(path, options)}};
}

std::vector<std::filesystem::path> expand_inputs(const std::vector<std::filesystem::path>& inputs) {
  std::vector<std::filesystem::path> files;
  for (const auto& in : inputs) {
    if (std::filesystem::is_directory(in)) {
      std::vector<std::filesystem::path> found;
      for (const auto& e : std::filesystem::directory_iterator(in)) {
        if (e.is_regular_file()) found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  return files;
}

RunReport run_batch(const std::vector<std::filesystem::path>& inputs, unsigned jobs) {
  const auto files = expand_inputs(inputs);
  RunReport report;
  report.entries.resize(files.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) report.entries[i] = check_file(files[i]);
    return report;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) report.entries[i] = check_file(files[i]);
      });
    }
  }
  return report;
}

nlohmann::json to_json(const EntryReport& e) {
  nlohmann::json j;
  j["source"] = e.source;
  j["mode"] = e.mode;
  j["status"] = std::string(to_string(e.status));
  j["exit_code"] = exit_code(e.status);
  j["error"] = e.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.error);
  j["validity"] = {{"primitive", optional_json(e.validity.primitive)},
                   {"spanning", optional_json(e.validity.spanning)},
                   {"reflexive", optional_json(e.validity.reflexive)},
                   {"smooth", optional_json(e.validity.smooth)}};
  if (e.invariants) {
    const auto& inv = *e.invariants;
    j["invariants"] = {{"n", inv.n},
                       {"e_hat", integers_json(inv.e_hat.coeffs())},
                       {"e_hat_text", inv.e_hat.to_string()},
                       {"betti", integers_json(inv.betti)},
                       {"c_n", integer_json(inv.c_n)},
                       {"c1_cn1", integer_json(inv.c1_cn1)},
                       {"f_vector", inv.f_vector},
                       {"edge_interior_total", integer_json(inv.edge_interior_total)}};
  }
  if (e.diamond) {
    const auto& s = *e.diamond;
    j["diamond"] = {{"chi", integers_json(s.chi)},
                    {"even_betti", integers_json(s.even_betti)},
                    {"e_polynomial", s.e_polynomial},
                    {"lhs", to_string(s.lhs)},
                    {"defect", to_string(s.defect)},
                    {"weighted_chi", to_string(s.weighted_chi)}};
    if (s.ehx) j["diamond"]["ehx"] = {{"lhs", to_string(s.ehx->lhs)}, {"rhs", to_string(s.ehx->rhs)}};
  }
  if (e.identity) {
    const auto& id = *e.identity;
    j["identity"] = {{"n", id.n},
                     {"lhs", to_string(id.lhs)},
                     {"rhs", to_string(id.rhs)},
                     {"defect", to_string(id.defect)},
                     {"equality", id.equality},
                     {"inequality_ok", id.inequality_ok},
                     {"balance_ok", optional_json(id.balance_ok)},
                     {"chi_p_ok", optional_json(id.chi_p_ok)},
                     {"ehx_ok", optional_json(id.ehx_ok)},
                     {"combinatorial_ok", optional_json(id.combinatorial_ok)}};
  }
  j["checks"] = e.checks;
  j["diagnostics"] = e.diagnostics;
  return j;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json j;
  auto entries = nlohmann::json::array();
  for (const auto& e : report.entries) entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  j["aggregate"] = {{"total", report.entries.size()},
                    {"passed", report.count(Status::Ok)},
                    {"identity_violations", report.count(Status::IdentityViolation)},
                    {"validation_errors", report.count(Status::ValidationError)},
                    {"parse_errors", report.count(Status::ParseError)},
                    {"exit_status", report.exit_status()}};
  return j;
}

std::string to_text(const RunReport& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << "== " << e.source << " [" << e.mode << "] " << to_string(e.status) << '\n';
    if (!e.error.empty()) os << "  error: " << e.error << '\n';
    if (e.mode == "toric") {
      os << "  validity: primitive=" << yes_no(e.validity.primitive)
         << " spanning=" << yes_no(e.validity.spanning) << " reflexive=" << yes_no(e.validity.reflexive)
         << " smooth=" << yes_no(e.validity.smooth) << '\n';
    }
    if (e.invariants) {
      const auto& inv = *e.invariants;
      os << "  f-vector of dual:";
      for (auto f : inv.f_vector) os << ' ' << f;
      os << "\n  E^(t) = " << inv.e_hat.to_string() << '\n'
         << "  betti: " << join(inv.betti) << "   c_n = " << inv.c_n << "   c1*c_{n-1} = " << inv.c1_cn1
         << '\n';
    }
    if (e.diamond) {
      const auto& s = *e.diamond;
      os << "  E(u,v) = " << s.e_polynomial << '\n'
         << "  chi_p: " << join(s.chi) << "   even betti: " << join(s.even_betti) << '\n';
      if (s.ehx) os << "  intro form: lhs = " << to_string(s.ehx->lhs) << "  rhs = " << to_string(s.ehx->rhs) << '\n';
      if (!e.identity) os << "  lhs = " << to_string(s.lhs) << "  defect = " << to_string(s.defect) << '\n';
    }
    if (e.identity) {
      const auto& id = *e.identity;
      os << "  lhs = " << to_string(id.lhs) << "  rhs = " << to_string(id.rhs)
         << "  defect = " << to_string(id.defect) << "  equality = " << (id.equality ? "yes" : "no")
         << "  inequality = " << (id.inequality_ok ? "ok" : "VIOLATED") << '\n';
    }
    if (!e.checks.empty()) {
      os << "  checks:";
      for (const auto& [name, ok] : e.checks) os << ' ' << name << '=' << (ok ? "pass" : "FAIL");
      os << '\n';
    }
    for (const auto& d : e.diagnostics) os << "  note: " << d << '\n';
  }
  os << "summary: " << report.entries.size() << " entries, " << report.count(Status::Ok) << " passed, "
     << report.count(Status::IdentityViolation) << " identity violations, "
     << report.count(Status::ValidationError) + report.count(Status::ParseError) << " invalid; exit "
     << report.exit_status() << '\n';
  return os.str();
}

}  // namespace toricfano
