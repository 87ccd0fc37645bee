// Command-line front end: relations | matrices | noncomm | automorphisms | verify.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "splitring/finite_ring.hpp"
#include "splitring/job.hpp"
#include "splitring/realization.hpp"
#include "splitring/relations.hpp"
#include "splitring/symmetry.hpp"

using namespace splitring;
using nlohmann::json;

namespace {

struct Options {
  JobSpec job;
  std::string a, b, f;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::optional<int> cap_override;
  std::string out;
  std::string checks = "all";
  std::string matrices_file;
  bool skip_perms = false;

  int cap() const { return cap_override ? *cap_override : default_cap(); }
};

// Output assembled by a verb: a JSON document, a text rendering and the
// overall verdict.
struct Result {
  json doc = json::object();
  std::ostringstream text;
  bool ok = true;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

Poly input_poly(Options& o) {
  int given = !o.a.empty() + !o.b.empty() + !o.f.empty();
  if (given != 1) throw Error(ErrorKind::Parse, "give exactly one of --a, --b, --f");
  if (!o.a.empty()) {
    o.job.convention = CoeffConvention::A;
    o.job.coeffs = o.a;
  } else if (!o.b.empty()) {
    o.job.convention = CoeffConvention::B;
    o.job.coeffs = o.b;
  } else {
    o.job.convention = CoeffConvention::Full;
    o.job.coeffs = o.f;
  }
  return build_job_poly(o.job);
}

json mpoly_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.str()}});
  return {{"text", p.grouped_str()}, {"terms", terms}};
}

// (s1 - a1)*(S) - (s2 - a2)*(S') + ... for f_i.
std::string sigma_form(const Poly& f, int i) {
  const int n = f.degree();
  ElemVec a = signed_coefficients(f);
  std::string out;
  for (int k = 1; k <= n - i + 1; ++k) {
    std::string ak = a[static_cast<std::size_t>(k - 1)].str();
    std::string factor = "(s" + std::to_string(k);
    if (ak != "0") factor += (ak[0] == '-' ? " + " + ak.substr(1) : " - " + (ak.find_first_of(" +-") != std::string::npos ? "(" + ak + ")" : ak));
    factor += ")";
    MPoly s = complete_homogeneous_prefix(f.ring(), n, i, n - i + 1 - k);
    std::string st = s.str();
    st.erase(std::remove(st.begin(), st.end(), ' '), st.end());
    if (st != "1") factor += s.terms().size() > 1 ? "*(" + st + ")" : "*" + st;
    if (out.empty())
      out = factor;
    else
      out += (k % 2 == 0 ? " - " : " + ") + factor;
  }
  return out;
}

void relations_section(const Poly& f, Result& r) {
  auto rec = build_relations_recursive(f);
  auto closed = build_relations_closed(f);
  const bool agree = rec == closed;
  const auto sigma = verify_sigma_expansion(f);
  json jr = json::array(), jc = json::array();
  for (const auto& p : rec) jr.push_back(mpoly_json(p));
  for (const auto& p : closed) jc.push_back(mpoly_json(p));
  r.doc["relations_recursive"] = jr;
  r.doc["relations_closed"] = jc;
  r.doc["constructions_agree"] = agree;
  r.doc["sigma_expansion_holds"] = sigma.holds;
  r.ok = r.ok && agree && sigma.holds;
  r.text << "f = " << f.str() << "\n";
  for (std::size_t i = 0; i < closed.size(); ++i) r.text << "f" << i + 1 << " = " << closed[i].grouped_str() << "\n";
  r.text << "sigma form:\n";
  for (int i = 1; i <= f.degree(); ++i) r.text << "f" << i << " = " << sigma_form(f, i) << "\n";
  r.text << "recursive and closed constructions agree: " << yes_no(agree) << "\n";
  r.text << "sigma expansion identity: " << yes_no(sigma.holds) << "\n";
}

void report_section(const RealizationReport& rep, Result& r, bool print_matrices) {
  json j = rep.to_json();
  r.doc["report"] = j;
  r.ok = r.ok && rep.passed();
  if (print_matrices)
    for (std::size_t i = 0; i < rep.matrices.size(); ++i) r.text << "A" << i + 1 << " =\n" << rep.matrices[i].pretty() << "\n";
  r.text << "checks:\n";
  for (const auto& [c, v] : rep.checks)
    r.text << "  " << check_name(c) << ": " << (v ? pass_fail(*v) : "skipped") << "\n";
  if (rep.rank) r.text << "rank of monomials: " << *rep.rank << "\n";
  for (const auto& note : rep.notes) r.text << "note: " << note << "\n";
}

std::vector<SqMatrix> load_matrices(const std::string& path, const RingPtr& ring) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  if (j.is_object() && j.contains("report")) j = j["report"];
  if (j.is_object() && j.contains("matrices")) j = j["matrices"];
  std::vector<SqMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, ring));
  return out;
}

void matrices_section(const Poly& f, const Options& o, Result& r, unsigned checks, bool print) {
  std::vector<SqMatrix> a =
      o.matrices_file.empty() ? build_realization(f, o.cap()) : load_matrices(o.matrices_file, f.ring());
  SplitRingPtr split;
  if (checks & static_cast<unsigned>(Check::RegularRepAgreement)) split = SplitRing::create(f, o.cap());
  report_section(verify_realization(f, a, checks, split, o.seed), r, print);
}

ElemVec gamma_samples(const RingPtr& ring, std::uint64_t seed) {
  ElemVec s{ring->one(), -ring->one(), ring->from_int(2)};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 8; ++i) s.push_back(ring->from_int(static_cast<long long>(rng() % 2001) - 1000));
  return s;
}

void split_section(const SplitRingPtr& s, const Options& o, Result& r) {
  const bool fact = s->universal_factorization_check();
  const auto samples = gamma_samples(s->base(), o.seed);
  const bool gamma = s->gamma_injectivity_check(samples);
  r.doc["splitting_ring"] = {{"dimension", s->dim()},
                             {"universal_factorization", fact},
                             {"gamma_injective", gamma},
                             {"gamma_exhaustive", s->base()->is_finite()}};
  r.ok = r.ok && fact && gamma;
  r.text << "splitting ring: dimension " << s->dim() << "\n";
  r.text << "  universal factorization: " << pass_fail(fact) << "\n";
  r.text << "  scalars embed injectively (" << (s->base()->is_finite() ? "exhaustive" : "sampled")
         << "): " << pass_fail(gamma) << "\n";
}

void automorphisms_section(const SplitRingPtr& s, const Options& o, Result& r) {
  const int n = s->n();
  json certs = json::array();
  r.text << "automorphisms:\n";
  if (o.skip_perms) {
    r.doc["theta_injective"] = nullptr;
    r.text << "  permutation images skipped\n";
  } else {
    const bool theta = theta_injectivity(s);
    r.doc["theta_injective"] = theta;
    r.doc["theta_asserted"] = n > 2;
    if (n > 2) r.ok = r.ok && theta;
    r.text << "  Theta injective: " << yes_no(theta) << (n > 2 ? "" : " (reported only, n <= 2)") << "\n";
    for (const auto& p : Perm::all(n)) {
      auto cert = is_automorphism_system(permutation_system(s, p));
      certs.push_back(cert.to_json());
      r.ok = r.ok && cert.verdict;
      r.text << "  " << cert.system << ": " << pass_fail(cert.verdict) << "\n";
    }
  }
  // Scaling systems t_i = u r_i for every d | n whose pattern f satisfies.
  json scaling = json::array();
  std::vector<std::string> seen;
  for (int d = n; d >= 2; --d) {
    if (!scaling_pattern_holds(s->f(), d)) continue;
    ElemVec units;
    try {
      units = roots_of_unity(s->base(), d);
    } catch (const Error& e) {
      r.text << "  scaling d=" << d << ": " << e.what() << "\n";
      continue;
    }
    for (const auto& u : units) {
      if (std::find(seen.begin(), seen.end(), u.str()) != seen.end()) continue;
      seen.push_back(u.str());
      auto cert = is_automorphism_system(scaling_system(s, u, d));
      scaling.push_back(cert.to_json());
      r.ok = r.ok && cert.verdict;
      r.text << "  " << cert.system << ": " << pass_fail(cert.verdict) << "\n";
    }
  }
  if (scaling.empty()) r.text << "  no scaling systems (coefficient pattern or units do not allow one)\n";
  r.doc["permutation_certificates"] = certs;
  r.doc["scaling_certificates"] = scaling;
}

Result run_relations(Options& o) {
  Result r;
  Poly f = input_poly(o);
  r.doc["command"] = "relations";
  r.doc["ring"] = f.ring()->spec();
  r.doc["f"] = f.str();
  relations_section(f, r);
  return r;
}

Result run_matrices(Options& o) {
  Result r;
  Poly f = input_poly(o);
  r.doc["command"] = "matrices";
  r.doc["ring"] = f.ring()->spec();
  r.doc["f"] = f.str();
  r.text << "f = " << f.str() << " over " << f.ring()->spec() << "\n";
  matrices_section(f, o, r, parse_checks(o.checks), true);
  return r;
}

Result run_noncomm(Options& o) {
  Result r;
  Poly f = input_poly(o);
  r.doc["command"] = "noncomm";
  r.doc["ring"] = f.ring()->spec();
  r.doc["f"] = f.str();
  CentralQuotient q = central_quotient(f.ring(), f);
  Poly g = q.project(f);
  r.doc["L_f_size"] = q.ideal.size();
  r.doc["R_order"] = q.source->table_data().order;
  r.doc["T_f_order"] = q.quotient->table_data().order;
  r.doc["T_f_commutative"] = q.quotient->is_commutative();
  r.doc["zero_ring"] = q.zero_ring;
  r.text << "f = " << f.str() << " over " << f.ring()->spec() << "\n";
  r.text << "|R| = " << q.source->table_data().order << ", |L_f| = " << q.ideal.size()
         << ", |T_f| = " << q.quotient->table_data().order << "\n";
  if (q.zero_ring) r.text << "T_f is the zero ring, so R_f = 0\n";
  r.text << "T_f commutative: " << yes_no(q.quotient->is_commutative()) << "\n";
  r.text << "projected f = " << (g.is_zero() ? "0" : g.str()) << "\n";
  auto s = SplitRing::create(g, o.cap());
  split_section(s, o, r);
  matrices_section(g, o, r, parse_checks(o.checks), false);
  return r;
}

Result run_automorphisms(Options& o) {
  Result r;
  Poly f = input_poly(o);
  r.doc["command"] = "automorphisms";
  r.doc["ring"] = f.ring()->spec();
  r.doc["f"] = f.str();
  r.text << "f = " << f.str() << " over " << f.ring()->spec() << "\n";
  automorphisms_section(SplitRing::create(f, o.cap()), o, r);
  return r;
}

Result run_verify(Options& o) {
  Result r;
  Poly f = input_poly(o);
  r.doc["command"] = "verify";
  r.doc["ring"] = f.ring()->spec();
  r.doc["f"] = f.str();
  auto s = SplitRing::create(f, o.cap());
  relations_section(f, r);
  split_section(s, o, r);
  matrices_section(f, o, r, parse_checks(o.checks), false);
  automorphisms_section(s, o, r);
  return r;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidRing:
    case ErrorKind::LengthMismatch: return 2;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal splitting rings: relations, matrix realizations and automorphisms"};
  app.require_subcommand(1);
  Options o;
  struct Verb {
    const char* name;
    const char* help;
    Result (*run)(Options&);
  };
  const Verb verbs[] = {
      {"relations", "print the generators f_1..f_n from both constructions", run_relations},
      {"matrices", "build and verify the matrices A_1..A_n", run_matrices},
      {"noncomm", "reduce a finite ring by the commutator ideal, then build R_f", run_noncomm},
      {"automorphisms", "check the permutation and scaling automorphisms", run_automorphisms},
      {"verify", "run every construction and check", run_verify},
  };
  const Verb* chosen = nullptr;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--ring", o.job.ring, "ring spec: Z, Q, Zmod:<m>, Mat:<k>:<spec>, PolyCoef:<t>:<spec>, UTri:<k>:<spec>")
        ->capture_default_str();
    sub->add_option("--a", o.a, "a_1,...,a_n with f = Z^n - a_1 Z^{n-1} + ... + (-1)^n a_n");
    sub->add_option("--b", o.b, "b_0,...,b_{n-1} with f = Z^n + b_{n-1} Z^{n-1} + ... + b_0 (default convention)");
    sub->add_option("--f", o.f, "full coefficient list c_0,...,c_n, constant term first");
    sub->add_option("--n", o.job.n, "declared degree");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
    sub->add_option("--cap-override", o.cap_override, "maximum degree (default 6 or $SPLITRING_CAP)");
    sub->add_option("--out", o.out, "write output to this file");
    if (std::string(v.name) != "relations" && std::string(v.name) != "automorphisms") {
      sub->add_option("--checks", o.checks, "comma-separated checks to run, or 'all'")->capture_default_str();
      sub->add_option("--matrices", o.matrices_file, "verify matrices read from a JSON export instead of building them");
    }
    if (std::string(v.name) == "verify" || std::string(v.name) == "automorphisms")
      sub->add_flag("--skip-perms", o.skip_perms, "skip the n! permutation images");
    sub->callback([&chosen, &v] { chosen = &v; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Result r = chosen->run(o);
    r.doc["passed"] = r.ok;
    r.text << "overall: " << pass_fail(r.ok) << "\n";
    std::string payload = o.format == "json" ? r.doc.dump(2) + "\n" : r.text.str();
    if (o.out.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(o.out);
      if (!out) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return 2;
      }
      out << payload;
    }
    return r.ok ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}
