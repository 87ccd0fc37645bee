#include "splitring/realization.hpp"

#include <algorithm>
#include <map>

#include "splitring/linalg.hpp"

namespace splitring {

namespace {

void require_monic(const Poly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.str() + " is not monic");
  if (f.degree() < 1) throw Error(ErrorKind::PreconditionViolated, "degree must be at least 1");
}

}  // namespace

SqMatrix companion(const Poly& f) {
  require_monic(f);
  const int n = f.degree();
  SqMatrix c(f.ring(), n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = f.ring()->one();
  for (int i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

Poly derived_poly(const Poly& g, int j) {
  if (j < 0) throw Error(ErrorKind::IndexOutOfRange, "derived polynomial index " + std::to_string(j));
  if (j >= g.degree()) return Poly::zero(g.ring());
  return Poly(g.ring(), ElemVec(g.coeffs().begin() + j + 1, g.coeffs().end()));
}

SqMatrix eval_at_companion(const Poly& g, const Poly& f) {
  require_monic(f);
  const int n = f.degree();
  SqMatrix m(f.ring(), n);
  Poly col = g.embedded(f.ring()).mod(f);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= col.degree(); ++i) m(i, k) = col.coeff(i);
    if (k + 1 < n) col = col.shifted(1).mod(f);
  }
  return m;
}

SqMatrix horner_at_companion(const Poly& g, const Poly& f) {
  const SqMatrix c = companion(f);
  const int n = f.degree();
  SqMatrix acc(f.ring(), n);
  for (int i = g.degree(); i >= 0; --i) acc = acc * c + SqMatrix::scalar(f.ring()->embed(g.coeff(i)), n);
  return acc;
}

SqMatrix derived_at_companion_pattern(const Poly& f, int j) {
  require_monic(f);
  if (j < 0) throw Error(ErrorKind::IndexOutOfRange, "derived polynomial index " + std::to_string(j));
  const int n = f.degree();
  SqMatrix m(f.ring(), n);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < n; ++c) {
      const int t = k - c + j + 1;
      if (c <= j && t >= j + 1 && t <= n) m(k, c) = f.coeff(t);
      if (c > j && t >= 0 && t <= j) m(k, c) = -f.coeff(t);
    }
  return m;
}

namespace {

std::vector<SqMatrix> realize(const Poly& f, int depth) {
  const int n = f.degree();
  const RingPtr& r = f.ring();
  if (n == 1) return {SqMatrix::scalar(-f.coeff(0), 1)};

  RingPtr s = Ring::quotient(r, f.coeffs(), "r" + std::to_string(depth));
  const Elem rho = s->root();
  ElemVec g(static_cast<std::size_t>(n), s->zero());
  for (int j = 0; j + 1 < n; ++j) g[static_cast<std::size_t>(j)] = derived_poly(f, j).eval(rho);
  g[static_cast<std::size_t>(n - 1)] = s->one();
  std::vector<SqMatrix> bs = realize(Poly(s, std::move(g)), depth + 1);

  std::vector<SqMatrix> out;
  const SqMatrix cf = companion(f);
  std::vector<SqMatrix> blocks(static_cast<std::size_t>(bs.front().size()), cf);
  out.push_back(SqMatrix::block_diagonal(blocks));
  std::map<std::string, SqMatrix> cache;
  auto block = [&](const Elem& p) -> SqMatrix {
    std::string key = p.str();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, eval_at_companion(Poly(r, p.entries()), f)).first;
    return it->second;
  };
  for (const auto& b : bs) out.push_back(substitute_blocks(b, r, n, block));
  return out;
}

}  // namespace

std::vector<SqMatrix> build_realization(const Poly& f, int cap) {
  require_monic(f);
  if (f.degree() > cap)
    throw Error(ErrorKind::CapExceeded, "degree " + std::to_string(f.degree()) + " exceeds the cap " +
                                            std::to_string(cap) + " (raise it with --cap-override or SPLITRING_CAP)");
  if (!f.has_central_coeffs())
    throw Error(ErrorKind::NonCentralCoefficients,
                "coefficients of " + f.str() + " are not central; reduce by the commutator ideal first");
  return realize(f, 1);
}

const char* check_name(Check c) {
  switch (c) {
    case Check::Commutation: return "commutation";
    case Check::Centrality: return "centrality";
    case Check::SigmaIdentities: return "sigma_identities";
    case Check::Factorization: return "factorization";
    case Check::IndependenceRank: return "independence_rank";
    case Check::EntryPattern: return "entry_pattern";
    case Check::RegularRepAgreement: return "regular_rep_agreement";
  }
  return "?";
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> v{Check::Commutation,      Check::Centrality,   Check::SigmaIdentities,
                                    Check::Factorization,    Check::IndependenceRank, Check::EntryPattern,
                                    Check::RegularRepAgreement};
  return v;
}

std::optional<bool> RealizationReport::get(Check c) const {
  for (const auto& [k, v] : checks)
    if (k == c) return v;
  return std::nullopt;
}

bool RealizationReport::passed() const {
  for (const auto& [k, v] : checks)
    if (v && !*v) return false;
  return true;
}

nlohmann::json RealizationReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& m : matrices) ms.push_back(m.to_json());
  j["matrices"] = ms;
  nlohmann::json cs = nlohmann::json::object();
  for (const auto& [k, v] : checks) cs[check_name(k)] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  j["checks"] = cs;
  j["rank"] = rank ? nlohmann::json(*rank) : nlohmann::json(nullptr);
  j["notes"] = notes;
  j["passed"] = passed();
  return j;
}

std::vector<SqMatrix> elementary_symmetric_matrices(const std::vector<SqMatrix>& a) {
  if (a.empty()) return {};
  const RingPtr& r = a.front().ring();
  const int d = a.front().size();
  // e[k] after processing A_1..A_m is sigma_k(A_1..A_m).
  std::vector<SqMatrix> e(a.size() + 1, SqMatrix(r, d));
  e[0] = SqMatrix::identity(r, d);
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t k = m + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * a[m];
  return std::vector<SqMatrix>(e.begin() + 1, e.end());
}

std::vector<SqMatrix> expand_matrix_factors(const std::vector<SqMatrix>& a) {
  if (a.empty()) return {};
  const RingPtr& r = a.front().ring();
  const int d = a.front().size();
  std::vector<SqMatrix> p{SqMatrix::identity(r, d)};
  for (const auto& t : a) {
    std::vector<SqMatrix> q(p.size() + 1, SqMatrix(r, d));
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + 1] = q[k + 1] + p[k];
      q[k] = q[k] - p[k] * t;
    }
    p = std::move(q);
  }
  return p;
}

std::vector<SqMatrix> basis_monomials(const std::vector<SqMatrix>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return {};
  std::vector<SqMatrix> cur{SqMatrix::identity(a.front().ring(), a.front().size())};
  for (int i = n; i >= 1; --i) {
    std::vector<SqMatrix> next;
    for (const auto& m : cur) {
      SqMatrix p = m;
      for (int e = 0; e <= n - i; ++e) {
        next.push_back(p);
        if (e < n - i) p = a[static_cast<std::size_t>(i - 1)] * p;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

unsigned parse_checks(const std::string& text) {
  unsigned mask = 0;
  for (const auto& name : split_top_level(text)) {
    if (name == "all") {
      mask |= kAllChecks;
      continue;
    }
    bool found = false;
    for (Check c : all_checks())
      if (name == check_name(c)) {
        mask |= static_cast<unsigned>(c);
        found = true;
      }
    if (!found) throw Error(ErrorKind::Parse, "unknown check '" + name + "'");
  }
  return mask;
}

RealizationReport verify_realization(const Poly& f, const std::vector<SqMatrix>& a, unsigned checks,
                                     SplitRingPtr split, std::uint64_t seed) {
  RealizationReport rep;
  rep.n = f.degree();
  rep.matrices = a;
  const RingPtr& r = f.ring();
  const int n = f.degree();
  const bool shape_ok = static_cast<int>(a.size()) == n && [&] {
    std::size_t d = 1;
    for (int i = 2; i <= n; ++i) d *= static_cast<std::size_t>(i);
    for (const auto& m : a)
      if (static_cast<std::size_t>(m.size()) != d || !m.ring()->same(*r)) return false;
    return true;
  }();
  if (!shape_ok) rep.notes.push_back("expected " + std::to_string(n) + " matrices of size n! over " + r->spec());
  auto want = [&](Check c) { return (checks & static_cast<unsigned>(c)) != 0; };

  for (Check c : all_checks()) {
    if (!want(c)) {
      rep.checks.emplace_back(c, std::nullopt);
      continue;
    }
    bool ok = shape_ok;
    if (ok) switch (c) {
        case Check::Commutation:
          for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
              ok = a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)] ==
                   a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i)];
          break;
        case Check::Centrality:
          // Central entries make A_i commute with every scalar matrix c*I.
          for (const auto& m : a)
            for (const auto& x : m.entries())
              if (ok && !x.is_zero() && !r->is_central(x)) ok = false;
          break;
        case Check::SigmaIdentities: {
          auto e = elementary_symmetric_matrices(a);
          ElemVec coeffs = signed_coefficients(f);
          for (int i = 0; i < n && ok; ++i)
            ok = e[static_cast<std::size_t>(i)] == SqMatrix::scalar(coeffs[static_cast<std::size_t>(i)], a[0].size());
          break;
        }
        case Check::Factorization: {
          auto p = expand_matrix_factors(a);
          for (int k = 0; k <= n && ok; ++k)
            ok = p[static_cast<std::size_t>(k)] == SqMatrix::scalar(f.coeff(k), a[0].size());
          break;
        }
        case Check::IndependenceRank: {
          auto mons = basis_monomials(a);
          const int d = a[0].size();
          // Column alpha of `cert` is A^alpha e_1. If it is invertible, no
          // nontrivial combination of the monomials can vanish.
          SqMatrix cert(r, d);
          for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i) cert(i, k) = mons[static_cast<std::size_t>(k)](i, 0);
          bool certified = false;
          try {
            certified = is_invertible(cert);
          } catch (const Error& e) {
            rep.notes.push_back(std::string("unit-determinant certificate unavailable: ") + e.what());
          }
          if (rank_supported(r)) {
            std::vector<ElemVec> rows;
            for (const auto& m : mons) rows.push_back(m.entries());
            rep.rank = rank(r, rows, seed);
            ok = *rep.rank == mons.size() || certified;
          } else {
            if (certified) rep.rank = mons.size();
            ok = certified;
          }
          if (r->kind() == RingKind::ModularIntegers && prime_factors(r->modulus()).size() > 1)
            rep.notes.push_back("rank over Zmod:" + std::to_string(r->modulus()) + " taken mod each prime divisor");
          break;
        }
        case Check::EntryPattern: {
          ElemVec allowed{r->one(), -r->one()};
          for (int t = 0; t < n; ++t) {
            allowed.push_back(f.coeff(t));
            allowed.push_back(-f.coeff(t));
          }
          for (const auto& m : a)
            for (const auto& x : m.entries()) {
              if (!ok || x.is_zero()) continue;
              ok = std::any_of(allowed.begin(), allowed.end(), [&](const Elem& y) { return x == y; });
            }
          break;
        }
        case Check::RegularRepAgreement: {
          if (!split) split = SplitRing::create(f, n);
          for (int i = 1; i <= n && ok; ++i)
            ok = split->regular_representation(split->root(i)) == a[static_cast<std::size_t>(i - 1)];
          break;
        }
      }
    rep.checks.emplace_back(c, ok);
  }
  return rep;
}

}  // namespace splitring
