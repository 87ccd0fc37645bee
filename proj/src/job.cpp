#include "splitring/job.hpp"

#include <algorithm>
#include <cctype>

namespace splitring {

namespace {

bool plain_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Poly build_job_poly(const JobSpec& job) {
  RingPtr ring = parse_ring(job.ring);
  std::vector<std::string> tokens = job.coeffs.empty() ? std::vector<std::string>{} : split_top_level(job.coeffs);
  const int n = job.convention == CoeffConvention::Full ? static_cast<int>(tokens.size()) - 1
                                                         : static_cast<int>(tokens.size());
  if (n < 1) throw Error(ErrorKind::LengthMismatch, "need coefficients for a polynomial of degree >= 1");
  if (job.n && *job.n != n)
    throw Error(ErrorKind::LengthMismatch, "declared degree " + std::to_string(*job.n) + " but " +
                                               std::to_string(tokens.size()) + " coefficients given");

  bool generic = false;
  if (ring->kind() == RingKind::PolynomialCoefficients && ring->size() >= n) {
    std::vector<std::string> names;
    for (int i = 0; i < ring->size(); ++i) {
      if (i < n)
        names.push_back(job.convention == CoeffConvention::A ? "a" + std::to_string(i + 1) : "b" + std::to_string(i));
      else
        names.push_back("y" + std::to_string(i + 1));
    }
    ring = Ring::polynomials(ring->size(), ring->base(), names);
    generic = std::all_of(tokens.begin(), tokens.end(), plain_integer);
  }

  ElemVec c;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Elem v = parse_elem(ring, tokens[i]);
    if (generic && static_cast<int>(i) < n) v = v + ring->indeterminate(static_cast<int>(i));
    c.push_back(v);
  }
  switch (job.convention) {
    case CoeffConvention::A: return poly_from_signed(ring, c);
    case CoeffConvention::B: return poly_from_b(ring, c);
    case CoeffConvention::Full: break;
  }
  Poly f(ring, c);
  if (f.degree() != n || !f.is_monic()) throw Error(ErrorKind::NonMonic, f.str() + " is not monic of degree " + std::to_string(n));
  return f;
}

}  // namespace splitring
