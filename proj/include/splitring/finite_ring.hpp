#pragma once

// Commutator ideals of finite rings and the quotient that makes the
// coefficients of f central.

#include <cstdint>
#include <span>
#include <vector>

#include "splitring/poly.hpp"

namespace splitring {

/// Table view of a finite ring: table rings are returned unchanged, other
/// finite kinds are enumerated. InfiniteRing otherwise.
RingPtr as_table(const RingPtr& ring);

/// Maps an element of `table` or of its source ring to the table ring.
Elem to_table(const RingPtr& table, const Elem& x);

/// Two-sided ideal of a finite table ring, stored as a membership mask.
struct Ideal {
  RingPtr ring;
  std::vector<bool> member;

  std::size_t size() const;
  bool contains(const Elem& x) const;
  ElemVec elements() const;
  bool is_whole_ring() const { return size() == member.size(); }
};

/// The two-sided ideal generated by x*g - g*x for all x in the ring and g in
/// `gens`, closed under +, -, and left/right multiplication.
Ideal commutator_ideal(const RingPtr& ring, std::span<const Elem> gens);

/// R / L_f where L_f is the commutator ideal of the coefficients of f.
struct CentralQuotient {
  RingPtr source;    // table view of R
  Ideal ideal;       // L_f
  RingPtr quotient;  // T_f
  std::vector<std::uint32_t> projection;  // source index -> quotient index
  bool zero_ring = false;

  Elem project(const Elem& x) const;
  Poly project(const Poly& f) const;
};

CentralQuotient central_quotient(const RingPtr& ring, const Poly& f);

}  // namespace splitring
