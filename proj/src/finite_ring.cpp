#include "splitring/finite_ring.hpp"

#include <deque>

namespace splitring {

RingPtr as_table(const RingPtr& ring) {
  if (ring->kind() == RingKind::FiniteTable) return ring;
  if (!ring->is_finite()) throw Error(ErrorKind::InfiniteRing, ring->spec() + " is not finite");
  return Ring::tabulate(ring, ring->elements());
}

Elem to_table(const RingPtr& table, const Elem& x) {
  if (x.ring()->same(*table)) return x;
  const auto& src = table->table_source_elements();
  if (table->table_source() && x.ring()->same(*table->table_source()))
    for (std::size_t i = 0; i < src.size(); ++i)
      if (src[i] == x) return table->table_elem(static_cast<std::uint32_t>(i));
  throw Error(ErrorKind::RingMismatch, x.str() + " does not belong to " + table->spec());
}

std::size_t Ideal::size() const {
  std::size_t n = 0;
  for (bool b : member) n += b ? 1 : 0;
  return n;
}

bool Ideal::contains(const Elem& x) const {
  return member[static_cast<std::size_t>(to_table(ring, x).small())];
}

ElemVec Ideal::elements() const {
  ElemVec out;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(ring->table_elem(static_cast<std::uint32_t>(i)));
  return out;
}

Ideal commutator_ideal(const RingPtr& ring, std::span<const Elem> gens) {
  const RingPtr t = as_table(ring);
  const TableData& d = t->table_data();
  const std::size_t n = d.order;
  auto add = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(d.add[a * n + b]); };
  auto mul = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(d.mul[a * n + b]); };

  Ideal ideal{t, std::vector<bool>(n, false)};
  std::vector<std::size_t> members;
  std::deque<std::size_t> pending;
  auto offer = [&](std::size_t e) {
    if (!ideal.member[e]) {
      ideal.member[e] = true;
      pending.push_back(e);
    }
  };
  offer(d.zero);
  for (const auto& g : gens) {
    const auto gi = static_cast<std::size_t>(to_table(t, g).small());
    for (std::size_t x = 0; x < n; ++x) offer(static_cast<std::size_t>(t->sub(t->table_elem(static_cast<std::uint32_t>(mul(x, gi))),
                                                                        t->table_elem(static_cast<std::uint32_t>(mul(gi, x))))
                                                                     .small()));
  }
  // Each new element is combined with every earlier member, so every pair
  // sum is seen once; finiteness makes additive closure imply negation.
  while (!pending.empty()) {
    std::size_t e = pending.front();
    pending.pop_front();
    for (std::size_t r = 0; r < n; ++r) {
      offer(mul(r, e));
      offer(mul(e, r));
    }
    for (std::size_t m : members) offer(add(e, m));
    offer(add(e, e));
    members.push_back(e);
  }
  return ideal;
}

Elem CentralQuotient::project(const Elem& x) const {
  auto i = static_cast<std::size_t>(to_table(source, x).small());
  return quotient->table_elem(projection[i]);
}

Poly CentralQuotient::project(const Poly& f) const {
  ElemVec c;
  for (const auto& x : f.coeffs()) c.push_back(project(x));
  return Poly(quotient, std::move(c));
}

CentralQuotient central_quotient(const RingPtr& ring, const Poly& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.str() + " is not monic");
  CentralQuotient q;
  q.source = as_table(ring);
  ElemVec gens;
  for (const auto& c : f.coeffs()) gens.push_back(to_table(q.source, c));
  q.ideal = commutator_ideal(q.source, gens);

  const TableData& d = q.source->table_data();
  const std::size_t n = d.order;
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  q.projection.assign(n, kUnassigned);
  std::vector<std::size_t> reps;
  const ElemVec members = q.ideal.elements();
  for (std::size_t x = 0; x < n; ++x) {
    if (q.projection[x] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const auto& l : members) q.projection[d.add[x * n + static_cast<std::size_t>(l.small())]] = id;
  }

  q.zero_ring = reps.size() == 1;
  if (q.zero_ring) {
    q.quotient = Ring::zero_ring();
  } else if (members.size() == 1) {
    q.quotient = q.source;
  } else {
    TableData t;
    t.order = reps.size();
    t.add.resize(t.order * t.order);
    t.mul.resize(t.order * t.order);
    for (std::size_t a = 0; a < t.order; ++a)
      for (std::size_t b = 0; b < t.order; ++b) {
        t.add[a * t.order + b] = q.projection[d.add[reps[a] * n + reps[b]]];
        t.mul[a * t.order + b] = q.projection[d.mul[reps[a] * n + reps[b]]];
      }
    t.zero = q.projection[d.zero];
    t.one = q.projection[d.one];
    for (auto r : reps) t.names.push_back(d.names[r]);
    q.quotient = Ring::table(std::move(t));
  }

  const Poly projected = q.project(f);
  for (const auto& c : projected.coeffs())
    if (!q.quotient->is_central(c))
      throw Error(ErrorKind::NonCentralCoefficients, "projected coefficient " + c.str() + " is not central");
  return q;
}

}  // namespace splitring
