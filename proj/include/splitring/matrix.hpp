#pragma once

// Dense square matrices over a Ring, row-major.

#include <span>
#include <string>

#include <json.hpp>

#include "splitring/poly.hpp"

namespace splitring {

class SqMatrix {
 public:
  SqMatrix() = default;
  SqMatrix(RingPtr ring, int size);  // zero matrix
  SqMatrix(RingPtr ring, int size, ElemVec entries);

  static SqMatrix identity(const RingPtr& ring, int size);
  static SqMatrix scalar(const Elem& c, int size);
  static SqMatrix from_rows(const RingPtr& ring, const std::vector<ElemVec>& rows);
  /// Block-diagonal sum; all blocks share one ring.
  static SqMatrix block_diagonal(std::span<const SqMatrix> blocks);

  const RingPtr& ring() const noexcept { return ring_; }
  int size() const noexcept { return n_; }
  const ElemVec& entries() const noexcept { return a_; }
  const Elem& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  Elem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  ElemVec column(int j) const;
  ElemVec row(int i) const;

  bool is_zero() const;
  bool is_identity() const;

  friend SqMatrix operator+(const SqMatrix& a, const SqMatrix& b);
  friend SqMatrix operator-(const SqMatrix& a, const SqMatrix& b);
  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);
  /// Entrywise c*x, scalar on the left.
  friend SqMatrix operator*(const Elem& c, const SqMatrix& m);
  SqMatrix operator-() const;
  friend bool operator==(const SqMatrix& a, const SqMatrix& b);
  friend bool operator!=(const SqMatrix& a, const SqMatrix& b) { return !(a == b); }

  SqMatrix pow(unsigned e) const;
  /// Entries mapped into `target` through Ring::embed.
  SqMatrix embedded(const RingPtr& target) const;

  /// Columns aligned, one row per line.
  std::string pretty() const;
  /// {"size": d, "ring": spec, "rows": [[string...]...]}
  nlohmann::json to_json() const;

 private:
  void check_same(const SqMatrix& o) const;

  RingPtr ring_;
  int n_ = 0;
  ElemVec a_;
};

/// Reads the to_json layout back; the ring is taken from `ring` when given,
/// else parsed from the "ring" field.
SqMatrix matrix_from_json(const nlohmann::json& j, RingPtr ring = nullptr);

/// Matrix of left multiplication entrywise-substituted: each entry p of `m`
/// (an element of a ring S) is replaced by the block `block(p)` of size k.
template <class F>
SqMatrix substitute_blocks(const SqMatrix& m, const RingPtr& target, int k, F&& block) {
  const int n = m.size();
  SqMatrix out(target, n * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      SqMatrix b = block(m(i, j));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) out(i * k + r, j * k + c) = b(r, c);
    }
  return out;
}

}  // namespace splitring
