#include "splitring/matrix.hpp"

#include <algorithm>

namespace splitring {

SqMatrix::SqMatrix(RingPtr ring, int size)
    : ring_(std::move(ring)), n_(size), a_(static_cast<std::size_t>(size * size), ring_->zero()) {}

SqMatrix::SqMatrix(RingPtr ring, int size, ElemVec entries) : ring_(std::move(ring)), n_(size), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n_ * n_))
    throw Error(ErrorKind::LengthMismatch, "matrix of size " + std::to_string(n_) + " needs " +
                                               std::to_string(n_ * n_) + " entries");
  for (const auto& x : a_) ring_->require(x);
}

SqMatrix SqMatrix::identity(const RingPtr& ring, int size) { return scalar(ring->one(), size); }

SqMatrix SqMatrix::scalar(const Elem& c, int size) {
  SqMatrix m(c.ring(), size);
  for (int i = 0; i < size; ++i) m(i, i) = c;
  return m;
}

SqMatrix SqMatrix::from_rows(const RingPtr& ring, const std::vector<ElemVec>& rows) {
  const int n = static_cast<int>(rows.size());
  ElemVec e;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::LengthMismatch, "matrix rows must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  return SqMatrix(ring, n, std::move(e));
}

SqMatrix SqMatrix::block_diagonal(std::span<const SqMatrix> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::LengthMismatch, "no blocks");
  int total = 0;
  for (const auto& b : blocks) total += b.size();
  SqMatrix out(blocks.front().ring(), total);
  int off = 0;
  for (const auto& b : blocks) {
    if (!b.ring()->same(*out.ring())) throw Error(ErrorKind::RingMismatch, "blocks over different rings");
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j) out(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return out;
}

ElemVec SqMatrix::column(int j) const {
  ElemVec c;
  for (int i = 0; i < n_; ++i) c.push_back((*this)(i, j));
  return c;
}

ElemVec SqMatrix::row(int i) const {
  return ElemVec(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
}

bool SqMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Elem& x) { return x.is_zero(); });
}

bool SqMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

void SqMatrix::check_same(const SqMatrix& o) const {
  if (!ring_->same(*o.ring_))
    throw Error(ErrorKind::RingMismatch, "matrices over " + ring_->spec() + " and " + o.ring_->spec());
  if (o.n_ != n_ && o.n_ != 0 && n_ != 0)
    throw Error(ErrorKind::LengthMismatch, "matrix sizes " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

SqMatrix operator+(const SqMatrix& a, const SqMatrix& b) {
  a.check_same(b);
  SqMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.ring_->add(a.a_[i], b.a_[i]);
  return c;
}

SqMatrix operator-(const SqMatrix& a, const SqMatrix& b) {
  a.check_same(b);
  SqMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.ring_->sub(a.a_[i], b.a_[i]);
  return c;
}

SqMatrix SqMatrix::operator-() const {
  SqMatrix c = *this;
  for (auto& x : c.a_) x = ring_->neg(x);
  return c;
}

namespace {

SqMatrix mul_modular(const SqMatrix& a, const SqMatrix& b) {
  const int n = a.size();
  const auto m = static_cast<unsigned __int128>(a.ring()->modulus());
  std::vector<std::uint64_t> x(a.entries().size()), y(b.entries().size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = static_cast<std::uint64_t>(a.entries()[i].small());
    y[i] = static_cast<std::uint64_t>(b.entries()[i].small());
  }
  ElemVec out;
  out.reserve(x.size());
  std::vector<unsigned __int128> acc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < n; ++k) {
      const std::uint64_t xik = x[static_cast<std::size_t>(i * n + k)];
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& s = acc[static_cast<std::size_t>(j)];
        s = (s + static_cast<unsigned __int128>(xik) * y[static_cast<std::size_t>(k * n + j)]) % m;
      }
    }
    for (int j = 0; j < n; ++j)
      out.emplace_back(a.ring(), static_cast<std::int64_t>(acc[static_cast<std::size_t>(j)]));
  }
  return SqMatrix(a.ring(), n, std::move(out));
}

}  // namespace

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  a.check_same(b);
  if (a.ring_->kind() == RingKind::ModularIntegers) return mul_modular(a, b);
  const int n = a.n_;
  const Ring& r = *a.ring_;
  SqMatrix c(a.ring_, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Elem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Elem& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) = r.add(c(i, j), r.mul(aik, bkj));
      }
    }
  return c;
}

SqMatrix operator*(const Elem& c, const SqMatrix& m) {
  m.ring_->require(c);
  SqMatrix out = m;
  for (auto& x : out.a_) x = m.ring_->mul(c, x);
  return out;
}

bool operator==(const SqMatrix& a, const SqMatrix& b) {
  if (a.n_ != b.n_ || !a.ring_->same(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!a.ring_->equal(a.a_[i], b.a_[i])) return false;
  return true;
}

SqMatrix SqMatrix::pow(unsigned e) const {
  SqMatrix result = identity(ring_, n_), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

SqMatrix SqMatrix::embedded(const RingPtr& target) const {
  ElemVec e;
  e.reserve(a_.size());
  for (const auto& x : a_) e.push_back(target->embed(x));
  return SqMatrix(target, n_, std::move(e));
}

std::string SqMatrix::pretty() const {
  std::vector<std::string> cells;
  cells.reserve(a_.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      cells.push_back((*this)(i, j).str());
      width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], cells.back().size());
    }
  std::string out;
  for (int i = 0; i < n_; ++i) {
    out += "[ ";
    for (int j = 0; j < n_; ++j) {
      const std::string& s = cells[static_cast<std::size_t>(i * n_ + j)];
      out.append(width[static_cast<std::size_t>(j)] - s.size(), ' ');
      out += s;
      out += j + 1 < n_ ? "  " : " ]\n";
    }
  }
  return out;
}

nlohmann::json SqMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (int j = 0; j < n_; ++j) r.push_back((*this)(i, j).str());
    rows.push_back(std::move(r));
  }
  return {{"size", n_}, {"ring", ring_->spec()}, {"rows", std::move(rows)}};
}

SqMatrix matrix_from_json(const nlohmann::json& j, RingPtr ring) {
  try {
    if (!ring) ring = parse_ring(j.at("ring").get<std::string>());
    const int n = j.at("size").get<int>();
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw Error(ErrorKind::LengthMismatch, "row count differs from size");
    std::vector<ElemVec> parsed;
    for (const auto& r : rows) {
      ElemVec row;
      for (const auto& cell : r) row.push_back(parse_elem(ring, cell.get<std::string>()));
      parsed.push_back(std::move(row));
    }
    return SqMatrix::from_rows(ring, parsed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace splitring
