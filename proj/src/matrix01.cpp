#include "ckms/matrix01.hpp"

#include <sstream>

#include "ckms/errors.hpp"

namespace ckms {

ZeroOneMatrix::ZeroOneMatrix(std::size_t n, std::vector<std::uint8_t> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 2) throw DomainError("0-1 matrix dimension must be at least 2");
  if (entries_.size() != n_ * n_) throw DomainError("0-1 matrix: expected " + std::to_string(n_ * n_) + " entries");
  for (auto e : entries_)
    if (e > 1) throw DomainError("0-1 matrix: entries must be 0 or 1");
}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint8_t> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DomainError("0-1 matrix: rows must form a square matrix");
    for (int v : r) {
      if (v != 0 && v != 1) throw DomainError("0-1 matrix: entries must be 0 or 1");
      e.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return ZeroOneMatrix(n, std::move(e));
}

ZeroOneMatrix ZeroOneMatrix::full(std::size_t n) { return ZeroOneMatrix(n, std::vector<std::uint8_t>(n * n, 1)); }

std::vector<std::vector<int>> ZeroOneMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

bool is_nondegenerate(const ZeroOneMatrix& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    bool row = false, col = false;
    for (std::size_t j = 0; j < n; ++j) {
      row = row || a(i, j);
      col = col || a(j, i);
    }
    if (!row || !col) return false;
  }
  return true;
}

namespace {

bool reaches_all(const ZeroOneMatrix& a, bool transpose) {
  const std::size_t n = a.dim();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[v] || !(transpose ? a(v, u) : a(u, v))) continue;
      seen[v] = true;
      ++count;
      stack.push_back(v);
    }
  }
  return count == n;
}

}  // namespace

bool is_irreducible(const ZeroOneMatrix& a) {
  // Strongly connected iff vertex 0 reaches everything in the graph and in its reverse.
  return reaches_all(a, false) && reaches_all(a, true);
}

bool is_permutation(const ZeroOneMatrix& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += a(i, j);
      col += a(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool in_class_cdm(const ZeroOneMatrix& a) { return is_nondegenerate(a) && is_irreducible(a) && !is_permutation(a); }

ZeroOneMatrix kronecker(const ZeroOneMatrix& a, const ZeroOneMatrix& b, std::size_t cap) {
  const std::size_t n = a.dim(), m = b.dim();
  if (n * m > cap)
    throw ResourceLimit("Kronecker product dimension " + std::to_string(n * m) + " exceeds cap " + std::to_string(cap));
  const std::size_t nm = n * m;
  std::vector<std::uint8_t> e(nm * nm);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2)
          e[(m * i + j) * nm + (m * i2 + j2)] = static_cast<std::uint8_t>(a(i, i2) & b(j, j2));
  return ZeroOneMatrix(nm, std::move(e));
}

std::string to_string(const ZeroOneMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.dim(); ++j) os << (j ? "," : "") << a(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace ckms
