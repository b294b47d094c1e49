#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ckms {

inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Square matrix over {0,1}, dimension >= 2. Immutable value; indices are 0-based.
class ZeroOneMatrix {
 public:
  /// Row-major entries; throws DomainError on n < 2, size mismatch or entries outside {0,1}.
  ZeroOneMatrix(std::size_t n, std::vector<std::uint8_t> entries);

  static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// The all-ones matrix F_n.
  static ZeroOneMatrix full(std::size_t n);

  std::size_t dim() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entries_;
};

bool is_nondegenerate(const ZeroOneMatrix& a);

/// Strong connectivity of the adjacency digraph.
bool is_irreducible(const ZeroOneMatrix& a);

bool is_permutation(const ZeroOneMatrix& a);

/// Nondegenerate, irreducible and not a permutation matrix.
bool in_class_cdm(const ZeroOneMatrix& a);

/// (A⊠B)[m*i + j, m*i' + j'] = A[i,i'] * B[j,j'] (0-based). Throws ResourceLimit above `cap`.
ZeroOneMatrix kronecker(const ZeroOneMatrix& a, const ZeroOneMatrix& b, std::size_t cap = kDefaultDimensionCap);

std::string to_string(const ZeroOneMatrix& a);

}  // namespace ckms
