#pragma once

// Integral cohomology of the circle bundles over B_c via the Gysin sequence.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "etainv/cohomology_ring.hpp"
#include "etainv/rational.hpp"

namespace etainv {

/// Dense integer matrix. It acts on column vectors, so a rows x cols matrix
/// is a map Z^cols -> Z^rows whose columns are the images of basis vectors.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<BigInt> &entries() const { return entries_; }
  BigInt &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt &at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_, cols_;
  std::vector<BigInt> entries_;
};

/// Smith normal form diagonal d_1 | d_2 | ..., min(rows, cols) nonnegative
/// entries with zeros last.
std::vector<BigInt> snf(const IntMatrix &m);

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with
/// d_1 | d_2 | ... and every d_i > 1.
struct AbelianGroupDesc {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroupDesc free(std::size_t rank) { return {rank, {}}; }
  static AbelianGroupDesc cyclic(const BigInt &order) { return {0, {order}}; }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z_4", "Z^2 + Z_2 + Z_4".
  std::string to_string() const;

  friend bool operator==(const AbelianGroupDesc &, const AbelianGroupDesc &) = default;
};

AbelianGroupDesc cokernel(const IntMatrix &m);
/// Rank of the kernel, which is free.
std::size_t kernel_rank(const IntMatrix &m);

/// Matrix of e u : <v u^{l-1}, u^l> -> <v u^l, u^{l+1}> for e = su + tv,
/// i.e. [[s, t], [0, s]]. Throws RangeError unless 1 <= l <= 2k-2.
IntMatrix gysin_step_matrix(const RingSpec &spec, std::int64_t s, std::int64_t t, int l);

/// Z-basis of H^{2i}(B_c; Z): u^i (i <= 2k-1) and u^{i-1} v (1 <= i <= 2k).
std::vector<CohClass> integral_basis(const RingSpec &spec, std::size_t i);

/// Cup product with \p e from H^{2i}(B_c; Z) to H^{2i+2}(B_c; Z) in the
/// integral bases, computed with the ring multiplication.
IntMatrix cup_product_matrix(const CohClass &e, std::size_t i);

/// H^0..H^{4k+1} of the circle bundle over B_c with Euler class \p e.
std::vector<AbelianGroupDesc> gysin_cohomology(const CohClass &e);

/// H^*(Mbar_{s,t,c}; Z) for the given family member.
std::vector<AbelianGroupDesc> cohomology_Mbar(const RingSpec &spec, std::int64_t s, std::int64_t t);
/// The table depends only on k and s; computed at c = 1, t = 1.
std::vector<AbelianGroupDesc> cohomology_Mbar(int k, std::int64_t s);

/// |H^4(M_{s,t,c}; Z)| from the Gysin sequence of the bundle with Euler class 2(su + tv).
BigInt h4_M_order(std::int64_t s);

} // namespace etainv
