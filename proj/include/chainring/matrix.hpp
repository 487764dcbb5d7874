#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chainring/chain_ring.hpp"

namespace chainring {

/// n x n matrix over a single ChainRing, stored row-major as element codes.
class RingMatrix {
 public:
  using Code = ChainRing::Code;

  RingMatrix(RingPtr ring, std::size_t n);

  static RingMatrix identity(RingPtr ring, std::size_t n);
  /// Throws SizeMismatch for ragged input and RingMismatch for mixed rings.
  static RingMatrix from_rows(const std::vector<std::vector<RingElement>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }

  RingElement at(std::size_t i, std::size_t j) const { return {ring_, entries_[i * n_ + j]}; }
  void set(std::size_t i, std::size_t j, const RingElement& value);
  Code code_at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set_code(std::size_t i, std::size_t j, Code value) { entries_[i * n_ + j] = value; }
  std::span<const Code> codes() const { return entries_; }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

 private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<Code> entries_;
};

/// diag(a_1, ..., a_n).
struct DiagonalSpec {
  std::vector<RingElement> diag;

  RingMatrix expand() const;
};

/// cir(a_1, ..., a_n): row i is the first row cyclically shifted right i times.
struct CirculantSpec {
  std::vector<RingElement> row;

  RingMatrix expand() const;
};

/// Division-free determinant; subset-memoized cofactor expansion up to n = 8, Berkowitz above.
RingElement det(const RingMatrix& m);

RingElement diag_det(const DiagonalSpec& spec);

/// Throws BadRoot unless omega has multiplicative order exactly n.
void require_primitive_root(const RingElement& omega, std::size_t n);

/// w_j = sum_i a_i omega^{(i-1) j} for j = 0, ..., n-1.
std::vector<RingElement> circulant_eigenvalues(const CirculantSpec& spec, const RingElement& omega);
RingElement circulant_det_via_eigenvalues(const CirculantSpec& spec, const RingElement& omega);

/// Product in R[X]/(X^n - 1), read back as a circulant.
CirculantSpec circulant_mul_as_poly(const CirculantSpec& x, const CirculantSpec& y);

/// adj(M) with adj(M) M = M adj(M) = det(M) I.
RingMatrix adjugate(const RingMatrix& m);

struct Diagonalization {
  RingMatrix transform;          // P, entry (j, i) = omega^{-ij}
  RingMatrix transform_inverse;  // P^{-1}
  DiagonalSpec diagonal;         // diag(w_0, ..., w_{n-1}) = P A P^{-1}
};

/// Holds the Vandermonde transform for a fixed (R, n, omega) so that many circulants can be
/// diagonalized without recomputing P^{-1}.
class CirculantDiagonalizer {
 public:
  /// Throws NoRoot unless n | q-1, BadRoot for a bad omega, NotInvertible if det(P) is not a unit.
  CirculantDiagonalizer(const RingElement& omega, std::size_t n);

  const RingMatrix& transform() const { return p_; }
  const RingMatrix& transform_inverse() const { return p_inv_; }

  /// Throws InternalConsistency if P A P^{-1} is not the diagonal of eigenvalues.
  Diagonalization diagonalize(const CirculantSpec& spec) const;

 private:
  RingElement omega_;
  std::size_t n_;
  RingMatrix p_;
  RingMatrix p_inv_;
};

Diagonalization diagonalize_circulant(const CirculantSpec& spec, const RingElement& omega);

}  // namespace chainring
