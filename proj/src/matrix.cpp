#include "chainring/matrix.hpp"

#include "chainring/determinant.hpp"
#include "chainring/error.hpp"

namespace chainring {

namespace {

const RingPtr& common_ring(const std::vector<RingElement>& xs, const char* what) {
  if (xs.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs at least one entry");
  for (const auto& x : xs) require_same_ring(x, xs.front());
  return xs.front().ring();
}

}  // namespace

RingMatrix::RingMatrix(RingPtr ring, std::size_t n) : ring_(std::move(ring)), n_(n), entries_(n * n, 0) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
}

RingMatrix RingMatrix::identity(RingPtr ring, std::size_t n) {
  RingMatrix m(std::move(ring), n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

RingMatrix RingMatrix::from_rows(const std::vector<std::vector<RingElement>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  const std::size_t n = rows.size();
  RingMatrix m(rows.front().front().ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::SizeMismatch, "matrix rows must have length n");
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void RingMatrix::set(std::size_t i, std::size_t j, const RingElement& value) {
  require_same_ring(*value.ring(), *ring_);
  entries_[i * n_ + j] = value.code();
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.n_ != b.n_) throw Error(ErrorCode::SizeMismatch, "matrix dimensions differ");
  const auto& ring = *a.ring_;
  const std::size_t n = a.n_;
  RingMatrix out(a.ring_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RingMatrix::Code acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc = ring.add(acc, ring.mul(a.entries_[i * n + k], b.entries_[k * n + j]));
      out.entries_[i * n + j] = acc;
    }
  }
  return out;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.n_ == b.n_ && a.ring_->same_as(*b.ring_) && a.entries_ == b.entries_;
}

RingMatrix DiagonalSpec::expand() const {
  RingMatrix m(common_ring(diag, "diag"), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

RingMatrix CirculantSpec::expand() const {
  const std::size_t n = row.size();
  RingMatrix m(common_ring(row, "cir"), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set_code(i, j, row[(j + n - i) % n].code());
  }
  return m;
}

RingElement det(const RingMatrix& m) {
  return {m.ring(), determinant(*m.ring(), m.codes(), m.size())};
}

RingElement diag_det(const DiagonalSpec& spec) {
  RingElement acc = common_ring(spec.diag, "diag")->one();
  for (const auto& a : spec.diag) acc = acc * a;
  return acc;
}

void require_primitive_root(const RingElement& omega, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (!is_unit(omega) || omega.pow(n) != omega.ring()->one()) {
    throw Error(ErrorCode::BadRoot, omega.to_string() + " is not an n-th root of unity for n = " + std::to_string(n));
  }
  RingElement power = omega;
  for (std::size_t k = 1; k < n; ++k) {
    if (power == omega.ring()->one()) {
      throw Error(ErrorCode::BadRoot, omega.to_string() + " has order " + std::to_string(k) + " < " + std::to_string(n));
    }
    power = power * omega;
  }
}

std::vector<RingElement> circulant_eigenvalues(const CirculantSpec& spec, const RingElement& omega) {
  const auto& ring = common_ring(spec.row, "cir");
  require_same_ring(*ring, *omega.ring());
  const std::size_t n = spec.row.size();
  require_primitive_root(omega, n);
  std::vector<RingElement> out;
  out.reserve(n);
  RingElement step = ring->one();  // omega^j
  for (std::size_t j = 0; j < n; ++j) {
    RingElement w = ring->zero();
    RingElement power = ring->one();  // omega^{(i-1) j}
    for (std::size_t i = 0; i < n; ++i) {
      w = w + spec.row[i] * power;
      power = power * step;
    }
    out.push_back(w);
    step = step * omega;
  }
  return out;
}

RingElement circulant_det_via_eigenvalues(const CirculantSpec& spec, const RingElement& omega) {
  RingElement acc = omega.ring()->one();
  for (const auto& w : circulant_eigenvalues(spec, omega)) acc = acc * w;
  return acc;
}

CirculantSpec circulant_mul_as_poly(const CirculantSpec& x, const CirculantSpec& y) {
  const auto& ring = common_ring(x.row, "cir");
  require_same_ring(*ring, *common_ring(y.row, "cir"));
  const std::size_t n = x.row.size();
  if (y.row.size() != n) throw Error(ErrorCode::SizeMismatch, "circulants of different sizes");
  std::vector<RingElement> out(n, ring->zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] = out[(i + j) % n] + x.row[i] * y.row[j];
  }
  return {std::move(out)};
}

RingMatrix adjugate(const RingMatrix& m) {
  const std::size_t n = m.size();
  const auto& ring = *m.ring();
  RingMatrix out(m.ring(), n);
  if (n == 1) {
    out.set_code(0, 0, 1);
    return out;
  }
  std::vector<RingMatrix::Code> minor((n - 1) * (n - 1));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != col) minor[k++] = m.code_at(i, j);
        }
      }
      RingMatrix::Code cofactor = determinant(ring, std::span<const RingMatrix::Code>(minor), n - 1);
      if ((row + col) & 1) cofactor = ring.neg(cofactor);
      out.set_code(col, row, cofactor);
    }
  }
  return out;
}

CirculantDiagonalizer::CirculantDiagonalizer(const RingElement& omega, std::size_t n)
    : omega_(omega), n_(n), p_(omega.ring(), n), p_inv_(omega.ring(), n) {
  const auto& ring = omega.ring();
  if (n == 0 || (ring->q() - 1) % n != 0) {
    throw Error(ErrorCode::NoRoot, std::to_string(n) + " does not divide q-1 in " + ring->name());
  }
  require_primitive_root(omega, n);
  const RingElement omega_inv = inverse(omega);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) p_.set(j, i, omega_inv.pow(i * j));
  }
  const RingElement det_p = det(p_);
  if (!is_unit(det_p)) {
    throw Error(ErrorCode::NotInvertible, "Vandermonde determinant " + det_p.to_string() + " is not a unit");
  }
  const RingMatrix adj = adjugate(p_);
  const RingElement scale = inverse(det_p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p_inv_.set(i, j, adj.at(i, j) * scale);
  }
  if (!(p_ * p_inv_ == RingMatrix::identity(ring, n))) {
    throw Error(ErrorCode::InternalConsistency, "adjugate inverse of the Vandermonde matrix is wrong");
  }
}

Diagonalization CirculantDiagonalizer::diagonalize(const CirculantSpec& spec) const {
  if (spec.row.size() != n_) throw Error(ErrorCode::SizeMismatch, "circulant size differs from the transform");
  DiagonalSpec d{circulant_eigenvalues(spec, omega_)};
  if (!(p_ * spec.expand() * p_inv_ == d.expand())) {
    throw Error(ErrorCode::InternalConsistency, "P A P^{-1} is not diag(w)");
  }
  return {p_, p_inv_, std::move(d)};
}

Diagonalization diagonalize_circulant(const CirculantSpec& spec, const RingElement& omega) {
  return CirculantDiagonalizer(omega, spec.row.size()).diagonalize(spec);
}

}  // namespace chainring
