#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "chainring/determinant.hpp"
#include "chainring/error.hpp"
#include "chainring/number_theory.hpp"

namespace chainring {

enum class Shape { Diagonal, Circulant };

std::string_view to_string(Shape shape);
/// "diagonal" or "circulant"; throws InvalidArgument.
Shape parse_shape(std::string_view text);

/// Number of n-tuples over a ring of the given order, or TooLarge if it exceeds cap.
inline std::uint64_t candidate_count(std::uint64_t order, std::size_t n, std::uint64_t cap) {
  auto total = pow_within(order, n, cap);
  if (!total) {
    throw Error(ErrorCode::TooLarge, std::to_string(order) + "^" + std::to_string(n) +
                                         " candidates exceed the enumeration cap of " + std::to_string(cap));
  }
  return *total;
}

/// det(diag(row)) for any CodeRing.
template <CodeRing Ring>
class DiagonalDet {
 public:
  using Code = typename Ring::Code;

  explicit DiagonalDet(const Ring& ring) : ring_(&ring) {}

  Code operator()(std::span<const Code> row) const {
    Code acc = ring_->one_code();
    for (Code c : row) acc = ring_->mul(acc, c);
    return acc;
  }

 private:
  const Ring* ring_;
};

/// det(cir(row)) by the division-free determinant, reusing its scratch space across calls.
template <CodeRing Ring>
class CirculantDet {
 public:
  using Code = typename Ring::Code;

  CirculantDet(const Ring& ring, std::size_t n) : ring_(&ring), n_(n), matrix_(n * n) {}

  Code operator()(std::span<const Code> row) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) matrix_[i * n_ + j] = row[(j + n_ - i) % n_];
    }
    const std::span<const Code> m(matrix_);
    if (n_ <= kSubsetDeterminantMaxN) return subset_determinant(*ring_, m, n_, memo_);
    return berkowitz_determinant(*ring_, m, n_);
  }

 private:
  const Ring* ring_;
  std::size_t n_;
  std::vector<Code> matrix_;
  std::vector<Code> memo_;
};

/// Tallies det over every first row / diagonal in lexicographic order (coordinate 0 most
/// significant). The space is split by the first coordinate: worker w takes the values
/// congruent to w modulo the worker count, keeps a private tally, and the tallies are summed
/// at the end, so the result does not depend on scheduling.
///
/// `make_det` is called once per worker and must return a callable
/// `Code(std::span<const Code> row)`; it may own scratch space.
template <class Code, class MakeDet>
std::vector<std::uint64_t> parallel_tally(std::uint64_t order, std::size_t n, unsigned threads, MakeDet make_det) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads > order) threads = static_cast<unsigned>(order);
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(order, 0));

  auto work = [&](unsigned worker) {
    auto det = make_det();
    auto& tally = partial[worker];
    std::vector<Code> row(n, 0);
    for (std::uint64_t first = worker; first < order; first += threads) {
      row.assign(n, 0);
      row[0] = static_cast<Code>(first);
      while (true) {
        ++tally[det(std::span<const Code>(row))];
        std::size_t k = n - 1;
        while (k >= 1) {
          if (++row[k] < order) break;
          row[k] = 0;
          --k;
        }
        if (k == 0) break;
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (unsigned w = 1; w < threads; ++w) {
    for (std::uint64_t i = 0; i < order; ++i) partial[0][i] += partial[w][i];
  }
  return std::move(partial[0]);
}

}  // namespace chainring
