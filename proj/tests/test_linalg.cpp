#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "dofic/linalg.hpp"
#include "dofic/rng.hpp"

using namespace dofic;

namespace {

// Independent rank oracle: plain Gauss-Jordan over exact rationals.
std::size_t rank_oracle(const IMat& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m.at(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

IMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long limit) {
  IMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.channel_entry(limit);
  return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  CHECK(rank(IMat::identity(4)) == 4);
  CHECK(rank(IMat(3, 5)) == 0);

  IMat m(3, 3);  // rows 2 and 3 proportional
  long vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  CHECK(rank(m) == 2);
}

TEST_CASE("fraction-free rank agrees with the rational oracle") {
  Rng rng(2024, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.below(6);
    const std::size_t cols = 1 + rng.below(6);
    const IMat m = random_matrix(rng, rows, cols, 4);  // small entries force rank defects
    CHECK(rank(m) == rank_oracle(m));
  }
}

TEST_CASE("elimination transform zeroes the tail rows and stays invertible") {
  Rng rng(7, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    const std::size_t cols = 1 + rng.below(n - 1);
    const std::size_t keep = 1 + rng.below(cols);
    const IMat h = random_matrix(rng, n, cols, 1000);
    const IMat e = elimination_transform(h, keep);
    CHECK(rank(e) == n);
    const IMat eh = mul(e, h);
    for (std::size_t i = keep; i < n; ++i)
      for (std::size_t j = 0; j < keep; ++j) CHECK(eh.at(i, j) == 0);
  }
}

TEST_CASE("elimination transform with keep zero is the identity") {
  Rng rng(7, 2);
  const IMat h = random_matrix(rng, 3, 2, 10);
  const IMat e = elimination_transform(h, 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(e.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("without_columns drops the requested columns") {
  IMat m(2, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = j;
    m.at(1, j) = 10 + j;
  }
  const IMat r = m.without_columns({1, 3});
  CHECK(r.cols() == 2);
  CHECK(r.at(0, 0) == 0);
  CHECK(r.at(0, 1) == 2);
  CHECK(r.at(1, 1) == 12);
}
