#include "dofic/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dofic {

IMat IMat::identity(std::size_t n) {
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

void IMat::append_rows(const IMat& other) {
  if (rows_ == 0 && cols_ == 0) {
    *this = other;
    return;
  }
  if (other.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
  a_.insert(a_.end(), other.a_.begin(), other.a_.end());
  rows_ += other.rows_;
}

IMat IMat::without_columns(const std::vector<std::size_t>& drop) const {
  std::vector<bool> dropped(cols_, false);
  for (auto c : drop) dropped[c] = true;
  std::size_t kept = 0;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!dropped[c]) ++kept;
  IMat out(rows_, kept);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!dropped[c]) out.at(r, k++) = at(r, c);
  }
  return out;
}

bool IMat::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (at(r, c) != 0) return false;
  return true;
}

IMat mul(const IMat& a, const IMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
  IMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& f = a.at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Int& g = b.at(k, j);
        if (g != 0) out.at(i, j) += f * g;
      }
    }
  return out;
}

IMat add(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  IMat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

std::size_t rank(IMat m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m.at(p, c) == 0) ++p;
    if (p == nr) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

IMat elimination_transform(const IMat& h, std::size_t keep) {
  const std::size_t n = h.rows();
  IMat e = IMat::identity(n);
  if (keep == 0 || h.cols() == 0 || n == 0) return e;
  const std::size_t work_cols = std::min(keep, h.cols());
  IMat w(n, work_cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < work_cols; ++j) w.at(i, j) = h.at(i, j);

  std::size_t r = 0;
  for (std::size_t c = 0; c < work_cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && w.at(p, c) == 0) ++p;
    if (p == n) continue;
    w.swap_rows(r, p);
    e.swap_rows(r, p);
    const Int piv = w.at(r, c);
    for (std::size_t i = r + 1; i < n; ++i) {
      const Int f = w.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < work_cols; ++j) w.at(i, j) = piv * w.at(i, j) - f * w.at(r, j);
      for (std::size_t j = 0; j < n; ++j) e.at(i, j) = piv * e.at(i, j) - f * e.at(r, j);
    }
    ++r;
  }
  return e;
}

}  // namespace dofic
