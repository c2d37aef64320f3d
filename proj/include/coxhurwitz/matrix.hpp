#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace coxhurwitz {

/// Dense square matrix over a cyclotomic field, row-major.
class ScalarMatrix {
public:
  ScalarMatrix(const CyclotomicField& field, std::size_t n)
      : field_(&field), n_(n), data_(n * n, Scalar::zero(field)) {}

  static ScalarMatrix identity(const CyclotomicField& field, std::size_t n) {
    ScalarMatrix m(field, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  const CyclotomicField& field() const noexcept { return *field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  std::vector<Scalar> column(std::size_t c) const {
    std::vector<Scalar> v;
    v.reserve(n_);
    for (std::size_t r = 0; r < n_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  bool is_identity() const {
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) {
        const Scalar& x = (*this)(r, c);
        if (r == c ? !x.is_one() : !x.is_zero()) return false;
      }
    return true;
  }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    const std::size_t n = a.n_;
    ScalarMatrix out(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const Scalar& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(n_, Scalar::zero(field()));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
    return out;
  }

  /// Gauss-Jordan inverse; throws ArithmeticError when singular.
  ScalarMatrix inverse() const {
    const std::size_t n = n_;
    ScalarMatrix a(*this);
    ScalarMatrix inv = identity(field(), n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col).is_zero()) ++piv;
      if (piv == n) throw ArithmeticError("singular matrix");
      if (piv != col)
        for (std::size_t k = 0; k < n; ++k) {
          std::swap(a(piv, k), a(col, k));
          std::swap(inv(piv, k), inv(col, k));
        }
      Scalar p = a(col, col).inverse();
      for (std::size_t k = 0; k < n; ++k) {
        a(col, k) = a(col, k) * p;
        inv(col, k) = inv(col, k) * p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        Scalar f = a(r, col);
        for (std::size_t k = 0; k < n; ++k) {
          if (!a(col, k).is_zero()) a(r, k) -= f * a(col, k);
          if (!inv(col, k).is_zero()) inv(r, k) -= f * inv(col, k);
        }
      }
    }
    return inv;
  }

  /// Rank by exact elimination.
  std::size_t rank() const {
    ScalarMatrix a(*this);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
      std::size_t piv = rank;
      while (piv < n_ && a(piv, col).is_zero()) ++piv;
      if (piv == n_) continue;
      for (std::size_t k = 0; k < n_; ++k) std::swap(a(piv, k), a(rank, k));
      Scalar p = a(rank, col).inverse();
      for (std::size_t r = rank + 1; r < n_; ++r) {
        if (a(r, col).is_zero()) continue;
        Scalar f = a(r, col) * p;
        for (std::size_t k = col; k < n_; ++k) a(r, k) -= f * a(rank, k);
      }
      ++rank;
    }
    return rank;
  }

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (const auto& x : data_) h = h * 0x100000001b3ull ^ x.hash();
    return h;
  }

private:
  const CyclotomicField* field_;
  std::size_t n_;
  std::vector<Scalar> data_;
};

}  // namespace coxhurwitz

template <>
struct std::hash<coxhurwitz::ScalarMatrix> {
  std::size_t operator()(const coxhurwitz::ScalarMatrix& m) const noexcept { return m.hash(); }
};
