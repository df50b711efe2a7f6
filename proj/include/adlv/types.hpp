#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "adlv/rational.hpp"

namespace adlv {

using Int = std::int64_t;

// Dense types templated on the scalar; Int for lattice data, Rational for V.
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using IVec = Vec<Int>;
using IMat = Mat<Int>;
using QVec = Vec<Rational>;
using QMat = Mat<Rational>;

inline QVec to_rational(const IVec& v) {
  QVec q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

inline bool is_integral(const QVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_integer()) return false;
  return true;
}

inline IVec to_integer(const QVec& v) {
  IVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    require(v[i].is_integer(), "NotIntegral", "vector is not integral");
    out[i] = v[i].num();
  }
  return out;
}

struct IVecHash {
  std::size_t operator()(const IVec& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      h ^= std::hash<Int>()(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct IVecEq {
  bool operator()(const IVec& a, const IVec& b) const {
    return a.size() == b.size() && a == b;
  }
};

struct IMatHash {
  std::size_t operator()(const IMat& m) const {
    std::size_t h = 0x517cc1b727220a95ull;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      h ^= std::hash<Int>()(m.data()[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct IMatEq {
  bool operator()(const IMat& a, const IMat& b) const {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  }
};

// Lexicographic tie-breaking used wherever deterministic iteration is needed.
inline bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace adlv
