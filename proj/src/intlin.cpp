#include "adlv/intlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace adlv {

namespace {

constexpr Int kGuard = Int(1) << 56;

void guard(const IMat& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    require(std::llabs(m.data()[i]) < kGuard, "Overflow", "integer matrix blow-up");
  }
}

}  // namespace

IMat identity_mat(int n) { return IMat::Identity(n, n); }

SmithForm smith_normal_form(const IMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithForm s;
  s.U = identity_mat(int(rows));
  s.V = identity_mat(int(cols));
  s.D = m;
  IMat& d = s.D;

  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // Find the pivot of smallest absolute value in the trailing block.
    Eigen::Index pi = -1, pj = -1;
    Int best = 0;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (d(i, j) != 0 && (pi < 0 || std::llabs(d(i, j)) < best)) {
          best = std::llabs(d(i, j));
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) { d.row(pi).swap(d.row(t)); s.U.row(pi).swap(s.U.row(t)); }
    if (pj != t) { d.col(pj).swap(d.col(t)); s.V.col(pj).swap(s.V.col(t)); }

    bool clean = true;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      Int q = d(i, t) / d(t, t);
      if (q != 0) { d.row(i) -= q * d.row(t); s.U.row(i) -= q * s.U.row(t); }
      if (d(i, t) != 0) clean = false;
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      Int q = d(t, j) / d(t, t);
      if (q != 0) { d.col(j) -= q * d.col(t); s.V.col(j) -= q * s.V.col(t); }
      if (d(t, j) != 0) clean = false;
    }
    guard(d);
    if (!clean) continue;  // remainders survive, pick a smaller pivot

    // Enforce divisibility d(t,t) | d(i,j) for the trailing block.
    bool divides = true;
    for (Eigen::Index i = t + 1; i < rows && divides; ++i)
      for (Eigen::Index j = t + 1; j < cols && divides; ++j)
        if (d(i, j) % d(t, t) != 0) {
          d.col(t) += d.col(j);
          s.V.col(t) += s.V.col(j);
          divides = false;
        }
    if (!divides) continue;
    if (d(t, t) < 0) { d.row(t) = -d.row(t); s.U.row(t) = -s.U.row(t); }
    ++t;
  }
  s.rank = int(t);
  return s;
}

IMat integer_kernel(const IMat& m) {
  SmithForm s = smith_normal_form(m);
  const Eigen::Index cols = m.cols();
  IMat k(cols, cols - s.rank);
  for (Eigen::Index j = s.rank; j < cols; ++j) k.col(j - s.rank) = s.V.col(j);
  return k;
}

bool lattice_contains(const IMat& gens, const IVec& v) {
  SmithForm s = smith_normal_form(gens);
  IVec w = s.U * v;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i < s.rank) {
      if (w[i] % s.D(i, i) != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_subset(const IMat& sub, const IMat& super) {
  for (Eigen::Index j = 0; j < sub.cols(); ++j)
    if (!lattice_contains(super, sub.col(j))) return false;
  return true;
}

bool lattice_equal(const IMat& a, const IMat& b) {
  return lattice_subset(a, b) && lattice_subset(b, a);
}

IMat lattice_sum(const IMat& a, const IMat& b) {
  IMat s(a.rows(), a.cols() + b.cols());
  s << a, b;
  return s;
}

IMat lattice_preimage(const IMat& m, const IMat& gens) {
  const Eigen::Index n = m.cols();
  IMat stacked(m.rows(), n + gens.cols());
  stacked << m, -gens;
  IMat k = integer_kernel(stacked);
  return k.topRows(n);
}

std::string AbelianGroup::str() const {
  std::ostringstream os;
  bool first = true;
  for (Int t : torsion) {
    os << (first ? "" : " x ") << "Z/" << t;
    first = false;
  }
  for (int i = 0; i < free_rank; ++i) {
    os << (first ? "" : " x ") << "Z";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

AbelianGroup quotient_group(int ambient_rank, const IMat& gens) {
  AbelianGroup g;
  if (gens.cols() == 0) {
    g.free_rank = ambient_rank;
    return g;
  }
  SmithForm s = smith_normal_form(gens);
  for (int i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) g.torsion.push_back(s.D(i, i));
  g.free_rank = ambient_rank - s.rank;
  return g;
}

AbelianGroup lattice_quotient(const IMat& super, const IMat& sub) {
  require(lattice_subset(sub, super), "LatticeError", "sub not contained in super");
  // Express sub in coordinates of a basis of super, then take SNF.
  SmithForm s = smith_normal_form(super);
  // Basis of super: columns of B = U^-1 * D restricted to rank cols.
  // Coordinates of v in that basis: first r entries of U*v divided by d_i.
  IMat coords(s.rank, sub.cols());
  for (Eigen::Index j = 0; j < sub.cols(); ++j) {
    IVec w = s.U * IVec(sub.col(j));
    for (int i = 0; i < s.rank; ++i) coords(i, j) = w[i] / s.D(i, i);
  }
  return quotient_group(s.rank, coords);
}

IVec FiniteQuotient::canon(const IVec& y) const {
  IVec t = u * y;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    t[i] %= d[i];
    if (t[i] < 0) t[i] += d[i];
  }
  return t;
}

IVec FiniteQuotient::lift(const IVec& tuple) const { return u_inv * tuple; }

std::vector<IVec> FiniteQuotient::all_classes() const {
  std::vector<IVec> out;
  IVec t = IVec::Zero(d.size());
  while (true) {
    out.push_back(t);
    Eigen::Index i = 0;
    for (; i < t.size(); ++i) {
      if (++t[i] < d[i]) break;
      t[i] = 0;
    }
    if (i == t.size()) break;
  }
  return out;
}

FiniteQuotient finite_quotient(const IMat& gens) {
  SmithForm s = smith_normal_form(gens);
  require(s.rank == gens.rows(), "LatticeError", "quotient is not finite");
  FiniteQuotient q;
  q.u = s.U;
  q.d = s.D.diagonal();
  // Integer inverse of the unimodular U via adjugate-free elimination:
  // solve U X = I column by column with exact back substitution through SNF
  // of U itself (U is unimodular, so its SNF is the identity).
  SmithForm su = smith_normal_form(s.U);
  // U = su.U^-1 * I * su.V^-1  =>  U^-1 = su.V * su.U.
  q.u_inv = su.V * su.U;
  require((q.u * q.u_inv) == identity_mat(int(q.u.rows())), "LatticeError",
          "unimodular inverse failed");
  q.order = 1;
  for (Eigen::Index i = 0; i < q.d.size(); ++i) q.order *= q.d[i];
  return q;
}

}  // namespace adlv
