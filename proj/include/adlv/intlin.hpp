#pragma once

#include <vector>

#include "adlv/types.hpp"

namespace adlv {

// Exact integer linear algebra on small dense matrices: Smith normal form,
// lattices given by integer generator matrices (columns), and finitely
// generated abelian quotients. Everything is deterministic.

struct SmithForm {
  IMat U;  // unimodular, rows
  IMat D;  // diagonal, d1 | d2 | ... | dr, rest zero
  IMat V;  // unimodular, cols;  U * M * V = D
  int rank = 0;
};

SmithForm smith_normal_form(const IMat& m);

// Columns of the result span {x : m x = 0}.
IMat integer_kernel(const IMat& m);

// A lattice is the column span over Z of `gens` (possibly redundant).
bool lattice_contains(const IMat& gens, const IVec& v);
bool lattice_subset(const IMat& sub, const IMat& super);
bool lattice_equal(const IMat& a, const IMat& b);
IMat lattice_sum(const IMat& a, const IMat& b);

// {y in Z^n : m y in L(gens)}, as a generator matrix.
IMat lattice_preimage(const IMat& m, const IMat& gens);

// Structure of Z^n / L(gens): torsion coefficients (each > 1, divisibility
// chain) followed by `free_rank` zero entries kept separately.
struct AbelianGroup {
  std::vector<Int> torsion;  // invariant factors > 1, ascending divisibility
  int free_rank = 0;
  bool operator==(const AbelianGroup& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  Int order() const {  // 0 means infinite
    if (free_rank > 0) return 0;
    Int n = 1;
    for (Int t : torsion) n *= t;
    return n;
  }
  std::string str() const;
};

AbelianGroup quotient_group(int ambient_rank, const IMat& gens);

// Quotient of two lattices sub ⊆ super (checked), as an abelian group.
AbelianGroup lattice_quotient(const IMat& super, const IMat& sub);

// Finite quotient Z^n / L for full-rank L: canonical coordinates per class.
struct FiniteQuotient {
  IMat u;             // unimodular; class(y) = (u*y) mod d, componentwise
  IMat u_inv;
  IVec d;             // all entries >= 1
  Int order = 1;

  IVec canon(const IVec& y) const;        // canonical tuple of the class of y
  IVec lift(const IVec& tuple) const;     // one integral representative
  std::vector<IVec> all_classes() const;  // deterministic order
};

FiniteQuotient finite_quotient(const IMat& full_rank_gens);

IMat identity_mat(int n);

}  // namespace adlv
