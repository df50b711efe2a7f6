#include <doctest.h>

#include "adlv/intlin.hpp"

using namespace adlv;

namespace {
IMat mat(std::initializer_list<std::initializer_list<Int>> rows) {
  IMat m(rows.size(), rows.begin()->size());
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (Int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}
}  // namespace

TEST_CASE("smith normal form reproduces the matrix") {
  IMat m = mat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  SmithForm s = smith_normal_form(m);
  CHECK(IMat(s.U * m * s.V) == s.D);
  CHECK(s.rank == 3);
  // classical invariant factors of this matrix: 2, 2, 156
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 2);
  CHECK(s.D(2, 2) == 156);
  CHECK(s.D(1, 1) % s.D(0, 0) == 0);
  CHECK(s.D(2, 2) % s.D(1, 1) == 0);
}

TEST_CASE("integer kernel") {
  IMat m = mat({{1, 2, 3}});
  IMat k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK(IMat(m * k) == IMat::Zero(1, 2));
}

TEST_CASE("lattice membership and preimage") {
  IMat gens = mat({{2, 0}, {0, 3}});
  IVec v(2);
  v << 4, -3;
  CHECK(lattice_contains(gens, v));
  v << 1, 0;
  CHECK(!lattice_contains(gens, v));
  // {y : y1 + y2 in 2Z}
  IMat pre = lattice_preimage(mat({{1, 1}}), mat({{2}}));
  IVec a(2);
  a << 1, 1;
  CHECK(lattice_contains(pre, a));
  a << 1, 0;
  CHECK(!lattice_contains(pre, a));
}

TEST_CASE("quotient groups") {
  AbelianGroup g = quotient_group(2, mat({{2, 0}, {0, 4}}));
  CHECK(g.torsion == std::vector<Int>{2, 4});
  CHECK(g.free_rank == 0);
  CHECK(g.order() == 8);
  AbelianGroup h = quotient_group(3, mat({{1}, {0}, {0}}));
  CHECK(h.torsion.empty());
  CHECK(h.free_rank == 2);
  CHECK(h.order() == 0);
  CHECK(quotient_group(2, mat({{2, 1}, {0, 1}})).order() == 2);
}

TEST_CASE("lattice quotient of nested lattices") {
  IMat super = mat({{1, 0}, {0, 2}});
  IMat sub = mat({{2, 0}, {0, 4}});
  AbelianGroup q = lattice_quotient(super, sub);
  CHECK(q.torsion == std::vector<Int>{2, 2});
  CHECK_THROWS_AS(lattice_quotient(sub, super), Error);
}

TEST_CASE("finite quotient canonical forms") {
  FiniteQuotient q = finite_quotient(mat({{2, 0}, {0, 3}}));
  CHECK(q.order == 6);
  CHECK(q.all_classes().size() == 6);
  IVec y(2);
  y << 5, 4;
  IVec c = q.canon(y);
  CHECK(q.canon(IVec(q.lift(c))) == c);
  IVec z(2);
  z << 3, 1;  // 5-2=3, 4-3=1: same class
  CHECK(q.canon(z) == c);
}
