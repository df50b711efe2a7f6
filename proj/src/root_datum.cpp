#include "adlv/root_datum.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <ostream>

namespace adlv {

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

namespace {

IMat cartan_of_type(char type, int rank) {
  auto chain = [&](IMat& a) {
    for (int i = 0; i + 1 < rank; ++i) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  };
  IMat a = 2 * identity_mat(rank);
  switch (type) {
    case 'A':
      require(rank >= 1, "UnsupportedType", "A_n needs n >= 1");
      chain(a);
      break;
    case 'B':
      require(rank >= 2, "UnsupportedType", "B_n needs n >= 2");
      chain(a);
      a(rank - 1, rank - 2) = -2;  // alpha_n short
      break;
    case 'C':
      require(rank >= 2, "UnsupportedType", "C_n needs n >= 2");
      chain(a);
      a(rank - 2, rank - 1) = -2;  // alpha_n long
      break;
    case 'D':
      require(rank >= 3, "UnsupportedType", "D_n needs n >= 3");
      for (int i = 0; i + 1 < rank - 1; ++i) {
        a(i, i + 1) = -1;
        a(i + 1, i) = -1;
      }
      a(rank - 3, rank - 1) = -1;
      a(rank - 1, rank - 3) = -1;
      break;
    case 'E': {
      require(rank >= 6 && rank <= 8, "UnsupportedType", "E_n needs n in {6,7,8}");
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4.
      auto link = [&](int i, int j) {
        a(i - 1, j - 1) = -1;
        a(j - 1, i - 1) = -1;
      };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      require(rank == 4, "UnsupportedType", "F_4 has rank 4");
      chain(a);
      a(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      require(rank == 2, "UnsupportedType", "G_2 has rank 2");
      a(0, 1) = -3;  // alpha_1 short, alpha_2 long
      a(1, 0) = -1;
      break;
    default:
      fail("UnsupportedType", std::string("unknown simple type '") + type + "'");
  }
  return a;
}

int height_of(const IVec& x) {
  Int h = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) h += x[i];
  return int(h);
}

}  // namespace

QVec solve_rational(QMat a, QVec b) {
  const Eigen::Index n = a.rows();
  require(a.cols() == n && b.size() == n, "LinAlg", "solve expects a square system");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!a(r, col).is_zero()) { piv = r; break; }
    require(piv >= 0, "LinAlg", "singular rational system");
    if (piv != col) { a.row(piv).swap(a.row(col)); std::swap(b[piv], b[col]); }
    Rational p = a(col, col);
    for (Eigen::Index j = col; j < n; ++j) a(col, j) /= p;
    b[col] /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Rational f = a(r, col);
      for (Eigen::Index j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  return b;
}

QMat invert_rational(const QMat& a) {
  const Eigen::Index n = a.rows();
  QMat out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    QVec e = QVec::Zero(n);
    e[j] = Rational(1);
    out.col(j) = solve_rational(a, e);
  }
  return out;
}

int RootDatum::index_of_root(const IVec& x) const {
  auto it = root_index.find(x);
  return it == root_index.end() ? -1 : it->second;
}

bool RootDatum::simply_laced() const {
  for (const auto& c : components)
    if (c.type == 'B' || c.type == 'C' || c.type == 'F' || c.type == 'G') return false;
  return true;
}

RootDatum build_root_datum(const DatumSpec& spec) {
  RootDatum d;
  d.spec = spec;
  require(!spec.empty(), "UnsupportedType", "empty datum spec");
  for (const auto& c : spec) {
    require(c.copies >= 1, "UnsupportedType", "component count d must be >= 1");
    require(c.rank >= 1 && c.rank <= 8, "RankTooLarge",
            "supported simple types have rank <= 8");
    for (int k = 0; k < c.copies; ++k) d.components.push_back({c.type, c.rank, 1});
  }
  d.rank = 0;
  for (const auto& c : d.components) d.rank += c.rank;
  require(d.rank <= 16, "RankTooLarge", "total rank above enumeration budget");

  d.cartan = IMat::Zero(d.rank, d.rank);
  d.component_of_simple.assign(d.rank, 0);
  d.simples_of_component.resize(d.components.size());
  int base = 0;
  for (size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& c = d.components[ci];
    d.cartan.block(base, base, c.rank, c.rank) = cartan_of_type(c.type, c.rank);
    for (int i = 0; i < c.rank; ++i) {
      d.component_of_simple[base + i] = int(ci);
      d.simples_of_component[ci].push_back(base + i);
    }
    base += c.rank;
  }
  d.cartan_t = d.cartan.transpose();
  d.cartan_t_inv = invert_rational(d.cartan_t.cast<Rational>());

  for (int i = 0; i < d.rank; ++i) {
    require(d.cartan(i, i) == 2, "InvariantViolation", "Cartan diagonal");
    // s_i on Y: (s_i mu)[r] = mu[r] - mu[i] * cartan(i, r)
    IMat s = identity_mat(d.rank);
    for (int r = 0; r < d.rank; ++r) s(r, i) = (r == i ? 1 : 0) - d.cartan(i, r);
    d.simple_refl_y.push_back(s);
  }

  // Close the simple roots under simple reflections.
  std::vector<IVec> xs, cs;
  std::unordered_map<IVec, int, IVecHash, IVecEq> seen;
  for (int i = 0; i < d.rank; ++i) {
    IVec x = IVec::Zero(d.rank);
    x[i] = 1;
    xs.push_back(x);
    cs.push_back(d.cartan.row(i));
    seen.emplace(x, i);
  }
  for (size_t head = 0; head < xs.size(); ++head) {
    IVec x = xs[head], c = cs[head];
    for (int i = 0; i < d.rank; ++i) {
      Int px = 0;
      for (int j = 0; j < d.rank; ++j) px += x[j] * d.cartan(i, j);  // <x, a_i^vee>
      IVec x2 = x;
      x2[i] -= px;
      if (seen.emplace(x2, int(xs.size())).second) {
        IVec c2 = c - c[i] * IVec(d.cartan.row(i));
        xs.push_back(x2);
        cs.push_back(c2);
      }
      require(xs.size() <= 2400, "RankTooLarge", "root enumeration budget exceeded");
    }
  }

  // Order: simple roots first, then remaining positives by (height, lex).
  std::vector<int> pos;
  for (size_t i = 0; i < xs.size(); ++i) {
    bool positive = true;
    for (int j = 0; j < d.rank; ++j)
      if (xs[i][j] < 0) { positive = false; break; }
    if (positive) pos.push_back(int(i));
  }
  // Simple roots occupy indices 0..rank-1 in simple order; the rest follow
  // by (height, lex).
  std::sort(pos.begin(), pos.end(), [&](int a, int b) {
    int ha = height_of(xs[a]), hb = height_of(xs[b]);
    if (ha == 1 && hb == 1) {
      int ia = 0, ib = 0;
      for (int t = 0; t < d.rank; ++t) {
        if (xs[a][t] == 1) ia = t;
        if (xs[b][t] == 1) ib = t;
      }
      return ia < ib;
    }
    if (ha != hb) return ha < hb;
    return lex_less(xs[a], xs[b]);
  });
  d.n_pos = int(pos.size());
  require(int(xs.size()) == 2 * d.n_pos, "InvariantViolation",
          "root set is not symmetric");
  d.root_x.resize(2 * d.n_pos);
  d.coroot_y.resize(2 * d.n_pos);
  for (int i = 0; i < d.n_pos; ++i) {
    d.root_x[i] = xs[pos[i]];
    d.coroot_y[i] = cs[pos[i]];
    d.root_x[d.n_pos + i] = -xs[pos[i]];
    d.coroot_y[d.n_pos + i] = -cs[pos[i]];
  }
  d.root_height.resize(2 * d.n_pos);
  d.component_of_root.resize(2 * d.n_pos);
  for (int i = 0; i < 2 * d.n_pos; ++i) {
    d.root_index.emplace(d.root_x[i], i);
    d.root_height[i] = height_of(d.root_x[i]);
    int comp = -1;
    for (int j = 0; j < d.rank; ++j)
      if (d.root_x[i][j] != 0) { comp = d.component_of_simple[j]; break; }
    d.component_of_root[i] = comp;
    Int p = 0;
    for (int j = 0; j < d.rank; ++j) p += d.root_x[i][j] * d.coroot_y[i][j];
    require(p == 2, "InvariantViolation", "<alpha, alpha^vee> != 2");
  }
  d.highest_root_of_component.assign(d.components.size(), -1);
  for (int i = 0; i < d.n_pos; ++i) {
    int c = d.component_of_root[i];
    int& best = d.highest_root_of_component[c];
    if (best < 0 || d.root_height[i] > d.root_height[best]) best = i;
  }

  // W_0-invariant form (D2): symmetrize the Cartan matrix per component and
  // normalize so the shortest coroot of each component has squared length 2.
  QVec c = QVec::Zero(d.rank);
  for (const auto& simples : d.simples_of_component) {
    std::vector<int> todo = {simples[0]};
    c[simples[0]] = Rational(1);
    for (size_t h = 0; h < todo.size(); ++h) {
      int i = todo[h];
      for (int j : simples) {
        if (j == i || d.cartan(i, j) == 0 || !c[j].is_zero()) continue;
        // symmetry of A^-1 diag(c) needs A_ij c_j = c_i A_ji
        c[j] = c[i] * Rational(d.cartan(j, i), d.cartan(i, j));
        todo.push_back(j);
      }
    }
    Rational lo = c[simples[0]];
    for (int j : simples) lo = std::min(lo, c[j]);
    for (int j : simples) c[j] /= lo;
  }
  QMat diag_c = QMat::Zero(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i) diag_c(i, i) = c[i];
  d.gram = invert_rational(d.cartan.cast<Rational>()) * diag_c;
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      require(d.gram(i, j) == d.gram(j, i), "InvariantViolation", "form not symmetric");
  for (int i = 0; i < d.rank; ++i) {
    QMat s = d.simple_refl_y[i].cast<Rational>();
    require(QMat(s.transpose() * d.gram * s) == d.gram, "InvariantViolation",
            "form not W-invariant");
  }

  // Simple reflections permute the root set.
  for (int i = 0; i < d.rank; ++i) {
    for (int r = 0; r < 2 * d.n_pos; ++r) {
      Int px = 0;
      for (int j = 0; j < d.rank; ++j) px += d.root_x[r][j] * d.cartan(i, j);
      IVec x2 = d.root_x[r];
      x2[i] -= px;
      require(d.index_of_root(x2) >= 0, "InvariantViolation",
              "reflection does not stabilize the roots");
    }
  }
  return d;
}

// --- WeylGroup ---------------------------------------------------------------

void WeylGroup::build(const RootDatum& d, int budget) {
  const int n = d.rank;
  const int nr = d.num_roots();
  y_mat_.push_back(identity_mat(n));
  {
    std::vector<std::uint16_t> idp(nr);
    for (int r = 0; r < nr; ++r) idp[r] = std::uint16_t(r);
    root_perm_.push_back(idp);
  }
  index_.emplace(y_mat_[0], 0);

  // Root permutations of the simple reflections, used to extend.
  std::vector<std::vector<std::uint16_t>> simple_perm(n);
  for (int i = 0; i < n; ++i) {
    simple_perm[i].resize(nr);
    for (int r = 0; r < nr; ++r) {
      Int px = 0;
      for (int j = 0; j < n; ++j) px += d.root_x[r][j] * d.cartan(i, j);
      IVec x2 = d.root_x[r];
      x2[i] -= px;
      simple_perm[i][r] = std::uint16_t(d.index_of_root(x2));
    }
  }

  for (size_t head = 0; head < y_mat_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IMat m = IMat(y_mat_[head] * d.simple_refl_y[i]);  // right multiplication
      auto [it, fresh] = index_.emplace(m, Id(y_mat_.size()));
      (void)it;
      if (!fresh) continue;
      require(int(y_mat_.size()) < budget && y_mat_.size() < 65535, "RankTooLarge",
              "Weyl group enumeration budget exceeded");
      std::vector<std::uint16_t> perm(nr);
      const auto& base = root_perm_[head];
      // (w s_i)(r) = w(s_i(r))
      for (int r = 0; r < nr; ++r) perm[r] = base[simple_perm[i][r]];
      y_mat_.push_back(m);
      root_perm_.push_back(std::move(perm));
    }
  }

  const int size = int(y_mat_.size());
  len_.resize(size);
  inv_.resize(size);
  for (int w = 0; w < size; ++w) {
    int l = 0;
    for (int r = 0; r < d.n_pos; ++r)
      if (root_perm_[w][r] >= d.n_pos) ++l;
    len_[w] = std::uint8_t(l);
    QMat qi = invert_rational(y_mat_[w].cast<Rational>());
    IMat mi(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        require(qi(a, b).is_integer(), "InvariantViolation", "non-integral inverse");
        mi(a, b) = qi(a, b).num();
      }
    inv_[w] = index_.at(mi);
  }

  simple_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto it = index_.find(d.simple_refl_y[i]);
    require(it != index_.end(), "InvariantViolation", "simple reflection missing");
    simple_[i] = it->second;
  }
  reflection_.resize(d.num_roots());
  for (int r = 0; r < d.num_roots(); ++r) {
    IMat m = identity_mat(n);
    m -= IMat(d.coroot_y[r] * d.root_x[r].transpose());
    auto it = index_.find(m);
    require(it != index_.end(), "InvariantViolation", "reflection missing");
    reflection_[r] = it->second;
  }

  // Canonical reduced words by greedy lowest left descent.
  word_.resize(size);
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return len_[a] != len_[b] ? len_[a] < len_[b] : a < b;
  });
  longest_ = Id(order.back());
  for (int w : order) {
    if (len_[w] == 0) continue;
    for (int i = 0; i < n; ++i) {
      // left descent: w^-1(alpha_i) < 0
      if (root_perm_[inv_[w]][i] >= d.n_pos) {
        Id rest = index_.at(IMat(d.simple_refl_y[i] * y_mat_[w]));
        word_[w].clear();
        word_[w].push_back(std::uint8_t(i));
        word_[w].insert(word_[w].end(), word_[rest].begin(), word_[rest].end());
        break;
      }
    }
    require(int(word_[w].size()) == len_[w], "InvariantViolation",
            "greedy word is not reduced");
  }

  if (std::size_t(size) * size <= std::size_t(16) * 1024 * 1024) {
    // a*b by induction on len(b): b = s_i * rest with i the first letter.
    mult_table_.assign(std::size_t(size) * size, 0);
    std::vector<Id> tail(size, 0);
    for (int b : order) {
      if (len_[b] > 0)
        tail[b] = index_.at(IMat(d.simple_refl_y[word_[b][0]] * y_mat_[b]));
    }
    std::vector<std::vector<Id>> right_simple(size, std::vector<Id>(n));
    for (int a = 0; a < size; ++a)
      for (int i = 0; i < n; ++i)
        right_simple[a][i] = index_.at(IMat(y_mat_[a] * d.simple_refl_y[i]));
    for (int b : order) {
      if (len_[b] == 0) {
        for (int a = 0; a < size; ++a) mult_table_[std::size_t(a) * size + b] = Id(a);
        continue;
      }
      int i = word_[b][0];
      Id rest = tail[b];
      for (int a = 0; a < size; ++a) {
        Id as = right_simple[a][i];
        mult_table_[std::size_t(a) * size + b] =
            mult_table_[std::size_t(as) * size + rest];
      }
    }
  }
}

WeylGroup::Id WeylGroup::mult(Id a, Id b) const {
  if (!mult_table_.empty()) return mult_table_[std::size_t(a) * size() + b];
  return index_.at(IMat(y_mat_[a] * y_mat_[b]));
}

WeylGroup::Id WeylGroup::from_matrix(const IMat& m) const {
  auto it = index_.find(m);
  require(it != index_.end(), "InvariantViolation", "matrix not in Weyl group");
  return it->second;
}

const WeylGroup& RootDatum::weyl() const {
  if (!weyl_) {
    auto g = std::make_shared<WeylGroup>();
    g->build(*this, weyl_budget);
    weyl_ = std::move(g);
  }
  return *weyl_;
}

// --- order relations ----------------------------------------------------------

QVec coroot_coordinates(const RootDatum& d, const QVec& v) {
  return d.cartan_t_inv * v;
}

bool leq_cone(const RootDatum& d, const QVec& lo, const QVec& hi) {
  QVec c = coroot_coordinates(d, QVec(hi - lo));
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c[i] < Rational(0)) return false;
  return true;
}

bool in_coroot_lattice(const RootDatum& d, const IVec& v) {
  QVec c = coroot_coordinates(d, to_rational(v));
  return is_integral(c);
}

namespace {
std::atomic<bool> g_preceq_congruence{true};
}  // namespace

void set_preceq_congruence(bool on) { g_preceq_congruence = on; }
bool preceq_congruence() { return g_preceq_congruence; }

bool preceq_with(const RootDatum& d, const IVec& mu, const IVec& lambda,
                 bool with_congruence) {
  IVec bar = dominant_conjugate_word<Int>(d, mu).first;
  if (!leq_cone(d, to_rational(bar), to_rational(lambda))) return false;
  if (with_congruence && !in_coroot_lattice(d, IVec(lambda - mu))) return false;
  return true;
}

bool preceq(const RootDatum& d, const IVec& mu, const IVec& lambda) {
  return preceq_with(d, mu, lambda, g_preceq_congruence);
}

Rational coroot_height(const RootDatum& d, const IVec& mu) {
  QVec c = coroot_coordinates(d, to_rational(mu));
  Rational h(0);
  for (Eigen::Index i = 0; i < c.size(); ++i) h += c[i];
  return h;
}

std::vector<IVec> enumerate_dominant(const RootDatum& d, const Rational& max_height) {
  std::vector<Rational> fw_height(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    IVec e = IVec::Zero(d.rank);
    e[i] = 1;
    fw_height[i] = coroot_height(d, e);
  }
  std::vector<IVec> out;
  IVec cur = IVec::Zero(d.rank);
  std::function<void(int, Rational)> rec = [&](int i, Rational h) {
    if (i == d.rank) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0;; ++v) {
      Rational h2 = h + Rational(v) * fw_height[i];
      if (h2 > max_height) break;
      cur[i] = v;
      rec(i + 1, h2);
    }
    cur[i] = 0;
  };
  rec(0, Rational(0));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// --- simple subsets and Levi data ---------------------------------------------

std::vector<int> set_elements(SimpleSet k) {
  std::vector<int> v;
  for (int i = 0; i < 32; ++i)
    if (set_contains(k, i)) v.push_back(i);
  return v;
}

SimpleSet set_of(const std::vector<int>& v) {
  SimpleSet k = 0;
  for (int i : v) k |= (1u << i);
  return k;
}

std::vector<int> positive_roots_of_levi(const RootDatum& d, SimpleSet k) {
  std::vector<int> out;
  for (int r = 0; r < d.n_pos; ++r) {
    bool in = true;
    for (int j = 0; j < d.rank && in; ++j)
      if (d.root_x[r][j] != 0 && !set_contains(k, j)) in = false;
    if (in) out.push_back(r);
  }
  return out;
}

CoweightFlags classify_coweight(const RootDatum& d, SimpleSet k, const QVec& mu,
                                bool want_strongly) {
  CoweightFlags f;
  f.k_dominant = f.k_antidominant = f.k_minuscule = true;
  for (int r : positive_roots_of_levi(d, k)) {
    Rational p = d.pairing<Rational>(r, mu);
    if (p < Rational(0)) f.k_dominant = false;
    if (p > Rational(0)) f.k_antidominant = false;
    if (p > Rational(1) || p < Rational(-1)) f.k_minuscule = false;
  }
  if (want_strongly) {
    require(is_integral(mu), "NotACoroot", "strongly-minuscule input must be a coroot");
    IVec m = to_integer(mu);
    int gamma = -1;
    for (int r = 0; r < d.n_pos; ++r) {
      if (d.coroot_y[r] == m) { gamma = r; break; }
    }
    bool outside = gamma >= 0;
    if (gamma >= 0)
      for (int j = 0; j < d.rank; ++j)
        if (d.root_x[gamma][j] != 0 && !set_contains(k, j)) { outside = true; break; }
    require(gamma >= 0, "NotACoroot", "not the coroot of a positive root");
    f.strongly_k_minuscule = strongly_k_minuscule(d, k, gamma);
  }
  return f;
}

bool strongly_k_minuscule(const RootDatum& d, SimpleSet k, int gamma) {
  require(gamma >= 0 && gamma < d.n_pos, "NotARoot", "need a positive root");
  QVec cv = to_rational(d.coroot_y[gamma]);
  CoweightFlags f = classify_coweight(d, k, cv, false);
  if (!f.k_minuscule) return false;
  int comp = d.component_of_root[gamma];
  if (d.components[comp].type != 'G') return true;
  // G_2 clause: when K is exactly the short simple roots of the component,
  // gamma must be a long root. Bourbaki G_2: alpha_1 short, alpha_2 long.
  int base = d.simples_of_component[comp][0];
  bool k_is_short_simples =
      set_contains(k, base) && !set_contains(k, base + 1);
  if (!k_is_short_simples) return true;
  // Long roots of G_2 have the shorter coroot; compare squared norms.
  QVec cr = to_rational(d.coroot_y[gamma]);
  Rational norm = (cr.transpose() * d.gram * cr)(0, 0);
  Rational min_norm = norm;
  for (int r = 0; r < d.n_pos; ++r) {
    if (d.component_of_root[r] != comp) continue;
    QVec c2 = to_rational(d.coroot_y[r]);
    min_norm = std::min(min_norm, Rational((c2.transpose() * d.gram * c2)(0, 0)));
  }
  return norm == min_norm;
}

std::vector<int> phi_of_vector(const RootDatum& d, const QVec& v) {
  std::vector<int> out;
  for (int r = 0; r < d.n_pos; ++r)
    if (d.pairing<Rational>(r, v).is_zero()) out.push_back(r);
  return out;
}

SimpleSet levi_of_dominant(const RootDatum& d, const QVec& v) {
  require(is_dominant(d, v), "NotDominant", "J_v needs a dominant vector");
  SimpleSet k = 0;
  for (int i = 0; i < d.rank; ++i)
    if (v[i].is_zero()) k |= (1u << i);
  return k;
}

QVec project_orthogonal_to_levi(const RootDatum& d, SimpleSet k, const QVec& v) {
  std::vector<int> ks = set_elements(k);
  if (ks.empty()) return v;
  const int m = int(ks.size());
  QMat g(m, m);
  QVec rhs(m);
  std::vector<QVec> coroots;
  for (int a = 0; a < m; ++a) coroots.push_back(to_rational(d.coroot_y[ks[a]]));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      g(a, b) = (coroots[a].transpose() * d.gram * coroots[b])(0, 0);
    rhs[a] = (coroots[a].transpose() * d.gram * v)(0, 0);
  }
  QVec x = solve_rational(g, rhs);
  QVec pr = v;
  for (int a = 0; a < m; ++a) pr -= coroots[a] * x[a];
  return pr;
}

}  // namespace adlv
