#include "ty/checks.hpp"

#include <mutex>
#include <sstream>

#include "ty/parallel.hpp"

namespace ty {

Rational sample_point(int t) { return Rational(17, 3) + Rational(t); }

std::pair<Rational, Rational> sample_pair(int t) {
  return {Rational(17, 3) + Rational(t), Rational(23, 7) + Rational(t)};
}

int minor_bound(int k, MinorRoute route) {
  if (route == MinorRoute::formula) return k + 1;
  return k + k * (k - 1) / 2;
}

QVec highest_vector_of(const LieRep& rep, const HighestWeight& lam) {
  const IndexScheme& sch = rep.scheme();
  std::vector<int> cart;
  std::vector<Rational> targ;
  for (int k = 1; k <= sch.n; ++k) {
    cart.push_back(k);
    targ.push_back(lam[static_cast<size_t>(k - 1)]);
  }
  Subspace wsp = weight_space(rep, cart, targ);
  if (wsp.dim() == 0) throw NoHighestVector("no vector of weight " + lam.str());
  QMat sys;
  for (int i : sch.indices()) {
    for (int j : sch.indices()) {
      if (i >= j) continue;
      std::vector<QVec> imgs;
      for (int t = 0; t < wsp.dim(); ++t) imgs.push_back(rep.F(i, j).apply(wsp.basis_vec(t)));
      for (int r = 0; r < rep.dim(); ++r) {
        QVec row(static_cast<size_t>(wsp.dim()), Rational(0));
        bool nz = false;
        for (int t = 0; t < wsp.dim(); ++t) {
          row[static_cast<size_t>(t)] = imgs[static_cast<size_t>(t)][static_cast<size_t>(r)];
          nz = nz || !row[static_cast<size_t>(t)].is_zero();
        }
        if (nz) sys.push_back(std::move(row));
      }
    }
  }
  auto ker = kernel_basis(std::move(sys), wsp.dim());
  if (ker.size() != 1)
    throw NotOneDimensional("highest-vector space has dimension " +
                            std::to_string(ker.size()));
  return wsp.from_coords(ker.front());
}

std::vector<RatFunc> eval_hw(const HighestWeight& lam) {
  std::vector<RatFunc> mus;
  for (const auto& li : lam.entries)
    mus.push_back(RatFunc(Poly::linear(1, li - Rational(1, 2)),
                          Poly::linear(1, Rational(-1, 2))));
  return mus;
}

namespace {

using State2 = kernel::State<Rational>;

std::vector<Rational> unit_vec(int dim, int at) {
  std::vector<Rational> v(static_cast<size_t>(dim), Rational(0));
  v[static_cast<size_t>(at)] = 1;
  return v;
}

// w -> w - P_{01} w * inv
State2 apply_flip(const IndexScheme& sch, const State2& st, const Rational& inv) {
  State2 out = st;
  for (const auto& [key, vec] : st) {
    int a = sch.index_at(static_cast<int>(key & 0xf));
    int b = sch.index_at(static_cast<int>((key >> 4) & 0xf));
    uint64_t nk = static_cast<uint64_t>(sch.pos(b)) |
                  (static_cast<uint64_t>(sch.pos(a)) << 4);
    std::vector<Rational> y(vec.size());
    for (size_t i = 0; i < vec.size(); ++i) y[i] = vec[i] * (-inv);
    kernel::accumulate(out, nk, std::move(y));
  }
  return out;
}

bool states_equal(const State2& a, const State2& b, std::string* witness,
                  const IndexScheme& sch) {
  auto diff_nonzero = [&](const State2& x, const State2& y) -> const uint64_t* {
    static uint64_t bad;
    for (const auto& [key, vec] : x) {
      auto it = y.find(key);
      for (size_t i = 0; i < vec.size(); ++i) {
        Rational d = vec[i] - (it == y.end() ? Rational(0) : it->second[i]);
        if (!d.is_zero()) {
          bad = key;
          return &bad;
        }
      }
    }
    return nullptr;
  };
  const uint64_t* w = diff_nonzero(a, b);
  if (!w) w = diff_nonzero(b, a);
  if (!w) return true;
  if (witness) {
    Tuple t = decode_tuple(sch, *w, 2);
    *witness = "tensor slot (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ")";
  }
  return false;
}

struct SampleSweep {
  bool pass = true;
  std::string witness;
  std::mutex mu;
  void fail(const std::string& w) {
    std::lock_guard<std::mutex> lk(mu);
    if (pass) {
      pass = false;
      witness = w;
    }
  }
};

// dense entry matrices of a family at a fixed sample
std::vector<std::vector<QMat>> family_mats(const SFamily<Rational>& fam, const Rational& x) {
  const IndexScheme& sch = fam.scheme();
  std::vector<std::vector<QMat>> mats(
      static_cast<size_t>(sch.N), std::vector<QMat>(static_cast<size_t>(sch.N)));
  for (int a : sch.indices())
    for (int b : sch.indices())
      mats[static_cast<size_t>(sch.pos(a))][static_cast<size_t>(sch.pos(b))] =
          fam.entry_matrix(a, b, Affine::constant(x));
  return mats;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  QMat r(n, QVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

bool mats_equal(const QMat& a, const QMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

QMat mat_scale(QMat a, const Rational& s) {
  for (auto& row : a)
    for (auto& v : row) v *= s;
  return a;
}

QMat mat_sub(QMat a, const QMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
  return a;
}

QMat mat_add(QMat a, const QMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

}  // namespace

CheckResult check_quaternary(const LieRep& rep, int pairs) {
  CheckResult res{"quaternary:" + rep.scheme().str(), "quaternary relation", true, ""};
  EvalFamily<Rational> fam(rep);
  const IndexScheme& sch = rep.scheme();
  SampleSweep sweep;
  parallel_for(pairs, [&](long t) {
    auto [x, y] = sample_pair(static_cast<int>(t));
    Rational inv_flip = (x - y).inv();
    Affine rt = Affine::constant(-(x + y));
    for (int i : sch.indices()) {
      for (int j : sch.indices()) {
        for (int c = 0; c < rep.dim(); ++c) {
          State2 st = kernel::start_state(sch, {i, j}, unit_vec(rep.dim(), c));
          // left side: R(x-y) S_1(x) R^t(-x-y) S_2(y)
          State2 l = kernel::apply_S_slot(fam, 1, Affine::constant(y), st);
          l = kernel::apply_Rt_slots(sch, 0, 1, rt, l);
          l = kernel::apply_S_slot(fam, 0, Affine::constant(x), l);
          l = apply_flip(sch, l, inv_flip);
          // right side: S_2(y) R^t(-x-y) S_1(x) R(x-y)
          State2 r = apply_flip(sch, st, inv_flip);
          r = kernel::apply_S_slot(fam, 0, Affine::constant(x), r);
          r = kernel::apply_Rt_slots(sch, 0, 1, rt, r);
          r = kernel::apply_S_slot(fam, 1, Affine::constant(y), r);
          std::string w;
          if (!states_equal(l, r, &w, sch)) {
            sweep.fail("sample pair (" + x.str() + "," + y.str() + ") start (" +
                       std::to_string(i) + "," + std::to_string(j) + ") column " +
                       std::to_string(c) + " at " + w);
            return;
          }
        }
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

namespace {

CheckResult family_symmetry_impl(const SFamily<Rational>& fam, int samples,
                                 const std::string& name) {
  CheckResult res{name, "symmetry relation", true, ""};
  const IndexScheme& sch = fam.scheme();
  Rational sign(sch.cs == Case::orthogonal ? 1 : -1);
  for (int t = 0; t < samples && res.pass; ++t) {
    Rational x = sample_point(t);
    for (int i : sch.indices()) {
      for (int j : sch.indices()) {
        QMat at_x = fam.entry_matrix(i, j, Affine::constant(x));
        QMat at_mx = fam.entry_matrix(i, j, Affine::constant(-x));
        QMat tr = fam.entry_matrix(-j, -i, Affine::constant(-x));
        tr = mat_scale(std::move(tr), Rational(sch.theta(i, j)));
        // S^t(-u) = S(u) +- (S(u) - S(-u)) / (2u)
        QMat rhs = mat_sub(at_x, mat_scale(mat_sub(at_mx, at_x),
                                           sign * (Rational(2) * x).inv()));
        if (!mats_equal(tr, rhs)) {
          res.pass = false;
          res.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") at u = " + x.str();
          break;
        }
      }
      if (!res.pass) break;
    }
  }
  return res;
}

}  // namespace

CheckResult check_symmetry(const LieRep& rep, int samples) {
  EvalFamily<Rational> fam(rep);
  return family_symmetry_impl(fam, samples, "symmetry:" + rep.scheme().str());
}

CheckResult check_family_symmetry(const SFamily<Rational>& fam, int samples,
                                  const std::string& name) {
  return family_symmetry_impl(fam, samples, name);
}

CheckResult check_family_quaternary(const SFamily<Rational>& fam, int pairs,
                                    const std::string& name) {
  CheckResult res{name, "quaternary relation", true, ""};
  const IndexScheme& sch = fam.scheme();
  for (int t = 0; t < pairs && res.pass; ++t) {
    auto [x, y] = sample_pair(t);
    Rational inv_flip = (x - y).inv();
    Affine rt = Affine::constant(-(x + y));
    for (int i : sch.indices()) {
      for (int j : sch.indices()) {
        for (int c = 0; c < fam.dim() && res.pass; ++c) {
          State2 st = kernel::start_state(sch, {i, j}, unit_vec(fam.dim(), c));
          State2 l = kernel::apply_S_slot(fam, 1, Affine::constant(y), st);
          l = kernel::apply_Rt_slots(sch, 0, 1, rt, l);
          l = kernel::apply_S_slot(fam, 0, Affine::constant(x), l);
          l = apply_flip(sch, l, inv_flip);
          State2 r = apply_flip(sch, st, inv_flip);
          r = kernel::apply_S_slot(fam, 0, Affine::constant(x), r);
          r = kernel::apply_Rt_slots(sch, 0, 1, rt, r);
          r = kernel::apply_S_slot(fam, 1, Affine::constant(y), r);
          std::string w;
          if (!states_equal(l, r, &w, sch)) {
            res.pass = false;
            res.witness = "pair (" + x.str() + "," + y.str() + ") start (" +
                          std::to_string(i) + "," + std::to_string(j) + ") at " + w;
          }
        }
        if (!res.pass) break;
      }
      if (!res.pass) break;
    }
  }
  return res;
}

CheckResult check_comdef(const LieRep& rep, MinorRoute route) {
  CheckResult res{"comdef:" + rep.scheme().str(), "comatrix identity", true, ""};
  const IndexScheme& sch = rep.scheme();
  int N = sch.N;
  EvalFamily<Rational> fam(rep);
  int bl = minor_bound(N - 1, route) + 2;  // comatrix entry (alpha) times one S entry
  int br = minor_bound(N, route);
  int samples = bl + br + 1;
  SampleSweep sweep;
  parallel_for(samples, [&](long t) {
    if (!sweep.pass) return;
    Rational x = sample_point(static_cast<int>(t));
    int d = rep.dim();
    // comatrix entry matrices at x
    std::vector<std::vector<QMat>> hat(static_cast<size_t>(N),
                                       std::vector<QMat>(static_cast<size_t>(N)));
    for (int a : sch.indices()) {
      for (int b : sch.indices()) {
        QMat m(static_cast<size_t>(d), QVec(static_cast<size_t>(d), Rational(0)));
        for (int c = 0; c < d; ++c) {
          auto col = comatrix_entry_apply(fam, a, b, Affine::constant(x),
                                          unit_vec(d, c), route);
          for (int r = 0; r < d; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = col[static_cast<size_t>(r)];
        }
        hat[static_cast<size_t>(sch.pos(a))][static_cast<size_t>(sch.pos(b))] = std::move(m);
      }
    }
    auto smats = family_mats(fam, x - Rational(N - 1));
    QMat sdet_mat(static_cast<size_t>(d), QVec(static_cast<size_t>(d), Rational(0)));
    for (int c = 0; c < d; ++c) {
      auto col = sdet_apply(fam, Affine::constant(x), unit_vec(d, c), route);
      for (int r = 0; r < d; ++r) sdet_mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = col[static_cast<size_t>(r)];
    }
    for (int a = 0; a < N && sweep.pass; ++a) {
      for (int c = 0; c < N; ++c) {
        QMat acc(static_cast<size_t>(d), QVec(static_cast<size_t>(d), Rational(0)));
        for (int b = 0; b < N; ++b)
          acc = mat_add(std::move(acc),
                        mat_mul(hat[static_cast<size_t>(a)][static_cast<size_t>(b)],
                                smats[static_cast<size_t>(b)][static_cast<size_t>(c)]));
        const QMat& want = a == c ? sdet_mat
                                  : QMat(static_cast<size_t>(d),
                                         QVec(static_cast<size_t>(d), Rational(0)));
        if (!mats_equal(acc, want)) {
          sweep.fail("block (" + std::to_string(sch.index_at(a)) + "," +
                     std::to_string(sch.index_at(c)) + ") at u = " + x.str());
          break;
        }
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

CheckResult check_symsdet(const LieRep& rep, MinorRoute route) {
  CheckResult res{"symsdet:" + rep.scheme().str(), "determinant symmetry", true, ""};
  const IndexScheme& sch = rep.scheme();
  int b = minor_bound(sch.N, route) + 1;
  int samples = 2 * b + 1;
  EvalFamily<Rational> fam(rep);
  SampleSweep sweep;
  parallel_for(samples, [&](long t) {
    if (!sweep.pass) return;
    Rational x = sample_point(static_cast<int>(t));
    Rational y = Rational(sch.N - 1) - x;
    Rational al_x = alpha_value<Rational>(sch.cs, Rational(sch.n), Affine::constant(x));
    Rational al_y = alpha_value<Rational>(sch.cs, Rational(sch.n), Affine::constant(y));
    for (int c = 0; c < rep.dim(); ++c) {
      auto lhs = sdet_apply(fam, Affine::constant(x), unit_vec(rep.dim(), c), route);
      auto rhs = sdet_apply(fam, Affine::constant(y), unit_vec(rep.dim(), c), route);
      for (auto& v : lhs) v *= al_x.inv();
      for (auto& v : rhs) v *= al_y.inv();
      if (lhs != rhs) {
        sweep.fail("column " + std::to_string(c) + " at u = " + x.str());
        return;
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

CheckResult check_sdetav(const LieRep& rep, const std::vector<RatFunc>& hw,
                         MinorRoute route) {
  CheckResult res{"sdetav:" + rep.scheme().str(), "determinant eigenvalue", true, ""};
  const IndexScheme& sch = rep.scheme();
  int N = sch.N, n = sch.n;
  RatFunc scalar = alpha_ratfunc(sch.cs, Rational(n));
  for (int i = 1; i <= n; ++i) {
    const RatFunc& mu = hw[static_cast<size_t>(i - 1)];
    scalar = scalar * mu.compose_affine(-1, Rational(i - 1)) *
             mu.compose_affine(1, Rational(i - N));
  }
  int bl = minor_bound(N, route);
  int br = 2 * n + 1;
  int samples = bl + br + 1;
  EvalFamily<Rational> fam(rep);
  SampleSweep sweep;
  parallel_for(samples, [&](long t) {
    if (!sweep.pass) return;
    Rational x = sample_point(static_cast<int>(t));
    Rational sc = scalar.eval(x);
    for (int c = 0; c < rep.dim(); ++c) {
      auto got = sdet_apply(fam, Affine::constant(x), unit_vec(rep.dim(), c), route);
      for (int r = 0; r < rep.dim(); ++r) {
        Rational want = r == c ? sc : Rational(0);
        if (got[static_cast<size_t>(r)] != want) {
          sweep.fail("column " + std::to_string(c) + " at u = " + x.str());
          return;
        }
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

CheckResult check_sklmu(const LieRep& rep, const HighestWeight& lam, MinorRoute route) {
  CheckResult res{"sklmu:" + rep.scheme().str(), "nested minor eigenvalue", true, ""};
  const IndexScheme& sch = rep.scheme();
  if (!sch.symplectic()) throw Error("nested minor eigenvalue check is symplectic-only");
  QVec xi = highest_vector_of(rep, lam);
  auto hw = eval_hw(lam);
  for (int k = 1; k <= sch.n && res.pass; ++k) {
    std::vector<int> big_idx, small_idx;
    for (int i = -k + 1; i <= k; ++i)
      if (i != 0) big_idx.push_back(i);
    for (int i = -k + 1; i <= k - 1; ++i)
      if (i != 0) small_idx.push_back(i);
    const RatFunc& mu = hw[static_cast<size_t>(k - 1)];
    int bl = minor_bound(static_cast<int>(big_idx.size()), route);
    int br = minor_bound(std::max<int>(1, static_cast<int>(small_idx.size())), route) + 2;
    int samples = bl + br + 1;
    for (int t = 0; t < samples; ++t) {
      Rational x = sample_point(t);
      auto lhs = minor_apply(EvalFamily<Rational>(rep), big_idx, big_idx,
                             Affine::constant(x), xi, route);
      QVec rhs;
      if (small_idx.empty()) {
        rhs = xi;
      } else {
        rhs = minor_apply(EvalFamily<Rational>(rep), small_idx, small_idx,
                          Affine::constant(x), xi, route);
      }
      Rational muval = mu.eval(x - Rational(2 * k - 2));
      for (auto& v : rhs) v *= muval;
      if (lhs != rhs) {
        res.pass = false;
        res.witness = "k = " + std::to_string(k) + " at u = " + x.str();
        break;
      }
    }
  }
  return res;
}

CheckResult check_sdetcirc(const LieRep& rep) {
  CheckResult res{"sdetcirc:" + rep.scheme().str(), "determinant under inversion map", true, ""};
  const IndexScheme& sch = rep.scheme();
  EvalFamily<Rational> fam(rep);
  InverseFamily<Rational> wfam(fam);
  // sdet entries over W have numerator/denominator degree bounded by the
  // adjugate of the (N dim) spectral matrix per factor.
  int bw = sch.N * (sch.N * rep.dim() + 1) + sch.N * (sch.N - 1) / 2;
  int bl = minor_bound(sch.N, MinorRoute::formula);
  int samples = bw + bl + 1;
  SampleSweep sweep;
  parallel_for(samples, [&](long t) {
    if (!sweep.pass) return;
    Rational x = sample_point(static_cast<int>(t));
    Rational y = Rational(sch.N, 2) - Rational(1) - x;  // -u + N/2 - 1
    for (int c = 0; c < rep.dim(); ++c) {
      auto w = sdet_apply(wfam, Affine::constant(y), unit_vec(rep.dim(), c),
                          MinorRoute::chain);
      auto got = sdet_apply(fam, Affine::constant(x), w, MinorRoute::formula);
      for (int r = 0; r < rep.dim(); ++r) {
        Rational want = r == c ? Rational(1) : Rational(0);
        if (got[static_cast<size_t>(r)] != want) {
          sweep.fail("column " + std::to_string(c) + " at u = " + x.str());
          return;
        }
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

CheckResult check_varpi_involutive(const LieRep& rep, int samples) {
  CheckResult res{"varpi-involutive:" + rep.scheme().str(), "inversion map involutive", true, ""};
  EvalFamily<Rational> fam(rep);
  InverseFamily<Rational> w1(fam);
  InverseFamily<Rational> w2(static_cast<const SFamily<Rational>&>(w1));
  const IndexScheme& sch = rep.scheme();
  for (int t = 0; t < samples && res.pass; ++t) {
    Rational x = sample_point(t);
    for (int i : sch.indices()) {
      for (int j : sch.indices()) {
        QMat a = fam.entry_matrix(i, j, Affine::constant(x));
        QMat b = w2.entry_matrix(i, j, Affine::constant(x));
        if (!mats_equal(a, b)) {
          res.pass = false;
          res.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") at u = " + x.str();
          break;
        }
      }
      if (!res.pass) break;
    }
  }
  return res;
}

CheckResult check_sylvester_sdet(const LieRep& rep, int m, MinorRoute inner) {
  const IndexScheme& sch = rep.scheme();
  CheckResult res{"sylvester-sdet:" + sch.str() + ":m=" + std::to_string(m),
                  "Sylvester determinant factorization", true, ""};
  int N = sch.N;
  int M = sch.has_zero() ? 2 * m + 1 : 2 * m;
  int K = N - M;
  int entry_bound = minor_bound(M + 1, inner) + 1;
  int bl = K * (entry_bound + 1) + K * (K - 1) / 2;
  int br = K + minor_bound(N, MinorRoute::formula) + (K - 1) * (minor_bound(M, inner) + 1);
  int samples = bl + br + 1;
  SampleSweep sweep;
  parallel_for(samples, [&](long t) {
    if (!sweep.pass) return;
    Rational x = sample_point(static_cast<int>(t));
    EvalFamily<Rational> fam(rep);
    SharpFamily<Rational> sharp(fam, m, /*with_alpha=*/true, inner);
    SubFamilyBB<Rational> bb(fam, m);
    Rational half_m = Rational(M, 2);
    // alpha(u) = prod_j alpha_{-m}(u - j), j = 0..K-1
    Rational al(1);
    for (int j = 0; j < K; ++j)
      al *= alpha_value<Rational>(sch.cs, Rational(-m), Affine::constant(x - Rational(j)));
    for (int c = 0; c < rep.dim(); ++c) {
      auto lhs = sdet_apply(sharp, Affine::constant(x), unit_vec(rep.dim(), c),
                            MinorRoute::chain);
      // rhs: alpha(u) sdet S(u + M/2) applied after the S_BB determinant chain
      QVec v = unit_vec(rep.dim(), c);
      for (int j = K - 1; j >= 1; --j)
        v = sdet_apply(bb, Affine::constant(x + half_m - Rational(j)), v, inner);
      v = sdet_apply(fam, Affine::constant(x + half_m), v, MinorRoute::formula);
      for (auto& vv : v) vv *= al;
      if (lhs != v) {
        sweep.fail("column " + std::to_string(c) + " at u = " + x.str());
        return;
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

CheckResult check_nnentry(const LieRep& rep, int m, MinorRoute inner) {
  const IndexScheme& sch = rep.scheme();
  CheckResult res{"nnentry:" + sch.str() + ":m=" + std::to_string(m),
                  "Sylvester comatrix factorization", true, ""};
  int N = sch.N;
  int M = sch.has_zero() ? 2 * m + 1 : 2 * m;
  int K = N - M;
  int entry_bound = minor_bound(M + 1, inner) + 1;
  int bl = (K - 1) * (entry_bound + 1) + K * (K - 1) / 2;
  int br = minor_bound(N - 1, MinorRoute::formula) + 2 + (K - 2 > 0 ? K - 2 : 0) * (minor_bound(M, inner) + 1);
  int samples = bl + br + 1;
  SampleSweep sweep;
  parallel_for(samples, [&](long t) {
    if (!sweep.pass) return;
    Rational x = sample_point(static_cast<int>(t));
    EvalFamily<Rational> fam(rep);
    SharpFamily<Rational> sharp(fam, m, /*with_alpha=*/false, inner);
    SubFamilyBB<Rational> bb(fam, m);
    const IndexScheme& small = sharp.scheme();
    std::vector<int> sidx = small.indices();
    Rational half_m = Rational(M, 2);
    for (int i = 1; i <= K && sweep.pass; ++i) {
      for (int j = 1; j <= K; ++j) {
        int ai = sidx[static_cast<size_t>(i - 1)], aj = sidx[static_cast<size_t>(j - 1)];
        // comatrix entry of S# through auxiliary minors:
        // hat sigma_{a_i a_j}(u) = (-1)^{K-i} aux^{a_1..a_K}_{a_1..^a_i..a_K, a_j}(u)
        std::vector<int> lower;
        for (int tt = 1; tt <= K; ++tt)
          if (tt != i) lower.push_back(sidx[static_cast<size_t>(tt - 1)]);
        for (int c = 0; c < rep.dim(); ++c) {
          auto lhs = aux_minor_apply(sharp, sidx, lower, aj, Affine::constant(x),
                                     unit_vec(rep.dim(), c));
          if ((K - i) % 2 == 1)
            for (auto& v : lhs) v = -v;
          // rhs: hat s_{A(ai) A(aj)}(u + M/2) * prod_{j=1}^{K-2} sdet_BB(u + M/2 - j)
          QVec v = unit_vec(rep.dim(), c);
          for (int jj = K - 2; jj >= 1; --jj)
            v = sdet_apply(bb, Affine::constant(x + half_m - Rational(jj)), v, inner);
          v = comatrix_entry_apply(fam, sharp.to_big(ai), sharp.to_big(aj),
                                   Affine::constant(x + half_m), v, MinorRoute::formula);
          if (lhs != v) {
            sweep.fail("entry (" + std::to_string(ai) + "," + std::to_string(aj) +
                       ") column " + std::to_string(c) + " at u = " + x.str());
            return;
          }
        }
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

CheckResult check_sharp_relations(const LieRep& rep, int m, int samples) {
  EvalFamily<Rational> fam(rep);
  SharpFamily<Rational> sharp(fam, m, /*with_alpha=*/true, MinorRoute::formula);
  std::string base = "sharp:" + rep.scheme().str() + ":m=" + std::to_string(m);
  CheckResult sym = check_family_symmetry(sharp, samples, base + ":symmetry");
  if (!sym.pass) return sym;
  CheckResult quat = check_family_quaternary(sharp, samples, base + ":quaternary");
  if (!quat.pass) return quat;
  CheckResult res{base, "Sylvester image relations", true, ""};
  return res;
}

CheckResult check_dual_relations(const LieRep& rep, int m, int samples) {
  EvalFamily<Rational> fam(rep);
  DualFamily<Rational> dual(fam, m, MinorRoute::chain);
  std::string base = "dual:" + rep.scheme().str() + ":m=" + std::to_string(m);
  CheckResult sym = check_family_symmetry(dual, samples, base + ":symmetry");
  if (!sym.pass) return sym;
  CheckResult quat = check_family_quaternary(dual, samples, base + ":quaternary");
  if (!quat.pass) return quat;
  return CheckResult{base, "dual Sylvester image relations", true, ""};
}

CheckResult check_homcoin(const LieRep& rep, int samples) {
  const IndexScheme& sch = rep.scheme();
  CheckResult res{"homcoin:" + sch.str(), "corner case of the Sylvester map", true, ""};
  int n = sch.n, m = n - 1;
  EvalFamily<Rational> fam(rep);
  SharpFamily<Rational> sharp(fam, m, /*with_alpha=*/true, MinorRoute::formula);
  bool sympl = sch.symplectic();
  for (int t = 0; t < samples && res.pass; ++t) {
    Rational x = sample_point(t);
    for (int a : {-1, 1}) {
      for (int b : {-1, 1}) {
        int big_a = a > 0 ? n : -n, big_b = b > 0 ? n : -n;
        QMat lhs = sharp.entry_matrix(a, b, Affine::constant(x));
        QMat rhs(static_cast<size_t>(rep.dim()), QVec(static_cast<size_t>(rep.dim()), Rational(0)));
        Rational al = alpha_value<Rational>(sch.cs, Rational(n), Affine::constant(x));
        for (int c = 0; c < rep.dim(); ++c) {
          auto col = comatrix_entry_apply(fam, big_a, big_b,
                                          Affine::constant(Rational(sch.N, 2) - 1 - x),
                                          unit_vec(rep.dim(), c), MinorRoute::formula);
          for (int r = 0; r < rep.dim(); ++r) rhs[static_cast<size_t>(r)][static_cast<size_t>(c)] = col[static_cast<size_t>(r)] * al;
        }
        if (!sympl) rhs = mat_scale(std::move(rhs), Rational(a * b > 0 ? 1 : -1));
        if (!mats_equal(lhs, rhs)) {
          res.pass = false;
          res.witness = "entry (" + std::to_string(a) + "," + std::to_string(b) +
                        ") at u = " + x.str();
          break;
        }
      }
      if (!res.pass) break;
    }
  }
  return res;
}

CheckResult check_minor_routes(const LieRep& rep, int max_k, int stride) {
  const IndexScheme& sch = rep.scheme();
  CheckResult res{"minor-routes:" + sch.str(), "explicit minor formula", true, ""};
  std::vector<int> idx = sch.indices();
  int N = sch.N;
  // enumerate all (a_1..a_M, b) tuples, thinned by `stride`
  std::vector<std::pair<std::vector<int>, int>> shapes;
  for (int M = 2; M <= std::min(max_k, N); ++M) {
    long total = 1;
    for (int i = 0; i <= M; ++i) total *= N;
    for (long code = 0; code < total; ++code) {
      long c = code;
      std::vector<int> a(static_cast<size_t>(M));
      for (int i = 0; i < M; ++i) {
        a[static_cast<size_t>(i)] = idx[static_cast<size_t>(c % N)];
        c /= N;
      }
      int b = idx[static_cast<size_t>(c % N)];
      shapes.emplace_back(std::move(a), b);
    }
  }
  if (stride > 1) {
    std::vector<std::pair<std::vector<int>, int>> thin;
    for (size_t i = 0; i < shapes.size(); i += static_cast<size_t>(stride))
      thin.push_back(shapes[i]);
    shapes = std::move(thin);
  }
  SampleSweep sweep;
  parallel_for(static_cast<long>(shapes.size()), [&](long si) {
    if (!sweep.pass) return;
    const auto& [a_list, b] = shapes[static_cast<size_t>(si)];
    int M = static_cast<int>(a_list.size());
    std::vector<int> upper, lower;
    for (int aa : a_list) upper.push_back(-aa);
    lower = a_list;
    lower.back() = b;
    EvalFamily<Rational> fam(rep);
    int samples = minor_bound(M, MinorRoute::chain) + minor_bound(M, MinorRoute::formula) + 1;
    for (int t = 0; t < samples; ++t) {
      Rational x = sample_point(t);
      for (int c = 0; c < rep.dim(); ++c) {
        auto via_chain = minor_apply_chain(fam, upper, lower, Affine::constant(x),
                                           unit_vec(rep.dim(), c));
        auto via_formula = minsf_apply(fam, a_list, b, Affine::constant(x),
                                       unit_vec(rep.dim(), c));
        if (via_chain != via_formula) {
          std::ostringstream os;
          os << "shape a=(";
          for (size_t q = 0; q < a_list.size(); ++q) os << (q ? "," : "") << a_list[q];
          os << ") b=" << b << " at u = " << x.str();
          sweep.fail(os.str());
          return;
        }
      }
    }
  });
  res.pass = sweep.pass;
  res.witness = sweep.witness;
  return res;
}

CheckResult check_aux_identities(const LieRep& rep) {
  const IndexScheme& sch = rep.scheme();
  CheckResult res{"aux-minors:" + sch.str(), "auxiliary minor identities", true, ""};
  EvalFamily<Rational> fam(rep);
  std::vector<int> idx = sch.indices();
  int N = sch.N;
  auto fail = [&](const std::string& w) {
    res.pass = false;
    res.witness = w;
  };
  // expansion: s^{a}_{b}(u) = sum_c aux^{a}_{b_1..b_{k-1},c}(u) s_{c b_k}(u-k+1)
  for (int k = 2; k <= std::min(3, N) && res.pass; ++k) {
    std::vector<int> a(idx.begin(), idx.begin() + k);
    std::vector<int> b = a;
    int bound = minor_bound(k, MinorRoute::chain) + minor_bound(k, MinorRoute::chain) + 2;
    for (int t = 0; t < bound && res.pass; ++t) {
      Rational x = sample_point(t);
      for (int c0 = 0; c0 < rep.dim(); ++c0) {
        QVec v = unit_vec(rep.dim(), c0);
        auto want = minor_apply_chain(fam, a, b, Affine::constant(x), v);
        QVec got(static_cast<size_t>(rep.dim()), Rational(0));
        std::vector<int> blow(b.begin(), b.end() - 1);
        for (int c : idx) {
          QVec w(static_cast<size_t>(rep.dim()), Rational(0));
          fam.entry_apply_add(c, b.back(), Affine::constant(x - Rational(k - 1)), v, w);
          auto part = aux_minor_apply(fam, a, blow, c, Affine::constant(x), w);
          for (int r = 0; r < rep.dim(); ++r) got[static_cast<size_t>(r)] += part[static_cast<size_t>(r)];
        }
        if (got != want) {
          fail("expansion at k = " + std::to_string(k) + ", u = " + x.str());
          break;
        }
      }
    }
  }
  // vanishing and collapse of auxiliary minors with an outside index
  if (res.pass && N >= 4) {
    std::vector<int> a = {idx[0], idx[1]};
    std::vector<int> blow = {idx[1]};
    // c outside {a_1} and {-b_1}, c != a_2 -> zero
    for (int c : idx) {
      if (c == idx[0] || c == idx[1] || c == -idx[1]) continue;
      for (int t = 0; t < 5 && res.pass; ++t) {
        Rational x = sample_point(t);
        for (int c0 = 0; c0 < rep.dim(); ++c0) {
          auto z = aux_minor_apply(fam, a, blow, c, Affine::constant(x),
                                   unit_vec(rep.dim(), c0));
          if (!kernel::all_zero(z)) {
            fail("outside-index vanishing at c = " + std::to_string(c));
            break;
          }
        }
      }
    }
    // c = a_k collapse onto the smaller minor
    for (int t = 0; t < 8 && res.pass; ++t) {
      Rational x = sample_point(t);
      int c = idx[2];  // not a_1 = idx[0], not -b_1 = -idx[1] when distinct
      if (c == -idx[1]) continue;
      std::vector<int> atop = {idx[0], c};
      for (int c0 = 0; c0 < rep.dim(); ++c0) {
        auto lhs = aux_minor_apply(fam, atop, blow, c, Affine::constant(x),
                                   unit_vec(rep.dim(), c0));
        auto rhs = minor_apply_chain(fam, std::vector<int>{idx[0]}, blow,
                                     Affine::constant(x), unit_vec(rep.dim(), c0));
        if (lhs != rhs) {
          fail("collapse at u = " + x.str());
          break;
        }
      }
    }
  }
  return res;
}

CheckResult check_centrality(const LieRep& rep, int pairs) {
  const IndexScheme& sch = rep.scheme();
  CheckResult res{"centrality:" + sch.str(), "central minor coefficients", true, ""};
  EvalFamily<Rational> fam(rep);
  std::vector<int> idx = sch.indices();
  // the full minor (determinant) commutes with every entry
  for (int t = 0; t < pairs && res.pass; ++t) {
    auto [x, y] = sample_pair(t);
    for (int i : idx) {
      for (int j : idx) {
        for (int c = 0; c < rep.dim(); ++c) {
          QVec v = unit_vec(rep.dim(), c);
          QVec a = fam.entry_apply(i, j, Affine::constant(x),
                                   sdet_apply(fam, Affine::constant(y), v,
                                              MinorRoute::formula));
          QVec b = sdet_apply(fam, Affine::constant(y),
                              fam.entry_apply(i, j, Affine::constant(x), v),
                              MinorRoute::formula);
          if (a != b) {
            res.pass = false;
            res.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") against the determinant";
            break;
          }
        }
        if (!res.pass) break;
      }
      if (!res.pass) break;
    }
  }
  // a proper minor instance with the index hypothesis satisfied
  if (res.pass && sch.N >= 4 && !sch.has_zero()) {
    std::vector<int> a = {-1, 1}, b = {-1, 1};
    for (int t = 0; t < pairs && res.pass; ++t) {
      auto [x, y] = sample_pair(t);
      for (int c = 0; c < rep.dim(); ++c) {
        QVec v = unit_vec(rep.dim(), c);
        QVec l = fam.entry_apply(-1, 1, Affine::constant(x),
                                 minor_apply_chain(fam, a, b, Affine::constant(y), v));
        QVec r = minor_apply_chain(fam, a, b, Affine::constant(y),
                                   fam.entry_apply(-1, 1, Affine::constant(x), v));
        if (l != r) {
          res.pass = false;
          res.witness = "entry (-1,1) against the (-1,1)-minor";
          break;
        }
      }
    }
  }
  return res;
}

}  // namespace ty
