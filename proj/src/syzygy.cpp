#include "jacsyz/syzygy.hpp"

#include <algorithm>
#include <type_traits>

#include "jacsyz/kernels.hpp"
#include "jacsyz/modular.hpp"
#include "jacsyz/primes.hpp"
#include "jacsyz/reference.hpp"

namespace jacsyz {

namespace {

using u64 = std::uint64_t;
using kernels::Reduction;

template <Field F>
constexpr bool is_rational = std::is_same_v<F, RationalField>;

struct WorkMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u64> data;

  WorkMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  u64& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

struct Echelon {
  std::vector<u64> buf;
  std::vector<std::size_t> pivots;
};

Echelon eliminate(const WorkMatrix& m, u64 p, Reduction mode) {
  Echelon e{m.data, {}};
  e.pivots = kernels::echelon_parallel(e.buf, m.rows, m.cols, p, mode);
  return e;
}

/// Indices of the `extra` columns that are pivots of [base | extra], i.e. a
/// maximal subset independent modulo the column span of base.
std::vector<std::size_t> independent_extra(const WorkMatrix& base, const std::vector<std::vector<u64>>& extra,
                                           u64 p) {
  WorkMatrix m(base.rows, base.cols + extra.size());
  for (std::size_t i = 0; i < base.rows; ++i) {
    std::copy_n(base.data.begin() + i * base.cols, base.cols, m.data.begin() + i * m.cols);
    for (std::size_t j = 0; j < extra.size(); ++j) m.at(i, base.cols + j) = extra[j][i];
  }
  std::vector<std::size_t> out;
  for (auto c : eliminate(m, p, Reduction::Forward).pivots)
    if (c >= base.cols) out.push_back(c - base.cols);
  return out;
}

/// Raised inside a sweep when the data contradict the structure theory. Over
/// Q this may be an unlucky working prime, so the sweep is retried first.
struct SweepFailure {
  bool structural;
  std::string what;
};

[[noreturn]] void fail(bool structural, std::string what) { throw SweepFailure{structural, std::move(what)}; }

template <Field F>
u64 to_work(const typename F::Elem& e, u64 w) {
  if constexpr (is_rational<F>) {
    return modarith::reduce(e, w);
  } else {
    return e;
  }
}

template <Field F>
std::vector<u64> to_work(std::span<const typename F::Elem> v, u64 w) {
  std::vector<u64> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_work<F>(v[i], w);
  return out;
}

int default_kmax(int d) { return d >= 3 ? 2 * d - 4 : d - 1; }

/// Exact kernel vectors of `exact` at the non-pivot columns `cols` (ascending),
/// given the working-field reduced echelon form and its kernel vectors.
template <Field F>
std::vector<Vector<F>> lift_kernel(const DenseMatrix<F>& exact, const std::vector<std::size_t>& cols,
                                   const std::vector<std::size_t>& work_free,
                                   const std::vector<std::vector<u64>>& work_kernel) {
  std::vector<Vector<F>> out;
  if constexpr (is_rational<F>) {
    (void)work_free;
    (void)work_kernel;
    out = modular::certified_echelon(modular::to_integer_rows(exact), cols).kernel;
  } else {
    for (auto c : cols) {
      auto it = std::lower_bound(work_free.begin(), work_free.end(), c);
      out.push_back(work_kernel[static_cast<std::size_t>(it - work_free.begin())]);
    }
  }
  for (auto& v : out) normalize_leading_one(exact.field(), v);
  return out;
}

std::vector<std::size_t> free_columns(std::size_t cols, const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (next < pivots.size() && pivots[next] == j) {
      ++next;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

/// One degree-by-degree pass with a fixed working prime.
template <Field F>
class Sweep {
 public:
  Sweep(const JacobianData<F>& jd, int kmax, u64 w) : jd_(jd), d_(jd.degree()), w_(w) {
    res_.kmax = kmax;
    for (int i = 0; i < 3; ++i) grad_w_[i] = to_work<F>(jd.gradient(i).coeffs(), w);
  }

  Resolution<F> run() {
    const int kcap = std::max(res_.kmax, 3 * d_) + 3;
    for (int k = 0;; ++k) {
      if (k > kcap) fail(true, "relations among the syzygy generators do not close up; f is not reduced");
      step(k);
      if (k >= res_.kmax && res_.relations.size() + 2 == res_.generators.size()) break;
    }
    return std::move(res_);
  }

 private:
  std::size_t gen_count_below(int k) const {
    std::size_t n = 0;
    while (n < res_.generators.size() && res_.generators[n].degree() < k) ++n;
    return n;
  }

  /// Columns h * rho_j for generators of degree < k; offsets[j] is the first
  /// column of generator j.
  WorkMatrix generator_multiples(int k, std::vector<std::size_t>& offsets) const {
    const std::size_t ng = gen_count_below(k);
    offsets.assign(ng + 1, 0);
    for (std::size_t j = 0; j < ng; ++j) offsets[j + 1] = offsets[j] + dim_forms(k - res_.generators[j].degree());
    const std::size_t n = dim_forms(k);
    WorkMatrix m(3 * n, offsets[ng]);
    for (std::size_t j = 0; j < ng; ++j) {
      const int dj = res_.generators[j].degree();
      const std::size_t nj = dim_forms(dj);
      auto src = monomial_basis(dj);
      auto hs = monomial_basis(k - dj);
      for (std::size_t h = 0; h < hs.size(); ++h)
        for (int part = 0; part < 3; ++part)
          for (std::size_t i = 0; i < nj; ++i) {
            u64 c = gens_w_[j][part * nj + i];
            if (c) m.at(part * n + monomial_index(src[i] * hs[h]), offsets[j] + h) = c;
          }
    }
    return m;
  }

  DenseMatrix<F> generator_multiples_exact(int k) const {
    const std::size_t ng = gen_count_below(k);
    std::vector<Vector<F>> cols;
    for (std::size_t j = 0; j < ng; ++j)
      append_monomial_multiples(res_.generators[j], k - res_.generators[j].degree(), cols);
    return DenseMatrix<F>::from_columns(jd_.field(), 3 * dim_forms(k), cols);
  }

  /// Columns h * relation_i for relations of degree < k, in the row layout
  /// of generator_multiples(k).
  WorkMatrix relation_multiples(int k, const std::vector<std::size_t>& offsets) const {
    std::size_t ncols = 0;
    for (const auto& rel : res_.relations)
      if (rel.degree < k) ncols += dim_forms(k - rel.degree);
    WorkMatrix m(offsets.back(), ncols);
    std::size_t col = 0;
    for (std::size_t r = 0; r < res_.relations.size(); ++r) {
      const auto& rel = res_.relations[r];
      if (rel.degree >= k) continue;
      auto hs = monomial_basis(k - rel.degree);
      for (std::size_t j = 0; j < rel.coeffs.size(); ++j) {
        auto src = monomial_basis(rel.coeffs[j].degree());
        const auto& cw = rels_w_[r][j];
        for (std::size_t h = 0; h < hs.size(); ++h)
          for (std::size_t i = 0; i < src.size(); ++i)
            if (cw[i]) m.at(offsets[j] + monomial_index(src[i] * hs[h]), col + h) = cw[i];
      }
      col += hs.size();
    }
    return m;
  }

  WorkMatrix jacobian_work(int k) const {
    const std::size_t n = dim_forms(k);
    WorkMatrix m(dim_forms(k + d_ - 1), 3 * n);
    auto src = monomial_basis(k);
    auto gb = monomial_basis(d_ - 1);
    for (int part = 0; part < 3; ++part)
      for (std::size_t j = 0; j < src.size(); ++j)
        for (std::size_t i = 0; i < gb.size(); ++i)
          if (grad_w_[part][i]) m.at(monomial_index(src[j] * gb[i]), part * n + j) = grad_w_[part][i];
    return m;
  }

  void step(int k) {
    std::vector<std::size_t> offsets;
    WorkMatrix g = generator_multiples(k, offsets);
    Echelon ge = eliminate(g, w_, Reduction::Full);
    const long rank_g = static_cast<long>(ge.pivots.size());

    find_relations(k, g, ge, offsets);

    WorkMatrix jm = jacobian_work(k);
    const long ar_up = static_cast<long>(jm.cols) - static_cast<long>(eliminate(jm, w_, Reduction::Forward).pivots.size());
    const long new_gens = ar_up - rank_g;
    if (new_gens < 0) fail(false, "more independent generator multiples than syzygies in degree " + std::to_string(k));
    if (new_gens > 0) {
      if (k > res_.kmax)
        fail(true, "minimal syzygy generator above degree " + std::to_string(res_.kmax) + "; f is not reduced");
      find_generators(k, g, jm, static_cast<std::size_t>(new_gens));
    }
    res_.ar.push_back(ar_up);

    long expected = 0;
    for (const auto& s : res_.generators) expected += static_cast<long>(dim_forms(k - s.degree()));
    for (const auto& rel : res_.relations) expected -= static_cast<long>(dim_forms(k - rel.degree));
    if (expected != ar_up) fail(true, "Hilbert bookkeeping fails in degree " + std::to_string(k));
  }

  void find_relations(int k, const WorkMatrix& g, const Echelon& ge, const std::vector<std::size_t>& offsets) {
    WorkMatrix nm = relation_multiples(k, offsets);
    const long rank_n = static_cast<long>(eliminate(nm, w_, Reduction::Forward).pivots.size());
    if (rank_n != static_cast<long>(nm.cols)) fail(true, "relation module is not free in degree " + std::to_string(k));
    const long new_rels = static_cast<long>(g.cols) - static_cast<long>(ge.pivots.size()) - rank_n;
    if (new_rels < 0) fail(false, "negative relation count in degree " + std::to_string(k));
    if (new_rels == 0) return;

    auto free = free_columns(g.cols, ge.pivots);
    auto kern = kernels::kernel_from_rref(ge.buf, g.cols, ge.pivots, w_);
    auto pick = independent_extra(nm, kern, w_);
    if (static_cast<long>(pick.size()) != new_rels) fail(false, "relation selection mismatch");
    std::vector<std::size_t> cols;
    for (auto i : pick) cols.push_back(free[i]);
    DenseMatrix<F> exact_g = is_rational<F> ? generator_multiples_exact(k) : DenseMatrix<F>(jd_.field(), 0, 0);
    auto vecs = lift_kernel(exact_g, cols, free, kern);

    std::vector<std::vector<u64>> lifted_w;
    const std::size_t ng = offsets.size() - 1;
    for (auto& v : vecs) {
      Relation<F> rel{k, {}};
      std::vector<std::vector<u64>> blocks;
      for (std::size_t j = 0; j < ng; ++j) {
        Vector<F> c(v.begin() + offsets[j], v.begin() + offsets[j + 1]);
        blocks.push_back(to_work<F>(std::span<const typename F::Elem>(c), w_));
        rel.coeffs.emplace_back(jd_.field(), k - res_.generators[j].degree(), std::move(c));
      }
      verify_relation(rel);
      lifted_w.push_back(to_work<F>(std::span<const typename F::Elem>(v), w_));
      res_.relations.push_back(std::move(rel));
      rels_w_.push_back(std::move(blocks));
    }
    if (is_rational<F> && independent_extra(nm, lifted_w, w_).size() != vecs.size())
      fail(false, "lifted relations are dependent modulo the working prime");
  }

  void verify_relation(const Relation<F>& rel) const {
    for (int part = 0; part < 3; ++part) {
      HomogPoly<F> acc(jd_.field(), rel.degree);
      for (std::size_t j = 0; j < rel.coeffs.size(); ++j)
        acc = acc + mul(rel.coeffs[j], res_.generators[j].component(part));
      if (!acc.is_zero()) throw InternalError("lifted relation does not vanish");
    }
  }

  void find_generators(int k, const WorkMatrix& g, const WorkMatrix& jm, std::size_t count) {
    Echelon je = eliminate(jm, w_, Reduction::Full);
    auto free = free_columns(jm.cols, je.pivots);
    auto kern = kernels::kernel_from_rref(je.buf, jm.cols, je.pivots, w_);
    auto pick = independent_extra(g, kern, w_);
    if (pick.size() != count) fail(false, "generator selection mismatch in degree " + std::to_string(k));
    std::vector<std::size_t> cols;
    for (auto i : pick) cols.push_back(free[i]);
    DenseMatrix<F> exact_j = is_rational<F> ? jacobian_matrix(jd_, k) : DenseMatrix<F>(jd_.field(), 0, 0);
    auto vecs = lift_kernel(exact_j, cols, free, kern);

    std::vector<std::vector<u64>> lifted_w;
    for (auto& v : vecs) {
      auto s = SyzygyTriple<F>::from_coords(jd_.field(), k, v);
      if (!is_syzygy(jd_, s)) throw InternalError("lifted syzygy does not annihilate the gradient");
      lifted_w.push_back(to_work<F>(std::span<const typename F::Elem>(v), w_));
      res_.generators.push_back(std::move(s));
    }
    if constexpr (is_rational<F>) {
      // rank_W [G | lifted] must reach the upper bound ar_up for dim AR(f)_k.
      if (independent_extra(g, lifted_w, w_).size() != count)
        fail(false, "lifted generators do not reach the syzygy dimension modulo the working prime");
    }
    for (auto& v : lifted_w) gens_w_.push_back(std::move(v));
  }

  const JacobianData<F>& jd_;
  int d_;
  u64 w_;
  std::array<std::vector<u64>, 3> grad_w_;
  std::vector<std::vector<u64>> gens_w_;
  std::vector<std::vector<std::vector<u64>>> rels_w_;
  Resolution<F> res_;
};

long dim_l(int k) { return static_cast<long>(dim_forms(k)); }

}  // namespace

template <Field F>
Resolution<F> resolve(const JacobianData<F>& jd, const AnalysisOptions& opts) {
  const int kmax = opts.kmax ? *opts.kmax : default_kmax(jd.degree());
  if (kmax < 0) throw DomainError("generator ceiling must be non-negative");
  auto raise = [](const SweepFailure& e) -> Resolution<F> {
    if (e.structural) throw StructureError(e.what);
    throw InternalError(e.what);
  };
  if constexpr (!is_rational<F>) {
    try {
      return Sweep<F>(jd, kmax, jd.field().modulus()).run();
    } catch (const SweepFailure& e) {
      return raise(e);
    }
  } else {
    constexpr std::size_t kAttempts = 4;
    std::optional<SweepFailure> last;
    for (std::size_t a = 0; a < kAttempts; ++a) {
      try {
        return Sweep<F>(jd, kmax, working_prime(a)).run();
      } catch (const SweepFailure& e) {
        last = e;
      } catch (const BadPrime& e) {
        last = SweepFailure{false, e.what()};
      }
    }
    return raise(*last);
  }
}

template <Field F>
std::vector<int> minimal_exponents(const JacobianData<F>& jd) {
  std::vector<int> out;
  for (const auto& s : resolve(jd).generators) out.push_back(s.degree());
  return out;
}

template <Field F>
RelationDegrees relation_degrees(const JacobianData<F>&, const Resolution<F>& res) {
  const std::size_t m = res.generators.size();
  if (m < 3) throw FreeCurve("a free curve has no relations among its syzygy generators");
  if (res.relations.size() + 2 != m) throw StructureError("relation count differs from m - 2");
  RelationDegrees out;
  for (const auto& r : res.relations) out.degrees.push_back(r.degree);
  std::sort(out.degrees.begin(), out.degrees.end());
  for (std::size_t j = 0; j < out.degrees.size(); ++j)
    out.epsilons.push_back(out.degrees[j] - res.generators[j + 2].degree());
  return out;
}

QuadraticInK resolution_polynomial(int d, const std::vector<int>& exponents, const std::vector<int>& relations) {
  // dim S_{k-s} = (k - s + 2)(k - s + 1) / 2 for k >= s - 2.
  QuadraticInK q;
  auto add = [&](long sign, long s) {
    q.c2 += sign;
    q.c1 += sign * (3 - 2 * s);
    q.c0 += sign * (2 - s) * (1 - s);
  };
  add(1, 0);
  add(-3, d - 1);
  for (int dj : exponents) add(1, d - 1 + dj);
  for (int e : relations) add(-1, d - 1 + e);
  return q;
}

int stable_degree(int d, const std::vector<int>& exponents, const std::vector<int>& relations) {
  int s = d - 1;
  for (int dj : exponents) s = std::max(s, d - 1 + dj);
  for (int e : relations) s = std::max(s, d - 1 + e);
  return std::max(0, s - 2);
}

namespace {

/// Resolution formula for dim AR(f)_k, valid in every degree once the
/// resolution is known.
long ar_from_resolution(int k, const std::vector<int>& exponents, const std::vector<int>& relations) {
  long v = 0;
  for (int dj : exponents) v += dim_l(k - dj);
  for (int e : relations) v -= dim_l(k - e);
  return v;
}

long tau_from_polynomial(int d, const std::vector<int>& exponents, const std::vector<int>& relations) {
  auto q = resolution_polynomial(d, exponents, relations);
  if (q.c2 != 0 || q.c1 != 0)
    throw StructureError("dim M(f)_k is not eventually constant; f is not reduced");
  return q.c0 / 2;
}

/// tau from two routes, with milnor(k) giving dim M(f)_k.
template <class Milnor>
long tau_two_ways(int d, const ResolutionSummary& s, Milnor&& milnor) {
  const long closed = tau_from_polynomial(d, s.exponents, s.relation_degrees);
  const int ks = stable_degree(d, s.exponents, s.relation_degrees);
  const long a = milnor(ks);
  const long b = milnor(ks + 1);
  if (a != closed || b != closed)
    throw ConsistencyError("stable Milnor dimension " + std::to_string(a) + " differs from the resolution value " +
                           std::to_string(closed));
  return closed;
}

template <class Milnor>
std::pair<std::optional<int>, int> thresholds_from(int d, const ResolutionSummary& s, Milnor&& milnor) {
  const int ks = stable_degree(d, s.exponents, s.relation_degrees);
  const int top = std::max(ks + 1, 3 * d - 5);
  std::optional<int> ct;
  for (int k = 0; k <= top; ++k) {
    if (milnor(k) != smooth_milnor_dim(d, k)) {
      ct = k - 1;
      break;
    }
  }
  if (!ct && s.tau != 0) throw ConsistencyError("Milnor algebra matches the smooth one although tau > 0");
  if (ct && s.tau == 0) throw ConsistencyError("smooth curve with a Milnor algebra differing from the smooth one");
  if (ct.has_value() != s.mdr_prime.has_value())
    throw ConsistencyError("coincidence threshold and the Koszul comparison disagree on smoothness");
  if (ct && *ct != d - 2 + *s.mdr_prime)
    throw ConsistencyError("coincidence threshold " + std::to_string(*ct) + " differs from d - 2 + mdr' = " +
                           std::to_string(d - 2 + *s.mdr_prime));
  int st = ks;
  while (st > 0 && milnor(st - 1) == s.tau) --st;
  return {ct, st};
}

template <Field F>
long koszul_dim_certified(const JacobianData<F>& jd, int k) {
  const int d = jd.degree();
  const int t = k - d + 1;
  if (t < 0) return 0;
  // For reduced f the Koszul map has kernel S * grad f, which bounds the rank.
  const long bound = 3 * dim_l(t) - dim_l(t - d + 1);
  auto m = koszul_matrix(jd, k);
  if constexpr (is_rational<F>) {
    for (std::size_t a = 0; a < 2; ++a) {
      try {
        const u64 w = working_prime(a);
        WorkMatrix wm(m.rows(), m.cols());
        for (std::size_t i = 0; i < wm.data.size(); ++i) wm.data[i] = modarith::reduce(m.entries()[i], w);
        if (static_cast<long>(eliminate(wm, w, Reduction::Forward).pivots.size()) == bound) return bound;
      } catch (const BadPrime&) {
      }
    }
  }
  return static_cast<long>(rank(m));
}

template <Field F>
std::vector<HomogPoly<F>> bourbaki_generators(const JacobianData<F>& jd, const Resolution<F>& res) {
  const F& k = jd.field();
  const auto& r1 = res.generators.front();
  auto x = HomogPoly<F>::variable(k, Variable::X);
  auto y = HomogPoly<F>::variable(k, Variable::Y);
  auto z = HomogPoly<F>::variable(k, Variable::Z);
  std::vector<HomogPoly<F>> out;
  for (std::size_t j = 1; j < res.generators.size(); ++j) {
    const auto& rj = res.generators[j];
    auto delta = mul(x, mul(r1.b, rj.c) - mul(r1.c, rj.b)) - mul(y, mul(r1.a, rj.c) - mul(r1.c, rj.a)) +
                 mul(z, mul(r1.a, rj.b) - mul(r1.b, rj.a));
    if (delta.is_zero()) continue;
    out.push_back(exact_divide(delta, jd.f));
  }
  return out;
}

/// dim I_k for the ideal generated by gens. The matrix has one row per
/// multiple, so over Q only the (small) left kernel is lifted.
template <Field F>
long ideal_dim(const std::vector<HomogPoly<F>>& gens, int k, const F& field) {
  std::vector<Vector<F>> rows;
  for (const auto& g : gens) {
    if (g.degree() > k) continue;
    auto src = monomial_basis(g.degree());
    for (const auto& h : monomial_basis(k - g.degree())) {
      Vector<F> row(dim_forms(k), field.zero());
      for (std::size_t i = 0; i < src.size(); ++i)
        if (!field.is_zero(g.coeffs()[i])) row[monomial_index(src[i] * h)] = g.coeffs()[i];
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  return static_cast<long>(rank(DenseMatrix<F>::from_rows(field, rows)));
}

}  // namespace

template <Field F>
long tjurina(const JacobianData<F>& jd, const ResolutionSummary& summary) {
  return tau_two_ways(jd.degree(), summary, [&](int k) { return static_cast<long>(milnor_dim(jd, k)); });
}

template <Field F>
std::pair<std::optional<int>, int> thresholds(const JacobianData<F>& jd, const ResolutionSummary& summary) {
  return thresholds_from(jd.degree(), summary, [&](int k) { return static_cast<long>(milnor_dim(jd, k)); });
}

template <Field F>
BourbakiData bourbaki_degree(const JacobianData<F>& jd, const Resolution<F>& res, long tau) {
  if (res.generators.size() < 3) throw FreeCurve("the Bourbaki ideal is defined for non-free curves only");
  const int d = jd.degree();
  const int r = res.generators.front().degree();
  BourbakiData out;
  out.rho1 = format(res.generators.front());
  out.predicted = static_cast<long>(d - 1) * (d - 1) - static_cast<long>(r) * (d - r - 1) - tau;
  auto gens = bourbaki_generators(jd, res);
  int top = 0;
  for (const auto& g : gens) {
    out.generator_degrees.push_back(g.degree());
    top = std::max(top, g.degree());
  }
  std::sort(out.generator_degrees.begin(), out.generator_degrees.end());
  const int cap = 3 * d + top;
  for (int k = 0; k <= cap; ++k) {
    out.hilbert.push_back(dim_l(k) - ideal_dim(gens, k, jd.field()));
    const auto n = out.hilbert.size();
    if (k >= top + 2 && out.hilbert[n - 1] == out.hilbert[n - 2] && out.hilbert[n - 2] == out.hilbert[n - 3]) {
      int from = k - 2;
      while (from > 0 && out.hilbert[static_cast<std::size_t>(from - 1)] == out.hilbert.back()) --from;
      out.stable_from = from;
      out.deg_z = out.hilbert.back();
      break;
    }
  }
  if (out.stable_from < 0) throw ConsistencyError("Hilbert function of the Bourbaki ideal does not stabilize");
  if (out.deg_z != out.predicted)
    throw ConsistencyError("deg Z = " + std::to_string(out.deg_z) + " differs from (d-1)^2 - r(d-r-1) - tau = " +
                           std::to_string(out.predicted));
  return out;
}

template <Field F>
SyzygyAnalysis<F> analyze(const HomogPoly<F>& f, const AnalysisOptions& opts) {
  JacobianData<F> jd(f);
  const int d = jd.degree();
  SyzygyAnalysis<F> out;
  Resolution<F> res = resolve(jd, opts);

  auto& s = out.summary;
  s.degree = d;
  s.kmax = res.kmax;
  for (const auto& g : res.generators) s.exponents.push_back(g.degree());
  s.mdr = s.exponents.front();
  s.is_free = s.exponents.size() == 2;
  if (!s.is_free) {
    auto rd = relation_degrees(jd, res);
    s.relation_degrees = rd.degrees;
    s.epsilons = rd.epsilons;
  } else if (!res.relations.empty()) {
    throw StructureError("relations among two syzygy generators");
  }
  s.stable_degree = stable_degree(d, s.exponents, s.relation_degrees);

  // dim AR(f)_k: swept values, then the resolution formula, which the sweep
  // has certified in every degree.
  auto ar = [&](int k) {
    if (k < 0) return 0L;
    if (static_cast<std::size_t>(k) < res.ar.size()) return res.ar[static_cast<std::size_t>(k)];
    return ar_from_resolution(k, s.exponents, s.relation_degrees);
  };
  auto milnor = [&](int k) {
    const int t = k - d + 1;
    return dim_l(k) - (3 * dim_l(t) - ar(t));
  };

  s.tau = tau_two_ways(d, s, milnor);

  for (int k = 0; k <= res.kmax; ++k) {
    out.dims.ar.push_back(ar(k));
    out.dims.kr.push_back(koszul_dim_certified(jd, k));
    if (!s.mdr_prime && out.dims.ar.back() > out.dims.kr.back()) s.mdr_prime = k;
  }
  auto [ct, st] = thresholds_from(d, s, milnor);
  s.ct = ct;
  s.st = st;
  const int top = std::max(s.stable_degree + 1, 3 * d - 5);
  for (int k = 0; k <= top; ++k) {
    out.dims.milnor.push_back(milnor(k));
    out.dims.smooth_milnor.push_back(smooth_milnor_dim(d, k));
  }

  if (opts.bourbaki && !s.is_free && s.mdr > 0) out.bourbaki = bourbaki_degree(jd, res, s.tau);
  out.generators = std::move(res.generators);
  out.relations = std::move(res.relations);
  return out;
}

template <Field F>
std::string format(const SyzygyTriple<F>& s) {
  return "(" + format(s.a) + ", " + format(s.b) + ", " + format(s.c) + ")";
}

#define JACSYZ_SYZYGY_INSTANTIATE(F)                                                         \
  template Resolution<F> resolve(const JacobianData<F>&, const AnalysisOptions&);            \
  template std::vector<int> minimal_exponents(const JacobianData<F>&);                        \
  template RelationDegrees relation_degrees(const JacobianData<F>&, const Resolution<F>&);    \
  template long tjurina(const JacobianData<F>&, const ResolutionSummary&);                    \
  template std::pair<std::optional<int>, int> thresholds(const JacobianData<F>&,              \
                                                         const ResolutionSummary&);           \
  template BourbakiData bourbaki_degree(const JacobianData<F>&, const Resolution<F>&, long); \
  template SyzygyAnalysis<F> analyze(const HomogPoly<F>&, const AnalysisOptions&);           \
  template std::string format(const SyzygyTriple<F>&);
JACSYZ_SYZYGY_INSTANTIATE(RationalField)
JACSYZ_SYZYGY_INSTANTIATE(PrimeField)

}  // namespace jacsyz
