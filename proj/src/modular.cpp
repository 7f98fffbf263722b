#include "jacsyz/modular.hpp"

#include <algorithm>

#include "jacsyz/kernels.hpp"
#include "jacsyz/primes.hpp"

namespace jacsyz::modular {

namespace {

constexpr std::size_t kMaxPrimes = 4096;

/// Prime counts after which reconstruction is attempted (roughly x1.5).
bool attempt_after(std::size_t count) {
  std::size_t next = 1;
  while (next < count) next = next + (next + 1) / 2;
  return next == count;
}

/// Larger rank wins; equal rank, the lexicographically smaller pivot list wins
/// (modular reduction can only push pivots to the right).
bool better_pattern(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

struct PrimeImage {
  std::uint64_t p = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::uint64_t> rref;
};

PrimeImage image_mod(const IntMatrix& m, std::uint64_t p) {
  PrimeImage img;
  img.p = p;
  img.rref = reduce(m, p);
  img.pivots = kernels::echelon_parallel(img.rref, m.rows, m.cols, p, kernels::Reduction::Full);
  return img;
}

}  // namespace

IntMatrix to_integer_rows(const DenseMatrix<RationalField>& m) {
  IntMatrix out{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const auto& q : m.row(i)) {
      if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j);
      out.entries[i * m.cols() + j] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

std::vector<std::uint64_t> reduce(const IntMatrix& m, std::uint64_t p) {
  std::vector<std::uint64_t> out(m.entries.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = sgn(m.entries[i]) == 0 ? 0 : mpz_fdiv_ui(m.entries[i].get_mpz_t(), p);
  }
  return out;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = (m - 1) / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || sgn(t1) == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

bool annihilates(const IntMatrix& m, std::span<const mpq_class> w) {
  mpz_class l = 1;
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (sgn(w[j]) == 0) continue;
    support.push_back(j);
    if (w[j].get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w[j].get_den_mpz_t());
  }
  std::vector<mpz_class> iw(support.size());
  for (std::size_t s = 0; s < support.size(); ++s) {
    const mpq_class& q = w[support[s]];
    iw[s] = q.get_num() * (l / q.get_den());
  }
  mpz_class acc;
  for (std::size_t i = 0; i < m.rows; ++i) {
    acc = 0;
    for (std::size_t s = 0; s < support.size(); ++s) {
      const mpz_class& a = m(i, support[s]);
      if (sgn(a) != 0) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), iw[s].get_mpz_t());
    }
    if (sgn(acc) != 0) return false;
  }
  return true;
}

RationalEchelon certified_echelon(const IntMatrix& m, std::span<const std::size_t> wanted) {
  std::vector<std::size_t> best;
  bool have_best = false;
  std::vector<std::size_t> targets;   // free columns still to lift
  std::vector<std::vector<mpz_class>> residues;  // per target, per pivot row
  mpz_class modulus = 1;
  std::size_t used = 0;

  RationalEchelon out;
  std::vector<std::vector<mpq_class>> lifted;
  std::vector<std::size_t> lifted_cols;

  auto reset = [&](const PrimeImage& img) {
    best = img.pivots;
    have_best = true;
    std::vector<char> is_pivot(m.cols, 0);
    for (auto c : best) is_pivot[c] = 1;
    targets.clear();
    lifted.clear();
    lifted_cols.clear();
    if (wanted.empty()) {
      for (std::size_t j = 0; j < m.cols; ++j)
        if (!is_pivot[j]) targets.push_back(j);
    } else {
      for (auto j : wanted) {
        if (is_pivot[j]) throw BadPrime("requested kernel column is a pivot over Q");
        targets.push_back(j);
      }
    }
    residues.assign(targets.size(), std::vector<mpz_class>(best.size()));
    for (std::size_t t = 0; t < targets.size(); ++t)
      for (std::size_t i = 0; i < best.size(); ++i) residues[t][i] = img.rref[i * m.cols + targets[t]];
    modulus = img.p;
    used = 1;
  };

  auto combine = [&](const PrimeImage& img) {
    const std::uint64_t p = img.p;
    const std::uint64_t minv = modarith::inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      for (std::size_t i = 0; i < best.size(); ++i) {
        mpz_class& x = residues[t][i];
        std::uint64_t b = img.rref[i * m.cols + targets[t]];
        std::uint64_t a = mpz_fdiv_ui(x.get_mpz_t(), p);
        std::uint64_t k = modarith::mul(modarith::sub(b, a, p), minv, p);
        if (k) mpz_addmul_ui(x.get_mpz_t(), modulus.get_mpz_t(), k);
      }
    }
    modulus *= p;
    ++used;
  };

  // Reconstructs and verifies what it can; drops finished targets.
  auto try_lift = [&]() {
    std::vector<std::size_t> keep;
    const mpz_class half = modulus / 2;
    mpz_class bound;
    const mpz_class h2 = (modulus - 1) / 2;
    mpz_sqrt(bound.get_mpz_t(), h2.get_mpz_t());
    for (std::size_t t = 0; t < targets.size(); ++t) {
      std::vector<mpq_class> v(m.cols, 0);
      v[targets[t]] = 1;
      mpz_class den = 1;
      bool ok = true;
      for (std::size_t i = 0; i < best.size() && ok; ++i) {
        // Entries of one kernel vector usually share a denominator: try it first.
        mpz_class c = (residues[t][i] * den) % modulus;
        if (c > half) c -= modulus;
        if (abs(c) <= bound) {
          v[best[i]] = -mpq_class(c, den);
          v[best[i]].canonicalize();
          continue;
        }
        auto q = rational_reconstruct(residues[t][i], modulus);
        if (!q) {
          ok = false;
          break;
        }
        v[best[i]] = -*q;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q->get_den_mpz_t());
      }
      if (ok && annihilates(m, v)) {
        lifted.push_back(std::move(v));
        lifted_cols.push_back(targets[t]);
      } else {
        keep.push_back(t);
      }
    }
    std::vector<std::size_t> nt;
    std::vector<std::vector<mpz_class>> nr;
    for (auto t : keep) {
      nt.push_back(targets[t]);
      nr.push_back(std::move(residues[t]));
    }
    targets = std::move(nt);
    residues = std::move(nr);
  };

  for (std::size_t idx = 0; idx < kMaxPrimes; ++idx) {
    PrimeImage img = image_mod(m, working_prime(idx));
    if (!have_best || better_pattern(img.pivots, best)) {
      reset(img);
    } else if (img.pivots != best) {
      continue;  // unlucky prime
    } else {
      combine(img);
    }
    if (targets.empty() || attempt_after(used)) try_lift();
    if (targets.empty()) {
      out.pivots = best;
      // Return vectors ordered by column.
      std::vector<std::size_t> order(lifted_cols.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lifted_cols[a] < lifted_cols[b]; });
      for (auto i : order) {
        out.free_cols.push_back(lifted_cols[i]);
        out.kernel.push_back(std::move(lifted[i]));
      }
      return out;
    }
  }
  throw InternalError("rational lifting did not converge");
}

}  // namespace jacsyz::modular
