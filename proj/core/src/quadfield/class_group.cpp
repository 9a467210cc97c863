#include "lambda3/quadfield/class_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

std::vector<BqForm> reduced_definite_forms(std::int64_t D) {
  std::vector<BqForm> out;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    std::int64_t four_a = 4 * a;
    std::int64_t b = -a + 1;
    if (mod_floor(b - D, 2) != 0) ++b;
    for (; b <= a; b += 2) {
      std::int64_t num = b * b - D;
      if (num % four_a != 0) continue;
      std::int64_t c = num / four_a;
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (gcd3(a, b, c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

std::vector<BqForm> reduced_indefinite_forms(std::int64_t D) {
  std::vector<BqForm> out;
  std::int64_t root = isqrt(D);
  for (std::int64_t b = root; b >= 1; --b) {
    if (mod_floor(b - D, 2) != 0) continue;
    std::int64_t N = (D - b * b) / 4;  // a c = -N
    for (std::int64_t a = 1; a * a <= N; ++a) {
      if (N % a != 0) continue;
      for (std::int64_t div : {a, N / a}) {
        for (std::int64_t sa : {div, -div}) {
          BqForm f{sa, b, -N / sa};
          if (is_reduced_indefinite(f) && gcd3(f.a, f.b, f.c) == 1) out.push_back(f);
        }
        if (a * a == N) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace

class FormClassGroupBuilder {
 public:
  static FormClassGroup definite(std::int64_t D) {
    FormClassGroup g;
    g.disc_ = D;
    g.narrow_ = false;
    g.reps_ = reduced_definite_forms(D);
    std::sort(g.reps_.begin(), g.reps_.end());
    g.reduced_index_.reserve(g.reps_.size());
    for (std::size_t i = 0; i < g.reps_.size(); ++i) {
      g.reduced_index_.emplace_back(g.reps_[i], static_cast<std::uint32_t>(i));
    }
    g.identity_ = g.class_of(principal_form(D));
    fill_table(g);
    return g;
  }

  static FormClassGroup narrow_indefinite(std::int64_t D) {
    FormClassGroup g;
    g.disc_ = D;
    g.narrow_ = true;
    const std::vector<BqForm> reduced = reduced_indefinite_forms(D);
    std::map<BqForm, std::size_t> cycle_of;
    std::vector<BqForm> cycle_min;
    for (const BqForm& f : reduced) {
      if (cycle_of.count(f) != 0) continue;
      std::size_t id = cycle_min.size();
      BqForm least = f;
      BqForm cur = f;
      do {
        if (!is_reduced_indefinite(cur)) throw LogicError("rho left the reduced set");
        cycle_of[cur] = id;
        least = std::min(least, cur);
        cur = rho_indefinite(cur);
      } while (cur != f);
      cycle_min.push_back(least);
    }
    // Order classes by their least form.
    std::vector<std::size_t> perm(cycle_min.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](auto x, auto y) { return cycle_min[x] < cycle_min[y]; });
    std::vector<std::size_t> rank(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      rank[perm[i]] = i;
      g.reps_.push_back(cycle_min[perm[i]]);
    }
    for (const auto& [f, id] : cycle_of) g.reduced_index_.emplace_back(f, static_cast<std::uint32_t>(rank[id]));
    g.identity_ = g.class_of(principal_form(D));
    fill_table(g);
    return g;
  }

  /// Quotient of a narrow group by the class of the negated principal form.
  static FormClassGroup ordinary_from_narrow(const FormClassGroup& nar) {
    const BqForm p = principal_form(nar.disc_);
    const std::size_t j = nar.class_of({-p.a, p.b, -p.c});
    const std::size_t n = nar.order();
    std::vector<std::size_t> coset(n, n);
    std::vector<BqForm> reps;
    std::vector<std::size_t> leader;
    for (std::size_t i = 0; i < n; ++i) {
      if (coset[i] != n) continue;
      std::size_t partner = nar.compose(i, j);
      coset[i] = coset[partner] = leader.size();
      leader.push_back(i);
      reps.push_back(std::min(nar.reps_[i], nar.reps_[partner]));
    }
    std::vector<std::size_t> perm(reps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](auto x, auto y) { return reps[x] < reps[y]; });
    std::vector<std::size_t> rank(perm.size());
    FormClassGroup g;
    g.disc_ = nar.disc_;
    g.narrow_ = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      rank[perm[i]] = i;
      g.reps_.push_back(reps[perm[i]]);
    }
    for (const auto& [f, cls] : nar.reduced_index_) {
      g.reduced_index_.emplace_back(f, static_cast<std::uint32_t>(rank[coset[cls]]));
    }
    std::sort(g.reduced_index_.begin(), g.reduced_index_.end());
    const std::size_t h = g.reps_.size();
    g.table_.resize(h * h);
    for (std::size_t x = 0; x < h; ++x) {
      for (std::size_t y = 0; y < h; ++y) {
        std::size_t nx = leader[perm[x]];
        std::size_t ny = leader[perm[y]];
        g.table_[x * h + y] = static_cast<std::uint32_t>(rank[coset[nar.compose(nx, ny)]]);
      }
    }
    g.identity_ = rank[coset[nar.identity_]];
    compute_invariants(g);
    return g;
  }

 private:
  // Only h * |S| compositions for a generating set S grown greedily: with a
  // spanning tree i = parent(i) * s, row i is row parent(i) read through s.
  static void fill_table(FormClassGroup& g) {
    std::sort(g.reduced_index_.begin(), g.reduced_index_.end());
    const std::size_t h = g.reps_.size();
    constexpr auto kNone = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> parent(h, kNone), via(h, kNone);
    std::vector<std::vector<std::uint32_t>> gen_rows;
    std::vector<std::uint32_t> bfs{static_cast<std::uint32_t>(g.identity_)};
    parent[g.identity_] = static_cast<std::uint32_t>(g.identity_);
    for (std::size_t cand = 0; cand < h && bfs.size() < h; ++cand) {
      if (parent[cand] != kNone) continue;
      std::vector<std::uint32_t> row(h);
      for (std::size_t j = 0; j < h; ++j) {
        row[j] = static_cast<std::uint32_t>(g.class_of(compose_reduced(g.reps_[cand], g.reps_[j])));
      }
      gen_rows.push_back(std::move(row));
      for (std::size_t pos = 0; pos < bfs.size(); ++pos) {
        for (std::size_t k = 0; k < gen_rows.size(); ++k) {
          const std::uint32_t y = gen_rows[k][bfs[pos]];
          if (parent[y] != kNone) continue;
          parent[y] = bfs[pos];
          via[y] = static_cast<std::uint32_t>(k);
          bfs.push_back(y);
        }
      }
    }
    if (bfs.size() != h) throw LogicError("class group generators do not span");
    g.table_.assign(h * h, 0);
    for (std::size_t j = 0; j < h; ++j) g.table_[g.identity_ * h + j] = static_cast<std::uint32_t>(j);
    for (std::size_t pos = 1; pos < h; ++pos) {
      const std::size_t i = bfs[pos];
      const std::uint32_t* prow = &g.table_[parent[i] * h];
      const std::vector<std::uint32_t>& srow = gen_rows[via[i]];
      for (std::size_t j = 0; j < h; ++j) g.table_[i * h + j] = prow[srow[j]];
    }
    compute_invariants(g);
  }

  static void compute_invariants(FormClassGroup& g) {
    const auto h = static_cast<std::int64_t>(g.order());
    std::vector<std::int64_t> orders(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) orders[i] = static_cast<std::int64_t>(g.element_order(i));
    // Per prime: exponents of the cyclic p-parts, descending.
    std::vector<std::vector<int>> exps;
    std::vector<std::int64_t> primes;
    std::size_t width = 0;
    for (auto [p, e] : factorize(h)) {
      std::vector<int> ranks_at_least;  // r_k = #{factors with exponent >= k}
      int prev_log = 0;
      std::int64_t pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= p;
        std::int64_t count = 0;
        for (auto o : orders) count += (pk % o == 0) ? 1 : 0;
        int lg = 0;
        for (std::int64_t t = count; t > 1; t /= p) ++lg;
        ranks_at_least.push_back(lg - prev_log);
        prev_log = lg;
      }
      std::vector<int> ex;
      for (int k = 1; k <= e; ++k) {
        int exact = ranks_at_least[k - 1] - (k < e ? ranks_at_least[k] : 0);
        for (int t = 0; t < exact; ++t) ex.push_back(k);
      }
      std::sort(ex.rbegin(), ex.rend());
      width = std::max(width, ex.size());
      exps.push_back(std::move(ex));
      primes.push_back(p);
    }
    std::vector<std::int64_t> inv(width, 1);
    for (std::size_t q = 0; q < primes.size(); ++q) {
      for (std::size_t i = 0; i < exps[q].size(); ++i) {
        for (int t = 0; t < exps[q][i]; ++t) inv[i] *= primes[q];
      }
    }
    std::reverse(inv.begin(), inv.end());
    g.invariants_ = std::move(inv);
    std::int64_t prod = 1;
    for (auto v : g.invariants_) prod *= v;
    if (prod != h) throw LogicError("class group invariants do not multiply to the order");
  }
};

std::size_t FormClassGroup::class_of(const BqForm& f) const {
  BqForm r = disc_ < 0 ? reduce_definite(f) : reduce_indefinite(f);
  auto it = std::lower_bound(reduced_index_.begin(), reduced_index_.end(), std::make_pair(r, std::uint32_t{0}),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
  if (it == reduced_index_.end() || it->first != r) throw LogicError("class_of: reduced form not enumerated");
  return it->second;
}

std::size_t FormClassGroup::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < order(); ++j) {
    if (compose(i, j) == identity_) return j;
  }
  throw LogicError("class group element without inverse");
}

std::size_t FormClassGroup::element_order(std::size_t i) const {
  std::size_t k = 1;
  std::size_t y = i;
  while (y != identity_) {
    y = compose(y, i);
    if (++k > order()) throw LogicError("element order exceeds group order");
  }
  return k;
}

int FormClassGroup::p_rank(std::int64_t p) const {
  int r = 0;
  for (auto n : invariants_) r += (n % p == 0) ? 1 : 0;
  return r;
}

FormClassGroup class_group(std::int64_t D, bool narrow) {
  if (!is_fundamental_discriminant(D)) throw DomainError("class_group: discriminant must be fundamental");
  if (D < 0) return FormClassGroupBuilder::definite(D);
  FormClassGroup nar = FormClassGroupBuilder::narrow_indefinite(D);
  if (narrow) return nar;
  return FormClassGroupBuilder::ordinary_from_narrow(nar);
}

std::int64_t count_reduced_definite(std::int64_t D) {
  if (D >= 0) throw DomainError("count_reduced_definite: D must be negative");
  return static_cast<std::int64_t>(reduced_definite_forms(D).size());
}

std::int64_t dirichlet_h_imag(std::int64_t D) {
  if (D >= 0 || !is_fundamental_discriminant(D)) {
    throw DomainError("dirichlet_h_imag: D must be a negative fundamental discriminant");
  }
  const std::int64_t n = -D;
  // chi(a) for a < n through a linear sieve: chi is completely multiplicative.
  std::vector<std::int8_t> chi(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(static_cast<std::size_t>(n), false);
  if (n > 1) chi[1] = 1;
  std::int64_t sum = n > 1 ? 1 : 0;
  for (std::int64_t a = 2; a < n; ++a) {
    if (!composite[a]) {
      primes.push_back(a);
      chi[a] = static_cast<std::int8_t>(kronecker(D, a));
    }
    for (std::int64_t p : primes) {
      std::int64_t q = p * a;
      if (q >= n) break;
      composite[q] = true;
      chi[q] = static_cast<std::int8_t>(chi[p] * chi[a]);
      if (a % p == 0) break;
    }
    sum += static_cast<std::int64_t>(chi[a]) * a;
  }
  const std::int64_t w = D == -3 ? 6 : D == -4 ? 4 : 2;
  std::int64_t num = -static_cast<std::int64_t>(w) * sum;
  std::int64_t den = 2 * static_cast<std::int64_t>(n);
  if (num % den != 0) throw LogicError("dirichlet_h_imag: non-integral class number");
  return static_cast<std::int64_t>(num / den);
}

}  // namespace lambda3
