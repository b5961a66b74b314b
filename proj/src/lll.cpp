#include "cprsa/lll.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "cprsa/bareiss.hpp"

namespace cprsa {

RankDeficient::RankDeficient(std::size_t row)
    : std::runtime_error("basis is rank deficient at row " + std::to_string(row)), row_(row) {}

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return acc;
}

// Row a -= x * row b.
void submul_row(std::vector<BigInt>& a, const std::vector<BigInt>& b, const BigInt& x) {
  for (std::size_t i = 0; i < a.size(); ++i) mpz_submul(a[i].get_mpz_t(), x.get_mpz_t(), b[i].get_mpz_t());
}

IntMatrix identity(std::size_t n) {
  IntMatrix u(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  return u;
}

void require_rectangular(const IntMatrix& b) {
  if (b.empty()) return;
  for (const auto& row : b) {
    if (row.size() != b.front().size()) throw std::invalid_argument("basis rows have different lengths");
  }
  if (b.size() > b.front().size()) throw RankDeficient(b.front().size());
}

// Integral Gram-Schmidt data: d[i+1] = Gram determinant of b_0..b_i (d[0] = 1)
// and lambda[k][j] = d[j+1] * mu_kj.
struct IntegralGso {
  std::vector<BigInt> d;
  IntMatrix lambda;

  explicit IntegralGso(std::size_t n) : d(n + 1, 0), lambda(n, std::vector<BigInt>(n, 0)) { d[0] = 1; }

  void compute_row(const IntMatrix& b, std::size_t k) {
    compute_row(k, [&](std::size_t i, std::size_t j) { return dot(b[i], b[j]); });
  }

  template <typename InnerProduct>
  void compute_row(std::size_t k, InnerProduct&& inner) {
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt u = inner(k, j);
      for (std::size_t i = 0; i < j; ++i) {
        u = d[i + 1] * u - lambda[k][i] * lambda[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t());
      }
      if (j < k) {
        lambda[k][j] = u;
      } else {
        if (u == 0) throw RankDeficient(k);
        d[k + 1] = u;
      }
    }
  }
};

// Gram matrix modulo a few word-size primes. Confirms exact half-integer
// values of mu_kj without the multi-thousand-bit integral Gram-Schmidt.
class ModularGram {
 public:
  static constexpr std::array<std::uint64_t, 3> kPrimes{0x3fffffffffffffc7ULL, 0x1fffffffffffffffULL,
                                                        0x7fffffffffffffe7ULL};

  void reset(const IntMatrix& gram) {
    n_ = gram.size();
    for (std::size_t p = 0; p < kPrimes.size(); ++p) {
      g_[p].assign(n_ * n_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) g_[p][i * n_ + j] = residue(gram[i][j], kPrimes[p]);
    }
  }

  // Mirrors b_k -= x b_j on the Gram matrix.
  void apply(std::size_t k, std::size_t j, const BigInt& x) {
    for (std::size_t p = 0; p < kPrimes.size(); ++p) {
      const std::uint64_t m = kPrimes[p];
      const std::uint64_t xm = residue(x, m);
      auto& g = g_[p];
      auto at = [&](std::size_t a, std::size_t b) -> std::uint64_t& { return g[a * n_ + b]; };
      const std::uint64_t kk = sub(at(k, k), mul(2, mul(xm, at(k, j), m), m), m);
      at(k, k) = add(kk, mul(mul(xm, xm, m), at(j, j), m), m);
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == k) continue;
        at(k, i) = sub(at(k, i), mul(xm, at(j, i), m), m);
        at(i, k) = at(k, i);
      }
    }
  }

  void swap(std::size_t k) {
    for (auto& g : g_) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(g[k * n_ + c], g[(k - 1) * n_ + c]);
      for (std::size_t r = 0; r < n_; ++r) std::swap(g[r * n_ + k], g[r * n_ + k - 1]);
    }
  }

  // True when 2 lambda_kj == h d_{j+1}, i.e. mu_kj == h/2, modulo every prime.
  bool half_integer(std::size_t k, std::size_t j, std::int64_t h) const {
    const std::size_t w = j + 1;
    for (std::size_t p = 0; p < kPrimes.size(); ++p) {
      const std::uint64_t m = kPrimes[p];
      const auto& g = g_[p];
      // Integral Gram-Schmidt of rows 0..j (slots 0..j) and of row k up to
      // column j (slot j + 1).
      std::vector<std::uint64_t> d(w + 1, 0), dinv(w + 1, 0), lam((w + 1) * w, 0);
      d[0] = dinv[0] = 1;
      auto row = [&](std::size_t src, std::size_t slot) {
        for (std::size_t c = 0; c <= std::min(slot, j); ++c) {
          std::uint64_t u = g[src * n_ + c];
          for (std::size_t i = 0; i < c; ++i)
            u = mul(sub(mul(d[i + 1], u, m), mul(lam[slot * w + i], lam[c * w + i], m), m), dinv[i], m);
          if (c < slot) {
            lam[slot * w + c] = u;
          } else {
            if (u == 0) return false;
            d[c + 1] = u;
            dinv[c + 1] = inverse(u, m);
          }
        }
        return true;
      };
      for (std::size_t r = 0; r <= j; ++r)
        if (!row(r, r)) return false;
      row(k, w);
      const std::uint64_t hm = h < 0 ? (m - static_cast<std::uint64_t>(-h) % m) % m : static_cast<std::uint64_t>(h) % m;
      if (mul(2, lam[w * w + j], m) != mul(hm, d[w], m)) return false;
    }
    return true;
  }

 private:
  static std::uint64_t residue(const BigInt& x, std::uint64_t m) {
    return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= m - b ? a - (m - b) : a + b; }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }
  static std::uint64_t inverse(std::uint64_t a, std::uint64_t m) {
    // a^(m-2) mod m; every modulus here is prime.
    std::uint64_t r = 1, e = m - 2;
    for (; e; e >>= 1, a = mul(a, a, m))
      if (e & 1) r = mul(r, a, m);
    return r;
  }

  std::size_t n_ = 0;
  std::array<std::vector<std::uint64_t>, 3> g_;
};

class ExactLll {
 public:
  ExactLll(IntMatrix basis, const Rational& lovasz, bool track)
      : b_(std::move(basis)), gso_(b_.size()), p_(lovasz.get_num()), q_(lovasz.get_den()), track_(track) {
    if (track_) u_ = identity(b_.size());
  }

  ReducedBasis run() {
    const std::size_t n = b_.size();
    ReducedBasis out;
    if (n == 0) return out;
    gso_.compute_row(b_, 0);
    std::size_t kmax = 0;
    std::size_t k = 1;
    while (k < n) {
      if (k > kmax) {
        kmax = k;
        gso_.compute_row(b_, k);
      }
      for (std::size_t l = k; l-- > 0;) reduce(k, l);
      auto& d = gso_.d;
      const BigInt& lam = gso_.lambda[k][k - 1];
      // swap when B_k < (p/q - mu^2) B_{k-1}
      if (q_ * d[k + 1] * d[k - 1] < p_ * d[k] * d[k] - q_ * lam * lam) {
        swap(k, kmax);
        ++out.swaps;
        k = std::max<std::size_t>(k - 1, 1);
      } else {
        ++k;
      }
    }
    out.vectors = std::move(b_);
    out.transform = std::move(u_);
    return out;
  }

 private:
  void reduce(std::size_t k, std::size_t l) {
    auto& lam = gso_.lambda;
    const BigInt& dl = gso_.d[l + 1];
    if (2 * abs(lam[k][l]) <= dl) return;
    BigInt x;
    BigInt num = 2 * lam[k][l] + dl;
    BigInt den = 2 * dl;
    mpz_fdiv_q(x.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    submul_row(b_[k], b_[l], x);
    if (track_) submul_row(u_[k], u_[l], x);
    lam[k][l] -= x * dl;
    for (std::size_t i = 0; i < l; ++i) lam[k][i] -= x * lam[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    auto& d = gso_.d;
    auto& lam = gso_.lambda;
    std::swap(b_[k], b_[k - 1]);
    if (track_) std::swap(u_[k], u_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const BigInt l = lam[k][k - 1];
    const BigInt B = divide_exact(d[k - 1] * d[k + 1] + l * l, d[k]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lam[i][k];
      lam[i][k] = divide_exact(d[k + 1] * lam[i][k - 1] - l * t, d[k]);
      lam[i][k - 1] = divide_exact(B * t + l * lam[i][k], d[k + 1]);
    }
    d[k] = B;
  }

  IntMatrix b_;
  IntMatrix u_;
  IntegralGso gso_;
  BigInt p_, q_;
  bool track_;
};

// n x n block of MPFR values.
class MpfrMatrix {
 public:
  MpfrMatrix(std::size_t n, mpfr_prec_t prec) : n_(n), data_(n * n) {
    for (auto& v : data_) mpfr_init2(v.x, prec);
  }
  MpfrMatrix(const MpfrMatrix&) = delete;
  MpfrMatrix& operator=(const MpfrMatrix&) = delete;
  ~MpfrMatrix() {
    for (auto& v : data_) mpfr_clear(v.x);
  }
  mpfr_ptr operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j].x; }

 private:
  struct Cell {
    mpfr_t x;
  };
  std::size_t n_;
  std::vector<Cell> data_;
};

class ScopedMpfr {
 public:
  explicit ScopedMpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ScopedMpfr(const ScopedMpfr&) = delete;
  ScopedMpfr& operator=(const ScopedMpfr&) = delete;
  ~ScopedMpfr() { mpfr_clear(x_); }
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

// Row k of the floating Gram-Schmidt data from the exact Gram matrix, given
// rows 0..k-1: r(k,j) = <b_k, b*_j>, mu(k,j) = r(k,j) / r(j,j).
void floating_gso_row(MpfrMatrix& r, MpfrMatrix& mu, mpfr_ptr tmp, const IntMatrix& gram, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) {
    mpfr_set_z(r(k, j), gram[k][j].get_mpz_t(), MPFR_RNDN);
    for (std::size_t m = 0; m < j; ++m) {
      mpfr_mul(tmp, mu(j, m), r(k, m), MPFR_RNDN);
      mpfr_sub(r(k, j), r(k, j), tmp, MPFR_RNDN);
    }
    mpfr_div(mu(k, j), r(k, j), r(j, j), MPFR_RNDN);
  }
  mpfr_set_z(r(k, k), gram[k][k].get_mpz_t(), MPFR_RNDN);
  for (std::size_t m = 0; m < k; ++m) {
    mpfr_mul(tmp, mu(k, m), r(k, m), MPFR_RNDN);
    mpfr_sub(r(k, k), r(k, k), tmp, MPFR_RNDN);
  }
}

IntMatrix gram_matrix(const IntMatrix& b) {
  IntMatrix g(b.size(), std::vector<BigInt>(b.size(), 0));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = dot(b[i], b[j]);
  return g;
}

mpfr_prec_t gram_bits(const IntMatrix& gram) {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < gram.size(); ++i) bits = std::max(bits, mpz_sizeinbase(gram[i][i].get_mpz_t(), 2));
  return static_cast<mpfr_prec_t>(bits);
}

// Floating Gram-Schmidt over an exact basis and exact Gram matrix, with
// lazy repeated size reduction so multiplier estimates that exceed the
// working precision still converge.
class FloatingLll {
 public:
  FloatingLll(IntMatrix basis, const Rational& lovasz, mpfr_prec_t prec, bool track)
      : b_(std::move(basis)),
        n_(b_.size()),
        prec_(prec),
        track_(track),
        gram_(gram_matrix(b_)),
        r_(n_, prec),
        mu_(n_, prec),
        lovasz_(prec),
        window_(prec),
        exact_(n_),
        precise_prec_(std::max<mpfr_prec_t>(4 * prec, gram_bits(gram_) + 64)),
        precise_r_(n_, precise_prec_),
        precise_mu_(n_, precise_prec_),
        precise_window_(precise_prec_),
        precise_tmp_(precise_prec_),
        precise_x_(precise_prec_),
        tmp_(prec),
        tmp2_(prec),
        xf_(prec) {
    if (track_) u_ = identity(n_);
    settled_.assign(n_, 0);
    modular_.reset(gram_);
    mpfr_set_q(lovasz_.get(), lovasz.get_mpq_t(), MPFR_RNDN);
    lovasz_p_ = lovasz.get_num();
    lovasz_q_ = lovasz.get_den();
    // Decisions closer than this to a threshold (|mu| = 1/2, a half-integer
    // when rounding, Lovasz equality) are settled exactly, so structured
    // lattices with exact ties follow the exact path step for step.
    mpfr_set_ui_2exp(window_.get(), 1, -static_cast<long>(prec / 2), MPFR_RNDN);
    mpfr_set_ui_2exp(precise_window_.get(), 1, -static_cast<long>(precise_prec_ / 2), MPFR_RNDN);
  }

  ReducedBasis run() {
    ReducedBasis out;
    if (n_ == 0) return out;
    compute_row(0);
    if (gram_[0][0] == 0) throw RankDeficient(0);
    std::size_t k = 1;
    while (k < n_) {
      size_reduce(k);
      if (should_swap(k)) {
        swap(k);
        ++out.swaps;
        if (k == 1) {
          compute_row(0);
        } else {
          --k;
        }
      } else {
        ++k;
      }
    }
    out.vectors = std::move(b_);
    out.transform = std::move(u_);
    return out;
  }

 private:
  void compute_row(std::size_t k) { floating_gso_row(r_, mu_, tmp_.get(), gram_, k); }

  // mu_kj at a precision covering the Gram entries; rows untouched since the
  // last call are reused.
  mpfr_ptr precise_mu(std::size_t k, std::size_t j) {
    for (; precise_rows_ <= k; ++precise_rows_) floating_gso_row(precise_r_, precise_mu_, precise_tmp_.get(), gram_, precise_rows_);
    return precise_mu_(k, j);
  }

  // x = floor(mu_kj + 1/2) when |mu_kj| > 1/2, else 0; exact near ties.
  BigInt multiplier(std::size_t k, std::size_t j) {
    BigInt x;
    if (settled_[j]) return x;
    // frac = (mu + 1/2) - floor(mu + 1/2), in [0, 1).
    mpfr_add_d(tmp_.get(), mu_(k, j), 0.5, MPFR_RNDN);
    mpfr_floor(tmp2_.get(), tmp_.get());
    mpfr_sub(tmp_.get(), tmp_.get(), tmp2_.get(), MPFR_RNDN);
    mpfr_ui_sub(xf_.get(), 1, tmp_.get(), MPFR_RNDN);
    // Multipliers beyond a quarter of the precision are estimates anyway; the
    // lazy loop corrects them on the next pass.
    const bool small = mpfr_zero_p(mu_(k, j)) || mpfr_get_exp(mu_(k, j)) < static_cast<mpfr_exp_t>(prec_ / 4);
    if (small && (mpfr_cmp(tmp_.get(), window_.get()) < 0 || mpfr_cmp(xf_.get(), window_.get()) < 0)) {
      // Structured lattices hit exact ties mu = n - 1/2 often; confirm those
      // modularly and keep the integral Gram-Schmidt for genuine near misses.
      mpfr_add_d(tmp_.get(), mu_(k, j), 0.5, MPFR_RNDN);
      mpfr_round(tmp_.get(), tmp_.get());
      const std::int64_t n = mpfr_get_si(tmp_.get(), MPFR_RNDN);
      if (modular_.half_integer(k, j, 2 * n - 1)) {
        if (n == 0 || n == 1) {
          settled_[j] = 1;
          return x;
        }
        return BigInt(static_cast<long>(n));
      }
      // Near misses sit about 2^-l from the half-integer for l-bit moduli;
      // the precise pass settles those and the integral data the rest.
      mpfr_ptr mu = precise_mu(k, j);
      mpfr_add_d(precise_tmp_.get(), mu, 0.5, MPFR_RNDN);
      mpfr_floor(precise_x_.get(), precise_tmp_.get());
      mpfr_sub(precise_tmp_.get(), precise_tmp_.get(), precise_x_.get(), MPFR_RNDN);
      if (mpfr_cmp(precise_tmp_.get(), precise_window_.get()) >= 0) {
        mpfr_ui_sub(precise_tmp_.get(), 1, precise_tmp_.get(), MPFR_RNDN);
        if (mpfr_cmp(precise_tmp_.get(), precise_window_.get()) >= 0) {
          mpfr_get_z(x.get_mpz_t(), precise_x_.get(), MPFR_RNDN);
          if (x == 0) settled_[j] = 1;
          return x;
        }
      }
      const IntegralGso& gso = exact_gso(k);
      const BigInt& lam = gso.lambda[k][j];
      const BigInt& dj = gso.d[j + 1];
      if (2 * abs(lam) <= dj) {
        settled_[j] = 1;
        return x;
      }
      BigInt num = 2 * lam + dj;
      BigInt den = 2 * dj;
      mpz_fdiv_q(x.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return x;
    }
    mpfr_get_z(x.get_mpz_t(), tmp2_.get(), MPFR_RNDN);
    return x;
  }

  // Integral Gram-Schmidt of rows 0..k from the exact Gram matrix. Rows
  // untouched since the last call are reused.
  const IntegralGso& exact_gso(std::size_t k) {
    for (; exact_rows_ <= k; ++exact_rows_)
      exact_.compute_row(exact_rows_, [&](std::size_t a, std::size_t b) { return gram_[a][b]; });
    return exact_;
  }

  void size_reduce(std::size_t k) {
    std::fill(settled_.begin(), settled_.end(), 0);
    for (int pass = 0;; ++pass) {
      if (pass > 100000) throw std::runtime_error("floating size reduction did not converge");
      compute_row(k);
      bool changed = false;
      for (std::size_t j = k; j-- > 0;) {
        const BigInt x = multiplier(k, j);
        if (x == 0) continue;
        apply(k, j, x);
        mpfr_set_z(xf_.get(), x.get_mpz_t(), MPFR_RNDN);
        for (std::size_t i = 0; i < j; ++i) {
          mpfr_mul(tmp_.get(), xf_.get(), mu_(j, i), MPFR_RNDN);
          mpfr_sub(mu_(k, i), mu_(k, i), tmp_.get(), MPFR_RNDN);
        }
        mpfr_sub(mu_(k, j), mu_(k, j), xf_.get(), MPFR_RNDN);
        changed = true;
      }
      if (!changed) break;
    }
    // Projections far below the earlier Gram-Schmidt norms cancel to zero
    // or below in floating point; only an exact zero vector means dependence.
    if (gram_[k][k] == 0) throw RankDeficient(k);
  }

  // b_k -= x b_j, keeping U and the Gram matrix exact.
  void apply(std::size_t k, std::size_t j, const BigInt& x) {
    exact_rows_ = std::min(exact_rows_, k);
    precise_rows_ = std::min(precise_rows_, k);
    modular_.apply(k, j, x);
    // mu_ki for i > j is unaffected, so exact tie decisions there stand.
    std::fill(settled_.begin(), settled_.begin() + static_cast<std::ptrdiff_t>(j) + 1, 0);
    submul_row(b_[k], b_[j], x);
    if (track_) submul_row(u_[k], u_[j], x);
    // G_kk' = G_kk - 2x G_kj + x^2 G_jj
    BigInt& gkk = gram_[k][k];
    gkk -= 2 * x * gram_[k][j];
    gkk += x * x * gram_[j][j];
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k) continue;
      mpz_submul(gram_[k][i].get_mpz_t(), x.get_mpz_t(), gram_[j][i].get_mpz_t());
      gram_[i][k] = gram_[k][i];
    }
  }

  bool should_swap(std::size_t k) {
    // Swap when r_k < (lovasz - mu^2) r_{k-1}.
    mpfr_sqr(tmp_.get(), mu_(k, k - 1), MPFR_RNDN);
    mpfr_sub(tmp_.get(), lovasz_.get(), tmp_.get(), MPFR_RNDN);
    mpfr_mul(tmp_.get(), tmp_.get(), r_(k - 1, k - 1), MPFR_RNDN);
    // A projection that cancelled to zero or below is far shorter than b*_{k-1}.
    if (mpfr_sgn(r_(k, k)) <= 0) return true;
    mpfr_sub(tmp2_.get(), tmp_.get(), r_(k, k), MPFR_RNDN);
    mpfr_abs(tmp2_.get(), tmp2_.get(), MPFR_RNDN);
    mpfr_mul(xf_.get(), r_(k, k), window_.get(), MPFR_RNDN);
    if (mpfr_cmp(tmp2_.get(), xf_.get()) >= 0) return mpfr_cmp(r_(k, k), tmp_.get()) < 0;
    const IntegralGso& gso = exact_gso(k);
    const auto& d = gso.d;
    const BigInt& lam = gso.lambda[k][k - 1];
    return lovasz_q_ * d[k + 1] * d[k - 1] < lovasz_p_ * d[k] * d[k] - lovasz_q_ * lam * lam;
  }

  void swap(std::size_t k) {
    exact_rows_ = std::min(exact_rows_, k - 1);
    precise_rows_ = std::min(precise_rows_, k - 1);
    modular_.swap(k);
    std::swap(b_[k], b_[k - 1]);
    if (track_) std::swap(u_[k], u_[k - 1]);
    std::swap(gram_[k], gram_[k - 1]);
    for (auto& row : gram_) std::swap(row[k], row[k - 1]);
  }

  IntMatrix b_;
  std::size_t n_;
  mpfr_prec_t prec_;
  bool track_;
  IntMatrix u_;
  IntMatrix gram_;
  MpfrMatrix r_;
  MpfrMatrix mu_;
  ScopedMpfr lovasz_;
  BigInt lovasz_p_, lovasz_q_;
  ScopedMpfr window_;
  IntegralGso exact_;
  std::size_t exact_rows_ = 0;
  ModularGram modular_;
  mpfr_prec_t precise_prec_;
  MpfrMatrix precise_r_;
  MpfrMatrix precise_mu_;
  ScopedMpfr precise_window_;
  ScopedMpfr precise_tmp_;
  ScopedMpfr precise_x_;
  std::size_t precise_rows_ = 0;
  // settled_[j]: mu_kj of the row being reduced is known to need no step.
  std::vector<char> settled_;
  ScopedMpfr tmp_;
  ScopedMpfr tmp2_;
  ScopedMpfr xf_;
};

// Exact reducedness test that stops at the first violation, so unreduced
// inputs cost only a few Gram-Schmidt rows.
bool already_reduced(const IntMatrix& b, const Rational& lovasz) {
  const std::size_t n = b.size();
  IntegralGso gso(n);
  const BigInt& p = lovasz.get_num();
  const BigInt& q = lovasz.get_den();
  for (std::size_t k = 0; k < n; ++k) {
    gso.compute_row(b, k);
    if (k == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (2 * abs(gso.lambda[k][j]) > gso.d[j + 1]) return false;
    }
    const auto& d = gso.d;
    const BigInt& lam = gso.lambda[k][k - 1];
    if (q * d[k + 1] * d[k - 1] < p * d[k] * d[k] - q * lam * lam) return false;
  }
  return true;
}

}  // namespace

ReducedBasis lll_reduce(const IntMatrix& basis, const LllOptions& options) {
  require_rectangular(basis);
  if (options.lovasz <= Rational(1, 4) || options.lovasz > 1)
    throw std::invalid_argument("Lovasz factor must lie in (1/4, 1]");
  const std::size_t n = basis.size();
  const bool track = options.track_transform;
  if (already_reduced(basis, options.lovasz)) {
    ReducedBasis out;
    out.vectors = basis;
    if (track) out.transform = identity(n);
    return out;
  }

  IntMatrix input = basis;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  if (options.presort) {
    std::vector<BigInt> norms(n);
    for (std::size_t i = 0; i < n; ++i) norms[i] = norm2_sq(basis[i]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });
    for (std::size_t i = 0; i < n; ++i) input[i] = basis[order[i]];
  }

  ReducedBasis out;
  if (options.method == LllMethod::exact) {
    out = ExactLll(std::move(input), options.lovasz, track).run();
  } else {
    mpfr_prec_t prec = options.precision;
    if (prec == 0) prec = std::max<mpfr_prec_t>(113, 3 * static_cast<mpfr_prec_t>(n) + 64);
    out = FloatingLll(std::move(input), options.lovasz, prec, track).run();
    if (options.exact_polish) {
      ReducedBasis polished = ExactLll(out.vectors, options.lovasz, track).run();
      out.polish_swaps = polished.swaps;
      out.swaps += polished.swaps;
      if (track) out.transform = multiply(polished.transform, out.transform);
      out.vectors = std::move(polished.vectors);
    }
  }
  if (track && options.presort) {
    // out.transform maps the sorted rows; column i of it belongs to basis[order[i]].
    IntMatrix u(n, std::vector<BigInt>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) u[r][order[i]] = out.transform[r][i];
    out.transform = std::move(u);
  }
  return out;
}

ReducedBasis lll_reduce(const IntegerLattice& lattice, const LllOptions& options) {
  return lll_reduce(lattice.rows, options);
}

ReductionCheck check_lll_reduced(const IntMatrix& basis, const Rational& lovasz) {
  ReductionCheck check;
  const std::size_t n = basis.size();
  IntegralGso gso(n);
  for (std::size_t k = 0; k < n; ++k) gso.compute_row(basis, k);
  const BigInt& p = lovasz.get_num();
  const BigInt& q = lovasz.get_den();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (2 * abs(gso.lambda[k][j]) > gso.d[j + 1]) check.size_reduced = false;
    }
    const BigInt& lam = gso.lambda[k][k - 1];
    const auto& d = gso.d;
    if (q * d[k + 1] * d[k - 1] < p * d[k] * d[k] - q * lam * lam) check.lovasz = false;
  }
  return check;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  IntMatrix out(a.size(), std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t m = 0; m < inner; ++m) {
      if (a[i][m] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        mpz_addmul(out[i][j].get_mpz_t(), a[i][m].get_mpz_t(), b[m][j].get_mpz_t());
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  }
  return bareiss_determinant(
      m, BigInt(1), [](const BigInt& x) { return x == 0; },
      [](const BigInt& a, const BigInt& b) { return divide_exact(a, b); });
}

BigInt gram_determinant(const IntMatrix& basis) {
  const std::size_t n = basis.size();
  IntMatrix gram(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) gram[i][j] = gram[j][i] = dot(basis[i], basis[j]);
  return determinant(gram);
}

bool verify_certificate(const IntMatrix& input, const ReducedBasis& reduced) {
  if (reduced.transform.size() != input.size()) return false;
  if (multiply(reduced.transform, input) != reduced.vectors) return false;
  return abs(determinant(reduced.transform)) == 1;
}

BigInt norm2_sq(const std::vector<BigInt>& v) { return dot(v, v); }

std::size_t lll_norm_bound_violation(const IntMatrix& vectors, const BigInt& lattice_det) {
  const unsigned long w = vectors.size();
  if (w == 0) return 0;
  const BigInt rhs = pow2(w * (w - 1) / 2) * lattice_det * lattice_det;
  BigInt largest = 0;
  for (unsigned long i = 1; i <= w; ++i) {
    largest = std::max(largest, norm2_sq(vectors[i - 1]));
    if (pow(largest, w + 1 - i) > rhs) return i;
  }
  return 0;
}

TrivariatePolynomial row_to_polynomial(const std::vector<BigInt>& row, const AttackPlan& plan) {
  if (row.size() != plan.M.size()) throw std::invalid_argument("row length does not match the monomial set");
  TrivariatePolynomial poly;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    const BigInt scale = plan.column_scale(plan.M[j]);
    if (!mpz_divisible_p(row[j].get_mpz_t(), scale.get_mpz_t()))
      throw std::logic_error("lattice entry is not a multiple of its column scale");
    poly.add_term(plan.M[j], divide_exact(row[j], scale));
  }
  return poly;
}

std::vector<TrivariatePolynomial> extract_polynomials(const ReducedBasis& reduced, const AttackPlan& plan,
                                                      std::size_t count) {
  if (count > reduced.vectors.size()) throw std::invalid_argument("more polynomials requested than vectors");
  std::vector<TrivariatePolynomial> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(row_to_polynomial(reduced.vectors[i], plan));
  return out;
}

}  // namespace cprsa
