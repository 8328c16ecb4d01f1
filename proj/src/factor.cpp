#include "msect/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msect {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1u << 16;
        std::vector<bool> sieve(limit, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    std::uint64_t m = n < 0 ? -std::uint64_t(n) : std::uint64_t(n);
    for (auto [p, e] : factorize_u64(m))
        if (e > 1) return false;
    return true;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic Miller-Rabin bases for 64-bit inputs
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t pollard_rho_u64(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t c = 1;
    while (true) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        std::uint64_t saved_x = x, saved_y = y;
        (void)saved_x; (void)saved_y;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec_u64(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    std::uint64_t d = pollard_rho_u64(n);
    factor_rec_u64(d, out);
    factor_rec_u64(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    std::vector<std::uint64_t> primes;
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t(p) * p > n) break;
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    if (n > 1) factor_rec_u64(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.push_back({p, 1});
    }
    return out;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    BigInt m = abs(n);
    if (m.fits_ulong_p()) {
        std::vector<std::pair<BigInt, unsigned>> out;
        for (auto [p, e] : factorize_u64(m.get_ui())) out.push_back({BigInt((unsigned long)p), e});
        return out;
    }
    std::vector<std::pair<BigInt, unsigned>> out;
    for (std::uint32_t p : small_primes()) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            out.push_back({BigInt((unsigned long)p), e});
        }
        if (m == 1) break;
    }
    if (m > 1) {
        if (m.fits_ulong_p()) {
            for (auto [p, e] : factorize_u64(m.get_ui())) out.push_back({BigInt((unsigned long)p), e});
        } else if (is_prime(m)) {
            out.push_back({m, 1});
        } else {
            // Pollard rho over mpz; plain Floyd cycle with gcd batching is
            // enough at the sizes this project meets.
            gmp_randclass rng(gmp_randinit_default);
            rng.seed(0xC0FFEEul);
            std::vector<BigInt> stack = {m};
            std::vector<BigInt> primes;
            while (!stack.empty()) {
                BigInt v = stack.back();
                stack.pop_back();
                if (v == 1) continue;
                if (is_prime(v)) { primes.push_back(v); continue; }
                BigInt d = v;
                while (d == v) {
                    BigInt c = rng.get_z_range(v - 1) + 1;
                    BigInt x = rng.get_z_range(v), y = x, g = 1;
                    while (g == 1) {
                        x = (x * x + c) % v;
                        y = (y * y + c) % v;
                        y = (y * y + c) % v;
                        g = gcd(abs(x - y), v);
                    }
                    d = g;
                }
                stack.push_back(d);
                stack.push_back(v / d);
            }
            std::sort(primes.begin(), primes.end());
            for (const BigInt& p : primes) {
                if (!out.empty() && out.back().first == p) ++out.back().second;
                else out.push_back({p, 1});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    auto fac = factorize_u64(n);
    std::vector<std::uint64_t> out = {1};
    for (auto [p, e] : fac) {
        std::size_t base = out.size();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
    BigInt a = abs(n);
    if (n != 0 && a.fits_ulong_p()) {
        std::vector<BigInt> out;
        for (std::uint64_t d : divisors_u64(a.get_ui())) out.push_back(BigInt((unsigned long)d));
        return out;
    }
    auto fac = factorize(n);
    std::vector<BigInt> out = {1};
    for (auto& [p, e] : fac) {
        std::size_t base = out.size();
        BigInt pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace msect
