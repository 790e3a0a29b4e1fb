#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "feuler/errors.hpp"

namespace feuler {

using BigInt = mpz_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt bigint_pow(long base, unsigned long e) {
    return bigint_pow(BigInt(base), e);
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Binomial coefficients through a cached Pascal triangle.
class BinomialTable {
public:
    static const BigInt& get(unsigned long n, unsigned long k) {
        static BinomialTable table;
        return table.lookup(n, k);
    }

private:
    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_;

    BinomialTable() { rows_.push_back({BigInt(1)}); }

    const BigInt& lookup(unsigned long n, unsigned long k) {
        static const BigInt zero(0);
        if (k > n) return zero;
        std::lock_guard<std::mutex> lock(mu_);
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            std::vector<BigInt> row(prev.size() + 1, BigInt(1));
            for (std::size_t j = 1; j + 1 < row.size(); ++j)
                row[j] = prev[j - 1] + prev[j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }
};

inline BigInt binomial(unsigned long n, unsigned long k) {
    return BinomialTable::get(n, k);
}

// l! / (l_1! ... l_r!) for a composition of l.
inline BigInt multinomial(const std::vector<int>& parts) {
    unsigned long total = 0;
    for (int part : parts) total += static_cast<unsigned long>(part);
    BigInt r = factorial(total);
    for (int part : parts) r /= factorial(static_cast<unsigned long>(part));
    return r;
}

// Largest v with p^v | n; by convention valuation of 0 is `cap`.
inline int int_valuation(const BigInt& n, long p, int cap = 1 << 20) {
    if (n == 0) return cap;
    BigInt rest;
    const BigInt pz(p);
    int v = static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
    return v < cap ? v : cap;
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw non_invertible("no inverse modulo " + m.get_str());
    return r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

inline long euler_phi(long m) {
    long result = m;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            while (m % q == 0) m /= q;
            result -= result / q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> fs;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            fs.emplace_back(q, e);
        }
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

} // namespace feuler
