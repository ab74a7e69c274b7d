#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

std::int64_t prime_power::norm() const {
    std::int64_t n = 1;
    for (int i = 0; i < f; ++i) n *= p;
    return n;
}

static std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    __int128 result = 1;
    __int128 b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

int legendre_by_power(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    std::int64_t r = mod_pow(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

split_kind quadratic_split(std::int64_t d, std::int64_t p) {
    // Count roots of the minimal polynomial of the ring generator mod p.
    bool d_is_1_mod_4 = ((d % 4) + 4) % 4 == 1;
    if (p == 2) {
        if (!d_is_1_mod_4) return split_kind::ramified;  // disc = 4d even
        // x^2 + x + (1-d)/4 mod 2: splits iff (1-d)/4 even, i.e. d = 1 mod 8
        std::int64_t c = (1 - d) / 4;
        return (c % 2 == 0) ? split_kind::split : split_kind::inert;
    }
    if (d % p == 0) return split_kind::ramified;
    int sym = legendre_by_power(d, p);
    return sym == 1 ? split_kind::split : split_kind::inert;
}

std::vector<prime_power> prime_ideals(std::int64_t d, std::int64_t x) {
    std::vector<prime_power> out;
    for (std::int64_t p = 2; p <= x; ++p) {
        bool prime = p >= 2;
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (d == 0) {
            out.push_back({p, 1, 0, 1});
            continue;
        }
        switch (quadratic_split(d, p)) {
            case split_kind::split:
                out.push_back({p, 1, 0, 1});
                out.push_back({p, 1, 1, 1});
                break;
            case split_kind::inert:
                if (p * p <= x) out.push_back({p, 2, 0, 1});
                break;
            case split_kind::ramified:
                out.push_back({p, 1, 0, 1});
                break;
        }
    }
    return out;
}

static void extend(const std::vector<prime_power>& primes, std::size_t from, ideal current,
                   std::int64_t x, std::vector<ideal>& out) {
    out.push_back(current);
    for (std::size_t i = from; i < primes.size(); ++i) {
        std::int64_t norm = primes[i].norm();
        ideal next = current;
        prime_power entry = primes[i];
        entry.exponent = 0;
        std::int64_t total = current.norm;
        while (total <= x / norm) {
            total *= norm;
            ++entry.exponent;
            ideal with = current;
            with.norm = total;
            with.factors.push_back(entry);
            extend(primes, i + 1, with, x, out);
        }
    }
}

std::vector<ideal> enumerate(std::int64_t d, std::int64_t x) {
    auto primes = prime_ideals(d, x);
    std::vector<ideal> out;
    extend(primes, 0, ideal{}, x, out);  // each ideal formed exactly once
    std::sort(out.begin(), out.end(), [](const ideal& a, const ideal& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        auto key = [](const ideal& v) {
            std::vector<std::int64_t> k;
            for (const auto& f : v.factors) {
                k.push_back(f.p);
                k.push_back(f.f);
                k.push_back(f.index);
                k.push_back(f.exponent);
            }
            return k;
        };
        return key(a) < key(b);
    });
    return out;
}

int mobius(const ideal& id) {
    for (const auto& f : id.factors)
        if (f.exponent > 1) return 0;
    return id.factors.size() % 2 == 0 ? 1 : -1;
}

int omega(const ideal& id) { return static_cast<int>(id.factors.size()); }

static std::vector<std::int64_t> sorted_norms(const ideal& id) {
    std::vector<std::int64_t> norms;
    for (const auto& f : id.factors) norms.push_back(f.norm());
    std::sort(norms.begin(), norms.end());
    norms.erase(std::unique(norms.begin(), norms.end()), norms.end());
    return norms;
}

std::int64_t level(const ideal& id, int k) {
    auto norms = sorted_norms(id);
    if (static_cast<int>(norms.size()) < k) return 0;
    return norms[norms.size() - static_cast<std::size_t>(k)];
}

int count_at_level(const ideal& id, int k) {
    std::int64_t lv = level(id, k);
    if (lv == 0) return 0;
    int count = 0;
    for (const auto& f : id.factors)
        if (f.norm() == lv) ++count;
    return count;
}

bool salient(const ideal& id) {
    if (id.factors.empty()) return false;
    std::int64_t smallest = id.factors[0].norm();
    for (const auto& f : id.factors) smallest = std::min(smallest, f.norm());
    int at_min = 0;
    for (const auto& f : id.factors)
        if (f.norm() == smallest) ++at_min;
    return at_min == 1;
}

std::int64_t psi(std::int64_t d, std::int64_t x, std::int64_t y) {
    std::int64_t count = 0;
    for (const auto& id : enumerate(d, x)) {
        bool smooth = true;
        for (const auto& f : id.factors)
            if (f.norm() > y) smooth = false;
        if (smooth) ++count;
    }
    return count;
}

std::int64_t psi_second(std::int64_t d, std::int64_t x, std::int64_t y) {
    std::int64_t count = 0;
    for (const auto& id : enumerate(d, x)) {
        std::int64_t second = level(id, 2);
        if (second == 0 || second <= y) ++count;
    }
    return count;
}

std::int64_t top_square(std::int64_t d, std::int64_t x) {
    std::int64_t count = 0;
    for (const auto& id : enumerate(d, x)) {
        if (id.factors.empty()) continue;
        std::int64_t top = level(id, 1);
        if (top <= x / top && id.norm % (top * top) == 0) ++count;
    }
    return count;
}

std::int64_t second_excess(std::int64_t d, std::int64_t x) {
    std::int64_t total = 0;
    for (const auto& id : enumerate(d, x)) {
        int q2 = count_at_level(id, 2);
        if (q2 >= 2) total += q2 - 1;
    }
    return total;
}

std::vector<int> mobius_table(std::int64_t n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t v = 1; v <= n; ++v) {
        std::int64_t m = v;
        int factors = 0;
        bool squarefree = true;
        for (std::int64_t p = 2; p * p <= m && squarefree; ++p) {
            if (m % p) continue;
            m /= p;
            ++factors;
            if (m % p == 0) squarefree = false;
        }
        if (!squarefree) continue;
        if (m > 1) ++factors;
        mu[static_cast<std::size_t>(v)] = factors % 2 == 0 ? 1 : -1;
    }
    return mu;
}

double log_integral(double x) {
    if (x <= 2.0) return 0.0;
    auto f = [](double t) { return 1.0 / std::log(t); };
    // Romberg on [2, x]
    constexpr int levels = 22;
    std::vector<double> row(levels), prev(levels);
    double a = 2.0, b = x;
    prev[0] = 0.5 * (b - a) * (f(a) + f(b));
    for (int i = 1; i < levels; ++i) {
        std::int64_t n = std::int64_t{1} << i;
        double h = (b - a) / static_cast<double>(n);
        double sum = 0.0;
        for (std::int64_t j = 1; j < n; j += 2) sum += f(a + h * static_cast<double>(j));
        row[0] = 0.5 * prev[0] + h * sum;
        double factor = 4.0;
        for (int k = 1; k <= i; ++k) {
            row[k] = (factor * row[k - 1] - prev[k - 1]) / (factor - 1.0);
            factor *= 4.0;
        }
        if (i > 4 && std::fabs(row[i] - prev[i - 1]) < 1e-12 * std::fabs(row[i]))
            return row[i];
        std::swap(row, prev);
    }
    return prev[levels - 1];
}

std::int64_t gf_p2_power_norm_character(std::int64_t a, std::int64_t p, std::int64_t r) {
    // Elements c0 + c1 t with t^2 = r. Square-and-multiply to the exponent
    // (p^2 - 1) / 2.
    auto mul = [&](std::pair<std::int64_t, std::int64_t> u, std::pair<std::int64_t, std::int64_t> v) {
        __int128 c0 = static_cast<__int128>(u.first) * v.first +
                      static_cast<__int128>(u.second) * v.second % p * r;
        __int128 c1 = static_cast<__int128>(u.first) * v.second +
                      static_cast<__int128>(u.second) * v.first;
        return std::pair<std::int64_t, std::int64_t>{
            static_cast<std::int64_t>(((c0 % p) + p) % p),
            static_cast<std::int64_t>(((c1 % p) + p) % p)};
    };
    std::pair<std::int64_t, std::int64_t> base{((a % p) + p) % p, 0};
    std::pair<std::int64_t, std::int64_t> acc{1, 0};
    std::int64_t exp = (p * p - 1) / 2;
    while (exp > 0) {
        if (exp & 1) acc = mul(acc, base);
        base = mul(base, base);
        exp >>= 1;
    }
    if (acc.second != 0) throw std::logic_error("norm character landed outside F_p");
    return acc.first;
}

}  // namespace oracle
