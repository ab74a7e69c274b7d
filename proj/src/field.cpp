#include "ideals/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace ideals {

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    int k = 1;
    if (v & 1) {
        int am8 = static_cast<int>(((a % 8) + 8) % 8);
        if (am8 == 3 || am8 == 5) k = -1;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            int nm8 = static_cast<int>(n % 8);
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        if ((a % 4) == 3 && (n % 4) == 3) k = -k;
        std::int64_t t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? k : 0;
}

std::vector<std::int64_t> sieve_primes(std::int64_t x) {
    std::vector<std::int64_t> primes;
    if (x < 2) return primes;
    if (x > norm_cap) throw capacity_error("sieve bound exceeds the 2^40 cap");
    std::vector<bool> composite(static_cast<std::size_t>(x) + 1, false);
    for (std::int64_t i = 2; i * i <= x; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i * i; j <= x; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    for (std::int64_t i = 2; i <= x; ++i)
        if (!composite[static_cast<std::size_t>(i)]) primes.push_back(i);
    return primes;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

bool is_squarefree(std::int64_t n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (std::int64_t i = 2; i * i <= n; ++i) {
        if (n % (i * i) == 0) return false;
    }
    return true;
}

field_spec field_spec::rationals() {
    field_spec f;
    f.kind = field_kind::rationals;
    f.d = 0;
    f.discriminant = 1;
    f.degree = 1;
    return f;
}

field_spec field_spec::quadratic(std::int64_t d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw usage_error("quadratic field parameter must be squarefree and != 0, 1");
    field_spec f;
    f.kind = field_kind::quadratic;
    f.d = d;
    f.discriminant = ((d % 4 + 4) % 4 == 1) ? d : 4 * d;
    f.degree = 2;
    return f;
}

static std::int64_t parse_int(std::string_view text, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw usage_error(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    return value;
}

field_spec field_spec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    constexpr std::string_view prefix = "quad:";
    if (text.substr(0, prefix.size()) == prefix)
        return quadratic(parse_int(text.substr(prefix.size()), "field spec"));
    throw usage_error("unknown field spec '" + std::string(text) + "' (expected q or quad:<d>)");
}

std::string field_spec::to_string() const {
    if (kind == field_kind::rationals) return "q";
    return "quad:" + std::to_string(d);
}

std::vector<split_part> split_prime(const field_spec& field, std::int64_t p) {
    if (!is_prime(p)) throw usage_error("split_prime requires a rational prime");
    std::vector<split_part> parts;
    if (field.kind == field_kind::rationals) {
        parts.push_back({prime_ideal{p, 1, 0, false, p}, 1});
        return parts;
    }
    int symbol = kronecker(field.discriminant, p);
    if (symbol == 1) {
        parts.push_back({prime_ideal{p, 1, 0, false, p}, 1});
        parts.push_back({prime_ideal{p, 1, 1, false, p}, 1});
    } else if (symbol == -1) {
        parts.push_back({prime_ideal{p, 2, 0, false, checked_mul(p, p)}, 1});
    } else {
        parts.push_back({prime_ideal{p, 1, 0, true, p}, 2});
    }
    return parts;
}

std::vector<prime_ideal> primes_up_to_norm(const field_spec& field, std::int64_t x) {
    if (x < 2) throw usage_error("primes_up_to_norm requires x >= 2");
    if (x > norm_cap) throw capacity_error("norm bound exceeds the 2^40 cap");
    std::vector<prime_ideal> out;
    for (std::int64_t p : sieve_primes(x)) {
        for (const auto& part : split_prime(field, p)) {
            if (part.ideal.norm <= x) out.push_back(part.ideal);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

extension_spec extension_spec::parse(std::string_view text) {
    extension_spec e;
    if (text == "trivial") {
        e.kind = ext_kind::trivial;
        e.group_order = 1;
        e.class_ids = {"1"};
        return e;
    }
    constexpr std::string_view cyclo = "cyclo:";
    constexpr std::string_view relquad = "relquad:";
    if (text.substr(0, cyclo.size()) == cyclo) {
        std::int64_t n = parse_int(text.substr(cyclo.size()), "extension spec");
        if (n < 3) throw usage_error("cyclo:<n> requires n >= 3");
        e.kind = ext_kind::cyclotomic_over_q;
        e.param = n;
        e.group_order = 0;
        for (std::int64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) == 1) {
                e.class_ids.push_back(std::to_string(a));
                ++e.group_order;
            }
        }
        return e;
    }
    if (text.substr(0, relquad.size()) == relquad) {
        std::int64_t m = parse_int(text.substr(relquad.size()), "extension spec");
        if (m == 0 || m == 1 || !is_squarefree(m))
            throw usage_error("relquad:<m> requires squarefree m != 0, 1");
        e.kind = ext_kind::quadratic_over_quadratic;
        e.param = m;
        e.group_order = 2;
        e.class_ids = {"1", "-1"};
        return e;
    }
    throw usage_error("unknown extension spec '" + std::string(text) +
                      "' (expected trivial, cyclo:<n> or relquad:<m>)");
}

std::string extension_spec::to_string() const {
    switch (kind) {
        case ext_kind::trivial: return "trivial";
        case ext_kind::cyclotomic_over_q: return "cyclo:" + std::to_string(param);
        case ext_kind::quadratic_over_quadratic: return "relquad:" + std::to_string(param);
    }
    return "trivial";
}

extension_context extension_context::make(const field_spec& field, const extension_spec& ext) {
    extension_context ctx;
    ctx.field = field;
    ctx.ext = ext;
    switch (ext.kind) {
        case ext_kind::trivial:
            break;
        case ext_kind::cyclotomic_over_q: {
            if (field.kind != field_kind::rationals)
                throw usage_error("cyclo:<n> extensions require the rational base field");
            std::int64_t n = ext.param;
            for (std::int64_t p = 2; p <= n; ++p)
                if (is_prime(p) && n % p == 0) ctx.excluded_primes.push_back(p);
            break;
        }
        case ext_kind::quadratic_over_quadratic: {
            if (field.kind != field_kind::quadratic)
                throw usage_error("relquad:<m> extensions require a quadratic base field");
            if (ext.param == field.d)
                throw usage_error("relquad:<m> requires m not to be a square in the base field");
            // Conservative: everything over 2*m*D is excluded.
            std::int64_t bound = 2 * std::abs(ext.param) * std::abs(field.discriminant);
            for (std::int64_t p = 2; p <= bound; ++p)
                if (is_prime(p) && bound % p == 0) ctx.excluded_primes.push_back(p);
            break;
        }
    }
    return ctx;
}

extension_context extension_context::parse(std::string_view field_text, std::string_view ext_text) {
    return make(field_spec::parse(field_text), extension_spec::parse(ext_text));
}

bool extension_context::excludes(std::int64_t p) const {
    return std::binary_search(excluded_primes.begin(), excluded_primes.end(), p);
}

std::optional<std::int64_t> artin_code(const extension_context& ctx, const prime_ideal& fp) {
    switch (ctx.ext.kind) {
        case ext_kind::trivial:
            return 1;
        case ext_kind::cyclotomic_over_q: {
            if (ctx.excludes(fp.p)) return std::nullopt;
            std::int64_t n = ctx.ext.param;
            std::int64_t code = fp.p % n;
            for (int i = 1; i < fp.f; ++i) code = code * fp.p % n;
            return code;
        }
        case ext_kind::quadratic_over_quadratic: {
            if (ctx.excludes(fp.p)) return std::nullopt;
            // Inert primes have residue field of p^2 elements, where every
            // element of F_p is a square; degree-1 primes see F_p itself.
            if (fp.f == 2) return 1;
            return kronecker(ctx.ext.param, fp.p);
        }
    }
    return std::nullopt;
}

std::string artin_label(const extension_context& ctx, std::int64_t code) {
    if (ctx.ext.kind == ext_kind::quadratic_over_quadratic) return code == 1 ? "1" : "-1";
    return std::to_string(code);
}

std::int64_t artin_code_of_label(const extension_context& ctx, const std::string& label) {
    const auto& ids = ctx.ext.class_ids;
    if (std::find(ids.begin(), ids.end(), label) == ids.end())
        throw usage_error("unknown conjugacy class label '" + label + "' for " +
                          ctx.ext.to_string());
    if (ctx.ext.kind == ext_kind::quadratic_over_quadratic) return label == "1" ? 1 : -1;
    return parse_int(label, "class label");
}

std::optional<std::string> artin_class(const extension_context& ctx, const prime_ideal& fp) {
    auto code = artin_code(ctx, fp);
    if (!code) return std::nullopt;
    return artin_label(ctx, *code);
}

fraction class_density(const extension_context& ctx, const std::string& label) {
    artin_code_of_label(ctx, label);  // validates
    return fraction{1, ctx.ext.group_order};
}

residue_estimate residue_constant(const field_spec& field) {
    if (field.kind == field_kind::rationals) return {1.0, 0.0};

    // c_K = L(1, chi_D). The character is periodic with period |D| and sums
    // to zero over a full period, so partial sums are bounded by their
    // maximum over one period and Abel summation bounds the tail.
    std::int64_t period = std::abs(field.discriminant);
    std::vector<int> chi(static_cast<std::size_t>(period));
    std::int64_t prefix = 0, prefix_max = 0;
    for (std::int64_t r = 0; r < period; ++r) {
        chi[static_cast<std::size_t>(r)] = kronecker(field.discriminant, r);
        prefix += chi[static_cast<std::size_t>(r)];
        prefix_max = std::max(prefix_max, std::abs(prefix));
    }

    const double target = 5e-7;
    std::int64_t terms = static_cast<std::int64_t>(2.0 * static_cast<double>(prefix_max) / target) + 1;
    long double sum = 0.0L;
    for (std::int64_t n = 1; n <= terms; ++n)
        sum += static_cast<long double>(chi[static_cast<std::size_t>(n % period)]) / n;

    double tail = 2.0 * static_cast<double>(prefix_max) / static_cast<double>(terms + 1);
    return {static_cast<double>(sum), tail + 1e-12};
}

}  // namespace ideals
