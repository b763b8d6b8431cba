#include "screwline/arith.hpp"

#include <cmath>

#include "screwline/util.hpp"

namespace screw::arith {

MangoldtTable sieve_mangoldt(std::uint64_t n) {
    if (n < 1) throw DomainError("sieve_mangoldt: bound must be >= 1");
    if (n > 100000000ull)
        throw CapacityError("sieve_mangoldt: bound beyond the 1e8 memory guard");

    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }

    MangoldtTable table;
    table.bound = n;
    table.values.assign(n + 1, 0.0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        std::uint64_t p = spf[i];
        std::uint64_t m = i;
        while (m % p == 0) m /= p;
        if (m == 1) table.values[i] = std::log(static_cast<double>(p));
    }
    return table;
}

namespace detail {

std::uint64_t cutoff_index(double t, const MangoldtTable& table) {
    if (t < 0.0) throw DomainError("prime sum: t must be non-negative");
    double et = std::exp(t);
    if (et > static_cast<double>(table.bound) + 1.0 - 1e-9)
        throw TableTooSmallError("prime sum: e^t exceeds the sieve bound");
    auto m = static_cast<std::uint64_t>(std::floor(et + 1e-12));
    return m > table.bound ? table.bound : m;
}

} // namespace detail

double prime_sum_g(double t, const MangoldtTable& table) {
    std::uint64_t m = detail::cutoff_index(t, table);
    util::NeumaierSum acc;
    for (std::uint64_t n = 2; n <= m; ++n) {
        double lam = table.values[n];
        if (lam == 0.0) continue;
        double ln = std::log(static_cast<double>(n));
        acc.add(lam / std::sqrt(static_cast<double>(n)) * (t - ln));
    }
    return acc.get();
}

double prime_sum_plain(double t, const MangoldtTable& table) {
    std::uint64_t m = detail::cutoff_index(t, table);
    util::NeumaierSum acc;
    for (std::uint64_t n = 2; n <= m; ++n) {
        double lam = table.values[n];
        if (lam == 0.0) continue;
        acc.add(lam / std::sqrt(static_cast<double>(n)));
    }
    return acc.get();
}

Complex prime_sum_osc(double t, Complex z, const MangoldtTable& table) {
    std::uint64_t m = detail::cutoff_index(t, table);
    const Complex iz = Complex(0.0, 1.0) * z;
    const bool series = std::abs(z) < 1e-6;
    util::NeumaierSumC acc;
    for (std::uint64_t n = 2; n <= m; ++n) {
        double lam = table.values[n];
        if (lam == 0.0) continue;
        double w = t - std::log(static_cast<double>(n));
        Complex quotient;
        if (series) {
            // (e^{izw}-1)/(iz) = w (1 + izw/2 + (izw)^2/6 + (izw)^3/24 + ...)
            Complex u = iz * w;
            quotient = w * (1.0 + u * (0.5 + u * (1.0 / 6.0 + u * (1.0 / 24.0 + u / 120.0))));
        } else {
            quotient = (std::exp(iz * w) - 1.0) / iz;
        }
        acc.add(lam / std::sqrt(static_cast<double>(n)) * quotient);
    }
    return acc.get();
}

} // namespace screw::arith
