#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "screwline/errors.hpp"

namespace screw::arith {

using Complex = std::complex<double>;

// von Mangoldt values Lambda(1..bound), sieved once and shared (immutable
// after construction) by every prime sum.
struct MangoldtTable {
    std::uint64_t bound = 0;
    std::vector<double> values; // values[n] = Lambda(n), index 0 unused

    double lambda(std::uint64_t n) const { return values[n]; }
};

// Smallest-prime-factor sieve, then Lambda(n) = log p iff n is a power of p.
// Guarded at 1e8.
MangoldtTable sieve_mangoldt(std::uint64_t n);

// sum_{n <= e^t} Lambda(n)/sqrt(n) * (t - log n)
double prime_sum_g(double t, const MangoldtTable& table);

// sum_{n <= e^t} Lambda(n)/sqrt(n)
double prime_sum_plain(double t, const MangoldtTable& table);

// sum_{n <= e^t} Lambda(n)/sqrt(n) * (e^{iz(t - log n)} - 1)/(iz),
// with the series form of the quotient below |z| = 1e-6.
Complex prime_sum_osc(double t, Complex z, const MangoldtTable& table);

namespace detail {

// n <= e^t boundary as n <= floor(e^t + 1e-12), clamped to the table;
// throws TableTooSmallError when e^t exceeds the sieve bound.
std::uint64_t cutoff_index(double t, const MangoldtTable& table);

} // namespace detail

} // namespace screw::arith
