#pragma once

#include <cstddef>
#include <cstdint>

namespace linkgraph {

/// floor((2/3)^k x), exact for any sign of x.
auto floor_two_thirds_power(std::int64_t x, std::size_t k) -> std::int64_t;

/// Whether a * 1.5^m > b, decided in exact integer arithmetic.
auto scaled_power_exceeds(std::uint64_t a, std::int64_t m, std::uint64_t b) -> bool;

/// Even l: chi <= 3 or l > 2 log_{1.5}(chi - 3).
/// Odd l: chi' <= 3 or l > 2 log_{1.5}(chi' - 3) + 1.
auto three_colourable_regime(std::size_t ell, std::size_t chi, std::size_t chi_prime) -> bool;

/// max_degree >= 3 and l > 2 log_{1.5}(max_degree - 2) + 3.
auto degree_three_colourable_regime(std::size_t ell, std::size_t max_degree) -> bool;

/// max_degree >= 3 and l > 2 log_{1.5}(max_degree - 2) - (4 log_{1.5} 2 - 3).
auto hadwiger_degree_regime(std::size_t ell, std::size_t max_degree) -> bool;

/// degeneracy >= 3 and l > 2 log_{1.5}((max_degree - 2) / (degeneracy - 2)) + 3.
auto hadwiger_degeneracy_regime(std::size_t ell, std::size_t max_degree, std::size_t degeneracy) -> bool;

}
