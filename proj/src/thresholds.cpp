#include <linkgraph/thresholds.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace linkgraph {

using boost::multiprecision::cpp_int;
using boost::multiprecision::pow;

auto floor_two_thirds_power(std::int64_t x, std::size_t k) -> std::int64_t
{
    cpp_int numerator = cpp_int(x) * pow(cpp_int(2), static_cast<unsigned>(k));
    cpp_int denominator = pow(cpp_int(3), static_cast<unsigned>(k));
    cpp_int quotient = numerator / denominator;
    if (numerator % denominator != 0 && numerator < 0)
        --quotient;
    return quotient.convert_to<std::int64_t>();
}

auto scaled_power_exceeds(std::uint64_t a, std::int64_t m, std::uint64_t b) -> bool
{
    auto up = static_cast<unsigned>(m >= 0 ? m : -m);
    if (m >= 0)
        return cpp_int(a) * pow(cpp_int(3), up) > cpp_int(b) * pow(cpp_int(2), up);
    return cpp_int(a) * pow(cpp_int(2), up) > cpp_int(b) * pow(cpp_int(3), up);
}

namespace
{
    auto squared_excess(std::size_t value, std::size_t base) -> std::uint64_t
    {
        auto d = static_cast<std::uint64_t>(value - base);
        return d * d;
    }
}

auto three_colourable_regime(std::size_t ell, std::size_t chi, std::size_t chi_prime) -> bool
{
    auto m = static_cast<std::int64_t>(ell);
    if (ell % 2 == 0)
        return chi <= 3 || scaled_power_exceeds(1, m, squared_excess(chi, 3));
    return chi_prime <= 3 || scaled_power_exceeds(1, m - 1, squared_excess(chi_prime, 3));
}

auto degree_three_colourable_regime(std::size_t ell, std::size_t max_degree) -> bool
{
    return max_degree >= 3 &&
        scaled_power_exceeds(1, static_cast<std::int64_t>(ell) - 3, squared_excess(max_degree, 2));
}

auto hadwiger_degree_regime(std::size_t ell, std::size_t max_degree) -> bool
{
    return max_degree >= 3 &&
        scaled_power_exceeds(16, static_cast<std::int64_t>(ell) - 3, squared_excess(max_degree, 2));
}

auto hadwiger_degeneracy_regime(std::size_t ell, std::size_t max_degree, std::size_t degeneracy) -> bool
{
    return degeneracy >= 3 && max_degree >= degeneracy &&
        scaled_power_exceeds(squared_excess(degeneracy, 2), static_cast<std::int64_t>(ell) - 3,
                squared_excess(max_degree, 2));
}

}
