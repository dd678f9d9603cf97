#ifndef HYPERHALL_PRIMES_HPP
#define HYPERHALL_PRIMES_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace hyperhall
{

inline bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Ascending distinct prime divisors.
inline std::vector<int> prime_divisors(std::int64_t n)
{
    std::vector<int> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        out.push_back(static_cast<int>(n));
    return out;
}

/// A finite set of primes, kept sorted.
class PrimeSet
{
public:
    PrimeSet() = default;
    PrimeSet(std::initializer_list<int> primes) : PrimeSet(std::vector<int>(primes)) {}
    explicit PrimeSet(std::vector<int> primes) : primes_(std::move(primes))
    {
        for (int p : primes_)
            if (!is_prime(p))
                throw Error(ErrorKind::InvalidPrimeSet, std::to_string(p) + " is not a prime", {p});
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    }

    bool contains(int p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }
    const std::vector<int> &primes() const noexcept { return primes_; }
    bool empty() const noexcept { return primes_.empty(); }

    friend bool operator==(const PrimeSet &, const PrimeSet &) = default;

private:
    std::vector<int> primes_;
};

/// n >= 1 whose prime divisors all lie in pi.
inline bool is_pi_number(std::int64_t n, const PrimeSet &pi)
{
    if (n < 1)
        return false;
    for (int p : prime_divisors(n))
        if (!pi.contains(p))
            return false;
    return true;
}

/// n >= 1 with no prime divisor in pi.
inline bool is_pi_prime_number(std::int64_t n, const PrimeSet &pi)
{
    if (n < 1)
        return false;
    for (int p : prime_divisors(n))
        if (pi.contains(p))
            return false;
    return true;
}

/// Largest pi-number dividing n.
inline std::int64_t pi_part(std::int64_t n, const PrimeSet &pi)
{
    std::int64_t out = 1;
    for (int p : pi.primes())
        while (n % p == 0) {
            n /= p;
            out *= p;
        }
    return out;
}

/// Parses "2,3,7". Whitespace around entries is allowed; the empty string is
/// the empty set. Throws InvalidPrimeSet.
inline PrimeSet parse_prime_set(std::string_view text)
{
    std::vector<int> primes;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty())
        return PrimeSet{};
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw Error(ErrorKind::InvalidPrimeSet, "not an integer: '" + std::string(item) + "'");
        primes.push_back(value);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return PrimeSet(std::move(primes));
}

inline std::string to_string(const PrimeSet &pi)
{
    std::string out = "{";
    for (std::size_t i = 0; i < pi.primes().size(); ++i)
        out += (i ? "," : "") + std::to_string(pi.primes()[i]);
    return out + "}";
}

} // namespace hyperhall

#endif // HYPERHALL_PRIMES_HPP
